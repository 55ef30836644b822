#include "prefdom/linear_order.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "prefdom/errors.hpp"

namespace prefdom {

LinearOrder::LinearOrder(std::vector<int> ranking) : ranking_(std::move(ranking)) {
    if (ranking_.empty()) throw precondition_error("order must rank at least one alternative");
    if (ranking_.size() > static_cast<std::size_t>(kMaxAlternatives))
        throw capability_error("orders over more than " + std::to_string(kMaxAlternatives) +
                               " alternatives are not supported");
    for (std::size_t i = 0; i < ranking_.size(); ++i) {
        if (ranking_[i] < 1)
            throw precondition_error("alternative labels must be positive, got " + std::to_string(ranking_[i]));
        for (std::size_t j = i + 1; j < ranking_.size(); ++j)
            if (ranking_[i] == ranking_[j])
                throw precondition_error("duplicate label " + std::to_string(ranking_[i]) + " in order");
    }
}

int LinearOrder::position_of(int label) const {
    for (std::size_t i = 0; i < ranking_.size(); ++i)
        if (ranking_[i] == label) return static_cast<int>(i);
    return -1;
}

bool LinearOrder::prefers(int a, int b) const {
    const int pa = position_of(a), pb = position_of(b);
    if (pa < 0 || pb < 0) throw precondition_error("label not ranked by this order");
    return pa < pb;
}

bool LinearOrder::is_permutation_of(const AlternativeSet& alts) const {
    if (size() != alts.size()) return false;
    for (int x : ranking_)
        if (!alts.contains(x)) return false;
    return true;  // distinctness holds by construction
}

std::string LinearOrder::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < ranking_.size(); ++i) {
        if (i) os << ' ';
        os << ranking_[i];
    }
    return os.str();
}

namespace {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

int parse_label(const std::string& token) {
    if (!all_digits(token) || token.size() > 9)
        throw parse_error("invalid label token '" + token + "'");
    return std::stoi(token);
}

}  // namespace

LinearOrder parse_order(std::string_view text, const AlternativeSet& alts) {
    auto tokens = tokenize(text);
    if (tokens.empty()) throw parse_error("empty order");

    const bool digits_only_labels = alts.label(alts.size() - 1) <= 9;
    if (tokens.size() == 1 && tokens[0].size() > 1 && all_digits(tokens[0]) && digits_only_labels) {
        // digit-string shorthand, one label per character
        std::vector<std::string> split;
        for (char c : tokens[0]) split.emplace_back(1, c);
        tokens = std::move(split);
    }

    std::vector<int> labels;
    labels.reserve(tokens.size());
    std::vector<bool> seen(static_cast<std::size_t>(alts.size()), false);
    for (const auto& tok : tokens) {
        const int label = parse_label(tok);
        const int idx = alts.index_of(label);
        if (idx < 0) throw parse_error("unknown label " + tok);
        if (seen[static_cast<std::size_t>(idx)]) throw parse_error("duplicate label " + tok);
        seen[static_cast<std::size_t>(idx)] = true;
        labels.push_back(label);
    }
    if (static_cast<int>(labels.size()) != alts.size()) {
        for (int i = 0; i < alts.size(); ++i)
            if (!seen[static_cast<std::size_t>(i)])
                throw parse_error("missing label " + std::to_string(alts.label(i)));
    }
    return LinearOrder(std::move(labels));
}

}  // namespace prefdom
