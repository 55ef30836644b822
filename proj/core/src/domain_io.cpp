#include "prefdom/domain_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "prefdom/errors.hpp"

namespace prefdom {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// First data row of a headerless file: defines the alternative set. A single
// multi-character digit token is read as one label per digit.
std::vector<int> first_row_labels(const std::string& line, int line_no) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    if (tokens.size() == 1 && tokens[0].size() > 1 &&
        std::all_of(tokens[0].begin(), tokens[0].end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        std::vector<std::string> split;
        for (char c : tokens[0]) split.emplace_back(1, c);
        tokens = std::move(split);
    }
    std::vector<int> labels;
    for (const auto& tok : tokens) {
        try {
            labels.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw parse_error("line " + std::to_string(line_no) + ": invalid label token '" + tok + "'");
        }
    }
    return labels;
}

}  // namespace

Domain read_domain(std::istream& in) {
    std::optional<AlternativeSet> alts;
    std::vector<std::pair<int, std::string>> rows;  // (line number, text)
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!alts && rows.empty() && t.rfind("n=", 0) == 0) {
            const std::string num = trim(t.substr(2));
            try {
                alts = AlternativeSet::range(std::stoi(num));
            } catch (const error&) {
                throw;
            } catch (const std::exception&) {
                throw parse_error("line " + std::to_string(line_no) + ": invalid header '" + t + "'");
            }
            continue;
        }
        rows.emplace_back(line_no, t);
    }
    if (!alts) {
        if (rows.empty()) throw parse_error("domain file contains no orders and no header");
        std::vector<int> labels = first_row_labels(rows.front().second, rows.front().first);
        std::sort(labels.begin(), labels.end());
        try {
            alts = AlternativeSet(std::move(labels));
        } catch (const error& e) {
            throw parse_error("line " + std::to_string(rows.front().first) + ": " + e.what());
        }
    }
    std::vector<LinearOrder> orders;
    orders.reserve(rows.size());
    for (const auto& [no, text] : rows) {
        try {
            orders.push_back(parse_order(text, *alts));
        } catch (const error& e) {
            throw parse_error("line " + std::to_string(no) + ": " + e.what());
        }
    }
    return Domain(std::move(*alts), std::move(orders));
}

Domain read_domain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open domain file '" + path + "'");
    return read_domain(in);
}

void write_domain(std::ostream& out, const Domain& d) {
    if (d.alts().is_range()) out << "n=" << d.num_alternatives() << "\n";
    else out << "# alternatives: " << d.alts().to_string() << "\n";
    for (const auto& o : d.orders()) out << o.to_string() << "\n";
}

std::string domain_to_text(const Domain& d) {
    std::ostringstream os;
    write_domain(os, d);
    return os.str();
}

}  // namespace prefdom
