#include "prefdom/never_law.hpp"

#include <istream>
#include <sstream>

#include "detail/combinatorics.hpp"
#include "prefdom/errors.hpp"

namespace prefdom {

NeverLaw::NeverLaw(int n) : n_(n) {
    if (n < 1) throw precondition_error("a never law needs at least one alternative");
    if (n > kMaxAlternatives)
        throw capability_error("never laws are capped at " + std::to_string(kMaxAlternatives) +
                               " alternatives");
    masks_.assign(static_cast<std::size_t>(detail::binomial(n, 3)), 0);
}

std::size_t NeverLaw::triple_rank(std::array<int, 3> triple) const {
    const auto [a, b, c] = triple;
    if (!(1 <= a && a < b && b < c && c <= n_))
        throw precondition_error("triple must satisfy 1 <= a < b < c <= n");
    return detail::triple_rank(n_, a - 1, b - 1, c - 1);
}

void NeverLaw::assign(std::array<int, 3> triple, FishburnCondition cond) {
    if (cond.member < 1 || cond.member > 3 || cond.slot < 1 || cond.slot > 3)
        throw precondition_error("never condition indices must lie in 1..3");
    masks_[triple_rank(triple)] |= static_cast<std::uint16_t>(1u << ((cond.member - 1) * 3 + (cond.slot - 1)));
}

std::vector<FishburnCondition> NeverLaw::conditions(std::array<int, 3> triple) const {
    const std::uint16_t mask = masks_[triple_rank(triple)];
    std::vector<FishburnCondition> out;
    for (int member = 1; member <= 3; ++member)
        for (int slot = 1; slot <= 3; ++slot)
            if (mask & (1u << ((member - 1) * 3 + (slot - 1))))
                out.push_back(FishburnCondition{member, slot});
    return out;
}

NeverLaw parse_never_law(std::istream& in, int n) {
    NeverLaw law(n);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        int a = 0, b = 0, c = 0;
        char colon = 0;
        if (!(ls >> a)) continue;  // blank line
        if (!(ls >> b >> c >> colon) || colon != ':')
            throw parse_error("law line " + std::to_string(line_no) +
                              ": expected 'i j k : COND[,COND...]'");
        std::string rest;
        std::getline(ls, rest);
        std::istringstream conds(rest);
        std::string tok;
        bool any = false;
        while (std::getline(conds, tok, ',')) {
            const auto first = tok.find_first_not_of(" \t");
            if (first == std::string::npos) continue;
            const auto last = tok.find_last_not_of(" \t");
            try {
                law.assign({a, b, c}, parse_fishburn_condition(tok.substr(first, last - first + 1)));
            } catch (const error& e) {
                throw parse_error("law line " + std::to_string(line_no) + ": " + e.what());
            }
            any = true;
        }
        if (!any)
            throw parse_error("law line " + std::to_string(line_no) + ": no conditions given");
    }
    return law;
}

}  // namespace prefdom
