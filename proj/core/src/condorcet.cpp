#include "prefdom/condorcet.hpp"

#include "detail/restriction_kernel.hpp"
#include "prefdom/errors.hpp"

namespace prefdom {

namespace {

std::vector<NeverCondition> free_cells(std::array<int, 3> triple, unsigned mask) {
    std::vector<NeverCondition> out;
    for (int member = 0; member < 3; ++member)
        for (int slot = 0; slot < 3; ++slot)
            if (!(mask & (1u << (member * 3 + slot))))
                out.push_back(NeverCondition{triple, FishburnCondition{member + 1, slot + 1}});
    return out;
}

unsigned occupied_mask(const Domain& d, int ia, int ib, int ic) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        mask |= detail::pattern_cells(d.ranks(i), ia, ib, ic);
        if (mask == detail::kAllCells) break;
    }
    return mask;
}

}  // namespace

std::vector<NeverCondition> satisfied_conditions(const Domain& d, std::array<int, 3> triple) {
    if (!(triple[0] < triple[1] && triple[1] < triple[2]))
        throw precondition_error("triple must be strictly increasing");
    int idx[3];
    for (int i = 0; i < 3; ++i) {
        idx[i] = d.alts().index_of(triple[static_cast<std::size_t>(i)]);
        if (idx[i] < 0)
            throw precondition_error("triple label " + std::to_string(triple[static_cast<std::size_t>(i)]) +
                                     " is not an alternative");
    }
    return free_cells(triple, occupied_mask(d, idx[0], idx[1], idx[2]));
}

CondorcetReport is_condorcet(const Domain& d) {
    const int n = d.num_alternatives();
    CondorcetReport report;
    report.is_cd = true;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const std::array<int, 3> triple{d.alts().label(a), d.alts().label(b), d.alts().label(c)};
                const unsigned mask = occupied_mask(d, a, b, c);
                report.per_triple.emplace_back(triple, free_cells(triple, mask));
                if (mask == detail::kAllCells && report.is_cd) {
                    report.is_cd = false;
                    report.witness = triple;
                }
            }
    return report;
}

bool majority_oracle_check(const Domain& d) {
    const int n = d.num_alternatives();
    if (d.size() > 12 || n > 6)
        throw capability_error("majority oracle is capped at |D| <= 12 and n <= 6");
    if (d.empty() || n < 3) return true;

    const std::size_t m = d.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            for (std::size_t k = j; k < m; ++k) {
                const std::uint8_t* voters[3] = {d.ranks(i), d.ranks(j), d.ranks(k)};
                bool beats[kMaxAlternatives][kMaxAlternatives] = {};
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b) {
                        int pro = 0;
                        for (const auto* v : voters) pro += v[a] < v[b];
                        beats[a][b] = pro >= 2;
                        beats[b][a] = !beats[a][b];
                    }
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        for (int c = b + 1; c < n; ++c) {
                            const bool cycle = (beats[a][b] && beats[b][c] && beats[c][a]) ||
                                               (beats[b][a] && beats[a][c] && beats[c][b]);
                            if (cycle) return false;
                        }
            }
    return true;
}

}  // namespace prefdom
