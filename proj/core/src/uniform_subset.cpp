#include "prefdom/uniform_subset.hpp"

#include <bit>
#include <vector>

#include "detail/combinatorics.hpp"
#include "detail/restriction_kernel.hpp"
#include "prefdom/errors.hpp"

namespace prefdom {

namespace {

// A lex-smaller label sequence owns the smallest label in the symmetric
// difference.
bool lex_less(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a ^ b;
    return diff != 0 && (a & (diff & ~(diff - 1)));
}

}  // namespace

std::optional<UniformNeverSubset> find_uniform_never_subset(const Domain& d, int min_size) {
    if (!d.is_unitary()) throw precondition_error("find_uniform_never_subset requires a unitary domain");
    const int n = d.num_alternatives();
    const auto triples = detail::all_index_triples(n);

    // Occupied-cell masks once per triple; each condition then reads one bit.
    std::vector<unsigned> occupied(triples.size(), 0);
    for (std::size_t t = 0; t < triples.size(); ++t)
        for (std::size_t i = 0; i < d.size(); ++i) {
            occupied[t] |= detail::pattern_cells(d.ranks(i), triples[t][0], triples[t][1], triples[t][2]);
            if (occupied[t] == detail::kAllCells) break;
        }

    int best_size = 0;
    std::uint32_t best_mask = 0;
    FishburnCondition best_cond{};

    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<char> good(static_cast<std::size_t>(full) + 1, 0);
    for (int member = 1; member <= 3; ++member)
        for (int slot = 1; slot <= 3; ++slot) {
            const unsigned bit = 1u << ((member - 1) * 3 + (slot - 1));
            std::vector<char> good_triple(triples.size());
            for (std::size_t t = 0; t < triples.size(); ++t) good_triple[t] = !(occupied[t] & bit);

            // good[S]: every triple within S satisfies the condition.
            // Subsets of size <= 2 are vacuously good; S extends S minus its
            // top element by the triples that element completes.
            for (std::uint32_t s = 0; s <= full; ++s) {
                const int sz = std::popcount(s);
                if (sz <= 2) {
                    good[s] = 1;
                    continue;
                }
                const int v = 31 - std::countl_zero(s);
                const std::uint32_t rest = s & ~(1u << v);
                char ok = good[rest];
                if (ok) {
                    for (int a = 0; a < v && ok; ++a) {
                        if (!(rest & (1u << a))) continue;
                        for (int b = a + 1; b < v; ++b) {
                            if (!(rest & (1u << b))) continue;
                            if (!good_triple[detail::triple_rank(n, a, b, v)]) {
                                ok = 0;
                                break;
                            }
                        }
                    }
                }
                good[s] = ok;
                if (ok && (sz > best_size || (sz == best_size && lex_less(s, best_mask)))) {
                    best_size = sz;
                    best_mask = s;
                    best_cond = FishburnCondition{member, slot};
                }
            }
        }

    if (best_size < std::max(min_size, 3)) return std::nullopt;
    std::vector<int> labels;
    for (int i = 0; i < n; ++i)
        if (best_mask & (1u << i)) labels.push_back(d.alts().label(i));
    return UniformNeverSubset{AlternativeSet(std::move(labels)), best_cond};
}

}  // namespace prefdom
