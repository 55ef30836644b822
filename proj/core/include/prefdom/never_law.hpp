#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "prefdom/never_condition.hpp"

namespace prefdom {

/// An assignment of Fishburn-format never conditions to every triple of
/// {1..n}. A triple with no conditions is unconstrained.
class NeverLaw {
public:
    explicit NeverLaw(int n);

    int n() const { return n_; }
    void assign(std::array<int, 3> triple, FishburnCondition cond);
    std::vector<FishburnCondition> conditions(std::array<int, 3> triple) const;

    // 9-bit mask, bit (member-1)*3 + (slot-1), indexed by the lexicographic
    // rank of the triple. The generation and filtering kernels read this.
    std::uint16_t mask_at(std::size_t triple_rank) const { return masks_[triple_rank]; }
    std::size_t triple_rank(std::array<int, 3> triple) const;

private:
    int n_;
    std::vector<std::uint16_t> masks_;
};

/// Law file format: one line per triple, "i j k : COND[,COND...]" with COND
/// in {1N1, ..., 3N3}; '#' starts a comment; omitted triples are
/// unconstrained.
NeverLaw parse_never_law(std::istream& in, int n);

}  // namespace prefdom
