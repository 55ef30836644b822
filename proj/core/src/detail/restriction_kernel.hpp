#pragma once

#include <cstdint>
#include <vector>

#include "prefdom/domain.hpp"

namespace prefdom::detail {

// 9-cell occupancy of one order on a triple of alternative indices:
// bit (member * 3 + slot), member and slot in 0..2, slot 0 = top.
inline unsigned pattern_cells(const std::uint8_t* rk, int ia, int ib, int ic) {
    const int ra = rk[ia], rb = rk[ib], rc = rk[ic];
    const int sa = (ra > rb) + (ra > rc);
    const int sb = (rb > ra) + (rb > rc);
    const int sc = (rc > ra) + (rc > rb);
    return (1u << sa) | (1u << (3 + sb)) | (1u << (6 + sc));
}

inline constexpr unsigned kAllCells = 0x1FF;

// Induced suborder of a k-subset packed 4 bits per element: the subset
// positions (0..k-1) listed best-first. Equal keys <=> equal suborders.
inline std::uint64_t induced_key(const std::uint8_t* rk, const int* subset, int k) {
    std::uint32_t pr[kMaxAlternatives];
    for (int j = 0; j < k; ++j)
        pr[j] = (static_cast<std::uint32_t>(rk[subset[j]]) << 4) | static_cast<std::uint32_t>(j);
    for (int j = 1; j < k; ++j) {
        const std::uint32_t v = pr[j];
        int i = j - 1;
        while (i >= 0 && pr[i] > v) {
            pr[i + 1] = pr[i];
            --i;
        }
        pr[i + 1] = v;
    }
    std::uint64_t key = 0;
    for (int j = 0; j < k; ++j) key |= static_cast<std::uint64_t>(pr[j] & 0xF) << (4 * j);
    return key;
}

// Reusable open-addressing set of 64-bit keys. reset() is O(1) via epochs.
class KeySet {
public:
    void reset(std::size_t expected) {
        std::size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        if (cap != slots_.size()) {
            slots_.assign(cap, 0);
            stamps_.assign(cap, 0);
            epoch_ = 1;
        } else if (++epoch_ == 0) {
            stamps_.assign(cap, 0);
            epoch_ = 1;
        }
        count_ = 0;
    }

    // True when the key was not present yet.
    bool insert(std::uint64_t key) {
        const std::size_t mask = slots_.size() - 1;
        std::size_t h = static_cast<std::size_t>(hash(key)) & mask;
        for (;;) {
            if (stamps_[h] != epoch_) {
                stamps_[h] = epoch_;
                slots_[h] = key;
                ++count_;
                return true;
            }
            if (slots_[h] == key) return false;
            h = (h + 1) & mask;
        }
    }

    std::size_t size() const { return count_; }

private:
    static std::uint64_t hash(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xFF51AFD7ED558CCDULL;
        x ^= x >> 33;
        return x;
    }

    std::vector<std::uint64_t> slots_;
    std::vector<std::uint32_t> stamps_;
    std::uint32_t epoch_ = 0;
    std::size_t count_ = 0;
};

// Number of distinct suborders of d on the given subset of alternative
// indices, stopping early once `stop_at` distinct keys have been seen.
inline std::size_t restriction_size(const Domain& d, const int* subset, int k, KeySet& keys,
                                    std::size_t stop_at = SIZE_MAX) {
    keys.reset(std::min<std::size_t>(d.size(), stop_at == SIZE_MAX ? d.size() : stop_at + 1));
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (keys.insert(induced_key(d.ranks(i), subset, k)) && keys.size() >= stop_at) break;
    }
    return keys.size();
}

}  // namespace prefdom::detail
