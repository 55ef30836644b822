#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "prefdom/domain.hpp"

namespace testsupport {

inline prefdom::LinearOrder random_order(int n, std::mt19937_64& rng) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    return prefdom::LinearOrder(std::move(labels));
}

inline prefdom::Domain random_domain(int n, int max_orders, std::mt19937_64& rng) {
    const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_orders));
    std::vector<prefdom::LinearOrder> orders;
    orders.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) orders.push_back(random_order(n, rng));
    return prefdom::Domain(prefdom::AlternativeSet::range(n), std::move(orders));
}

}  // namespace testsupport
