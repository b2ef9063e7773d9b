#pragma once

// Canonical enumeration of small models. Every sequence is lexicographic
// with the first coordinate most significant, so "first witness" is
// well defined independently of how the work is scheduled.

#include <vector>

#include "qdt/core.hpp"
#include "qdt/uncertainty.hpp"

namespace qdt::harness {

/// Calls `visit(digits)` for every vector in {0..base-1}^length, in
/// lexicographic order. Stops early when `visit` returns false.
template <class Visit>
bool for_each_tuple(std::size_t length, std::size_t base, Visit&& visit) {
    std::vector<unsigned> digits(length, 0);
    while (true) {
        if (!visit(static_cast<const std::vector<unsigned>&>(digits))) return false;
        std::size_t i = length;
        while (i > 0) {
            --i;
            if (++digits[i] < base) break;
            digits[i] = 0;
            if (i == 0) return true;
        }
        if (length == 0) return true;
    }
}

/// Every level assignment S -> {0..max_level} with at least one positive state.
inline std::vector<PossibilityProfile> all_profiles(std::size_t states, std::size_t max_level) {
    std::vector<PossibilityProfile> out;
    for_each_tuple(states, max_level + 1, [&](const std::vector<unsigned>& d) {
        for (unsigned x : d)
            if (x > 0) {
                out.emplace_back(d);
                break;
            }
        return true;
    });
    return out;
}

/// Every integer weight assignment S -> {0..max_weight} with positive total.
inline std::vector<WeightProfile> all_weight_profiles(std::size_t states, std::size_t max_weight) {
    std::vector<WeightProfile> out;
    for_each_tuple(states, max_weight + 1, [&](const std::vector<unsigned>& d) {
        for (unsigned x : d)
            if (x > 0) {
                std::vector<Rational> w;
                for (unsigned y : d) w.emplace_back(static_cast<std::int64_t>(y));
                out.emplace_back(std::move(w));
                break;
            }
        return true;
    });
    return out;
}

/// Every rank assignment of `consequences` consequences into {0..consequences-1}
/// using at least two distinct ranks.
inline std::vector<OutcomeScale> all_scales(std::size_t consequences) {
    std::vector<OutcomeScale> out;
    for_each_tuple(consequences, consequences, [&](const std::vector<unsigned>& d) {
        for (unsigned x : d)
            if (x != d.front()) {
                out.push_back(OutcomeScale::from_ranks(d));
                break;
            }
        return true;
    });
    return out;
}

/// c0 < c1 < ... with ranks 0..k-1.
inline OutcomeScale strict_scale(std::size_t consequences) {
    std::vector<unsigned> ranks;
    for (std::size_t i = 0; i < consequences; ++i) ranks.push_back(static_cast<unsigned>(i));
    return OutcomeScale::from_ranks(ranks);
}

} // namespace qdt::harness
