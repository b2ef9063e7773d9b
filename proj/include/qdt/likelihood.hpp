#pragma once

// Possibilistic likelihood: A >= B iff Pi(A - B) >= Pi(B - A). This is the
// event relation induced by lifting a necessity comparator and restricting
// to two-outcome acts. It refines both the necessity and the possibility
// orderings but its indifference is not transitive.

#include <vector>

#include "qdt/core.hpp"
#include "qdt/uncertainty.hpp"

namespace qdt {

inline Comparison likelihood_compare(const PossibilityProfile& profile, const Event& a, const Event& b) {
    a.same_space(b);
    return compare_values(profile.possibility(a - b), profile.possibility(b - a));
}

/// The same relation computed as discrimax over level vectors: a_i is the
/// level of state i when it belongs to A and 0 otherwise; only coordinates
/// where the two vectors differ are compared, by their maxima.
inline Comparison discrimax_compare(const PossibilityProfile& profile, const Event& a, const Event& b) {
    a.same_space(b);
    profile.check(a);
    std::vector<Level> av(profile.size(), 0);
    std::vector<Level> bv(profile.size(), 0);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (a.contains(i)) av[i] = profile.level(i);
        if (b.contains(i)) bv[i] = profile.level(i);
    }
    Level amax = 0;
    Level bmax = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (av[i] == bv[i]) continue;
        amax = std::max(amax, av[i]);
        bmax = std::max(bmax, bv[i]);
    }
    return compare_values(amax, bmax);
}

/// Pi(A & B) < min(Pi(A - B), Pi(B - A)).
inline bool pi_mutually_exclusive(const PossibilityProfile& profile, const Event& a, const Event& b) {
    a.same_space(b);
    return profile.possibility(a & b) < std::min(profile.possibility(a - b), profile.possibility(b - a));
}

/// Comparator wrapper, for code that is generic over event relations.
class LikelihoodRelation {
public:
    explicit LikelihoodRelation(PossibilityProfile profile) : profile_(std::move(profile)) {}
    Comparison compare(const Event& a, const Event& b) const { return likelihood_compare(profile_, a, b); }
    std::size_t state_count() const noexcept { return profile_.size(); }
    const PossibilityProfile& profile() const noexcept { return profile_; }

private:
    PossibilityProfile profile_;
};

} // namespace qdt
