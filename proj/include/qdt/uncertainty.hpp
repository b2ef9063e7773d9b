#pragma once

// Comparative uncertainty on events: possibility, necessity and qualitative
// probability comparators, plus the comparator concept the lifting rules use.

#include <concepts>
#include <cstdint>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "qdt/core.hpp"

namespace qdt {

using Level = unsigned;
using Rational = boost::rational<std::int64_t>;

/// Ordinal plausibility level per state. Level 0 is the bottom: states at
/// level 0 are null, and the possibility of the empty event is 0.
class PossibilityProfile {
public:
    explicit PossibilityProfile(std::vector<Level> levels) : levels_(std::move(levels)) {
        if (levels_.empty() || levels_.size() > Event::kMaxStates)
            throw InputError("possibility profile must cover 1.." + std::to_string(Event::kMaxStates) + " states");
        top_ = *std::max_element(levels_.begin(), levels_.end());
        if (top_ == 0) throw InputError("possibility profile needs at least one state above level 0");
    }

    std::size_t size() const noexcept { return levels_.size(); }
    Level level(std::size_t state) const { return levels_.at(state); }
    const std::vector<Level>& levels() const noexcept { return levels_; }
    Level top() const noexcept { return top_; }

    /// Every state lies above the bottom level.
    bool positive() const noexcept {
        return std::all_of(levels_.begin(), levels_.end(), [](Level l) { return l > 0; });
    }

    void check(const Event& e) const {
        if (e.universe_size() != size()) throw InputError("event does not belong to the profile's state space");
    }

    Level possibility(const Event& e) const {
        check(e);
        Level best = 0;
        for (Event::Mask m = e.bits(); m != 0; m &= m - 1) best = std::max(best, levels_[std::countr_zero(m)]);
        return best;
    }

    /// A numeric necessity witness, top - possibility(complement). Only its
    /// order is meaningful.
    Level necessity(const Event& e) const { return top_ - possibility(e.complement()); }

    friend bool operator==(const PossibilityProfile&, const PossibilityProfile&) = default;

private:
    std::vector<Level> levels_;
    Level top_ = 0;
};

/// Exact nonnegative weights per state; only sums are ever compared.
class WeightProfile {
public:
    explicit WeightProfile(std::vector<Rational> weights) : weights_(std::move(weights)) {
        if (weights_.empty() || weights_.size() > Event::kMaxStates)
            throw InputError("weight profile must cover 1.." + std::to_string(Event::kMaxStates) + " states");
        Rational total = 0;
        for (const auto& w : weights_) {
            if (w < 0) throw InputError("weights must be nonnegative");
            total += w;
        }
        if (total <= 0) throw InputError("weights must have a positive total");
    }

    std::size_t size() const noexcept { return weights_.size(); }
    const Rational& weight(std::size_t state) const { return weights_.at(state); }
    const std::vector<Rational>& weights() const noexcept { return weights_; }

    Rational mass(const Event& e) const {
        if (e.universe_size() != size()) throw InputError("event does not belong to the weight profile's state space");
        Rational sum = 0;
        for (Event::Mask m = e.bits(); m != 0; m &= m - 1) sum += weights_[std::countr_zero(m)];
        return sum;
    }

    friend bool operator==(const WeightProfile&, const WeightProfile&) = default;

private:
    std::vector<Rational> weights_;
};

inline Level possibility_of(const PossibilityProfile& profile, const Event& a) { return profile.possibility(a); }

inline Comparison compare_possibility(const PossibilityProfile& profile, const Event& a, const Event& b) {
    a.same_space(b);
    return compare_values(profile.possibility(a), profile.possibility(b));
}

/// N(A) >= N(B) iff Pi(not A) <= Pi(not B).
inline Comparison compare_necessity(const PossibilityProfile& profile, const Event& a, const Event& b) {
    a.same_space(b);
    return compare_values(profile.possibility(b.complement()), profile.possibility(a.complement()));
}

inline Comparison compare_qualprob(const WeightProfile& wp, const Event& a, const Event& b) {
    a.same_space(b);
    return compare_values(wp.mass(a), wp.mass(b));
}

/// A null event is as unlikely as the empty event.
inline bool is_null_event(const PossibilityProfile& profile, const Event& a) { return profile.possibility(a) == 0; }

// ---------------------------------------------------------------------------
// Comparators

/// Anything that yields a three-way verdict for any pair of events.
template <class C>
concept EventComparator = requires(const C& c, const Event& a, const Event& b) {
    { c.compare(a, b) } -> std::same_as<Comparison>;
    { c.state_count() } -> std::convertible_to<std::size_t>;
};

class NecessityComparator {
public:
    explicit NecessityComparator(PossibilityProfile profile) : profile_(std::move(profile)) {}
    Comparison compare(const Event& a, const Event& b) const { return compare_necessity(profile_, a, b); }
    std::size_t state_count() const noexcept { return profile_.size(); }
    const PossibilityProfile& profile() const noexcept { return profile_; }

private:
    PossibilityProfile profile_;
};

class PossibilityComparator {
public:
    explicit PossibilityComparator(PossibilityProfile profile) : profile_(std::move(profile)) {}
    Comparison compare(const Event& a, const Event& b) const { return compare_possibility(profile_, a, b); }
    std::size_t state_count() const noexcept { return profile_.size(); }
    const PossibilityProfile& profile() const noexcept { return profile_; }

private:
    PossibilityProfile profile_;
};

class QualProbComparator {
public:
    explicit QualProbComparator(WeightProfile weights) : weights_(std::move(weights)) {}
    Comparison compare(const Event& a, const Event& b) const { return compare_qualprob(weights_, a, b); }
    std::size_t state_count() const noexcept { return weights_.size(); }
    const WeightProfile& weights() const noexcept { return weights_; }

private:
    WeightProfile weights_;
};

/// Runtime choice among the three comparator kinds.
class UncertaintyComparator {
public:
    enum class Kind { Necessity, Possibility, QualProb };

    UncertaintyComparator(NecessityComparator c) : impl_(std::move(c)) {}
    UncertaintyComparator(PossibilityComparator c) : impl_(std::move(c)) {}
    UncertaintyComparator(QualProbComparator c) : impl_(std::move(c)) {}

    static UncertaintyComparator necessity(PossibilityProfile p) { return NecessityComparator(std::move(p)); }
    static UncertaintyComparator possibility(PossibilityProfile p) { return PossibilityComparator(std::move(p)); }
    static UncertaintyComparator qualprob(WeightProfile w) { return QualProbComparator(std::move(w)); }

    Kind kind() const noexcept { return static_cast<Kind>(impl_.index()); }

    Comparison compare(const Event& a, const Event& b) const {
        return std::visit([&](const auto& c) { return c.compare(a, b); }, impl_);
    }

    std::size_t state_count() const noexcept {
        return std::visit([](const auto& c) { return c.state_count(); }, impl_);
    }

    template <class C>
    const C* get_if() const noexcept {
        return std::get_if<C>(&impl_);
    }

private:
    std::variant<NecessityComparator, PossibilityComparator, QualProbComparator> impl_;
};

static_assert(EventComparator<NecessityComparator>);
static_assert(EventComparator<QualProbComparator>);
static_assert(EventComparator<UncertaintyComparator>);

} // namespace qdt
