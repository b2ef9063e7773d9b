#pragma once

// Explicit event relations given as verdict tables, and the axiom checks for
// qualitative probabilities and necessity orderings.

#include <string>
#include <vector>

#include "qdt/core.hpp"
#include "qdt/harness/report.hpp"
#include "qdt/uncertainty.hpp"

namespace qdt::harness {

enum class Verdict : std::int8_t { LT = -1, EQ = 0, GT = 1, Incomparable = 2 };

constexpr Verdict to_verdict(Comparison c) noexcept { return static_cast<Verdict>(static_cast<int>(c)); }

constexpr Verdict mirror(Verdict v) noexcept {
    return v == Verdict::Incomparable ? v : static_cast<Verdict>(-static_cast<int>(v));
}

/// A verdict for every ordered pair of events of a small space. Setting one
/// pair also sets its mirror, so the table is mirror-consistent by
/// construction; the diagonal is fixed to EQ.
class ExplicitRelation {
public:
    static constexpr std::size_t kMaxStates = 8;

    explicit ExplicitRelation(std::size_t states) : states_(states) {
        if (states == 0 || states > kMaxStates)
            throw InputError("explicit relations support 1.." + std::to_string(kMaxStates) + " states");
        const std::size_t k = std::size_t{1} << states;
        table_.assign(k * k, Verdict::Incomparable);
        for (std::size_t i = 0; i < k; ++i) table_[i * k + i] = Verdict::EQ;
    }

    template <EventComparator C>
    static ExplicitRelation from(const C& cmp) {
        ExplicitRelation rel(cmp.state_count());
        const auto events = all_events(rel.states_);
        for (const Event& a : events)
            for (const Event& b : events)
                if (a < b) rel.set(a, b, to_verdict(cmp.compare(a, b)));
        return rel;
    }

    std::size_t state_count() const noexcept { return states_; }

    void set(const Event& a, const Event& b, Verdict v) {
        check(a);
        check(b);
        if (a == b && v != Verdict::EQ) throw InputError("an event is always equivalent to itself");
        table_[index(a, b)] = v;
        table_[index(b, a)] = mirror(v);
    }

    Verdict verdict(const Event& a, const Event& b) const {
        check(a);
        check(b);
        return table_[index(a, b)];
    }

    bool complete() const {
        for (Verdict v : table_)
            if (v == Verdict::Incomparable) return false;
        return true;
    }

    /// Comparator view; fails on incomparable pairs.
    Comparison compare(const Event& a, const Event& b) const {
        const Verdict v = verdict(a, b);
        if (v == Verdict::Incomparable) throw InputError("relation leaves these events incomparable");
        return static_cast<Comparison>(v);
    }

private:
    void check(const Event& e) const {
        if (e.universe_size() != states_) throw InputError("event does not belong to the relation's state space");
    }

    std::size_t index(const Event& a, const Event& b) const {
        return static_cast<std::size_t>(a.bits()) * (std::size_t{1} << states_) + static_cast<std::size_t>(b.bits());
    }

    std::size_t states_;
    std::vector<Verdict> table_;
};

enum class AxiomFamily { QualitativeProbability, NecessityOrdering };

inline std::string format_event(const Event& e) { return StateSpace::numbered(e.universe_size()).format(e); }

/// Checks the defining axioms of the chosen family on a complete table:
/// completeness and transitivity; S > {} and A >= {}; faithfulness to
/// inclusion; and either additivity (qualitative probability) or
/// intersection stability (necessity ordering).
inline CheckReport check_axioms_of_relation(const ExplicitRelation& rel, AxiomFamily family) {
    if (!rel.complete()) throw InputError("axiom checks need a complete relation");
    const std::size_t n = rel.state_count();
    const auto events = all_events(n);
    const Event none = Event::none(n);
    const Event all = Event::all(n);
    const auto ge = [&](const Event& a, const Event& b) { return at_least(rel.compare(a, b)); };

    CheckReport r;
    r.name = family == AxiomFamily::QualitativeProbability ? "axioms: qualitative probability"
                                                           : "axioms: necessity ordering";
    r.bounds = "states=" + std::to_string(n);

    auto& complete = r.item("complete");
    for (const Event& a : events)
        for (const Event& b : events) {
            ++complete.instances;
            if (!ge(a, b) && !ge(b, a))
                complete.fail(format_event(a) + " vs " + format_event(b), !ge(a, b) && !ge(b, a));
        }

    auto& transitive = r.item("transitive");
    for (const Event& a : events)
        for (const Event& b : events)
            for (const Event& c : events) {
                ++transitive.instances;
                if (ge(a, b) && ge(b, c) && !ge(a, c))
                    transitive.fail(format_event(a) + ">=" + format_event(b) + ">=" + format_event(c) + " but not " +
                                        format_event(a) + ">=" + format_event(c),
                                    ge(a, b) && ge(b, c) && !ge(a, c));
            }

    auto& nontrivial = r.item("non-trivial (S > {})");
    ++nontrivial.instances;
    if (rel.compare(all, none) != Comparison::GT) nontrivial.fail("S is not above {}", true);

    auto& nonneg = r.item("A >= {}");
    for (const Event& a : events) {
        ++nonneg.instances;
        if (!ge(a, none)) nonneg.fail(format_event(a) + " < {}", !ge(a, none));
    }

    auto& faithful = r.item("faithful to inclusion");
    for (const Event& a : events)
        for (const Event& b : events) {
            if (!a.subset_of(b)) continue;
            ++faithful.instances;
            if (!ge(b, a)) faithful.fail(format_event(a) + " subset of " + format_event(b) + " but ranked above it",
                                         !ge(b, a));
        }

    if (family == AxiomFamily::QualitativeProbability) {
        auto& additive = r.item("additivity");
        for (const Event& a : events)
            for (const Event& b : events)
                for (const Event& c : events) {
                    if (!(a & (b | c)).empty()) continue;
                    ++additive.instances;
                    if (ge(b, c) != ge(a | b, a | c))
                        additive.fail("A=" + format_event(a) + " B=" + format_event(b) + " C=" + format_event(c),
                                      ge(b, c) != ge(a | b, a | c));
                }
    } else {
        auto& stable = r.item("intersection stability");
        for (const Event& a : events)
            for (const Event& b : events)
                for (const Event& c : events) {
                    ++stable.instances;
                    if (ge(b, c) && !ge(a & b, a & c))
                        stable.fail("A=" + format_event(a) + " B=" + format_event(b) + " C=" + format_event(c),
                                    ge(b, c) && !ge(a & b, a & c));
                }
    }
    return r;
}

} // namespace qdt::harness
