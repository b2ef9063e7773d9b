#pragma once

// Exhaustive sweeps of the per-model checks over every small model within a
// SearchBounds: state counts 1..max_states, consequence scales with 2..max_ranks
// consequences, and level (or weight) assignments 0..max_levels. Each sweep
// stops at the first model with a counterexample, so the reported instance is
// the first one in canonical order.

#include <string>
#include <vector>

#include "qdt/core.hpp"
#include "qdt/harness/act_checks.hpp"
#include "qdt/harness/enumerate.hpp"
#include "qdt/harness/event_checks.hpp"
#include "qdt/harness/relation.hpp"
#include "qdt/harness/report.hpp"
#include "qdt/harness/search.hpp"
#include "qdt/uncertainty.hpp"

namespace qdt::harness {

namespace detail {

inline std::uint64_t power(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

inline std::string model_label(std::size_t n, const std::string& measure, const OutcomeScale* scale) {
    std::string out = "states=" + std::to_string(n) + " " + measure;
    if (scale) out += " " + format_ranks(*scale);
    return out;
}

/// Visits (n, scale) for every act-level model shape within bounds.
template <class Visit>
bool for_each_shape(const SearchBounds& b, Visit&& visit) {
    for (std::size_t n = 1; n <= b.max_states; ++n)
        for (std::size_t m = 2; m <= b.max_ranks; ++m) {
            const std::uint64_t k = power(m, n);
            if (b.max_acts != 0 && k > b.max_acts) continue;
            for (const OutcomeScale& scale : all_scales(m))
                if (!visit(n, scale, k)) return false;
        }
    return true;
}

} // namespace detail

/// P1', P2, P3, P4, U and the equivalent forms of the lifting rule, for the
/// necessity-based rule on every model within bounds.
inline CheckReport sweep_savage(const SearchBounds& b) {
    b.validate();
    Budget budget(b.ceiling);
    CheckReport agg;
    agg.name = "Savage suite (lift-necessity)";
    agg.bounds = b.describe();
    detail::for_each_shape(b, [&](std::size_t n, const OutcomeScale& scale, std::uint64_t k) {
        const StateSpace space = StateSpace::numbered(n);
        for (const PossibilityProfile& p : all_profiles(n, b.max_levels)) {
            budget.charge(k * k);
            const auto model =
                full_act_model(space, scale, NecessityComparator(p), detail::model_label(n, format_levels(p), &scale));
            const ActAnalysis an(model);
            agg.absorb(check_p1prime(an));
            agg.absorb(check_sure_thing(an));
            agg.absorb(check_p3_p4_u(an));
            agg.absorb(check_lifting_forms(an));
            if (!agg.passed()) return false;
        }
        return true;
    });
    return agg;
}

/// P1' alone, for the chosen comparator family. Qualitative probability
/// models are enumerated from integer weights 0..max_levels.
inline CheckReport sweep_p1prime(const SearchBounds& b, UncertaintyComparator::Kind kind) {
    b.validate();
    Budget budget(b.ceiling);
    CheckReport agg;
    agg.bounds = b.describe();
    const auto run = [&](const auto& cmp, std::size_t n, const OutcomeScale& scale, const std::string& measure) {
        const auto model = full_act_model(StateSpace::numbered(n), scale, cmp, detail::model_label(n, measure, &scale));
        agg.absorb(check_p1prime(ActAnalysis(model)));
        return agg.passed();
    };
    switch (kind) {
        case UncertaintyComparator::Kind::QualProb:
            agg.name = "P1' (lift-qualprob)";
            detail::for_each_shape(b, [&](std::size_t n, const OutcomeScale& scale, std::uint64_t k) {
                for (const WeightProfile& w : all_weight_profiles(n, b.max_levels)) {
                    budget.charge(k * k);
                    if (!run(QualProbComparator(w), n, scale, format_weights(w))) return false;
                }
                return true;
            });
            break;
        case UncertaintyComparator::Kind::Necessity:
        case UncertaintyComparator::Kind::Possibility:
            agg.name = kind == UncertaintyComparator::Kind::Necessity ? "P1' (lift-necessity)" : "P1' (lift-possibility)";
            detail::for_each_shape(b, [&](std::size_t n, const OutcomeScale& scale, std::uint64_t k) {
                for (const PossibilityProfile& p : all_profiles(n, b.max_levels)) {
                    budget.charge(k * k);
                    const bool ok = kind == UncertaintyComparator::Kind::Necessity
                                        ? run(NecessityComparator(p), n, scale, format_levels(p))
                                        : run(PossibilityComparator(p), n, scale, format_levels(p));
                    if (!ok) return false;
                }
                return true;
            });
            break;
    }
    return agg;
}

namespace detail {
/// Runs `check(profile, space, label)` for every profile within bounds,
/// charging 2^(3n) per profile.
template <class Check>
CheckReport sweep_profiles(const SearchBounds& b, std::string name, Check&& check) {
    b.validate();
    Budget budget(b.ceiling);
    CheckReport agg;
    agg.name = std::move(name);
    agg.bounds = b.describe();
    for (std::size_t n = 1; n <= b.max_states; ++n) {
        const StateSpace space = StateSpace::numbered(n);
        for (const PossibilityProfile& p : all_profiles(n, b.max_levels)) {
            budget.charge(power(2, 3 * n));
            agg.absorb(check(p, space, model_label(n, format_levels(p), nullptr)));
            if (!agg.passed()) return agg;
        }
    }
    return agg;
}
} // namespace detail

/// The general event-relation properties, on possibilistic likelihood.
inline CheckReport sweep_event_properties(const SearchBounds& b) {
    return detail::sweep_profiles(b, "event properties (likelihood)",
                                  [](const PossibilityProfile& p, const StateSpace& s, const std::string& label) {
                                      return check_event_properties(p, s, label);
                                  });
}

/// Likelihood-specific properties, plus existence of strict refinement
/// witnesses for N and for Pi within the same bounds.
inline CheckReport sweep_likelihood(const SearchBounds& b) {
    CheckReport agg = detail::sweep_profiles(
        b, "likelihood properties",
        [](const PossibilityProfile& p, const StateSpace& s, const std::string& label) {
            return check_likelihood_properties(p, s, label);
        });
    for (SearchProperty prop : {SearchProperty::LikelihoodStrictlyRefinesN, SearchProperty::LikelihoodStrictlyRefinesPi}) {
        const SearchResult found = search_counterexample(prop, b);
        CheckItem& item = agg.item("witness exists: " + std::string(property_name(prop)));
        item.instances += found.instances;
        if (!found.found)
            item.fail("no witness within bounds", true);
        else if (!found.reverified)
            item.fail("witness did not re-verify: " + found.witness, false);
    }
    return agg;
}

inline CheckReport sweep_system_p(const SearchBounds& b) {
    return detail::sweep_profiles(b, "System P + RM",
                                  [](const PossibilityProfile& p, const StateSpace& s, const std::string& label) {
                                      return check_system_p(p, s, label);
                                  });
}

inline CheckReport sweep_roundtrip(const SearchBounds& b) {
    b.validate();
    Budget budget(b.ceiling);
    CheckReport agg;
    agg.name = "representation round trip";
    agg.bounds = b.describe();
    detail::for_each_shape(b, [&](std::size_t n, const OutcomeScale& scale, std::uint64_t k) {
        const StateSpace space = StateSpace::numbered(n);
        for (const PossibilityProfile& p : all_profiles(n, b.max_levels)) {
            budget.charge(k * k);
            const auto model =
                full_act_model(space, scale, NecessityComparator(p), detail::model_label(n, format_levels(p), &scale));
            agg.absorb(check_representation_roundtrip(model));
            if (!agg.passed()) return false;
        }
        return true;
    });
    return agg;
}

/// Necessity orderings from every profile and qualitative probabilities from
/// every weight assignment, checked against their defining axioms.
inline CheckReport sweep_axioms(const SearchBounds& b) {
    b.validate();
    Budget budget(b.ceiling);
    CheckReport agg;
    agg.name = "axioms of induced relations";
    agg.bounds = b.describe();
    const auto prefix = [](CheckReport r, const std::string& tag, const std::string& label) {
        for (auto& i : r.items) {
            i.property = tag + ": " + i.property;
            if (!i.passed) i.counterexample = label + "; " + i.counterexample;
        }
        return r;
    };
    for (std::size_t n = 1; n <= b.max_states && agg.passed(); ++n) {
        for (const PossibilityProfile& p : all_profiles(n, b.max_levels)) {
            budget.charge(detail::power(2, 3 * n));
            agg.absorb(prefix(check_axioms_of_relation(ExplicitRelation::from(NecessityComparator(p)),
                                                       AxiomFamily::NecessityOrdering),
                              "N", format_levels(p)));
            if (!agg.passed()) break;
        }
        for (const WeightProfile& w : all_weight_profiles(n, b.max_levels)) {
            if (!agg.passed()) break;
            budget.charge(detail::power(2, 3 * n));
            agg.absorb(prefix(check_axioms_of_relation(ExplicitRelation::from(QualProbComparator(w)),
                                                       AxiomFamily::QualitativeProbability),
                              "qualprob", format_weights(w)));
        }
    }
    return agg;
}

} // namespace qdt::harness
