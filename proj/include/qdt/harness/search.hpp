#pragma once

// Deterministic witness searches for the negative results: cycles of strict
// preference under qualitative probability, intransitive indifference among
// acts and among events, and strict refinement of N and Pi by likelihood.
// Models are scanned by increasing state count, then in canonical order; the
// first witness found is the one reported.

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qdt/core.hpp"
#include "qdt/harness/enumerate.hpp"
#include "qdt/harness/report.hpp"
#include "qdt/lifting.hpp"
#include "qdt/likelihood.hpp"
#include "qdt/uncertainty.hpp"

namespace qdt::harness {

enum class SearchProperty {
    QualProbStrictCycle,
    ActIndifferenceIntransitivity,
    EventIndifferenceIntransitivity,
    LikelihoodStrictlyRefinesN,
    LikelihoodStrictlyRefinesPi,
};

inline constexpr std::array<std::pair<SearchProperty, std::string_view>, 5> kSearchProperties{{
    {SearchProperty::QualProbStrictCycle, "qualprob-strict-cycle"},
    {SearchProperty::ActIndifferenceIntransitivity, "act-indifference-intransitivity"},
    {SearchProperty::EventIndifferenceIntransitivity, "event-indifference-intransitivity"},
    {SearchProperty::LikelihoodStrictlyRefinesN, "likelihood-strictly-refines-N"},
    {SearchProperty::LikelihoodStrictlyRefinesPi, "likelihood-strictly-refines-Pi"},
}};

inline std::string_view property_name(SearchProperty p) {
    for (const auto& [q, name] : kSearchProperties)
        if (q == p) return name;
    return "?";
}

inline std::optional<SearchProperty> parse_search_property(std::string_view name) {
    for (const auto& [q, n] : kSearchProperties)
        if (n == name) return q;
    return std::nullopt;
}

struct SearchResult {
    SearchProperty property{};
    std::string bounds;
    std::uint64_t instances = 0;
    bool found = false;
    bool reverified = false;
    std::string witness;
    /// Structured witness, for replay by callers.
    std::size_t states = 0;
    std::vector<Level> levels;        // profile levels, when the model has one
    std::vector<Rational> weights;    // weights, for the qualprob search
    std::vector<Act> acts;            // act witnesses
    std::vector<Event> events;        // event witnesses
};

inline void print(std::ostream& os, const SearchResult& r) {
    os << "search " << property_name(r.property) << " [" << r.bounds << "]\n";
    if (r.found) {
        os << "  witness: " << r.witness << '\n';
        os << "  re-verified: " << (r.reverified ? "yes" : "NO") << '\n';
    } else {
        os << "  no witness within bounds\n";
    }
    os << "  instances scanned: " << r.instances << '\n';
}

namespace detail {

inline std::size_t act_universe(std::size_t states, std::size_t consequences, const SearchBounds& b) {
    std::size_t k = 1;
    for (std::size_t i = 0; i < states; ++i) k *= consequences;
    if (b.max_acts != 0 && k > b.max_acts)
        throw CeilingExceeded("act universe of " + std::to_string(k) + " acts exceeds max_acts=" +
                              std::to_string(b.max_acts));
    return k;
}

/// Pairwise verdict table of `cmp` lifted over `acts`.
template <EventComparator C>
std::vector<Comparison> verdict_table(const C& cmp, const OutcomeScale& scale, const std::vector<Act>& acts) {
    std::vector<Comparison> v;
    v.reserve(acts.size() * acts.size());
    for (const Act& f : acts)
        for (const Act& g : acts) v.push_back(lift_compare(cmp, scale, f, g));
    return v;
}

inline SearchResult search_strict_cycle(const SearchBounds& b, Budget& budget) {
    SearchResult out;
    const OutcomeScale scale = strict_scale(b.max_ranks);
    for (std::size_t n = 1; n <= b.max_states; ++n) {
        const std::size_t k = act_universe(n, scale.size(), b);
        const auto acts = all_acts(n, scale);
        const StateSpace space = StateSpace::numbered(n);
        for (const WeightProfile& w : all_weight_profiles(n, b.max_levels)) {
            budget.charge(static_cast<std::uint64_t>(k) * k);
            const QualProbComparator cmp(w);
            const auto v = verdict_table(cmp, scale, acts);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    if (v[i * k + j] != Comparison::GT) continue;
                    for (std::size_t h = 0; h < k; ++h) {
                        if (v[j * k + h] != Comparison::GT || v[h * k + i] != Comparison::GT) continue;
                        const Act &f = acts[i], &g = acts[j], &hh = acts[h];
                        out.found = true;
                        out.states = n;
                        out.weights = w.weights();
                        out.acts = {f, g, hh};
                        out.reverified = lift_compare(cmp, scale, f, g) == Comparison::GT &&
                                         lift_compare(cmp, scale, g, hh) == Comparison::GT &&
                                         lift_compare(cmp, scale, hh, f) == Comparison::GT;
                        const auto sums = [&](const Act& x, const Act& y) {
                            return to_string(w.mass(agreement_set(x, y, scale))) + " vs " +
                                   to_string(w.mass(agreement_set(y, x, scale)));
                        };
                        out.witness = format_weights(w) + "; f=" + format_act(f, scale) + " g=" + format_act(g, scale) +
                                      " h=" + format_act(hh, scale) + "; f>g (" + sums(f, g) + "), g>h (" +
                                      sums(g, hh) + "), h>f (" + sums(hh, f) + ")";
                        (void)space;
                        return out;
                    }
                }
        }
    }
    return out;
}

inline SearchResult search_act_indifference(const SearchBounds& b, Budget& budget) {
    SearchResult out;
    const OutcomeScale scale = strict_scale(b.max_ranks);
    for (std::size_t n = 1; n <= b.max_states; ++n) {
        const std::size_t k = act_universe(n, scale.size(), b);
        const auto acts = all_acts(n, scale);
        for (const PossibilityProfile& p : all_profiles(n, b.max_levels)) {
            budget.charge(static_cast<std::uint64_t>(k) * k);
            const NecessityComparator cmp(p);
            const auto v = verdict_table(cmp, scale, acts);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    if (v[i * k + j] != Comparison::EQ) continue;
                    for (std::size_t h = 0; h < k; ++h) {
                        if (v[j * k + h] != Comparison::EQ || v[i * k + h] == Comparison::EQ) continue;
                        const Act &f = acts[i], &g = acts[j], &hh = acts[h];
                        const Comparison fh = lift_compare(cmp, scale, f, hh);
                        out.found = true;
                        out.states = n;
                        out.levels = p.levels();
                        out.acts = {f, g, hh};
                        out.reverified = lift_compare(cmp, scale, f, g) == Comparison::EQ &&
                                         lift_compare(cmp, scale, g, hh) == Comparison::EQ && fh != Comparison::EQ;
                        out.witness = format_levels(p) + " " + format_ranks(scale) + "; f=" + format_act(f, scale) +
                                      " g=" + format_act(g, scale) + " h=" + format_act(hh, scale) +
                                      "; f~g, g~h, f" + std::string(symbol(fh)) + "h";
                        return out;
                    }
                }
        }
    }
    return out;
}

/// Scans profiles and event triples (pairs when `arity` is 2) in canonical
/// order for the first instance satisfying `match`.
template <class Match, class Describe>
SearchResult search_events(const SearchBounds& b, Budget& budget, std::size_t arity, Match&& match,
                           Describe&& describe) {
    SearchResult out;
    for (std::size_t n = 1; n <= b.max_states; ++n) {
        const auto events = all_events(n);
        const StateSpace space = StateSpace::numbered(n);
        std::uint64_t units = 1;
        for (std::size_t i = 0; i < arity; ++i) units *= events.size();
        for (const PossibilityProfile& p : all_profiles(n, b.max_levels)) {
            budget.charge(units);
            for (const Event& a : events)
                for (const Event& bb : events)
                    for (std::size_t ci = 0; ci < (arity == 3 ? events.size() : 1); ++ci) {
                        const Event& c = events[ci];
                        if (!match(p, a, bb, c)) continue;
                        out.found = true;
                        out.states = n;
                        out.levels = p.levels();
                        out.events = arity == 3 ? std::vector<Event>{a, bb, c} : std::vector<Event>{a, bb};
                        out.witness = format_levels(p) + "; " + describe(p, space, a, bb, c);
                        out.reverified = match(PossibilityProfile(p.levels()), a, bb, c);
                        return out;
                    }
        }
    }
    return out;
}

} // namespace detail

inline SearchResult search_counterexample(SearchProperty property, const SearchBounds& bounds) {
    bounds.validate();
    Budget budget(bounds.ceiling);
    SearchResult out;
    const auto fmt = [](const StateSpace& s, const Event& e) { return s.format(e); };
    switch (property) {
        case SearchProperty::QualProbStrictCycle: out = detail::search_strict_cycle(bounds, budget); break;
        case SearchProperty::ActIndifferenceIntransitivity: out = detail::search_act_indifference(bounds, budget); break;
        case SearchProperty::EventIndifferenceIntransitivity:
            out = detail::search_events(
                bounds, budget, 3,
                [](const PossibilityProfile& p, const Event& a, const Event& b, const Event& c) {
                    return likelihood_compare(p, a, b) == Comparison::EQ &&
                           likelihood_compare(p, b, c) == Comparison::EQ &&
                           likelihood_compare(p, a, c) != Comparison::EQ;
                },
                [&](const PossibilityProfile& p, const StateSpace& s, const Event& a, const Event& b, const Event& c) {
                    return "A=" + fmt(s, a) + " B=" + fmt(s, b) + " C=" + fmt(s, c) + "; A~B, B~C, A" +
                           std::string(symbol(likelihood_compare(p, a, c))) + "C";
                });
            break;
        case SearchProperty::LikelihoodStrictlyRefinesN:
            out = detail::search_events(
                bounds, budget, 2,
                [](const PossibilityProfile& p, const Event& a, const Event& b, const Event&) {
                    return compare_necessity(p, a, b) == Comparison::EQ &&
                           likelihood_compare(p, a, b) == Comparison::GT;
                },
                [&](const PossibilityProfile& p, const StateSpace& s, const Event& a, const Event& b, const Event&) {
                    return "A=" + fmt(s, a) + " B=" + fmt(s, b) + "; N(A)=" + std::to_string(p.necessity(a)) +
                           " = N(B)=" + std::to_string(p.necessity(b)) + " yet A > B";
                });
            break;
        case SearchProperty::LikelihoodStrictlyRefinesPi:
            out = detail::search_events(
                bounds, budget, 2,
                [](const PossibilityProfile& p, const Event& a, const Event& b, const Event&) {
                    return compare_possibility(p, a, b) == Comparison::EQ &&
                           likelihood_compare(p, a, b) == Comparison::GT;
                },
                [&](const PossibilityProfile& p, const StateSpace& s, const Event& a, const Event& b, const Event&) {
                    return "A=" + fmt(s, a) + " B=" + fmt(s, b) + "; Pi(A)=" + std::to_string(p.possibility(a)) +
                           " = Pi(B)=" + std::to_string(p.possibility(b)) + " yet A > B";
                });
            break;
    }
    out.property = property;
    out.bounds = bounds.describe();
    out.instances = budget.used();
    return out;
}

} // namespace qdt::harness
