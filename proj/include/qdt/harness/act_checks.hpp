#pragma once

// Exhaustive checks of the act-level properties of a lifted preference on one
// model: a state space, a consequence scale, an event comparator and a list
// of acts. Every counterexample is replayed through the public operations
// before it is reported.

#include <optional>
#include <string>
#include <vector>

#include "qdt/core.hpp"
#include "qdt/harness/report.hpp"
#include "qdt/lifting.hpp"
#include "qdt/uncertainty.hpp"

namespace qdt::harness {

template <EventComparator C>
struct ActModel {
    StateSpace space;
    OutcomeScale scale;
    C cmp;
    std::vector<NamedAct> acts;
    /// True when `acts` is every map from states to consequences; some
    /// definitions quantify over all acts and are only exact then.
    bool all_acts = false;
    std::string label;
};

/// Acts over `scale` named by their images.
inline std::vector<NamedAct> named_acts(const std::vector<Act>& acts, const OutcomeScale& scale) {
    std::vector<NamedAct> out;
    out.reserve(acts.size());
    for (const Act& a : acts) out.push_back({format_act(a, scale), a});
    return out;
}

template <EventComparator C>
ActModel<C> full_act_model(StateSpace space, OutcomeScale scale, C cmp, std::string label) {
    auto acts = named_acts(all_acts(space.size(), scale), scale);
    return ActModel<C>{std::move(space), std::move(scale), std::move(cmp), std::move(acts), true, std::move(label)};
}

/// Cached verdict tables for one model.
template <EventComparator C>
class ActAnalysis {
public:
    struct Conditional {
        std::optional<Comparison> verdict; // f vs g given the event, by splicing
        bool filler_independent = true;
        std::size_t filler_a = 0; // first filler
        std::size_t filler_b = 0; // first filler whose verdict differs
        Comparison verdict_a = Comparison::EQ;
        Comparison verdict_b = Comparison::EQ;
    };

    explicit ActAnalysis(const ActModel<C>& model) : m_(model), k_(model.acts.size()) {
        verdicts_.reserve(k_ * k_);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < k_; ++j) verdicts_.push_back(lift(i, j));
    }

    const ActModel<C>& model() const noexcept { return m_; }
    std::size_t size() const noexcept { return k_; }
    Comparison verdict(std::size_t i, std::size_t j) const { return verdicts_[i * k_ + j]; }
    const Act& act(std::size_t i) const { return m_.acts[i].act; }
    const std::string& name(std::size_t i) const { return m_.acts[i].name; }

    Comparison lift(std::size_t i, std::size_t j) const { return lift_compare(m_.cmp, m_.scale, act(i), act(j)); }

    /// f_i vs f_j given `on`, with the model's acts as fillers.
    const Conditional& conditional(const Event& on, std::size_t i, std::size_t j) const {
        if (conditionals_.empty()) build_conditionals();
        return conditionals_[(static_cast<std::size_t>(on.bits()) * k_ + i) * k_ + j];
    }

    /// Null by definition: every pair of listed acts is indifferent given it.
    bool null_by_definition(const Event& on) const {
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < k_; ++j)
                if (conditional(on, i, j).verdict != Comparison::EQ) return false;
        return true;
    }

    std::string dump(std::initializer_list<std::size_t> acts) const {
        std::string out = m_.label;
        const char* tags[] = {"f", "g", "h", "k"};
        std::size_t t = 0;
        for (std::size_t i : acts) out += "; " + std::string(tags[t++ % 4]) + "=" + name(i);
        return out;
    }

private:
    void build_conditionals() const {
        const std::size_t n = m_.space.size();
        const std::size_t events = std::size_t{1} << n;
        conditionals_.resize(events * k_ * k_);
        for (std::size_t e = 0; e < events; ++e) {
            const Event on(e, n);
            for (std::size_t i = 0; i < k_; ++i)
                for (std::size_t j = 0; j < k_; ++j) {
                    Conditional& c = conditionals_[(e * k_ + i) * k_ + j];
                    bool ge = true;
                    bool le = true;
                    for (std::size_t h = 0; h < k_; ++h) {
                        const Comparison v =
                            lift_compare(m_.cmp, m_.scale, splice(act(i), on, act(h)), splice(act(j), on, act(h)));
                        if (h == 0) {
                            c.verdict_a = v;
                        } else if (c.filler_independent && v != c.verdict_a) {
                            c.filler_independent = false;
                            c.filler_b = h;
                            c.verdict_b = v;
                        }
                        ge = ge && at_least(v);
                        le = le && at_least(reverse(v));
                    }
                    if (ge && le)
                        c.verdict = Comparison::EQ;
                    else if (ge)
                        c.verdict = Comparison::GT;
                    else if (le)
                        c.verdict = Comparison::LT;
                }
        }
    }

    const ActModel<C>& m_;
    std::size_t k_;
    std::vector<Comparison> verdicts_;
    mutable std::vector<Conditional> conditionals_;
};

// ---------------------------------------------------------------------------
// P1': completeness, indifference reflexive/symmetric, strict part
// irreflexive and transitive, and f > g, g ~ h => f >= h.

template <EventComparator C>
CheckReport check_p1prime(const ActAnalysis<C>& an) {
    CheckReport r;
    r.name = "P1'";
    r.bounds = an.model().label;
    const std::size_t k = an.size();
    auto& complete = r.item("complete");
    auto& refl = r.item("indifference reflexive");
    auto& sym = r.item("indifference symmetric");
    auto& irrefl = r.item("strict irreflexive");
    auto& trans = r.item("strict transitive");
    auto& mixed = r.item("strict then indifferent");

    for (std::size_t i = 0; i < k; ++i) {
        ++refl.instances;
        ++irrefl.instances;
        if (an.verdict(i, i) != Comparison::EQ) refl.fail(an.dump({i}), an.lift(i, i) != Comparison::EQ);
        if (an.verdict(i, i) == Comparison::GT) irrefl.fail(an.dump({i}), an.lift(i, i) == Comparison::GT);
        for (std::size_t j = 0; j < k; ++j) {
            ++complete.instances;
            ++sym.instances;
            const Comparison ij = an.verdict(i, j);
            const Comparison ji = an.verdict(j, i);
            if (!at_least(ij) && !at_least(ji))
                complete.fail(an.dump({i, j}), !at_least(an.lift(i, j)) && !at_least(an.lift(j, i)));
            if (ij == Comparison::EQ && ji != Comparison::EQ)
                sym.fail(an.dump({i, j}), an.lift(i, j) == Comparison::EQ && an.lift(j, i) != Comparison::EQ);
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (an.verdict(i, j) != Comparison::GT) {
                // Still counted: every triple is an instance of both properties.
                trans.instances += k;
                mixed.instances += k;
                continue;
            }
            for (std::size_t h = 0; h < k; ++h) {
                ++trans.instances;
                ++mixed.instances;
                const Comparison jh = an.verdict(j, h);
                const Comparison ih = an.verdict(i, h);
                if (jh == Comparison::GT && ih != Comparison::GT)
                    trans.fail(an.dump({i, j, h}) + " (f>g, g>h, f " + std::string(symbol(ih)) + " h)",
                               an.lift(i, j) == Comparison::GT && an.lift(j, h) == Comparison::GT &&
                                   an.lift(i, h) != Comparison::GT);
                if (jh == Comparison::EQ && !at_least(ih))
                    mixed.fail(an.dump({i, j, h}) + " (f>g, g~h, f<h)",
                               an.lift(i, j) == Comparison::GT && an.lift(j, h) == Comparison::EQ &&
                                   !at_least(an.lift(i, h)));
            }
        }
    return r;
}

// ---------------------------------------------------------------------------
// P2: f|A + h|notA vs g|A + h|notA does not depend on h.

template <EventComparator C>
CheckReport check_sure_thing(const ActAnalysis<C>& an) {
    CheckReport r;
    r.name = "P2 (sure thing)";
    r.bounds = an.model().label;
    auto& item = r.item("sure-thing principle");
    const auto& m = an.model();
    const std::size_t n = m.space.size();
    for (const Event& on : all_events(n))
        for (std::size_t i = 0; i < an.size(); ++i)
            for (std::size_t j = 0; j < an.size(); ++j) {
                item.instances += an.size();
                const auto& c = an.conditional(on, i, j);
                if (c.filler_independent) continue;
                const Act& ha = an.act(c.filler_a);
                const Act& hb = an.act(c.filler_b);
                const Comparison va = lift_compare(m.cmp, m.scale, splice(an.act(i), on, ha), splice(an.act(j), on, ha));
                const Comparison vb = lift_compare(m.cmp, m.scale, splice(an.act(i), on, hb), splice(an.act(j), on, hb));
                item.fail(an.dump({i, j, c.filler_a, c.filler_b}) + " A=" + m.space.format(on) + " (verdicts " +
                              std::string(symbol(c.verdict_a)) + " vs " + std::string(symbol(c.verdict_b)) + ")",
                          va != vb);
            }
    return r;
}

// ---------------------------------------------------------------------------
// P3, P4 and the unanimity property U.

template <EventComparator C>
CheckReport check_p3_p4_u(const ActAnalysis<C>& an) {
    CheckReport r;
    r.name = "P3/P4/U";
    r.bounds = an.model().label;
    const auto& m = an.model();
    const std::size_t n = m.space.size();
    const auto events = all_events(n);
    std::vector<Act> fillers;
    for (const auto& a : m.acts) fillers.push_back(a.act);

    // P3: for non-null A, fx >=_A fy iff x >= y.
    auto& p3 = r.item("P3 constant acts");
    for (const Event& on : events) {
        if (an.null_by_definition(on)) continue;
        for (std::size_t x = 0; x < m.scale.size(); ++x)
            for (std::size_t y = 0; y < m.scale.size(); ++y) {
                ++p3.instances;
                const auto cx = static_cast<ConsequenceId>(x);
                const auto cy = static_cast<ConsequenceId>(y);
                const Act fx = constant_act(cx, n, m.scale);
                const Act fy = constant_act(cy, n, m.scale);
                const auto got = conditional_compare_by_splicing(m.cmp, m.scale, fx, fy, on, fillers);
                const Comparison want = m.scale.compare(cx, cy);
                if (got != want)
                    p3.fail(m.label + "; A=" + m.space.format(on) + " x=" + m.scale.at(cx).name +
                                " y=" + m.scale.at(cy).name,
                            conditional_compare_by_splicing(m.cmp, m.scale, fx, fy, on, fillers) != want);
            }
    }

    // P4: the two-outcome event comparison is independent of the pair.
    auto& p4 = r.item("P4 pair independence");
    for (const Event& a : events)
        for (const Event& b : events) {
            ++p4.instances;
            try {
                (void)event_compare_via_acts(m.cmp, m.scale, a, b);
            } catch (const InternalError& e) {
                p4.fail(m.label + "; A=" + m.space.format(a) + " B=" + m.space.format(b) + ": " + e.what(), true);
            }
        }

    // U: f >=_A g and f ~_notA g imply f >= g.
    auto& u = r.item("U unanimity");
    for (const Event& on : events)
        for (std::size_t i = 0; i < an.size(); ++i)
            for (std::size_t j = 0; j < an.size(); ++j) {
                ++u.instances;
                const auto in = an.conditional(on, i, j).verdict;
                const auto out = an.conditional(on.complement(), i, j).verdict;
                if (in && at_least(*in) && out == Comparison::EQ && !at_least(an.verdict(i, j))) {
                    const auto rin = conditional_compare_by_splicing(m.cmp, m.scale, an.act(i), an.act(j), on, fillers);
                    const auto rout = conditional_compare_by_splicing(m.cmp, m.scale, an.act(i), an.act(j),
                                                                      on.complement(), fillers);
                    u.fail(an.dump({i, j}) + " A=" + m.space.format(on),
                           rin && at_least(*rin) && rout == Comparison::EQ && !at_least(an.lift(i, j)));
                }
            }
    return r;
}

// ---------------------------------------------------------------------------
// Equivalent formulations of the necessity-based rule.

inline CheckReport check_lifting_forms(const ActAnalysis<NecessityComparator>& an) {
    CheckReport r;
    r.name = "lifting forms";
    r.bounds = an.model().label;
    const auto& m = an.model();
    const auto& profile = m.cmp.profile();
    const auto events = all_events(m.space.size());

    auto& nf = r.item("N-form = Pi-form");
    for (std::size_t i = 0; i < an.size(); ++i)
        for (std::size_t j = 0; j < an.size(); ++j) {
            ++nf.instances;
            if (an.verdict(i, j) != lift_compare_pi_form(profile, m.scale, an.act(i), an.act(j)))
                nf.fail(an.dump({i, j}), lift_compare(m.cmp, m.scale, an.act(i), an.act(j)) !=
                                             lift_compare_pi_form(profile, m.scale, an.act(i), an.act(j)));
        }

    auto& cn = r.item("conditional Pi-form = N-form");
    auto& cs = r.item("conditional Pi-form = splicing");
    for (const Event& on : events)
        for (std::size_t i = 0; i < an.size(); ++i)
            for (std::size_t j = 0; j < an.size(); ++j) {
                ++cn.instances;
                ++cs.instances;
                const Comparison pi = lift_compare_conditional(profile, m.scale, an.act(i), an.act(j), on);
                const Comparison nform = lift_compare_conditional_n_form(profile, m.scale, an.act(i), an.act(j), on);
                if (pi != nform) cn.fail(an.dump({i, j}) + " A=" + m.space.format(on), true);
                if (an.conditional(on, i, j).verdict != pi) cs.fail(an.dump({i, j}) + " A=" + m.space.format(on), true);
            }

    if (m.all_acts) {
        auto& nl = r.item("null iff Pi = 0");
        for (const Event& on : events) {
            ++nl.instances;
            if (an.null_by_definition(on) != is_null_event(profile, on))
                nl.fail(m.label + "; A=" + m.space.format(on), true);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Representation round trip: recover the consequence preorder from constant
// acts and the state preorder from singleton events, re-lift through the
// necessity ordering of the recovered state preorder, and compare.

struct ExtractedModel {
    PossibilityProfile profile;
    OutcomeScale scale;
};

/// `prefers(f, g)` is the black-box act relation.
template <class ActRelation>
ExtractedModel extract_representation(std::size_t states, const OutcomeScale& scale, ActRelation&& prefers) {
    const std::size_t m = scale.size();
    std::vector<Consequence> ranks;
    ConsequenceId hi = 0;
    ConsequenceId lo = 0;
    bool found_pair = false;
    for (std::size_t x = 0; x < m; ++x) {
        unsigned below = 0;
        for (std::size_t y = 0; y < m; ++y) {
            const Comparison c = prefers(constant_act(static_cast<ConsequenceId>(x), states, scale),
                                         constant_act(static_cast<ConsequenceId>(y), states, scale));
            if (c == Comparison::GT) {
                ++below;
                if (!found_pair) {
                    hi = static_cast<ConsequenceId>(x);
                    lo = static_cast<ConsequenceId>(y);
                    found_pair = true;
                }
            }
        }
        ranks.push_back({scale.at(static_cast<ConsequenceId>(x)).name, below});
    }
    if (!found_pair) throw PreconditionError("act relation ranks every constant act equally");
    OutcomeScale extracted_scale(std::move(ranks));

    const Act bottom = constant_act(lo, states, scale);
    const auto omega = [&](std::size_t s) { return two_outcome_act(Event::singleton(states, s), hi, lo, scale); };
    std::vector<bool> null(states);
    for (std::size_t s = 0; s < states; ++s) null[s] = prefers(omega(s), bottom) == Comparison::EQ;
    std::vector<Level> levels(states, 0);
    for (std::size_t s = 0; s < states; ++s) {
        if (null[s]) continue;
        Level l = 1;
        for (std::size_t t = 0; t < states; ++t)
            if (!null[t] && prefers(omega(s), omega(t)) == Comparison::GT) ++l;
        levels[s] = l;
    }
    return {PossibilityProfile(std::move(levels)), std::move(extracted_scale)};
}

inline CheckReport check_representation_roundtrip(const ActModel<NecessityComparator>& m) {
    CheckReport r;
    r.name = "representation round trip";
    r.bounds = m.label;
    const std::size_t n = m.space.size();
    const auto original = [&](const Act& f, const Act& g) { return lift_compare(m.cmp, m.scale, f, g); };
    const ExtractedModel ex = extract_representation(n, m.scale, original);
    const NecessityComparator rebuilt(ex.profile);

    auto& cons = r.item("consequence preorder recovered");
    for (std::size_t x = 0; x < m.scale.size(); ++x)
        for (std::size_t y = 0; y < m.scale.size(); ++y) {
            ++cons.instances;
            const auto cx = static_cast<ConsequenceId>(x);
            const auto cy = static_cast<ConsequenceId>(y);
            if (ex.scale.compare(cx, cy) != m.scale.compare(cx, cy))
                cons.fail(m.label + "; x=" + m.scale.at(cx).name + " y=" + m.scale.at(cy).name, true);
        }

    auto& states = r.item("state preorder recovered");
    const auto& p = m.cmp.profile();
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            ++states.instances;
            if (compare_values(ex.profile.level(s), ex.profile.level(t)) != compare_values(p.level(s), p.level(t)))
                states.fail(m.label + "; s=" + m.space.name(s) + " t=" + m.space.name(t) + " recovered " +
                                format_levels(ex.profile),
                            true);
        }

    auto& trip = r.item("re-lifted verdicts identical");
    for (const auto& f : m.acts)
        for (const auto& g : m.acts) {
            ++trip.instances;
            const Comparison before = original(f.act, g.act);
            const Comparison after = lift_compare(rebuilt, ex.scale, f.act, g.act);
            if (before != after)
                trip.fail(m.label + "; f=" + f.name + " g=" + g.name + " original " + std::string(symbol(before)) +
                              " re-lifted " + std::string(symbol(after)),
                          lift_compare(m.cmp, m.scale, f.act, g.act) != lift_compare(rebuilt, ex.scale, f.act, g.act));
        }
    return r;
}

} // namespace qdt::harness
