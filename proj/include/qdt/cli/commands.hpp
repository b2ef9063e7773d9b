#pragma once

// The CLI verbs, writing reports to a stream and returning exit codes.
// Argument parsing lives in the tool; everything here is testable in-process.

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qdt/cli/fixtures.hpp"
#include "qdt/cli/problem_file.hpp"
#include "qdt/harness/act_checks.hpp"
#include "qdt/harness/event_checks.hpp"
#include "qdt/harness/relation.hpp"
#include "qdt/harness/search.hpp"
#include "qdt/harness/sweeps.hpp"
#include "qdt/lifting.hpp"

namespace qdt::cli {

enum ExitCode : int { kOk = 0, kCounterexample = 1, kUsage = 2 };

enum class ActRule { LiftNecessity, LiftQualProb, ConsequencePessimistic, ConsequenceOptimistic };

inline constexpr std::array<std::pair<ActRule, std::string_view>, 4> kActRules{{
    {ActRule::LiftNecessity, "lift-necessity"},
    {ActRule::LiftQualProb, "lift-qualprob"},
    {ActRule::ConsequencePessimistic, "consequence-pessimistic"},
    {ActRule::ConsequenceOptimistic, "consequence-optimistic"},
}};

inline std::string_view rule_name(ActRule r) {
    for (const auto& [q, n] : kActRules)
        if (q == r) return n;
    return "?";
}

inline ActRule parse_act_rule(std::string_view name) {
    for (const auto& [q, n] : kActRules)
        if (n == name) return q;
    std::string known;
    for (const auto& [q, n] : kActRules) known += (known.empty() ? "" : ", ") + std::string(n);
    throw InputError("unknown rule '" + std::string(name) + "' (expected one of " + known + ")");
}

struct Options {
    std::optional<std::string> rule;
    std::optional<std::string> condition;
    harness::SearchBounds bounds;
    std::string suite;
    bool equal_pi = false;

    ActRule act_rule() const { return rule ? parse_act_rule(*rule) : ActRule::LiftNecessity; }
};

// ---------------------------------------------------------------------------
// Shared rendering

/// The preference relation of `rule` on the file's model, as a function.
inline std::function<Comparison(const Act&, const Act&)> act_relation(const ProblemFile& p, ActRule rule) {
    switch (rule) {
        case ActRule::LiftNecessity: {
            NecessityComparator cmp(p.profile());
            return [cmp, scale = p.scale()](const Act& f, const Act& g) { return lift_compare(cmp, scale, f, g); };
        }
        case ActRule::LiftQualProb: {
            QualProbComparator cmp(p.weights());
            return [cmp, scale = p.scale()](const Act& f, const Act& g) { return lift_compare(cmp, scale, f, g); };
        }
        case ActRule::ConsequencePessimistic:
        case ActRule::ConsequenceOptimistic: {
            // Preimages are compared by possibility; see the README.
            PossibilityComparator cmp(p.profile());
            const Attitude att =
                rule == ActRule::ConsequencePessimistic ? Attitude::Pessimistic : Attitude::Optimistic;
            return [cmp, att, scale = p.scale()](const Act& f, const Act& g) {
                return consequence_lift_compare(cmp, scale, f, g, att);
            };
        }
    }
    throw InternalError("unhandled rule");
}

inline PreferenceMatrix file_matrix(const ProblemFile& p, ActRule rule) {
    return preference_matrix_by(std::span<const NamedAct>(p.acts()), act_relation(p, rule));
}

/// "BIO > BAC > TA" when the relation is a weak order on the acts.
inline std::optional<std::string> ranking(const PreferenceMatrix& m) {
    const std::size_t n = m.size();
    const auto ge = [&](std::size_t i, std::size_t j) { return at_least(m.at(i, j)); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (ge(i, j) && ge(j, k) && !ge(i, k)) return std::nullopt;
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m.at(a, b) == Comparison::GT; });
    std::string out = m.names()[order[0]];
    for (std::size_t i = 1; i < n; ++i)
        out += std::string(" ") + (m.at(order[i - 1], order[i]) == Comparison::GT ? ">" : "~") + " " +
               m.names()[order[i]];
    return out;
}

inline void print_matrix(std::ostream& os, const PreferenceMatrix& m) {
    std::size_t w = 1;
    for (const auto& n : m.names()) w = std::max(w, n.size());
    os << std::string(w, ' ');
    for (const auto& n : m.names()) os << "  " << std::setw(static_cast<int>(w)) << n;
    os << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << std::left << std::setw(static_cast<int>(w)) << m.names()[i] << std::right;
        for (std::size_t j = 0; j < m.size(); ++j) os << "  " << std::setw(static_cast<int>(w)) << symbol(m.at(i, j));
        os << '\n';
    }
}

inline void print_order_summary(std::ostream& os, const PreferenceMatrix& m) {
    if (const auto cycle = m.strict_cycle()) {
        os << "strict cycle: ";
        for (std::size_t i : *cycle) os << m.names()[i] << " > ";
        os << m.names()[cycle->front()] << '\n';
    } else {
        os << "strict cycle: none\n";
    }
    if (const auto r = ranking(m)) os << "ranking: " << *r << '\n';
    else os << "ranking: none (preference is not transitive)\n";
}

/// The act table; the measure row is omitted when `measure` is false.
inline void print_fixture(std::ostream& os, const ProblemFile& p, bool measure = true) {
    const auto& sp = p.space();
    std::size_t w = 4;
    for (const auto& a : p.acts()) w = std::max(w, a.name.size());
    std::vector<std::size_t> cw(sp.size());
    const auto cell = [&](const NamedAct& a, std::size_t s) {
        const auto& c = p.scale().at(a.act[s]);
        return c.name + " (" + std::to_string(c.rank) + ")";
    };
    for (std::size_t s = 0; s < sp.size(); ++s) {
        cw[s] = sp.name(s).size();
        for (const auto& a : p.acts()) cw[s] = std::max(cw[s], cell(a, s).size());
    }
    const auto line = [&](const std::string& head, auto&& value) {
        std::ostringstream row;
        row << std::left << std::setw(static_cast<int>(w)) << head;
        for (std::size_t s = 0; s < sp.size(); ++s) row << "  " << std::setw(static_cast<int>(cw[s])) << value(s);
        std::string text = row.str();
        text.erase(text.find_last_not_of(' ') + 1);
        os << text << '\n';
    };
    line("", [&](std::size_t s) { return sp.name(s); });
    if (measure && p.has_pi())
        line("pi", [&](std::size_t s) { return std::to_string(p.profile().level(s)); });
    else if (measure && p.has_weights())
        line("w", [&](std::size_t s) { return harness::to_string(p.weights().weight(s)); });
    for (const auto& a : p.acts()) line(a.name, [&](std::size_t s) { return cell(a, s); });
}

// ---------------------------------------------------------------------------
// compare

inline int cmd_compare(const ProblemFile& p, const std::string& first, const std::string& second, const Options& o,
                       std::ostream& os) {
    const ActRule rule = o.act_rule();
    if (o.condition && rule != ActRule::LiftNecessity)
        throw InputError("--condition is only supported with --rule lift-necessity");
    const NamedAct& f = p.act(first);
    const NamedAct& g = p.act(second);
    const auto& sp = p.space();
    const auto& scale = p.scale();
    const std::string fg = "[" + f.name + ">=" + g.name + "]";
    const std::string gf = "[" + g.name + ">=" + f.name + "]";
    const std::string sfg = "[" + f.name + ">" + g.name + "]";
    const std::string sgf = "[" + g.name + ">" + f.name + "]";

    if (o.condition) {
        const Event on = parse_event(*o.condition, sp);
        const auto& pi = p.profile();
        const Comparison v = lift_compare_conditional(pi, scale, f.act, g.act, on);
        const Event a = strict_agreement_set(f.act, g.act, scale) & on;
        const Event b = strict_agreement_set(g.act, f.act, scale) & on;
        os << f.name << ' ' << symbol(v) << ' ' << g.name << " given " << sp.format(on) << '\n';
        os << "rule: lift-necessity, conditional\n";
        os << sfg << " & A = " << sp.format(a) << "  Pi = " << pi.possibility(a) << '\n';
        os << sgf << " & A = " << sp.format(b) << "  Pi = " << pi.possibility(b) << '\n';
        if (is_null_event(pi, on)) os << "note: the condition is null (Pi = 0)\n";
        return kOk;
    }

    const Comparison v = act_relation(p, rule)(f.act, g.act);
    os << f.name << ' ' << symbol(v) << ' ' << g.name << '\n';
    os << "rule: " << rule_name(rule) << '\n';
    const Event ge = agreement_set(f.act, g.act, scale);
    const Event le = agreement_set(g.act, f.act, scale);
    switch (rule) {
        case ActRule::LiftNecessity: {
            const auto& pi = p.profile();
            const Event gt = strict_agreement_set(f.act, g.act, scale);
            const Event lt = strict_agreement_set(g.act, f.act, scale);
            os << fg << " = " << sp.format(ge) << "  N = " << pi.necessity(ge) << '\n';
            os << gf << " = " << sp.format(le) << "  N = " << pi.necessity(le) << '\n';
            os << sfg << " = " << sp.format(gt) << "  Pi = " << pi.possibility(gt) << '\n';
            os << sgf << " = " << sp.format(lt) << "  Pi = " << pi.possibility(lt) << '\n';
            break;
        }
        case ActRule::LiftQualProb: {
            const auto& w = p.weights();
            os << fg << " = " << sp.format(ge) << "  P = " << harness::to_string(w.mass(ge)) << '\n';
            os << gf << " = " << sp.format(le) << "  P = " << harness::to_string(w.mass(le)) << '\n';
            break;
        }
        case ActRule::ConsequencePessimistic:
        case ActRule::ConsequenceOptimistic: {
            const bool pess = rule == ActRule::ConsequencePessimistic;
            const auto support = consequence_support(PossibilityComparator(p.profile()), scale, f.act, g.act);
            const auto show = [&](const std::string& tag, const std::vector<ConsequenceId>& xs) {
                os << tag << " = {";
                std::optional<unsigned> ext;
                for (std::size_t i = 0; i < xs.size(); ++i) {
                    os << (i ? "," : "") << scale.at(xs[i]).name;
                    const unsigned r = scale.rank(xs[i]);
                    ext = !ext ? r : (pess ? std::min(*ext, r) : std::max(*ext, r));
                }
                os << "}  " << (pess ? "min" : "max") << " rank = " << (ext ? std::to_string(*ext) : "none") << '\n';
            };
            show("B(" + f.name + ">=" + g.name + ")", support.first);
            show("B(" + g.name + ">=" + f.name + ")", support.second);
            break;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// matrix

inline int cmd_matrix(const ProblemFile& p, const Options& o, std::ostream& os) {
    const ActRule rule = o.act_rule();
    if (o.condition) throw InputError("matrix does not take --condition");
    const PreferenceMatrix m = file_matrix(p, rule);
    os << "rule: " << rule_name(rule) << '\n';
    print_matrix(os, m);
    print_order_summary(os, m);
    return kOk;
}

// ---------------------------------------------------------------------------
// nm

inline int cmd_nm(const ProblemFile& p, const std::string& a_text, const std::string& b_text, std::ostream& os) {
    const auto& pi = p.profile();
    const auto& sp = p.space();
    const Event a = parse_event(a_text, sp);
    const Event b = parse_event(b_text, sp);
    const bool yes = nm_entails(pi, a, b);
    os << sp.format(a) << (yes ? " |~ " : " |/~ ") << sp.format(b) << '\n';
    os << "Pi(A & B) = " << pi.possibility(a & b) << ", Pi(A - B) = " << pi.possibility(a - b) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// check

inline constexpr std::array<std::string_view, 7> kSuites{"savage",     "p1prime",   "events", "likelihood",
                                                          "systemP",    "roundtrip", "axioms"};

namespace detail {

inline std::string file_label(const ProblemFile& p, bool pi) {
    return "file " + (pi ? harness::format_levels(p.profile()) : harness::format_weights(p.weights()));
}

template <EventComparator C>
harness::ActModel<C> file_model(const ProblemFile& p, C cmp, std::string label) {
    return harness::ActModel<C>{p.space(), p.scale(), std::move(cmp), p.acts(), false, std::move(label)};
}

inline void require_necessity(const Options& o, std::string_view suite) {
    if (o.rule && o.act_rule() != ActRule::LiftNecessity)
        throw InputError("suite '" + std::string(suite) + "' checks lift-necessity only");
}

inline harness::CheckReport check_file(const ProblemFile& p, const Options& o) {
    using namespace harness;
    const std::string& suite = o.suite;
    if (suite == "p1prime") {
        const ActRule rule = o.act_rule();
        if (rule == ActRule::LiftQualProb) {
            const auto model = file_model(p, QualProbComparator(p.weights()), file_label(p, false));
            auto r = check_p1prime(ActAnalysis(model));
            r.name = "P1' (lift-qualprob)";
            return r;
        }
        if (rule != ActRule::LiftNecessity) throw InputError("suite 'p1prime' checks lift-necessity or lift-qualprob");
        const auto model = file_model(p, NecessityComparator(p.profile()), file_label(p, true));
        auto r = check_p1prime(ActAnalysis(model));
        r.name = "P1' (lift-necessity)";
        return r;
    }
    if (suite == "axioms") {
        if (o.rule && o.act_rule() == ActRule::LiftQualProb)
            return check_axioms_of_relation(ExplicitRelation::from(QualProbComparator(p.weights())),
                                            AxiomFamily::QualitativeProbability);
        require_necessity(o, suite);
        return check_axioms_of_relation(ExplicitRelation::from(NecessityComparator(p.profile())),
                                        AxiomFamily::NecessityOrdering);
    }
    require_necessity(o, suite);
    if (!p.has_pi()) throw InputError("suite '" + suite + "' needs pi levels; the problem file gives none");
    const auto& pi = p.profile();
    const std::string label = file_label(p, true);
    if (suite == "savage") {
        const auto model = file_model(p, NecessityComparator(pi), label);
        const ActAnalysis an(model);
        CheckReport r;
        r.name = "Savage suite (lift-necessity)";
        r.bounds = label;
        r.absorb(check_p1prime(an));
        r.absorb(check_sure_thing(an));
        r.absorb(check_p3_p4_u(an));
        r.absorb(check_lifting_forms(an));
        return r;
    }
    if (suite == "events") return check_event_properties(pi, p.space(), label);
    if (suite == "likelihood") return check_likelihood_properties(pi, p.space(), label);
    if (suite == "systemP") return check_system_p(pi, p.space(), label);
    if (suite == "roundtrip") return check_representation_roundtrip(file_model(p, NecessityComparator(pi), label));
    throw InternalError("unhandled suite");
}

inline harness::CheckReport check_sweep(const Options& o) {
    using namespace harness;
    const std::string& suite = o.suite;
    if (suite == "p1prime") {
        switch (o.act_rule()) {
            case ActRule::LiftNecessity: return sweep_p1prime(o.bounds, UncertaintyComparator::Kind::Necessity);
            case ActRule::LiftQualProb: return sweep_p1prime(o.bounds, UncertaintyComparator::Kind::QualProb);
            default: throw InputError("suite 'p1prime' checks lift-necessity or lift-qualprob");
        }
    }
    if (suite == "axioms") return sweep_axioms(o.bounds);
    require_necessity(o, suite);
    if (suite == "savage") return sweep_savage(o.bounds);
    if (suite == "events") return sweep_event_properties(o.bounds);
    if (suite == "likelihood") return sweep_likelihood(o.bounds);
    if (suite == "systemP") return sweep_system_p(o.bounds);
    if (suite == "roundtrip") return sweep_roundtrip(o.bounds);
    throw InternalError("unhandled suite");
}

} // namespace detail

/// Runs a suite on the file's model, or sweeps every model within the bounds
/// when no file is given.
inline int cmd_check(const ProblemFile* p, const Options& o, std::ostream& os) {
    if (std::find(kSuites.begin(), kSuites.end(), o.suite) == kSuites.end()) {
        std::string known;
        for (auto s : kSuites) known += (known.empty() ? "" : ", ") + std::string(s);
        throw InputError("unknown suite '" + o.suite + "' (expected one of " + known + ")");
    }
    if (o.condition) throw InputError("check does not take --condition");
    const harness::CheckReport r = p ? detail::check_file(*p, o) : detail::check_sweep(o);
    harness::print(os, r);
    return r.passed() ? kOk : kCounterexample;
}

// ---------------------------------------------------------------------------
// search

/// Exit 0 when a re-verified witness is found, 1 when the bounds hold none.
inline int cmd_search(const std::string& property, const Options& o, std::ostream& os) {
    const auto prop = harness::parse_search_property(property);
    if (!prop) {
        std::string known;
        for (const auto& [q, n] : harness::kSearchProperties) known += (known.empty() ? "" : ", ") + std::string(n);
        throw InputError("unknown search property '" + property + "' (expected one of " + known + ")");
    }
    const auto r = harness::search_counterexample(*prop, o.bounds);
    harness::print(os, r);
    if (r.found && !r.reverified) throw InternalError("search witness failed to re-verify");
    return r.found ? kOk : kCounterexample;
}

// ---------------------------------------------------------------------------
// demo

namespace detail {

inline void omelette_regime(std::ostream& os, const std::string& title, Level fresh, Level rotten, ActRule rule) {
    const ProblemFile p = fixtures::omelette(fresh, rotten);
    os << "\n" << title << " (pi fresh=" << fresh << ", rotten=" << rotten << "), rule " << rule_name(rule) << '\n';
    const PreferenceMatrix m = file_matrix(p, rule);
    print_matrix(os, m);
    print_order_summary(os, m);
}

} // namespace detail

inline int cmd_demo(const std::string& name, const Options& o, std::ostream& os) {
    if (name == "omelette") {
        const ActRule rule = o.act_rule();
        if (rule == ActRule::LiftQualProb) throw InputError("the omelette demo has pi levels, not weights");
        os << "omelette: add a sixth egg, which may be rotten, to a five-egg omelette\n";
        os << "acts: BIO break it into the omelette, BAC break it into a cup, TA throw it away\n\n";
        print_fixture(os, fixtures::omelette(1, 1), false);
        if (!o.equal_pi) {
            detail::omelette_regime(os, "fresh more plausible", 2, 1, rule);
            detail::omelette_regime(os, "rotten more plausible", 1, 2, rule);
        }
        detail::omelette_regime(os, "equal plausibility", 1, 1, rule);
        os << '\n';
        switch (rule) {
            case ActRule::LiftNecessity:
                if (o.equal_pi) os << "conclusion: with no opinion on the egg, all acts are indifferent\n";
                else
                    os << "conclusion: break the egg into the omelette if it is probably fresh, throw it away if it "
                          "is probably rotten; with no opinion all acts are indifferent\n";
                break;
            case ActRule::ConsequencePessimistic:
                os << "conclusion: the cautious rule breaks the egg into a cup under ignorance (BAC on top)\n";
                break;
            case ActRule::ConsequenceOptimistic:
                os << "conclusion: the optimistic rule breaks the egg into the omelette under ignorance (BIO on top)\n";
                break;
            default: break;
        }
        return kOk;
    }
    if (name == "condorcet") {
        if (o.rule && o.act_rule() != ActRule::LiftQualProb)
            throw InputError("the condorcet demo lifts a probability; it only supports --rule lift-qualprob");
        const ProblemFile p = fixtures::condorcet();
        os << "condorcet: lifting a probability through the lifting rule, with utilities used only as an order\n\n";
        print_fixture(os, p);
        os << "\nrule lift-qualprob\n";
        const auto& w = p.weights();
        const auto& sp = p.space();
        const std::pair<const char*, const char*> pairs[] = {{"f", "g"}, {"g", "h"}, {"h", "f"}};
        for (const auto& [a, b] : pairs) {
            const Act& f = p.act(a).act;
            const Act& g = p.act(b).act;
            const Event ge = agreement_set(f, g, p.scale());
            const Event le = agreement_set(g, f, p.scale());
            const Comparison v = lift_compare(QualProbComparator(w), p.scale(), f, g);
            os << a << ' ' << symbol(v) << ' ' << b << ": P([" << a << ">=" << b << "]) = P(" << sp.format(ge)
               << ") = " << harness::to_string(w.mass(ge)) << " vs P([" << b << ">=" << a << "]) = P("
               << sp.format(le) << ") = " << harness::to_string(w.mass(le)) << '\n';
        }
        os << '\n';
        const PreferenceMatrix m = file_matrix(p, ActRule::LiftQualProb);
        print_matrix(os, m);
        print_order_summary(os, m);
        os << "\nconclusion: the lifted preference is complete but its strict part cycles (f > g > h > f)\n";
        return kOk;
    }
    throw InputError("unknown demo '" + name + "' (expected omelette or condorcet)");
}

} // namespace qdt::cli
