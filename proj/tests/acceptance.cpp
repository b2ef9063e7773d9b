// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qdt/cli/commands.hpp"
#include "qdt/qdt.hpp"

using namespace qdt;
using namespace qdt::harness;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs <= limit_seconds;
    const bool pass = out.ok && in_time;
    if (!pass) ++failures;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << t.str() << " s, limit "
              << limit_seconds << " s)";
    if (!in_time) std::cout << " [too slow]";
    if (!out.detail.empty()) std::cout << " - " << out.detail;
    std::cout << std::endl;
}

SearchBounds bounds(std::size_t states, std::size_t levels, std::size_t ranks) {
    SearchBounds b;
    b.max_states = states;
    b.max_levels = levels;
    b.max_ranks = ranks;
    return b;
}

Outcome from_report(const CheckReport& r) {
    std::uint64_t instances = 0;
    for (const auto& i : r.items) instances += i.instances;
    if (r.passed()) return {true, std::to_string(r.items.size()) + " properties, " + std::to_string(instances) + " instances"};
    for (const auto& i : r.items)
        if (!i.passed) return {false, i.property + ": " + i.counterexample};
    return {false, "failed"};
}

oracle::Image image_ranks(const Act& f, const OutcomeScale& s) {
    oracle::Image out;
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(static_cast<int>(s.rank(f[i])));
    return out;
}

} // namespace

int main() {
    criterion(1, "probability lifted through the lifting rule cycles on the six-state example", 1.0, [] {
        const auto p = cli::fixtures::condorcet();
        const QualProbComparator cmp(p.weights());
        const auto& w = p.weights();
        const std::pair<const char*, const char*> pairs[] = {{"f", "g"}, {"g", "h"}, {"h", "f"}};
        std::string sums;
        for (const auto& [a, b] : pairs) {
            const Act& f = p.act(a).act;
            const Act& g = p.act(b).act;
            const Rational ge = w.mass(agreement_set(f, g, p.scale()));
            const Rational le = w.mass(agreement_set(g, f, p.scale()));
            if (ge != Rational(5, 9) || le != Rational(4, 9) ||
                lift_compare(cmp, p.scale(), f, g) != Comparison::GT)
                return Outcome{false, std::string(a) + " vs " + b + ": " + to_string(ge) + " vs " + to_string(le)};
            sums += std::string(sums.empty() ? "" : ", ") + a + ">" + b + " 5/9 vs 4/9";
        }
        const auto m = preference_matrix(cmp, p.scale(), std::span<const NamedAct>(p.acts()));
        if (!m.strict_cycle()) return Outcome{false, "matrix has no strict cycle"};
        return Outcome{true, sums};
    });

    criterion(2, "omelette preferences under the three plausibility regimes", 1.0, [] {
        const auto ranking_of = [](Level fresh, Level rotten) {
            const auto p = cli::fixtures::omelette(fresh, rotten);
            const auto m = cli::file_matrix(p, cli::ActRule::LiftNecessity);
            const auto r = cli::ranking(m);
            return r ? *r : std::string("none");
        };
        const std::string a = ranking_of(2, 1), b = ranking_of(1, 2), c = ranking_of(1, 1);
        const bool ok = a == "BIO > BAC > TA" && b == "TA > BAC > BIO" && c == "BIO ~ BAC ~ TA";
        return Outcome{ok, "fresh: " + a + "; rotten: " + b + "; equal: " + c};
    });

    criterion(3, "Savage suite on every model with 3 states, 3 levels, 3 ranks", 120.0,
              [] { return from_report(sweep_savage(bounds(3, 3, 3))); });

    criterion(4, "System P and rational monotony on every profile up to 4 states, 3 levels", 300.0,
              [] { return from_report(sweep_system_p(bounds(4, 3, 2))); });

    criterion(5, "event and likelihood properties up to 4 states, with refinement witnesses", 300.0, [] {
        CheckReport r = sweep_event_properties(bounds(4, 3, 2));
        r.absorb(sweep_likelihood(bounds(4, 3, 2)));
        for (const char* w : {"witness exists: likelihood-strictly-refines-N", "witness exists: likelihood-strictly-refines-Pi"})
            if (!r.find(w)) return Outcome{false, std::string("missing item ") + w};
        return from_report(r);
    });

    criterion(6, "intransitive indifference found and re-verified for acts and for events, each under 30 s", 60.0, [] {
        const auto timed = [](SearchProperty prop, const SearchBounds& b, double& secs) {
            const auto start = Clock::now();
            auto r = search_counterexample(prop, b);
            secs = std::chrono::duration<double>(Clock::now() - start).count();
            return r;
        };
        double act_secs = 0, event_secs = 0;
        const auto acts = timed(SearchProperty::ActIndifferenceIntransitivity, bounds(3, 3, 2), act_secs);
        const auto events = timed(SearchProperty::EventIndifferenceIntransitivity, bounds(3, 2, 2), event_secs);
        if (act_secs > 30.0 || event_secs > 30.0) return Outcome{false, "a search exceeded 30 s"};
        if (!acts.found || !acts.reverified) return Outcome{false, "no re-verified act witness"};
        if (!events.found || !events.reverified) return Outcome{false, "no re-verified event witness"};
        // Independent replay against the brute-force definitions.
        const oracle::Levels al(acts.levels.begin(), acts.levels.end());
        const auto scale = strict_scale(2);
        const auto f = image_ranks(acts.acts[0], scale), g = image_ranks(acts.acts[1], scale),
                   h = image_ranks(acts.acts[2], scale);
        if (oracle::lift_necessity(al, f, g) != 0 || oracle::lift_necessity(al, g, h) != 0 ||
            oracle::lift_necessity(al, f, h) == 0)
            return Outcome{false, "act witness rejected by oracle"};
        const oracle::Levels el(events.levels.begin(), events.levels.end());
        const auto set = [&](const Event& e) { return oracle::from_mask(e.bits(), e.universe_size()); };
        const auto& ev = events.events;
        if (oracle::likelihood(el, set(ev[0]), set(ev[1])) != 0 || oracle::likelihood(el, set(ev[1]), set(ev[2])) != 0 ||
            oracle::likelihood(el, set(ev[0]), set(ev[2])) == 0)
            return Outcome{false, "event witness rejected by oracle"};
        return Outcome{true, "acts: " + acts.witness + " | events: " + events.witness};
    });

    criterion(7, "representation round trip on every model with 3 states, 3 levels, 3 ranks", 120.0,
              [] { return from_report(sweep_roundtrip(bounds(3, 3, 3))); });

    criterion(8, "consequence rules under equal plausibility: cautious prefers BAC, optimistic BIO", 1.0, [] {
        const auto p = cli::fixtures::omelette(1, 1);
        const PossibilityComparator pi(p.profile());
        const Act& bio = p.act("BIO").act;
        const Act& bac = p.act("BAC").act;
        const Comparison pess = consequence_lift_compare(pi, p.scale(), bac, bio, Attitude::Pessimistic);
        const Comparison opt = consequence_lift_compare(pi, p.scale(), bio, bac, Attitude::Optimistic);
        const oracle::Levels lv(p.profile().levels().begin(), p.profile().levels().end());
        const auto cmp = [&](const oracle::Set& a, const oracle::Set& b) {
            return oracle::sign(oracle::possibility(lv, a) - oracle::possibility(lv, b));
        };
        const int o_pess = oracle::consequence_rule(image_ranks(bac, p.scale()), image_ranks(bio, p.scale()), cmp, true);
        const int o_opt = oracle::consequence_rule(image_ranks(bio, p.scale()), image_ranks(bac, p.scale()), cmp, false);
        const bool ok = pess == Comparison::GT && opt == Comparison::GT && o_pess == 1 && o_opt == 1;
        return Outcome{ok, std::string("pessimistic BAC ") + std::string(symbol(pess)) + " BIO, optimistic BIO " +
                               std::string(symbol(opt)) + " BAC"};
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
