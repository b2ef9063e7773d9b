#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "qdt/qdt.hpp"

namespace testing_support {

inline oracle::Set to_set(const qdt::Event& e) { return oracle::from_mask(e.bits(), e.universe_size()); }

inline oracle::Image ranks(const qdt::Act& f, const qdt::OutcomeScale& scale) {
    oracle::Image out;
    for (std::size_t s = 0; s < f.size(); ++s) out.push_back(static_cast<int>(scale.rank(f[s])));
    return out;
}

inline oracle::Levels levels(const qdt::PossibilityProfile& p) {
    oracle::Levels out;
    for (auto l : p.levels()) out.push_back(static_cast<int>(l));
    return out;
}

inline int as_int(qdt::Comparison c) { return static_cast<int>(c); }

/// Deterministic generator for the randomized cross-checks.
struct Random {
    std::mt19937_64 rng;
    explicit Random(std::uint64_t seed) : rng(seed) {}

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

    qdt::PossibilityProfile profile(std::size_t n, unsigned max_level) {
        std::vector<qdt::Level> l(n);
        do {
            for (auto& x : l) x = static_cast<qdt::Level>(below(max_level + 1));
        } while (*std::max_element(l.begin(), l.end()) == 0);
        return qdt::PossibilityProfile(l);
    }

    qdt::Event event(std::size_t n) { return qdt::Event(below(std::size_t{1} << n), n); }

    qdt::Act act(std::size_t n, const qdt::OutcomeScale& scale) {
        std::vector<qdt::ConsequenceId> img(n);
        for (auto& x : img) x = static_cast<qdt::ConsequenceId>(below(scale.size()));
        return qdt::Act(img);
    }

    qdt::OutcomeScale scale(std::size_t m, unsigned max_rank) {
        while (true) {
            std::vector<unsigned> r(m);
            for (auto& x : r) x = static_cast<unsigned>(below(max_rank + 1));
            if (*std::min_element(r.begin(), r.end()) != *std::max_element(r.begin(), r.end()))
                return qdt::OutcomeScale::from_ranks(r);
        }
    }
};

inline qdt::StateSpace omelette_space() { return qdt::StateSpace({"fresh", "rotten"}); }

} // namespace testing_support
