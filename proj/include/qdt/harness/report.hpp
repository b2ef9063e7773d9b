#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <deque>
#include <vector>

#include "qdt/core.hpp"
#include "qdt/uncertainty.hpp"

namespace qdt::harness {

/// The enumeration would visit more instances than the configured ceiling.
struct CeilingExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchBounds {
    std::size_t max_states = 3;
    std::size_t max_levels = 3;
    std::size_t max_ranks = 3;
    /// Cap on the size of the act universe of one model; 0 means no cap.
    std::size_t max_acts = 0;
    /// Instances are counted as (model, ordered act pair) or
    /// (model, event tuple) units.
    std::uint64_t ceiling = 10'000'000;

    void validate() const {
        if (max_states == 0 || max_levels == 0 || max_ranks == 0 || ceiling == 0)
            throw InputError("search bounds must all be at least 1");
        if (max_states > 8) throw InputError("search bounds support at most 8 states");
        if (max_ranks < 2) throw InputError("search bounds need at least 2 consequence ranks");
    }

    std::string describe() const {
        std::ostringstream os;
        os << "states<=" << max_states << " levels<=" << max_levels << " ranks<=" << max_ranks;
        if (max_acts != 0) os << " acts<=" << max_acts;
        os << " ceiling=" << ceiling;
        return os.str();
    }
};

/// Counts visited instances against the ceiling; throws before exceeding it.
class Budget {
public:
    explicit Budget(std::uint64_t ceiling) : ceiling_(ceiling) {}

    void charge(std::uint64_t units) {
        if (units > ceiling_ - used_)
            throw CeilingExceeded("enumeration needs more than " + std::to_string(ceiling_) +
                                  " instances; raise --ceiling or shrink the bounds");
        used_ += units;
    }

    std::uint64_t used() const noexcept { return used_; }

private:
    std::uint64_t ceiling_;
    std::uint64_t used_ = 0;
};

struct CheckItem {
    std::string property;
    std::uint64_t instances = 0;
    bool passed = true;
    std::string counterexample;
    /// Whether the counterexample was confirmed by replaying it through the
    /// public operations. Meaningless when `passed`.
    bool reverified = false;

    void fail(std::string dump, bool replay_ok) {
        if (!passed) return;
        passed = false;
        counterexample = std::move(dump);
        reverified = replay_ok;
    }
};

struct CheckReport {
    std::string name;
    std::string bounds;
    std::deque<CheckItem> items; // item() hands out references that must survive later inserts

    bool passed() const {
        for (const auto& i : items)
            if (!i.passed) return false;
        return true;
    }

    CheckItem& item(const std::string& property) {
        for (auto& i : items)
            if (i.property == property) return i;
        items.emplace_back().property = property;
        return items.back();
    }

    const CheckItem* find(const std::string& property) const {
        for (const auto& i : items)
            if (i.property == property) return &i;
        return nullptr;
    }

    /// Folds a per-model report into this aggregate. Keeps the first
    /// counterexample in enumeration order for each property.
    void absorb(const CheckReport& other) {
        for (const auto& o : other.items) {
            CheckItem& mine = item(o.property);
            mine.instances += o.instances;
            if (!o.passed) mine.fail(o.counterexample, o.reverified);
        }
    }
};

inline void print(std::ostream& os, const CheckReport& r) {
    os << r.name << " [" << r.bounds << "]\n";
    for (const auto& i : r.items) {
        os << (i.passed ? "  PASS " : "  FAIL ") << i.property << " (" << i.instances << " instances)\n";
        if (!i.passed)
            os << "       counterexample: " << i.counterexample
               << (i.reverified ? "  [re-verified]" : "  [REPLAY MISMATCH]") << '\n';
    }
    os << (r.passed() ? "result: pass\n" : "result: counterexample found\n");
}

// ---------------------------------------------------------------------------
// Formatting helpers for instance dumps

inline std::string to_string(const Rational& q) {
    std::string out = std::to_string(q.numerator());
    if (q.denominator() != 1) out += "/" + std::to_string(q.denominator());
    return out;
}

inline std::string format_act(const Act& f, const OutcomeScale& scale) {
    std::string out = "(";
    for (std::size_t s = 0; s < f.size(); ++s) {
        if (s) out += ',';
        out += scale.at(f[s]).name;
    }
    return out + ")";
}

inline std::string format_levels(const PossibilityProfile& p) {
    std::string out = "pi=(";
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (s) out += ',';
        out += std::to_string(p.level(s));
    }
    return out + ")";
}

inline std::string format_weights(const WeightProfile& w) {
    std::string out = "w=(";
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (s) out += ',';
        out += to_string(w.weight(s));
    }
    return out + ")";
}

inline std::string format_ranks(const OutcomeScale& scale) {
    std::string out = "ranks=(";
    for (std::size_t i = 0; i < scale.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(scale.rank(static_cast<ConsequenceId>(i)));
    }
    return out + ")";
}

} // namespace qdt::harness
