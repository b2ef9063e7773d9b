#pragma once

// Foundational types: states, events, consequences, acts, and the agreement
// sets every comparison rule is built from.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace qdt {

/// Malformed or inconsistent input (unknown names, mismatched spaces, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A result that theory guarantees was violated; indicates a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Comparison

enum class Comparison : std::int8_t { LT = -1, EQ = 0, GT = 1 };

constexpr Comparison reverse(Comparison c) noexcept {
    return static_cast<Comparison>(-static_cast<int>(c));
}

/// Three-way comparison of two ordered values.
template <class T>
constexpr Comparison compare_values(const T& a, const T& b) {
    if (b < a) return Comparison::GT;
    if (a < b) return Comparison::LT;
    return Comparison::EQ;
}

/// True for GT or EQ, i.e. the weak relation "at least as ... as" holds.
constexpr bool at_least(Comparison c) noexcept { return c != Comparison::LT; }

constexpr std::string_view symbol(Comparison c) noexcept {
    switch (c) {
        case Comparison::GT: return ">";
        case Comparison::LT: return "<";
        case Comparison::EQ: break;
    }
    return "~";
}

// ---------------------------------------------------------------------------
// Events

/// A subset of a finite state space, stored as a bitmask (state i is bit i).
///
/// The universe size travels with the value so that complement stays inside
/// the owning space and events of different spaces are never mixed silently.
class Event {
public:
    using Mask = std::uint64_t;
    static constexpr std::size_t kMaxStates = 64;

    Event() = default;

    Event(Mask bits, std::size_t universe) : bits_(bits), universe_(static_cast<std::uint8_t>(universe)) {
        if (universe == 0 || universe > kMaxStates)
            throw InputError("event universe must hold 1.." + std::to_string(kMaxStates) + " states");
        if ((bits & ~full_mask(universe)) != 0) throw InputError("event has members outside its state space");
    }

    static Event none(std::size_t universe) { return Event(0, universe); }
    static Event all(std::size_t universe) { return Event(full_mask(universe), universe); }
    static Event singleton(std::size_t universe, std::size_t state) {
        if (state >= universe) throw InputError("state index out of range");
        return Event(Mask{1} << state, universe);
    }

    static constexpr Mask full_mask(std::size_t universe) noexcept {
        return universe >= 64 ? ~Mask{0} : ((Mask{1} << universe) - 1);
    }

    Mask bits() const noexcept { return bits_; }
    std::size_t universe_size() const noexcept { return universe_; }
    bool empty() const noexcept { return bits_ == 0; }
    bool is_full() const noexcept { return bits_ == full_mask(universe_); }
    std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool contains(std::size_t state) const noexcept { return state < universe_ && ((bits_ >> state) & 1U) != 0; }

    bool subset_of(const Event& other) const {
        same_space(other);
        return (bits_ & ~other.bits_) == 0;
    }

    Event complement() const noexcept { return raw(~bits_ & full_mask(universe_), universe_); }

    friend Event operator|(const Event& a, const Event& b) {
        a.same_space(b);
        return raw(a.bits_ | b.bits_, a.universe_);
    }
    friend Event operator&(const Event& a, const Event& b) {
        a.same_space(b);
        return raw(a.bits_ & b.bits_, a.universe_);
    }
    friend Event operator^(const Event& a, const Event& b) {
        a.same_space(b);
        return raw(a.bits_ ^ b.bits_, a.universe_);
    }
    /// Set difference.
    friend Event operator-(const Event& a, const Event& b) {
        a.same_space(b);
        return raw(a.bits_ & ~b.bits_, a.universe_);
    }

    friend bool operator==(const Event&, const Event&) = default;

    /// Canonical order: by universe, then by mask value.
    friend auto operator<=>(const Event& a, const Event& b) {
        if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

    /// Member indices in state order.
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < universe_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    void same_space(const Event& other) const {
        if (universe_ != other.universe_) throw InputError("events belong to different state spaces");
    }

private:
    static Event raw(Mask bits, std::uint8_t universe) noexcept {
        Event e;
        e.bits_ = bits;
        e.universe_ = universe;
        return e;
    }

    Mask bits_ = 0;
    std::uint8_t universe_ = 0;
};

/// Every event of an n-state space, in canonical (mask) order.
inline std::vector<Event> all_events(std::size_t universe) {
    if (universe == 0 || universe > 20) throw InputError("event enumeration supports 1..20 states");
    std::vector<Event> out;
    out.reserve(std::size_t{1} << universe);
    for (Event::Mask m = 0; m <= Event::full_mask(universe); ++m) out.emplace_back(m, universe);
    return out;
}

// ---------------------------------------------------------------------------
// State space

class StateSpace {
public:
    explicit StateSpace(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw InputError("state space needs at least one state");
        if (names_.size() > Event::kMaxStates)
            throw InputError("state space holds at most " + std::to_string(Event::kMaxStates) + " states");
        std::unordered_set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty()) throw InputError("state names must be non-empty");
            if (!seen.insert(n).second) throw InputError("duplicate state name '" + n + "'");
        }
    }

    /// States named s1..sn.
    static StateSpace numbered(std::size_t n) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
        return StateSpace(std::move(names));
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - names_.begin());
    }

    std::size_t index_of(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw InputError("unknown state '" + std::string(name) + "'");
    }

    Event none() const { return Event::none(size()); }
    Event all() const { return Event::all(size()); }

    Event event(const std::vector<std::string>& members) const {
        Event::Mask m = 0;
        for (const auto& n : members) m |= Event::Mask{1} << index_of(n);
        return Event(m, size());
    }

    void check(const Event& e) const {
        if (e.universe_size() != size()) throw InputError("event does not belong to this state space");
    }

    /// `{a,b}` with members in declaration order; `{}` for the empty event.
    std::string format(const Event& e) const {
        check(e);
        std::string out = "{";
        bool first = true;
        for (std::size_t i : e.members()) {
            if (!first) out += ',';
            out += names_[i];
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(const StateSpace&, const StateSpace&) = default;

private:
    std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Consequences

using ConsequenceId = std::uint8_t;

struct Consequence {
    std::string name;
    unsigned rank = 0;
    friend bool operator==(const Consequence&, const Consequence&) = default;
};

/// Consequences with ordinal ranks; higher rank is preferred. Ties allowed.
class OutcomeScale {
public:
    static constexpr std::size_t kMaxConsequences = 256;

    explicit OutcomeScale(std::vector<Consequence> consequences) : items_(std::move(consequences)) {
        if (items_.size() > kMaxConsequences)
            throw InputError("outcome scale holds at most " + std::to_string(kMaxConsequences) + " consequences");
        std::unordered_set<std::string> seen;
        for (const auto& c : items_) {
            if (c.name.empty()) throw InputError("consequence names must be non-empty");
            if (!seen.insert(c.name).second) throw InputError("duplicate consequence name '" + c.name + "'");
        }
        auto [lo, hi] = std::minmax_element(items_.begin(), items_.end(),
                                            [](const auto& a, const auto& b) { return a.rank < b.rank; });
        if (items_.empty() || lo->rank == hi->rank)
            throw InputError("outcome scale needs two consequences with distinct ranks");
    }

    /// Consequences named c0..c{k-1} with the given ranks.
    static OutcomeScale from_ranks(const std::vector<unsigned>& ranks) {
        std::vector<Consequence> cs;
        for (std::size_t i = 0; i < ranks.size(); ++i) cs.push_back({"c" + std::to_string(i), ranks[i]});
        return OutcomeScale(std::move(cs));
    }

    std::size_t size() const noexcept { return items_.size(); }
    const Consequence& at(ConsequenceId id) const { return items_.at(id); }
    const std::vector<Consequence>& consequences() const noexcept { return items_; }
    unsigned rank(ConsequenceId id) const { return items_.at(id).rank; }

    Comparison compare(ConsequenceId x, ConsequenceId y) const { return compare_values(rank(x), rank(y)); }

    std::optional<ConsequenceId> find(std::string_view name) const {
        for (std::size_t i = 0; i < items_.size(); ++i)
            if (items_[i].name == name) return static_cast<ConsequenceId>(i);
        return std::nullopt;
    }

    ConsequenceId index_of(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw InputError("unknown consequence '" + std::string(name) + "'");
    }

    friend bool operator==(const OutcomeScale&, const OutcomeScale&) = default;

private:
    std::vector<Consequence> items_;
};

// ---------------------------------------------------------------------------
// Acts

/// A total map from states to consequence ids. Stored inline; acts are
/// copied by value in tight enumeration loops.
class Act {
public:
    Act() = default;

    explicit Act(const std::vector<ConsequenceId>& image) {
        if (image.empty() || image.size() > Event::kMaxStates)
            throw InputError("an act must map 1.." + std::to_string(Event::kMaxStates) + " states");
        std::copy(image.begin(), image.end(), image_.begin());
        size_ = static_cast<std::uint8_t>(image.size());
    }

    std::size_t size() const noexcept { return size_; }
    ConsequenceId operator[](std::size_t state) const noexcept { return image_[state]; }
    ConsequenceId at(std::size_t state) const {
        if (state >= size_) throw InputError("state index out of range for act");
        return image_[state];
    }

    std::vector<ConsequenceId> image() const { return {image_.begin(), image_.begin() + size_}; }

    /// States mapped to `x`.
    Event preimage(ConsequenceId x) const {
        Event::Mask m = 0;
        for (std::size_t s = 0; s < size_; ++s)
            if (image_[s] == x) m |= Event::Mask{1} << s;
        return Event(m, size_);
    }

    friend bool operator==(const Act&, const Act&) = default;

private:
    friend Act splice(const Act&, const Event&, const Act&);
    std::array<ConsequenceId, Event::kMaxStates> image_{};
    std::uint8_t size_ = 0;
};

/// Throws unless `f` is defined on exactly `states` states with images in `scale`.
inline void check_act(const Act& f, std::size_t states, const OutcomeScale& scale) {
    if (f.size() != states) throw InputError("act is defined over a different state space");
    for (std::size_t s = 0; s < f.size(); ++s)
        if (f[s] >= scale.size()) throw InputError("act maps a state to an unknown consequence");
}

/// Builds an act from one consequence name per state, in state order.
inline Act make_act(const StateSpace& space, const OutcomeScale& scale, const std::vector<std::string>& outcomes) {
    if (outcomes.size() != space.size()) throw InputError("act must assign a consequence to every state");
    std::vector<ConsequenceId> image;
    for (const auto& o : outcomes) image.push_back(scale.index_of(o));
    return Act(image);
}

namespace detail {
inline void check_pair(const Act& f, const Act& g, const OutcomeScale& scale) {
    if (f.size() != g.size()) throw InputError("acts are defined over different state spaces");
    check_act(f, f.size(), scale);
    check_act(g, g.size(), scale);
}
} // namespace detail

/// [f >= g]: the states where f's consequence is at least as good as g's.
inline Event agreement_set(const Act& f, const Act& g, const OutcomeScale& scale) {
    detail::check_pair(f, g, scale);
    Event::Mask m = 0;
    for (std::size_t s = 0; s < f.size(); ++s)
        if (scale.rank(f[s]) >= scale.rank(g[s])) m |= Event::Mask{1} << s;
    return Event(m, f.size());
}

/// [f > g]: the states where f's consequence is strictly better than g's.
inline Event strict_agreement_set(const Act& f, const Act& g, const OutcomeScale& scale) {
    detail::check_pair(f, g, scale);
    Event::Mask m = 0;
    for (std::size_t s = 0; s < f.size(); ++s)
        if (scale.rank(f[s]) > scale.rank(g[s])) m |= Event::Mask{1} << s;
    return Event(m, f.size());
}

/// States where f and g yield equally ranked consequences.
inline Event tie_set(const Act& f, const Act& g, const OutcomeScale& scale) {
    return agreement_set(f, g, scale) & agreement_set(g, f, scale);
}

/// The act equal to `f` on `on` and to `otherwise` elsewhere.
inline Act splice(const Act& f, const Event& on, const Act& otherwise) {
    if (f.size() != otherwise.size() || on.universe_size() != f.size())
        throw InputError("splice operands belong to different state spaces");
    Act out = otherwise;
    for (std::size_t s = 0; s < f.size(); ++s)
        if (on.contains(s)) out.image_[s] = f.image_[s];
    return out;
}

inline Act constant_act(ConsequenceId x, std::size_t states, const OutcomeScale& scale) {
    if (x >= scale.size()) throw InputError("unknown consequence id");
    return Act(std::vector<ConsequenceId>(states, x));
}

inline Act constant_act(std::string_view x, const StateSpace& space, const OutcomeScale& scale) {
    return constant_act(scale.index_of(x), space.size(), scale);
}

/// The two-consequence act: `better` on `on`, `worse` elsewhere.
inline Act two_outcome_act(const Event& on, ConsequenceId better, ConsequenceId worse, const OutcomeScale& scale) {
    if (better >= scale.size() || worse >= scale.size()) throw InputError("unknown consequence id");
    if (scale.rank(better) <= scale.rank(worse))
        throw InputError("two-outcome act needs a strictly better consequence on the event");
    std::vector<ConsequenceId> image(on.universe_size(), worse);
    for (std::size_t s : on.members()) image[s] = better;
    return Act(image);
}

/// Every act from `states` states into the scale, state 0 most significant.
inline std::vector<Act> all_acts(std::size_t states, const OutcomeScale& scale, std::size_t limit = 1'000'000) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < states; ++i) {
        total *= scale.size();
        if (total > limit) throw InputError("act enumeration exceeds " + std::to_string(limit) + " acts");
    }
    std::vector<Act> out;
    out.reserve(total);
    std::vector<std::size_t> digits(states, 0);
    std::vector<ConsequenceId> image(states, 0);
    for (std::size_t k = 0; k < total; ++k) {
        std::copy(digits.begin(), digits.end(), image.begin());
        out.emplace_back(image);
        for (std::size_t s = states; s-- > 0;) {
            if (++digits[s] < scale.size()) break;
            digits[s] = 0;
        }
    }
    return out;
}

} // namespace qdt
