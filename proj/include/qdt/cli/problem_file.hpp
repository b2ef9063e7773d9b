#pragma once

// Problem files: one JSON document with `states`, `consequences` and `acts`.
//
//   { "states": [ {"name": "fresh", "pi": 2, "weight": "2/3"}, ... ],
//     "consequences": [ {"name": "omelette6", "rank": 6}, ... ],
//     "acts": [ {"name": "BIO", "outcomes": {"fresh": "omelette6", ...}}, ... ] }
//
// `pi` (nonnegative integer) and `weight` (integer or "n/d") are optional,
// but must be given for every state or for none.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qdt/core.hpp"
#include "qdt/harness/report.hpp"
#include "qdt/lifting.hpp"
#include "qdt/uncertainty.hpp"

namespace qdt::cli {

using Json = nlohmann::ordered_json;

struct ProblemState {
    std::string name;
    std::optional<Level> pi;
    std::optional<Rational> weight;
};

class ProblemFile {
public:
    ProblemFile(std::vector<ProblemState> states, std::vector<Consequence> consequences,
                std::vector<std::pair<std::string, std::vector<std::string>>> acts)
        : states_(std::move(states)), space_(names(states_)), scale_(std::move(consequences)) {
        for (auto& [name, outcomes] : acts) acts_.push_back({name, make_act(space_, scale_, outcomes)});
        if (acts_.empty()) throw InputError("a problem file needs at least one act");
        std::vector<std::string> seen;
        for (const auto& a : acts_) {
            if (std::find(seen.begin(), seen.end(), a.name) != seen.end())
                throw InputError("duplicate act name '" + a.name + "'");
            seen.push_back(a.name);
        }
        const auto all_or_none = [&](auto member, const char* what) {
            std::size_t given = 0;
            for (const auto& s : states_) given += (s.*member).has_value();
            if (given != 0 && given != states_.size())
                throw InputError(std::string(what) + " must be given for every state or for none");
            return given != 0;
        };
        if (all_or_none(&ProblemState::pi, "pi")) {
            std::vector<Level> levels;
            for (const auto& s : states_) levels.push_back(*s.pi);
            profile_.emplace(std::move(levels));
        }
        if (all_or_none(&ProblemState::weight, "weight")) {
            std::vector<Rational> w;
            for (const auto& s : states_) w.push_back(*s.weight);
            weights_.emplace(std::move(w));
        }
    }

    const std::vector<ProblemState>& states() const noexcept { return states_; }
    const StateSpace& space() const noexcept { return space_; }
    const OutcomeScale& scale() const noexcept { return scale_; }
    const std::vector<NamedAct>& acts() const noexcept { return acts_; }

    bool has_pi() const noexcept { return profile_.has_value(); }
    bool has_weights() const noexcept { return weights_.has_value(); }

    const PossibilityProfile& profile() const {
        if (!profile_) throw InputError("this needs pi levels, and the problem file gives none");
        return *profile_;
    }
    const WeightProfile& weights() const {
        if (!weights_) throw InputError("this needs state weights, and the problem file gives none");
        return *weights_;
    }

    const NamedAct& act(std::string_view name) const {
        for (const auto& a : acts_)
            if (a.name == name) return a;
        throw InputError("unknown act '" + std::string(name) + "'");
    }

private:
    static StateSpace names(const std::vector<ProblemState>& states) {
        std::vector<std::string> out;
        for (const auto& s : states) out.push_back(s.name);
        return StateSpace(std::move(out));
    }

    std::vector<ProblemState> states_;
    StateSpace space_;
    OutcomeScale scale_;
    std::vector<NamedAct> acts_;
    std::optional<PossibilityProfile> profile_;
    std::optional<WeightProfile> weights_;
};

// ---------------------------------------------------------------------------
// Rationals

inline std::optional<Rational> parse_rational(std::string_view text) {
    const auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
        std::int64_t v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
        return v;
    };
    const auto slash = text.find('/');
    const auto num = parse_int(text.substr(0, slash));
    if (!num) return std::nullopt;
    if (slash == std::string_view::npos) return Rational(*num);
    const auto den = parse_int(text.substr(slash + 1));
    if (!den || *den <= 0) return std::nullopt;
    return Rational(*num, *den);
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

class Walker {
public:
    [[noreturn]] static void fail(const std::string& path, const std::string& what) {
        throw InputError("at " + path + ": " + what);
    }

    static const Json& member(const Json& obj, const std::string& path, const char* key) {
        if (!obj.is_object()) fail(path, "expected an object");
        const auto it = obj.find(key);
        if (it == obj.end()) fail(path, std::string("missing key '") + key + "'");
        return *it;
    }

    static std::string string(const Json& v, const std::string& path) {
        if (!v.is_string()) fail(path, "expected a string");
        return v.get<std::string>();
    }

    static std::uint64_t natural(const Json& v, const std::string& path) {
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
            fail(path, "expected a nonnegative integer");
        return v.get<std::uint64_t>();
    }

    static void only_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
        for (const auto& [k, _] : obj.items()) {
            bool known = false;
            for (const char* key : keys) known = known || k == key;
            if (!known) fail(path, "unknown key '" + k + "'");
        }
    }
};

} // namespace detail

inline ProblemFile parse_problem(std::string_view text) {
    using W = detail::Walker;
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::string what = e.what();
        const auto colon = what.find("syntax error");
        throw InputError("JSON syntax error at line " + std::to_string(detail::line_of_offset(text, e.byte)) + ": " +
                         (colon == std::string::npos ? what : what.substr(colon)));
    }
    if (!doc.is_object()) W::fail("$", "expected an object with states, consequences and acts");
    W::only_keys(doc, "$", {"states", "consequences", "acts"});

    const Json& js = W::member(doc, "$", "states");
    if (!js.is_array() || js.empty()) W::fail("$.states", "expected a nonempty array");
    std::vector<ProblemState> states;
    for (std::size_t i = 0; i < js.size(); ++i) {
        const std::string path = "$.states[" + std::to_string(i) + "]";
        const Json& s = js[i];
        if (!s.is_object()) W::fail(path, "expected an object");
        W::only_keys(s, path, {"name", "pi", "weight"});
        ProblemState st;
        st.name = W::string(W::member(s, path, "name"), path + ".name");
        if (s.contains("pi")) {
            const auto v = W::natural(s["pi"], path + ".pi");
            if (v > 1'000'000) W::fail(path + ".pi", "level too large");
            st.pi = static_cast<Level>(v);
        }
        if (s.contains("weight")) {
            const Json& w = s["weight"];
            std::optional<Rational> q;
            if (w.is_number_integer()) q = Rational(w.get<std::int64_t>());
            else if (w.is_string()) q = parse_rational(w.get<std::string>());
            if (!q || *q < 0) W::fail(path + ".weight", "expected a nonnegative integer or \"n/d\" string");
            st.weight = q;
        }
        states.push_back(std::move(st));
    }

    const Json& jc = W::member(doc, "$", "consequences");
    if (!jc.is_array()) W::fail("$.consequences", "expected an array");
    std::vector<Consequence> consequences;
    for (std::size_t i = 0; i < jc.size(); ++i) {
        const std::string path = "$.consequences[" + std::to_string(i) + "]";
        W::only_keys(jc[i], path, {"name", "rank"});
        const auto name = W::string(W::member(jc[i], path, "name"), path + ".name");
        const auto rank = W::natural(W::member(jc[i], path, "rank"), path + ".rank");
        if (rank > 1'000'000) W::fail(path + ".rank", "rank too large");
        consequences.push_back({name, static_cast<unsigned>(rank)});
    }

    const Json& ja = W::member(doc, "$", "acts");
    if (!ja.is_array()) W::fail("$.acts", "expected an array");
    std::vector<std::pair<std::string, std::vector<std::string>>> acts;
    for (std::size_t i = 0; i < ja.size(); ++i) {
        const std::string path = "$.acts[" + std::to_string(i) + "]";
        W::only_keys(ja[i], path, {"name", "outcomes"});
        const auto name = W::string(W::member(ja[i], path, "name"), path + ".name");
        const Json& out = W::member(ja[i], path, "outcomes");
        if (!out.is_object()) W::fail(path + ".outcomes", "expected an object mapping state names to consequences");
        std::vector<std::string> image;
        for (const auto& s : states) {
            const auto it = out.find(s.name);
            if (it == out.end()) W::fail(path + ".outcomes", "no outcome for state '" + s.name + "'");
            image.push_back(W::string(*it, path + ".outcomes." + s.name));
        }
        for (const auto& [k, _] : out.items()) {
            bool known = false;
            for (const auto& s : states) known = known || s.name == k;
            if (!known) W::fail(path + ".outcomes", "unknown state '" + k + "'");
        }
        acts.emplace_back(name, std::move(image));
    }

    try {
        return ProblemFile(std::move(states), std::move(consequences), std::move(acts));
    } catch (const InputError& e) {
        throw InputError(std::string("invalid problem: ") + e.what());
    }
}

inline ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read problem file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_problem(buf.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

/// Canonical form: states, consequences and acts in declaration order;
/// outcomes in state order; weights as integers or "n/d".
inline Json to_json(const ProblemFile& p) {
    Json doc;
    Json& states = doc["states"] = Json::array();
    for (const auto& s : p.states()) {
        Json j;
        j["name"] = s.name;
        if (s.pi) j["pi"] = *s.pi;
        if (s.weight) {
            if (s.weight->denominator() == 1) j["weight"] = s.weight->numerator();
            else j["weight"] = harness::to_string(*s.weight);
        }
        states.push_back(std::move(j));
    }
    Json& cons = doc["consequences"] = Json::array();
    for (const auto& c : p.scale().consequences()) cons.push_back({{"name", c.name}, {"rank", c.rank}});
    Json& acts = doc["acts"] = Json::array();
    for (const auto& a : p.acts()) {
        Json out = Json::object();
        for (std::size_t s = 0; s < p.space().size(); ++s) out[p.space().name(s)] = p.scale().at(a.act[s]).name;
        acts.push_back({{"name", a.name}, {"outcomes", std::move(out)}});
    }
    return doc;
}

inline std::string serialize(const ProblemFile& p) { return to_json(p).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Event literals: {a,b}, !{a}, {}

inline Event parse_event(std::string_view text, const StateSpace& space) {
    const auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    bool negate = false;
    if (!s.empty() && s.front() == '!') {
        negate = true;
        s = trim(s.substr(1));
    }
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw InputError("malformed event literal '" + std::string(text) + "'; expected {a,b}, !{a} or {}");
    s = trim(s.substr(1, s.size() - 2));
    Event e = space.none();
    if (!s.empty()) {
        std::size_t start = 0;
        while (true) {
            const auto comma = s.find(',', start);
            const auto name = trim(s.substr(start, comma == std::string_view::npos ? comma : comma - start));
            if (name.empty()) throw InputError("malformed event literal '" + std::string(text) + "': empty state name");
            if (name.find_first_of("{}!") != std::string_view::npos)
                throw InputError("malformed event literal '" + std::string(text) + "': nesting is not supported");
            const auto idx = space.find(name);
            if (!idx) throw InputError("unknown state '" + std::string(name) + "' in event literal");
            e = e | Event::singleton(space.size(), *idx);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return negate ? e.complement() : e;
}

} // namespace qdt::cli
