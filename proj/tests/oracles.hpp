#pragma once

// Brute-force reference implementations, written directly from the
// definitions with plain vectors. They share no code with the library beyond
// the types used to feed them inputs.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Set = std::vector<bool>;     // membership per state
using Levels = std::vector<int>;   // plausibility per state
using Image = std::vector<int>;    // consequence rank per state

inline Set from_mask(std::uint64_t mask, std::size_t n) {
    Set s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1U;
    return s;
}

inline Set complement(const Set& a) {
    Set out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = !a[i];
    return out;
}

inline Set intersect(const Set& a, const Set& b) {
    Set out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
    return out;
}

inline Set minus(const Set& a, const Set& b) { return intersect(a, complement(b)); }

inline int sign(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline int possibility(const Levels& pi, const Set& a) {
    int best = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && pi[i] > best) best = pi[i];
    return best;
}

inline int top(const Levels& pi) { return *std::max_element(pi.begin(), pi.end()); }

inline int necessity(const Levels& pi, const Set& a) { return top(pi) - possibility(pi, complement(a)); }

/// Weighted sum with integer weights (a common denominator is irrelevant to
/// comparisons).
inline long long mass(const std::vector<long long>& w, const Set& a) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) s += w[i];
    return s;
}

inline Set at_least(const Image& f, const Image& g) {
    Set out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] >= g[i];
    return out;
}

inline Set strictly(const Image& f, const Image& g) {
    Set out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] > g[i];
    return out;
}

inline int lift_necessity(const Levels& pi, const Image& f, const Image& g) {
    return sign(necessity(pi, at_least(f, g)) - necessity(pi, at_least(g, f)));
}

inline int lift_possibility(const Levels& pi, const Image& f, const Image& g) {
    return sign(possibility(pi, at_least(f, g)) - possibility(pi, at_least(g, f)));
}

inline int lift_qualprob(const std::vector<long long>& w, const Image& f, const Image& g) {
    return sign(mass(w, at_least(f, g)) - mass(w, at_least(g, f)));
}

/// A >= B iff some state of A outside B is at least as plausible as every
/// state of B outside A (nothing outside counts as level 0).
inline int likelihood(const Levels& pi, const Set& a, const Set& b) {
    const auto dominates = [&](const Set& x, const Set& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!(x[i] && !y[i])) continue;
            bool all = true;
            for (std::size_t j = 0; j < x.size(); ++j)
                if (y[j] && !x[j] && pi[j] > pi[i]) all = false;
            if (all) return true;
        }
        for (std::size_t j = 0; j < x.size(); ++j)
            if (y[j] && !x[j] && pi[j] > 0) return false;
        return true; // y minus x has nothing plausible
    };
    const bool ab = dominates(a, b);
    const bool ba = dominates(b, a);
    return ab && ba ? 0 : (ab ? 1 : -1);
}

inline bool entails(const Levels& pi, const Set& a, const Set& b) {
    return possibility(pi, intersect(a, b)) > possibility(pi, minus(a, b));
}

/// Conditional preference by splicing with every filler h drawn from
/// `fillers`: GT/LT/EQ when all splices agree weakly in one direction, 2
/// when neither direction holds for all fillers.
inline int conditional_by_splicing(const Levels& pi, const Image& f, const Image& g, const Set& on,
                                   const std::vector<Image>& fillers) {
    bool ge = true, le = true;
    for (const Image& h : fillers) {
        Image fs = h, gs = h;
        for (std::size_t i = 0; i < on.size(); ++i)
            if (on[i]) {
                fs[i] = f[i];
                gs[i] = g[i];
            }
        const int v = lift_necessity(pi, fs, gs);
        ge = ge && v >= 0;
        le = le && v <= 0;
    }
    if (ge && le) return 0;
    if (ge) return 1;
    if (le) return -1;
    return 2;
}

/// Consequence rule over rank images, with preimages compared by `cmp(a, b)`.
template <class Cmp>
int consequence_rule(const Image& f, const Image& g, Cmp&& cmp, bool pessimistic) {
    std::vector<int> values;
    for (int x : f) values.push_back(x);
    for (int x : g) values.push_back(x);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<int> bf, bg;
    for (int x : values) {
        Set pf(f.size()), pg(g.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            pf[i] = f[i] == x;
            pg[i] = g[i] == x;
        }
        const int c = cmp(pf, pg);
        if (c >= 0) bf.push_back(x);
        if (c <= 0) bg.push_back(x);
    }
    if (bf.empty() && bg.empty()) return 0;
    if (bg.empty()) return 1;
    if (bf.empty()) return -1;
    const auto pick = [&](const std::vector<int>& v) {
        return pessimistic ? *std::min_element(v.begin(), v.end()) : *std::max_element(v.begin(), v.end());
    };
    return sign(pick(bf) - pick(bg));
}

/// Every image in {0..m-1}^n, first state most significant.
inline std::vector<Image> all_images(std::size_t n, int m) {
    std::vector<Image> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(m);
    for (std::size_t k = 0; k < total; ++k) {
        Image img(n);
        std::size_t r = k;
        for (std::size_t i = n; i-- > 0;) {
            img[i] = static_cast<int>(r % static_cast<std::size_t>(m));
            r /= static_cast<std::size_t>(m);
        }
        out.push_back(img);
    }
    return out;
}

} // namespace oracle
