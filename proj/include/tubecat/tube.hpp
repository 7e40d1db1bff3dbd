#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tubecat/errors.hpp"

namespace tubecat {

inline int mod(long long a, int p) {
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// Uniserial object S_j^{(t)} of the rank-p tube: top S_j, length t.
struct TubeObject {
    int p = 1;
    int j = 0;
    int t = 1;

    TubeObject() = default;
    TubeObject(int p_, long long j_, int t_) : p(p_), j(0), t(t_) {
        if (p_ < 1) throw InvalidInput("rank must be >= 1");
        if (t_ < 1) throw InvalidInput("length must be >= 1");
        j = mod(j_, p_);
    }

    static TubeObject simple(int p, long long j) { return {p, j, 1}; }

    auto operator<=>(const TubeObject&) const = default;
};

inline void require_same_rank(int a, int b) {
    if (a != b) throw InvalidInput("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

inline TubeObject tau(const TubeObject& x, long long n = 1) { return {x.p, x.j - n, x.t}; }

inline TubeObject top(const TubeObject& x) { return TubeObject::simple(x.p, x.j); }

inline TubeObject soc(const TubeObject& x) { return TubeObject::simple(x.p, x.j - x.t + 1); }

// Composition factor multiplicities, indexed by simple.
inline std::vector<int> factors(const TubeObject& x) {
    std::vector<int> m(x.p, 0);
    for (int s = 0; s < x.t; ++s) ++m[mod(x.j - s, x.p)];
    return m;
}

inline bool has_factor(const TubeObject& x, int i) { return factors(x)[mod(i, x.p)] > 0; }

// Image lengths s of the canonical maps x -> y (quotient of x of length s = sub of y of length s).
inline std::vector<int> hom_lengths(const TubeObject& x, const TubeObject& y) {
    require_same_rank(x.p, y.p);
    std::vector<int> out;
    int r = mod(x.j - y.j + y.t, x.p);
    for (int s = 1; s <= std::min(x.t, y.t); ++s)
        if (s % x.p == r) out.push_back(s);
    return out;
}

inline int hom_dim(const TubeObject& x, const TubeObject& y) {
    return static_cast<int>(hom_lengths(x, y).size());
}

inline int ext1_dim(const TubeObject& x, const TubeObject& y) { return hom_dim(y, tau(x, 1)); }

// Nonvanishing criterion: top of x is a factor of y and socle of y is a factor of x.
inline bool hom_criterion(const TubeObject& x, const TubeObject& y) {
    require_same_rank(x.p, y.p);
    return has_factor(y, x.j) && has_factor(x, soc(y).j);
}

// Kernel and cokernel of the canonical map with image length s; empty optional is the zero object.
struct KerCoker {
    std::optional<TubeObject> ker;
    std::optional<TubeObject> coker;
};

inline KerCoker canonical_map_kernel_cokernel(const TubeObject& x, const TubeObject& y, int s) {
    KerCoker r;
    if (x.t > s) r.ker = TubeObject(x.p, x.j - s, x.t - s);
    if (y.t > s) r.coker = TubeObject(y.p, y.j, y.t - s);
    return r;
}

// Extension classes 0 -> y -> E -> x -> 0 are indexed by lengths s; returns the middle term.
inline std::vector<int> ext_lengths(const TubeObject& x, const TubeObject& y) {
    require_same_rank(x.p, y.p);
    std::vector<int> out;
    int r = mod(y.j - x.j + 1 + x.t, x.p);
    for (int s = 1; s <= std::min(x.t, y.t); ++s)
        if (s % x.p == r) out.push_back(s);
    return out;
}

inline std::vector<TubeObject> extension_middle(const TubeObject& x, const TubeObject& y, int s) {
    std::vector<TubeObject> out{TubeObject(x.p, x.j, x.t + y.t + 1 - s)};
    if (s > 1) out.emplace_back(y.p, y.j, s - 1);
    return out;
}

struct ExactSequence {
    int family = 0;
    std::vector<TubeObject> sub;
    std::vector<TubeObject> middle;
    std::vector<TubeObject> quotient;
    bool four_term = false;  // middle = {source, target} of a map with kernel sub, cokernel quotient
};

// The four fundamental sequences at (j, t); zero terms are dropped.
//  (1) 0 -> S_{j-1}^{(t)} -> S_j^{(t+1)} -> S_j -> 0
//  (2) 0 -> S_{j-t} -> S_j^{(t+1)} -> S_j^{(t)} -> 0
//  (3) 0 -> S_j^{(t)} -> S_{j+1}^{(t+1)} + S_j^{(t-1)} -> S_{j+1}^{(t)} -> 0
//  (4) 0 -> S_{j-t+1} -> S_j^{(t)} -> S_{j+1}^{(t)} -> S_{j+1} -> 0
inline std::vector<ExactSequence> fundamental_sequences(const TubeObject& x) {
    int p = x.p, j = x.j, t = x.t;
    std::vector<ExactSequence> out;
    out.push_back({1, {TubeObject(p, j - 1, t)}, {TubeObject(p, j, t + 1)}, {TubeObject::simple(p, j)}});
    out.push_back({2, {TubeObject::simple(p, j - t)}, {TubeObject(p, j, t + 1)}, {x}});
    ExactSequence s3{3, {x}, {TubeObject(p, j + 1, t + 1)}, {TubeObject(p, j + 1, t)}};
    if (t > 1) s3.middle.emplace_back(p, j, t - 1);
    out.push_back(s3);
    out.push_back({4, {TubeObject::simple(p, j - t + 1)}, {x, TubeObject(p, j + 1, t)}, {TubeObject::simple(p, j + 1)}, true});
    return out;
}

inline std::vector<int> dimvec(const TubeObject& x) { return factors(x); }

inline std::string to_string(const TubeObject& x) {
    std::string s = "S" + std::to_string(x.j);
    if (x.t > 1) s += "^(" + std::to_string(x.t) + ")";
    return s;
}

}  // namespace tubecat
