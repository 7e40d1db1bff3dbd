#pragma once

#include <map>
#include <string>
#include <vector>

#include "tubecat/tube.hpp"

namespace tubecat {

// Stalk complex X[k]: H^{-k}(X[k]) = X, all other cohomology zero.
struct StalkObject {
    TubeObject inner;
    int k = 0;

    StalkObject() = default;
    StalkObject(TubeObject x, int k_) : inner(x), k(k_) {}
    StalkObject(int p, long long j, int t, int k_) : inner(p, j, t), k(k_) {}

    int p() const { return inner.p; }
    int j() const { return inner.j; }
    int t() const { return inner.t; }

    auto operator<=>(const StalkObject&) const = default;
};

// dim Hom(x, y[n]) in D^b(T_p).
inline int graded_hom(const StalkObject& x, const StalkObject& y, int n) {
    require_same_rank(x.p(), y.p());
    int d = n + y.k - x.k;
    if (d == 0) return hom_dim(x.inner, y.inner);
    if (d == 1) return ext1_dim(x.inner, y.inner);
    return 0;
}

// All nonzero degrees n with their dimensions.
inline std::map<int, int> hom_degrees(const StalkObject& x, const StalkObject& y) {
    std::map<int, int> out;
    int base = x.k - y.k;
    if (int h = hom_dim(x.inner, y.inner)) out[base] += h;
    if (int e = ext1_dim(x.inner, y.inner)) out[base + 1] += e;
    return out;
}

inline StalkObject shift(const StalkObject& x, int n) { return {x.inner, x.k + n}; }

inline StalkObject tau_derived(const StalkObject& x, long long n) { return {tau(x.inner, n), x.k}; }

struct K0Class {
    std::vector<long long> v;
    auto operator<=>(const K0Class&) const = default;
};

inline K0Class k0_class(const TubeObject& x) {
    K0Class c;
    for (int m : factors(x)) c.v.push_back(m);
    return c;
}

inline K0Class k0_class(const StalkObject& x) {
    K0Class c = k0_class(x.inner);
    if (x.k % 2 != 0)
        for (auto& e : c.v) e = -e;
    return c;
}

inline K0Class operator+(K0Class a, const K0Class& b) {
    if (a.v.size() != b.v.size()) throw InvalidInput("K0 length mismatch");
    for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
    return a;
}

inline K0Class operator-(K0Class a, const K0Class& b) {
    for (auto& e : a.v) e = -e;
    return b + a;
}

// Cyclic quiver with arrows i -> i-1: <a, b> = sum a_i b_i - sum a_i b_{i-1}.
inline long long euler_form(const K0Class& a, const K0Class& b) {
    if (a.v.size() != b.v.size()) throw InvalidInput("K0 length mismatch");
    long long p = static_cast<long long>(a.v.size()), r = 0;
    for (long long i = 0; i < p; ++i) r += a.v[i] * b.v[i] - a.v[i] * b.v[mod(i - 1, static_cast<int>(p))];
    return r;
}

inline std::string to_string(const StalkObject& x) {
    std::string s = to_string(x.inner);
    if (x.k != 0) s += "[" + std::to_string(x.k) + "]";
    return s;
}

}  // namespace tubecat
