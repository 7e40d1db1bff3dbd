#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tubecat/tube.hpp"

namespace tubecat {

// Prime field Z/(10^9+7). Structure constants are 0/±1 so ranks agree with the rationals.
struct Fp {
    static constexpr std::uint64_t P = 1000000007ULL;
    std::uint64_t v = 0;

    Fp() = default;
    Fp(long long x) : v(static_cast<std::uint64_t>(((x % static_cast<long long>(P)) + P) % P)) {}

    friend Fp operator+(Fp a, Fp b) { Fp r; r.v = (a.v + b.v) % P; return r; }
    friend Fp operator-(Fp a, Fp b) { Fp r; r.v = (a.v + P - b.v) % P; return r; }
    friend Fp operator*(Fp a, Fp b) { Fp r; r.v = a.v * b.v % P; return r; }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return Fp(0) - *this; }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }

    Fp inverse() const {
        if (v == 0) throw InternalError("division by zero in Fp");
        std::uint64_t base = v, e = P - 2, r = 1;
        while (e) {
            if (e & 1) r = r * base % P;
            base = base * base % P;
            e >>= 1;
        }
        Fp x;
        x.v = r;
        return x;
    }
};

template <class F>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<F> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, F(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    F& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const F& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols != y.rows) throw InternalError("matrix shape mismatch");
        Matrix z(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const F& e = x(i, k);
                if (e == F(0)) continue;
                for (int j = 0; j < y.cols; ++j) z(i, j) += e * y(k, j);
            }
        return z;
    }

    bool is_zero() const {
        for (const auto& e : a)
            if (!(e == F(0))) return false;
        return true;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

// Row-reduces in place; returns pivot columns.
template <class F>
std::vector<int> row_reduce(Matrix<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!(m(i, c) == F(0))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        F inv = F(1) / m(r, c);
        for (int j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == F(0)) continue;
            F f = m(i, c);
            for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(Matrix<F> m) {
    return static_cast<int>(row_reduce(m).size());
}

// Columns spanning the null space.
template <class F>
Matrix<F> kernel_basis(Matrix<F> m) {
    auto piv = row_reduce(m);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free.push_back(c);
    Matrix<F> k(m.cols, static_cast<int>(free.size()));
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], static_cast<int>(f)) = F(1);
        for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], static_cast<int>(f)) = -m(static_cast<int>(r), free[f]);
    }
    return k;
}

template <class F>
Matrix<F> hcat(const Matrix<F>& x, const Matrix<F>& y) {
    if (x.rows != y.rows) throw InternalError("hcat shape mismatch");
    Matrix<F> z(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) z(i, j) = x(i, j);
        for (int j = 0; j < y.cols; ++j) z(i, x.cols + j) = y(i, j);
    }
    return z;
}

// Representation of the cyclic quiver with arrows i -> i-1; mats[i] is dims[i-1] x dims[i].
template <class F>
struct NilpRep {
    int p = 1;
    std::vector<int> dims;
    std::vector<Matrix<F>> mats;

    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
};

// Basis b_0 (top) .. b_{t-1} (socle), b_m at vertex j - m; arrows send b_m to b_{m+1}.
template <class F>
NilpRep<F> realize(const TubeObject& x) {
    NilpRep<F> r;
    r.p = x.p;
    r.dims.assign(x.p, 0);
    std::vector<int> local(x.t);
    for (int m = 0; m < x.t; ++m) local[m] = r.dims[mod(x.j - m, x.p)]++;
    for (int i = 0; i < x.p; ++i) r.mats.emplace_back(r.dims[mod(i - 1, x.p)], r.dims[i]);
    for (int m = 0; m + 1 < x.t; ++m) {
        int v = mod(x.j - m, x.p);
        r.mats[v](local[m + 1], local[m]) = F(1);
    }
    return r;
}

template <class F>
NilpRep<F> direct_sum(const NilpRep<F>& a, const NilpRep<F>& b) {
    require_same_rank(a.p, b.p);
    NilpRep<F> r;
    r.p = a.p;
    for (int i = 0; i < a.p; ++i) r.dims.push_back(a.dims[i] + b.dims[i]);
    for (int i = 0; i < a.p; ++i) {
        int prev = mod(i - 1, a.p);
        Matrix<F> m(r.dims[prev], r.dims[i]);
        for (int x = 0; x < a.mats[i].rows; ++x)
            for (int y = 0; y < a.mats[i].cols; ++y) m(x, y) = a.mats[i](x, y);
        for (int x = 0; x < b.mats[i].rows; ++x)
            for (int y = 0; y < b.mats[i].cols; ++y) m(a.dims[prev] + x, a.dims[i] + y) = b.mats[i](x, y);
        r.mats.push_back(std::move(m));
    }
    return r;
}

template <class F>
NilpRep<F> realize_sum(const std::vector<TubeObject>& xs, int p) {
    NilpRep<F> r;
    r.p = p;
    r.dims.assign(p, 0);
    for (int i = 0; i < p; ++i) r.mats.emplace_back(0, 0);
    for (const auto& x : xs) r = direct_sum(r, realize<F>(x));
    return r;
}

// A morphism of representations: one matrix per vertex, maps[i] is dims_b[i] x dims_a[i].
template <class F>
struct RepMap {
    std::vector<Matrix<F>> maps;
};

// Offsets of the blocks f_i inside the flattened unknown vector and of the arrow equations.
template <class F>
struct IntertwinerSystem {
    Matrix<F> delta;  // sum_i Hom(A_i, B_i) -> sum_i Hom(A_i, B_{i-1})
    std::vector<int> var_off, eq_off;
};

template <class F>
IntertwinerSystem<F> intertwiner_system(const NilpRep<F>& a, const NilpRep<F>& b) {
    require_same_rank(a.p, b.p);
    int p = a.p;
    IntertwinerSystem<F> s;
    int nv = 0, ne = 0;
    for (int i = 0; i < p; ++i) {
        s.var_off.push_back(nv);
        nv += b.dims[i] * a.dims[i];
        s.eq_off.push_back(ne);
        ne += b.dims[mod(i - 1, p)] * a.dims[i];
    }
    s.delta = Matrix<F>(ne, nv);
    auto var = [&](int i, int r, int c) { return s.var_off[i] + r * a.dims[i] + c; };
    for (int i = 0; i < p; ++i) {
        int prev = mod(i - 1, p);
        const auto& ma = a.mats[i];
        const auto& mb = b.mats[i];
        // (f_{i-1} M^a_i - M^b_i f_i)(r, c)
        for (int r = 0; r < b.dims[prev]; ++r)
            for (int c = 0; c < a.dims[i]; ++c) {
                int row = s.eq_off[i] + r * a.dims[i] + c;
                for (int m = 0; m < a.dims[prev]; ++m)
                    if (!(ma(m, c) == F(0))) s.delta(row, var(prev, r, m)) += ma(m, c);
                for (int m = 0; m < b.dims[i]; ++m)
                    if (!(mb(r, m) == F(0))) s.delta(row, var(i, m, c)) -= mb(r, m);
            }
    }
    return s;
}

template <class F>
int hom_space_dim(const NilpRep<F>& a, const NilpRep<F>& b) {
    auto s = intertwiner_system(a, b);
    return s.delta.cols - rank(s.delta);
}

// dim Ext^1(a, b) as the cokernel of the intertwiner differential.
template <class F>
int ext_space_dim(const NilpRep<F>& a, const NilpRep<F>& b) {
    auto s = intertwiner_system(a, b);
    return s.delta.rows - rank(s.delta);
}

template <class F>
std::vector<RepMap<F>> hom_space_basis(const NilpRep<F>& a, const NilpRep<F>& b) {
    auto s = intertwiner_system(a, b);
    auto k = kernel_basis(s.delta);
    std::vector<RepMap<F>> out;
    for (int col = 0; col < k.cols; ++col) {
        RepMap<F> f;
        for (int i = 0; i < a.p; ++i) {
            Matrix<F> m(b.dims[i], a.dims[i]);
            for (int r = 0; r < b.dims[i]; ++r)
                for (int c = 0; c < a.dims[i]; ++c) m(r, c) = k(s.var_off[i] + r * a.dims[i] + c, col);
            f.maps.push_back(std::move(m));
        }
        out.push_back(std::move(f));
    }
    return out;
}

template <class F>
bool is_intertwiner(const NilpRep<F>& a, const NilpRep<F>& b, const RepMap<F>& f) {
    for (int i = 0; i < a.p; ++i) {
        int prev = mod(i - 1, a.p);
        if (!(f.maps[prev] * a.mats[i] == b.mats[i] * f.maps[i])) return false;
    }
    return true;
}

// Extension cocycle: e[i] is dims_b[i-1] x dims_a[i], representing 0 -> b -> E -> a -> 0.
template <class F>
struct ExtClass {
    std::vector<Matrix<F>> e;
};

// Representatives of a basis of Ext^1(a, b), chosen among elementary cocycles.
template <class F>
std::vector<ExtClass<F>> ext_space_basis(const NilpRep<F>& a, const NilpRep<F>& b) {
    auto s = intertwiner_system(a, b);
    int ne = s.delta.rows;
    Matrix<F> img = s.delta;
    int base = rank(img);
    std::vector<ExtClass<F>> out;
    Matrix<F> acc = img;
    for (int row = 0; row < ne; ++row) {
        Matrix<F> unit(ne, 1);
        unit(row, 0) = F(1);
        Matrix<F> trial = hcat(acc, unit);
        if (rank(trial) == base + static_cast<int>(out.size()) + 1) {
            acc = trial;
            ExtClass<F> c;
            for (int i = 0; i < a.p; ++i) c.e.emplace_back(b.dims[mod(i - 1, a.p)], a.dims[i]);
            for (int i = 0; i < a.p; ++i) {
                int lo = s.eq_off[i], hi = lo + c.e[i].rows * c.e[i].cols;
                if (row >= lo && row < hi) {
                    int off = row - lo;
                    c.e[i](off / a.dims[i], off % a.dims[i]) = F(1);
                }
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

// Middle term E of 0 -> b -> E -> a -> 0: E_i = b_i + a_i, arrows [[M^b, e], [0, M^a]].
template <class F>
NilpRep<F> extension_rep(const NilpRep<F>& a, const NilpRep<F>& b, const ExtClass<F>& c) {
    NilpRep<F> r;
    r.p = a.p;
    for (int i = 0; i < a.p; ++i) r.dims.push_back(b.dims[i] + a.dims[i]);
    for (int i = 0; i < a.p; ++i) {
        int prev = mod(i - 1, a.p);
        Matrix<F> m(r.dims[prev], r.dims[i]);
        for (int x = 0; x < b.dims[prev]; ++x)
            for (int y = 0; y < b.dims[i]; ++y) m(x, y) = b.mats[i](x, y);
        for (int x = 0; x < b.dims[prev]; ++x)
            for (int y = 0; y < a.dims[i]; ++y) m(x, b.dims[i] + y) = c.e[i](x, y);
        for (int x = 0; x < a.dims[prev]; ++x)
            for (int y = 0; y < a.dims[i]; ++y) m(b.dims[prev] + x, b.dims[i] + y) = a.mats[i](x, y);
        r.mats.push_back(std::move(m));
    }
    return r;
}

// Composite of the s arrows leaving vertex j: V_j -> V_{j-s}.
template <class F>
Matrix<F> path_composite(const NilpRep<F>& r, int j, int s) {
    Matrix<F> m = Matrix<F>::identity(r.dims[mod(j, r.p)]);
    for (int step = 0; step < s; ++step) m = r.mats[mod(j - step, r.p)] * m;
    return m;
}

// Block counting from path ranks: c(j, s) = rank of the length-s path out of vertex j on the module.
// Blocks with socle sigma and length exactly s number h(sigma+s-1, s) - h(sigma+s, s+1),
// where h(j, s) = c(j, s-1) - c(j, s).
inline std::vector<TubeObject> blocks_from_ranks(int p, int n, const std::vector<std::vector<int>>& c) {
    auto h = [&](int j, int s) { return c[mod(j, p)][s - 1] - c[mod(j, p)][s]; };
    std::vector<TubeObject> out;
    for (int s = 1; s <= n; ++s)
        for (int sigma = 0; sigma < p; ++sigma) {
            int cnt = h(sigma + s - 1, s) - (s + 1 <= n + 1 ? h(sigma + s, s + 1) : 0);
            if (cnt < 0) throw InternalError("negative block count");
            for (int m = 0; m < cnt; ++m) out.emplace_back(p, sigma + s - 1, s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Ranks c[j][s] for s = 0..n+1 of a functor given per-vertex rank callback.
template <class RankFn>
std::vector<std::vector<int>> path_ranks(int p, int n, RankFn&& rk) {
    std::vector<std::vector<int>> c(p, std::vector<int>(n + 2, 0));
    for (int j = 0; j < p; ++j)
        for (int s = 0; s <= n + 1; ++s) c[j][s] = rk(j, s);
    return c;
}

template <class F>
bool is_nilpotent(const NilpRep<F>& r) {
    int n = r.total_dim();
    for (int j = 0; j < r.p; ++j)
        if (!path_composite(r, j, n).is_zero()) return false;
    return true;
}

template <class F>
std::vector<TubeObject> decompose(const NilpRep<F>& r) {
    if (!is_nilpotent(r)) throw InvalidInput("representation is not nilpotent");
    int n = r.total_dim();
    auto c = path_ranks(r.p, n, [&](int j, int s) { return rank(path_composite(r, j, s)); });
    return blocks_from_ranks(r.p, n, c);
}

template <class F>
struct ConeCohomology {
    std::vector<TubeObject> h_minus1;  // kernel, sits in degree -1 of the cone
    std::vector<TubeObject> h0;        // cokernel
};

// Cone of a degree-0 map f: a -> b.
template <class F>
ConeCohomology<F> cone_cohomology(const NilpRep<F>& a, const NilpRep<F>& b, const RepMap<F>& f) {
    if (!is_intertwiner(a, b, f)) throw InvalidInput("map is not an intertwiner");
    int p = a.p;
    std::vector<Matrix<F>> kb;
    for (int i = 0; i < p; ++i) kb.push_back(kernel_basis(f.maps[i]));
    int nk = 0;
    for (const auto& k : kb) nk += k.cols;
    auto ck = path_ranks(p, nk, [&](int j, int s) { return rank(path_composite(a, j, s) * kb[j]); });
    int nc = b.total_dim() - (a.total_dim() - nk);
    auto cc = path_ranks(p, nc, [&](int j, int s) {
        const auto& img = f.maps[mod(j - s, p)];
        return rank(hcat(path_composite(b, j, s), img)) - rank(img);
    });
    return {blocks_from_ranks(p, nk, ck), blocks_from_ranks(p, nc, cc)};
}

// Canonical map x -> y with image length s: b_m -> b'_{m + t_y - s} for m < s.
template <class F>
RepMap<F> canonical_map(const TubeObject& x, const TubeObject& y, int s) {
    require_same_rank(x.p, y.p);
    int p = x.p;
    if (s < 1 || s > std::min(x.t, y.t) || mod(x.j - y.j + y.t - s, p) != 0)
        throw InvalidInput("no canonical map of that image length");
    std::vector<int> dx(p, 0), dy(p, 0), lx(x.t), ly(y.t);
    for (int m = 0; m < x.t; ++m) lx[m] = dx[mod(x.j - m, p)]++;
    for (int m = 0; m < y.t; ++m) ly[m] = dy[mod(y.j - m, p)]++;
    RepMap<F> f;
    for (int i = 0; i < p; ++i) f.maps.emplace_back(dy[i], dx[i]);
    for (int m = 0; m < s; ++m) {
        int v = mod(x.j - m, p);
        f.maps[v](ly[m + y.t - s], lx[m]) = F(1);
    }
    return f;
}

template <class F>
RepMap<F> combine(const std::vector<std::pair<F, RepMap<F>>>& terms) {
    RepMap<F> r = terms.at(0).second;
    for (auto& m : r.maps)
        for (auto& e : m.a) e = F(0);
    for (const auto& [c, g] : terms)
        for (std::size_t i = 0; i < r.maps.size(); ++i)
            for (std::size_t k = 0; k < r.maps[i].a.size(); ++k) r.maps[i].a[k] += c * g.maps[i].a[k];
    return r;
}

}  // namespace tubecat
