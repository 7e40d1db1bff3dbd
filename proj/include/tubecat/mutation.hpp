#pragma once

#include <string>
#include <vector>

#include "tubecat/rep_oracle.hpp"
#include "tubecat/smc.hpp"

namespace tubecat {

enum class Direction { left, right };

inline std::string to_string(Direction d) { return d == Direction::left ? "left" : "right"; }

inline Direction opposite(Direction d) { return d == Direction::left ? Direction::right : Direction::left; }

#ifdef NDEBUG
inline constexpr bool kOracleCheckDefault = false;
#else
inline constexpr bool kOracleCheckDefault = true;
#endif

struct MutationStep {
    int index = 0;
    Direction direction = Direction::left;
    Smc before, after;
};

namespace detail {

inline void check_hom_cone(const TubeObject& a, const TubeObject& b, int s, const KerCoker& kc) {
    auto ra = realize<Fp>(a), rb = realize<Fp>(b);
    if (hom_space_dim(ra, rb) != 1) throw InternalError("approximation space is not one-dimensional");
    auto c = cone_cohomology(ra, rb, canonical_map<Fp>(a, b, s));
    std::vector<TubeObject> k, q;
    if (kc.ker) k.push_back(*kc.ker);
    if (kc.coker) q.push_back(*kc.coker);
    if (c.h_minus1 != k || c.h0 != q)
        throw InternalError("symbolic cone disagrees with the oracle for " + to_string(a) + " -> " + to_string(b));
}

inline void check_ext_cone(const TubeObject& x, const TubeObject& y, const std::vector<TubeObject>& mid) {
    auto rx = realize<Fp>(x), ry = realize<Fp>(y);
    auto basis = ext_space_basis(rx, ry);
    if (basis.size() != 1) throw InternalError("extension space is not one-dimensional");
    auto want = mid;
    std::sort(want.begin(), want.end());
    if (decompose(extension_rep(rx, ry, basis[0])) != want)
        throw InternalError("symbolic extension disagrees with the oracle for " + to_string(x) + " by " + to_string(y));
}

// Cone of the unique-up-to-scalar nonzero map a[-1] -> b, i.e. the cocone of a -> b[1].
// Hom-type (ka = kb + 1): the map is in Hom(a, b) and the cone is ker[kb+1] + coker[kb].
// Ext-type (ka = kb):     the map is in Ext^1(a, b) and the cone is the middle term E[kb] of 0 -> b -> E -> a -> 0.
inline StalkObject cone_one(const StalkObject& a, const StalkObject& b, bool oracle_check) {
    std::vector<StalkObject> parts;
    if (a.k == b.k + 1) {
        int s = hom_lengths(a.inner, b.inner).back();
        auto kc = canonical_map_kernel_cokernel(a.inner, b.inner, s);
        if (oracle_check) check_hom_cone(a.inner, b.inner, s, kc);
        if (kc.ker) parts.emplace_back(*kc.ker, b.k + 1);
        if (kc.coker) parts.emplace_back(*kc.coker, b.k);
    } else if (a.k == b.k) {
        int s = ext_lengths(a.inner, b.inner).back();
        auto mid = extension_middle(a.inner, b.inner, s);
        if (oracle_check) check_ext_cone(a.inner, b.inner, mid);
        for (const auto& m : mid) parts.emplace_back(m, b.k);
    } else {
        throw InternalError("nonzero map between stalks more than one degree apart");
    }
    if (parts.size() != 1) throw InternalError("mutation cone of " + to_string(a) + " and " + to_string(b) + " is decomposable");
    return parts.front();
}

inline Smc verified(Smc out, const Smc& in, int i, Direction dir) {
    auto r = try_classify(out.objects);
    if (!r.cert)
        throw InternalError(to_string(dir) + " mutation of " + to_string(in) + " at " + std::to_string(i) +
                            " is not simple-minded: " + r.reason);
    out.certificate = std::move(r.cert);
    return out;
}

}  // namespace detail

inline void check_index(const Smc& x, int i) {
    if (i < 0 || i >= static_cast<int>(x.objects.size())) throw InvalidInput("mutation index out of range");
}

// X_i -> X_i[1]; X_j -> cone of the minimal left approximation X_j[-1] -> X_i^{d}, d = dim Hom^1(X_j, X_i).
inline Smc mutate_left(const Smc& x, int i, bool oracle_check = kOracleCheckDefault) {
    check_index(x, i);
    const auto& xi = x.objects[i];
    std::vector<StalkObject> out;
    for (int j = 0; j < x.p; ++j) {
        const auto& xj = x.objects[j];
        if (j == i) { out.push_back(shift(xi, 1)); continue; }
        int d = graded_hom(xj, xi, 1);
        if (d == 0) { out.push_back(xj); continue; }
        if (d > 1) throw Unsupported("multiplicity", "approximation of multiplicity " + std::to_string(d));
        out.push_back(detail::cone_one(xj, xi, oracle_check));
    }
    return detail::verified(Smc(x.p, out), x, i, Direction::left);
}

// X_i -> X_i[-1]; X_j -> cocone of the minimal right approximation X_i^{d} -> X_j[1], d = dim Hom^1(X_i, X_j).
inline Smc mutate_right(const Smc& x, int i, bool oracle_check = kOracleCheckDefault) {
    check_index(x, i);
    const auto& xi = x.objects[i];
    std::vector<StalkObject> out;
    for (int j = 0; j < x.p; ++j) {
        const auto& xj = x.objects[j];
        if (j == i) { out.push_back(shift(xi, -1)); continue; }
        int d = graded_hom(xi, xj, 1);
        if (d == 0) { out.push_back(xj); continue; }
        if (d > 1) throw Unsupported("multiplicity", "approximation of multiplicity " + std::to_string(d));
        out.push_back(detail::cone_one(xi, xj, oracle_check));
    }
    return detail::verified(Smc(x.p, out), x, i, Direction::right);
}

inline Smc mutate(const Smc& x, int i, Direction d, bool oracle_check = kOracleCheckDefault) {
    return d == Direction::left ? mutate_left(x, i, oracle_check) : mutate_right(x, i, oracle_check);
}

inline bool is_two_term(const Smc& x) {
    for (const auto& o : x.objects)
        if (o.k != 0 && o.k != 1) return false;
    return true;
}

struct PathResult {
    bool ok = false;
    std::vector<MutationStep> steps;
    std::string diagnostic;
};

namespace detail {

struct KeyMember {
    int index;
    Direction dir;
};

// Members of a type-A piece that a repeated one-sided mutation moves into X_tube.
inline std::vector<KeyMember> key_members(const Smc& x) {
    const auto& c = *x.certificate;
    std::vector<KeyMember> out;
    for (const auto& blk : c.blocks) {
        for (int q : blk.members) {
            const auto& o = x.objects[q];
            int rel = o.k - c.shift_norm;
            if (o.j() == blk.seg.a && o.t() <= blk.seg.l && rel < 0) out.push_back({q, Direction::left});
            if (soc(o.inner).j == mod(blk.seg.a - blk.seg.l, x.p) && o.t() <= blk.seg.l && rel >= 1)
                out.push_back({q, Direction::right});
        }
    }
    return out;
}

}  // namespace detail

// Mutates towards a shift of the standard SMC, growing |X_tube| at every stage.
inline PathResult path_to_standard(const Smc& start, int cap, bool oracle_check = kOracleCheckDefault) {
    PathResult res;
    if (cap < 1) throw InvalidInput("cap must be >= 1");
    Smc x = classified(start);
    while (x.certificate->rank() < x.p) {
        int r = x.certificate->rank();
        int budget = cap - static_cast<int>(res.steps.size());
        std::vector<MutationStep> best;
        int best_rank = r;
        for (const auto& key : detail::key_members(x)) {
            std::vector<MutationStep> run;
            Smc y = x;
            while (static_cast<int>(run.size()) < budget) {
                Smc z = mutate(y, key.index, key.dir, oracle_check);
                run.push_back({key.index, key.dir, y, z});
                y = std::move(z);
                if (y.certificate->rank() > r) break;
            }
            int got = y.certificate->rank();
            if (got > r && (got > best_rank || (got == best_rank && run.size() < best.size()))) {
                best = std::move(run);
                best_rank = got;
            }
        }
        if (best.empty()) {
            res.diagnostic = "stuck at |X_tube| = " + std::to_string(r) + " after " + std::to_string(res.steps.size()) +
                             " steps at " + to_string(x);
            return res;
        }
        for (auto& s : best) res.steps.push_back(std::move(s));
        x = res.steps.back().after;
    }
    res.ok = true;
    return res;
}

}  // namespace tubecat
