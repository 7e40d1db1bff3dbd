#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tubecat/derived.hpp"
#include "tubecat/rep_oracle.hpp"

namespace tubecat {

// A tau-orbit segment {S_{a-l+1}, ..., S_a} of the proper set S of simples.
struct Segment {
    int a = 0;
    int l = 1;
    auto operator<=>(const Segment&) const = default;
};

inline bool in_segment(const TubeObject& x, const Segment& s) {
    int pos = mod(s.a - x.j, x.p);
    return pos < s.l && x.t <= s.l - pos;
}

inline std::vector<int> segment_simples(const Segment& s, int p) {
    std::vector<int> out;
    for (int m = 0; m < s.l; ++m) out.push_back(mod(s.a - m, p));
    return out;
}

struct Block {
    Segment seg;
    std::vector<StalkObject> u;  // pre-SMC members, X_tube at shift 0
    std::vector<int> members;    // positions in the SMC of the images F(u)
};

struct Classification {
    std::vector<Segment> s_set;  // sorted by anchor
    std::vector<int> x_tube;     // positions of the X_tube members
    int shift_norm = 0;          // common shift of X_tube
    std::vector<Block> blocks;   // parallel to s_set

    int rank() const { return static_cast<int>(x_tube.size()); }
};

struct PreSmc {
    int p = 1;
    std::vector<Segment> s_set;
    std::vector<std::vector<StalkObject>> blocks;
};

struct Smc {
    int p = 1;
    std::vector<StalkObject> objects;
    std::optional<Classification> certificate;

    Smc() = default;
    Smc(int p_, std::vector<StalkObject> objs) : p(p_), objects(std::move(objs)) {
        if (p_ < 1) throw InvalidInput("rank must be >= 1");
        if (static_cast<int>(objects.size()) != p_)
            throw InvalidInput("an SMC of rank " + std::to_string(p_) + " needs exactly " + std::to_string(p_) + " objects");
        for (const auto& x : objects)
            if (x.p() != p_) throw InvalidInput("object rank differs from collection rank");
    }

    static Smc standard(int p) {
        std::vector<StalkObject> xs;
        for (int j = 0; j < p; ++j) xs.emplace_back(p, j, 1, 0);
        return Smc(p, xs);
    }

    std::vector<StalkObject> sorted_objects() const {
        auto xs = objects;
        std::sort(xs.begin(), xs.end());
        return xs;
    }

    // Exact identity as a set of objects, positions ignored.
    bool same_collection(const Smc& o) const { return p == o.p && sorted_objects() == o.sorted_objects(); }
};

inline Smc shift(const Smc& x, int n) {
    Smc r = x;
    for (auto& o : r.objects) o = shift(o, n);
    r.certificate.reset();
    return r;
}

inline Smc tau(const Smc& x, int n) {
    Smc r = x;
    for (auto& o : r.objects) o = tau_derived(o, n);
    r.certificate.reset();
    return r;
}

inline std::string to_string(const Smc& x) {
    std::string s = "{";
    for (std::size_t i = 0; i < x.objects.size(); ++i) s += (i ? ", " : "") + to_string(x.objects[i]);
    return s + "}";
}

struct AxiomViolation {
    int axiom = 0;
    int i = 0, j = 0;
    int degree = 0, dim = 0;

    std::string describe(const std::vector<StalkObject>& xs) const {
        std::string who = to_string(xs[i]) + " -> " + to_string(xs[j]);
        if (axiom == 1) return "axiom 1: Hom^" + std::to_string(degree) + "(" + who + ") has dimension " + std::to_string(dim);
        if (i == j) return "axiom 2: End(" + to_string(xs[i]) + ") has dimension " + std::to_string(dim);
        return "axiom 2: Hom(" + who + ") has dimension " + std::to_string(dim);
    }
};

// Axioms 1-2: no negative degrees, one-dimensional endomorphisms, no degree-0 maps between members.
inline std::vector<AxiomViolation> axiom_violations(const std::vector<StalkObject>& xs) {
    std::vector<AxiomViolation> out;
    for (int i = 0; i < static_cast<int>(xs.size()); ++i)
        for (int j = 0; j < static_cast<int>(xs.size()); ++j) {
            auto d = hom_degrees(xs[i], xs[j]);
            for (auto [n, dim] : d) {
                if (n < 0) out.push_back({1, i, j, n, dim});
                if (n == 0 && i != j) out.push_back({2, i, j, 0, dim});
                if (n == 0 && i == j && dim != 1) out.push_back({2, i, i, 0, dim});
            }
        }
    return out;
}

inline bool satisfies_axioms(const std::vector<StalkObject>& xs) { return axiom_violations(xs).empty(); }

inline bool pair_ok(const StalkObject& x, const StalkObject& y) {
    for (auto [n, dim] : hom_degrees(x, y))
        if (n < 0 || (n == 0 && dim > 0)) return false;
    for (auto [n, dim] : hom_degrees(y, x))
        if (n < 0 || (n == 0 && dim > 0)) return false;
    return true;
}

inline bool self_ok(const StalkObject& x) {
    auto d = hom_degrees(x, x);
    return d.count(0) && d.at(0) == 1 && d.begin()->first >= 0;
}

// ---- thick closure (mod shift) ----

enum class ClosureVerdict { generates, not_generated_within_bounds, bound_exhausted };

inline std::string to_string(ClosureVerdict v) {
    switch (v) {
        case ClosureVerdict::generates: return "generates";
        case ClosureVerdict::not_generated_within_bounds: return "not_generated_within_bounds";
        default: return "bound_exhausted";
    }
}

struct ClosureResult {
    std::set<TubeObject> objects;
    ClosureVerdict verdict = ClosureVerdict::not_generated_within_bounds;
    bool truncated = false;
};

enum class ConeEngine { symbolic, oracle };

namespace detail {

inline std::vector<TubeObject> pair_cones_symbolic(const TubeObject& a, const TubeObject& b) {
    std::vector<TubeObject> out;
    for (int s : hom_lengths(a, b)) {
        auto kc = canonical_map_kernel_cokernel(a, b, s);
        if (kc.ker) out.push_back(*kc.ker);
        if (kc.coker) out.push_back(*kc.coker);
    }
    for (int s : ext_lengths(a, b))
        for (const auto& m : extension_middle(a, b, s)) out.push_back(m);
    return out;
}

inline std::vector<TubeObject> pair_cones_oracle(const TubeObject& a, const TubeObject& b) {
    std::vector<TubeObject> out;
    auto ra = realize<Fp>(a), rb = realize<Fp>(b);
    for (const auto& f : hom_space_basis(ra, rb)) {
        auto c = cone_cohomology(ra, rb, f);
        out.insert(out.end(), c.h_minus1.begin(), c.h_minus1.end());
        out.insert(out.end(), c.h0.begin(), c.h0.end());
    }
    for (const auto& e : ext_space_basis(ra, rb))
        for (const auto& m : decompose(extension_rep(ra, rb, e))) out.push_back(m);
    return out;
}

}  // namespace detail

// Closes the shift classes of xs under summands of cones of canonical degree-0 and degree-1 maps.
// Objects longer than length_cap are dropped. "generates" is a certificate; the other verdicts are not refutations.
inline ClosureResult thick_closure(const std::vector<TubeObject>& xs, int length_cap, const std::vector<int>& targets,
                                   ConeEngine engine = ConeEngine::symbolic) {
    ClosureResult r;
    if (xs.empty()) return r;
    int p = xs.front().p;
    std::vector<TubeObject> list;
    for (const auto& x : xs)
        if (x.t <= length_cap && r.objects.insert(x).second) list.push_back(x);
        else if (x.t > length_cap) r.truncated = true;
    std::size_t done = 0;
    while (done < list.size()) {
        std::size_t n = list.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = (i < done ? done : 0); j < n; ++j) {
                for (int dir = 0; dir < 2; ++dir) {
                    const auto& a = dir ? list[j] : list[i];
                    const auto& b = dir ? list[i] : list[j];
                    auto cs = engine == ConeEngine::symbolic ? detail::pair_cones_symbolic(a, b) : detail::pair_cones_oracle(a, b);
                    for (const auto& c : cs) {
                        if (c.t > length_cap) { r.truncated = true; continue; }
                        if (r.objects.insert(c).second) list.push_back(c);
                    }
                }
            }
        done = n;
    }
    bool all = true;
    for (int s : targets)
        if (!r.objects.count(TubeObject::simple(p, s))) all = false;
    r.verdict = all ? ClosureVerdict::generates
                    : (r.truncated ? ClosureVerdict::bound_exhausted : ClosureVerdict::not_generated_within_bounds);
    return r;
}

inline ClosureResult thick_closure(const std::vector<StalkObject>& xs, int length_cap = 0, ConeEngine engine = ConeEngine::symbolic) {
    if (xs.empty()) return {};
    int p = xs.front().p();
    std::vector<TubeObject> inner;
    for (const auto& x : xs) inner.push_back(x.inner);
    std::vector<int> all(p);
    for (int i = 0; i < p; ++i) all[i] = i;
    return thick_closure(inner, length_cap > 0 ? length_cap : 2 * p, all, engine);
}

// ---- type A pieces ----

struct TypeACheck {
    bool ok = false;
    std::string reason;
};

inline TypeACheck check_type_a_smc(const std::vector<StalkObject>& u, const Segment& seg) {
    if (u.empty()) return {false, "empty collection"};
    int p = u.front().p();
    if (static_cast<int>(u.size()) != seg.l) return {false, "size differs from segment length"};
    for (const auto& x : u)
        if (!in_segment(x.inner, seg)) return {false, to_string(x) + " lies outside the segment"};
    auto v = axiom_violations(u);
    if (!v.empty()) return {false, v.front().describe(u)};
    bool key = std::any_of(u.begin(), u.end(), [&](const StalkObject& x) { return x.j() == mod(seg.a, p); });
    if (!key) return {false, "no member with top at the segment anchor"};
    std::vector<TubeObject> inner;
    for (const auto& x : u) inner.push_back(x.inner);
    auto c = thick_closure(inner, seg.l, segment_simples(seg, p));
    if (c.verdict != ClosureVerdict::generates) return {false, "closure does not generate the segment: " + to_string(c.verdict)};
    return {true, ""};
}

// ---- F and its inverse ----

inline const Segment* find_segment(const TubeObject& x, const std::vector<Segment>& s_set) {
    for (const auto& s : s_set)
        if (in_segment(x, s)) return &s;
    return nullptr;
}

inline StalkObject f_map(const StalkObject& x, const std::vector<Segment>& s_set) {
    const Segment* s = find_segment(x.inner, s_set);
    if (!s) throw InvalidInput(to_string(x) + " is not supported in the subcategory generated by S");
    if (x.j() != mod(s->a, x.p())) return x;
    int t = x.t();
    return {x.p(), s->a - t, s->l + 1 - t, x.k + 1};
}

inline StalkObject f_inverse(const StalkObject& x, const std::vector<Segment>& s_set) {
    int p = x.p();
    for (const auto& s : s_set)
        if (soc(x.inner).j == mod(s.a - s.l, p) && x.t() <= s.l) return {p, s.a, s.l + 1 - x.t(), x.k - 1};
    for (const auto& s : s_set) {
        Segment inner{mod(s.a - 1, p), s.l - 1};
        if (inner.l > 0 && in_segment(x.inner, inner)) return x;
    }
    throw InvalidInput(to_string(x) + " is outside the domain of the inverse assignment");
}

// X_tube members for S: S_{a_i}^{(l_i+1)} and the simples outside every S_{a_i}^{(l_i+1)}.
inline std::vector<StalkObject> x_tube_of(int p, const std::vector<Segment>& s_set) {
    std::vector<bool> covered(p, false);
    std::vector<StalkObject> out;
    for (const auto& s : s_set) {
        out.emplace_back(p, s.a, s.l + 1, 0);
        for (int m = 0; m <= s.l; ++m) covered[mod(s.a - m, p)] = true;
    }
    for (int b = 0; b < p; ++b)
        if (!covered[b]) out.emplace_back(p, b, 1, 0);
    std::sort(out.begin(), out.end(), [](const StalkObject& x, const StalkObject& y) {
        return std::pair(x.j(), x.t()) < std::pair(y.j(), y.t());
    });
    return out;
}

inline void validate_s_set(int p, const std::vector<Segment>& s_set) {
    std::vector<int> use(p, 0);
    int total = 0;
    for (const auto& s : s_set) {
        if (s.a < 0 || s.a >= p || s.l < 1) throw InvalidInput("malformed segment");
        for (int m = 0; m <= s.l; ++m) ++use[mod(s.a - m, p)];
        total += s.l;
    }
    if (total >= p) throw InvalidInput("S must be a proper set of simples");
    for (int u : use)
        if (u > 1) throw InvalidInput("segments of S overlap or touch");
}

inline Smc assemble_smc(const PreSmc& pre) {
    int p = pre.p;
    validate_s_set(p, pre.s_set);
    if (pre.blocks.size() != pre.s_set.size()) throw InvalidInput("one block per segment required");
    Classification c;
    std::vector<StalkObject> xs = x_tube_of(p, pre.s_set);
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) c.x_tube.push_back(i);
    for (std::size_t b = 0; b < pre.s_set.size(); ++b) {
        const auto& seg = pre.s_set[b];
        auto chk = check_type_a_smc(pre.blocks[b], seg);
        if (!chk.ok) throw InvalidInput("block at anchor " + std::to_string(seg.a) + " is not a type-A SMC: " + chk.reason);
        Block blk{seg, pre.blocks[b], {}};
        for (const auto& u : pre.blocks[b]) {
            blk.members.push_back(static_cast<int>(xs.size()));
            xs.push_back(u.k >= 0 ? f_map(u, pre.s_set) : u);
        }
        c.blocks.push_back(std::move(blk));
    }
    c.s_set = pre.s_set;
    Smc out(p, xs);
    auto v = axiom_violations(out.objects);
    if (!v.empty()) throw InternalError("assembled collection violates " + v.front().describe(out.objects));
    out.certificate = std::move(c);
    return out;
}

// ---- X_tube extraction and classification ----

inline bool is_tube_cycle(const std::vector<StalkObject>& t) {
    int r = static_cast<int>(t.size());
    if (r == 1) return hom_degrees(t[0], t[0]) == std::map<int, int>{{0, 1}, {1, 1}};
    std::vector<int> succ(r, -1);
    for (int a = 0; a < r; ++a) {
        int outs = 0;
        for (int b = 0; b < r; ++b) {
            auto d = hom_degrees(t[a], t[b]);
            if (a == b) {
                if (d != std::map<int, int>{{0, 1}}) return false;
                continue;
            }
            for (auto [n, dim] : d)
                if (n != 1 || dim != 1) return false;
            if (d.count(1)) {
                ++outs;
                succ[a] = b;
            }
        }
        if (outs != 1) return false;
    }
    int x = 0, steps = 0;
    do {
        x = succ[x];
        ++steps;
    } while (x != 0 && steps <= r);
    return x == 0 && steps == r;
}

struct XTube {
    std::vector<int> members;
    int shift = 0;
};

// All maximal tube-cycle subsets whose lengths sum to p, largest first.
inline std::vector<XTube> x_tube_candidates(const std::vector<StalkObject>& xs) {
    int p = xs.empty() ? 1 : xs.front().p();
    std::map<int, std::vector<int>> by_shift;
    for (int i = 0; i < static_cast<int>(xs.size()); ++i)
        if (xs[i].t() <= p) by_shift[xs[i].k].push_back(i);
    std::vector<XTube> found;
    for (const auto& [k, idx] : by_shift) {
        int m = static_cast<int>(idx.size());
        std::vector<int> pick;
        auto rec = [&](auto&& self, int from, int len) -> void {
            if (len == p) {
                std::vector<StalkObject> t;
                for (int q : pick) t.push_back(xs[q]);
                if (is_tube_cycle(t)) found.push_back({pick, k});
                return;
            }
            for (int q = from; q < m; ++q) {
                int nl = len + xs[idx[q]].t();
                if (nl > p) continue;
                pick.push_back(idx[q]);
                self(self, q + 1, nl);
                pick.pop_back();
            }
        };
        rec(rec, 0, 0);
    }
    std::stable_sort(found.begin(), found.end(), [](const XTube& a, const XTube& b) { return a.members.size() > b.members.size(); });
    return found;
}

inline std::optional<XTube> extract_x_tube(const std::vector<StalkObject>& xs) {
    auto c = x_tube_candidates(xs);
    if (c.empty()) return std::nullopt;
    return c.front();
}

struct ClassifyOutcome {
    std::optional<Classification> cert;
    std::vector<AxiomViolation> violations;
    std::string reason;
};

namespace detail {

inline std::optional<Classification> decode(const std::vector<StalkObject>& xs, const XTube& xt, std::string& why) {
    int p = xs.front().p();
    Classification c;
    c.x_tube = xt.members;
    c.shift_norm = xt.shift;
    std::vector<int> cover(p, 0);
    for (int q : xt.members) {
        const auto& x = xs[q];
        for (int m = 0; m < x.t(); ++m) ++cover[mod(x.j() - m, p)];
        if (x.t() >= 2) c.s_set.push_back({x.j(), x.t() - 1});
    }
    for (int v : cover)
        if (v != 1) { why = "X_tube factors do not tile the simples"; return std::nullopt; }
    std::sort(c.s_set.begin(), c.s_set.end());
    for (const auto& s : c.s_set) c.blocks.push_back({s, {}, {}});
    std::vector<bool> in_tube(xs.size(), false);
    for (int q : xt.members) in_tube[q] = true;
    for (int q = 0; q < static_cast<int>(xs.size()); ++q) {
        if (in_tube[q]) continue;
        StalkObject y = shift(xs[q], -xt.shift);
        bool placed = false;
        for (auto& blk : c.blocks) {
            const auto& s = blk.seg;
            if (in_segment(y.inner, s)) {
                if (y.j() == s.a && y.k >= 0) break;
                blk.u.push_back(y);
            } else if (soc(y.inner).j == mod(s.a - s.l, p) && y.t() <= s.l && y.k >= 1) {
                blk.u.push_back(f_inverse(y, c.s_set));
            } else {
                continue;
            }
            blk.members.push_back(q);
            placed = true;
            break;
        }
        if (!placed) { why = to_string(xs[q]) + " does not decode into any type-A piece"; return std::nullopt; }
    }
    for (auto& blk : c.blocks) {
        auto chk = check_type_a_smc(blk.u, blk.seg);
        if (!chk.ok) { why = "piece at anchor " + std::to_string(blk.seg.a) + ": " + chk.reason; return std::nullopt; }
    }
    return c;
}

}  // namespace detail

inline ClassifyOutcome try_classify(const std::vector<StalkObject>& xs) {
    ClassifyOutcome out;
    if (xs.empty()) { out.reason = "empty collection"; return out; }
    out.violations = axiom_violations(xs);
    if (!out.violations.empty()) { out.reason = out.violations.front().describe(xs); return out; }
    auto cands = x_tube_candidates(xs);
    if (cands.empty()) { out.reason = "no subset forms the simples of a tube"; return out; }
    std::string why;
    for (const auto& xt : cands) {
        if (xt.members.size() < cands.front().members.size()) break;
        if (auto c = detail::decode(xs, xt, why)) { out.cert = std::move(c); return out; }
    }
    out.reason = why;
    return out;
}

inline Classification classify(const std::vector<StalkObject>& xs) {
    auto r = try_classify(xs);
    if (!r.cert) throw NotAnSmc(r.reason);
    return *r.cert;
}

inline Smc classified(Smc x) {
    if (!x.certificate) x.certificate = classify(x.objects);
    return x;
}

inline PreSmc pre_smc_of(const Smc& x, const Classification& c) {
    PreSmc pre{x.p, c.s_set, {}};
    for (const auto& b : c.blocks) {
        auto u = b.u;
        std::sort(u.begin(), u.end());
        pre.blocks.push_back(u);
    }
    return pre;
}

inline bool same_pre_smc(PreSmc a, PreSmc b) {
    for (auto* pre : {&a, &b})
        for (auto& blk : pre->blocks) std::sort(blk.begin(), blk.end());
    return a.p == b.p && a.s_set == b.s_set && a.blocks == b.blocks;
}

// ---- normal forms ----

using Triple = std::array<int, 3>;

inline std::vector<Triple> serialize(const std::vector<StalkObject>& xs) {
    std::vector<Triple> out;
    for (const auto& x : xs) out.push_back({x.j(), x.t(), x.k});
    std::sort(out.begin(), out.end());
    return out;
}

// X_tube at shift 0, then the tau-rotation with least sorted (j, t, k) list.
inline Smc normalize(const Smc& x) {
    Smc c = classified(x);
    Smc base = shift(c, -c.certificate->shift_norm);
    std::optional<std::vector<Triple>> best;
    for (int n = 0; n < x.p; ++n) {
        auto s = serialize(tau(base, n).objects);
        if (!best || s < *best) best = s;
    }
    std::vector<StalkObject> objs;
    for (const auto& t : *best) objs.emplace_back(x.p, t[0], t[1], t[2]);
    return classified(Smc(x.p, objs));
}

// ---- bounded enumeration ----

// Type-A SMCs of a segment with member shifts in [-window, window] and shift spread at most kmax.
inline std::vector<std::vector<StalkObject>> enumerate_type_a(int p, const Segment& seg, int window, int kmax) {
    std::vector<StalkObject> cand;
    for (int k = -window; k <= window; ++k)
        for (int pos = 0; pos < seg.l; ++pos)
            for (int t = 1; t <= seg.l - pos; ++t) cand.emplace_back(p, seg.a - pos, t, k);
    std::sort(cand.begin(), cand.end(), [](const StalkObject& x, const StalkObject& y) {
        return std::tuple(x.k, x.j(), x.t()) < std::tuple(y.k, y.j(), y.t());
    });
    std::vector<std::vector<StalkObject>> out;
    std::vector<StalkObject> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == seg.l) {
            if (check_type_a_smc(pick, seg).ok) out.push_back(pick);
            return;
        }
        for (std::size_t q = from; q < cand.size(); ++q) {
            const auto& c = cand[q];
            if (!pick.empty() && c.k - pick.front().k > kmax) break;
            if (!self_ok(c)) continue;
            bool ok = true;
            for (const auto& y : pick)
                if (!pair_ok(c, y)) { ok = false; break; }
            if (!ok) continue;
            pick.push_back(c);
            self(self, q + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Proper sets S of simples, as sorted segment lists.
inline std::vector<std::vector<Segment>> proper_s_sets(int p) {
    std::vector<std::vector<Segment>> out;
    for (unsigned mask = 0; mask + 1 < (1u << p); ++mask) {
        std::vector<Segment> segs;
        for (int a = 0; a < p; ++a) {
            if (!(mask >> a & 1u) || (mask >> mod(a + 1, p) & 1u)) continue;
            int l = 0;
            while (l < p && (mask >> mod(a - l, p) & 1u)) ++l;
            segs.push_back({a, l});
        }
        std::sort(segs.begin(), segs.end());
        out.push_back(segs);
    }
    return out;
}

inline std::vector<PreSmc> enumerate_pre_smcs(int p, int window, int kmax) {
    std::vector<PreSmc> out;
    for (const auto& segs : proper_s_sets(p)) {
        std::vector<std::vector<std::vector<StalkObject>>> choices;
        for (const auto& s : segs) choices.push_back(enumerate_type_a(p, s, window, kmax));
        PreSmc cur{p, segs, {}};
        auto rec = [&](auto&& self, std::size_t b) -> void {
            if (b == segs.size()) { out.push_back(cur); return; }
            for (const auto& u : choices[b]) {
                cur.blocks.push_back(u);
                self(self, b + 1);
                cur.blocks.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

// Shape of a pre-SMC up to tau-rotation and shifts: segments plus, per block, the
// (distance from anchor, length) of each member. Members' shifts are ignored.
inline std::string pre_class_key(const PreSmc& pre) {
    std::string best;
    for (int n = 0; n < pre.p; ++n) {
        std::vector<std::pair<Segment, std::vector<std::pair<int, int>>>> rows;
        for (std::size_t b = 0; b < pre.s_set.size(); ++b) {
            Segment seg{mod(pre.s_set[b].a + n, pre.p), pre.s_set[b].l};
            std::vector<std::pair<int, int>> items;
            for (const auto& x : pre.blocks[b]) items.push_back({mod(seg.a - (x.j() + n), pre.p), x.t()});
            std::sort(items.begin(), items.end());
            rows.push_back({seg, items});
        }
        std::sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) {
            return std::tie(l.first.a, l.first.l, l.second) < std::tie(r.first.a, r.first.l, r.second);
        });
        std::string key;
        for (const auto& [seg, items] : rows) {
            key += "[" + std::to_string(seg.a) + "," + std::to_string(seg.l) + ":";
            for (auto [o, t] : items) key += " " + std::to_string(o) + "/" + std::to_string(t);
            key += "]";
        }
        if (key.empty()) key = "[]";
        if (n == 0 || key < best) best = key;
    }
    return best;
}

// Normalized SMCs whose pre-SMC lies within the bounds, each once.
inline std::vector<Smc> enumerate(int p, int window, int kmax) {
    std::set<std::vector<Triple>> seen;
    std::vector<Smc> out;
    for (const auto& pre : enumerate_pre_smcs(p, window, kmax)) {
        Smc n = normalize(assemble_smc(pre));
        if (seen.insert(serialize(n.objects)).second) out.push_back(std::move(n));
    }
    std::sort(out.begin(), out.end(), [](const Smc& a, const Smc& b) { return serialize(a.objects) < serialize(b.objects); });
    return out;
}

}  // namespace tubecat
