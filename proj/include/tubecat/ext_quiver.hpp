#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "tubecat/mutation.hpp"

namespace tubecat {

// ---------------------------------------------------------------------------
// Graded quivers

struct GradedQuiver {
    using Key = std::tuple<int, int, int>;  // source, target, degree

    int n = 0;
    std::vector<std::string> labels;
    std::map<Key, int> arrows;  // multiplicity

    void add(int s, int t, int d, int m = 1) {
        if (m > 0) arrows[{s, t, d}] += m;
    }
    int multiplicity(int s, int t, int d) const {
        auto it = arrows.find({s, t, d});
        return it == arrows.end() ? 0 : it->second;
    }
    int arrow_count() const {
        int c = 0;
        for (const auto& [k, m] : arrows) c += m;
        return c;
    }
    bool operator==(const GradedQuiver& o) const { return n == o.n && arrows == o.arrows; }
};

inline GradedQuiver ext_quiver_of(const Smc& x) {
    GradedQuiver q;
    q.n = static_cast<int>(x.objects.size());
    for (const auto& o : x.objects) q.labels.push_back(to_string(o));
    for (int a = 0; a < q.n; ++a)
        for (int b = 0; b < q.n; ++b)
            for (auto [deg, dim] : hom_degrees(x.objects[a], x.objects[b]))
                if (deg >= 1) q.add(a, b, deg, dim);
    return q;
}

// Sub-quiver induced on the listed vertices, renumbered by position in `vs`.
inline GradedQuiver induced(const GradedQuiver& q, const std::vector<int>& vs) {
    GradedQuiver r;
    r.n = static_cast<int>(vs.size());
    for (int v : vs) r.labels.push_back(q.labels.empty() ? std::to_string(v) : q.labels[v]);
    for (const auto& [k, m] : q.arrows) {
        auto [s, t, d] = k;
        auto is = std::find(vs.begin(), vs.end(), s), it = std::find(vs.begin(), vs.end(), t);
        if (is != vs.end() && it != vs.end()) r.add(static_cast<int>(is - vs.begin()), static_cast<int>(it - vs.begin()), d, m);
    }
    return r;
}

namespace detail {

inline std::vector<std::vector<std::pair<int, int>>> vertex_signatures(const GradedQuiver& q) {
    std::vector<std::vector<std::pair<int, int>>> sig(q.n);
    for (const auto& [k, m] : q.arrows) {
        auto [s, t, d] = k;
        for (int i = 0; i < m; ++i) {
            if (s == t) {
                sig[s].push_back({0, d});
            } else {
                sig[s].push_back({1, d});
                sig[t].push_back({-1, d});
            }
        }
    }
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
}

}  // namespace detail

// Returns perm with q(a -> b) == r(perm[a] -> perm[b]) for all arrows, if one exists.
inline std::optional<std::vector<int>> isomorphism(const GradedQuiver& q, const GradedQuiver& r) {
    if (q.n != r.n || q.arrow_count() != r.arrow_count()) return std::nullopt;
    auto sq = detail::vertex_signatures(q), sr = detail::vertex_signatures(r);
    {
        auto a = sq, b = sr;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::vector<int> perm(q.n, -1);
    std::vector<bool> used(q.n, false);
    auto consistent = [&](int v) {
        for (int u = 0; u <= v; ++u) {
            for (const auto& [k, m] : q.arrows) {
                auto [s, t, d] = k;
                if ((s == v && t == u) || (s == u && t == v))
                    if (r.multiplicity(perm[s], perm[t], d) != m) return false;
            }
            for (const auto& [k, m] : r.arrows) {
                auto [s, t, d] = k;
                if ((s == perm[v] && t == perm[u]) || (s == perm[u] && t == perm[v])) {
                    int qs = s == perm[v] ? v : u, qt = t == perm[v] ? v : u;
                    if (q.multiplicity(qs, qt, d) != m) return false;
                }
            }
        }
        return true;
    };
    std::function<bool(int)> go = [&](int v) {
        if (v == q.n) return true;
        for (int w = 0; w < q.n; ++w) {
            if (used[w] || sq[v] != sr[w]) continue;
            perm[v] = w;
            used[w] = true;
            if (consistent(v) && go(v + 1)) return true;
            used[w] = false;
        }
        perm[v] = -1;
        return false;
    };
    if (!go(0)) return std::nullopt;
    return perm;
}

inline bool isomorphic(const GradedQuiver& q, const GradedQuiver& r) { return isomorphism(q, r).has_value(); }

inline std::string to_string(const GradedQuiver& q) {
    std::ostringstream os;
    os << "n=" << q.n << " {";
    bool first = true;
    for (const auto& [k, m] : q.arrows) {
        auto [s, t, d] = k;
        for (int i = 0; i < m; ++i) {
            os << (first ? "" : ", ") << s << "->" << t << ":" << d;
            first = false;
        }
    }
    return os.str() + "}";
}

inline std::string to_dot(const GradedQuiver& q) {
    std::ostringstream os;
    os << "digraph Q {\n";
    for (int v = 0; v < q.n; ++v)
        os << "  v" << v << " [label=\"" << (q.labels.empty() ? std::to_string(v) : q.labels[v]) << "\"];\n";
    for (const auto& [k, m] : q.arrows) {
        auto [s, t, d] = k;
        for (int i = 0; i < m; ++i) os << "  v" << s << " -> v" << t << " [label=\"" << d << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Graded gentle one-cycle quivers

enum class Color { straight, curly, dotted };

inline std::string to_string(Color c) {
    switch (c) {
        case Color::straight: return "straight";
        case Color::curly: return "curly";
        case Color::dotted: return "dotted";
    }
    return "?";
}

struct GentleArrow {
    int src = 0, tgt = 0, degree = 1;
    Color color = Color::straight;
    auto operator<=>(const GentleArrow&) const = default;
};

// Compositions are recorded by `next`: arrow a composes with next[a] (−1 when none).
// A same-colored consecutive pair that does not compose is listed in `forbidden`;
// this only happens around the loop of a rank-1 quiver.
struct GentleOneCycleQuiver {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<GentleArrow> arrows;
    std::vector<int> next;
    int rank = 0;
    std::vector<int> cycle;  // cycle vertices in arrow order
    std::vector<std::pair<int, int>> forbidden;

    bool on_cycle(int v) const { return std::find(cycle.begin(), cycle.end(), v) != cycle.end(); }
};

namespace detail {

inline std::vector<int> prev_of(const std::vector<int>& next) {
    std::vector<int> prev(next.size(), -1);
    for (std::size_t a = 0; a < next.size(); ++a)
        if (next[a] >= 0) {
            if (prev[next[a]] >= 0) throw InternalError("arrow with two predecessors");
            prev[next[a]] = static_cast<int>(a);
        }
    return prev;
}

// Vertices on the unique cycle of the underlying multigraph, by repeated leaf removal.
inline std::vector<int> cycle_vertex_set(int n, const std::vector<GentleArrow>& arrows) {
    std::vector<int> deg(n, 0);
    for (const auto& a : arrows) {
        ++deg[a.src];
        ++deg[a.tgt];
    }
    std::vector<bool> gone(n, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && deg[v] <= 1) {
                gone[v] = true;
                changed = true;
                for (const auto& a : arrows)
                    if (a.src == v && !gone[a.tgt]) --deg[a.tgt];
                    else if (a.tgt == v && !gone[a.src]) --deg[a.src];
            }
    }
    std::vector<int> r;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) r.push_back(v);
    return r;
}

// Orders the cycle vertices along their arrows; empty if they do not form a directed cycle.
inline std::vector<int> ordered_cycle(const std::vector<int>& vs, const std::vector<GentleArrow>& arrows) {
    if (vs.empty()) return {};
    std::set<int> in(vs.begin(), vs.end());
    std::vector<int> order{vs.front()};
    while (true) {
        int cur = order.back(), nxt = -1, cnt = 0;
        for (const auto& a : arrows)
            if (a.src == cur && in.count(a.tgt)) {
                nxt = a.tgt;
                ++cnt;
            }
        if (cnt != 1) return {};
        if (nxt == order.front()) break;
        if (std::find(order.begin(), order.end(), nxt) != order.end()) return {};
        order.push_back(nxt);
    }
    if (order.size() != vs.size()) return {};
    return order;
}

inline std::vector<std::vector<int>> threads(const GentleOneCycleQuiver& g) {
    auto prev = prev_of(g.next);
    std::vector<std::vector<int>> ts;
    std::vector<bool> seen(g.arrows.size(), false);
    for (std::size_t a = 0; a < g.arrows.size(); ++a) {
        if (prev[a] >= 0) continue;
        std::vector<int> t;
        for (int b = static_cast<int>(a); b >= 0 && !seen[b]; b = g.next[b]) {
            seen[b] = true;
            t.push_back(b);
        }
        ts.push_back(t);
    }
    for (std::size_t a = 0; a < g.arrows.size(); ++a)
        if (!seen[a]) throw InternalError("composition cycle among gentle arrows");
    return ts;
}

// Recomputes rank, cycle, colors and forbidden pairs from arrows and `next`.
inline void finish(GentleOneCycleQuiver& g) {
    auto cyc = cycle_vertex_set(g.n, g.arrows);
    g.cycle = ordered_cycle(cyc, g.arrows);
    g.rank = static_cast<int>(g.cycle.size());
    auto ts = threads(g);
    std::vector<std::set<int>> touches(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (int a : ts[i]) {
            touches[i].insert(g.arrows[a].src);
            touches[i].insert(g.arrows[a].tgt);
        }
    std::vector<std::vector<int>> conflict(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            bool meet = std::any_of(touches[i].begin(), touches[i].end(), [&](int v) { return touches[j].count(v) > 0; });
            if (meet) {
                conflict[i].push_back(static_cast<int>(j));
                conflict[j].push_back(static_cast<int>(i));
            }
        }
    std::vector<Color> palette = g.rank == 1 ? std::vector<Color>{Color::straight, Color::dotted}
                                             : std::vector<Color>{Color::straight, Color::curly, Color::dotted};
    std::vector<int> col(ts.size(), -1);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == ts.size()) return true;
        for (int c = 0; c < static_cast<int>(palette.size()); ++c) {
            bool ok = std::none_of(conflict[i].begin(), conflict[i].end(), [&](int j) { return col[j] == c; });
            if (!ok) continue;
            col[i] = c;
            if (go(i + 1)) return true;
        }
        col[i] = -1;
        return false;
    };
    if (!go(0)) throw InternalError("gentle coloring constraints are unsatisfiable");
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (int a : ts[i]) g.arrows[a].color = palette[col[i]];
    g.forbidden.clear();
    for (int a = 0; a < static_cast<int>(g.arrows.size()); ++a)
        for (int b = 0; b < static_cast<int>(g.arrows.size()); ++b)
            if (g.arrows[a].tgt == g.arrows[b].src && g.arrows[a].color == g.arrows[b].color && g.next[a] != b)
                g.forbidden.push_back({a, b});
}

}  // namespace detail

// Empty when g is a valid graded gentle one-cycle quiver.
inline std::vector<std::string> validate(const GentleOneCycleQuiver& g) {
    std::vector<std::string> bad;
    if (g.arrows.size() != static_cast<std::size_t>(g.n)) bad.push_back("arrow count differs from vertex count");
    if (g.next.size() != g.arrows.size()) bad.push_back("composition table has the wrong size");
    if (!bad.empty()) return bad;
    for (const auto& a : g.arrows)
        if (a.degree < 1) bad.push_back("non-positive degree");
    if (g.rank < 1) bad.push_back("no directed cycle");
    for (std::size_t i = 0; i < g.cycle.size(); ++i) {
        int s = g.cycle[i], t = g.cycle[(i + 1) % g.cycle.size()];
        bool ok = std::any_of(g.arrows.begin(), g.arrows.end(),
                              [&](const GentleArrow& a) { return a.src == s && a.tgt == t && a.degree == 1; });
        if (!ok) bad.push_back("cycle arrow of degree other than 1");
    }
    std::vector<int> indeg(g.n, 0), outdeg(g.n, 0);
    for (const auto& a : g.arrows) {
        ++outdeg[a.src];
        ++indeg[a.tgt];
    }
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] > 2 || outdeg[v] > 2) bad.push_back("vertex " + std::to_string(v) + " has more than two in- or out-arrows");
    std::vector<int> npred(g.arrows.size(), 0);
    for (std::size_t a = 0; a < g.arrows.size(); ++a) {
        int b = g.next[a];
        if (b < 0) continue;
        if (b >= static_cast<int>(g.arrows.size()) || g.arrows[a].tgt != g.arrows[b].src)
            bad.push_back("composition between non-consecutive arrows");
        else if (g.arrows[a].color != g.arrows[b].color)
            bad.push_back("composition changes color");
        else if (++npred[b] > 1)
            bad.push_back("arrow with two predecessors");
    }
    // connectivity
    std::vector<int> comp(g.n);
    for (int v = 0; v < g.n; ++v) comp[v] = v;
    std::function<int(int)> root = [&](int v) { return comp[v] == v ? v : comp[v] = root(comp[v]); };
    for (const auto& a : g.arrows) comp[root(a.src)] = root(a.tgt);
    for (int v = 1; v < g.n; ++v)
        if (root(v) != root(0)) {
            bad.push_back("disconnected");
            break;
        }
    for (auto [a, b] : g.forbidden) {
        int v = g.arrows[a].tgt;
        if (g.rank != 1 || v != g.cycle.front()) bad.push_back("zero relation away from a rank-1 loop");
    }
    return bad;
}

// One arrow per unicolored path; consecutive arrows share a color and are not a forbidden pair.
inline GradedQuiver associated_quiver(const GentleOneCycleQuiver& g) {
    GradedQuiver q;
    q.n = g.n;
    q.labels = g.labels;
    std::set<std::pair<int, int>> zero(g.forbidden.begin(), g.forbidden.end());
    std::vector<bool> used(g.arrows.size(), false);
    std::function<void(int, int, int)> walk = [&](int start, int cur, int deg) {
        q.add(g.arrows[start].src, g.arrows[cur].tgt, deg);
        for (int b = 0; b < static_cast<int>(g.arrows.size()); ++b) {
            if (used[b] || g.arrows[b].src != g.arrows[cur].tgt || g.arrows[b].color != g.arrows[cur].color) continue;
            if (zero.count({cur, b})) continue;
            used[b] = true;
            walk(start, b, deg + g.arrows[b].degree);
            used[b] = false;
        }
    };
    for (int a = 0; a < static_cast<int>(g.arrows.size()); ++a) {
        used[a] = true;
        walk(a, a, g.arrows[a].degree);
        used[a] = false;
    }
    return q;
}

// Builds the gentle one-cycle quiver whose associated quiver is the Ext-quiver of x.
// Arrows are the indecomposable Ext-quiver arrows; compositions are read off the
// composite arrows; the cycle is the X_tube of the classification.
inline GentleOneCycleQuiver gentle_of(const Smc& x) {
    Smc c = x.certificate ? x : classified(x);
    auto q = ext_quiver_of(c);
    GentleOneCycleQuiver g;
    g.n = q.n;
    g.labels = q.labels;
    auto has = [&](int s, int t, int d) { return q.multiplicity(s, t, d) > 0; };
    for (const auto& [k, m] : q.arrows) {
        auto [a, b, d] = k;
        bool decomposable = false;
        for (int v = 0; v < q.n && !decomposable; ++v)
            for (int d1 = 1; d1 < d && !decomposable; ++d1) decomposable = has(a, v, d1) && has(v, b, d - d1);
        if (!decomposable)
            for (int i = 0; i < m; ++i) g.arrows.push_back({a, b, d, Color::straight});
    }
    g.next.assign(g.arrows.size(), -1);
    for (int i = 0; i < static_cast<int>(g.arrows.size()); ++i)
        for (int j = 0; j < static_cast<int>(g.arrows.size()); ++j) {
            const auto &x1 = g.arrows[i], &x2 = g.arrows[j];
            if (x1.tgt != x2.src || !has(x1.src, x2.tgt, x1.degree + x2.degree)) continue;
            if (i == j && x1.src == x1.tgt) continue;
            if (g.next[i] >= 0) throw InternalError("gentle arrow with two successors in " + to_string(c));
            g.next[i] = j;
        }
    detail::prev_of(g.next);
    detail::finish(g);
    std::set<int> xt(c.certificate->x_tube.begin(), c.certificate->x_tube.end());
    if (std::set<int>(g.cycle.begin(), g.cycle.end()) != xt)
        throw InternalError("gentle cycle differs from the X_tube of " + to_string(c));
    auto bad = validate(g);
    if (!bad.empty()) throw InternalError("gentle_of produced an invalid quiver: " + bad.front());
    return g;
}

inline GentleOneCycleQuiver reversed(const GentleOneCycleQuiver& g) {
    GentleOneCycleQuiver r = g;
    for (auto& a : r.arrows) std::swap(a.src, a.tgt);
    r.next.assign(g.arrows.size(), -1);
    for (std::size_t a = 0; a < g.arrows.size(); ++a)
        if (g.next[a] >= 0) r.next[g.next[a]] = static_cast<int>(a);
    detail::finish(r);
    return r;
}

// Case of the left mutation at v.
inline std::string mutation_case(const GentleOneCycleQuiver& g, int v) {
    if (g.on_cycle(v)) {
        if (g.rank > 1) return "cycle_vertex";
        for (const auto& a : g.arrows)
            if (a.tgt == v && a.src != v) return a.degree > 1 ? "cycle_vertex_rank1_delta_gt1" : "cycle_vertex_rank1_delta1";
        return "cycle_vertex_rank1_no_tree_in";
    }
    for (const auto& a : g.arrows)
        if (a.tgt == v && a.degree == 1 && g.on_cycle(a.src)) return "cycle_successor";
    return "tree_vertex";
}

namespace detail {

inline GentleOneCycleQuiver mutate_left_rule(const GentleOneCycleQuiver& g, int v) {
    auto A = g.arrows;
    auto nxt = g.next;
    auto prev = prev_of(nxt);
    const int na = static_cast<int>(A.size());
    std::vector<int> ins, outs, E;
    for (int i = 0; i < na; ++i) {
        if (A[i].tgt == v && A[i].src != v) ins.push_back(i);
        if (A[i].src == v && A[i].tgt != v) outs.push_back(i);
    }
    for (int i : ins)
        if (A[i].degree == 1) E.push_back(i);

    if (E.empty()) {
        for (int i : ins) --A[i].degree;
        for (int i : outs) ++A[i].degree;
    } else if (E.size() == 1) {
        int e = E[0], w = A[e].src, l = prev[e], n = nxt[e];
        int p = -1, q = -1;
        for (int i = 0; i < na; ++i)
            if (A[i].tgt == v && i != e) p = i;
        if (p >= 0) {
            q = nxt[p];
        } else {
            for (int i = 0; i < na; ++i)
                if (A[i].src == v && i != n && prev[i] < 0) q = i;
        }
        for (int i : ins)
            if (i != e) --A[i].degree;
        for (int i : outs)
            if (i != q) ++A[i].degree;
        if (l >= 0) {
            A[l].tgt = v;
            nxt[l] = n;
        }
        A[e] = {v, w, 1, A[e].color};
        nxt[e] = -1;
        if (p >= 0) nxt[p] = e;
        if (q >= 0) {
            A[q].src = w;
            nxt[e] = q;
        }
    } else {
        int L[2], N[2], W[2];
        for (int k = 0; k < 2; ++k) {
            L[k] = prev[E[k]];
            N[k] = nxt[E[k]];
            W[k] = A[E[k]].src;
        }
        for (int i : outs)
            if (i != N[0] && i != N[1]) ++A[i].degree;
        for (int k = 0; k < 2; ++k) {
            if (L[k] >= 0) {
                A[L[k]].tgt = v;
                nxt[L[k]] = -1;
            }
            A[E[k]] = {v, W[k], 1, A[E[k]].color};
            nxt[E[k]] = -1;
        }
        for (int k = 0; k < 2; ++k) {
            int o = 1 - k;
            if (L[o] >= 0) nxt[L[o]] = E[k];
            if (N[o] >= 0) {
                A[N[o]].src = W[k];
                nxt[E[k]] = N[o];
            }
        }
    }
    GentleOneCycleQuiver r = g;
    r.arrows = A;
    r.next = nxt;
    return r;
}

}  // namespace detail

// Left mutation at v replaces the degree-1 arrows into v by arrows out of v and
// reroutes the compositions through them; right mutation is its mirror image.
inline GentleOneCycleQuiver quiver_mutate(const GentleOneCycleQuiver& g, int v, Direction dir) {
    if (v < 0 || v >= g.n) throw InvalidInput("vertex out of range");
    if (dir == Direction::right) return reversed(quiver_mutate(reversed(g), v, Direction::left));
    std::string label = mutation_case(g, v);
    GentleOneCycleQuiver r;
    try {
        r = detail::mutate_left_rule(g, v);
        detail::prev_of(r.next);
        detail::finish(r);
    } catch (const InternalError& e) {
        throw Unsupported(label, e.what());
    }
    auto bad = validate(r);
    if (!bad.empty()) throw Unsupported(label, bad.front());
    return r;
}

// ---------------------------------------------------------------------------
// Local mutation patterns

struct PatternArrow {
    int s = 0, t = 0;
    int coef = 0;    // 0 or 1: multiple of the free degree parameter
    int offset = 0;
};

// Slot 0 is the mutated vertex S. `replaced` is the slot whose object is replaced by
// the extension R after mutating at S.
struct LocalPattern {
    std::string name;
    std::vector<std::string> slots;
    int replaced = 1;
    bool has_param = true;
    std::vector<PatternArrow> before, after;
};

inline GradedQuiver instantiate(const std::vector<PatternArrow>& arrows, int slots, int param) {
    GradedQuiver q;
    q.n = slots;
    for (const auto& a : arrows) q.add(a.s, a.t, a.coef * param + a.offset);
    return q;
}

inline const std::vector<LocalPattern>& local_patterns() {
    static const std::vector<LocalPattern> ps = {
        {"general_1", {"S", "T", "A"}, 1, true, {{1, 0, 0, 1}, {0, 2, 1, 0}, {1, 2, 1, 1}}, {{0, 1, 0, 1}, {0, 2, 1, 1}}},
        {"general_2", {"S", "T", "B"}, 1, true, {{1, 0, 0, 1}, {0, 2, 1, 0}}, {{0, 1, 0, 1}, {0, 2, 1, 1}, {1, 2, 1, 0}}},
        {"general_3", {"S", "T", "C"}, 1, true, {{1, 0, 0, 1}, {2, 0, 1, 1}, {2, 1, 1, 0}}, {{0, 1, 0, 1}, {2, 0, 1, 0}}},
        {"general_4", {"S", "T", "D"}, 1, true, {{1, 0, 0, 1}, {2, 0, 1, 1}}, {{0, 1, 0, 1}, {2, 0, 1, 0}, {2, 1, 1, 1}}},
        {"more_cycles_1", {"S", "X1", "X2"}, 1, false,
         {{1, 2, 0, 1}, {2, 1, 0, 1}, {1, 0, 0, 1}, {2, 0, 0, 2}},
         {{1, 2, 0, 1}, {2, 0, 0, 1}, {0, 1, 0, 1}}},
        {"more_cycles_2", {"S", "X1", "A"}, 1, true,
         {{1, 1, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 2}, {1, 2, 1, 1}, {1, 2, 1, 2}, {0, 2, 1, 0}},
         {{0, 1, 0, 1}, {1, 0, 0, 1}, {1, 2, 1, 2}, {0, 2, 1, 1}}},
        {"more_cycles_3", {"S", "X1", "B"}, 1, true,
         {{1, 1, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 2}, {2, 1, 1, 0}, {2, 1, 1, 1}, {2, 0, 1, 2}},
         {{0, 1, 0, 1}, {1, 0, 0, 1}, {2, 1, 1, 0}, {2, 0, 1, 1}}},
        {"less_cycles_1", {"S", "X2", "A"}, 1, true,
         {{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 2, 1, 1}, {1, 2, 1, 0}},
         {{1, 1, 0, 1}, {1, 2, 1, 0}, {1, 2, 1, 1}, {0, 1, 0, 1}, {0, 1, 0, 2}, {0, 2, 1, 2}}},
        {"less_cycles_2", {"S", "X2", "B"}, 1, true,
         {{0, 1, 0, 1}, {1, 0, 0, 1}, {2, 1, 1, 2}, {2, 0, 1, 1}},
         {{1, 1, 0, 1}, {2, 1, 1, 2}, {2, 1, 1, 1}, {2, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 0, 2}}},
        {"less_cycles_3", {"S", "T", "C"}, 1, true,
         {{0, 0, 0, 1}, {0, 2, 1, 0}, {0, 2, 1, 1}, {1, 0, 0, 1}, {1, 0, 0, 2}, {1, 2, 1, 2}},
         {{0, 0, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 2}, {0, 2, 1, 1}, {0, 2, 1, 2}, {1, 2, 1, 0}}},
        {"less_cycles_4", {"S", "T", "D"}, 1, true,
         {{0, 0, 0, 1}, {2, 0, 1, 1}, {2, 0, 1, 2}, {2, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 2}},
         {{0, 0, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 2}, {2, 0, 1, 0}, {2, 0, 1, 1}, {2, 1, 1, 2}}},
    };
    return ps;
}

struct PatternMatch {
    std::string pattern;
    std::vector<int> vertices;  // slot -> vertex
    int param = 0;
    bool image_matches = false;
    GradedQuiver expected, actual;
};

// Induced sub-quivers of `before` with slot 0 at v that match a pattern exactly.
inline std::vector<PatternMatch> match_patterns(const GradedQuiver& before, int v) {
    std::vector<PatternMatch> out;
    int maxdeg = 0;
    for (const auto& [k, m] : before.arrows) maxdeg = std::max(maxdeg, std::get<2>(k));
    for (const auto& pat : local_patterns()) {
        int ns = static_cast<int>(pat.slots.size());
        std::vector<int> vs{v};
        std::function<void()> go = [&]() {
            if (static_cast<int>(vs.size()) == ns) {
                auto sub = induced(before, vs);
                int hi = pat.has_param ? maxdeg : 0;
                for (int a = pat.has_param ? 1 : 0; a <= hi; ++a) {
                    auto want = instantiate(pat.before, ns, a);
                    if (sub.arrows == want.arrows) {
                        PatternMatch m;
                        m.pattern = pat.name;
                        m.vertices = vs;
                        m.param = a;
                        m.expected = instantiate(pat.after, ns, a);
                        out.push_back(m);
                    }
                }
                return;
            }
            for (int w = 0; w < before.n; ++w) {
                if (std::find(vs.begin(), vs.end(), w) != vs.end()) continue;
                vs.push_back(w);
                go();
                vs.pop_back();
            }
        };
        go();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Compatibility of SMC mutation with quiver mutation

struct CompatibilityVerdict {
    int index = 0;
    Direction direction = Direction::left;
    std::string case_label;
    bool supported = true;
    bool isomorphic = false;
    bool exact = false;  // equal with vertices matched by position
    GradedQuiver smc_side, quiver_side;
    std::vector<PatternMatch> patterns;
    std::string report;

    bool patterns_ok() const {
        return std::all_of(patterns.begin(), patterns.end(), [](const PatternMatch& m) { return m.image_matches; });
    }
    bool ok() const { return supported && isomorphic && patterns_ok(); }
};

inline CompatibilityVerdict check_compatibility(const Smc& x, int i, Direction dir = Direction::left) {
    check_index(x, i);
    CompatibilityVerdict v;
    v.index = i;
    v.direction = dir;
    auto g = gentle_of(x);
    v.case_label = mutation_case(dir == Direction::left ? g : reversed(g), i);
    auto y = mutate(x, i, dir);
    v.smc_side = ext_quiver_of(y);
    try {
        v.quiver_side = associated_quiver(quiver_mutate(g, i, dir));
    } catch (const Unsupported& e) {
        v.supported = false;
        v.report = std::string("unsupported quiver mutation (") + e.case_label + "): " + e.what();
        return v;
    }
    v.exact = v.smc_side == v.quiver_side;
    v.isomorphic = v.exact || tubecat::isomorphic(v.smc_side, v.quiver_side);
    if (dir == Direction::left) {
        v.patterns = match_patterns(ext_quiver_of(x), i);
        for (auto& m : v.patterns) {
            m.actual = induced(v.smc_side, m.vertices);
            m.actual.labels.clear();
            m.image_matches = m.actual.arrows == m.expected.arrows;
        }
    }
    if (!v.ok()) {
        std::ostringstream os;
        os << "mutation " << to_string(dir) << " at " << i << " of " << to_string(x) << " [" << v.case_label << "]\n";
        os << "  smc side:    " << to_string(v.smc_side) << "\n";
        os << "  quiver side: " << to_string(v.quiver_side) << "\n";
        for (const auto& m : v.patterns)
            if (!m.image_matches)
                os << "  pattern " << m.pattern << ": expected " << to_string(m.expected) << ", got " << to_string(m.actual) << "\n";
        v.report = os.str();
    }
    return v;
}

}  // namespace tubecat
