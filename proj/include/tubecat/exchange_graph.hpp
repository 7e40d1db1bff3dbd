#pragma once

#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tubecat/mutation.hpp"

namespace tubecat {

// Directed left-mutation edge: mutate_left(vertices[from], index) == vertices[to].
struct Edge {
    int from = 0, to = 0, index = 0;
    StalkObject mutated;
    auto operator<=>(const Edge&) const = default;
};

struct ExchangeGraph {
    int p = 1;
    int radius = 0;
    int window = 0;  // member shifts kept within [-window, window]
    std::vector<Smc> vertices;  // objects in sorted order
    std::vector<int> depth;
    std::vector<bool> pruned;   // some neighbour fell outside the window
    std::vector<Edge> edges;

    int find(const std::vector<Triple>& key) const {
        for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
            if (serialize(vertices[v].objects) == key) return v;
        return -1;
    }
};

inline std::string compact(const std::vector<StalkObject>& xs) {
    std::string s = "[";
    auto ts = serialize(xs);
    for (std::size_t i = 0; i < ts.size(); ++i)
        s += (i ? "," : "") + std::string("[") + std::to_string(ts[i][0]) + "," + std::to_string(ts[i][1]) + "," +
             std::to_string(ts[i][2]) + "]";
    return s + "]";
}

inline Smc sorted_smc(const Smc& x) {
    Smc r(x.p, x.sorted_objects());
    return classified(r);
}

inline int index_of(const Smc& x, const StalkObject& o) {
    for (int i = 0; i < static_cast<int>(x.objects.size()); ++i)
        if (x.objects[i] == o) return i;
    throw InternalError("object not found in collection");
}

inline bool within_window(const Smc& x, int window) {
    for (const auto& o : x.objects)
        if (o.k < -window || o.k > window) return false;
    return true;
}

// BFS by all left and right mutations up to the given radius, discarding vertices outside the window.
// The result is the induced subgraph on the vertices found.
inline ExchangeGraph explore(const Smc& start, int radius, int window, bool oracle_check = kOracleCheckDefault) {
    if (radius < 0 || window < 0) throw InvalidInput("radius and window must be non-negative");
    ExchangeGraph g;
    g.p = start.p;
    g.radius = radius;
    g.window = window;
    Smc s = sorted_smc(start);
    if (!within_window(s, window)) throw InvalidInput("start lies outside the window");
    std::map<std::vector<Triple>, int> id;
    std::set<Edge> edges;
    auto add = [&](const Smc& x, int d) {
        auto key = serialize(x.objects);
        auto it = id.find(key);
        if (it != id.end()) return it->second;
        int v = static_cast<int>(g.vertices.size());
        id.emplace(key, v);
        g.vertices.push_back(x);
        g.depth.push_back(d);
        g.pruned.push_back(false);
        return v;
    };
    add(s, 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        bool frontier = g.depth[u] >= radius;
        for (int i = 0; i < g.p; ++i) {
            for (Direction dir : {Direction::left, Direction::right}) {
                Smc y = mutate(g.vertices[u], i, dir, oracle_check);
                if (!within_window(y, window)) { g.pruned[u] = true; continue; }
                Smc ys = sorted_smc(y);
                int v;
                if (frontier) {
                    // Frontier vertices only contribute edges to vertices already found.
                    auto it = id.find(serialize(ys.objects));
                    if (it == id.end()) continue;
                    v = it->second;
                } else {
                    std::size_t before = g.vertices.size();
                    v = add(ys, g.depth[u] + 1);
                    if (g.vertices.size() > before) queue.push_back(v);
                }
                if (dir == Direction::left) {
                    edges.insert({u, v, i, g.vertices[u].objects[i]});
                } else {
                    int back = index_of(g.vertices[v], shift(g.vertices[u].objects[i], -1));
                    edges.insert({v, u, back, g.vertices[v].objects[back]});
                }
            }
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

namespace detail {

inline std::vector<std::vector<StalkObject>> two_term_collections(int p) {
    std::vector<StalkObject> cand;
    for (int k = 0; k <= 1; ++k)
        for (int j = 0; j < p; ++j)
            for (int t = 1; t <= p; ++t) cand.emplace_back(p, j, t, k);
    std::vector<std::vector<StalkObject>> out;
    std::vector<StalkObject> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == p) {
            if (try_classify(pick).cert) out.push_back(pick);
            return;
        }
        for (std::size_t q = from; q < cand.size(); ++q) {
            if (!self_ok(cand[q])) continue;
            bool ok = true;
            for (const auto& y : pick)
                if (!pair_ok(cand[q], y)) { ok = false; break; }
            if (!ok) continue;
            pick.push_back(cand[q]);
            self(self, q + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

struct TwoTermGraph {
    ExchangeGraph graph;
    int standard = -1, standard_shifted = -1;
    int reach_standard_shifted = 0;  // vertices with a monotone left path to X_0[1]
    int reach_standard = 0;          // vertices with a monotone right path to X_0
    bool connected = false;
};

// All 2-term SMCs with the 2-term-preserving left-mutation edges between them.
inline TwoTermGraph two_term_subgraph(int p, bool oracle_check = kOracleCheckDefault) {
    if (p < 1) throw InvalidInput("rank must be >= 1");
    TwoTermGraph r;
    auto& g = r.graph;
    g.p = p;
    g.window = 1;
    std::map<std::vector<Triple>, int> id;
    for (auto& xs : detail::two_term_collections(p)) {
        std::sort(xs.begin(), xs.end());
        id.emplace(serialize(xs), static_cast<int>(g.vertices.size()));
        g.vertices.push_back(classified(Smc(p, xs)));
        g.depth.push_back(0);
        g.pruned.push_back(false);
    }
    for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u)
        for (int i = 0; i < p; ++i) {
            Smc y = mutate_left(g.vertices[u], i, oracle_check);
            if (!is_two_term(y)) continue;
            auto it = id.find(serialize(y.objects));
            if (it == id.end()) throw InternalError("2-term mutation left the enumerated set");
            g.edges.push_back({u, it->second, i, g.vertices[u].objects[i]});
        }
    std::sort(g.edges.begin(), g.edges.end());
    r.standard = id.at(serialize(Smc::standard(p).objects));
    r.standard_shifted = id.at(serialize(shift(Smc::standard(p), 1).objects));
    int cap = 4 * p * p + 4;
    for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u) {
        for (Direction dir : {Direction::left, Direction::right}) {
            Smc x = g.vertices[u];
            int goal = dir == Direction::left ? r.standard_shifted : r.standard;
            int keep = dir == Direction::left ? 0 : 1;
            for (int step = 0; step <= cap; ++step) {
                if (serialize(x.objects) == serialize(g.vertices[goal].objects)) {
                    (dir == Direction::left ? r.reach_standard_shifted : r.reach_standard) += 1;
                    break;
                }
                int at = -1;
                for (int i = 0; i < p && at < 0; ++i)
                    if (x.objects[i].k == keep) at = i;
                if (at < 0) break;
                x = sorted_smc(mutate(x, at, dir, oracle_check));
                if (!is_two_term(x)) break;
            }
        }
    }
    int n = static_cast<int>(g.vertices.size());
    r.connected = r.reach_standard == n && r.reach_standard_shifted == n;
    return r;
}

struct ConnectivityReport {
    int components = 0;
    std::vector<int> component_of;
    std::vector<bool> has_standard_shift;   // per component
    std::vector<std::vector<int>> witness;  // per component: path from its first vertex to a shift of X_0, if any
};

inline bool is_standard_shift(const Smc& x) { return classified(x).certificate->rank() == x.p; }

inline ConnectivityReport connectivity_report(const ExchangeGraph& g) {
    int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    ConnectivityReport r;
    r.component_of.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        if (r.component_of[s] >= 0) continue;
        int c = r.components++;
        std::vector<int> parent(n, -1);
        std::deque<int> q{s};
        r.component_of[s] = c;
        int target = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (target < 0 && is_standard_shift(g.vertices[u])) target = u;
            for (int v : adj[u])
                if (r.component_of[v] < 0) {
                    r.component_of[v] = c;
                    parent[v] = u;
                    q.push_back(v);
                }
        }
        r.has_standard_shift.push_back(target >= 0);
        std::vector<int> path;
        for (int v = target; v >= 0; v = parent[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        r.witness.push_back(path);
    }
    return r;
}

// Union of graphs over the same rank, vertices identified exactly.
inline ExchangeGraph merge(const std::vector<ExchangeGraph>& gs) {
    ExchangeGraph m;
    if (gs.empty()) return m;
    m.p = gs.front().p;
    std::map<std::vector<Triple>, int> id;
    std::set<Edge> edges;
    for (const auto& g : gs) {
        m.radius = std::max(m.radius, g.radius);
        m.window = std::max(m.window, g.window);
        std::vector<int> map(g.vertices.size());
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
            auto key = serialize(g.vertices[v].objects);
            auto it = id.find(key);
            if (it == id.end()) {
                it = id.emplace(key, static_cast<int>(m.vertices.size())).first;
                m.vertices.push_back(g.vertices[v]);
                m.depth.push_back(g.depth[v]);
                m.pruned.push_back(g.pruned[v]);
            }
            map[v] = it->second;
        }
        for (const auto& e : g.edges) edges.insert({map[e.from], map[e.to], e.index, e.mutated});
    }
    m.edges.assign(edges.begin(), edges.end());
    return m;
}

inline std::string to_dot(const ExchangeGraph& g) {
    std::ostringstream os;
    os << "digraph EG {\n";
    os << "  graph [rank_p=" << g.p << ", radius=" << g.radius << ", window=" << g.window << "];\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        os << "  v" << v << " [label=\"" << compact(g.vertices[v].objects) << "\"";
        if (g.pruned[v]) os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& e : g.edges)
        os << "  v" << e.from << " -> v" << e.to << " [label=\"" << to_string(e.mutated) << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace tubecat
