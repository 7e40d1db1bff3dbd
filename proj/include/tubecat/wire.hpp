#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "tubecat/exchange_graph.hpp"
#include "tubecat/ext_quiver.hpp"

namespace tubecat::wire {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> required,
                       std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) throw InvalidInput(path + ": expected an object");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (auto r : required) known = known || k == r;
        for (auto o : optional) known = known || k == o;
        if (!known) throw InvalidInput(path + ": unknown field \"" + k + "\"");
    }
    for (auto r : required)
        if (!j.contains(r)) throw InvalidInput(path + ": missing field \"" + std::string(r) + "\"");
}

inline int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw InvalidInput(path + ": expected an integer");
    auto v = j.get<long long>();
    if (v < -1000000 || v > 1000000) throw InvalidInput(path + ": integer out of range");
    return static_cast<int>(v);
}

inline int get_int(const json& j, const char* key, const std::string& path) { return get_int(j.at(key), path + "." + key); }

inline bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw InvalidInput(path + ": expected a boolean");
    return j.get<bool>();
}

inline const json& get_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw InvalidInput(path + ": expected an array");
    return j;
}

inline std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw InvalidInput(path + ": expected a string");
    return j.get<std::string>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Objects and collections

inline json to_json(const StalkObject& x) { return json::array({x.j(), x.t(), x.k}); }

// Accepts [j, t, k] or {"j": .., "t": .., "k": ..}.
inline StalkObject object_from_json(const json& j, int p, const std::string& path) {
    int a, t, k;
    if (j.is_array()) {
        if (j.size() != 3) throw InvalidInput(path + ": expected a [j, t, k] triple");
        a = detail::get_int(j[0], path + "[0]");
        t = detail::get_int(j[1], path + "[1]");
        k = detail::get_int(j[2], path + "[2]");
    } else {
        detail::check_keys(j, path, {"j", "t", "k"});
        a = detail::get_int(j, "j", path);
        t = detail::get_int(j, "t", path);
        k = detail::get_int(j, "k", path);
    }
    if (a < 0 || a >= p) throw InvalidInput(path + ": j must lie in [0, p)");
    if (t < 1) throw InvalidInput(path + ": t must be at least 1");
    return StalkObject(p, a, t, k);
}

inline json objects_to_json(const std::vector<StalkObject>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

inline std::vector<StalkObject> objects_from_json(const json& j, int p, const std::string& path) {
    std::vector<StalkObject> xs;
    const auto& arr = detail::get_array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) xs.push_back(object_from_json(arr[i], p, path + "[" + std::to_string(i) + "]"));
    return xs;
}

// WireSmc: {"p": int, "objects": [[j, t, k], ...]}, member order preserved.
inline json to_json(const Smc& x) { return {{"p", x.p}, {"objects", objects_to_json(x.objects)}}; }

inline Smc smc_from_json(const json& j, const std::string& path = "smc") {
    detail::check_keys(j, path, {"p", "objects"});
    int p = detail::get_int(j, "p", path);
    if (p < 1 || p > 64) throw InvalidInput(path + ".p: rank must lie in [1, 64]");
    return Smc(p, objects_from_json(j.at("objects"), p, path + ".objects"));
}

// ---------------------------------------------------------------------------
// Classification certificates

inline json to_json(const Classification& c) {
    json segs = json::array(), blocks = json::array();
    for (const auto& s : c.s_set) segs.push_back(json::array({s.a, s.l}));
    for (const auto& b : c.blocks)
        blocks.push_back({{"segment", json::array({b.seg.a, b.seg.l})}, {"u", objects_to_json(b.u)}, {"members", b.members}});
    return {{"rank", c.rank()}, {"x_tube", c.x_tube}, {"shift_norm", c.shift_norm}, {"s_set", segs}, {"blocks", blocks}};
}

inline Segment segment_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput(path + ": expected an [a, l] pair");
    return {detail::get_int(j[0], path + "[0]"), detail::get_int(j[1], path + "[1]")};
}

inline std::vector<int> ints_from_json(const json& j, const std::string& path) {
    std::vector<int> out;
    const auto& arr = detail::get_array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(detail::get_int(arr[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline Classification classification_from_json(const json& j, int p, const std::string& path = "certificate") {
    detail::check_keys(j, path, {"rank", "x_tube", "shift_norm", "s_set", "blocks"});
    Classification c;
    c.x_tube = ints_from_json(j.at("x_tube"), path + ".x_tube");
    if (detail::get_int(j, "rank", path) != c.rank()) throw InvalidInput(path + ".rank: disagrees with x_tube");
    c.shift_norm = detail::get_int(j, "shift_norm", path);
    const auto& segs = detail::get_array(j.at("s_set"), path + ".s_set");
    for (std::size_t i = 0; i < segs.size(); ++i) c.s_set.push_back(segment_from_json(segs[i], path + ".s_set[" + std::to_string(i) + "]"));
    const auto& blocks = detail::get_array(j.at("blocks"), path + ".blocks");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::string bp = path + ".blocks[" + std::to_string(i) + "]";
        detail::check_keys(blocks[i], bp, {"segment", "u", "members"});
        Block b;
        b.seg = segment_from_json(blocks[i].at("segment"), bp + ".segment");
        b.u = objects_from_json(blocks[i].at("u"), p, bp + ".u");
        b.members = ints_from_json(blocks[i].at("members"), bp + ".members");
        c.blocks.push_back(b);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Quivers

inline json to_json(const GradedQuiver& q) {
    json arrows = json::array();
    for (const auto& [k, m] : q.arrows) {
        auto [s, t, d] = k;
        arrows.push_back(json::array({s, t, d, m}));
    }
    return {{"n", q.n}, {"labels", q.labels}, {"arrows", arrows}};
}

inline std::vector<std::string> labels_from_json(const json& j, int n, const std::string& path) {
    std::vector<std::string> out;
    const auto& arr = detail::get_array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(detail::get_string(arr[i], path + "[" + std::to_string(i) + "]"));
    if (!out.empty() && static_cast<int>(out.size()) != n) throw InvalidInput(path + ": one label per vertex expected");
    return out;
}

inline GradedQuiver quiver_from_json(const json& j, const std::string& path = "quiver") {
    detail::check_keys(j, path, {"n", "labels", "arrows"});
    GradedQuiver q;
    q.n = detail::get_int(j, "n", path);
    if (q.n < 0) throw InvalidInput(path + ".n: negative");
    q.labels = labels_from_json(j.at("labels"), q.n, path + ".labels");
    const auto& arr = detail::get_array(j.at("arrows"), path + ".arrows");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string ap = path + ".arrows[" + std::to_string(i) + "]";
        if (!arr[i].is_array() || arr[i].size() != 4) throw InvalidInput(ap + ": expected [source, target, degree, multiplicity]");
        int s = detail::get_int(arr[i][0], ap + "[0]"), t = detail::get_int(arr[i][1], ap + "[1]");
        int d = detail::get_int(arr[i][2], ap + "[2]"), m = detail::get_int(arr[i][3], ap + "[3]");
        if (s < 0 || s >= q.n || t < 0 || t >= q.n) throw InvalidInput(ap + ": vertex out of range");
        if (m < 1) throw InvalidInput(ap + ": multiplicity must be positive");
        q.add(s, t, d, m);
    }
    return q;
}

inline Color color_from_string(const std::string& s, const std::string& path) {
    if (s == "straight") return Color::straight;
    if (s == "curly") return Color::curly;
    if (s == "dotted") return Color::dotted;
    throw InvalidInput(path + ": unknown color \"" + s + "\"");
}

inline json to_json(const GentleOneCycleQuiver& g) {
    json arrows = json::array(), forbidden = json::array();
    for (const auto& a : g.arrows) arrows.push_back(json::array({a.src, a.tgt, a.degree, to_string(a.color)}));
    for (auto [a, b] : g.forbidden) forbidden.push_back(json::array({a, b}));
    return {{"n", g.n},         {"labels", g.labels}, {"rank", g.rank},          {"cycle", g.cycle},
            {"arrows", arrows}, {"next", g.next},     {"forbidden", forbidden}};
}

inline GentleOneCycleQuiver gentle_from_json(const json& j, const std::string& path = "gentle") {
    detail::check_keys(j, path, {"n", "labels", "rank", "cycle", "arrows", "next", "forbidden"});
    GentleOneCycleQuiver g;
    g.n = detail::get_int(j, "n", path);
    g.labels = labels_from_json(j.at("labels"), g.n, path + ".labels");
    g.rank = detail::get_int(j, "rank", path);
    g.cycle = ints_from_json(j.at("cycle"), path + ".cycle");
    const auto& arr = detail::get_array(j.at("arrows"), path + ".arrows");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string ap = path + ".arrows[" + std::to_string(i) + "]";
        if (!arr[i].is_array() || arr[i].size() != 4) throw InvalidInput(ap + ": expected [source, target, degree, color]");
        GentleArrow a;
        a.src = detail::get_int(arr[i][0], ap + "[0]");
        a.tgt = detail::get_int(arr[i][1], ap + "[1]");
        a.degree = detail::get_int(arr[i][2], ap + "[2]");
        a.color = color_from_string(detail::get_string(arr[i][3], ap + "[3]"), ap + "[3]");
        if (a.src < 0 || a.src >= g.n || a.tgt < 0 || a.tgt >= g.n) throw InvalidInput(ap + ": vertex out of range");
        g.arrows.push_back(a);
    }
    g.next = ints_from_json(j.at("next"), path + ".next");
    if (g.next.size() != g.arrows.size()) throw InvalidInput(path + ".next: one entry per arrow expected");
    for (int b : g.next)
        if (b < -1 || b >= static_cast<int>(g.arrows.size())) throw InvalidInput(path + ".next: arrow index out of range");
    const auto& fb = detail::get_array(j.at("forbidden"), path + ".forbidden");
    for (std::size_t i = 0; i < fb.size(); ++i) {
        auto pr = ints_from_json(fb[i], path + ".forbidden[" + std::to_string(i) + "]");
        if (pr.size() != 2) throw InvalidInput(path + ".forbidden: expected pairs");
        g.forbidden.push_back({pr[0], pr[1]});
    }
    return g;
}

// ---------------------------------------------------------------------------
// Exchange graphs

inline json to_json(const ExchangeGraph& g) {
    json vs = json::array(), es = json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        vs.push_back({{"id", v}, {"objects", objects_to_json(g.vertices[v].objects)}, {"depth", g.depth[v]}, {"pruned", static_cast<bool>(g.pruned[v])}});
    for (const auto& e : g.edges)
        es.push_back({{"from", e.from}, {"to", e.to}, {"index", e.index}, {"mutated", to_json(e.mutated)}});
    return {{"p", g.p}, {"radius", g.radius}, {"window", g.window}, {"vertices", vs}, {"edges", es}};
}

inline ExchangeGraph graph_from_json(const json& j, const std::string& path = "graph") {
    detail::check_keys(j, path, {"p", "radius", "window", "vertices", "edges"});
    ExchangeGraph g;
    g.p = detail::get_int(j, "p", path);
    if (g.p < 1 || g.p > 64) throw InvalidInput(path + ".p: rank must lie in [1, 64]");
    g.radius = detail::get_int(j, "radius", path);
    g.window = detail::get_int(j, "window", path);
    const auto& vs = detail::get_array(j.at("vertices"), path + ".vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::string vp = path + ".vertices[" + std::to_string(i) + "]";
        detail::check_keys(vs[i], vp, {"id", "objects", "depth", "pruned"});
        if (detail::get_int(vs[i], "id", vp) != static_cast<int>(i)) throw InvalidInput(vp + ".id: ids must be consecutive");
        g.vertices.emplace_back(g.p, objects_from_json(vs[i].at("objects"), g.p, vp + ".objects"));
        g.depth.push_back(detail::get_int(vs[i], "depth", vp));
        g.pruned.push_back(detail::get_bool(vs[i].at("pruned"), vp + ".pruned"));
    }
    const auto& es = detail::get_array(j.at("edges"), path + ".edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
        std::string ep = path + ".edges[" + std::to_string(i) + "]";
        detail::check_keys(es[i], ep, {"from", "to", "index", "mutated"});
        Edge e;
        e.from = detail::get_int(es[i], "from", ep);
        e.to = detail::get_int(es[i], "to", ep);
        e.index = detail::get_int(es[i], "index", ep);
        e.mutated = object_from_json(es[i].at("mutated"), g.p, ep + ".mutated");
        int nv = static_cast<int>(g.vertices.size());
        if (e.from < 0 || e.from >= nv || e.to < 0 || e.to >= nv) throw InvalidInput(ep + ": vertex out of range");
        g.edges.push_back(e);
    }
    return g;
}

}  // namespace tubecat::wire
