#pragma once

#include <map>
#include <string>

#include "tubecat/wire.hpp"

namespace tubecat::service {

using json = nlohmann::json;

// Request bounds for the service; larger explorations belong in library code.
inline constexpr int kMaxServiceRank = 8;
inline constexpr int kMaxRadius = 8;
inline constexpr int kMaxWindow = 8;
inline constexpr int kMaxEnumerateRank = 6;
inline constexpr int kMaxEnumerateWindow = 4;
inline constexpr int kMaxEnumerateKmax = 6;

struct Response {
    int status = 200;
    int exit_code = 0;
    json body;
};

namespace detail {

using wire::detail::check_keys;
using wire::detail::get_int;

inline json versioned(json body) {
    body["schema_version"] = wire::kSchemaVersion;
    return body;
}

inline Smc bounded_smc(const json& j, const std::string& path) {
    auto x = wire::smc_from_json(j, path);
    if (x.p > kMaxServiceRank) throw InvalidInput(path + ".p: the service accepts ranks up to " + std::to_string(kMaxServiceRank));
    return x;
}

inline int bounded(const json& j, const char* key, int lo, int hi, const std::string& path) {
    int v = get_int(j, key, path);
    if (v < lo || v > hi)
        throw InvalidInput(path + "." + key + ": must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

inline Direction direction_from(const json& j, const std::string& path) {
    auto s = wire::detail::get_string(j, path);
    if (s == "left") return Direction::left;
    if (s == "right") return Direction::right;
    throw InvalidInput(path + ": expected \"left\" or \"right\"");
}

}  // namespace detail

// {"p", "from": [j,t,k], "to": [j,t,k], "degree"?}
inline json hom(const json& req) {
    detail::check_keys(req, "request", {"p", "from", "to"}, {"degree"});
    int p = detail::bounded(req, "p", 1, 64, "request");
    auto x = wire::object_from_json(req.at("from"), p, "request.from");
    auto y = wire::object_from_json(req.at("to"), p, "request.to");
    json rows = json::array();
    if (req.contains("degree")) {
        int n = detail::get_int(req, "degree", "request");
        rows.push_back({{"degree", n}, {"dim", graded_hom(x, y, n)}});
    } else {
        for (auto [n, d] : hom_degrees(x, y)) rows.push_back({{"degree", n}, {"dim", d}});
    }
    return detail::versioned({{"from", wire::to_json(x)}, {"to", wire::to_json(y)}, {"degrees", rows}});
}

// {"smc"} -> axioms and generation
inline json verify(const json& req) {
    detail::check_keys(req, "request", {"smc"});
    auto x = detail::bounded_smc(req.at("smc"), "request.smc");
    json vs = json::array();
    for (const auto& v : axiom_violations(x.objects))
        vs.push_back({{"axiom", v.axiom}, {"i", v.i}, {"j", v.j}, {"degree", v.degree}, {"dim", v.dim}, {"message", v.describe(x.objects)}});
    std::string closure = "skipped";
    bool ok = vs.empty();
    if (ok) {
        auto c = thick_closure(x.objects);
        closure = to_string(c.verdict);
        ok = c.verdict == ClosureVerdict::generates;
    }
    return detail::versioned({{"ok", ok}, {"violations", vs}, {"closure", closure}});
}

// {"smc"} -> certificate; NotAnSmc when it does not classify
inline json classify(const json& req) {
    detail::check_keys(req, "request", {"smc"});
    auto x = detail::bounded_smc(req.at("smc"), "request.smc");
    auto c = tubecat::classify(x.objects);
    return detail::versioned({{"smc", wire::to_json(x)}, {"certificate", wire::to_json(c)}});
}

// {"smc", "at", "dir"}
inline json mutate(const json& req) {
    detail::check_keys(req, "request", {"smc", "at", "dir"});
    auto x = detail::bounded_smc(req.at("smc"), "request.smc");
    int at = detail::get_int(req, "at", "request");
    if (at < 0 || at >= x.p) throw InvalidInput("request.at: index out of range");
    auto dir = detail::direction_from(req.at("dir"), "request.dir");
    auto y = tubecat::mutate(classified(x), at, dir);
    return detail::versioned({{"smc", wire::to_json(y)}});
}

// {"smc"} -> Ext-quiver and its gentle one-cycle quiver
inline json extquiver(const json& req) {
    detail::check_keys(req, "request", {"smc"});
    auto x = classified(detail::bounded_smc(req.at("smc"), "request.smc"));
    return detail::versioned({{"quiver", wire::to_json(ext_quiver_of(x))}, {"gentle", wire::to_json(gentle_of(x))}});
}

// {"start", "radius", "window"} -> {vertices, edges}
inline json explore(const json& req) {
    detail::check_keys(req, "request", {"start", "radius", "window"});
    auto x = classified(detail::bounded_smc(req.at("start"), "request.start"));
    int radius = detail::bounded(req, "radius", 0, kMaxRadius, "request");
    int window = detail::bounded(req, "window", 0, kMaxWindow, "request");
    return detail::versioned(wire::to_json(tubecat::explore(x, radius, window)));
}

// {"p", "window", "kmax", "group_by"?: "preclass"}
inline json enumerate(const json& req) {
    detail::check_keys(req, "request", {"p", "window", "kmax"}, {"group_by"});
    int p = detail::bounded(req, "p", 1, kMaxEnumerateRank, "request");
    int w = detail::bounded(req, "window", 0, kMaxEnumerateWindow, "request");
    int kmax = detail::bounded(req, "kmax", 0, kMaxEnumerateKmax, "request");
    if (req.contains("group_by")) {
        if (wire::detail::get_string(req.at("group_by"), "request.group_by") != "preclass")
            throw InvalidInput("request.group_by: only \"preclass\" is supported");
        std::map<std::string, std::pair<int, PreSmc>> classes;
        for (const auto& pre : enumerate_pre_smcs(p, w, kmax)) {
            auto key = pre_class_key(pre);
            auto it = classes.find(key);
            if (it == classes.end()) classes.emplace(key, std::make_pair(1, pre));
            else ++it->second.first;
        }
        json cs = json::array();
        for (const auto& [key, v] : classes) {
            json segs = json::array(), blocks = json::array();
            for (const auto& s : v.second.s_set) segs.push_back(json::array({s.a, s.l}));
            for (const auto& b : v.second.blocks) blocks.push_back(wire::objects_to_json(b));
            cs.push_back({{"key", key}, {"count", v.first}, {"representative", {{"s_set", segs}, {"blocks", blocks}}}});
        }
        return detail::versioned({{"p", p}, {"classes", cs}});
    }
    json xs = json::array();
    for (const auto& x : tubecat::enumerate(p, w, kmax)) xs.push_back(wire::objects_to_json(x.objects));
    return detail::versioned({{"p", p}, {"smcs", xs}});
}

inline const std::map<std::string, json (*)(const json&)>& endpoints() {
    static const std::map<std::string, json (*)(const json&)> m = {
        {"hom", &hom},         {"verify", &verify},   {"classify", &classify}, {"mutate", &mutate},
        {"extquiver", &extquiver}, {"explore", &explore}, {"enumerate", &enumerate},
    };
    return m;
}

inline json error_body(const std::string& kind, const std::string& message) {
    return detail::versioned({{"error", {{"kind", kind}, {"message", message}}}});
}

// Runs one endpoint and maps failures to HTTP status and CLI exit code.
inline Response dispatch(const std::string& endpoint, const json& req) {
    auto it = endpoints().find(endpoint);
    if (it == endpoints().end()) return {404, 1, error_body("invalid_input", "unknown endpoint \"" + endpoint + "\"")};
    try {
        auto body = it->second(req);
        int code = 0;
        if (endpoint == "verify" && !body.at("ok").get<bool>()) code = 2;
        return {200, code, body};
    } catch (const InvalidInput& e) {
        return {400, 1, error_body("invalid_input", e.what())};
    } catch (const NotAnSmc& e) {
        return {422, 2, error_body("not_an_smc", e.what())};
    } catch (const Unsupported& e) {
        return {422, 3, error_body("unsupported", e.what())};
    } catch (const InternalError& e) {
        return {500, 3, error_body("internal", e.what())};
    } catch (const json::exception& e) {
        return {400, 1, error_body("invalid_input", e.what())};
    }
}

inline Response dispatch_text(const std::string& endpoint, const std::string& body) {
    json req;
    try {
        req = json::parse(body);
    } catch (const json::parse_error& e) {
        return {400, 1, error_body("invalid_input", "malformed JSON at byte " + std::to_string(e.byte))};
    }
    return dispatch(endpoint, req);
}

}  // namespace tubecat::service
