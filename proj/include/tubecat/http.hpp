#pragma once

#include <string>

#include <httplib.h>

#include "tubecat/service.hpp"

namespace tubecat::service {

inline constexpr const char* kServedEndpoints[] = {"verify", "classify", "mutate", "extquiver", "explore", "hom", "enumerate"};

// POST /api/<endpoint> with a JSON body; GET /api/health.
inline void install_routes(httplib::Server& server) {
    for (const char* name : kServedEndpoints) {
        std::string endpoint = name;
        server.Post("/api/" + endpoint, [endpoint](const httplib::Request& req, httplib::Response& res) {
            auto r = dispatch_text(endpoint, req.body);
            res.status = r.status;
            res.set_content(r.body.dump(), "application/json");
        });
    }
    server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(json{{"schema_version", wire::kSchemaVersion}, {"status", "ok"}}.dump(), "application/json");
    });
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Methods", "POST, GET, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
}

}  // namespace tubecat::service
