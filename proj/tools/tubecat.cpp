#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "tubecat/http.hpp"
#include "tubecat/tubecat.hpp"

using namespace tubecat;
using json = nlohmann::json;

namespace {

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("tubecat");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* lvl = std::getenv("TUBECAT_LOG")) spdlog::set_level(spdlog::level::from_str(lvl));
}

json parse_json_arg(const std::string& text, const std::string& flag) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(flag + ": malformed JSON at byte " + std::to_string(e.byte));
    }
}

json triple_arg(const std::string& text, const std::string& flag) {
    json out = json::array();
    std::size_t pos = 0;
    while (true) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(text.substr(pos), &used);
        } catch (const std::exception&) {
            throw InvalidInput(flag + ": expected j,t,k (error at character " + std::to_string(pos + 1) + ")");
        }
        out.push_back(v);
        pos += used;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw InvalidInput(flag + ": expected ',' at character " + std::to_string(pos + 1));
        ++pos;
    }
    if (out.size() != 3) throw InvalidInput(flag + ": expected exactly three integers j,t,k");
    return out;
}

json smc_arg(int p, const std::string& text) { return {{"p", p}, {"objects", parse_json_arg(text, "--smc")}}; }

std::string read_body(const std::string& arg) {
    if (arg != "-") return arg;
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

std::string label(const json& o) {
    std::ostringstream os;
    os << "S" << o[0].get<int>();
    if (o[1].get<int>() != 1) os << "^(" << o[1].get<int>() << ")";
    if (o[2].get<int>() != 0) os << "[" << o[2].get<int>() << "]";
    return os.str();
}

std::string objects_text(const json& objs) {
    std::string s = "{";
    for (std::size_t i = 0; i < objs.size(); ++i) s += (i ? ", " : "") + label(objs[i]);
    return s + "}";
}

void print_text(const std::string& endpoint, const json& b) {
    auto& out = std::cout;
    if (endpoint == "hom") {
        if (b["degrees"].empty()) out << "all graded homs vanish\n";
        for (const auto& r : b["degrees"]) out << "degree " << r["degree"] << ": dim " << r["dim"] << "\n";
    } else if (endpoint == "verify") {
        out << (b["ok"].get<bool>() ? "ok" : "not an SMC") << "\n";
        for (const auto& v : b["violations"]) out << "  " << v["message"].get<std::string>() << "\n";
        out << "closure: " << b["closure"].get<std::string>() << "\n";
    } else if (endpoint == "classify") {
        const auto& c = b["certificate"];
        out << "rank " << c["rank"] << ", X_tube positions " << c["x_tube"].dump() << ", shift " << c["shift_norm"] << "\n";
        for (const auto& blk : c["blocks"])
            out << "  segment " << blk["segment"].dump() << ": " << objects_text(blk["u"]) << " at positions " << blk["members"].dump()
                << "\n";
    } else if (endpoint == "mutate") {
        out << b["smc"]["objects"].dump() << "\n";
    } else if (endpoint == "extquiver") {
        const auto& q = b["quiver"];
        for (const auto& a : q["arrows"])
            for (int m = 0; m < a[3].get<int>(); ++m)
                out << q["labels"][a[0].get<int>()].get<std::string>() << " -> " << q["labels"][a[1].get<int>()].get<std::string>()
                    << "  degree " << a[2] << "\n";
        out << "gentle rank " << b["gentle"]["rank"] << "\n";
    } else if (endpoint == "explore") {
        out << b["vertices"].size() << " vertices, " << b["edges"].size() << " edges\n";
        for (const auto& v : b["vertices"])
            out << "  v" << v["id"] << " depth " << v["depth"] << (v["pruned"].get<bool>() ? " pruned " : " ") << objects_text(v["objects"])
                << "\n";
        for (const auto& e : b["edges"]) out << "  v" << e["from"] << " -> v" << e["to"] << " at " << e["index"] << "\n";
    } else if (endpoint == "enumerate") {
        if (b.contains("classes")) {
            out << b["classes"].size() << " classes\n";
            for (const auto& c : b["classes"]) out << "  " << c["key"].get<std::string>() << "  count " << c["count"] << "\n";
        } else {
            out << b["smcs"].size() << " SMCs\n";
            for (const auto& x : b["smcs"]) out << "  " << objects_text(x) << "\n";
        }
    } else {
        out << b.dump(2) << "\n";
    }
}

int emit(const std::string& endpoint, const json& req, const std::string& format) {
    auto r = service::dispatch(endpoint, req);
    if (r.status != 200) {
        spdlog::debug("{} failed with status {}", endpoint, r.status);
        std::cerr << "error: " << r.body["error"]["message"].get<std::string>() << "\n";
        if (format == "json") std::cout << r.body.dump() << "\n";
        return r.exit_code;
    }
    if (format == "json") {
        std::cout << r.body.dump() << "\n";
    } else if (format == "dot") {
        if (endpoint == "explore")
            std::cout << to_dot(wire::graph_from_json(
                json{{"p", r.body["p"]}, {"radius", r.body["radius"]}, {"window", r.body["window"]}, {"vertices", r.body["vertices"]}, {"edges", r.body["edges"]}}));
        else if (endpoint == "extquiver")
            std::cout << to_dot(wire::quiver_from_json(r.body["quiver"]));
        else
            throw InvalidInput("--format dot is available for eg and extquiver only");
    } else {
        print_text(endpoint, r.body);
    }
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();
    CLI::App app{"tubecat: simple-minded collections in the derived category of a tube"};
    app.require_subcommand(1);

    int p = 0, at = 0, radius = 2, window = 2, kmax = 3, port = 8080;
    std::string format = "text", smc, from, to, dir = "left", group_by, host = "127.0.0.1", endpoint, body;
    std::optional<int> degree;
    auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
        c->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
    };

    auto* hom = app.add_subcommand("hom", "graded Hom dimensions between two objects");
    hom->add_option("--p", p, "tube rank")->required();
    hom->add_option("--from", from, "source object j,t,k")->required();
    hom->add_option("--to", to, "target object j,t,k")->required();
    hom->add_option("--degree", degree, "single degree");
    add_format(hom, {"text", "json"});

    std::map<std::string, CLI::App*> smc_cmds;
    for (auto [name, help] : {std::pair{"verify", "check the SMC axioms and generation"},
                              std::pair{"classify", "classification certificate"},
                              std::pair{"mutate", "left or right mutation at a member"},
                              std::pair{"extquiver", "Ext-quiver and gentle one-cycle quiver"}}) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("--p", p, "tube rank")->required();
        c->add_option("--smc", smc, "members as a JSON list of [j,t,k]")->required();
        smc_cmds[name] = c;
    }
    smc_cmds["mutate"]->add_option("--at", at, "member index")->required();
    smc_cmds["mutate"]->add_option("--dir", dir, "left or right")->check(CLI::IsMember({"left", "right"}));
    add_format(smc_cmds["verify"], {"text", "json"});
    add_format(smc_cmds["classify"], {"text", "json"});
    add_format(smc_cmds["mutate"], {"text", "json"});
    add_format(smc_cmds["extquiver"], {"text", "json", "dot"});

    auto* eg = app.add_subcommand("eg", "exchange graph neighbourhood");
    eg->add_option("--p", p, "tube rank")->required();
    eg->add_option("--smc", smc, "start SMC (default: the simples)");
    eg->add_option("--radius", radius, "BFS radius");
    eg->add_option("--window", window, "shift bound for members");
    add_format(eg, {"text", "json", "dot"});

    auto* en = app.add_subcommand("enumerate", "SMCs or pre-SMC classes within a window");
    en->add_option("--p", p, "tube rank")->required();
    en->add_option("--window", window, "shift bound for pre-SMC members");
    en->add_option("--kmax", kmax, "largest shift spread");
    en->add_option("--group-by", group_by, "group pre-SMCs")->check(CLI::IsMember({"preclass"}));
    add_format(en, {"text", "json"});

    auto* call = app.add_subcommand("call", "raw JSON request to an endpoint, as served over HTTP");
    call->add_option("endpoint", endpoint, "endpoint name")->required();
    call->add_option("--body", body, "request JSON, or - for stdin")->required();

    auto* serve = app.add_subcommand("serve", "HTTP JSON service");
    serve->add_option("--host", host, "bind address");
    serve->add_option("--port", port, "port");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (hom->parsed()) {
            json req{{"p", p}, {"from", triple_arg(from, "--from")}, {"to", triple_arg(to, "--to")}};
            if (degree) req["degree"] = *degree;
            return emit("hom", req, format);
        }
        for (auto& [name, c] : smc_cmds) {
            if (!c->parsed()) continue;
            json req{{"smc", smc_arg(p, smc)}};
            if (name == "mutate") {
                req["at"] = at;
                req["dir"] = dir;
            }
            return emit(name, req, format);
        }
        if (eg->parsed()) {
            json start = smc.empty() ? wire::to_json(Smc::standard(p)) : smc_arg(p, smc);
            return emit("explore", {{"start", start}, {"radius", radius}, {"window", window}}, format);
        }
        if (en->parsed()) {
            json req{{"p", p}, {"window", window}, {"kmax", kmax}};
            if (!group_by.empty()) req["group_by"] = group_by;
            return emit("enumerate", req, format);
        }
        if (call->parsed()) {
            auto r = service::dispatch_text(endpoint, read_body(body));
            std::cout << r.body.dump() << "\n";
            return r.exit_code;
        }
        if (serve->parsed()) {
            httplib::Server server;
            service::install_routes(server);
            spdlog::info("listening on {}:{}", host, port);
            std::cerr << "serving on http://" << host << ":" << port << "\n";
            if (!server.listen(host, port)) {
                std::cerr << "error: cannot bind " << host << ":" << port << "\n";
                return 1;
            }
            return 0;
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NotAnSmc& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
