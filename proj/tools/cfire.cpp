// cfire: command-line driver for central-firing experiments.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cfire/central.hpp"
#include "cfire/chips.hpp"
#include "cfire/folding.hpp"
#include "cfire/io.hpp"
#include "cfire/rootsys.hpp"
#include "cfire/span.hpp"
#include "cfire/ucf.hpp"
#include "cfire/unlabeled.hpp"

using namespace cfire;
using nlohmann::json;

namespace {

struct Globals {
    std::size_t budget = default_budget();
    unsigned threads = 1;
    bool long_runs = false;
    bool timing = false;
    std::string format = "text";

    bool as_json() const { return format == "json"; }
};

const RootSystem& system_for(const Globals& g, const std::string& name) {
    const auto& rs = root_system(name);
    if (rs.rank() >= 6 && !g.long_runs) throw InvalidArgument(rs.type().str() + " has rank >= 6; pass --long to run it");
    return rs;
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.as_json()) {
        json out = j;
        out["schema"] = 1;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string lines(const std::vector<Weight>& ws) {
    std::string s;
    for (const auto& w : ws) s += "  " + w.str() + "\n";
    return s;
}

json weights_json(const std::vector<Weight>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(w.vec());
    return a;
}

// ---- verify ----------------------------------------------------------------

struct Row {
    std::string start;
    bool predicted = false;
    std::optional<bool> computed;  // empty when the budget ran out
    std::size_t nodes = 0;
    long long elapsed_ms = 0;

    bool agree() const { return computed && *computed == predicted; }
};

std::vector<Row> verify_type(const Globals& g, const RootSystem& rs) {
    std::vector<Weight> starts{rs.zero()};
    for (std::size_t i = 0; i < rs.rank(); ++i) starts.push_back(rs.fundamental(i));
    std::vector<Row> rows(starts.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next++) < starts.size();) {
            Row& r = rows[k];
            r.start = io::weight_label(starts[k]);
            r.predicted = conjecture_prediction(rs, starts[k]);
            auto t0 = std::chrono::steady_clock::now();
            try {
                auto res = decide_confluence(rs, starts[k], SearchOptions{g.budget, false});
                r.computed = res.confluent;
                r.nodes = res.nodes_explored;
            } catch (const BudgetExceeded& e) {
                r.nodes = e.explored();
            }
            r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    std::vector<std::thread> pool;
    unsigned k = std::max(1u, std::min<unsigned>(g.threads, static_cast<unsigned>(starts.size())));
    for (unsigned t = 1; t < k; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rows;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& types) {
    bool all_ok = true;
    json reports = json::array();
    std::string text;
    for (const auto& name : types) {
        const auto& rs = system_for(g, name);
        auto rows = verify_type(g, rs);
        bool agree = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.agree(); });
        all_ok = all_ok && agree;
        json jr = json::array();
        text += rs.type().str() + (agree ? "  agree\n" : "  MISMATCH\n");
        for (const auto& r : rows) {
            json row{{"start", r.start}, {"predicted", r.predicted}, {"agree", r.agree()}, {"nodes_explored", r.nodes}};
            row["computed"] = r.computed ? json(*r.computed) : json(nullptr);
            if (!r.computed) row["status"] = "budget";
            if (g.timing) row["elapsed_ms"] = r.elapsed_ms;
            jr.push_back(row);
            auto tf = [](bool b) { return b ? "T" : "F"; };
            text += "  " + r.start + std::string(r.start.size() < 4 ? 4 - r.start.size() : 0, ' ') + " predicted " + tf(r.predicted) +
                    " computed " + (r.computed ? tf(*r.computed) : "budget") + " nodes " + std::to_string(r.nodes);
            if (g.timing) text += " ms " + std::to_string(r.elapsed_ms);
            text += r.agree() ? "\n" : "  <--\n";
        }
        reports.push_back({{"type", rs.type().str()}, {"rows", jr}, {"agree", agree}});
    }
    emit(g, {{"reports", reports}, {"agree", all_ok}}, text);
    return all_ok ? 0 : 1;
}

// ---- stabilize --------------------------------------------------------------

int cmd_stabilize(const Globals& g, const std::string& type, const std::string& weight, const std::string& chips,
                  const std::string& mode) {
    const auto& rs = system_for(g, type);
    json j{{"type", rs.type().str()}, {"mode", mode}};
    std::string text;

    if (!chips.empty() && mode == "unlabeled") {
        if (rs.type().family != Family::A) throw InvalidArgument("unlabeled chip stabilization is implemented for type A");
        auto cfg = io::parse_chips(chips);
        if (cfg.half()) throw InvalidArgument("type A chips sit on integer positions");
        if (cfg.size() != chip_count(rs)) throw InvalidArgument(rs.type().str() + " takes " + std::to_string(chip_count(rs)) + " chips");
        std::vector<Coord> pos;
        for (auto d : cfg.doubled()) pos.push_back(d / 2);
        auto v = UnlabeledConfig::sorted(pos);
        auto p = pseudo_stabilization(v);
        auto s = stabilize_unlabeled_typeA(v);
        j["chips"] = v.positions();
        j["pseudo_stabilization"] = p.positions();
        j["stabilization"] = s.positions();
        j["strictly_dominated"] = dominance_compare(v, p) == Dominance::StrictlyBelow;
        text = s.str() + "\n";
        emit(g, j, text);
        return 0;
    }

    Weight lam = chips.empty() ? io::parse_weight(rs, weight) : chips_to_weight(rs, io::parse_chips(chips));
    j["start"] = lam.vec();
    if (mode == "unlabeled") {
        auto nf = orbit_normal_form(rs, OrbitWeight::of(rs, lam));
        j["normal_form"] = nf.rep.vec();
        auto pred = stabilization_prediction(rs, lam);
        j["prediction"] = pred ? json(pred->rep.vec()) : json(nullptr);
        text = nf.rep.str() + "\n";
    } else if (mode == "labeled") {
        auto nfs = normal_forms(rs, lam, SearchOptions{g.budget, false});
        j["normal_forms"] = weights_json(nfs);
        j["confluent"] = nfs.size() == 1;
        text = std::string(nfs.size() == 1 ? "confluent" : "not confluent") + ", " + std::to_string(nfs.size()) + " normal form(s)\n" + lines(nfs);
        if (rs.type().classical()) {
            json diagrams = json::array();
            for (const auto& w : nfs) {
                auto cfg = weight_to_chips(rs, w);
                diagrams.push_back(chips_to_json(cfg));
                text += "\n" + render_chips(cfg);
            }
            j["chips"] = diagrams;
        }
    } else {
        throw InvalidArgument("mode is labeled or unlabeled");
    }
    emit(g, j, text);
    return 0;
}

// ---- ucf / span / connected / chips / fold / export ------------------------

int cmd_ucf(const Globals& g, const std::string& type, const std::string& weight, const std::string& script, std::size_t depth) {
    const auto& rs = system_for(g, type);
    Weight lam = io::parse_weight(rs, weight);
    if (script.empty()) {
        std::string text = ucf_trajectory_text(rs, lam, depth);
        emit(g, {{"type", rs.type().str()}, {"start", lam.vec()}, {"trajectory", text}}, text);
        return 0;
    }
    std::vector<std::size_t> choices;
    for (const auto& c : io::detail::split(script, ',')) {
        Coord k = io::detail::parse_int(c);
        if (k < 0) throw InvalidArgument("script entries are component indices >= 0");
        choices.push_back(static_cast<std::size_t>(k));
    }
    auto steps = ucf_scripted(rs, lam, choices);
    std::string text = lam.str() + "\n";
    json js = json::array();
    for (const auto& [comp, w] : steps) {
        text += "  " + detail::node_set(comp.nodes) + " -> " + w.str() + "\n";
        js.push_back({{"component", detail::node_set(comp.nodes)}, {"weight", w.vec()}});
    }
    emit(g, {{"type", rs.type().str()}, {"start", lam.vec()}, {"steps", js}}, text);
    return 0;
}

int cmd_span(const Globals& g, const std::string& type, const std::string& weight) {
    const auto& rs = system_for(g, type);
    Weight lam = io::parse_weight(rs, weight);
    auto s = firing_span(rs, lam, g.budget);
    json basis = json::array();
    for (const auto& row : s.basis()) {
        json r = json::array();
        for (const auto& q : row) r.push_back(to_string(q));
        basis.push_back(r);
    }
    emit(g, {{"type", rs.type().str()}, {"start", lam.vec()}, {"dim", s.dim()}, {"basis", basis}},
         "dim " + std::to_string(s.dim()) + " of " + std::to_string(rs.rank()) + "\n" + s.str());
    return 0;
}

int cmd_connected(const Globals& g, const std::string& type, const std::string& weight) {
    const auto& rs = system_for(g, type);
    Weight lam = io::parse_weight(rs, weight);
    bool c = is_connected(rs, lam, g.budget);
    json j{{"type", rs.type().str()}, {"start", lam.vec()}, {"connected", c}};
    std::string text = std::string(c ? "connected" : "not connected") + "\n";
    if (rs.type().family == Family::A) {
        auto w = typeA_connectivity(rs, lam);
        j["classification"] = w.connected;
        j["omega"] = w.omega.vec();
        j["coefficients"] = w.coefficients ? json(*w.coefficients) : json(nullptr);
        text += "type A rule: " + std::string(w.connected ? "connected" : "not connected") + ", rho+omega = " + w.top.str() + "\n";
    }
    emit(g, j, text);
    return 0;
}

int cmd_chips(const Globals& g, const std::string& type, const std::string& weight, const std::string& config) {
    const auto& rs = system_for(g, type);
    ChipConfig cfg = config.empty() ? weight_to_chips(rs, io::parse_weight(rs, weight)) : io::parse_chips(config);
    Weight lam = chips_to_weight(rs, cfg);
    auto moves = legal_moves(rs.type().family, cfg);
    json jm = json::array();
    std::string ms;
    for (const auto& m : moves) {
        jm.push_back(m.str());
        ms += " " + m.str();
    }
    json j = chips_to_json(cfg);
    j["type"] = rs.type().str();
    j["weight"] = lam.vec();
    j["moves"] = jm;
    emit(g, j, render_chips(cfg) + "weight " + lam.str() + "\nmoves" + (ms.empty() ? " none" : ms) + "\n");
    return 0;
}

int cmd_fold(const Globals& g, const std::string& type, const std::string& cycles, const std::string& check) {
    const auto& rs = system_for(g, type);
    auto f = fold(rs, sigma_from_cycles(rs.rank(), io::parse_cycles(cycles)));
    json orbits = json::array();
    for (const auto& o : f.orbits) {
        json a = json::array();
        for (auto i : o) a.push_back(i + 1);
        orbits.push_back(a);
    }
    json j{{"source", f.source.str()}, {"target", f.target.str()}, {"orbits", orbits}, {"relabeling", f.relabeling}};
    std::string text = folding_text(f);
    if (!check.empty()) {
        Weight lam = io::parse_weight(rs, check);
        auto r = confluence_propagation_check(rs, f, lam, SearchOptions{g.budget, false});
        j["check"] = {{"start", lam.vec()},
                      {"source_confluent", r.source_confluent},
                      {"target_confluent", r.target_confluent},
                      {"source_normal_forms", weights_json(r.source_normal_forms)},
                      {"target_normal_forms", weights_json(r.target_normal_forms)},
                      {"consistent", r.consistent}};
        text += "from " + lam.str() + ": source " + (r.source_confluent ? "confluent" : "not confluent") + ", target " +
                (r.target_confluent ? "confluent" : "not confluent") + (r.consistent ? "" : "  INCONSISTENT") + "\n";
        emit(g, j, text);
        return r.consistent ? 0 : 1;
    }
    emit(g, j, text);
    return 0;
}

int cmd_export(const Globals& g, const std::string& type, const std::string& weight, const std::string& fmt, const std::string& out) {
    const auto& rs = system_for(g, type);
    Weight lam = io::parse_weight(rs, weight);
    auto graph = explore_graph(rs, lam, g.budget);
    std::string body = fmt == "dot" ? io::graph_dot(rs, graph) : io::graph_json(rs, graph).dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << body;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
        f << body;
        f.close();
        if (!f) throw std::runtime_error("failed writing '" + out + "'");
    }
    return graph.complete ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Central-firing on root-system weight lattices"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--budget", g.budget, "node budget for exhaustive searches (default: $CFIRE_BUDGET or 50000000)")->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "worker threads for verify rows")->check(CLI::PositiveNumber);
    app.add_flag("--long", g.long_runs, "allow rank >= 6 types");
    app.add_flag("--timing", g.timing, "include wall-clock times in verify reports");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> verify_types;
    auto* verify = app.add_subcommand("verify", "compare computed confluence from 0 and each omega_i with the prediction");
    verify->add_option("types", verify_types, "root system types, e.g. A3 G2")->required();

    std::string type, weight = "0", chips, mode = "labeled", script, config, cycles, check, fmt = "json", out;
    std::size_t depth = 64;

    auto* stabilize = app.add_subcommand("stabilize", "normal forms of labeled or unlabeled firing");
    stabilize->add_option("type", type)->required();
    stabilize->add_option("weight", weight, "0, w<i>, or comma-separated coordinates");
    stabilize->add_option("--chips", chips, "start from a chip configuration instead of a weight");
    stabilize->add_option("--mode", mode)->check(CLI::IsMember({"labeled", "unlabeled"}));

    auto* ucf = app.add_subcommand("ucf", "play the Dynkin-diagram game");
    ucf->add_option("type", type)->required();
    ucf->add_option("weight", weight);
    ucf->add_option("--script", script, "comma-separated component choices");
    ucf->add_option("--depth", depth, "depth cap for the full trajectory");

    auto* span = app.add_subcommand("span", "firing span basis");
    span->add_option("type", type)->required();
    span->add_option("weight", weight);

    auto* connected = app.add_subcommand("connected", "is the firing span the whole space");
    connected->add_option("type", type)->required();
    connected->add_option("weight", weight);

    auto* chipcmd = app.add_subcommand("chips", "chip diagram and legal moves");
    chipcmd->add_option("type", type)->required();
    chipcmd->add_option("weight", weight);
    chipcmd->add_option("--config", config, "chip positions instead of a weight, e.g. 0,0,1/2");

    auto* foldcmd = app.add_subcommand("fold", "fold a simply-laced diagram along an automorphism");
    foldcmd->add_option("type", type)->required();
    foldcmd->add_option("cycles", cycles, "e.g. \"(1 3)\"")->required();
    foldcmd->add_option("--check", check, "sigma-fixed weight for a propagation check");

    auto* exportcmd = app.add_subcommand("export", "write the reachable firing graph");
    exportcmd->add_option("type", type)->required();
    exportcmd->add_option("weight", weight);
    exportcmd->add_option("--graph-format", fmt, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    exportcmd->add_option("-o,--out", out, "output path ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(g, verify_types);
        if (*stabilize) return cmd_stabilize(g, type, weight, chips, mode);
        if (*ucf) return cmd_ucf(g, type, weight, script, depth);
        if (*span) return cmd_span(g, type, weight);
        if (*connected) return cmd_connected(g, type, weight);
        if (*chipcmd) return cmd_chips(g, type, weight, config);
        if (*foldcmd) return cmd_fold(g, type, cycles, check);
        if (*exportcmd) return cmd_export(g, type, weight, fmt, out);
    } catch (const BudgetExceeded& e) {
        std::cerr << "cfire: " << e.what() << " (raise --budget)\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "cfire: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
