#ifndef CFIRE_IO_HPP
#define CFIRE_IO_HPP

// Text input grammars and graph export.
//
//   weight:  "0" | "w3" (1-based omega_3) | "1,0,2" (fundamental coordinates)
//   chips:   "0,0,-1" | "1/2,-1/2"
//   cycles:  "(1 3)(2 4)" or "(1,3)"; "" and "id" give the identity

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "central.hpp"
#include "chips.hpp"
#include "errors.hpp"
#include "rootsys.hpp"

namespace cfire::io {

namespace detail {

inline std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

inline Coord parse_int(const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw InvalidArgument("not an integer: '" + s + "'");
    return static_cast<Coord>(v);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

} // namespace detail

inline Weight parse_weight(const RootSystem& rs, std::string_view text) {
    std::string s = detail::trim(text);
    if (s == "0") return rs.zero();
    if (!s.empty() && (s[0] == 'w' || s[0] == 'W')) {
        Coord i = detail::parse_int(s.substr(1));
        if (i < 1 || static_cast<std::size_t>(i) > rs.rank()) {
            throw InvalidArgument("no fundamental weight " + s + " in " + rs.type().str());
        }
        return rs.fundamental(static_cast<std::size_t>(i - 1));
    }
    auto parts = detail::split(s, ',');
    if (parts.size() != rs.rank()) {
        throw InvalidArgument("weight '" + s + "' needs " + std::to_string(rs.rank()) + " coordinates");
    }
    Weight w = rs.zero();
    for (std::size_t i = 0; i < parts.size(); ++i) w[i] = detail::parse_int(parts[i]);
    return w;
}

/// "0" for zero, "w<i>" for a fundamental weight, else comma-separated coordinates.
inline std::string weight_label(const Weight& w) {
    if (w.is_zero()) return "0";
    std::size_t ones = 0, at = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 1) {
            ++ones;
            at = i;
        } else if (w[i] != 0) {
            ones = 99;
        }
    }
    if (ones == 1) return "w" + std::to_string(at + 1);
    return w.str(",");
}

inline ChipConfig parse_chips(std::string_view text) {
    std::vector<Coord> doubled;
    for (const auto& p : detail::split(detail::trim(text), ',')) {
        auto slash = p.find('/');
        if (slash == std::string::npos) {
            doubled.push_back(checked::mul(2, detail::parse_int(p)));
        } else {
            if (detail::trim(p.substr(slash + 1)) != "2") throw InvalidArgument("chip positions are integers or halves: '" + p + "'");
            Coord num = detail::parse_int(detail::trim(p.substr(0, slash)));
            if (num % 2 == 0) throw InvalidArgument("write whole positions without '/2': '" + p + "'");
            doubled.push_back(num);
        }
    }
    if (doubled.empty()) throw InvalidArgument("no chips given");
    return ChipConfig::from_doubled(std::move(doubled));
}

inline std::vector<std::vector<std::size_t>> parse_cycles(std::string_view text) {
    std::string s = detail::trim(text);
    std::vector<std::vector<std::size_t>> out;
    if (s.empty() || s == "id") return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
            continue;
        }
        if (s[pos] != '(') throw InvalidArgument("cycles look like (1 3)(2 4): '" + s + "'");
        auto close = s.find(')', pos);
        if (close == std::string::npos) throw InvalidArgument("unclosed cycle in '" + s + "'");
        std::string body = s.substr(pos + 1, close - pos - 1);
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream in(body);
        std::vector<std::size_t> cyc;
        std::string tok;
        while (in >> tok) {
            Coord v = detail::parse_int(tok);
            if (v < 1) throw InvalidArgument("cycle entries are 1-based node labels");
            cyc.push_back(static_cast<std::size_t>(v));
        }
        if (!cyc.empty()) out.push_back(std::move(cyc));
        pos = close + 1;
    }
    return out;
}

inline nlohmann::json weight_json(const Weight& w) { return w.vec(); }

inline nlohmann::json graph_json(const RootSystem& rs, const FiringGraph& g) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& w : g.nodes) nodes.push_back(weight_json(w));
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [from, es] : g.edges) {
        std::vector<const FiringGraph::Edge*> sorted;
        for (const auto& e : es) sorted.push_back(&e);
        std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->target < b->target; });
        for (const auto* e : sorted) {
            edges.push_back({{"from", weight_json(from)},
                             {"to", weight_json(e->target)},
                             {"root", rs.positive_roots()[e->root].simple_coords}});
        }
    }
    nlohmann::json nfs = nlohmann::json::array();
    if (g.complete) {
        for (const auto& w : g.normal_forms.at(g.origin)) nfs.push_back(weight_json(w));
    }
    return {{"schema", 1},
            {"type", rs.type().str()},
            {"origin", weight_json(g.origin)},
            {"complete", g.complete},
            {"nodes", nodes},
            {"edges", edges},
            {"normal_forms", nfs}};
}

inline std::string graph_dot(const RootSystem& rs, const FiringGraph& g) {
    auto id = [](const Weight& w) { return "\"" + w.str(",") + "\""; };
    std::string s = "digraph firing {\n";
    s += "  label=\"" + rs.type().str() + " from " + g.origin.str(",") + "\";\n";
    for (const auto& w : g.nodes) {
        const auto& es = g.edges.at(w);
        s += "  " + id(w);
        if (w == g.origin) s += " [shape=box]";
        else if (es.empty()) s += " [peripheries=2]";
        s += ";\n";
    }
    for (const auto& [from, es] : g.edges) {
        std::vector<const FiringGraph::Edge*> sorted;
        for (const auto& e : es) sorted.push_back(&e);
        std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->target < b->target; });
        for (const auto* e : sorted) {
            std::string root;
            for (auto c : rs.positive_roots()[e->root].simple_coords) root += std::to_string(c);
            s += "  " + id(from) + " -> " + id(e->target) + " [label=\"" + root + "\"];\n";
        }
    }
    return s + "}\n";
}

} // namespace cfire::io

#endif // CFIRE_IO_HPP
