#ifndef CFIRE_UCF_HPP
#define CFIRE_UCF_HPP

// The Dynkin-diagram number game for simply-laced types. An assignment of
// nonnegative integers to the nodes is a dominant weight; a move fires one
// connected component of zero nodes.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rootsys.hpp"
#include "unlabeled.hpp"

namespace cfire {

using UcfAssignment = Weight;

struct ZeroComponent {
    std::vector<std::size_t> nodes;  ///< sorted, 0-based

    friend bool operator==(const ZeroComponent&, const ZeroComponent&) = default;
    friend auto operator<=>(const ZeroComponent&, const ZeroComponent&) = default;

    bool contains(const ZeroComponent& o) const {
        return std::includes(nodes.begin(), nodes.end(), o.nodes.begin(), o.nodes.end());
    }
};

/// Type of a component's induced diagram and the edges of its affine node.
struct ComponentType {
    Family family = Family::A;
    int rank = 0;
    std::vector<std::pair<std::size_t, Coord>> affine_edges;  ///< (node, multiplicity)

    std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

namespace detail {

inline void require_simply_laced(const RootSystem& rs) {
    if (!rs.type().simply_laced()) {
        throw InvalidArgument("the number game needs a simply-laced type, got " + rs.type().str());
    }
}

inline void require_assignment(const RootSystem& rs, const UcfAssignment& f) {
    if (f.size() != rs.rank()) throw InvalidArgument("assignment rank mismatch");
    if (!rs.is_dominant(f)) throw InvalidArgument("assignment values must be nonnegative");
}

inline std::string node_set(const std::vector<std::size_t>& nodes) {
    std::string s = "{";
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(nodes[k] + 1);
    }
    return s + "}";
}

} // namespace detail

/// Connected components of the zero nodes, ordered by least node.
inline std::vector<ZeroComponent> zero_components(const RootSystem& rs, const UcfAssignment& f) {
    detail::require_simply_laced(rs);
    detail::require_assignment(rs, f);
    const std::size_t n = rs.rank();
    std::vector<bool> seen(n, false);
    std::vector<ZeroComponent> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (f[s] != 0 || seen[s]) continue;
        ZeroComponent c;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            c.nodes.push_back(i);
            for (auto j : rs.neighbors(i)) {
                if (f[j] == 0 && !seen[j]) {
                    seen[j] = true;
                    stack.push_back(j);
                }
            }
        }
        std::sort(c.nodes.begin(), c.nodes.end());
        out.push_back(std::move(c));
    }
    return out;
}

/// Classifies a connected node set by its degree sequence and attaches the
/// affine node: ends of a path; for D, next to the end of the long arm; for E,
/// at the end of the arm of length 1, 2, 4 for E6, E7, E8.
inline ComponentType classify_component(const RootSystem& rs, const std::vector<std::size_t>& nodes) {
    detail::require_simply_laced(rs);
    if (nodes.empty()) throw InvalidArgument("empty component");
    std::set<std::size_t> in(nodes.begin(), nodes.end());
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (auto i : nodes) {
        adj[i];
        for (auto j : rs.neighbors(i)) {
            if (in.count(j)) adj[i].push_back(j);
        }
    }
    ComponentType t;
    t.rank = static_cast<int>(nodes.size());
    if (nodes.size() == 1) {
        t.family = Family::A;
        t.affine_edges = {{nodes[0], 2}};
        return t;
    }
    std::vector<std::size_t> ends, branch;
    for (const auto& [i, nb] : adj) {
        if (nb.empty()) throw InvalidArgument("node set is not connected");
        if (nb.size() == 1) ends.push_back(i);
        if (nb.size() == 3) branch.push_back(i);
        if (nb.size() > 3) throw InternalError("Dynkin node of degree > 3");
    }
    if (branch.empty()) {
        if (ends.size() != 2) throw InvalidArgument("node set is not connected");
        t.family = Family::A;
        t.affine_edges = {{ends[0], 1}, {ends[1], 1}};
        return t;
    }
    if (branch.size() != 1) throw InternalError("Dynkin diagram with two branch nodes");
    const std::size_t centre = branch[0];
    // Arms as node lists walking away from the branch node.
    std::vector<std::vector<std::size_t>> arms;
    for (auto start : adj[centre]) {
        std::vector<std::size_t> arm{start};
        std::size_t prev = centre, cur = start;
        for (;;) {
            std::size_t next = cur;
            for (auto j : adj[cur]) {
                if (j != prev) next = j;
            }
            if (next == cur) break;
            prev = cur;
            cur = next;
            arm.push_back(cur);
        }
        arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    const auto a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
    if (a == 1 && b == 1) {
        t.family = Family::D;
        const auto& arm = arms[2];
        t.affine_edges = {{arm.size() >= 2 ? arm[arm.size() - 2] : centre, 1}};
        return t;
    }
    if (a == 1 && b == 2 && c >= 2 && c <= 4) {
        t.family = Family::E;
        const std::size_t target = c == 2 ? arms[0].back() : c == 3 ? arms[1].back() : arms[2].back();
        t.affine_edges = {{target, 1}};
        return t;
    }
    throw InternalError("unrecognized Dynkin diagram");
}

namespace detail {

inline void require_component(const RootSystem& rs, const UcfAssignment& f, const ZeroComponent& comp) {
    auto comps = zero_components(rs, f);
    if (std::find(comps.begin(), comps.end(), comp) == comps.end()) {
        throw InvalidArgument("not a zero component: " + node_set(comp.nodes));
    }
}

} // namespace detail

/// Affine-completion rule.
inline UcfAssignment ucf_move_affine(const RootSystem& rs, const UcfAssignment& f, const ZeroComponent& comp) {
    detail::require_component(rs, f, comp);
    UcfAssignment g = f;
    for (const auto& [i, mult] : classify_component(rs, comp.nodes).affine_edges) g[i] += mult;
    std::set<std::size_t> in(comp.nodes.begin(), comp.nodes.end());
    for (std::size_t j = 0; j < rs.rank(); ++j) {
        if (in.count(j)) continue;
        for (auto i : rs.neighbors(j)) {
            if (in.count(i)) {
                g[j] -= 1;
                break;
            }
        }
    }
    return g;
}

/// Highest root of the parabolic sub-system on the component.
inline const Root& component_highest_root(const RootSystem& rs, const ZeroComponent& comp) {
    std::set<std::size_t> in(comp.nodes.begin(), comp.nodes.end());
    const Root* best = nullptr;
    for (const Root& r : rs.positive_roots()) {
        bool inside = true;
        for (std::size_t i = 0; i < rs.rank() && inside; ++i) inside = r.simple_coords[i] == 0 || in.count(i);
        if (!inside) continue;
        bool dominant = true;
        for (auto i : comp.nodes) dominant = dominant && r.weight_image[i] >= 0;
        if (!dominant) continue;
        if (best) throw InternalError("parabolic sub-system has two dominant roots");
        best = &r;
    }
    if (!best) throw InternalError("parabolic sub-system has no dominant root");
    return *best;
}

inline UcfAssignment ucf_move_highest_root(const RootSystem& rs, const UcfAssignment& f, const ZeroComponent& comp) {
    detail::require_component(rs, f, comp);
    return rs.add_root(f, component_highest_root(rs, comp));
}

/// One move, computed by both rules; they must agree and stay nonnegative.
inline UcfAssignment ucf_move(const RootSystem& rs, const UcfAssignment& f, const ZeroComponent& comp) {
    UcfAssignment a = ucf_move_affine(rs, f, comp);
    UcfAssignment b = ucf_move_highest_root(rs, f, comp);
    if (a != b) throw InternalError("affine rule gives " + a.str() + ", highest-root rule gives " + b.str());
    if (!rs.is_dominant(a)) throw InternalError("number-game move left the dominant chamber");
    return a;
}

inline std::vector<std::pair<ZeroComponent, UcfAssignment>> ucf_successors(const RootSystem& rs, const UcfAssignment& f) {
    std::vector<std::pair<ZeroComponent, UcfAssignment>> out;
    for (auto& c : zero_components(rs, f)) {
        UcfAssignment g = ucf_move(rs, f, c);
        out.emplace_back(std::move(c), std::move(g));
    }
    return out;
}

/// UCF successors coincide with orbit moves from W.f.
inline bool ucf_relation_equals_orbit_relation(const RootSystem& rs, const UcfAssignment& f) {
    std::set<Weight> ucf;
    for (const auto& [c, g] : ucf_successors(rs, f)) ucf.insert(g);
    std::set<Weight> orbit;
    for (const auto& o : orbit_moves(rs, OrbitWeight(f))) orbit.insert(o.rep);
    return ucf == orbit;
}

/// For each pair of zero components, firing them in either order (through the
/// enlarged component containing the other) gives the same assignment.
inline bool check_abelian(const RootSystem& rs, const UcfAssignment& f) {
    auto comps = zero_components(rs, f);
    auto enlarged = [&](const UcfAssignment& g, const ZeroComponent& c) -> std::optional<ZeroComponent> {
        for (auto& d : zero_components(rs, g)) {
            if (d.contains(c)) return d;
        }
        return std::nullopt;
    };
    for (std::size_t x = 0; x < comps.size(); ++x) {
        for (std::size_t y = x + 1; y < comps.size(); ++y) {
            UcfAssignment g1 = ucf_move(rs, f, comps[x]);
            UcfAssignment g2 = ucf_move(rs, f, comps[y]);
            auto c2 = enlarged(g1, comps[y]);
            if (!c2) return false;
            UcfAssignment h1 = ucf_move(rs, g1, *c2);
            auto c1 = enlarged(g2, comps[x]);
            if (!c1) return false;
            UcfAssignment h2 = ucf_move(rs, g2, *c1);
            if (h1 != h2) return false;
        }
    }
    return true;
}

/// Every reachable assignment with its moves, breadth-first from f, one block
/// per state:
///   0 0 0
///     {1,2,3} -> 1 0 1
inline std::string ucf_trajectory_text(const RootSystem& rs, const UcfAssignment& f, std::size_t max_depth = 64) {
    std::ostringstream os;
    std::set<Weight> seen{f};
    std::deque<std::pair<Weight, std::size_t>> queue{{f, 0}};
    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        os << cur.str() << "\n";
        if (depth >= max_depth) {
            os << "  ...\n";
            continue;
        }
        for (const auto& [c, g] : ucf_successors(rs, cur)) {
            os << "  " << detail::node_set(c.nodes) << " -> " << g.str() << "\n";
            if (seen.insert(g).second) queue.push_back({g, depth + 1});
        }
    }
    return os.str();
}

/// Follows a script of component choices (indices into zero_components).
inline std::vector<std::pair<ZeroComponent, UcfAssignment>> ucf_scripted(const RootSystem& rs, const UcfAssignment& f,
                                                                          const std::vector<std::size_t>& choices) {
    std::vector<std::pair<ZeroComponent, UcfAssignment>> out;
    UcfAssignment cur = f;
    for (auto k : choices) {
        auto comps = zero_components(rs, cur);
        if (k >= comps.size()) {
            throw InvalidArgument("choice " + std::to_string(k) + " out of range: " + std::to_string(comps.size()) +
                                  " zero components at " + cur.str());
        }
        cur = ucf_move(rs, cur, comps[k]);
        out.emplace_back(comps[k], cur);
    }
    return out;
}

} // namespace cfire

#endif // CFIRE_UCF_HPP
