#ifndef CFIRE_UNLABELED_HPP
#define CFIRE_UNLABELED_HPP

// Central-firing on W-orbits. An orbit is stored as its dominant element; all
// orbit moves can be read off from that representative.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "central.hpp"
#include "errors.hpp"
#include "rootsys.hpp"

namespace cfire {

struct OrbitWeight {
    Weight rep;  ///< dominant

    OrbitWeight() = default;
    explicit OrbitWeight(Weight dominant) : rep(std::move(dominant)) {}

    static OrbitWeight of(const RootSystem& rs, const Weight& lambda) { return OrbitWeight(rs.dominant_rep(lambda)); }

    friend bool operator==(const OrbitWeight&, const OrbitWeight&) = default;
    friend auto operator<=>(const OrbitWeight& a, const OrbitWeight& b) { return a.rep <=> b.rep; }
};

/// Successor orbits, sorted and deduplicated.
inline std::vector<OrbitWeight> orbit_moves(const RootSystem& rs, const OrbitWeight& o) {
    std::set<Weight> out;
    for (const Root& a : rs.positive_roots()) {
        if (rs.pairing(o.rep, a) == 0) out.insert(rs.dominant_rep(rs.add_root(o.rep, a)));
    }
    std::vector<OrbitWeight> v;
    v.reserve(out.size());
    for (const auto& w : out) v.emplace_back(w);
    return v;
}

inline bool orbit_is_stable(const RootSystem& rs, const OrbitWeight& o) { return is_stable(rs, o.rep); }

/// Sequence of orbits visited by always taking the lexicographically least move.
inline std::vector<OrbitWeight> orbit_trajectory(const RootSystem& rs, const OrbitWeight& o) {
    std::vector<OrbitWeight> path{o};
    for (;;) {
        auto next = orbit_moves(rs, path.back());
        if (next.empty()) return path;
        path.push_back(std::move(next.front()));
    }
}

inline OrbitWeight orbit_normal_form(const RootSystem& rs, const OrbitWeight& o) { return orbit_trajectory(rs, o).back(); }

/// Reachable orbit graph: every reachable orbit mapped to its sorted successors.
inline std::map<OrbitWeight, std::vector<OrbitWeight>> orbit_graph(const RootSystem& rs, const OrbitWeight& o,
                                                                   std::size_t budget = default_budget()) {
    std::map<OrbitWeight, std::vector<OrbitWeight>> g;
    std::deque<OrbitWeight> queue{o};
    std::set<OrbitWeight> seen{o};
    while (!queue.empty()) {
        OrbitWeight cur = std::move(queue.front());
        queue.pop_front();
        auto next = orbit_moves(rs, cur);
        for (const auto& n : next) {
            if (seen.insert(n).second) {
                if (seen.size() > budget) throw BudgetExceeded(seen.size());
                queue.push_back(n);
            }
        }
        g.emplace(std::move(cur), std::move(next));
    }
    return g;
}

/// Terminal orbits over all maximal orbit-firing sequences from o.
inline std::vector<OrbitWeight> orbit_terminal_set(const RootSystem& rs, const OrbitWeight& o,
                                                   std::size_t budget = default_budget()) {
    auto g = orbit_graph(rs, o, budget);
    std::map<OrbitWeight, std::set<OrbitWeight>> memo;
    // Potential decreases along moves, so increasing potential is a valid
    // order for children-before-parents.
    std::vector<std::pair<Coord, const OrbitWeight*>> order;
    for (const auto& [w, next] : g) order.push_back({potential(rs, w.rep), &w});
    std::sort(order.begin(), order.end());
    for (const auto& [phi, w] : order) {
        auto& terms = memo[*w];
        const auto& next = g.at(*w);
        if (next.empty()) terms.insert(*w);
        for (const auto& n : next) terms.insert(memo.at(n).begin(), memo.at(n).end());
    }
    const auto& t = memo.at(o);
    return {t.begin(), t.end()};
}

/// W(rho + omega) when lambda lies in Pi^Q(rho + omega) for the minuscule (or
/// zero) omega of its class modulo Q; nothing otherwise.
inline std::optional<OrbitWeight> stabilization_prediction(const RootSystem& rs, const Weight& lambda) {
    Weight omega = rs.minuscule_rep_of_class(lambda - rs.rho());
    Weight top = rs.rho() + omega;
    if (!rs.permutohedron_contains(top, lambda, false)) return std::nullopt;
    return OrbitWeight(top);
}

} // namespace cfire

#endif // CFIRE_UNLABELED_HPP
