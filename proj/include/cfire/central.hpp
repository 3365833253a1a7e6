#ifndef CFIRE_CENTRAL_HPP
#define CFIRE_CENTRAL_HPP

// Central-firing: lambda -> lambda + alpha for positive roots alpha with
// <lambda, alpha^vee> = 0.
//
// The relation terminates (the potential below strictly drops on every move),
// and every normal form of a weight reachable from lambda is a normal form of
// lambda. Confluence from lambda is therefore equivalent to lambda having
// exactly one normal form, which is what is_confluent_from decides.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rootsys.hpp"
#include "weight_table.hpp"

namespace cfire {

inline constexpr std::size_t kDefaultBudget = 50'000'000;

/// Default node budget, overridable through CFIRE_BUDGET.
inline std::size_t default_budget() {
    if (const char* env = std::getenv("CFIRE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultBudget;
}

struct SearchOptions {
    std::size_t budget = default_budget();
    /// Verify the potential drop on every explored edge.
    bool audit_potential = false;
};

/// Edge-level audit of the termination potential.
struct PotentialAudit {
    std::size_t edges = 0;
    std::size_t violations = 0;
    Coord min_drop = std::numeric_limits<Coord>::max();

    void merge(const PotentialAudit& o) {
        edges += o.edges;
        violations += o.violations;
        min_drop = std::min(min_drop, o.min_drop);
    }
};

/// Positive roots orthogonal to lambda, in positive-root enumeration order.
inline std::vector<Root> available_moves(const RootSystem& rs, const Weight& lambda) {
    std::vector<Root> out;
    for (const Root& a : rs.positive_roots()) {
        if (rs.pairing(lambda, a) == 0) out.push_back(a);
    }
    return out;
}

inline std::vector<std::size_t> available_move_indices(const RootSystem& rs, const Weight& lambda) {
    std::vector<std::size_t> out;
    const auto& roots = rs.positive_roots();
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (rs.pairing(lambda, roots[k]) == 0) out.push_back(k);
    }
    return out;
}

inline bool is_stable(const RootSystem& rs, const Weight& lambda) {
    for (const Root& a : rs.positive_roots()) {
        if (rs.pairing(lambda, a) == 0) return false;
    }
    return true;
}

/// det(C) * <2 rho - lambda, 2 rho - lambda>: a nonnegative integer that drops
/// by at least det(C) * min <alpha, alpha> on every firing move.
inline Coord potential(const RootSystem& rs, const Weight& lambda) {
    Weight v = Coord{2} * rs.rho() - lambda;
    return rs.scaled_inner(v, v);
}

/// Lower bound on the potential drop of a single move.
inline Coord potential_min_drop(const RootSystem& rs) { return rs.inner_scale() * rs.min_root_length2(); }

namespace detail {

/// Dense per-root tables for the inner loops of the searches.
struct MoveTables {
    std::size_t n = 0;
    std::vector<std::vector<Coord>> coroot;
    std::vector<std::vector<Coord>> image;

    explicit MoveTables(const RootSystem& rs) : n(rs.rank()) {
        for (const Root& a : rs.positive_roots()) {
            coroot.push_back(a.coroot_coords);
            image.push_back(a.weight_image.vec());
        }
    }

    std::size_t size() const { return coroot.size(); }

    bool orthogonal(const Coord* x, std::size_t k) const {
        const Coord* c = coroot[k].data();
        Coord s = 0;
        for (std::size_t i = 0; i < n; ++i) s += c[i] * x[i];
        return s == 0;
    }

    void fire(const Coord* x, std::size_t k, Coord* out) const {
        const Coord* d = image[k].data();
        for (std::size_t i = 0; i < n; ++i) out[i] = checked::add(x[i], d[i]);
    }
};

inline void audit_edge(const RootSystem& rs, const Weight& from, const Weight& to, PotentialAudit& audit) {
    const Coord drop = potential(rs, from) - potential(rs, to);
    ++audit.edges;
    audit.min_drop = std::min(audit.min_drop, drop);
    if (drop < potential_min_drop(rs)) ++audit.violations;
}

} // namespace detail

struct ConfluenceResult {
    bool confluent = false;
    std::size_t nodes_explored = 0;
    /// The normal form when confluent; otherwise two distinct normal forms.
    std::vector<Weight> normal_forms;
    PotentialAudit audit;
};

/// Decides whether lambda has a unique normal form. Stops at the first node
/// whose successors reach two different stable weights.
inline ConfluenceResult decide_confluence(const RootSystem& rs, const Weight& lambda,
                                          const SearchOptions& opts = {}) {
    constexpr std::int32_t kNone = -2;
    constexpr std::int32_t kMany = -1;
    constexpr std::int32_t kOpen = -3;

    detail::MoveTables moves(rs);
    const std::size_t n = rs.rank();
    WeightTable table(n);
    std::vector<std::int32_t> nf;

    struct Frame {
        std::uint32_t id;
        std::uint32_t next_root;
        std::int32_t acc;
        bool any_move;
    };
    std::vector<Frame> stack;
    std::vector<Coord> child(n), here(n);
    ConfluenceResult result;
    std::pair<std::int32_t, std::int32_t> clash{-1, -1};

    auto combine = [&](std::int32_t acc, std::int32_t v) -> std::int32_t {
        if (acc == kNone) return v;
        if (acc == kMany || v == kMany) return kMany;
        if (acc != v) {
            clash = {acc, v};
            return kMany;
        }
        return acc;
    };

    table.intern(lambda);
    nf.push_back(kOpen);
    stack.push_back({0, 0, kNone, false});

    while (!stack.empty()) {
        Frame& f = stack.back();
        std::copy_n(table.data(f.id), n, here.data());
        bool descended = false;
        while (f.next_root < moves.size()) {
            const std::size_t k = f.next_root++;
            if (!moves.orthogonal(here.data(), k)) continue;
            f.any_move = true;
            moves.fire(here.data(), k, child.data());
            auto [cid, inserted] = table.intern(child.data());
            if (opts.audit_potential) {
                detail::audit_edge(rs, Weight(here), Weight(child), result.audit);
            }
            if (inserted) {
                if (table.size() > opts.budget) throw BudgetExceeded(table.size());
                nf.push_back(kOpen);
                stack.push_back({cid, 0, kNone, false});
                descended = true;
                break;
            }
            if (nf[cid] == kOpen) throw InternalError("cycle in central-firing graph");
            f.acc = combine(f.acc, nf[cid]);
            if (f.acc == kMany) break;
        }
        if (descended) continue;

        Frame done = stack.back();
        stack.pop_back();
        const std::int32_t value = done.any_move ? done.acc : static_cast<std::int32_t>(done.id);
        nf[done.id] = value;
        if (value == kMany) {
            result.confluent = false;
            result.nodes_explored = table.size();
            result.normal_forms = {table.weight(static_cast<std::uint32_t>(clash.first)),
                                   table.weight(static_cast<std::uint32_t>(clash.second))};
            std::sort(result.normal_forms.begin(), result.normal_forms.end());
            return result;
        }
        if (!stack.empty()) stack.back().acc = combine(stack.back().acc, value);
    }

    result.confluent = true;
    result.nodes_explored = table.size();
    result.normal_forms = {table.weight(static_cast<std::uint32_t>(nf[0]))};
    return result;
}

inline bool is_confluent_from(const RootSystem& rs, const Weight& lambda, const SearchOptions& opts = {}) {
    return decide_confluence(rs, lambda, opts).confluent;
}

/// Exact set of stable weights reachable from lambda, sorted lexicographically.
inline std::vector<Weight> normal_forms(const RootSystem& rs, const Weight& lambda, const SearchOptions& opts = {}) {
    detail::MoveTables moves(rs);
    const std::size_t n = rs.rank();
    WeightTable table(n);
    std::vector<std::vector<std::uint32_t>> sets;
    std::vector<bool> done;

    struct Frame {
        std::uint32_t id;
        std::uint32_t next_root;
        bool any_move;
    };
    std::vector<Frame> stack;
    std::vector<Coord> child(n), here(n);

    auto merge_into = [&](std::uint32_t parent, std::uint32_t from) {
        std::vector<std::uint32_t> merged;
        std::set_union(sets[parent].begin(), sets[parent].end(), sets[from].begin(), sets[from].end(),
                       std::back_inserter(merged));
        sets[parent] = std::move(merged);
    };

    table.intern(lambda);
    sets.emplace_back();
    done.push_back(false);
    stack.push_back({0, 0, false});
    while (!stack.empty()) {
        Frame& f = stack.back();
        std::copy_n(table.data(f.id), n, here.data());
        bool descended = false;
        while (f.next_root < moves.size()) {
            const std::size_t k = f.next_root++;
            if (!moves.orthogonal(here.data(), k)) continue;
            f.any_move = true;
            moves.fire(here.data(), k, child.data());
            auto [cid, inserted] = table.intern(child.data());
            if (inserted) {
                if (table.size() > opts.budget) throw BudgetExceeded(table.size());
                sets.emplace_back();
                done.push_back(false);
                stack.push_back({cid, 0, false});
                descended = true;
                break;
            }
            if (!done[cid]) throw InternalError("cycle in central-firing graph");
            merge_into(f.id, cid);
        }
        if (descended) continue;
        Frame fin = stack.back();
        stack.pop_back();
        if (!fin.any_move) sets[fin.id] = {fin.id};
        done[fin.id] = true;
        if (!stack.empty()) merge_into(stack.back().id, fin.id);
    }

    std::vector<Weight> out;
    for (auto id : sets[0]) out.push_back(table.weight(id));
    std::sort(out.begin(), out.end());
    return out;
}

/// Explored firing graph. Edges carry the index of the fired positive root.
struct FiringGraph {
    struct Edge {
        std::size_t root;
        Weight target;
    };

    Weight origin;
    std::vector<Weight> nodes;  ///< sorted
    std::map<Weight, std::vector<Edge>> edges;
    /// Stable weights reachable from each node; filled only for complete graphs.
    std::map<Weight, std::vector<Weight>> normal_forms;
    bool complete = false;

    std::size_t edge_count() const {
        std::size_t k = 0;
        for (const auto& [w, es] : edges) k += es.size();
        return k;
    }
};

/// Breadth-first exploration of everything reachable from lambda, stopping once
/// the node count would exceed the budget.
inline FiringGraph explore_graph(const RootSystem& rs, const Weight& lambda, std::size_t budget,
                                 PotentialAudit* audit = nullptr) {
    if (budget == 0) throw InvalidArgument("budget must be positive");
    FiringGraph g;
    g.origin = lambda;
    std::map<Weight, std::vector<FiringGraph::Edge>> edges;
    std::deque<Weight> queue{lambda};
    edges[lambda];
    bool complete = true;
    while (!queue.empty() && complete) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        std::vector<FiringGraph::Edge> out;
        for (std::size_t k : available_move_indices(rs, cur)) {
            Weight next = rs.add_root(cur, rs.positive_roots()[k]);
            if (audit) detail::audit_edge(rs, cur, next, *audit);
            if (!edges.count(next)) {
                if (edges.size() >= budget) {
                    complete = false;
                    break;
                }
                edges[next];
                queue.push_back(next);
            }
            out.push_back({k, std::move(next)});
        }
        if (!complete) break;
        edges[cur] = std::move(out);
    }
    g.complete = complete;
    for (const auto& [w, es] : edges) g.nodes.push_back(w);
    g.edges = std::move(edges);

    if (g.complete) {
        // Reverse topological order: the potential strictly drops along edges.
        std::vector<Weight> order = g.nodes;
        std::vector<std::pair<Coord, std::size_t>> keyed;
        for (std::size_t i = 0; i < order.size(); ++i) keyed.push_back({potential(rs, order[i]), i});
        std::sort(keyed.begin(), keyed.end());
        for (const auto& [phi, i] : keyed) {
            const Weight& w = order[i];
            const auto& es = g.edges.at(w);
            std::vector<Weight> nfs;
            if (es.empty()) {
                nfs = {w};
            } else {
                for (const auto& e : es) {
                    const auto& child = g.normal_forms.at(e.target);
                    nfs.insert(nfs.end(), child.begin(), child.end());
                }
                std::sort(nfs.begin(), nfs.end());
                nfs.erase(std::unique(nfs.begin(), nfs.end()), nfs.end());
            }
            g.normal_forms[w] = std::move(nfs);
        }
    }
    return g;
}

/// Predicted confluence from omega in {0} union fundamental weights, following
/// the rho-class rule and its four exceptional families.
inline bool conjecture_prediction(const RootSystem& rs, const Weight& omega) {
    const std::size_t n = rs.rank();
    if (omega.size() != n) throw InvalidArgument("weight rank mismatch");
    std::optional<std::size_t> node;  // nullopt for 0
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (omega[i] == 0) continue;
        if (omega[i] != 1 || ++ones > 1) throw InvalidArgument("prediction needs 0 or a fundamental weight");
        node = i;
    }
    const auto t = rs.type();
    if (t.family == Family::A) {
        const std::size_t rank = static_cast<std::size_t>(t.rank);
        if (rank % 2 == 1) return !node || *node == 0 || *node == rank - 1;
        return node && (*node + 1 == rank / 2 || *node + 1 == rank / 2 + 1);
    }
    if (t.family == Family::B && node && *node + 1 == static_cast<std::size_t>(t.rank)) return true;
    // C_2 is B_2 with the nodes swapped; its omega_1 is the B_2 spin weight.
    if (t.family == Family::C && t.rank == 2 && node && *node == 0) return true;
    if (t.family == Family::D && !node && t.rank % 4 == 2 && t.rank >= 6) return false;
    if (t.family == Family::G && node) return true;
    return !rs.in_root_lattice(omega - rs.rho());
}

} // namespace cfire

#endif // CFIRE_CENTRAL_HPP
