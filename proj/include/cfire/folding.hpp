#ifndef CFIRE_FOLDING_HPP
#define CFIRE_FOLDING_HPP

// Folding a simply-laced diagram along an automorphism sigma. Folded roots
// stay in the source weight space; the target RootSystem is used to name the
// result and to run independent searches.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "central.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "rootsys.hpp"
#include "span.hpp"

namespace cfire {

struct Folding {
    RootSystemType source;
    std::vector<std::size_t> sigma;                ///< 0-based node permutation
    std::vector<std::vector<std::size_t>> orbits;  ///< orbits[k] folds to target node k
    RootSystemType target;
    /// relabeling[k] = position of orbits[k] when orbits are listed by smallest node.
    std::vector<std::size_t> relabeling;

    std::size_t orbit_of(std::size_t node) const {
        for (std::size_t k = 0; k < orbits.size(); ++k) {
            if (std::find(orbits[k].begin(), orbits[k].end(), node) != orbits[k].end()) return k;
        }
        throw InvalidArgument("node " + std::to_string(node + 1) + " not in any orbit");
    }
};

namespace detail {

inline void require_permutation(const RootSystem& rs, const std::vector<std::size_t>& sigma) {
    const std::size_t n = rs.rank();
    if (sigma.size() != n) throw InvalidArgument("sigma must permute all " + std::to_string(n) + " nodes");
    std::vector<bool> hit(n, false);
    for (auto s : sigma) {
        if (s >= n || hit[s]) throw InvalidArgument("sigma is not a permutation");
        hit[s] = true;
    }
}

inline std::vector<std::vector<std::size_t>> sigma_orbits(const std::vector<std::size_t>& sigma) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(sigma.size(), false);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orb;
        for (std::size_t k = i; !seen[k]; k = sigma[k]) {
            seen[k] = true;
            orb.push_back(k);
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

/// <alpha_b', alpha_a'^vee> for orbit sums in a simply-laced source.
inline std::vector<std::vector<Coord>> folded_cartan(const RootSystem& rs, const std::vector<std::vector<std::size_t>>& orbits) {
    const std::size_t m = orbits.size();
    std::vector<std::vector<Coord>> c(m, std::vector<Coord>(m, 0));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            Coord s = 0;
            for (auto i : orbits[a]) {
                for (auto j : orbits[b]) s += rs.cartan(i, j);
            }
            const auto size = static_cast<Coord>(orbits[a].size());
            if (s % size != 0) throw InternalError("folded Cartan entry is not integral");
            c[a][b] = s / size;
        }
    }
    return c;
}

inline std::vector<RootSystemType> candidate_types(const RootSystemType& first, int rank) {
    std::vector<RootSystemType> out{first};
    for (auto t : all_types(rank)) {
        if (t.rank == rank && t != first) out.push_back(t);
    }
    return out;
}

} // namespace detail

inline Folding fold(const RootSystem& rs, const std::vector<std::size_t>& sigma) {
    if (!rs.type().simply_laced()) throw InvalidArgument("folding needs a simply-laced source");
    detail::require_permutation(rs, sigma);
    const std::size_t n = rs.rank();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (rs.cartan(sigma[i], sigma[j]) != rs.cartan(i, j)) throw InvalidArgument("sigma is not a diagram automorphism");
        }
        if (sigma[i] != i && rs.cartan(i, sigma[i]) != 0) {
            throw InvalidArgument("sigma sends node " + std::to_string(i + 1) + " to a neighbor");
        }
    }
    auto orbits = detail::sigma_orbits(sigma);
    auto c = detail::folded_cartan(rs, orbits);
    const std::size_t m = orbits.size();

    for (const auto& t : detail::candidate_types(rs.type(), static_cast<int>(m))) {
        const auto& target = root_system(t);
        std::vector<std::size_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (std::size_t k = 0; k < m && ok; ++k) {
                for (std::size_t l = 0; l < m && ok; ++l) ok = target.cartan(k, l) == c[perm[k]][perm[l]];
            }
            if (!ok) continue;
            Folding f;
            f.source = rs.type();
            f.sigma = sigma;
            f.target = t;
            f.relabeling = perm;
            for (auto p : perm) f.orbits.push_back(orbits[p]);
            return f;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    throw InternalError("folded Cartan matrix matches no irreducible type");
}

/// sigma from 1-based cycles, e.g. {{1,3}} for (1 3).
inline std::vector<std::size_t> sigma_from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<bool> used(n, false);
    for (const auto& cyc : cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            std::size_t a = cyc[k], b = cyc[(k + 1) % cyc.size()];
            if (a < 1 || a > n || b < 1 || b > n) throw InvalidArgument("cycle entry out of range");
            if (used[a - 1]) throw InvalidArgument("node " + std::to_string(a) + " appears twice in the cycles");
            used[a - 1] = true;
            sigma[a - 1] = b - 1;
        }
    }
    return sigma;
}

inline bool sigma_fixed(const RootSystem& rs, const std::vector<std::size_t>& sigma, const Weight& lambda) {
    detail::require_permutation(rs, sigma);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (lambda[sigma[i]] != lambda[i]) return false;
    }
    return true;
}

/// sigma-fixed source weight -> target weight (fundamental coordinates).
inline Weight to_target(const Folding& f, const Weight& lambda) {
    if (!sigma_fixed(root_system(f.source), f.sigma, lambda)) throw InvalidArgument("weight is not sigma-fixed");
    Weight out = Weight::zero(f.orbits.size());
    for (std::size_t k = 0; k < f.orbits.size(); ++k) out[k] = lambda[f.orbits[k].front()];
    return out;
}

/// omega_k of the target is the sum of omega_i over orbit k.
inline Weight to_source(const Folding& f, const Weight& mu) {
    if (mu.size() != f.orbits.size()) throw InvalidArgument("weight has the wrong rank for the target");
    Weight out = Weight::zero(f.sigma.size());
    for (std::size_t k = 0; k < f.orbits.size(); ++k) {
        for (auto i : f.orbits[k]) out[i] = mu[k];
    }
    return out;
}

/// <lambda, alpha_k'^vee> computed in the source: the orbit average of <lambda, alpha_i^vee>.
inline Rational folded_coroot_pairing(const Folding& f, const Weight& lambda, std::size_t k) {
    Coord s = 0;
    for (auto i : f.orbits.at(k)) s = checked::add(s, lambda[i]);
    return Rational(s, static_cast<Coord>(f.orbits[k].size()));
}

/// Source simple coordinates of a target root.
inline std::vector<Coord> folded_root_in_source(const Folding& f, const Root& beta) {
    std::vector<Coord> out(f.sigma.size(), 0);
    for (std::size_t k = 0; k < f.orbits.size(); ++k) {
        for (auto i : f.orbits[k]) out[i] = beta.simple_coords[k];
    }
    return out;
}

/// The sigma-orbit of source positive roots summing to beta, as root indices.
inline std::vector<std::size_t> source_orbit_of(const RootSystem& rs, const Folding& f, const Root& beta) {
    auto want = folded_root_in_source(f, beta);
    const auto& roots = rs.positive_roots();
    for (std::size_t r = 0; r < roots.size(); ++r) {
        std::vector<std::size_t> orbit{r};
        std::vector<Coord> cur = roots[r].simple_coords;
        std::vector<Coord> sum = cur;
        for (;;) {
            std::vector<Coord> next(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i) next[f.sigma[i]] = cur[i];
            if (next == roots[r].simple_coords) break;
            auto idx = rs.find_positive(next);
            if (!idx) throw InternalError("sigma does not preserve the positive roots");
            orbit.push_back(*idx);
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += next[i];
            cur = std::move(next);
        }
        if (sum == want) {
            std::sort(orbit.begin(), orbit.end());
            return orbit;
        }
    }
    throw InternalError("no sigma-orbit of source roots sums to the folded root");
}

/// Fires the source orbit of beta in every order from lambda; true when each
/// order is a valid firing sequence ending at lambda + beta.
inline bool folded_fire_decomposes(const RootSystem& rs, const Folding& f, const Weight& lambda, const Root& beta) {
    const auto& target = root_system(f.target);
    if (!beta.positive()) throw InvalidArgument("folded root must be positive");
    Weight lt = to_target(f, lambda);
    if (target.pairing(lt, beta) != 0) throw InvalidArgument("lambda is not orthogonal to the folded root");
    auto orbit = source_orbit_of(rs, f, beta);
    Weight end = lambda + rs.from_root_coords(folded_root_in_source(f, beta));
    const auto& roots = rs.positive_roots();
    std::vector<std::size_t> order = orbit;
    do {
        Weight w = lambda;
        for (auto r : order) {
            if (rs.pairing(w, roots[r]) != 0) return false;
            w = w + roots[r].weight_image;
        }
        if (w != end) return false;
    } while (std::next_permutation(order.begin(), order.end()));
    return true;
}

struct PropagationReport {
    bool source_confluent = false;
    bool target_confluent = false;
    std::vector<Weight> source_normal_forms;
    std::vector<Weight> target_normal_forms;  ///< mapped back into the source
    /// Source confluence implies target confluence with the same stable weight.
    bool consistent = true;
};

inline PropagationReport confluence_propagation_check(const RootSystem& rs, const Folding& f, const Weight& lambda,
                                                      const SearchOptions& opts = {}) {
    const auto& target = root_system(f.target);
    PropagationReport r;
    r.source_normal_forms = normal_forms(rs, lambda, opts);
    for (const auto& nf : normal_forms(target, to_target(f, lambda), opts)) r.target_normal_forms.push_back(to_source(f, nf));
    std::sort(r.target_normal_forms.begin(), r.target_normal_forms.end());
    r.source_confluent = r.source_normal_forms.size() == 1;
    r.target_confluent = r.target_normal_forms.size() == 1;
    if (r.source_confluent) r.consistent = r.target_confluent && r.target_normal_forms == r.source_normal_forms;
    return r;
}

/// Target-connected implies source-connected.
inline bool connectedness_propagates(const RootSystem& rs, const Folding& f, const Weight& lambda,
                                     std::size_t budget = default_budget()) {
    if (!is_connected(root_system(f.target), to_target(f, lambda), budget)) return true;
    return is_connected(rs, lambda, budget);
}

inline std::string folding_text(const Folding& f) {
    std::string s = f.source.str() + " -> " + f.target.str() + "\n";
    for (std::size_t k = 0; k < f.orbits.size(); ++k) {
        s += "  " + std::to_string(k + 1) + " <- {";
        for (std::size_t t = 0; t < f.orbits[k].size(); ++t) {
            if (t) s += ",";
            s += std::to_string(f.orbits[k][t] + 1);
        }
        s += "}\n";
    }
    return s;
}

} // namespace cfire

#endif // CFIRE_FOLDING_HPP
