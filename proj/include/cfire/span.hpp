#ifndef CFIRE_SPAN_HPP
#define CFIRE_SPAN_HPP

// Firing span FS(lambda): the span of lambda - mu over all mu reachable from
// lambda, equivalently the span of every root fired on an edge of the
// reachable graph. Subspaces are kept in the simple-root basis as canonical
// reduced row-echelon forms.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "central.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "rootsys.hpp"
#include "ucf.hpp"
#include "weight_table.hpp"

namespace cfire {

class SubspaceBasis {
public:
    explicit SubspaceBasis(std::size_t ambient = 0) : ambient_(ambient) {}

    static SubspaceBasis span_of(std::size_t ambient, RMatrix rows) {
        SubspaceBasis s(ambient);
        s.basis_ = linalg::rref(std::move(rows));
        return s;
    }

    static SubspaceBasis span_of(std::size_t ambient, const std::vector<std::vector<Coord>>& rows) {
        return span_of(ambient, linalg::to_rational(rows));
    }

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool full() const noexcept { return basis_.size() == ambient_; }
    const RMatrix& basis() const noexcept { return basis_; }

    bool contains(const RVector& v) const {
        RMatrix rows = basis_;
        rows.push_back(v);
        return linalg::rank(rows) == dim();
    }

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

    std::string str() const {
        std::string s;
        for (const auto& row : basis_) {
            s += "[";
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k) s += " ";
                s += to_string(row[k]);
            }
            s += "]\n";
        }
        return s;
    }

private:
    std::size_t ambient_;
    RMatrix basis_;
};

/// s_i applied to a subspace given in simple-root coordinates.
inline SubspaceBasis reflect_subspace(const RootSystem& rs, const SubspaceBasis& s, std::size_t i) {
    RMatrix rows = s.basis();
    for (auto& row : rows) {
        Rational p(0);
        for (std::size_t j = 0; j < rs.rank(); ++j) p += Rational(rs.cartan(i, j)) * row[j];
        row[i] -= p;
    }
    return SubspaceBasis::span_of(rs.rank(), std::move(rows));
}

/// FS(lambda). Stops exploring once the span is the whole space.
inline SubspaceBasis firing_span(const RootSystem& rs, const Weight& lambda, std::size_t budget = default_budget()) {
    const std::size_t n = rs.rank();
    const auto& roots = rs.positive_roots();
    std::vector<bool> fired(roots.size(), false);
    std::vector<std::vector<Coord>> rows;
    std::size_t rank = 0;

    WeightTable table(n);
    table.intern(lambda);
    std::vector<std::uint32_t> stack{0};
    std::vector<Coord> here(n), next(n);
    while (!stack.empty() && rank < n) {
        const auto id = stack.back();
        stack.pop_back();
        std::copy_n(table.data(id), n, here.data());
        Weight w(here);
        for (std::size_t k = 0; k < roots.size(); ++k) {
            if (rs.pairing(w, roots[k]) != 0) continue;
            if (!fired[k]) {
                fired[k] = true;
                rows.push_back(roots[k].simple_coords);
                rank = linalg::rank(linalg::to_rational(rows));
            }
            for (std::size_t i = 0; i < n; ++i) next[i] = checked::add(here[i], roots[k].weight_image[i]);
            auto [cid, inserted] = table.intern(next.data());
            if (inserted) {
                if (table.size() > budget) throw BudgetExceeded(table.size());
                stack.push_back(cid);
            }
        }
    }
    return SubspaceBasis::span_of(n, rows);
}

inline bool is_connected(const RootSystem& rs, const Weight& lambda, std::size_t budget = default_budget()) {
    return firing_span(rs, lambda, budget).full();
}

/// Interior-permutohedron test for Type A with its witness: the class
/// representative omega and the simple-root coefficients of
/// (rho + omega) - dominant_rep(lambda).
struct TypeAConnectivity {
    bool connected = false;
    Weight omega;
    Weight top;
    std::optional<std::vector<Coord>> coefficients;
};

inline TypeAConnectivity typeA_connectivity(const RootSystem& rs, const Weight& lambda) {
    if (rs.type().family != Family::A) throw InvalidArgument("Type A classification needs type A, got " + rs.type().str());
    TypeAConnectivity r;
    r.omega = rs.minuscule_rep_of_class(lambda - rs.rho());
    r.top = rs.rho() + r.omega;
    r.coefficients = rs.integral_root_coords(r.top - rs.dominant_rep(lambda));
    r.connected = rs.permutohedron_contains(r.top, lambda, true);
    return r;
}

inline bool typeA_connected(const RootSystem& rs, const Weight& lambda) { return typeA_connectivity(rs, lambda).connected; }

/// FS(lambda) for dominant lambda in a simply-laced type, built only from
/// dominant weights: the simple roots orthogonal to each dominant weight met
/// along number-game moves.
inline SubspaceBasis simply_laced_span_dominant(const RootSystem& rs, const Weight& lambda,
                                                std::size_t budget = default_budget()) {
    if (!rs.type().simply_laced()) throw InvalidArgument("needs a simply-laced type");
    if (!rs.is_dominant(lambda)) throw InvalidArgument("weight must be dominant");
    const std::size_t n = rs.rank();
    std::set<std::size_t> simple;
    std::set<Weight> seen{lambda};
    std::vector<Weight> stack{lambda};
    while (!stack.empty() && simple.size() < n) {
        Weight w = std::move(stack.back());
        stack.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] == 0) simple.insert(i);
        }
        for (auto& [c, g] : ucf_successors(rs, w)) {
            if (seen.insert(g).second) {
                if (seen.size() > budget) throw BudgetExceeded(seen.size());
                stack.push_back(std::move(g));
            }
        }
    }
    std::vector<std::vector<Coord>> rows;
    for (auto i : simple) {
        std::vector<Coord> e(n, 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return SubspaceBasis::span_of(n, rows);
}

} // namespace cfire

#endif // CFIRE_SPAN_HPP
