#ifndef CFIRE_ROOTSYS_HPP
#define CFIRE_ROOTSYS_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "weight.hpp"

namespace cfire {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Family letter plus rank, serialized as "A3", "E8", ...
struct RootSystemType {
    Family family = Family::A;
    int rank = 1;

    static bool valid(Family f, int n) {
        switch (f) {
        case Family::A: return n >= 1;
        case Family::B:
        case Family::C: return n >= 2;
        case Family::D: return n >= 3;
        case Family::E: return n >= 6 && n <= 8;
        case Family::F: return n == 4;
        case Family::G: return n == 2;
        }
        return false;
    }

    static RootSystemType make(Family f, int n) {
        if (!valid(f, n)) {
            throw InvalidArgument("invalid rank " + std::to_string(n) + " for family " +
                                  std::string(1, static_cast<char>(f)));
        }
        return RootSystemType{f, n};
    }

    static RootSystemType parse(std::string_view s) {
        if (s.size() < 2) throw InvalidArgument("bad root system type '" + std::string(s) + "'");
        const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (letter < 'A' || letter > 'G') {
            throw InvalidArgument("bad root system family in '" + std::string(s) + "'");
        }
        int n = 0;
        for (char c : s.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || n > 1000) {
                throw InvalidArgument("bad root system rank in '" + std::string(s) + "'");
            }
            n = n * 10 + (c - '0');
        }
        return make(static_cast<Family>(letter), n);
    }

    std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

    bool simply_laced() const {
        return family == Family::A || family == Family::D || family == Family::E;
    }
    bool classical() const {
        return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
    }

    friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
    friend auto operator<=>(const RootSystemType&, const RootSystemType&) = default;
};

/// A root stored in the simple-root basis with its cached weight-basis image.
struct Root {
    std::vector<Coord> simple_coords;  ///< c_i with alpha = sum c_i alpha_i
    Weight weight_image;               ///< <alpha, alpha_j^vee> for each j
    std::vector<Coord> coroot_coords;  ///< alpha^vee = sum k_i alpha_i^vee
    Coord length2 = 0;                 ///< <alpha, alpha> with short roots normalized to 2
    Coord height = 0;

    bool positive() const { return height > 0; }
};

/// Immutable tables for one irreducible root system. Node indices are 0-based
/// in code; Bourbaki labels are index + 1.
class RootSystem {
public:
    explicit RootSystem(RootSystemType type) : type_(RootSystemType::make(type.family, type.rank)) {
        build_cartan();
        build_symmetrizer();
        build_lattice_data();
        build_positive_roots();
        build_minuscule();
        check_invariants();
    }

    const RootSystemType& type() const noexcept { return type_; }
    std::size_t rank() const noexcept { return n_; }

    /// C[i][j] = <alpha_j, alpha_i^vee>.
    Coord cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
    const std::vector<std::vector<Coord>>& cartan_matrix() const noexcept { return cartan_; }
    /// d_i with d_i C[i][j] = d_j C[j][i], min d_i = 1.
    Coord sym(std::size_t i) const { return sym_[i]; }

    const std::vector<Root>& positive_roots() const noexcept { return positive_; }
    const Root& simple_root(std::size_t i) const { return positive_[simple_index_.at(i)]; }
    const Root& highest_root() const { return positive_.back(); }
    Weight rho() const { return Weight::rho(n_); }
    Weight zero() const { return Weight::zero(n_); }
    Weight fundamental(std::size_t i) const {
        if (i >= n_) throw InvalidArgument("node index out of range");
        return Weight::fundamental(n_, i);
    }
    /// 0-based indices of minuscule fundamental weights.
    const std::vector<std::size_t>& minuscule() const noexcept { return minuscule_; }
    /// det(C) = |P/Q|.
    Coord det() const noexcept { return det_; }

    std::vector<std::size_t> neighbors(std::size_t i) const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n_; ++j) {
            if (j != i && cartan_[i][j] != 0) out.push_back(j);
        }
        return out;
    }

    Coord min_root_length2() const { return 2; }

    /// Index of a positive root with the given simple coordinates, if any.
    std::optional<std::size_t> find_positive(const std::vector<Coord>& simple_coords) const {
        auto it = index_.find(simple_coords);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Builds a Root (positive or negative) from simple-root coordinates.
    Root make_root(const std::vector<Coord>& simple_coords) const {
        if (simple_coords.size() != n_) throw InvalidArgument("root rank mismatch");
        bool all_zero = std::all_of(simple_coords.begin(), simple_coords.end(), [](Coord c) { return c == 0; });
        if (all_zero) throw InvalidArgument("zero vector is not a root");
        bool negative = std::all_of(simple_coords.begin(), simple_coords.end(), [](Coord c) { return c <= 0; });
        std::vector<Coord> pos = simple_coords;
        if (negative) {
            for (auto& c : pos) c = -c;
        }
        auto idx = find_positive(pos);
        if (!idx) throw InvalidArgument("vector is not a root of " + type_.str());
        if (!negative) return positive_[*idx];
        return negate(positive_[*idx]);
    }

    /// All roots: positive roots followed by their negatives.
    std::vector<Root> all_roots() const {
        std::vector<Root> out = positive_;
        for (const auto& r : positive_) out.push_back(negate(r));
        return out;
    }

    // ---- pairing and moves ------------------------------------------------

    /// <lambda, alpha^vee>.
    Coord pairing(const Weight& lambda, const Root& alpha) const {
        require_rank(lambda);
        Coord s = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (alpha.coroot_coords[i] != 0) s = checked::add(s, checked::mul(alpha.coroot_coords[i], lambda[i]));
        }
        return s;
    }

    Weight add_root(const Weight& lambda, const Root& alpha) const {
        require_rank(lambda);
        return lambda + alpha.weight_image;
    }

    /// s_i(lambda), 0-based node.
    Weight reflect_simple(const Weight& lambda, std::size_t i) const {
        require_rank(lambda);
        if (i >= n_) throw InvalidArgument("node index out of range");
        Weight out = lambda;
        const Coord li = lambda[i];
        if (li == 0) return out;
        for (std::size_t j = 0; j < n_; ++j) {
            out[j] = checked::sub(out[j], checked::mul(li, cartan_[j][i]));
        }
        return out;
    }

    /// Reflection of a root vector in simple-root coordinates.
    std::vector<Coord> reflect_simple_coords(const std::vector<Coord>& c, std::size_t i) const {
        Coord p = 0;
        for (std::size_t j = 0; j < n_; ++j) p += cartan_[i][j] * c[j];
        std::vector<Coord> out = c;
        out[i] -= p;
        return out;
    }

    bool is_dominant(const Weight& lambda) const {
        require_rank(lambda);
        return std::all_of(lambda.vec().begin(), lambda.vec().end(), [](Coord c) { return c >= 0; });
    }
    bool is_strictly_dominant(const Weight& lambda) const {
        require_rank(lambda);
        return std::all_of(lambda.vec().begin(), lambda.vec().end(), [](Coord c) { return c > 0; });
    }

    /// Dominant element of W.lambda and the word of simple reflections applied
    /// (always the smallest-index negative coordinate first).
    std::pair<Weight, std::vector<std::size_t>> dominant_rep_with_word(const Weight& lambda) const {
        require_rank(lambda);
        Weight cur = lambda;
        std::vector<std::size_t> word;
        for (;;) {
            std::size_t i = 0;
            while (i < n_ && cur[i] >= 0) ++i;
            if (i == n_) break;
            cur = reflect_simple(cur, i);
            word.push_back(i);
        }
        return {std::move(cur), std::move(word)};
    }

    Weight dominant_rep(const Weight& lambda) const { return dominant_rep_with_word(lambda).first; }

    // ---- lattices ---------------------------------------------------------

    /// det(C) * (simple-root coordinates of lambda); always integral.
    std::vector<Coord> scaled_root_coords(const Weight& lambda) const {
        require_rank(lambda);
        std::vector<Coord> c(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) c[i] = checked::add(c[i], checked::mul(adj_[i][j], lambda[j]));
        }
        return c;
    }

    /// Simple-root coordinates of lambda as exact rationals.
    RVector root_coords(const Weight& lambda) const {
        auto sc = scaled_root_coords(lambda);
        RVector out;
        out.reserve(n_);
        for (Coord c : sc) out.emplace_back(c, det_);
        return out;
    }

    /// Simple-root coordinates if lambda lies in Q.
    std::optional<std::vector<Coord>> integral_root_coords(const Weight& lambda) const {
        auto sc = scaled_root_coords(lambda);
        for (auto& c : sc) {
            if (c % det_ != 0) return std::nullopt;
            c /= det_;
        }
        return sc;
    }

    bool in_root_lattice(const Weight& lambda) const { return integral_root_coords(lambda).has_value(); }

    /// Weight image of an element of Q given in simple-root coordinates.
    Weight from_root_coords(const std::vector<Coord>& c) const {
        if (c.size() != n_) throw InvalidArgument("root coordinate rank mismatch");
        Weight w = zero();
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t i = 0; i < n_; ++i) w[j] = checked::add(w[j], checked::mul(cartan_[j][i], c[i]));
        }
        return w;
    }

    /// Membership in Pi^Q(lambda) (strict = false) or in its interior lattice
    /// points (strict = true). Both tests run on the dominant representative of mu.
    bool permutohedron_contains(const Weight& lambda, const Weight& mu, bool strict) const {
        if (!is_dominant(lambda)) throw InvalidArgument("permutohedron vertex must be dominant");
        auto c = integral_root_coords(lambda - dominant_rep(mu));
        if (!c) return false;
        const Coord lo = strict ? 1 : 0;
        return std::all_of(c->begin(), c->end(), [lo](Coord x) { return x >= lo; });
    }

    /// Membership of mu in the real convex hull Pi(lambda).
    bool in_real_permutohedron(const Weight& lambda, const Weight& mu) const {
        if (!is_dominant(lambda)) throw InvalidArgument("permutohedron vertex must be dominant");
        auto sc = scaled_root_coords(lambda - dominant_rep(mu));
        return std::all_of(sc.begin(), sc.end(), [](Coord x) { return x >= 0; });
    }

    /// The unique element of minuscule weights and zero in the P/Q class of lambda.
    Weight minuscule_rep_of_class(const Weight& lambda) const {
        if (in_root_lattice(lambda)) return zero();
        std::optional<Weight> found;
        for (std::size_t i : minuscule_) {
            if (in_root_lattice(lambda - fundamental(i))) {
                if (found) throw InternalError("P/Q class has two minuscule representatives");
                found = fundamental(i);
            }
        }
        if (!found) throw InternalError("P/Q class has no minuscule representative");
        return *found;
    }

    /// det(C) * <lambda, mu>; integral for all weights.
    Coord scaled_inner(const Weight& lambda, const Weight& mu) const {
        require_rank(lambda);
        require_rank(mu);
        Coord s = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (lambda[i] == 0) continue;
            Coord row = 0;
            for (std::size_t j = 0; j < n_; ++j) row = checked::add(row, checked::mul(gram_[i][j], mu[j]));
            s = checked::add(s, checked::mul(lambda[i], row));
        }
        return s;
    }

    /// Positive factor relating scaled_inner to the inner product.
    Coord inner_scale() const noexcept { return det_; }

    // ---- orbits and lattice points ---------------------------------------

    /// W.lambda by breadth-first closure under simple reflections, sorted.
    std::vector<Weight> weyl_orbit(const Weight& lambda, std::size_t limit = 10'000'000) const {
        std::set<Weight> seen{lambda};
        std::deque<Weight> queue{lambda};
        while (!queue.empty()) {
            Weight cur = std::move(queue.front());
            queue.pop_front();
            for (std::size_t i = 0; i < n_; ++i) {
                if (cur[i] == 0) continue;
                Weight next = reflect_simple(cur, i);
                if (seen.insert(next).second) {
                    if (seen.size() > limit) throw BudgetExceeded(seen.size());
                    queue.push_back(std::move(next));
                }
            }
        }
        return {seen.begin(), seen.end()};
    }

    /// Dominant weights of Pi^Q(lambda), i.e. dominant mu with lambda - mu a
    /// nonnegative integer combination of simple roots. Sorted.
    std::vector<Weight> dominant_lattice_points(const Weight& lambda) const {
        if (!is_dominant(lambda)) throw InvalidArgument("permutohedron vertex must be dominant");
        std::set<Weight> seen{lambda};
        std::deque<Weight> queue{lambda};
        // Dominant points of Pi^Q(lambda) are connected by subtracting positive roots
        // while staying dominant; subtracting simple roots alone can leave the chamber.
        while (!queue.empty()) {
            Weight cur = std::move(queue.front());
            queue.pop_front();
            for (const Root& a : positive_) {
                Weight next = cur - a.weight_image;
                if (!is_dominant(next) || seen.count(next)) continue;
                seen.insert(next);
                queue.push_back(std::move(next));
            }
        }
        return {seen.begin(), seen.end()};
    }

    /// All of Pi^Q(lambda): Weyl orbits of its dominant points.
    std::vector<Weight> lattice_points(const Weight& lambda) const {
        std::vector<Weight> out;
        for (const Weight& d : dominant_lattice_points(lambda)) {
            auto orb = weyl_orbit(d);
            out.insert(out.end(), orb.begin(), orb.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // ---- classical realizations -----------------------------------------

    /// Coordinates in the standard realization: length n+1 (sum zero) for A_n,
    /// length n for B, C, D.
    RVector classical_coords(const Weight& lambda) const {
        require_rank(lambda);
        const auto n = n_;
        RVector v;
        switch (type_.family) {
        case Family::A: {
            v.assign(n + 1, Rational(0));
            Coord weighted = 0;
            for (std::size_t i = 0; i < n; ++i) weighted = checked::add(weighted, checked::mul(static_cast<Coord>(i + 1), lambda[i]));
            Coord tail = 0;
            for (std::size_t k = n + 1; k-- > 0;) {
                if (k < n) tail = checked::add(tail, lambda[k]);
                v[k] = Rational(tail) - Rational(weighted, static_cast<Coord>(n + 1));
            }
            return v;
        }
        case Family::B:
        case Family::C:
        case Family::D: {
            v.assign(n, Rational(0));
            for (std::size_t k = 0; k < n; ++k) {
                Rational s(0);
                if (type_.family == Family::D) {
                    for (std::size_t i = k; i + 2 < n; ++i) s += lambda[i];
                    if (k + 1 < n) s += Rational(lambda[n - 2] + lambda[n - 1], 2);
                    else s += Rational(lambda[n - 1] - lambda[n - 2], 2);
                } else {
                    for (std::size_t i = k; i + 1 < n; ++i) s += lambda[i];
                    s += type_.family == Family::B ? Rational(lambda[n - 1], 2) : Rational(lambda[n - 1]);
                }
                v[k] = s;
            }
            return v;
        }
        default: throw InvalidArgument("classical coordinates need a classical family");
        }
    }

    /// Inverse of classical_coords; rejects vectors outside the weight lattice.
    Weight from_classical_coords(const RVector& v) const {
        const auto n = n_;
        Weight w = zero();
        auto set = [&](std::size_t i, const Rational& q) {
            if (q.denominator() != 1) throw InvalidArgument("vector is not in the weight lattice");
            w[i] = q.numerator();
        };
        switch (type_.family) {
        case Family::A:
            if (v.size() != n + 1) throw InvalidArgument("expected n+1 coordinates for type A");
            for (std::size_t i = 0; i < n; ++i) set(i, v[i] - v[i + 1]);
            return w;
        case Family::B:
        case Family::C:
        case Family::D:
            if (v.size() != n) throw InvalidArgument("expected n coordinates");
            for (std::size_t i = 0; i + 1 < n; ++i) set(i, v[i] - v[i + 1]);
            if (type_.family == Family::B) set(n - 1, 2 * v[n - 1]);
            else if (type_.family == Family::C) set(n - 1, v[n - 1]);
            else set(n - 1, v[n - 2] + v[n - 1]);
            return w;
        default: throw InvalidArgument("classical coordinates need a classical family");
        }
    }

private:
    void require_rank(const Weight& w) const {
        if (w.size() != n_) throw InvalidArgument("weight has rank " + std::to_string(w.size()) + ", expected " + std::to_string(n_));
    }

    Root negate(const Root& r) const {
        Root out = r;
        for (auto& c : out.simple_coords) c = -c;
        for (auto& c : out.coroot_coords) c = -c;
        out.weight_image = -r.weight_image;
        out.height = -r.height;
        return out;
    }

    void add_edge(std::size_t i, std::size_t j, Coord cij = -1, Coord cji = -1) {
        cartan_[i][j] = cij;
        cartan_[j][i] = cji;
    }

    void build_cartan() {
        n_ = static_cast<std::size_t>(type_.rank);
        const auto n = n_;
        cartan_.assign(n, std::vector<Coord>(n, 0));
        for (std::size_t i = 0; i < n; ++i) cartan_[i][i] = 2;
        switch (type_.family) {
        case Family::A:
            for (std::size_t i = 0; i + 1 < n; ++i) add_edge(i, i + 1);
            break;
        case Family::B:
            for (std::size_t i = 0; i + 2 < n; ++i) add_edge(i, i + 1);
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            add_edge(n - 2, n - 1, -1, -2);
            break;
        case Family::C:
            for (std::size_t i = 0; i + 2 < n; ++i) add_edge(i, i + 1);
            add_edge(n - 2, n - 1, -2, -1);
            break;
        case Family::D:
            for (std::size_t i = 0; i + 2 < n; ++i) add_edge(i, i + 1);
            add_edge(n - 3, n - 1);
            break;
        case Family::E:
            add_edge(0, 2);
            add_edge(1, 3);
            for (std::size_t i = 2; i + 1 < n; ++i) add_edge(i, i + 1);
            break;
        case Family::F:
            add_edge(0, 1);
            add_edge(1, 2, -1, -2);
            add_edge(2, 3);
            break;
        case Family::G:
            // alpha_1 short, alpha_2 long.
            add_edge(0, 1, -3, -1);
            break;
        }
    }

    void build_symmetrizer() {
        std::vector<Rational> d(n_, Rational(0));
        d[0] = 1;
        std::deque<std::size_t> queue{0};
        while (!queue.empty()) {
            auto i = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < n_; ++j) {
                if (j == i || cartan_[i][j] == 0 || d[j] != Rational(0)) continue;
                d[j] = d[i] * Rational(cartan_[i][j], cartan_[j][i]);
                queue.push_back(j);
            }
        }
        Rational lo = *std::min_element(d.begin(), d.end());
        sym_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            Rational q = d[i] / lo;
            if (q.denominator() != 1) throw InternalError("non-integral symmetrizer");
            sym_[i] = q.numerator();
        }
    }

    void build_lattice_data() {
        RMatrix c = linalg::to_rational(cartan_);
        Rational det = linalg::determinant(c);
        if (det.denominator() != 1 || det <= Rational(0)) throw InternalError("Cartan determinant is not a positive integer");
        det_ = det.numerator();
        RMatrix inv = linalg::inverse(c);
        adj_.assign(n_, std::vector<Coord>(n_));
        gram_.assign(n_, std::vector<Coord>(n_));
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                Rational a = inv[i][j] * det_;
                if (a.denominator() != 1) throw InternalError("non-integral adjugate");
                adj_[i][j] = a.numerator();
                // <omega_i, omega_j> = (C^-1)_{ij} d_i
                gram_[i][j] = adj_[i][j] * sym_[i];
            }
        }
    }

    Root finish_root(std::vector<Coord> c) const {
        Root r;
        r.simple_coords = std::move(c);
        r.weight_image = from_root_coords(r.simple_coords);
        r.height = std::accumulate(r.simple_coords.begin(), r.simple_coords.end(), Coord{0});
        // <alpha, alpha> = sum_i c_i <alpha, alpha_i> = sum_i c_i d_i <alpha, alpha_i^vee>
        Coord norm = 0;
        for (std::size_t i = 0; i < n_; ++i) norm += r.simple_coords[i] * sym_[i] * r.weight_image[i];
        r.length2 = norm;
        const Coord d_alpha = norm / 2;
        r.coroot_coords.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const Coord num = r.simple_coords[i] * sym_[i];
            if (num % d_alpha != 0) throw InternalError("coroot coefficient is not integral");
            r.coroot_coords[i] = num / d_alpha;
        }
        return r;
    }

    void build_positive_roots() {
        std::set<std::vector<Coord>> seen;
        std::deque<std::vector<Coord>> queue;
        for (std::size_t i = 0; i < n_; ++i) {
            std::vector<Coord> e(n_, 0);
            e[i] = 1;
            seen.insert(e);
            queue.push_back(e);
        }
        while (!queue.empty()) {
            auto c = std::move(queue.front());
            queue.pop_front();
            for (std::size_t i = 0; i < n_; ++i) {
                auto r = reflect_simple_coords(c, i);
                if (std::any_of(r.begin(), r.end(), [](Coord x) { return x < 0; })) continue;
                if (seen.insert(r).second) queue.push_back(std::move(r));
            }
        }
        std::vector<std::vector<Coord>> sorted(seen.begin(), seen.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            Coord ha = std::accumulate(a.begin(), a.end(), Coord{0});
            Coord hb = std::accumulate(b.begin(), b.end(), Coord{0});
            if (ha != hb) return ha < hb;
            return a > b;
        });
        positive_.clear();
        for (auto& c : sorted) positive_.push_back(finish_root(std::move(c)));
        simple_index_.assign(n_, 0);
        for (std::size_t k = 0; k < positive_.size(); ++k) {
            index_.emplace(positive_[k].simple_coords, k);
            if (positive_[k].height == 1) {
                for (std::size_t i = 0; i < n_; ++i) {
                    if (positive_[k].simple_coords[i] == 1) simple_index_[i] = k;
                }
            }
        }
    }

    void build_minuscule() {
        minuscule_.clear();
        for (std::size_t i = 0; i < n_; ++i) {
            bool ok = std::all_of(positive_.begin(), positive_.end(),
                                  [i](const Root& r) { return r.coroot_coords[i] <= 1; });
            if (ok) minuscule_.push_back(i);
        }
    }

    void check_invariants() const {
        const Root& theta = highest_root();
        for (const Root& r : positive_) {
            if (&r != &theta && r.height >= theta.height) throw InternalError("highest root is not unique");
        }
        if (!is_dominant(theta.weight_image)) throw InternalError("highest root is not dominant");
        if (static_cast<Coord>(minuscule_.size()) + 1 != det_) throw InternalError("|P/Q| does not match minuscule count");
    }

    RootSystemType type_;
    std::size_t n_ = 0;
    std::vector<std::vector<Coord>> cartan_;
    std::vector<Coord> sym_;
    Coord det_ = 1;
    std::vector<std::vector<Coord>> adj_;
    std::vector<std::vector<Coord>> gram_;
    std::vector<Root> positive_;
    std::map<std::vector<Coord>, std::size_t> index_;
    std::vector<std::size_t> simple_index_;
    std::vector<std::size_t> minuscule_;
};

inline RootSystem build(RootSystemType type) { return RootSystem(type); }

/// Shared, lazily built instance per type. Safe to call from several threads.
inline const RootSystem& root_system(RootSystemType type) {
    static std::mutex mu;
    static std::map<RootSystemType, std::unique_ptr<RootSystem>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[type];
    if (!slot) slot = std::make_unique<RootSystem>(type);
    return *slot;
}

inline const RootSystem& root_system(std::string_view type) { return root_system(RootSystemType::parse(type)); }

/// Closed-form |Phi^+|.
inline std::size_t expected_positive_root_count(RootSystemType t) {
    const std::size_t n = static_cast<std::size_t>(t.rank);
    switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return 0;
}

/// Every supported type up to the given rank, in family order.
inline std::vector<RootSystemType> all_types(int max_rank) {
    std::vector<RootSystemType> out;
    for (char f : std::string("ABCDEFG")) {
        for (int n = 1; n <= max_rank; ++n) {
            if (RootSystemType::valid(static_cast<Family>(f), n)) out.push_back({static_cast<Family>(f), n});
        }
    }
    return out;
}

} // namespace cfire

#endif // CFIRE_ROOTSYS_HPP
