#ifndef CFIRE_CHIPS_HPP
#define CFIRE_CHIPS_HPP

// Labeled chips on Z or Z+1/2 for the classical types, and Type-A unlabeled
// pseudo- and split-stabilization.
//
// ChipConfig stores doubled positions (2 * position), so one integer vector
// covers both boards. Chip indices are 0-based in code and 1-based in text.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "central.hpp"
#include "errors.hpp"
#include "rootsys.hpp"
#include "unlabeled.hpp"

namespace cfire {

class ChipConfig {
public:
    ChipConfig() = default;

    static ChipConfig from_doubled(std::vector<Coord> doubled) {
        ChipConfig c;
        c.v_ = std::move(doubled);
        c.check_parity();
        return c;
    }

    static ChipConfig from_integers(const std::vector<Coord>& pos) {
        std::vector<Coord> d;
        d.reserve(pos.size());
        for (auto p : pos) d.push_back(checked::mul(2, p));
        return from_doubled(std::move(d));
    }

    std::size_t size() const noexcept { return v_.size(); }
    const std::vector<Coord>& doubled() const noexcept { return v_; }
    Coord doubled(std::size_t i) const { return v_.at(i); }
    bool half() const noexcept { return !v_.empty() && (v_[0] & 1) != 0; }

    Coord doubled_sum() const {
        Coord s = 0;
        for (auto x : v_) s = checked::add(s, x);
        return s;
    }

    /// Position of chip i as a string: "3", "-1/2".
    std::string position_str(std::size_t i) const {
        Coord d = v_.at(i);
        if (d % 2 == 0) return std::to_string(d / 2);
        return std::to_string(d) + "/2";
    }

    /// Space-separated positions.
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += " ";
            s += position_str(i);
        }
        return s;
    }

    friend bool operator==(const ChipConfig&, const ChipConfig&) = default;
    friend auto operator<=>(const ChipConfig& a, const ChipConfig& b) { return a.v_ <=> b.v_; }

private:
    void check_parity() const {
        for (std::size_t i = 1; i < v_.size(); ++i) {
            if (((v_[i] ^ v_[0]) & 1) != 0) throw InvalidArgument("chip positions mix Z and Z+1/2");
        }
    }

    std::vector<Coord> v_;
};

/// (a) i<j together: i right, j left. (b) chip at 0 one step right.
/// (c) chip at 0 two steps right. (d) i<j opposite: both one step right.
struct ChipMove {
    enum class Kind { A, B, C, D };
    Kind kind = Kind::A;
    std::size_t i = 0;
    std::size_t j = 0;

    static ChipMove a(std::size_t i, std::size_t j) { return {Kind::A, i, j}; }
    static ChipMove b(std::size_t i) { return {Kind::B, i, i}; }
    static ChipMove c(std::size_t i) { return {Kind::C, i, i}; }
    static ChipMove d(std::size_t i, std::size_t j) { return {Kind::D, i, j}; }

    bool pair() const noexcept { return kind == Kind::A || kind == Kind::D; }

    std::string str() const {
        static const char* names = "ABCD";
        std::string s(1, names[static_cast<int>(kind)]);
        s += "(" + std::to_string(i + 1);
        if (pair()) s += "," + std::to_string(j + 1);
        return s + ")";
    }

    friend bool operator==(const ChipMove&, const ChipMove&) = default;
    friend auto operator<=>(const ChipMove&, const ChipMove&) = default;
};

inline ChipConfig apply_move(const ChipConfig& cfg, const ChipMove& m) {
    const auto& v = cfg.doubled();
    auto bad = [&](const std::string& why) {
        return InvalidArgument("move " + m.str() + " not legal: " + why);
    };
    if (m.i >= v.size() || m.j >= v.size()) throw bad("chip index out of range");
    if (m.pair() && m.i >= m.j) throw bad("needs i < j");
    std::vector<Coord> out = v;
    switch (m.kind) {
    case ChipMove::Kind::A:
        if (v[m.i] != v[m.j]) throw bad("chips " + std::to_string(m.i + 1) + " and " + std::to_string(m.j + 1) + " are apart");
        out[m.i] = checked::add(out[m.i], 2);
        out[m.j] = checked::sub(out[m.j], 2);
        break;
    case ChipMove::Kind::B:
    case ChipMove::Kind::C:
        if (v[m.i] != 0) throw bad("chip " + std::to_string(m.i + 1) + " is not at 0");
        out[m.i] = m.kind == ChipMove::Kind::B ? 2 : 4;
        break;
    case ChipMove::Kind::D:
        if (v[m.i] != -v[m.j]) throw bad("chips " + std::to_string(m.i + 1) + " and " + std::to_string(m.j + 1) + " are not opposite");
        out[m.i] = checked::add(out[m.i], 2);
        out[m.j] = checked::add(out[m.j], 2);
        break;
    }
    return ChipConfig::from_doubled(std::move(out));
}

/// Doubled-sum change of a move: 0, 2, 4, 4 for (a)-(d).
inline Coord move_sum_delta(const ChipMove& m) {
    switch (m.kind) {
    case ChipMove::Kind::A: return 0;
    case ChipMove::Kind::B: return 2;
    default: return 4;
    }
}

inline std::vector<ChipMove> legal_moves(Family family, const ChipConfig& cfg) {
    if (family != Family::A && family != Family::B && family != Family::C && family != Family::D) {
        throw InvalidArgument("chip moves exist only for classical families");
    }
    const auto& v = cfg.doubled();
    const std::size_t n = v.size();
    std::vector<ChipMove> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (v[i] == v[j]) out.push_back(ChipMove::a(i, j));
        }
    }
    if (family == Family::A) return out;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] != 0) continue;
        if (family == Family::B) out.push_back(ChipMove::b(i));
        if (family == Family::C) out.push_back(ChipMove::c(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (v[i] == -v[j]) out.push_back(ChipMove::d(i, j));
        }
    }
    return out;
}

namespace detail {

inline void require_classical(const RootSystem& rs) {
    if (!rs.type().classical()) throw InvalidArgument("chip configurations need a classical type, got " + rs.type().str());
}

} // namespace detail

/// Number of chips for a classical root system: N = n+1 for A_n, else n.
inline std::size_t chip_count(const RootSystem& rs) {
    detail::require_classical(rs);
    return rs.type().family == Family::A ? rs.rank() + 1 : rs.rank();
}

/// Type A is read modulo (1,...,1): the chips sit on Z with the sum closest to 0,
/// ties toward the negative sum.
inline ChipConfig weight_to_chips(const RootSystem& rs, const Weight& lambda) {
    detail::require_classical(rs);
    if (lambda.size() != rs.rank()) throw InvalidArgument("weight has the wrong rank");
    if (rs.type().family == Family::A) {
        const std::size_t n = rs.rank() + 1;
        std::vector<Coord> v(n, 0);
        for (std::size_t k = n - 1; k-- > 0;) v[k] = checked::add(v[k + 1], lambda[k]);
        Coord s = std::accumulate(v.begin(), v.end(), Coord{0}, [](Coord a, Coord b) { return checked::add(a, b); });
        const auto nn = static_cast<Coord>(n);
        Coord t = -s / nn;
        Coord best = t;
        for (Coord c : {t - 1, t, t + 1}) {
            Coord here = s + nn * c;
            Coord cur = s + nn * best;
            if (std::abs(here) < std::abs(cur) || (std::abs(here) == std::abs(cur) && here < cur)) best = c;
        }
        for (auto& x : v) x = checked::add(x, best);
        return ChipConfig::from_integers(v);
    }
    std::vector<Coord> d;
    for (const auto& q : rs.classical_coords(lambda)) {
        Rational twice = q * Rational(2);
        if (twice.denominator() != 1) throw InternalError("classical coordinate is not a half-integer");
        d.push_back(twice.numerator());
    }
    return ChipConfig::from_doubled(std::move(d));
}

inline Weight chips_to_weight(const RootSystem& rs, const ChipConfig& cfg) {
    detail::require_classical(rs);
    if (cfg.size() != chip_count(rs)) throw InvalidArgument("expected " + std::to_string(chip_count(rs)) + " chips");
    RVector v;
    for (auto d : cfg.doubled()) v.push_back(Rational(d, 2));
    return rs.from_classical_coords(v);
}

/// Reachable configurations from cfg under the family's moves.
inline std::set<ChipConfig> reachable_configs(Family family, const ChipConfig& cfg, std::size_t budget = default_budget()) {
    std::set<ChipConfig> seen{cfg};
    std::vector<ChipConfig> stack{cfg};
    while (!stack.empty()) {
        ChipConfig c = std::move(stack.back());
        stack.pop_back();
        for (const auto& m : legal_moves(family, c)) {
            ChipConfig nxt = apply_move(c, m);
            if (seen.insert(nxt).second) {
                if (seen.size() > budget) throw BudgetExceeded(seen.size());
                stack.push_back(std::move(nxt));
            }
        }
    }
    return seen;
}

inline bool chip_firing_matches_central(const RootSystem& rs, const Weight& lambda, std::size_t budget = default_budget()) {
    auto graph = explore_graph(rs, lambda, budget);
    if (!graph.complete) throw BudgetExceeded(graph.nodes.size());
    std::set<Weight> via_chips;
    for (const auto& c : reachable_configs(rs.type().family, weight_to_chips(rs, lambda), budget)) {
        via_chips.insert(chips_to_weight(rs, c));
    }
    return via_chips == std::set<Weight>(graph.nodes.begin(), graph.nodes.end());
}

// ---- Type A, unlabeled -----------------------------------------------------

/// Unlabeled Type-A chips: plain integer positions, weakly decreasing.
class UnlabeledConfig {
public:
    UnlabeledConfig() = default;
    explicit UnlabeledConfig(std::vector<Coord> pos) : v_(std::move(pos)) {
        if (!std::is_sorted(v_.begin(), v_.end(), std::greater<>())) throw InvalidArgument("unlabeled positions must be weakly decreasing");
    }
    UnlabeledConfig(std::initializer_list<Coord> pos) : UnlabeledConfig(std::vector<Coord>(pos)) {}

    static UnlabeledConfig sorted(std::vector<Coord> pos) {
        std::sort(pos.begin(), pos.end(), std::greater<>());
        return UnlabeledConfig(std::move(pos));
    }

    std::size_t size() const noexcept { return v_.size(); }
    Coord operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Coord>& positions() const noexcept { return v_; }

    Coord sum() const {
        Coord s = 0;
        for (auto x : v_) s = checked::add(s, x);
        return s;
    }

    /// f_v(i) = v_1 + ... + v_i for i = 1..N.
    std::vector<Coord> partial_sums() const {
        std::vector<Coord> f;
        Coord s = 0;
        for (auto x : v_) f.push_back(s = checked::add(s, x));
        return f;
    }

    bool stable() const {
        return std::adjacent_find(v_.begin(), v_.end()) == v_.end();
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s;
    }

    friend bool operator==(const UnlabeledConfig&, const UnlabeledConfig&) = default;
    friend auto operator<=>(const UnlabeledConfig& a, const UnlabeledConfig& b) { return a.v_ <=> b.v_; }

private:
    std::vector<Coord> v_;
};

/// lambda(v) in A_{N-1}.
inline Weight unlabeled_to_weight(const UnlabeledConfig& v) {
    if (v.size() < 2) throw InvalidArgument("need at least two chips");
    std::vector<Coord> w;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) w.push_back(checked::sub(v[i], v[i + 1]));
    return Weight(std::move(w));
}

/// Dominant weight of A_{N-1} back to N chips with the given sum.
inline UnlabeledConfig weight_to_unlabeled(const Weight& lambda, Coord sum) {
    const std::size_t n = lambda.size() + 1;
    std::vector<Coord> v(n, 0);
    for (std::size_t k = n - 1; k-- > 0;) v[k] = checked::add(v[k + 1], lambda[k]);
    Coord base = checked::sub(sum, std::accumulate(v.begin(), v.end(), Coord{0}));
    const auto nn = static_cast<Coord>(n);
    if (base % nn != 0) throw InvalidArgument("no configuration of this weight has sum " + std::to_string(sum));
    for (auto& x : v) x += base / nn;
    return UnlabeledConfig(std::move(v));
}

/// p-hat(v): the stable configuration with at most one gap and the same sum.
inline UnlabeledConfig pseudo_stabilization(const UnlabeledConfig& v) {
    const std::size_t n = v.size();
    if (n == 0) return v;
    const Coord s = v.sum();
    const auto nn = static_cast<Coord>(n);
    const Coord lo = v.positions().back() - nn;
    const Coord hi = v.positions().front() + nn;
    std::optional<UnlabeledConfig> found;
    auto offer = [&](std::vector<Coord> cand) {
        UnlabeledConfig c(std::move(cand));
        if (c.sum() != s) return;
        if (found && *found != c) throw InternalError("pseudo-stabilization is not unique for " + v.str());
        found = c;
    };
    for (Coord top = lo; top <= hi; ++top) {
        // No gap: top, top-1, ..., top-N+1.
        std::vector<Coord> run;
        for (Coord k = 0; k < nn; ++k) run.push_back(top - k);
        offer(run);
        // One gap at top-g, 0 < g < N.
        for (Coord g = 1; g < nn; ++g) {
            std::vector<Coord> cand;
            for (Coord k = 0; k <= nn; ++k) {
                if (k != g) cand.push_back(top - k);
            }
            offer(cand);
        }
    }
    if (!found) throw InternalError("no pseudo-stabilization found for " + v.str());
    return *found;
}

enum class Dominance { StrictlyBelow, Below, Neither };

inline std::string to_string(Dominance d) {
    switch (d) {
    case Dominance::StrictlyBelow: return "strictly_below";
    case Dominance::Below: return "below";
    default: return "neither";
    }
}

/// u relative to v in dominance order of partial sums.
inline Dominance dominance_compare(const UnlabeledConfig& u, const UnlabeledConfig& v) {
    if (u.size() != v.size()) throw InvalidArgument("chip counts differ");
    if (u.sum() != v.sum()) throw InvalidArgument("configurations have different sums");
    auto fu = u.partial_sums();
    auto fv = v.partial_sums();
    bool strict = true;
    for (std::size_t i = 0; i < fu.size(); ++i) {
        if (fu[i] > fv[i]) return Dominance::Neither;
        if (i + 1 < fu.size() && fu[i] == fv[i]) strict = false;
    }
    return strict ? Dominance::StrictlyBelow : Dominance::Below;
}

/// Index j (1-based, 1 <= j < N) maximizing f_v(j) - f_p(j), smallest on ties.
inline std::size_t split_index(const UnlabeledConfig& v, const UnlabeledConfig& p) {
    auto fv = v.partial_sums();
    auto fp = p.partial_sums();
    std::size_t best = 1;
    for (std::size_t j = 1; j < v.size(); ++j) {
        if (fv[j - 1] - fp[j - 1] > fv[best - 1] - fp[best - 1]) best = j;
    }
    return best;
}

inline UnlabeledConfig stabilize_unlabeled_typeA(const UnlabeledConfig& v) {
    if (v.size() <= 1) return v;
    UnlabeledConfig p = pseudo_stabilization(v);
    if (dominance_compare(v, p) == Dominance::StrictlyBelow) return p;
    const std::size_t j = split_index(v, p);
    const auto& pos = v.positions();
    auto left = stabilize_unlabeled_typeA(UnlabeledConfig(std::vector<Coord>(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(j))));
    auto right = stabilize_unlabeled_typeA(UnlabeledConfig(std::vector<Coord>(pos.begin() + static_cast<std::ptrdiff_t>(j), pos.end())));
    std::vector<Coord> out = left.positions();
    out.insert(out.end(), right.positions().begin(), right.positions().end());
    return UnlabeledConfig(std::move(out));
}

/// Stabilization through the orbit process on A_{N-1}.
inline UnlabeledConfig stabilize_unlabeled_via_orbits(const UnlabeledConfig& v) {
    if (v.size() <= 1) return v;
    const auto& rs = root_system(RootSystemType::make(Family::A, static_cast<int>(v.size() - 1)));
    auto nf = orbit_normal_form(rs, OrbitWeight(unlabeled_to_weight(v)));
    return weight_to_unlabeled(nf.rep, v.sum());
}

// ---- rendering ---------------------------------------------------------------

/// Chip diagram: one column per position, labels stacked upward, axis below.
inline std::string render_chips(const ChipConfig& cfg) {
    if (cfg.size() == 0) return "\n";
    const auto& v = cfg.doubled();
    Coord lo = *std::min_element(v.begin(), v.end());
    Coord hi = *std::max_element(v.begin(), v.end());
    std::map<Coord, std::vector<std::size_t>> stacks;
    for (std::size_t i = 0; i < v.size(); ++i) stacks[v[i]].push_back(i + 1);
    std::size_t height = 0;
    for (const auto& [p, s] : stacks) height = std::max(height, s.size());

    auto label = [&](Coord d) { return d % 2 == 0 ? std::to_string(d / 2) : std::to_string(d) + "/2"; };
    std::size_t width = std::to_string(v.size()).size();
    for (Coord d = lo; d <= hi; d += 2) width = std::max(width, label(d).size());
    width += 1;
    auto cell = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };

    std::string out;
    for (std::size_t row = height; row-- > 0;) {
        std::string line;
        for (Coord d = lo; d <= hi; d += 2) {
            auto it = stacks.find(d);
            line += cell(it != stacks.end() && row < it->second.size() ? std::to_string(it->second[row]) : "");
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    std::string axis;
    for (Coord d = lo; d <= hi; d += 2) axis += cell(label(d));
    return out + axis + "\n";
}

/// {"positions": [...], "half": bool}; with half set, chip k sits at positions[k] + 1/2.
inline nlohmann::json chips_to_json(const ChipConfig& cfg) {
    nlohmann::json pos = nlohmann::json::array();
    for (auto d : cfg.doubled()) pos.push_back(d >= 0 ? d / 2 : -((-d + 1) / 2));
    return {{"positions", pos}, {"half", cfg.half()}};
}

inline ChipConfig chips_from_json(const nlohmann::json& j) {
    bool half = j.value("half", false);
    std::vector<Coord> d;
    for (const auto& p : j.at("positions")) d.push_back(checked::add(checked::mul(2, p.get<Coord>()), half ? 1 : 0));
    return ChipConfig::from_doubled(std::move(d));
}

} // namespace cfire

#endif // CFIRE_CHIPS_HPP
