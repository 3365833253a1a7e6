#ifndef CFIRE_WEIGHT_HPP
#define CFIRE_WEIGHT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cfire {

using Coord = std::int64_t;

/// A weight in the fundamental-weight basis: coords[i] = <lambda, alpha_i^vee>.
/// Integrality of the coordinates is exactly membership in the weight lattice.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Coord> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<Coord> coords) : coords_(coords) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<Coord>(rank, 0)); }

    /// omega_i, 0-based node index.
    static Weight fundamental(std::size_t rank, std::size_t i) {
        Weight w = zero(rank);
        w.coords_.at(i) = 1;
        return w;
    }

    static Weight rho(std::size_t rank) { return Weight(std::vector<Coord>(rank, 1)); }

    std::size_t size() const noexcept { return coords_.size(); }
    Coord operator[](std::size_t i) const { return coords_[i]; }
    Coord& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Coord> coords() const noexcept { return coords_; }
    const std::vector<Coord>& vec() const noexcept { return coords_; }

    bool is_zero() const {
        for (Coord c : coords_) {
            if (c != 0) return false;
        }
        return true;
    }

    Weight& operator+=(const Weight& o) {
        require_same_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::add(coords_[i], o[i]);
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        require_same_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::sub(coords_[i], o[i]);
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(Coord k, Weight a) {
        for (auto& c : a.coords_) c = checked::mul(k, c);
        return a;
    }
    Weight operator-() const { return Coord{-1} * *this; }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

    /// Space-separated coordinates, e.g. "1 0 2".
    std::string str(const char* sep = " ") const {
        std::string s;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += sep;
            s += std::to_string(coords_[i]);
        }
        return s;
    }

private:
    void require_same_rank(const Weight& o) const {
        if (o.size() != size()) throw InvalidArgument("weight rank mismatch");
    }

    std::vector<Coord> coords_;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (Coord c : w.coords()) {
            h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace cfire

#endif // CFIRE_WEIGHT_HPP
