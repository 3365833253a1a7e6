#ifndef CFIRE_WEIGHT_TABLE_HPP
#define CFIRE_WEIGHT_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weight.hpp"

namespace cfire {

/// Interns weights of a fixed rank as dense 32-bit ids. Weights of rank <= 8
/// whose coordinates fit in a signed byte are keyed by a packed 64-bit word;
/// anything else falls back to a hash map on the full coordinate vector.
class WeightTable {
public:
    explicit WeightTable(std::size_t rank) : n_(rank) {}

    std::size_t rank() const noexcept { return n_; }
    std::size_t size() const noexcept { return count_; }

    /// Returns (id, inserted).
    std::pair<std::uint32_t, bool> intern(const Coord* coords) {
        const auto id = static_cast<std::uint32_t>(count_);
        if (auto key = pack(coords)) {
            auto [it, inserted] = packed_.try_emplace(*key, id);
            if (!inserted) return {it->second, false};
        } else {
            Weight w(std::vector<Coord>(coords, coords + n_));
            auto [it, inserted] = wide_.try_emplace(std::move(w), id);
            if (!inserted) return {it->second, false};
        }
        flat_.insert(flat_.end(), coords, coords + n_);
        ++count_;
        return {id, true};
    }

    std::pair<std::uint32_t, bool> intern(const Weight& w) { return intern(w.vec().data()); }

    const Coord* data(std::uint32_t id) const { return flat_.data() + static_cast<std::size_t>(id) * n_; }

    Weight weight(std::uint32_t id) const {
        const Coord* p = data(id);
        return Weight(std::vector<Coord>(p, p + n_));
    }

    void reserve(std::size_t nodes) {
        flat_.reserve(nodes * n_);
        packed_.reserve(nodes);
    }

private:
    std::optional<std::uint64_t> pack(const Coord* c) const {
        if (n_ > 8) return std::nullopt;
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (c[i] < -127 || c[i] > 127) return std::nullopt;
            key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(static_cast<std::int8_t>(c[i]))) << (8 * i);
        }
        return key;
    }

    std::size_t n_;
    std::size_t count_ = 0;
    std::vector<Coord> flat_;
    std::unordered_map<std::uint64_t, std::uint32_t> packed_;
    std::unordered_map<Weight, std::uint32_t, WeightHash> wide_;
};

} // namespace cfire

#endif // CFIRE_WEIGHT_TABLE_HPP
