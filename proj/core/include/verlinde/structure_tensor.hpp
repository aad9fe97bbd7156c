#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "verlinde/checked.hpp"

namespace verlinde {

/// Structure constants of a ring that is free of finite rank over Z:
/// e_a * e_b = sum_c T(a, b, c) e_c.
class StructureTensor {
public:
    StructureTensor() = default;
    explicit StructureTensor(std::size_t rank) : rank_(rank), data_(rank * rank * rank, 0) {}

    std::size_t rank() const noexcept { return rank_; }

    Coeff& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[index(a, b, c)]; }
    Coeff operator()(std::size_t a, std::size_t b, std::size_t c) const { return data_[index(a, b, c)]; }

    friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

    bool is_commutative() const;
    bool is_associative() const;
    /// True when basis element `u` is a two-sided unit.
    bool is_unit(std::size_t u) const;

    /// Nested [a][b][c] arrays.
    nlohmann::json to_json() const;

private:
    std::size_t index(std::size_t a, std::size_t b, std::size_t c) const noexcept {
        return (a * rank_ + b) * rank_ + c;
    }

    std::size_t rank_ = 0;
    std::vector<Coeff> data_;
};

}  // namespace verlinde
