#include "verlinde/structure_tensor.hpp"

namespace verlinde {

bool StructureTensor::is_commutative() const {
    for (std::size_t a = 0; a < rank_; ++a)
        for (std::size_t b = a + 1; b < rank_; ++b)
            for (std::size_t c = 0; c < rank_; ++c)
                if ((*this)(a, b, c) != (*this)(b, a, c)) return false;
    return true;
}

bool StructureTensor::is_associative() const {
    // (e_a e_b) e_c and e_a (e_b e_c), compared coefficient by coefficient.
    for (std::size_t a = 0; a < rank_; ++a)
        for (std::size_t b = 0; b < rank_; ++b)
            for (std::size_t c = 0; c < rank_; ++c)
                for (std::size_t d = 0; d < rank_; ++d) {
                    Coeff left = 0;
                    Coeff right = 0;
                    for (std::size_t e = 0; e < rank_; ++e) {
                        left = checked_add(left, checked_mul((*this)(a, b, e), (*this)(e, c, d)));
                        right = checked_add(right, checked_mul((*this)(b, c, e), (*this)(a, e, d)));
                    }
                    if (left != right) return false;
                }
    return true;
}

bool StructureTensor::is_unit(std::size_t u) const {
    if (u >= rank_) return false;
    for (std::size_t b = 0; b < rank_; ++b)
        for (std::size_t c = 0; c < rank_; ++c) {
            const Coeff delta = b == c ? 1 : 0;
            if ((*this)(u, b, c) != delta || (*this)(b, u, c) != delta) return false;
        }
    return true;
}

nlohmann::json StructureTensor::to_json() const {
    auto out = nlohmann::json::array();
    for (std::size_t a = 0; a < rank_; ++a) {
        auto row = nlohmann::json::array();
        for (std::size_t b = 0; b < rank_; ++b) {
            auto fiber = nlohmann::json::array();
            for (std::size_t c = 0; c < rank_; ++c) fiber.push_back((*this)(a, b, c));
            row.push_back(std::move(fiber));
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace verlinde
