#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "verlinde/checked.hpp"

namespace verlinde {

/// Exact integer Laurent polynomial in one variable a, i.e. an element of
/// the representation ring Z[a, a^-1] of the circle.
///
/// Terms are kept in a sparse exponent -> coefficient map with no zero
/// coefficients, so structural equality is ring equality. Arithmetic is
/// checked: any coefficient that leaves the 64-bit range throws
/// OverflowError.
class LaurentPoly {
public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, Coeff>;

    LaurentPoly() = default;

    /// Sums duplicate exponents and drops zero coefficients.
    LaurentPoly(std::initializer_list<std::pair<Exponent, Coeff>> terms);

    static LaurentPoly monomial(Exponent e, Coeff c = 1);
    static LaurentPoly constant(Coeff c) { return monomial(0, c); }
    static LaurentPoly from_terms(Terms terms);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Coeff coeff(Exponent e) const;

    std::optional<Exponent> min_exponent() const;
    std::optional<Exponent> max_exponent() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void add_term(Exponent e, Coeff c);

    Terms terms_;
};

LaurentPoly laurent_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q);

/// The Weyl reflection a -> a^-1.
LaurentPoly weyl_involution(const LaurentPoly& p);
bool is_weyl_symmetric(const LaurentPoly& p);

/// "c*a^e + ..." in ascending exponent order; the zero polynomial is "0".
std::string to_text(const LaurentPoly& p);
/// Array of [exponent, coefficient] pairs in ascending exponent order.
nlohmann::json to_json(const LaurentPoly& p);

}  // namespace verlinde
