#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "verlinde/checked.hpp"
#include "verlinde/laurent.hpp"

namespace verlinde {

using Weight = std::int64_t;

/// Element of the representation ring R(SU2), stored in the basis of
/// irreducible characters X<n> = Sym^n of the two-dimensional representation.
/// X0 is the unit and X1 generates the ring as a polynomial ring.
class RepRingElem {
public:
    using Coeffs = std::map<Weight, Coeff>;

    RepRingElem() = default;
    /// Sums duplicate weights, drops zeros; throws on a negative weight.
    RepRingElem(std::initializer_list<std::pair<Weight, Coeff>> terms);

    static RepRingElem irrep(Weight n, Coeff multiplicity = 1);
    static RepRingElem unit() { return irrep(0); }
    static RepRingElem from_coeffs(Coeffs coeffs);

    const Coeffs& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Coeff coeff(Weight n) const;
    std::optional<Weight> max_weight() const;

    RepRingElem& operator+=(const RepRingElem& rhs);
    RepRingElem& operator-=(const RepRingElem& rhs);
    friend RepRingElem operator+(RepRingElem lhs, const RepRingElem& rhs) { return lhs += rhs; }
    friend RepRingElem operator-(RepRingElem lhs, const RepRingElem& rhs) { return lhs -= rhs; }
    RepRingElem operator-() const;
    RepRingElem scaled(Coeff factor) const;

    friend bool operator==(const RepRingElem&, const RepRingElem&) = default;

private:
    void add_term(Weight n, Coeff c);

    Coeffs coeffs_;
};

/// Raised by decompose() when its argument is not Weyl-symmetric.
class NotWeylSymmetric : public std::invalid_argument {
public:
    NotWeylSymmetric(LaurentPoly::Exponent exponent, const std::string& detail);
    LaurentPoly::Exponent exponent() const noexcept { return exponent_; }

private:
    LaurentPoly::Exponent exponent_;
};

/// Character of Sym^n: a^n + a^(n-2) + ... + a^-n. Throws std::invalid_argument for n < 0.
LaurentPoly char_of_irrep(Weight n);

/// Restriction to the diagonal torus.
LaurentPoly restrict(const RepRingElem& x);

/// Inverse of restrict() on Weyl-symmetric polynomials; peels off the top
/// character repeatedly.
RepRingElem decompose(const LaurentPoly& p);

/// Product in R(SU2), computed through characters.
RepRingElem rep_mul(const RepRingElem& x, const RepRingElem& y);

inline RepRingElem operator*(const RepRingElem& x, const RepRingElem& y) { return rep_mul(x, y); }

std::string to_text(const RepRingElem& x);
nlohmann::json to_json(const RepRingElem& x);

}  // namespace verlinde
