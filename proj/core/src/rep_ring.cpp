#include "verlinde/rep_ring.hpp"

#include <sstream>
#include <vector>

namespace verlinde {

namespace {

void require_weight(Weight n) {
    if (n < 0) throw std::invalid_argument("irreducible SU2 weight must be >= 0, got " + std::to_string(n));
}

}  // namespace

RepRingElem::RepRingElem(std::initializer_list<std::pair<Weight, Coeff>> terms) {
    for (const auto& [n, c] : terms) add_term(n, c);
}

RepRingElem RepRingElem::irrep(Weight n, Coeff multiplicity) {
    RepRingElem x;
    x.add_term(n, multiplicity);
    return x;
}

RepRingElem RepRingElem::from_coeffs(Coeffs coeffs) {
    RepRingElem x;
    for (const auto& [n, c] : coeffs) x.add_term(n, c);
    return x;
}

Coeff RepRingElem::coeff(Weight n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? 0 : it->second;
}

std::optional<Weight> RepRingElem::max_weight() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

void RepRingElem::add_term(Weight n, Coeff c) {
    require_weight(n);
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(n, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs_.erase(it);
}

RepRingElem& RepRingElem::operator+=(const RepRingElem& rhs) {
    for (const auto& [n, c] : rhs.coeffs_) add_term(n, c);
    return *this;
}

RepRingElem& RepRingElem::operator-=(const RepRingElem& rhs) {
    for (const auto& [n, c] : rhs.coeffs_) add_term(n, checked_neg(c));
    return *this;
}

RepRingElem RepRingElem::operator-() const { return scaled(-1); }

RepRingElem RepRingElem::scaled(Coeff factor) const {
    RepRingElem r;
    if (factor == 0) return r;
    for (const auto& [n, c] : coeffs_) r.coeffs_.emplace_hint(r.coeffs_.end(), n, checked_mul(c, factor));
    return r;
}

NotWeylSymmetric::NotWeylSymmetric(LaurentPoly::Exponent exponent, const std::string& detail)
    : std::invalid_argument("decompose: polynomial is not Weyl-symmetric at exponent " +
                            std::to_string(exponent) + " (" + detail + ")"),
      exponent_(exponent) {}

LaurentPoly char_of_irrep(Weight n) {
    require_weight(n);
    LaurentPoly::Terms terms;
    for (Weight e = -n; e <= n; e += 2) terms.emplace_hint(terms.end(), e, 1);
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly restrict(const RepRingElem& x) {
    if (x.is_zero()) return {};
    // Each X<n> contributes c to every exponent -n, -n+2, ..., n; accumulate densely.
    const Weight top = *x.max_weight();
    std::vector<Coeff> acc(static_cast<std::size_t>(2 * top + 1), 0);
    for (const auto& [n, c] : x.coeffs())
        for (Weight e = -n; e <= n; e += 2) {
            auto& slot = acc[static_cast<std::size_t>(e + top)];
            slot = checked_add(slot, c);
        }
    LaurentPoly::Terms terms;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) terms.emplace_hint(terms.end(), static_cast<Weight>(i) - top, acc[i]);
    return LaurentPoly::from_terms(std::move(terms));
}

RepRingElem decompose(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms()) {
        const Coeff mirror = p.coeff(-e);
        if (mirror != c)
            throw NotWeylSymmetric(e, "coefficient " + std::to_string(c) + " at a^" + std::to_string(e) +
                                          " but " + std::to_string(mirror) + " at a^" + std::to_string(-e));
    }
    // Peeling off c * X<top> for the top exponent, repeatedly, leaves
    // multiplicity c_e - c_{e+2} on X<e>: X<n> has coefficient 1 at each of
    // n, n-2, ..., so the multiplicities are running differences within a
    // parity class. Only e with c_e != 0 or c_{e+2} != 0 can contribute.
    RepRingElem::Coeffs out;
    for (const auto& [e, c] : p.terms()) {
        if (e < 0) continue;
        const Coeff m = checked_sub(c, p.coeff(e + 2));
        if (m != 0) out.emplace(e, m);
        if (e >= 2 && p.coeff(e - 2) == 0) out.emplace(e - 2, checked_neg(c));
    }
    return RepRingElem::from_coeffs(std::move(out));
}

RepRingElem rep_mul(const RepRingElem& x, const RepRingElem& y) { return decompose(restrict(x) * restrict(y)); }

std::string to_text(const RepRingElem& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [n, c] : x.coeffs()) {
        std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (mag != 1) out << mag << "·";
        out << 'X' << n;
        first = false;
    }
    return out.str();
}

nlohmann::json to_json(const RepRingElem& x) {
    auto arr = nlohmann::json::array();
    for (const auto& [n, c] : x.coeffs()) arr.push_back({n, c});
    return arr;
}

}  // namespace verlinde
