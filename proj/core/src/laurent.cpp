#include "verlinde/laurent.hpp"

#include <sstream>
#include <vector>

namespace verlinde {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, Coeff>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(Exponent e, Coeff c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
    std::erase_if(terms, [](const auto& t) { return t.second == 0; });
    LaurentPoly p;
    p.terms_ = std::move(terms);
    return p;
}

Coeff LaurentPoly::coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(Exponent e, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, checked_neg(c));
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, checked_neg(c));
    return r;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    using Exponent = LaurentPoly::Exponent;
    Exponent lo = checked_add(*lhs.min_exponent(), *rhs.min_exponent());
    Exponent hi = checked_add(*lhs.max_exponent(), *rhs.max_exponent());
    Exponent span = checked_sub(hi, lo);

    // Dense accumulation when the product's exponent window is small; the
    // characters that show up here are contiguous, so this is the hot path.
    constexpr Exponent kDenseLimit = 1 << 16;
    if (span < kDenseLimit && span <= static_cast<Exponent>(lhs.size() * rhs.size()) * 4) {
        std::vector<Coeff> acc(static_cast<std::size_t>(span) + 1, 0);
        for (const auto& [e1, c1] : lhs.terms_)
            for (const auto& [e2, c2] : rhs.terms_) {
                auto& slot = acc[static_cast<std::size_t>(e1 + e2 - lo)];
                slot = checked_add(slot, checked_mul(c1, c2));
            }
        LaurentPoly r;
        for (std::size_t i = 0; i < acc.size(); ++i)
            if (acc[i] != 0) r.terms_.emplace_hint(r.terms_.end(), lo + static_cast<Exponent>(i), acc[i]);
        return r;
    }

    LaurentPoly r;
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_) r.add_term(checked_add(e1, e2), checked_mul(c1, c2));
    return r;
}

LaurentPoly laurent_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly weyl_involution(const LaurentPoly& p) {
    LaurentPoly::Terms reflected;
    for (const auto& [e, c] : p.terms()) reflected.emplace(checked_neg(e), c);
    return LaurentPoly::from_terms(std::move(reflected));
}

bool is_weyl_symmetric(const LaurentPoly& p) { return weyl_involution(p) == p; }

std::string to_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            out << c;
        } else if (c < 0) {
            // -c cannot overflow here: the printed magnitude goes through unsigned.
            out << " - " << (0 - static_cast<std::uint64_t>(c));
        } else {
            out << " + " << c;
        }
        out << "*a^" << e;
        first = false;
    }
    return out.str();
}

nlohmann::json to_json(const LaurentPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({e, c});
    return arr;
}

}  // namespace verlinde
