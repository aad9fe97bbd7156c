#include "verlinde/induction.hpp"

namespace verlinde {

RepRingElem induce_monomial(LaurentPoly::Exponent n) {
    if (n >= 0) return RepRingElem::irrep(n);
    if (n == -1) return {};
    return RepRingElem::irrep(checked_sub(checked_neg(n), 2), -1);
}

RepRingElem induce(const LaurentPoly& p) {
    RepRingElem::Coeffs acc;
    for (const auto& [e, c] : p.terms()) {
        if (e == -1) continue;
        const Weight n = e >= 0 ? e : checked_sub(checked_neg(e), 2);
        const Coeff signed_c = e >= 0 ? c : checked_neg(c);
        auto& slot = acc[n];
        slot = checked_add(slot, signed_c);
    }
    return RepRingElem::from_coeffs(std::move(acc));
}

}  // namespace verlinde
