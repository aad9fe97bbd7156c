#include "verlinde/twisted_k.hpp"

#include <sstream>

#include "verlinde/induction.hpp"

namespace verlinde {

TwistClass::TwistClass(std::int64_t m) : m_(m) {
    if (m < 1) throw std::invalid_argument("twist multiple m must be >= 1, got " + std::to_string(m));
}

MVMap mv_map(const TwistClass& twist) {
    const auto m = twist.m();
    const auto twist_line = LaurentPoly::monomial(m);
    const std::array<LaurentPoly, 2> generators = {LaurentPoly::constant(1), LaurentPoly::monomial(-1)};

    MVMap mv;
    mv.m = m;
    for (std::size_t r = 0; r < generators.size(); ++r) {
        mv.entries[r][0] = induce(generators[r]);
        mv.entries[r][1] = induce(twist_line * generators[r]);
    }
    return mv;
}

RepRingElem certify_injective(const MVMap& mv) {
    RepRingElem det = mv.at(0, 0) * mv.at(1, 1) - mv.at(0, 1) * mv.at(1, 0);
    if (det.is_zero())
        throw TheoremViolation("Mayer-Vietoris pushforward has zero determinant at m = " + std::to_string(mv.m));
    return det;
}

namespace {

bool is_unit(const RepRingElem& x) { return x == RepRingElem::unit() || x == -RepRingElem::unit(); }

/// Eliminates a unit entry of the 2x2 matrix by row and column operations;
/// what remains is a single generator of the relation ideal.
RepRingElem schur_complement_at_unit(const MVMap& mv) {
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const auto& pivot = mv.at(i, j);
            if (!is_unit(pivot)) continue;
            const std::size_t oi = 1 - i;
            const std::size_t oj = 1 - j;
            // pivot^-1 == pivot for a unit of Z[X1].
            return mv.at(oi, oj) - mv.at(oi, j) * pivot * mv.at(i, oj);
        }
    throw TheoremViolation("Mayer-Vietoris pushforward has no unit entry at m = " + std::to_string(mv.m));
}

void fill_structure_constants(QuotientPresentation& q) {
    const auto n = q.rank();
    q.structure_constants = StructureTensor(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            const auto prod = quotient_mul(q, a, b);
            for (std::size_t c = 0; c < n; ++c) {
                q.structure_constants(a, b, c) = prod[c];
                q.structure_constants(b, a, c) = prod[c];
            }
        }
}

}  // namespace

QuotientPresentation cokernel(const MVMap& mv) {
    RepRingElem relation = schur_complement_at_unit(mv);
    if (!relation.is_zero() && relation.coeffs().rbegin()->second < 0) relation = -relation;

    const auto expected = RepRingElem::irrep(mv.m - 1);
    if (relation != expected)
        throw TheoremViolation("cokernel relation " + to_text(relation) + " is not " + to_text(expected));

    QuotientPresentation q;
    q.m = mv.m;
    q.relation = std::move(relation);
    for (Weight n = 0; n <= mv.m - 2; ++n) q.basis.push_back(n);
    fill_structure_constants(q);
    return q;
}

RepRingElem reduce_mod_relation(const RepRingElem& x, std::int64_t m) {
    const Weight wall = m - 1;
    RepRingElem::Coeffs out;
    for (const auto& [n0, c0] : x.coeffs()) {
        Weight n = n0;
        Coeff c = c0;
        // Each step either lands in 0..m-2, hits a zero, or strictly lowers n.
        while (true) {
            if (n >= 0 && n < wall) break;
            if (n == wall || n == -1) {
                c = 0;
                break;
            }
            if (n > wall) {
                n = 2 * wall - n;
            } else {
                n = -n - 2;
            }
            c = checked_neg(c);
        }
        if (c == 0) continue;
        auto& slot = out[n];
        slot = checked_add(slot, c);
    }
    return RepRingElem::from_coeffs(std::move(out));
}

std::vector<Coeff> quotient_mul(const QuotientPresentation& q, std::size_t a, std::size_t b) {
    const auto n = q.rank();
    if (a >= n || b >= n)
        throw std::out_of_range("quotient_mul: basis index out of range (rank " + std::to_string(n) + ")");
    const auto product = RepRingElem::irrep(q.basis[a]) * RepRingElem::irrep(q.basis[b]);
    const auto reduced = reduce_mod_relation(product, q.m);
    std::vector<Coeff> out(n, 0);
    for (const auto& [w, c] : reduced.coeffs()) out.at(static_cast<std::size_t>(w)) = c;
    return out;
}

QuotientPresentation twisted_k_theory(const TwistClass& twist) { return cokernel(mv_map(twist)); }

nlohmann::json to_json(const QuotientPresentation& q) {
    nlohmann::json j;
    j["m"] = q.m;
    j["level"] = q.level();
    j["rank"] = q.rank();
    j["relation"] = to_json(q.relation);
    j["structure_constants"] = q.structure_constants.to_json();
    j["k1_rank"] = q.degree.k1_rank;
    j["degree"] = q.degree.cohomology_degree;
    return j;
}

std::string to_text(const QuotientPresentation& q) {
    std::ostringstream out;
    out << "twist m = " << q.m << " (level " << q.level() << ")\n";
    out << "K_1 = 0\n";
    out << "K_0 = R(SU2)/<" << to_text(q.relation) << ">, free of rank " << q.rank() << "\n";
    out << "cohomological degree " << q.degree.cohomology_degree << " (odd)\n";
    const auto n = q.rank();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            RepRingElem::Coeffs prod;
            for (std::size_t c = 0; c < n; ++c) prod[q.basis[c]] = q.structure_constants(a, b, c);
            out << "[X" << q.basis[a] << "]·[X" << q.basis[b] << "] = "
                << to_text(RepRingElem::from_coeffs(std::move(prod))) << "\n";
        }
    return out.str();
}

}  // namespace verlinde
