#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "verlinde/rep_ring.hpp"
#include "verlinde/structure_tensor.hpp"

namespace verlinde {

/// Dual Coxeter number of SU2; the twist is m = level + kDualCoxeterSU2.
inline constexpr std::int64_t kDualCoxeterSU2 = 2;

/// A twist for K-theory of SU2 acting on itself by conjugation: m times the
/// generator of H^3_G(G) = Z. The level is m - 2 and only means something
/// for m >= 2; m = 1 is accepted and gives the zero ring.
class TwistClass {
public:
    explicit TwistClass(std::int64_t m);
    static TwistClass from_level(std::int64_t k) { return TwistClass(k + kDualCoxeterSU2); }

    std::int64_t m() const noexcept { return m_; }
    std::int64_t level() const noexcept { return m_ - kDualCoxeterSU2; }

private:
    std::int64_t m_;
};

/// Something that the computation proves cannot happen did happen.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The Mayer-Vietoris pushforward K_0(U n V) -> K_0(U) + K_0(V) as a 2x2
/// matrix over R(SU2). Row r is the image of the r-th R(SU2)-module
/// generator of R(T) (row 0: 1, row 1: a^-1); column 0 is the U factor
/// (rho -> ind(rho)), column 1 the V factor (rho -> ind(a^m rho)).
struct MVMap {
    std::int64_t m = 0;
    std::array<std::array<RepRingElem, 2>, 2> entries;

    const RepRingElem& at(std::size_t row, std::size_t col) const { return entries.at(row).at(col); }
};

MVMap mv_map(const TwistClass& twist);

/// Determinant of the pushforward over the integral domain R(SU2). A nonzero
/// value certifies injectivity, hence K_1 = 0. With the row order above it
/// equals +X<m-1>. Throws TheoremViolation if zero.
RepRingElem certify_injective(const MVMap& mv);

/// Where the result lives: the homology computation lands in degree 0 and
/// K_1 vanishes; after Poincare duality the cohomology sits in degree dim SU2.
struct DegreeLabel {
    int homology_degree = 0;
    int k1_rank = 0;
    int cohomology_degree = 3;
    bool odd = true;
};

/// K_0 of the twisted theory presented as R(SU2) / <relation>, with residue
/// classes of X<0>, ..., X<m-2> as basis.
struct QuotientPresentation {
    std::int64_t m = 0;
    RepRingElem relation;
    std::vector<Weight> basis;
    StructureTensor structure_constants;
    DegreeLabel degree;

    std::size_t rank() const noexcept { return basis.size(); }
    std::int64_t level() const noexcept { return m - kDualCoxeterSU2; }
};

/// Presents the cokernel of the pushforward by eliminating a unit pivot,
/// then fills in the structure constants with quotient_mul.
QuotientPresentation cokernel(const MVMap& mv);

/// Reduces x modulo <X<m-1>> to a combination of X<0>..X<m-2> by the
/// reflection X<m-1+j> == -X<m-1-j> (and X<-1> == 0, X<-n-2> == -X<n>).
RepRingElem reduce_mod_relation(const RepRingElem& x, std::int64_t m);

/// [X<a>] * [X<b>] in the quotient, as coefficients over the basis.
/// Throws std::out_of_range for a or b outside 0..m-2.
std::vector<Coeff> quotient_mul(const QuotientPresentation& q, std::size_t a, std::size_t b);

/// Convenience: mv_map + cokernel.
QuotientPresentation twisted_k_theory(const TwistClass& twist);

nlohmann::json to_json(const QuotientPresentation& q);
std::string to_text(const QuotientPresentation& q);

}  // namespace verlinde
