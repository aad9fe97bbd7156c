#pragma once

#include "verlinde/laurent.hpp"
#include "verlinde/rep_ring.hpp"

namespace verlinde {

// Holomorphic (Borel-Weil) induction R(T) -> R(SU2). On a weight n it is
// the Weyl character formula read as a virtual character:
//   n >= 0   -> X<n>
//   n == -1  -> 0
//   n <= -2  -> -X<-n-2>

RepRingElem induce_monomial(LaurentPoly::Exponent n);

/// Linear extension of induce_monomial. A map of R(SU2)-modules.
RepRingElem induce(const LaurentPoly& p);

}  // namespace verlinde
