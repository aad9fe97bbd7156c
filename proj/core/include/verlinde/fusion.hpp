#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "verlinde/structure_tensor.hpp"

namespace verlinde {

// Level-k Verlinde algebra of SU2. Labels are highest weights a = 2j in
// 0..k, so label a corresponds to the irreducible X<a> on the K-theory side.

using Level = std::int64_t;
using Label = std::int64_t;

class LabelOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Numerical Verlinde sum did not land near a non-negative integer.
class OracleDisagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// N_{ab}^c: 1 iff a+b+c is even and |a-b| <= c <= min(a+b, 2k-a-b).
Coeff fusion_coeff(Level k, Label a, Label b, Label c);

/// Modular S-matrix of affine su(2) at level k,
/// S_ab = sqrt(2/(k+2)) sin(pi (a+1)(b+1) / (k+2)).
class SMatrix {
public:
    static constexpr double kDefaultTolerance = 1e-9;

    explicit SMatrix(Level k, double tolerance = kDefaultTolerance);

    Level level() const noexcept { return k_; }
    std::size_t size() const noexcept { return n_; }
    double tolerance() const noexcept { return tolerance_; }
    double operator()(std::size_t a, std::size_t b) const { return entries_[a * n_ + b]; }

    /// max |S S^T - I|.
    double orthogonality_residual() const;
    bool is_symmetric() const;

private:
    Level k_;
    std::size_t n_;
    double tolerance_;
    std::vector<double> entries_;
};

/// sum_l S_al S_bl S_cl / S_0l. Throws OracleDisagreement unless the sum is
/// within the matrix tolerance of a non-negative integer.
double verlinde_coeff_numeric(const SMatrix& s, Label a, Label b, Label c);

/// verlinde_coeff_numeric rounded to the nearest integer.
Coeff verlinde_coeff_rounded(const SMatrix& s, Label a, Label b, Label c);

struct FusionRing {
    Level k = 0;
    StructureTensor N;

    std::size_t rank() const noexcept { return N.rank(); }
};

/// Builds the full fusion tensor and checks unit law, 0/1 entries and S3
/// symmetry; a violation throws std::logic_error.
FusionRing build_fusion_ring(Level k);

/// {"k": k, "N": [[[...]]]}
nlohmann::json to_json(const FusionRing& ring);
/// One line per unordered pair: "V_a·V_b = V_c + ...".
std::string to_text(const FusionRing& ring);

}  // namespace verlinde
