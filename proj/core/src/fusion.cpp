#include "verlinde/fusion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace verlinde {

namespace {

void require_level(Level k) {
    if (k < 0) throw std::invalid_argument("level must be >= 0, got " + std::to_string(k));
}

void require_label(Level k, Label x, const char* name) {
    if (x < 0 || x > k)
        throw LabelOutOfRange(std::string("label ") + name + " = " + std::to_string(x) + " outside 0.." +
                              std::to_string(k));
}

}  // namespace

Coeff fusion_coeff(Level k, Label a, Label b, Label c) {
    require_level(k);
    require_label(k, a, "a");
    require_label(k, b, "b");
    require_label(k, c, "c");
    if ((a + b + c) % 2 != 0) return 0;
    const Label lo = a > b ? a - b : b - a;
    const Label hi = std::min(a + b, 2 * k - a - b);
    return lo <= c && c <= hi ? 1 : 0;
}

SMatrix::SMatrix(Level k, double tolerance)
    : k_(k), n_(static_cast<std::size_t>(k + 1)), tolerance_(tolerance) {
    require_level(k);
    if (!(tolerance > 0)) throw std::invalid_argument("S-matrix tolerance must be positive");
    entries_.resize(n_ * n_);
    const double height = static_cast<double>(k + 2);
    const double norm = std::sqrt(2.0 / height);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            entries_[a * n_ + b] =
                norm * std::sin(std::numbers::pi * static_cast<double>((a + 1) * (b + 1)) / height);
}

double SMatrix::orthogonality_residual() const {
    double worst = 0.0;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
            double dot = 0.0;
            for (std::size_t l = 0; l < n_; ++l) dot += (*this)(a, l) * (*this)(b, l);
            worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
    return worst;
}

bool SMatrix::is_symmetric() const {
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b)
            if ((*this)(a, b) != (*this)(b, a)) return false;
    return true;
}

double verlinde_coeff_numeric(const SMatrix& s, Label a, Label b, Label c) {
    const Level k = s.level();
    require_label(k, a, "a");
    require_label(k, b, "b");
    require_label(k, c, "c");
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    const auto ic = static_cast<std::size_t>(c);
    double sum = 0.0;
    for (std::size_t l = 0; l < s.size(); ++l) sum += s(ia, l) * s(ib, l) * s(ic, l) / s(0, l);

    const double nearest = std::round(sum);
    if (std::abs(sum - nearest) > s.tolerance() || nearest < 0) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "Verlinde sum at level " << k << " for (" << a << ", " << b << ", " << c << ") is " << sum
            << ", not within " << s.tolerance() << " of a non-negative integer";
        throw OracleDisagreement(msg.str());
    }
    return sum;
}

Coeff verlinde_coeff_rounded(const SMatrix& s, Label a, Label b, Label c) {
    return static_cast<Coeff>(std::llround(verlinde_coeff_numeric(s, a, b, c)));
}

FusionRing build_fusion_ring(Level k) {
    require_level(k);
    FusionRing ring{k, StructureTensor(static_cast<std::size_t>(k + 1))};
    const auto n = ring.rank();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                ring.N(a, b, c) = fusion_coeff(k, static_cast<Label>(a), static_cast<Label>(b),
                                               static_cast<Label>(c));

    if (!ring.N.is_unit(0)) throw std::logic_error("fusion ring: label 0 is not the unit");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Coeff v = ring.N(a, b, c);
                if (v != 0 && v != 1) throw std::logic_error("fusion ring: coefficient outside {0, 1}");
                // Transpositions (ab) and (bc) generate S3.
                if (v != ring.N(b, a, c) || v != ring.N(a, c, b))
                    throw std::logic_error("fusion ring: coefficients not S3-symmetric");
            }
    return ring;
}

nlohmann::json to_json(const FusionRing& ring) {
    nlohmann::json j;
    j["k"] = ring.k;
    j["N"] = ring.N.to_json();
    return j;
}

std::string to_text(const FusionRing& ring) {
    std::ostringstream out;
    const auto n = ring.rank();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            out << "V_" << a << "·V_" << b << " = ";
            bool first = true;
            for (std::size_t c = 0; c < n; ++c) {
                const Coeff v = ring.N(a, b, c);
                if (v == 0) continue;
                if (!first) out << " + ";
                if (v != 1) out << v << "·";
                out << "V_" << c;
                first = false;
            }
            if (first) out << "0";
            out << "\n";
        }
    return out.str();
}

}  // namespace verlinde
