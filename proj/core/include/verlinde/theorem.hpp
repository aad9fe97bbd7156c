#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "verlinde/fusion.hpp"
#include "verlinde/structure_tensor.hpp"

namespace verlinde {

struct Mismatch {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    Coeff fusion_value = 0;
    Coeff quotient_value = 0;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Outcome of comparing V_k(SU2) with twisted K-theory at m = k + 2 under
/// V_a -> [X<a>].
struct TheoremReport {
    Level k = 0;
    std::int64_t m = 0;
    std::size_t fusion_rank = 0;
    std::size_t quotient_rank = 0;
    bool rank_match = false;
    bool k1_vanishes = false;
    std::vector<Mismatch> mismatches;
    bool verdict = false;
    std::string error;  // set when one of the engines threw
};

/// Entrywise comparison of two structure tensors under the identity
/// bijection on indices. verdict = rank_match && k1_vanishes && no mismatches.
TheoremReport compare_structures(Level k, const StructureTensor& fusion, const StructureTensor& quotient,
                                 bool k1_vanishes);

/// Never throws on a failed comparison; engine errors land in `error` with verdict false.
TheoremReport verify_level(Level k);

/// verify_level for k = 0..k_max, ordered by level. Levels are computed on
/// up to `threads` worker threads (0 = hardware concurrency).
std::vector<TheoremReport> verify_range(Level k_max, unsigned threads = 0);

struct RangeSummary {
    std::size_t levels = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t entries_compared = 0;

    bool all_passed() const noexcept { return failed == 0; }
};

RangeSummary summarize(const std::vector<TheoremReport>& reports);

nlohmann::json to_json(const TheoremReport& report);
/// "PASS k=2 m=4 rank 3/3 K1=0 entries 27/27", followed by mismatch lines on failure.
std::string to_text(const TheoremReport& report);

}  // namespace verlinde
