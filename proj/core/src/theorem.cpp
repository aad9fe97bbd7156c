#include "verlinde/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "verlinde/twisted_k.hpp"

namespace verlinde {

TheoremReport compare_structures(Level k, const StructureTensor& fusion, const StructureTensor& quotient,
                                 bool k1_vanishes) {
    TheoremReport r;
    r.k = k;
    r.m = k + kDualCoxeterSU2;
    r.fusion_rank = fusion.rank();
    r.quotient_rank = quotient.rank();
    r.rank_match = fusion.rank() == quotient.rank() && fusion.rank() == static_cast<std::size_t>(k + 1);
    r.k1_vanishes = k1_vanishes;
    if (r.rank_match) {
        const auto n = fusion.rank();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (fusion(a, b, c) != quotient(a, b, c))
                        r.mismatches.push_back({a, b, c, fusion(a, b, c), quotient(a, b, c)});
    }
    r.verdict = r.rank_match && r.k1_vanishes && r.mismatches.empty();
    return r;
}

TheoremReport verify_level(Level k) {
    try {
        const auto fusion = build_fusion_ring(k);
        const auto mv = mv_map(TwistClass::from_level(k));
        bool k1_vanishes = true;
        try {
            certify_injective(mv);
        } catch (const TheoremViolation&) {
            k1_vanishes = false;
        }
        const auto quotient = cokernel(mv);
        return compare_structures(k, fusion.N, quotient.structure_constants, k1_vanishes);
    } catch (const std::exception& e) {
        TheoremReport r;
        r.k = k;
        r.m = k + kDualCoxeterSU2;
        r.error = e.what();
        return r;
    }
}

std::vector<TheoremReport> verify_range(Level k_max, unsigned threads) {
    if (k_max < 0) throw std::invalid_argument("k_max must be >= 0, got " + std::to_string(k_max));
    const auto count = static_cast<std::size_t>(k_max + 1);
    std::vector<TheoremReport> reports(count);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

    // Hand out levels from the top down so the expensive ones start first.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const auto level = static_cast<Level>(count - 1 - i);
            reports[static_cast<std::size_t>(level)] = verify_level(level);
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    return reports;
}

RangeSummary summarize(const std::vector<TheoremReport>& reports) {
    RangeSummary s;
    s.levels = reports.size();
    for (const auto& r : reports) {
        (r.verdict ? s.passed : s.failed) += 1;
        s.entries_compared += r.fusion_rank * r.fusion_rank * r.fusion_rank;
    }
    return s;
}

nlohmann::json to_json(const TheoremReport& report) {
    nlohmann::json j;
    j["k"] = report.k;
    j["m"] = report.m;
    j["fusion_rank"] = report.fusion_rank;
    j["quotient_rank"] = report.quotient_rank;
    j["rank_match"] = report.rank_match;
    j["k1_vanishes"] = report.k1_vanishes;
    auto mm = nlohmann::json::array();
    for (const auto& x : report.mismatches) mm.push_back({x.a, x.b, x.c, x.fusion_value, x.quotient_value});
    j["mismatches"] = std::move(mm);
    j["verdict"] = report.verdict;
    if (!report.error.empty()) j["error"] = report.error;
    return j;
}

std::string to_text(const TheoremReport& report) {
    std::ostringstream out;
    const auto n = report.fusion_rank;
    const auto total = n * n * n;
    out << (report.verdict ? "PASS" : "FAIL") << " k=" << report.k << " m=" << report.m << " rank "
        << report.fusion_rank << "/" << report.quotient_rank << " K1=" << (report.k1_vanishes ? "0" : "?")
        << " entries " << (report.rank_match ? total - report.mismatches.size() : 0) << "/" << total << "\n";
    if (!report.error.empty()) out << "  error: " << report.error << "\n";
    for (const auto& x : report.mismatches)
        out << "  mismatch (a,b,c)=(" << x.a << "," << x.b << "," << x.c << ") fusion=" << x.fusion_value
            << " quotient=" << x.quotient_value << "\n";
    return out.str();
}

}  // namespace verlinde
