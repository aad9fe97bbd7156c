#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "verlinde/finite_sector.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/induction.hpp"
#include "verlinde/theorem.hpp"
#include "verlinde/twisted_k.hpp"

namespace verlinde::cli {

namespace {

CommandResult usage(const std::string& message) { return {kUsageError, "", "error: " + message + "\n"}; }

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

double round12(double x) {
    const double r = std::round(x * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;  // no "-0"
}

}  // namespace

CommandResult cmd_fusion(std::int64_t level, Format format) {
    if (level < 0) return usage("--level must be >= 0, got " + std::to_string(level));
    const auto ring = build_fusion_ring(level);
    return {kSuccess, format == Format::json ? dump(to_json(ring)) : to_text(ring), ""};
}

CommandResult cmd_twisted_k(std::int64_t twist, Format format) {
    if (twist < 1) return usage("--twist must be >= 1, got " + std::to_string(twist));
    const auto q = twisted_k_theory(TwistClass(twist));
    return {kSuccess, format == Format::json ? dump(to_json(q)) : to_text(q), ""};
}

CommandResult cmd_verify(std::int64_t max_level, Format format) {
    if (max_level < 0) return usage("--max-level must be >= 0, got " + std::to_string(max_level));
    const auto reports = verify_range(max_level);
    const auto summary = summarize(reports);
    CommandResult result;
    result.exit_code = summary.all_passed() ? kSuccess : kVerificationFailed;
    if (format == Format::json) {
        auto arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        result.out = dump(arr);
    } else {
        std::ostringstream out;
        for (const auto& r : reports) out << to_text(r);
        out << summary.passed << "/" << summary.levels << " levels passed, " << summary.entries_compared
            << " structure constants compared\n";
        result.out = out.str();
    }
    return result;
}

CommandResult cmd_induce(const std::vector<std::int64_t>& exponents, Format format) {
    LaurentPoly p;
    for (auto e : exponents) p += LaurentPoly::monomial(e);
    const auto x = induce(p);
    return {kSuccess, format == Format::json ? dump(to_json(x)) : to_text(x) + "\n", ""};
}

CommandResult cmd_smatrix(std::int64_t level, Format format) {
    if (level < 0) return usage("--level must be >= 0, got " + std::to_string(level));
    const SMatrix s(level);
    if (format == Format::json) {
        nlohmann::json j;
        j["k"] = level;
        auto rows = nlohmann::json::array();
        for (std::size_t a = 0; a < s.size(); ++a) {
            auto row = nlohmann::json::array();
            for (std::size_t b = 0; b < s.size(); ++b) row.push_back(round12(s(a, b)));
            rows.push_back(std::move(row));
        }
        j["S"] = std::move(rows);
        return {kSuccess, dump(j), ""};
    }
    std::string out;
    char buf[32];
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = 0; b < s.size(); ++b) {
            std::snprintf(buf, sizeof buf, "%.12f", round12(s(a, b)));
            out += (b ? " " : "");
            out += buf;
        }
        out += "\n";
    }
    return {kSuccess, out, ""};
}

CommandResult cmd_finite(const std::vector<std::int64_t>& orders, Format format) {
    if (orders.empty()) return usage("finite needs at least one --cyclic order");
    for (auto n : orders)
        if (n < 2) return usage("--cyclic order must be >= 2, got " + std::to_string(n));
    const auto ring = kgg_ring(FiniteAbelianGroup(orders));
    return {kSuccess, format == Format::json ? dump(to_json(ring)) : to_text(ring), ""};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verlinde algebra of SU2 and twisted equivariant K-theory"};
    app.require_subcommand(1);

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::int64_t fusion_level = 0;
    auto* fusion = app.add_subcommand("fusion", "Fusion table of the level-k Verlinde algebra");
    fusion->add_option("--level", fusion_level, "Level k >= 0")->required();

    std::int64_t twist = 0;
    auto* twisted = app.add_subcommand("twisted-k", "Twisted equivariant K-theory of SU2 at twist m");
    twisted->add_option("--twist", twist, "Twist multiple m >= 1")->required();

    std::int64_t max_level = 0;
    auto* verify = app.add_subcommand("verify", "Check V_k(SU2) against twisted K-theory for k = 0..max");
    verify->add_option("--max-level", max_level, "Largest level to check")->required();

    std::vector<std::int64_t> exponents;
    auto* induce_cmd = app.add_subcommand("induce", "Holomorphic induction of a sum of torus weights");
    induce_cmd->add_option("exponents", exponents, "Exponents n of the monomials a^n")->required();

    std::int64_t smatrix_level = 0;
    auto* smatrix = app.add_subcommand("smatrix", "Modular S-matrix at level k");
    smatrix->add_option("--level", smatrix_level, "Level k >= 0")->required();

    std::vector<std::int64_t> orders;
    auto* finite = app.add_subcommand("finite", "Level-0 K_G(G) for a finite abelian group");
    finite->add_option("--cyclic", orders, "Order of a cyclic factor (repeatable)")->required();

    for (auto* sub : {fusion, twisted, verify, induce_cmd, smatrix, finite}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsageError;
    }

    const Format format = format_name == "json" ? Format::json : Format::text;
    CommandResult result;
    try {
        if (fusion->parsed())
            result = cmd_fusion(fusion_level, format);
        else if (twisted->parsed())
            result = cmd_twisted_k(twist, format);
        else if (verify->parsed())
            result = cmd_verify(max_level, format);
        else if (induce_cmd->parsed())
            result = cmd_induce(exponents, format);
        else if (smatrix->parsed())
            result = cmd_smatrix(smatrix_level, format);
        else
            result = cmd_finite(orders, format);
    } catch (const std::invalid_argument& e) {
        result = usage(e.what());
    } catch (const std::overflow_error& e) {
        result = usage(std::string("input out of range: ") + e.what());
    }
    out << result.out;
    err << result.err;
    return result.exit_code;
}

}  // namespace verlinde::cli
