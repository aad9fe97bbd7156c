#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace verlinde::cli {

enum class Format { text, json };

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

struct CommandResult {
    int exit_code = kSuccess;
    std::string out;
    std::string err;
};

CommandResult cmd_fusion(std::int64_t level, Format format);
CommandResult cmd_twisted_k(std::int64_t twist, Format format);
CommandResult cmd_verify(std::int64_t max_level, Format format);
CommandResult cmd_induce(const std::vector<std::int64_t>& exponents, Format format);
CommandResult cmd_smatrix(std::int64_t level, Format format);
CommandResult cmd_finite(const std::vector<std::int64_t>& orders, Format format);

/// Parses argv, dispatches, writes to out/err and returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace verlinde::cli
