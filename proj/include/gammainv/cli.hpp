#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammainv/kernel.hpp"

namespace gammainv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses "a+bi", "a-bi", "a", "bi", "i", "-i" with optional whitespace.
/// Throws std::invalid_argument on malformed input.
Complex parse_complex(std::string_view text);

struct ReportItem {
    std::string name;
    std::optional<double> paper_value;
    double computed;
    double tolerance;
    bool pass;
};

struct Report {
    std::string suite;
    std::vector<ReportItem> items;
    bool all_pass() const;
};

/// Builds the named suite ("paper" or "structural").
Report build_report(const std::string& suite);

/// Runs one command; args excludes the program name. Results go to out,
/// diagnostics to err. Returns 0, 1 (verification failure) or 2 (usage).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gammainv::cli
