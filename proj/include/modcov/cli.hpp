#pragma once

#include "modcov/certify.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace modcov {

inline constexpr std::string_view kVersion = "0.1.0";

/// Entry point of the `modcov` tool; args excludes the program name.
/// Returns 0 when everything verified, 1 on a mathematical failure and 2 on
/// a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string certificate_json(const Certificate& cert, const Certificate* secondary = nullptr);

/// Instances certified by `suite`, in a fixed order, restricted to p <= max_p.
std::vector<CaseSpec> acceptance_instances(std::uint32_t max_p);

inline const std::vector<std::string>& suite_sections()
{
    static const std::vector<std::string> names{"certificates", "secondary", "properties", "lemmas",
                                                "xi",           "mutation",  "transfer"};
    return names;
}

struct SuiteRow {
    std::string section;
    std::string item;
    bool ok = false;
    std::string detail;
    double elapsed_ms = 0;
};

/// Runs one suite section. Throws std::invalid_argument for an unknown name.
std::vector<SuiteRow> run_suite_section(const std::string& section, std::uint32_t max_p);

} // namespace modcov
