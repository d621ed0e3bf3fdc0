#pragma once

/**
 * @file cli.hpp
 * @brief The ringlab command-line front end as an in-process function.
 *
 * Every command writes one JSON run report (schema 1). Reports for the same
 * inputs and seed are byte-identical except for the "timings" object.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace ringlab::cli {

enum ExitCode : int {
    kPass = 0,
    kCheckFailed = 1,
    kMalformedInput = 2,
    kBudget = 3,
    kInternal = 4,
};

inline constexpr int kReportSchema = 1;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringlab::cli
