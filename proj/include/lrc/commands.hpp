#pragma once

#include "lrc/problem.hpp"
#include "lrc/report.hpp"

#include <string>

namespace lrc {

// Commands: verify-mf, verify-syzygies, check-connection, complex-check,
// cohomology, horizontal, gauss-manin, gysin, cusp. The problem's task
// section names the command; `command` must match it.
Report run_command(const std::string& command, const ProblemFile& problem);

// Expanded grid point for the family commands.
struct GridPoint {
    int m, n, k, l;
};
std::vector<GridPoint> expand_grid(const ProblemFile::TaskSection& task, bool with_kl);

}  // namespace lrc
