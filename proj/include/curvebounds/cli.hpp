#pragma once

// Command-line front end and output serialization.

#include <iosfwd>
#include <string>
#include <vector>

#include "curvebounds/audit.hpp"

namespace curvebounds {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;
}  // namespace exit_code

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Plain-text netpbm (P3/P2, maxval 255) and CSV renderings of a grid.
void write_sign_ppm(const SignGrid& grid, std::ostream& os);
void write_magnitude_pgm(const SignGrid& grid, std::ostream& os);
void write_grid_csv(const SignGrid& grid, std::ostream& os);

std::string report_json(const BoundReport& report);

}  // namespace curvebounds
