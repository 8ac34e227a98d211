#pragma once

#include <filesystem>
#include <string>

#include "sincderiv/sweep.hpp"

namespace sincderiv {

/// Scientific notation with 17 significant digits; parses back to the same
/// double bit for bit.
std::string format_real(double v);

/// Writes an ErrorReport as CSV: `#`-prefixed metadata lines (function,
/// formula, m, grid, profile, timestamp), then the header
/// `n,h,M,N,err_l0,...,err_lm`, then one line per row. Integers plain,
/// reals through format_real. Byte-stable for identical inputs apart from
/// the timestamp line.
void write_csv(const ErrorReport& report, const std::filesystem::path& path);

} // namespace sincderiv
