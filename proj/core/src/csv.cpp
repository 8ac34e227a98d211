#include "sincderiv/csv.hpp"

#include <cstdio>
#include <fstream>

namespace sincderiv {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

void write_csv(const ErrorReport& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("write_csv: cannot open " + path.string());

    out << "# function: " << to_string(report.function) << "\n";
    out << "# formula: " << to_string(report.formula) << "\n";
    out << "# m: " << report.m << "\n";
    out << "# grid: " << report.grid << "\n";
    out << "# profile: alpha=" << format_real(report.profile.alpha)
        << " beta=" << format_real(report.profile.beta)
        << " d=" << format_real(report.profile.d) << "\n";
    out << "# timestamp: " << report.timestamp << "\n";

    out << "n,h,M,N";
    for (int l = 0; l <= report.m; ++l) out << ",err_l" << l;
    out << "\n";

    for (const SweepRow& row : report.rows) {
        out << row.n << "," << format_real(row.h) << "," << row.M << "," << row.N;
        for (const double err : row.max_abs_error) out << "," << format_real(err);
        out << "\n";
    }

    out.flush();
    if (!out) throw Error("write_csv: write failed for " + path.string());
}

} // namespace sincderiv
