#include "eur/curve.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace eur {

CurveRow curve_row(const Overlap& ov) {
    const BoundBreakdown b = new_bound(ov);
    CurveRow row;
    row.c = b.c;
    row.deutsch = b.deutsch;
    row.maassen_uffink = b.maassen_uffink;
    row.f = b.f_val;
    row.g = b.g_val;
    row.h1 = b.h1();
    row.bound = b.bound;
    row.branch = b.active_branch;
    return row;
}

std::vector<CurveRow> make_curve(double min_c, double max_c, double step) {
    if (!(min_c > 0.0) || !(min_c <= max_c) || !(max_c <= 1.0) || !(step > 0.0)) {
        throw std::invalid_argument(
            "curve range requires 0 < min <= max <= 1 and step > 0");
    }
    std::vector<CurveRow> rows;
    const double tol = step * 1e-6;
    for (long long k = 0;; ++k) {
        double c = min_c + k * step;
        if (c > max_c + tol) break;
        c = std::min(c, max_c);
        rows.push_back(curve_row(Overlap(c)));
    }
    return rows;
}

std::string format_number(double v) {
    char buf[40];
    // %g at 12 significant digits; values on this curve are O(1) nats, so the
    // output stays in plain decimal notation.
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
    os << kCurveCsvHeader << '\n';
    for (const CurveRow& row : rows) {
        os << format_number(row.c) << ',' << format_number(row.deutsch) << ','
           << format_number(row.maassen_uffink) << ',' << format_number(row.f) << ','
           << format_number(row.g) << ',';
        if (row.h1) os << format_number(*row.h1);
        os << ',' << format_number(row.bound) << ',' << to_string(row.branch) << '\n';
    }
}

}  // namespace eur
