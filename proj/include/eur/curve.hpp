// curve.hpp — bound-curve sweeps and their CSV serialization
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eur/bounds.hpp"

namespace eur {

struct CurveRow {
    double c = 0.0;
    double deutsch = 0.0;
    double maassen_uffink = 0.0;
    double f = 0.0;
    double g = 0.0;
    std::optional<double> h1;
    double bound = 0.0;
    BoundBranch branch = BoundBranch::MU;
};

CurveRow curve_row(const Overlap& ov);

// Rows at c = min_c + k*step while c <= max_c (the final c is clamped to
// max_c against accumulated rounding). step larger than the range yields a
// single row at min_c.
std::vector<CurveRow> make_curve(double min_c, double max_c, double step);

// 12 significant digits, plain decimal notation.
std::string format_number(double v);

inline constexpr const char* kCurveCsvHeader =
    "c,deutsch,maassen_uffink,f,g,h1,bound,branch";

// Header plus one line per row, '\n' line endings, empty h1 field when absent.
void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows);

}  // namespace eur
