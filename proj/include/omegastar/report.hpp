// report.hpp
// Table assembly for the CLI: fit columns, the heuristic constant, row
// formatting to CSV/JSON, and the reproduction suite that re-derives the
// published numbers and verdicts each one.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omegastar/util.hpp"

namespace omegastar {

// zeta(3) by direct series summation, absolute error < 1e-12.
double zeta3();

// 2 * zeta(2) * zeta(3) / zeta(6) ~ 3.88719.
double heuristic_constant();

double m2_fit(double x);    // 3 ln x - 6
double s2_fit(double x);    // 3.2 (1 - 1/ln x)
double tail_fit(double x);  // 0.69 ln x - 2.7

// The fit columns of the published tables, evaluated at one bound.
struct FitColumns {
    double m2_fit = 0;
    double s2_fit = 0;
    double tail_fit = 0;
    double constant_c = 0;  // 2 zeta(2) zeta(3) / zeta(6)
};
FitColumns fit_columns(double x);

// One output row. `value` and `fit` hold the value after rounding to the
// requested significant digits, so emitted JSON parses back to exactly
// this row. `power_sum` carries the exact integer behind a moment value;
// `exact` carries other exact payloads (rationals, divisor sets).
struct Row {
    double x = 0;
    std::string metric;
    double value = 0;
    std::optional<double> fit;
    std::string method;
    double seconds = 0;
    std::optional<std::string> power_sum;
    std::optional<std::string> exact;

    bool operator==(const Row&) const = default;
};

// Round to `digits` significant decimal digits (the CSV/JSON precision).
double round_sig(double v, int digits);
std::string format_sig(double v, int digits);

std::string emit_csv(const std::vector<Row>& rows);
std::string emit_json(const std::vector<Row>& rows);
std::vector<Row> parse_json(const std::string& text);

// -----------------------------------------------------------------------
// Reproduction suite
// -----------------------------------------------------------------------

enum class ReproScale { small, medium };

struct ReproCheck {
    std::string name;       // what is being reproduced, with paper anchor
    std::string anchor;     // expected value as printed
    std::string computed;
    std::string tolerance;  // "exact" or the relative tolerance
    bool pass = false;
    std::string note;       // analysis for known anchor defects
};

// small: x <= 1e4 everywhere, seconds. medium: adds the 1e5/1e6 anchors.
std::vector<ReproCheck> repro_suite(ReproScale scale,
                                    u64 segment_size = 0);

// One line per check; returns false if any check failed.
bool print_repro(const std::vector<ReproCheck>& checks, std::string& out);

}  // namespace omegastar
