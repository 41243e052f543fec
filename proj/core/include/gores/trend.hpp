#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gores/catalog.hpp"

namespace gores {

// One (first-revenue-ship year, efficiency) observation.
struct TrendPoint {
    int year = 0; // calendar year in [1970, 2100]
    double eer = 0.0; // Gbps per kW, > 0

    bool operator==(const TrendPoint&) const = default;
};

// Log-linear efficiency-over-time model:
//   ln(EER(y)) = intercept_log_eer + slope * (y - reference_year)
// reference_year is the mean input year, which keeps the normal equations
// well conditioned and makes the intercept the mean log efficiency.
struct TrendModel {
    double slope = 0.0; // per-year change of ln(EER)
    double intercept_log_eer = 0.0; // ln(Gbps/kW) at reference_year
    double reference_year = 0.0;
    double residual_rms = 0.0; // ln units, RMS over all points
    int n_points = 0;

    bool operator==(const TrendModel&) const = default;
};

// Ordinary least squares of ln(EER) against year. Points are sorted
// internally before accumulation, so the result is independent of input
// order. Throws InsufficientData on fewer than two points or all-equal
// years, ValidationError on a point outside its domain.
TrendModel fit_generation_trend(std::span<const TrendPoint> points);

// exp(intercept + slope * (year - reference_year)); strictly increasing in
// year exactly when slope > 0.
double project_eer(const TrendModel& model, double year);

// ln 2 / slope — years per efficiency doubling. Throws DomainError when the
// fitted efficiency is flat or declining (slope <= 0).
double doubling_time(const TrendModel& model);

// Published industry cadence figures the fitted trend is compared against.
struct CadenceConstants {
    std::array<int, 2> generation_years; // {3, 4}
    int architecture_cycle_years; // 5
    std::array<int, 2> depreciation_years; // {5, 7}
    int extended_multichassis_years; // 10
};

CadenceConstants cadence_constants();

// Two-column CSV "year,eer_gbps_per_kw" with header. Errors carry the
// 1-based file row.
std::vector<TrendPoint> parse_trend_csv(std::string_view content);

// (frs_year, computed EER) for every catalog configuration whose device has
// an FRS year, optionally restricted to one application class. Devices
// without the year are skipped.
std::vector<TrendPoint> collect_trend_points(
    const Catalog& catalog,
    const std::optional<ApplicationClass>& app_class = std::nullopt);

// The four-generation reference series. By default the exact pre-rounding
// EER values computed from the bundled draw/capacity figures; with
// printed_integers the rounded Gores integers (13, 25, 71, 96) instead.
std::vector<TrendPoint> table1_trend_points(bool printed_integers = false);

// Fitted-curve polyline for charting, n evenly spaced samples on [x0, x1].
struct CurvePoint {
    double x;
    double y;
};
std::vector<CurvePoint> sample_projection(const TrendModel& model, double x0, double x1,
                                          int n = 64);

} // namespace gores
