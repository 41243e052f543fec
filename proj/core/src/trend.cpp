#include "gores/trend.hpp"

#include <algorithm>
#include <cmath>

#include "csv_util.hpp"
#include "gores/metrics.hpp"

namespace gores {

namespace {

constexpr int kYearMin = 1970;
constexpr int kYearMax = 2100;

void validate_point(const TrendPoint& p) {
    if (!(p.eer > 0.0)) {
        throw ValidationError("trend point EER must be > 0 (year " + std::to_string(p.year) + ")");
    }
    if (p.year < kYearMin || p.year > kYearMax) {
        throw ValidationError("trend point year " + std::to_string(p.year) + " outside [" +
                              std::to_string(kYearMin) + ", " + std::to_string(kYearMax) + "]");
    }
}

} // namespace

TrendModel fit_generation_trend(std::span<const TrendPoint> points) {
    if (points.size() < 2) {
        throw InsufficientData("trend fit needs at least 2 points, got " +
                               std::to_string(points.size()));
    }
    // Sorting first makes the accumulated sums, and therefore the fit,
    // independent of the caller's point order.
    std::vector<TrendPoint> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const TrendPoint& a, const TrendPoint& b) {
        return std::tie(a.year, a.eer) < std::tie(b.year, b.eer);
    });
    for (const auto& p : sorted) {
        validate_point(p);
    }

    const double n = static_cast<double>(sorted.size());
    double year_sum = 0.0;
    for (const auto& p : sorted) {
        year_sum += static_cast<double>(p.year);
    }
    const double reference_year = year_sum / n;

    double log_sum = 0.0;
    for (const auto& p : sorted) {
        log_sum += std::log(p.eer);
    }
    const double mean_log = log_sum / n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& p : sorted) {
        const double dx = static_cast<double>(p.year) - reference_year;
        const double dy = std::log(p.eer) - mean_log;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    if (sxx == 0.0) {
        throw InsufficientData("trend fit needs at least two distinct years");
    }

    TrendModel model;
    model.slope = sxy / sxx;
    // The least-squares line passes through the centroid, so the intercept
    // at the mean year is the mean log efficiency.
    model.intercept_log_eer = mean_log;
    model.reference_year = reference_year;
    model.n_points = static_cast<int>(sorted.size());

    double sq = 0.0;
    for (const auto& p : sorted) {
        const double dx = static_cast<double>(p.year) - reference_year;
        const double r = std::log(p.eer) - (mean_log + model.slope * dx);
        sq += r * r;
    }
    model.residual_rms = std::sqrt(sq / n);
    return model;
}

double project_eer(const TrendModel& model, double year) {
    return std::exp(model.intercept_log_eer + model.slope * (year - model.reference_year));
}

double doubling_time(const TrendModel& model) {
    if (!(model.slope > 0.0)) {
        throw DomainError("doubling time undefined for flat or declining efficiency (slope " +
                          std::to_string(model.slope) + ")");
    }
    return std::log(2.0) / model.slope;
}

CadenceConstants cadence_constants() {
    return CadenceConstants{{3, 4}, 5, {5, 7}, 10};
}

std::vector<TrendPoint> parse_trend_csv(std::string_view content) {
    const auto rows = detail::parse_csv(content);
    if (rows.empty()) {
        throw ParseError("trend CSV is empty; expected header 'year,eer_gbps_per_kw'");
    }
    const auto& header = rows.front();
    if (header.fields.size() != 2 || detail::trim(header.fields[0]) != "year" ||
        detail::trim(header.fields[1]) != "eer_gbps_per_kw") {
        throw ParseError("expected header 'year,eer_gbps_per_kw'", header.line);
    }
    std::vector<TrendPoint> points;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != 2) {
            throw ParseError("expected 2 columns, got " + std::to_string(row.fields.size()),
                             row.line);
        }
        TrendPoint p;
        p.year = detail::parse_int_field(row.fields[0], "year", row.line);
        p.eer = detail::parse_double_field(row.fields[1], "eer_gbps_per_kw", row.line);
        points.push_back(p);
    }
    return points;
}

std::vector<TrendPoint> collect_trend_points(const Catalog& catalog,
                                             const std::optional<ApplicationClass>& app_class) {
    std::vector<TrendPoint> points;
    for (const auto& config : catalog.configurations) {
        const DeviceModel* device = catalog.find_device(config.device);
        if (device == nullptr || !device->frs_year) {
            continue;
        }
        if (app_class && device->application_class != *app_class) {
            continue;
        }
        const EcrRating rating = compute_ecr(config, *device);
        points.push_back({*device->frs_year, rating.eer_gbps_per_kw});
    }
    return points;
}

std::vector<TrendPoint> table1_trend_points(bool printed_integers) {
    const Catalog& fixtures = builtin_fixtures();
    std::vector<TrendPoint> points;
    for (const auto& name : table1_device_names()) {
        const DeviceModel* device = fixtures.find_device(name);
        for (const SystemConfiguration* config : fixtures.configurations_of(name)) {
            const EcrRating rating = compute_ecr(*config, *device);
            const double eer = printed_integers ? static_cast<double>(rating.gores_display)
                                                : rating.eer_gbps_per_kw;
            points.push_back({*device->frs_year, eer});
        }
    }
    return points;
}

std::vector<CurvePoint> sample_projection(const TrendModel& model, double x0, double x1, int n) {
    if (n < 2) {
        n = 2;
    }
    std::vector<CurvePoint> samples;
    samples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        const double x = x0 + t * (x1 - x0);
        samples.push_back({x, project_eer(model, x)});
    }
    return samples;
}

} // namespace gores
