// Acceptance suite: one independently checkable criterion per run line.
// Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "gores/catalog.hpp"
#include "gores/chart.hpp"
#include "gores/commands.hpp"
#include "gores/metrics.hpp"
#include "gores/planner.hpp"
#include "gores/report.hpp"
#include "gores/trend.hpp"

using namespace gores;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double log_uniform(std::mt19937& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

// ---------------------------------------------------------------------------
// 1. Golden reproduction of the four-generation table
// ---------------------------------------------------------------------------
void criterion_golden_table(Checker& check) {
    const auto start = std::chrono::steady_clock::now();

    const Catalog& fixtures = builtin_fixtures();
    const std::vector<std::pair<std::string, long long>> expected = {
        {"M40", 13}, {"M160", 25}, {"T640", 71}, {"T1600", 96}};
    for (const auto& [name, gores] : expected) {
        const DeviceModel* device = fixtures.find_device(name);
        check.expect(device != nullptr, name + " missing from fixtures");
        if (device == nullptr) {
            return;
        }
        const auto configs = fixtures.configurations_of(name);
        const EcrRating rating = compute_ecr(*configs.front(), *device);
        check.expect(rating.gores_display == gores,
                     name + " gores " + std::to_string(rating.gores_display) + " != " +
                         std::to_string(gores));
    }

    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    check.expect(elapsed.count() < 1.0, "took " + std::to_string(elapsed.count()) + " s");
}

// ---------------------------------------------------------------------------
// 2. M10 -> M10i improvement
// ---------------------------------------------------------------------------
void criterion_improvement(Checker& check) {
    const Catalog& fixtures = builtin_fixtures();
    const EcrRating m10 = compute_ecr(*fixtures.configurations_of("M10").front(),
                                      *fixtures.find_device("M10"));
    const EcrRating m10i = compute_ecr(*fixtures.configurations_of("M10i").front(),
                                       *fixtures.find_device("M10i"));
    const double improvement = improvement_percent(m10, m10i);
    check.expect(std::abs(improvement - 0.2907) <= 0.0005,
                 "improvement " + std::to_string(improvement));
    check.expect(format_percent(improvement) == "29.1%",
                 "rendered '" + format_percent(improvement) + "'");
}

// ---------------------------------------------------------------------------
// 3. Reciprocal identity and scale invariance over random configurations
// ---------------------------------------------------------------------------
void criterion_reciprocal(Checker& check) {
    std::mt19937 rng(20260809);
    std::uniform_int_distribution<int> n_components(1, 6);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> conv(0, 1);
    const DeviceModel device{"box", "V", ApplicationClass::from_token("core-routing"),
                             ForwardingTechnology::CustomAsic, {}, {}, {}};

    for (int i = 0; i < 1000; ++i) {
        SystemConfiguration config;
        config.device = "box";
        config.config_name = "default";
        const int n = n_components(rng);
        for (int c = 0; c < n; ++c) {
            config.components.push_back({"c" + std::to_string(c),
                                         ComponentKind(ComponentKindVariant::Linecard),
                                         log_uniform(rng, 1.0, 5000.0), count(rng)});
        }
        config.rated_capacity = log_uniform(rng, 0.5, 10000.0);
        config.capacity_convention = conv(rng) == 0 ? CapacityConvention::FullDuplex
                                                    : CapacityConvention::AggregateBidirectional;

        const EcrRating rating = compute_ecr(config, device);
        const double product = rating.ecr_watts_per_gbps * rating.eer_gbps_per_kw;
        check.expect(rel_diff(product, 1000.0) <= 1e-9,
                     "reciprocal off by " + std::to_string(rel_diff(product, 1000.0)));

        const double k = log_uniform(rng, 0.011, 99.0);
        SystemConfiguration scaled = config;
        for (auto& component : scaled.components) {
            component.unit_draw *= k;
        }
        scaled.rated_capacity *= k;
        const EcrRating scaled_rating = compute_ecr(scaled, device);
        check.expect(
            rel_diff(scaled_rating.ecr_watts_per_gbps, rating.ecr_watts_per_gbps) <= 1e-12,
            "scale variance " +
                std::to_string(rel_diff(scaled_rating.ecr_watts_per_gbps,
                                        rating.ecr_watts_per_gbps)));
    }
}

// ---------------------------------------------------------------------------
// 4. Trend consistency against an independent regression oracle
// ---------------------------------------------------------------------------

// Independent least-squares slope: raw-moment formulation in long double,
// deliberately different from the centered two-pass fit in the library.
long double oracle_slope(const std::vector<TrendPoint>& points) {
    long double sx = 0.0L;
    long double sy = 0.0L;
    long double sxx = 0.0L;
    long double sxy = 0.0L;
    const long double n = static_cast<long double>(points.size());
    for (const auto& p : points) {
        const long double x = p.year;
        const long double y = std::log(static_cast<long double>(p.eer));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void criterion_trend(Checker& check) {
    const auto points = table1_trend_points();
    const TrendModel model = fit_generation_trend(points);

    const double oracle = static_cast<double>(oracle_slope(points));
    check.expect(rel_diff(model.slope, oracle) <= 1e-9,
                 "slope " + std::to_string(model.slope) + " vs oracle " +
                     std::to_string(oracle));

    const double projected = project_eer(model, 2010.0);
    check.expect(projected > 100.0, "2010 projection " + std::to_string(projected));

    const double doubling = doubling_time(model);
    check.expect(doubling >= 2.5 && doubling <= 4.5,
                 "doubling time " + std::to_string(doubling));
}

// ---------------------------------------------------------------------------
// 5. Exact-fit recovery of synthetic exponential curves
// ---------------------------------------------------------------------------
void criterion_exact_fit(Checker& check) {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> n_points(3, 9);
    std::uniform_int_distribution<int> start_year(1975, 2040);
    for (int round = 0; round < 50; ++round) {
        const double base = log_uniform(rng, 0.5, 1000.0);
        const double ratio = log_uniform(rng, 1.05, 2.5);
        const int y0 = start_year(rng);
        const int n = n_points(rng);
        std::vector<TrendPoint> points;
        for (int i = 0; i < n; ++i) {
            points.push_back({y0 + i, base * std::pow(ratio, i)});
        }
        const TrendModel model = fit_generation_trend(points);
        check.expect(model.residual_rms < 1e-9,
                     "residual_rms " + std::to_string(model.residual_rms));
        const double expected_doubling = std::log(2.0) / std::log(ratio);
        check.expect(rel_diff(doubling_time(model), expected_doubling) <= 1e-9,
                     "doubling error " +
                         std::to_string(rel_diff(doubling_time(model), expected_doubling)));
    }
}

// ---------------------------------------------------------------------------
// 6. Planner equivalence with a brute-force oracle
// ---------------------------------------------------------------------------

// Reference optimum by straight recursion, independent of the library's
// odometer enumeration.
void oracle_search(const std::vector<std::pair<double, double>>& capacity_draw,
                   std::vector<int>& counts, std::size_t index, double demand, int max_count,
                   double& best) {
    if (index == capacity_draw.size()) {
        double capacity = 0.0;
        double draw = 0.0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            capacity += counts[i] * capacity_draw[i].first;
            draw += counts[i] * capacity_draw[i].second;
        }
        if (capacity >= demand) {
            best = std::min(best, draw);
        }
        return;
    }
    for (int c = 0; c <= max_count; ++c) {
        counts[index] = c;
        oracle_search(capacity_draw, counts, index + 1, demand, max_count, best);
    }
    counts[index] = 0;
}

void criterion_planner(Checker& check) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> n_configs(1, 4);
    const auto core = ApplicationClass::from_token("core-routing");

    for (int round = 0; round < 200; ++round) {
        const int n = n_configs(rng);
        std::vector<std::pair<double, double>> capacity_draw;
        std::vector<DeviceModel> devices;
        std::vector<SystemConfiguration> configs;
        double reachable = 0.0;
        for (int i = 0; i < n; ++i) {
            const double capacity = log_uniform(rng, 1.0, 300.0);
            const double draw = log_uniform(rng, 10.0, 4000.0);
            capacity_draw.emplace_back(capacity, draw);
            reachable += capacity * 5;
            const std::string name = "cfg" + std::to_string(i);
            devices.push_back({name, "V", core, ForwardingTechnology::CustomAsic, {}, {}, {}});
            configs.push_back(
                {name,
                 "default",
                 {{"chassis", ComponentKind(ComponentKindVariant::ChassisCommon), draw, 1}},
                 capacity,
                 CapacityConvention::FullDuplex});
        }
        const Catalog catalog = make_catalog(std::move(devices), std::move(configs));
        const double demand = std::uniform_real_distribution<double>(0.0, reachable)(rng);
        FleetDemand fleet_demand;
        fleet_demand.entries[core] = demand;

        double oracle = std::numeric_limits<double>::infinity();
        std::vector<int> counts(capacity_draw.size(), 0);
        oracle_search(capacity_draw, counts, 0, demand, 5, oracle);
        check.expect(oracle < std::numeric_limits<double>::infinity(),
                     "oracle found no feasible selection");

        const FleetSelection exact = select_fleet(fleet_demand, catalog, FleetMethod::Exact, 5);
        check.expect(rel_diff(exact.total_draw, oracle) <= 1e-12,
                     "exact " + std::to_string(exact.total_draw) + " vs oracle " +
                         std::to_string(oracle));

        const FleetSelection greedy = select_fleet(fleet_demand, catalog, FleetMethod::Greedy, 5);
        check.expect(greedy.total_draw >= exact.total_draw - 1e-9,
                     "greedy " + std::to_string(greedy.total_draw) + " beat exact " +
                         std::to_string(exact.total_draw));
        if (demand > 0.0) {
            check.expect(exact.total_capacity.at(core) >= demand, "exact under capacity");
            check.expect(greedy.total_capacity.at(core) >= demand, "greedy under capacity");
        }
    }

    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    check.expect(elapsed.count() < 10.0, "took " + std::to_string(elapsed.count()) + " s");
}

// ---------------------------------------------------------------------------
// 7. Break-even hand oracle
// ---------------------------------------------------------------------------
void criterion_breakeven(Checker& check) {
    SystemConfiguration legacy{
        "legacy",
        "s",
        {{"chassis", ComponentKind(ComponentKindVariant::ChassisCommon), 4000.0, 1}},
        100.0,
        CapacityConvention::FullDuplex};
    SystemConfiguration replacement{
        "replacement",
        "s",
        {{"chassis", ComponentKind(ComponentKindVariant::ChassisCommon), 1000.0, 1}},
        100.0,
        CapacityConvention::FullDuplex};
    DeviceModel device{"legacy", "V", ApplicationClass::from_token("core-routing"),
                       ForwardingTechnology::CustomAsic, {}, {}, {}};

    UpgradeScenario scenario;
    scenario.legacy = compute_ecr(legacy, device);
    device.name = "replacement";
    scenario.replacement = compute_ecr(replacement, device);
    scenario.demand = 100.0;
    scenario.energy_price = 0.10;
    scenario.replacement_capex = 10000.0;
    scenario.horizon = 5;

    const BreakEvenResult result = upgrade_breakeven(scenario);
    check.expect(result.annual_energy_saving == 26280.0,
                 "energy " + std::to_string(result.annual_energy_saving));
    check.expect(result.annual_cost_saving == 2628.0,
                 "cost " + std::to_string(result.annual_cost_saving));
    check.expect(result.breakeven_years.has_value(), "no break-even");
    if (result.breakeven_years) {
        check.expect(rel_diff(*result.breakeven_years, 10000.0 / 2628.0) <= 1e-6,
                     "break-even " + std::to_string(*result.breakeven_years));
    }
    check.expect(result.yearly_cumulative.size() == 5, "horizon length");
    check.expect(result.yearly_cumulative.back().second == 3140.0,
                 "year-5 cumulative " + std::to_string(result.yearly_cumulative.back().second));
}

// ---------------------------------------------------------------------------
// 8. Round-trip and determinism
// ---------------------------------------------------------------------------
void criterion_determinism(Checker& check) {
    const std::string saved = save_catalog(builtin_fixtures());
    const std::string resaved = save_catalog(load_catalog(saved));
    check.expect(saved == resaved, "catalog save/load/save changed bytes");

    check.expect(render_table(cmd_table1(false)) == render_table(cmd_table1(false)),
                 "table1 table output varied");
    check.expect(render_json(cmd_table1(true)) == render_json(cmd_table1(true)),
                 "table1 json output varied");

    std::vector<ChartPoint> series;
    for (const auto& p : table1_trend_points()) {
        series.push_back({static_cast<double>(p.year), p.eer});
    }
    ChartOptions options;
    options.title = "EER";
    options.x_label = "year";
    options.y_label = "Gbps/kW";
    const TrendModel model = fit_generation_trend(table1_trend_points());
    for (const auto& s : sample_projection(model, 1998.0, 2007.0, 64)) {
        options.curve.push_back({s.x, s.y});
    }
    check.expect(emit_chart(series, options) == emit_chart(series, options),
                 "chart output varied");
}

// ---------------------------------------------------------------------------
// 9. Band classification
// ---------------------------------------------------------------------------
void criterion_bands(Checker& check) {
    const Catalog& fixtures = builtin_fixtures();
    const EcrRating t1600 = compute_ecr(*fixtures.configurations_of("T1600").front(),
                                        *fixtures.find_device("T1600"));
    check.expect(classify_rating(t1600, ForwardingTechnology::CustomAsic) == BandFit::WithinBand,
                 "T1600 not within the custom-ASIC band");

    check.expect(classify_watts_per_10g(600.0, ForwardingTechnology::GeneralPurposeCpu) ==
                     BandFit::WithinBand,
                 "600 W/10G not within the CPU band");
    check.expect(classify_watts_per_10g(600.0, ForwardingTechnology::NetworkProcessor) ==
                     BandFit::WorseThanBand,
                 "600 W/10G not worse than the NPU band");
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Checker&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden reproduction of the generation table", criterion_golden_table},
        {2, "M10 to M10i improvement", criterion_improvement},
        {3, "reciprocal identity and scale invariance", criterion_reciprocal},
        {4, "trend consistency vs independent regression", criterion_trend},
        {5, "exact-fit recovery of exponential curves", criterion_exact_fit},
        {6, "planner equivalence with brute force", criterion_planner},
        {7, "break-even hand oracle", criterion_breakeven},
        {8, "round-trip and output determinism", criterion_determinism},
        {9, "technology band classification", criterion_bands},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Checker check;
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail = std::string("exception: ") + e.what();
        }
        if (check.ok) {
            std::printf("PASS  %d  %s\n", criterion.id, criterion.name);
        } else {
            std::printf("FAIL  %d  %s: %s\n", criterion.id, criterion.name,
                        check.detail.c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
