#include "gores/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gores/catalog.hpp"
#include "gores/chart.hpp"
#include "gores/commands.hpp"
#include "gores/metrics.hpp"
#include "gores/planner.hpp"
#include "gores/report.hpp"
#include "gores/trend.hpp"

#ifdef _WIN32
#include <io.h>
#define GORES_ISATTY _isatty
#define GORES_FILENO _fileno
#else
#include <unistd.h>
#define GORES_ISATTY isatty
#define GORES_FILENO fileno
#endif

namespace gores {

namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading '" + path + "'");
    }
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

bool file_exists(const std::string& path) {
    std::ifstream in(path);
    return in.good();
}

// --catalog flag wins over GORES_CATALOG; with neither, the bundled
// fixtures serve as the catalog.
Catalog resolve_catalog(const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty()) {
        if (const char* env = std::getenv("GORES_CATALOG")) {
            path = env;
        }
    }
    if (path.empty()) {
        return builtin_fixtures();
    }
    return load_catalog(read_text_file(path));
}

OutputFormat parse_format_flag(const std::string& token, bool allow_svg) {
    const auto format = format_from_token(token);
    if (!format || (*format == OutputFormat::Svg && !allow_svg)) {
        throw ValidationError("unsupported format '" + token + "'");
    }
    return *format;
}

bool want_style(const std::ostream& out) {
    if (&out != &std::cout) {
        return false;
    }
    if (std::getenv("NO_COLOR") != nullptr) {
        return false;
    }
    return GORES_ISATTY(GORES_FILENO(stdout)) != 0;
}

struct CliState {
    std::ostream& out;
    std::ostream& err;

    void emit(const ReportDocument& doc, const std::string& format_token) {
        const OutputFormat format = parse_format_flag(format_token, false);
        out << render(doc, format, format == OutputFormat::Table && want_style(out));
    }
};

EcrRating synthetic_rating(double draw_watts, double capacity_gbps, const std::string& label) {
    if (!(draw_watts > 0.0)) {
        throw ValidationError(label + " draw must be > 0");
    }
    PowerComponent chassis{"chassis", ComponentKind(ComponentKindVariant::ChassisCommon),
                           draw_watts, 1};
    SystemConfiguration config{label, "scenario", {chassis}, capacity_gbps,
                               CapacityConvention::FullDuplex};
    DeviceModel device{label, "", ApplicationClass::other("scenario"),
                       ForwardingTechnology::CustomAsic, {}, {}, {}};
    return compute_ecr(config, device);
}

EcrRating catalog_rating(const Catalog& catalog, const std::string& reference) {
    // Accepts "device" or "device/config".
    std::string device = reference;
    std::optional<std::string> config_name;
    if (const auto slash = reference.find('/'); slash != std::string::npos) {
        device = reference.substr(0, slash);
        config_name = reference.substr(slash + 1);
    }
    const DeviceModel* model = catalog.find_device(device);
    if (model == nullptr) {
        throw NotFoundError("device '" + device + "' not found in catalog");
    }
    const SystemConfiguration* config = nullptr;
    if (config_name) {
        config = catalog.find_configuration(device, *config_name);
        if (config == nullptr) {
            throw NotFoundError("configuration '" + *config_name + "' of device '" + device +
                                "' not found in catalog");
        }
    } else {
        const auto configs = catalog.configurations_of(device);
        if (configs.empty()) {
            throw NotFoundError("device '" + device + "' has no configurations in catalog");
        }
        if (configs.size() > 1) {
            throw ValidationError("device '" + device +
                                  "' has several configurations; use device/config");
        }
        config = configs.front();
    }
    return compute_ecr(*config, *model);
}

// ---------------------------------------------------------------------------
// Subcommand wiring
// ---------------------------------------------------------------------------

struct IngestOpts {
    std::string datasheet;
    std::string out_path;
    std::string format = "table";
    bool merge = false;
};

void add_ingest(CLI::App& app, CliState& state) {
    auto opts = std::make_shared<IngestOpts>();
    CLI::App* cmd = app.add_subcommand("ingest", "Parse a datasheet CSV into catalog entries");
    cmd->add_option("datasheet", opts->datasheet, "Datasheet CSV file")->required();
    cmd->add_option("--out", opts->out_path, "Write the resulting catalog JSON here");
    cmd->add_flag("--merge", opts->merge, "Merge into an existing --out catalog");
    cmd->add_option("--format", opts->format, "table|json|csv");
    cmd->callback([opts, &state] {
        const auto systems = ingest_datasheet(read_text_file(opts->datasheet));
        if (!opts->out_path.empty()) {
            std::vector<DeviceModel> devices;
            std::vector<SystemConfiguration> configs;
            if (opts->merge && file_exists(opts->out_path)) {
                Catalog existing = load_catalog(read_text_file(opts->out_path));
                devices = std::move(existing.devices);
                configs = std::move(existing.configurations);
            }
            for (const auto& [device, config] : systems) {
                devices.push_back(device);
                configs.push_back(config);
            }
            const Catalog merged = make_catalog(std::move(devices), std::move(configs));
            write_text_file(opts->out_path, save_catalog(merged));
            state.err << "wrote " << merged.devices.size() << " devices, "
                      << merged.configurations.size() << " configurations to " << opts->out_path
                      << "\n";
        }
        state.emit(cmd_ingest_summary(systems), opts->format);
    });
}

struct RateOpts {
    std::string device;
    std::string config;
    std::string catalog_path;
    std::string format = "table";
};

void add_rate(CLI::App& app, CliState& state) {
    auto opts = std::make_shared<RateOpts>();
    CLI::App* cmd = app.add_subcommand("rate", "Rate one device's configurations");
    cmd->add_option("device", opts->device, "Device model name")->required();
    cmd->add_option("config", opts->config, "Configuration name (default: all)");
    cmd->add_option("--catalog", opts->catalog_path, "Catalog JSON file");
    cmd->add_option("--format", opts->format, "table|json|csv");
    cmd->callback([opts, &state] {
        const Catalog catalog = resolve_catalog(opts->catalog_path);
        const std::optional<std::string> config =
            opts->config.empty() ? std::nullopt : std::optional<std::string>(opts->config);
        state.emit(cmd_rate(catalog, opts->device, config), opts->format);
    });
}

struct CompareOpts {
    std::string class_token;
    std::string from_device;
    std::string to_device;
    std::string catalog_path;
    std::string format = "table";
};

void add_compare(CLI::App& app, CliState& state) {
    auto opts = std::make_shared<CompareOpts>();
    CLI::App* cmd =
        app.add_subcommand("compare", "Rank a class by efficiency, or compare two devices");
    cmd->add_option("--class", opts->class_token, "Application class to rank");
    cmd->add_option("--from", opts->from_device, "Baseline device for an improvement comparison");
    cmd->add_option("--to", opts->to_device, "Successor device for an improvement comparison");
    cmd->add_option("--catalog", opts->catalog_path, "Catalog JSON file");
    cmd->add_option("--format", opts->format, "table|json|csv");
    cmd->callback([opts, &state] {
        const Catalog catalog = resolve_catalog(opts->catalog_path);
        const bool improvement = !opts->from_device.empty() || !opts->to_device.empty();
        if (improvement) {
            if (opts->from_device.empty() || opts->to_device.empty()) {
                throw ValidationError("--from and --to must be given together");
            }
            state.emit(cmd_improvement(catalog, opts->from_device, opts->to_device),
                       opts->format);
            return;
        }
        if (opts->class_token.empty()) {
            throw ValidationError("compare needs --class, or --from with --to");
        }
        state.emit(cmd_compare(catalog, ApplicationClass::from_token(opts->class_token)),
                   opts->format);
    });
}

struct Table1Opts {
    bool exact = false;
    std::string format = "table";
};

void add_table1(CLI::App& app, CliState& state) {
    auto opts = std::make_shared<Table1Opts>();
    CLI::App* cmd = app.add_subcommand("table1", "Bundled router-generation efficiency table");
    cmd->add_flag("--exact", opts->exact, "Unrounded EER values (two decimals)");
    cmd->add_option("--format", opts->format, "table|json|csv");
    cmd->callback([opts, &state] { state.emit(cmd_table1(opts->exact), opts->format); });
}

struct TrendOpts {
    bool from_fixtures = false;
    bool from_catalog = false;
    std::string points_path;
    bool printed = false;
    std::string class_token;
    std::vector<double> projections;
    std::string catalog_path;
    std::string format = "table";
};

void add_trend(CLI::App& app, CliState& state) {
    auto opts = std::make_shared<TrendOpts>();
    CLI::App* cmd = app.add_subcommand("trend", "Fit and project the efficiency-over-time curve");
    cmd->add_flag("--from-fixtures", opts->from_fixtures,
                  "Fit the bundled four-generation series");
    cmd->add_flag("--from-catalog", opts->from_catalog,
                  "Fit catalog configurations that have an FRS year");
    cmd->add_option("--points", opts->points_path, "Trend CSV (year,eer_gbps_per_kw)");
    cmd->add_flag("--printed", opts->printed,
                  "With --from-fixtures: fit the rounded Gores integers");
    cmd->add_option("--class", opts->class_token, "With --from-catalog: restrict to one class");
    cmd->add_option("--project", opts->projections, "Project EER at this year (repeatable)");
    cmd->add_option("--catalog", opts->catalog_path, "Catalog JSON file");
    cmd->add_option("--format", opts->format, "table|json|csv|svg");
    cmd->callback([opts, &state] {
        const int sources = (opts->from_fixtures ? 1 : 0) + (opts->from_catalog ? 1 : 0) +
                            (opts->points_path.empty() ? 0 : 1);
        if (sources != 1) {
            throw ValidationError(
                "trend needs exactly one of --from-fixtures, --from-catalog, --points");
        }
        std::vector<TrendPoint> points;
        if (opts->from_fixtures) {
            points = table1_trend_points(opts->printed);
        } else if (opts->from_catalog) {
            const Catalog catalog = resolve_catalog(opts->catalog_path);
            std::optional<ApplicationClass> filter;
            if (!opts->class_token.empty()) {
                filter = ApplicationClass::from_token(opts->class_token);
            }
            points = collect_trend_points(catalog, filter);
        } else {
            points = parse_trend_csv(read_text_file(opts->points_path));
        }
        const TrendModel model = fit_generation_trend(points);

        const OutputFormat format = parse_format_flag(opts->format, true);
        if (format == OutputFormat::Svg) {
            std::vector<ChartPoint> series;
            series.reserve(points.size());
            double year_min = points.front().year;
            double year_max = points.front().year;
            for (const auto& p : points) {
                series.push_back({static_cast<double>(p.year), p.eer});
                year_min = std::min(year_min, static_cast<double>(p.year));
                year_max = std::max(year_max, static_cast<double>(p.year));
            }
            for (double year : opts->projections) {
                year_min = std::min(year_min, year);
                year_max = std::max(year_max, year);
            }
            ChartOptions chart;
            chart.title = "Energy efficiency by first-revenue-ship year";
            chart.x_label = "FRS year";
            chart.y_label = "EER (Gbps/kW)";
            if (series.size() >= 2) {
                chart.curve = [&] {
                    std::vector<ChartPoint> curve;
                    for (const auto& s : sample_projection(model, year_min, year_max)) {
                        curve.push_back({s.x, s.y});
                    }
                    return curve;
                }();
            }
            state.out << emit_chart(series, chart);
            return;
        }

        TrendReportOptions report;
        report.projection_years = opts->projections;
        report.fixtures_source = opts->from_fixtures;
        state.emit(cmd_trend(model, report), opts->format);
    });
}

struct UpgradeOpts {
    double legacy_draw = 0.0;
    double new_draw = 0.0;
    std::string legacy_ref;
    std::string new_ref;
    double price = 0.0;
    double capex = 0.0;
    int horizon = 5;
    double demand = 0.0;
    std::string catalog_path;
    std::string format = "table";
};

struct FleetOpts {
    std::string demand_path;
    std::string method = "auto";
    int max_count = 8;
    std::string catalog_path;
    std::string format = "table";
};

void add_plan(CLI::App& app, CliState& state) {
    CLI::App* plan = app.add_subcommand("plan", "Upgrade break-even and fleet selection");
    plan->require_subcommand(1);

    auto up = std::make_shared<UpgradeOpts>();
    CLI::App* upgrade = plan->add_subcommand("upgrade", "Energy-cost break-even of a replacement");
    upgrade->add_option("--legacy-draw", up->legacy_draw, "Legacy system draw in W");
    upgrade->add_option("--new-draw", up->new_draw, "Replacement system draw in W");
    upgrade->add_option("--legacy", up->legacy_ref, "Legacy device[/config] from the catalog");
    upgrade->add_option("--new", up->new_ref, "Replacement device[/config] from the catalog");
    upgrade->add_option("--price", up->price, "Energy price per kWh")->required();
    upgrade->add_option("--capex", up->capex, "Replacement capital expense");
    upgrade->add_option("--horizon", up->horizon, "Years in the cumulative series");
    upgrade->add_option("--demand", up->demand, "Carried load in full-duplex Gbps");
    upgrade->add_option("--catalog", up->catalog_path, "Catalog JSON file");
    upgrade->add_option("--format", up->format, "table|json|csv");
    upgrade->callback([up, &state] {
        const bool by_draw = up->legacy_draw > 0.0 || up->new_draw > 0.0;
        const bool by_ref = !up->legacy_ref.empty() || !up->new_ref.empty();
        if (by_draw == by_ref) {
            throw ValidationError(
                "give either --legacy-draw with --new-draw, or --legacy with --new");
        }
        UpgradeScenario scenario;
        if (by_draw) {
            // Raw draws: capacity does not enter the draw-based model, so a
            // unit capacity stands in for both systems.
            const double capacity = up->demand > 0.0 ? up->demand : 1.0;
            scenario.legacy = synthetic_rating(up->legacy_draw, capacity, "legacy");
            scenario.replacement = synthetic_rating(up->new_draw, capacity, "replacement");
            scenario.demand = capacity;
        } else {
            const Catalog catalog = resolve_catalog(up->catalog_path);
            scenario.legacy = catalog_rating(catalog, up->legacy_ref);
            scenario.replacement = catalog_rating(catalog, up->new_ref);
            scenario.demand = up->demand > 0.0
                                  ? up->demand
                                  : std::min(scenario.legacy.full_duplex_capacity,
                                             scenario.replacement.full_duplex_capacity);
        }
        scenario.energy_price = up->price;
        scenario.replacement_capex = up->capex;
        scenario.horizon = up->horizon;
        state.emit(cmd_plan_upgrade(upgrade_breakeven(scenario)), up->format);
    });

    auto fl = std::make_shared<FleetOpts>();
    CLI::App* fleet = plan->add_subcommand("fleet", "Minimum-draw selection covering a demand");
    fleet->add_option("--demand", fl->demand_path, "Demand CSV (application_class,demand_gbps)")
        ->required();
    fleet->add_option("--method", fl->method, "exact|greedy|auto");
    fleet->add_option("--max-count", fl->max_count, "Unit cap per configuration");
    fleet->add_option("--catalog", fl->catalog_path, "Catalog JSON file");
    fleet->add_option("--format", fl->format, "table|json|csv");
    fleet->callback([fl, &state] {
        const auto method = fleet_method_from_token(fl->method);
        if (!method) {
            throw ValidationError("unknown method '" + fl->method + "'");
        }
        const Catalog catalog = resolve_catalog(fl->catalog_path);
        const FleetDemand demand = parse_demand_csv(read_text_file(fl->demand_path));
        const FleetSelection selection = select_fleet(demand, catalog, *method, fl->max_count);
        state.emit(cmd_plan_fleet(selection, demand, catalog), fl->format);
    });
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Network-equipment energy efficiency toolkit", "gores"};
    app.require_subcommand(1);
    CliState state{out, err};

    add_ingest(app, state);
    add_rate(app, state);
    add_compare(app, state);
    add_table1(app, state);
    add_trend(app, state);
    add_plan(app, state);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return 0;
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err); // --help family, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const VersionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gores
