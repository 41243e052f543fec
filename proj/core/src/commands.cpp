#include "gores/commands.hpp"

#include <cmath>

#include "gores/metrics.hpp"

namespace gores {

namespace {

const SystemConfiguration& single_fixture_config(const Catalog& catalog,
                                                 const std::string& device) {
    const auto configs = catalog.configurations_of(device);
    return *configs.front();
}

std::vector<Cell> rating_row(const EcrRating& rating, ForwardingTechnology technology) {
    return {
        Cell::text(rating.device),
        Cell::text(rating.config_name),
        Cell::text(rating.application_class.token()),
        Cell::text(std::string(technology_token(technology))),
        Cell::number(rating.total_draw),
        Cell::number(rating.full_duplex_capacity),
        Cell::number(rating.ecr_watts_per_gbps, 3),
        Cell::number(rating.ecr_watts_per_10g, 3),
        Cell::number(rating.eer_gbps_per_kw, 3),
        Cell::integer(rating.gores_display),
        Cell::text(std::string(band_fit_label(classify_rating(rating, technology)))),
    };
}

std::vector<Column> rating_columns() {
    return {
        {"device", ""},       {"config", ""},
        {"class", ""},        {"technology", ""},
        {"draw", "W"},        {"capacity", "FD Gbps"},
        {"E_CR", "W/Gbps"},   {"E_CR", "W/10G"},
        {"E_ER", "Gbps/kW"},  {"gores", ""},
        {"band fit", ""},
    };
}

} // namespace

ReportDocument cmd_rate(const Catalog& catalog, const std::string& device,
                        const std::optional<std::string>& config_name) {
    const DeviceModel* model = catalog.find_device(device);
    if (model == nullptr) {
        throw NotFoundError("device '" + device + "' not found in catalog");
    }
    std::vector<const SystemConfiguration*> configs;
    if (config_name) {
        const SystemConfiguration* config = catalog.find_configuration(device, *config_name);
        if (config == nullptr) {
            throw NotFoundError("configuration '" + *config_name + "' of device '" + device +
                                "' not found in catalog");
        }
        configs.push_back(config);
    } else {
        configs = catalog.configurations_of(device);
        if (configs.empty()) {
            throw NotFoundError("device '" + device + "' has no configurations in catalog");
        }
    }

    ReportDocument doc;
    doc.title = "Energy rating";
    doc.columns = rating_columns();
    for (const SystemConfiguration* config : configs) {
        doc.add_row(rating_row(compute_ecr(*config, *model), model->technology));
    }
    doc.footnotes.push_back("draw is the nameplate maximum; capacity is full-duplex");
    return doc;
}

ReportDocument cmd_table1(bool exact_eer) {
    const Catalog& fixtures = builtin_fixtures();
    const auto& names = table1_device_names();

    ReportDocument doc;
    doc.title = "Energy efficiency across router generations";
    doc.columns.push_back({"metric", ""});
    for (const auto& name : names) {
        doc.columns.push_back({name, ""});
    }

    auto metric_row = [&](const std::string& label, auto getter) {
        std::vector<Cell> row;
        row.push_back(Cell::text(label));
        for (const auto& name : names) {
            row.push_back(getter(name));
        }
        doc.add_row(std::move(row));
    };

    metric_row("slot capacity (Gbps)", [&](const std::string& name) {
        const DeviceModel* device = fixtures.find_device(name);
        return device->slot_capacity ? Cell::number(*device->slot_capacity) : Cell::text("");
    });
    metric_row("system capacity (Gbps, aggregate)", [&](const std::string& name) {
        return Cell::number(single_fixture_config(fixtures, name).rated_capacity);
    });
    metric_row("technology (nm)", [&](const std::string& name) {
        const DeviceModel* device = fixtures.find_device(name);
        return device->process_node ? Cell::number(*device->process_node) : Cell::text("");
    });
    metric_row("max system draw (kW)", [&](const std::string& name) {
        return Cell::number(single_fixture_config(fixtures, name).total_draw() / 1000.0);
    });
    metric_row("EER (Gores)", [&](const std::string& name) {
        const DeviceModel* device = fixtures.find_device(name);
        const EcrRating rating = compute_ecr(single_fixture_config(fixtures, name), *device);
        return exact_eer ? Cell::number(rating.eer_gbps_per_kw, 2)
                         : Cell::integer(rating.gores_display);
    });
    metric_row("FRS (year)", [&](const std::string& name) {
        const DeviceModel* device = fixtures.find_device(name);
        return device->frs_year ? Cell::integer(*device->frs_year) : Cell::text("");
    });

    doc.footnotes.push_back("EER computed from nameplate draw over full-duplex capacity"
                            " (aggregate figures halved)");
    return doc;
}

ReportDocument cmd_compare(const Catalog& catalog, const ApplicationClass& app_class) {
    ReportDocument doc;
    doc.title = "Efficiency ranking: " + app_class.token();
    doc.columns = {
        {"rank", ""},        {"device", ""},      {"config", ""},
        {"E_CR", "W/Gbps"},  {"E_CR", "W/10G"},   {"E_ER", "Gbps/kW"},
        {"gores", ""},
    };
    const auto ranked = rank_configurations(catalog, app_class);
    long long rank = 1;
    for (const auto& rating : ranked) {
        doc.add_row({
            Cell::integer(rank++),
            Cell::text(rating.device),
            Cell::text(rating.config_name),
            Cell::number(rating.ecr_watts_per_gbps, 3),
            Cell::number(rating.ecr_watts_per_10g, 3),
            Cell::number(rating.eer_gbps_per_kw, 3),
            Cell::integer(rating.gores_display),
        });
    }
    return doc;
}

ReportDocument cmd_improvement(const Catalog& catalog, const std::string& old_device,
                               const std::string& new_device) {
    auto rating_of = [&](const std::string& name) {
        const DeviceModel* device = catalog.find_device(name);
        if (device == nullptr) {
            throw NotFoundError("device '" + name + "' not found in catalog");
        }
        const auto configs = catalog.configurations_of(name);
        if (configs.empty()) {
            throw NotFoundError("device '" + name + "' has no configurations in catalog");
        }
        return compute_ecr(*configs.front(), *device);
    };
    const EcrRating old_rating = rating_of(old_device);
    const EcrRating new_rating = rating_of(new_device);
    const double improvement = improvement_percent(old_rating, new_rating);

    ReportDocument doc;
    doc.title = "Power improvement: " + old_device + " -> " + new_device;
    doc.columns = {{"metric", ""}, {"value", ""}, {"unit", ""}};
    doc.add_row({Cell::text("legacy draw"), Cell::number(old_rating.total_draw), Cell::text("W")});
    doc.add_row(
        {Cell::text("replacement draw"), Cell::number(new_rating.total_draw), Cell::text("W")});
    doc.add_row({Cell::text("capacity"), Cell::number(old_rating.full_duplex_capacity),
                 Cell::text("FD Gbps")});
    doc.add_row({Cell::text("draw reduction"),
                 Cell::number(old_rating.total_draw - new_rating.total_draw, 1), Cell::text("W")});
    doc.add_row({Cell::text("improvement"), Cell::text(format_percent(improvement)),
                 Cell::text("of legacy draw")});
    doc.add_row({Cell::text("improvement fraction"), Cell::number(improvement), Cell::text("")});
    return doc;
}

ReportDocument cmd_trend(const TrendModel& model, const TrendReportOptions& options) {
    ReportDocument doc;
    doc.title = "Efficiency trend (log-linear fit)";
    doc.columns = {{"quantity", ""}, {"value", ""}, {"unit", ""}};
    doc.add_row({Cell::text("points"), Cell::integer(model.n_points), Cell::text("")});
    doc.add_row(
        {Cell::text("reference year"), Cell::number(model.reference_year), Cell::text("year")});
    doc.add_row({Cell::text("slope"), Cell::number(model.slope, 6), Cell::text("ln(Gbps/kW)/yr")});
    doc.add_row({Cell::text("growth factor"), Cell::number(std::exp(model.slope), 4),
                 Cell::text("per year")});
    if (model.slope > 0.0) {
        doc.add_row({Cell::text("doubling time"), Cell::number(doubling_time(model), 2),
                     Cell::text("yr")});
    } else {
        doc.add_row({Cell::text("doubling time"), Cell::text("n/a (non-increasing)"),
                     Cell::text("")});
    }
    doc.add_row({Cell::text("residual RMS"), Cell::number(model.residual_rms, 6),
                 Cell::text("ln units")});
    doc.add_row({Cell::text("intercept at reference"), Cell::number(model.intercept_log_eer, 6),
                 Cell::text("ln(Gbps/kW)")});
    for (double year : options.projection_years) {
        doc.add_row({Cell::text("projected EER @ " + format_number(year)),
                     Cell::number(project_eer(model, year), 1), Cell::text("Gbps/kW (Gores)")});
    }
    if (options.fixtures_source) {
        const auto cadence = cadence_constants();
        doc.footnotes.push_back(
            "bundled generation table anticipates > 100 Gores for platforms shipping 2010+");
        doc.footnotes.push_back("published cadence: new generation every " +
                                std::to_string(cadence.generation_years[0]) + "-" +
                                std::to_string(cadence.generation_years[1]) +
                                " years, architecture overhaul every " +
                                std::to_string(cadence.architecture_cycle_years) + " years");
    }
    return doc;
}

ReportDocument cmd_plan_upgrade(const BreakEvenResult& result) {
    ReportDocument doc;
    doc.title = "Upgrade break-even";
    doc.columns = {{"quantity", ""}, {"value", ""}, {"unit", ""}};
    doc.add_row({Cell::text("legacy draw"), Cell::number(result.legacy_draw), Cell::text("W")});
    doc.add_row({Cell::text("replacement draw"), Cell::number(result.replacement_draw),
                 Cell::text("W")});
    doc.add_row({Cell::text("annual energy saving"), Cell::number(result.annual_energy_saving),
                 Cell::text("kWh/yr")});
    doc.add_row({Cell::text("annual cost saving"), Cell::number(result.annual_cost_saving),
                 Cell::text("currency/yr")});
    if (result.breakeven_years) {
        doc.add_row({Cell::text("break-even"), Cell::number(*result.breakeven_years, 2),
                     Cell::text("yr")});
    } else {
        doc.add_row({Cell::text("break-even"), Cell::text("never"), Cell::text("")});
    }
    for (const auto& [year, net] : result.yearly_cumulative) {
        doc.add_row({Cell::text("cumulative net saving, year " + std::to_string(year)),
                     Cell::number(net, 2), Cell::text("currency")});
    }
    doc.footnotes.push_back("energy model: nameplate draw, 8760 hours per year, no discounting");
    return doc;
}

ReportDocument cmd_plan_fleet(const FleetSelection& selection, const FleetDemand& demand,
                              const Catalog& catalog) {
    ReportDocument doc;
    doc.title = "Fleet selection";
    doc.columns = {
        {"class", ""},     {"device", ""},       {"config", ""},      {"count", ""},
        {"unit draw", "W"}, {"draw", "W"},       {"capacity", "FD Gbps"},
    };
    for (const auto& pick : selection.picks) {
        const SystemConfiguration* config =
            catalog.find_configuration(pick.device, pick.config_name);
        const DeviceModel* device = catalog.find_device(pick.device);
        const double unit_draw = config->total_draw();
        const double unit_capacity = config->full_duplex_capacity();
        doc.add_row({
            Cell::text(device->application_class.token()),
            Cell::text(pick.device),
            Cell::text(pick.config_name),
            Cell::integer(pick.count),
            Cell::number(unit_draw),
            Cell::number(unit_draw * pick.count),
            Cell::number(unit_capacity * pick.count),
        });
    }
    doc.add_row({Cell::text("total"), Cell::text(""), Cell::text(""), Cell::text(""),
                 Cell::text(""), Cell::number(selection.total_draw), Cell::text("")});
    doc.footnotes.push_back("method: " + std::string(fleet_method_token(selection.method)));
    for (const auto& [app_class, capacity] : selection.total_capacity) {
        const auto it = demand.entries.find(app_class);
        const double demanded = it != demand.entries.end() ? it->second : 0.0;
        doc.footnotes.push_back(app_class.token() + ": capacity " + format_number(capacity) +
                                " Gbps covers demand " + format_number(demanded) + " Gbps");
    }
    return doc;
}

ReportDocument cmd_ingest_summary(const std::vector<IngestedSystem>& systems) {
    ReportDocument doc;
    doc.title = "Ingested systems";
    doc.columns = {
        {"device", ""},     {"config", ""},          {"class", ""},
        {"components", ""}, {"draw", "W"},           {"capacity", "Gbps"},
        {"convention", ""},
    };
    for (const auto& [device, config] : systems) {
        doc.add_row({
            Cell::text(device.name),
            Cell::text(config.config_name),
            Cell::text(device.application_class.token()),
            Cell::integer(static_cast<long long>(config.components.size())),
            Cell::number(config.total_draw()),
            Cell::number(config.rated_capacity),
            Cell::text(std::string(convention_token(config.capacity_convention))),
        });
    }
    return doc;
}

} // namespace gores
