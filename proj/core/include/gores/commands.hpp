#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gores/catalog.hpp"
#include "gores/planner.hpp"
#include "gores/report.hpp"
#include "gores/trend.hpp"

namespace gores {

// Report builders behind the CLI subcommands. Each is a pure function from
// resolved inputs to a ReportDocument; flag parsing and file I/O live in
// cli.cpp. Kept separate so tests can drive the exact rendering surface.

// One rated row per matching configuration (all of a device's
// configurations, or the named one). Throws NotFoundError naming the
// missing device or configuration.
ReportDocument cmd_rate(const Catalog& catalog, const std::string& device,
                        const std::optional<std::string>& config_name = std::nullopt);

// The bundled four-generation reference table, metrics as rows and devices
// as columns. Gores are displayed as integers; exact_eer switches the EER
// row to the unrounded values at two decimals.
ReportDocument cmd_table1(bool exact_eer = false);

// Efficiency ranking of one application class, best first.
ReportDocument cmd_compare(const Catalog& catalog, const ApplicationClass& app_class);

// Draw comparison of two equal-capacity systems, with the improvement as a
// display percentage and as a full-precision fraction.
ReportDocument cmd_improvement(const Catalog& catalog, const std::string& old_device,
                               const std::string& new_device);

struct TrendReportOptions {
    std::vector<double> projection_years;
    // Footnote reference to the bundled table's next-generation entry; set
    // when the points came from the bundled fixtures.
    bool fixtures_source = false;
};

ReportDocument cmd_trend(const TrendModel& model, const TrendReportOptions& options = {});

ReportDocument cmd_plan_upgrade(const BreakEvenResult& result);

ReportDocument cmd_plan_fleet(const FleetSelection& selection, const FleetDemand& demand,
                              const Catalog& catalog);

// Ingestion summary: one row per device/configuration pair.
ReportDocument cmd_ingest_summary(const std::vector<IngestedSystem>& systems);

} // namespace gores
