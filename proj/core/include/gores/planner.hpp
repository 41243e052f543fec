#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gores/catalog.hpp"
#include "gores/metrics.hpp"

namespace gores {

inline constexpr double kHoursPerYear = 8760.0;

// Replace-legacy-equipment question: is the energy saving worth the capex?
// Both ratings must be able to carry the demanded load.
struct UpgradeScenario {
    EcrRating legacy;
    EcrRating replacement;
    double demand = 0.0; // full-duplex Gbps, > 0
    double energy_price = 0.0; // currency per kWh, >= 0
    double replacement_capex = 0.0; // currency, >= 0
    int horizon = 1; // years, >= 1
};

struct BreakEvenResult {
    double legacy_draw = 0.0; // Watts
    double replacement_draw = 0.0; // Watts
    double annual_energy_saving = 0.0; // kWh per year, clamped at 0
    double annual_cost_saving = 0.0; // currency per year
    std::optional<double> breakeven_years; // empty when nothing is saved
    std::vector<std::pair<int, double>> yearly_cumulative; // (year, net saving)
};

// Nameplate-draw break-even: saving = (legacy - replacement) draw at maximum
// load, running every hour of the year. Cumulative entry k is
// k * annual_cost_saving - replacement_capex for k = 1..horizon.
// Throws ValidationError on violated scenario invariants.
BreakEvenResult upgrade_breakeven(const UpgradeScenario& scenario);

// Required full-duplex throughput per application class.
struct FleetDemand {
    std::map<ApplicationClass, double> entries; // Gbps, >= 0
};

// CSV "application_class,demand_gbps" with header; repeated classes sum.
FleetDemand parse_demand_csv(std::string_view content);

enum class FleetMethod { Exact, Greedy, Auto };

std::string_view fleet_method_token(FleetMethod m);
std::optional<FleetMethod> fleet_method_from_token(std::string_view token);

struct FleetPick {
    std::string device;
    std::string config_name;
    int count = 0;

    bool operator==(const FleetPick&) const = default;
};

struct FleetSelection {
    std::vector<FleetPick> picks; // sorted by (device, config_name)
    double total_draw = 0.0; // Watts
    std::map<ApplicationClass, double> total_capacity; // full-duplex Gbps
    FleetMethod method = FleetMethod::Exact; // Exact only if every class was
                                             // solved exactly
};

// Minimum-nameplate-draw selection covering the demand, each application
// class solved independently (ratings are not comparable across classes).
//
// Exact enumerates counts 0..max_count_per_config per eligible
// configuration; ties break on fewer total units, then the lexicographically
// smallest pick sequence. Greedy repeatedly adds one unit of the best
// Gbps-per-Watt configuration still below the count cap, so Greedy never
// draws less than Exact. Auto picks Exact per class while the search space
// stays within 1e6 combinations.
//
// Throws InfeasibleError when a demanded class has no eligible
// configurations or the demand exceeds what max_count_per_config allows.
FleetSelection select_fleet(const FleetDemand& demand, const Catalog& catalog,
                            FleetMethod method = FleetMethod::Auto,
                            int max_count_per_config = 8);

// Ratings of every configuration in the class, best (lowest E_CR) first;
// ties alphabetical by device, then configuration name.
std::vector<EcrRating> rank_configurations(const Catalog& catalog,
                                           const ApplicationClass& app_class);

} // namespace gores
