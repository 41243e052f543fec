#include "gores/planner.hpp"

#include <algorithm>
#include <cmath>

#include "csv_util.hpp"

namespace gores {

// ---------------------------------------------------------------------------
// Upgrade break-even
// ---------------------------------------------------------------------------

BreakEvenResult upgrade_breakeven(const UpgradeScenario& scenario) {
    if (!(scenario.demand > 0.0)) {
        throw ValidationError("demand must be > 0");
    }
    if (scenario.energy_price < 0.0) {
        throw ValidationError("energy price must be >= 0");
    }
    if (scenario.replacement_capex < 0.0) {
        throw ValidationError("replacement capex must be >= 0");
    }
    if (scenario.horizon < 1) {
        throw ValidationError("horizon must be >= 1 year");
    }
    if (scenario.demand > scenario.legacy.full_duplex_capacity ||
        scenario.demand > scenario.replacement.full_duplex_capacity) {
        throw ValidationError("demand exceeds a system's full-duplex capacity");
    }

    BreakEvenResult result;
    result.legacy_draw = scenario.legacy.total_draw;
    result.replacement_draw = scenario.replacement.total_draw;

    // Nameplate draws, every hour of the year; a replacement that draws more
    // saves nothing rather than going negative.
    const double saved_watts = result.legacy_draw - result.replacement_draw;
    result.annual_energy_saving =
        saved_watts > 0.0 ? saved_watts * kHoursPerYear / 1000.0 : 0.0;
    result.annual_cost_saving = result.annual_energy_saving * scenario.energy_price;

    if (result.annual_cost_saving > 0.0) {
        result.breakeven_years = scenario.replacement_capex / result.annual_cost_saving;
    }
    result.yearly_cumulative.reserve(static_cast<std::size_t>(scenario.horizon));
    for (int year = 1; year <= scenario.horizon; ++year) {
        const double net = static_cast<double>(year) * result.annual_cost_saving -
                           scenario.replacement_capex;
        result.yearly_cumulative.emplace_back(year, net);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Fleet selection
// ---------------------------------------------------------------------------

std::string_view fleet_method_token(FleetMethod m) {
    switch (m) {
    case FleetMethod::Exact:
        return "exact";
    case FleetMethod::Greedy:
        return "greedy";
    case FleetMethod::Auto:
        return "auto";
    }
    return "auto";
}

std::optional<FleetMethod> fleet_method_from_token(std::string_view token) {
    const std::string t = detail::trim(token);
    if (t == "exact") {
        return FleetMethod::Exact;
    }
    if (t == "greedy") {
        return FleetMethod::Greedy;
    }
    if (t == "auto") {
        return FleetMethod::Auto;
    }
    return std::nullopt;
}

FleetDemand parse_demand_csv(std::string_view content) {
    const auto rows = detail::parse_csv(content);
    if (rows.empty()) {
        throw ParseError("demand CSV is empty; expected header 'application_class,demand_gbps'");
    }
    const auto& header = rows.front();
    if (header.fields.size() != 2 || detail::trim(header.fields[0]) != "application_class" ||
        detail::trim(header.fields[1]) != "demand_gbps") {
        throw ParseError("expected header 'application_class,demand_gbps'", header.line);
    }
    FleetDemand demand;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != 2) {
            throw ParseError("expected 2 columns, got " + std::to_string(row.fields.size()),
                             row.line);
        }
        const std::string token = detail::trim(row.fields[0]);
        if (token.empty()) {
            throw ParseError("empty application_class", row.line);
        }
        const double gbps = detail::parse_double_field(row.fields[1], "demand_gbps", row.line);
        if (gbps < 0.0) {
            throw ValidationError("demand_gbps must be >= 0", row.line);
        }
        demand.entries[ApplicationClass::from_token(token)] += gbps;
    }
    return demand;
}

namespace {

struct EligibleConfig {
    const SystemConfiguration* config;
    double draw; // Watts per unit
    double capacity; // full-duplex Gbps per unit
};

// Candidate selections tie-break on (total draw, total units, then the
// lexicographically smallest expanded (device, config) pick sequence), so a
// draw tie between {A x2} and {A x1, B x1} resolves to the former.
struct ClassSolution {
    std::vector<int> counts;
    double draw = 0.0;
    int units = 0;
};

std::vector<std::pair<std::string_view, std::string_view>>
expanded_sequence(const std::vector<EligibleConfig>& eligible, const std::vector<int>& counts) {
    std::vector<std::pair<std::string_view, std::string_view>> seq;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        for (int k = 0; k < counts[i]; ++k) {
            seq.emplace_back(eligible[i].config->device, eligible[i].config->config_name);
        }
    }
    std::sort(seq.begin(), seq.end());
    return seq;
}

bool better_solution(const std::vector<EligibleConfig>& eligible, const ClassSolution& candidate,
                     const ClassSolution& incumbent) {
    if (candidate.draw != incumbent.draw) {
        return candidate.draw < incumbent.draw;
    }
    if (candidate.units != incumbent.units) {
        return candidate.units < incumbent.units;
    }
    return expanded_sequence(eligible, candidate.counts) <
           expanded_sequence(eligible, incumbent.counts);
}

std::optional<ClassSolution> solve_exact(const std::vector<EligibleConfig>& eligible,
                                         double demand, int max_count) {
    const std::size_t n = eligible.size();
    std::vector<int> counts(n, 0);
    std::optional<ClassSolution> best;

    for (;;) {
        double capacity = 0.0;
        double draw = 0.0;
        int units = 0;
        for (std::size_t i = 0; i < n; ++i) {
            capacity += static_cast<double>(counts[i]) * eligible[i].capacity;
            draw += static_cast<double>(counts[i]) * eligible[i].draw;
            units += counts[i];
        }
        if (capacity >= demand) {
            ClassSolution candidate{counts, draw, units};
            if (!best || better_solution(eligible, candidate, *best)) {
                best = std::move(candidate);
            }
        }

        // Odometer step over counts in [0, max_count]^n.
        std::size_t pos = 0;
        while (pos < n && counts[pos] == max_count) {
            counts[pos] = 0;
            ++pos;
        }
        if (pos == n) {
            break;
        }
        ++counts[pos];
    }
    return best;
}

std::optional<ClassSolution> solve_greedy(const std::vector<EligibleConfig>& eligible,
                                          double demand, int max_count) {
    const std::size_t n = eligible.size();
    ClassSolution solution;
    solution.counts.assign(n, 0);
    double capacity = 0.0;

    while (capacity < demand) {
        std::size_t best = n;
        double best_ratio = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (solution.counts[i] >= max_count) {
                continue;
            }
            const double ratio = eligible[i].capacity / eligible[i].draw;
            if (ratio > best_ratio) {
                best_ratio = ratio;
                best = i;
            }
        }
        if (best == n) {
            return std::nullopt; // every configuration is at its count cap
        }
        ++solution.counts[best];
        solution.draw += eligible[best].draw;
        ++solution.units;
        capacity += eligible[best].capacity;
    }
    return solution;
}

// (max_count + 1)^n with saturation, for the Auto method switch.
double search_space(std::size_t n, int max_count) {
    double space = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        space *= static_cast<double>(max_count + 1);
        if (space > 1e18) {
            return space;
        }
    }
    return space;
}

} // namespace

FleetSelection select_fleet(const FleetDemand& demand, const Catalog& catalog, FleetMethod method,
                            int max_count_per_config) {
    if (max_count_per_config < 1) {
        throw ValidationError("max_count_per_config must be >= 1");
    }
    for (const auto& [app_class, gbps] : demand.entries) {
        if (gbps < 0.0) {
            throw ValidationError("demand for class '" + app_class.token() + "' must be >= 0");
        }
    }

    FleetSelection selection;
    bool all_exact = true;

    for (const auto& [app_class, gbps] : demand.entries) {
        if (!(gbps > 0.0)) {
            continue;
        }

        std::vector<EligibleConfig> eligible;
        for (const auto& config : catalog.configurations) {
            const DeviceModel* device = catalog.find_device(config.device);
            if (device == nullptr || device->application_class != app_class) {
                continue;
            }
            eligible.push_back({&config, config.total_draw(), config.full_duplex_capacity()});
        }
        std::sort(eligible.begin(), eligible.end(),
                  [](const EligibleConfig& a, const EligibleConfig& b) {
                      return std::tie(a.config->device, a.config->config_name) <
                             std::tie(b.config->device, b.config->config_name);
                  });
        if (eligible.empty()) {
            throw InfeasibleError("no configurations available for demanded class '" +
                                  app_class.token() + "'");
        }

        FleetMethod resolved = method;
        if (method == FleetMethod::Auto) {
            resolved = search_space(eligible.size(), max_count_per_config) <= 1e6
                           ? FleetMethod::Exact
                           : FleetMethod::Greedy;
        }

        std::optional<ClassSolution> solution =
            resolved == FleetMethod::Exact
                ? solve_exact(eligible, gbps, max_count_per_config)
                : solve_greedy(eligible, gbps, max_count_per_config);
        if (!solution) {
            throw InfeasibleError("demand of " + std::to_string(gbps) + " Gbps for class '" +
                                  app_class.token() + "' exceeds the capacity reachable with " +
                                  std::to_string(max_count_per_config) +
                                  " units per configuration");
        }
        if (resolved != FleetMethod::Exact) {
            all_exact = false;
        }

        double class_capacity = 0.0;
        for (std::size_t i = 0; i < eligible.size(); ++i) {
            const int count = solution->counts[i];
            if (count == 0) {
                continue;
            }
            selection.picks.push_back(
                {eligible[i].config->device, eligible[i].config->config_name, count});
            class_capacity += static_cast<double>(count) * eligible[i].capacity;
        }
        selection.total_draw += solution->draw;
        selection.total_capacity[app_class] = class_capacity;
    }

    std::sort(selection.picks.begin(), selection.picks.end(),
              [](const FleetPick& a, const FleetPick& b) {
                  return std::tie(a.device, a.config_name) < std::tie(b.device, b.config_name);
              });
    selection.method = all_exact ? FleetMethod::Exact : FleetMethod::Greedy;
    return selection;
}

std::vector<EcrRating> rank_configurations(const Catalog& catalog,
                                           const ApplicationClass& app_class) {
    std::vector<EcrRating> ratings;
    for (const auto& config : catalog.configurations) {
        const DeviceModel* device = catalog.find_device(config.device);
        if (device == nullptr || device->application_class != app_class) {
            continue;
        }
        ratings.push_back(compute_ecr(config, *device));
    }
    std::sort(ratings.begin(), ratings.end(), [](const EcrRating& a, const EcrRating& b) {
        return std::tie(a.ecr_watts_per_gbps, a.device, a.config_name) <
               std::tie(b.ecr_watts_per_gbps, b.device, b.config_name);
    });
    return ratings;
}

} // namespace gores
