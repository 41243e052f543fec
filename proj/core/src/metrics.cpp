#include "gores/metrics.hpp"

#include <cmath>

namespace gores {

std::string_view band_fit_label(BandFit fit) {
    switch (fit) {
    case BandFit::WithinBand:
        return "within band";
    case BandFit::BetterThanBand:
        return "better than band";
    case BandFit::WorseThanBand:
        return "worse than band";
    }
    return "within band";
}

EcrRating compute_ecr(const SystemConfiguration& config, const DeviceModel& device) {
    if (config.components.empty()) {
        throw InvalidConfiguration("configuration (" + config.device + ", " + config.config_name +
                                   ") has no components");
    }
    const double draw = config.total_draw();
    const double capacity = config.full_duplex_capacity();
    if (!(capacity > 0.0)) {
        throw InvalidConfiguration("configuration (" + config.device + ", " + config.config_name +
                                   ") has non-positive full-duplex capacity");
    }
    if (!(draw > 0.0)) {
        throw InvalidConfiguration("configuration (" + config.device + ", " + config.config_name +
                                   ") has non-positive total draw");
    }

    EcrRating rating;
    rating.total_draw = draw;
    rating.full_duplex_capacity = capacity;
    rating.ecr_watts_per_gbps = draw / capacity;
    rating.ecr_watts_per_10g = 10.0 * rating.ecr_watts_per_gbps;
    rating.eer_gbps_per_kw = eer_from_ecr(rating.ecr_watts_per_gbps);
    rating.gores_display = std::llround(rating.eer_gbps_per_kw);
    rating.device = config.device;
    rating.config_name = config.config_name;
    rating.application_class = device.application_class;
    return rating;
}

double eer_from_ecr(double ecr_watts_per_gbps) {
    if (!(ecr_watts_per_gbps > 0.0)) {
        throw DomainError("E_CR must be > 0 to invert (got " +
                          std::to_string(ecr_watts_per_gbps) + ")");
    }
    // Watts -> kW accounts for the factor 1000.
    return 1000.0 / ecr_watts_per_gbps;
}

TechnologyBand technology_band(ForwardingTechnology tech) {
    switch (tech) {
    case ForwardingTechnology::GeneralPurposeCpu:
        return {tech, 400.0, 800.0, true};
    case ForwardingTechnology::NetworkProcessor:
        return {tech, 200.0, 400.0, true};
    case ForwardingTechnology::ConfigurableCpuArray:
        return {tech, 150.0, 200.0, true};
    case ForwardingTechnology::CustomAsic:
        // No published lower bound for custom silicon; the band is the open
        // complement below the configurable-array range.
        return {tech, 0.0, 150.0, false};
    }
    return {tech, 0.0, 150.0, false};
}

BandFit classify_watts_per_10g(double watts_per_10g, ForwardingTechnology tech) {
    const TechnologyBand band = technology_band(tech);
    if (watts_per_10g < band.low) {
        return BandFit::BetterThanBand;
    }
    const bool above = band.upper_inclusive ? watts_per_10g > band.high
                                            : watts_per_10g >= band.high;
    return above ? BandFit::WorseThanBand : BandFit::WithinBand;
}

BandFit classify_rating(const EcrRating& rating, ForwardingTechnology tech) {
    return classify_watts_per_10g(rating.ecr_watts_per_10g, tech);
}

double improvement_percent(const EcrRating& old_rating, const EcrRating& new_rating) {
    const double a = old_rating.full_duplex_capacity;
    const double b = new_rating.full_duplex_capacity;
    const double scale = std::max(std::abs(a), std::abs(b));
    if (std::abs(a - b) > 1e-9 * scale) {
        throw CapacityMismatch("cannot compare draw across capacities (" + old_rating.device +
                               ": " + std::to_string(a) + " Gbps vs " + new_rating.device + ": " +
                               std::to_string(b) + " Gbps)");
    }
    return (old_rating.total_draw - new_rating.total_draw) / old_rating.total_draw;
}

} // namespace gores
