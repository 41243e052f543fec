#pragma once

#include <string>

#include "gores/catalog.hpp"

namespace gores {

// Computed energy rating of one system configuration.
//
// ecr_watts_per_gbps is total nameplate draw divided by full-duplex
// capacity; eer_gbps_per_kw is its reciprocal scaled to kW (the "Gores"
// value). The two satisfy ecr * eer = 1000 by construction.
struct EcrRating {
    double ecr_watts_per_gbps = 0.0;
    double ecr_watts_per_10g = 0.0; // 10 * ecr_watts_per_gbps
    double eer_gbps_per_kw = 0.0;
    long long gores_display = 0; // eer rounded half away from zero
    double total_draw = 0.0; // Watts
    double full_duplex_capacity = 0.0; // Gbps
    std::string device;
    std::string config_name;
    ApplicationClass application_class;

    bool operator==(const EcrRating&) const = default;
};

// Characteristic consumption range of a forwarding-silicon class, in Watts
// per 10 Gbps full-duplex. Fixed constants, not user data.
struct TechnologyBand {
    ForwardingTechnology technology;
    double low = 0.0;
    double high = 0.0;
    bool upper_inclusive = true;
};

enum class BandFit {
    WithinBand,
    BetterThanBand, // below the band's lower bound
    WorseThanBand, // above its upper bound
};

std::string_view band_fit_label(BandFit fit);

// Rates a configuration: E_CR = sum of component draws / full-duplex
// capacity. Pure; throws InvalidConfiguration on empty components or
// non-positive capacity or draw.
EcrRating compute_ecr(const SystemConfiguration& config, const DeviceModel& device);

// 1000 / ecr — the Gbps-per-kW value for a Watts-per-Gbps rating.
// Throws DomainError when ecr <= 0.
double eer_from_ecr(double ecr_watts_per_gbps);

// Fixed bands: general-purpose CPU [400, 800], NPU [200, 400], configurable
// CPU array [150, 200], custom ASIC [0, 150) W/10G.
TechnologyBand technology_band(ForwardingTechnology tech);

// Compares a W/10G value against a technology's band. Boundaries are
// inclusive on both ends except the custom-ASIC open upper bound, so every
// positive value lands in exactly one outcome.
BandFit classify_watts_per_10g(double watts_per_10g, ForwardingTechnology tech);
BandFit classify_rating(const EcrRating& rating, ForwardingTechnology tech);

// Fractional draw reduction (old - new) / old between two ratings of the
// same capacity; negative for a regression. Throws CapacityMismatch when the
// full-duplex capacities differ by more than 1e-9 relative, since draw
// comparisons only mean anything at equal load.
double improvement_percent(const EcrRating& old_rating, const EcrRating& new_rating);

} // namespace gores
