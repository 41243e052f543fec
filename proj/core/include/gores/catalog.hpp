#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gores/errors.hpp"

namespace gores {

// ---------------------------------------------------------------------------
// Vocabulary types
// ---------------------------------------------------------------------------

enum class AppClassKind {
    CoreRouting,
    EthernetSwitching,
    IpMplsEdge,
    Firewall,
    DeepPacketInspection,
    Other,
};

// Deployment role of a device. Efficiency ratings are only comparable within
// one application class, so the planner partitions everything by this type.
// Known roles carry a fixed token; anything else is Other(name).
class ApplicationClass {
public:
    ApplicationClass() : kind_(AppClassKind::Other), name_("unspecified") {}
    explicit ApplicationClass(AppClassKind kind);

    // Known token -> fixed variant, anything else -> Other(token).
    // Throws ValidationError on an empty token.
    static ApplicationClass from_token(std::string_view token);
    static ApplicationClass other(std::string name);

    AppClassKind kind() const { return kind_; }
    // Canonical token ("core-routing", ...); the free-form name for Other.
    const std::string& token() const { return name_; }

    bool operator==(const ApplicationClass&) const = default;
    auto operator<=>(const ApplicationClass&) const = default;

private:
    AppClassKind kind_;
    std::string name_;
};

// Forwarding-silicon design point. Closed set: each variant maps to exactly
// one efficiency band (see metrics.hpp).
enum class ForwardingTechnology {
    GeneralPurposeCpu,
    NetworkProcessor,
    ConfigurableCpuArray,
    CustomAsic,
};

std::string_view technology_token(ForwardingTechnology tech);
std::optional<ForwardingTechnology> technology_from_token(std::string_view token);

enum class ComponentKindVariant {
    RoutingEngine,
    ForwardingEngine,
    FabricPlane,
    Linecard,
    ChassisCommon,
    Cooling,
    PowerSupplyOverhead,
    Other,
};

// Chassis subsystem a power figure belongs to. Chosen so redundancy is
// expressible (two routing engines = count 2).
class ComponentKind {
public:
    ComponentKind() : kind_(ComponentKindVariant::Other), name_("unspecified") {}
    explicit ComponentKind(ComponentKindVariant kind);

    static ComponentKind from_token(std::string_view token);
    static ComponentKind other(std::string name);

    ComponentKindVariant kind() const { return kind_; }
    const std::string& token() const { return name_; }

    bool operator==(const ComponentKind&) const = default;
    auto operator<=>(const ComponentKind&) const = default;

private:
    ComponentKindVariant kind_;
    std::string name_;
};

// How a rated capacity figure counts traffic. Full-duplex is the canonical
// basis for all metric math; aggregate (in+out summed) figures are halved.
enum class CapacityConvention {
    FullDuplex,
    AggregateBidirectional,
};

std::string_view convention_token(CapacityConvention c);
std::optional<CapacityConvention> convention_from_token(std::string_view token);

// ---------------------------------------------------------------------------
// Data model
// ---------------------------------------------------------------------------

// One rated power draw unit inside a chassis. unit_draw is the vendor's
// maximum-load rating in Watts; count covers identical installed units.
struct PowerComponent {
    std::string id;
    ComponentKind kind;
    double unit_draw = 0.0; // Watts, nameplate maximum
    int count = 1;

    bool operator==(const PowerComponent&) const = default;
};

struct DeviceModel {
    std::string name;
    std::string vendor;
    ApplicationClass application_class;
    ForwardingTechnology technology = ForwardingTechnology::CustomAsic;
    std::optional<double> process_node; // nanometers
    std::optional<double> slot_capacity; // Gbps
    std::optional<int> frs_year; // first revenue ship

    bool operator==(const DeviceModel&) const = default;
};

// A device plus its installed components and rated capacity. The component
// list is the set I and full_duplex_capacity() the T of the rating formula.
struct SystemConfiguration {
    std::string device; // DeviceModel::name reference
    std::string config_name;
    std::vector<PowerComponent> components;
    double rated_capacity = 0.0; // Gbps, under capacity_convention
    CapacityConvention capacity_convention = CapacityConvention::FullDuplex;

    double total_draw() const; // Watts, sum of unit_draw * count
    double full_duplex_capacity() const; // Gbps

    bool operator==(const SystemConfiguration&) const = default;
};

inline constexpr int kCatalogFormatVersion = 1;

struct Catalog {
    int version = kCatalogFormatVersion;
    std::vector<DeviceModel> devices;
    std::vector<SystemConfiguration> configurations;

    const DeviceModel* find_device(std::string_view name) const;
    const SystemConfiguration* find_configuration(std::string_view device,
                                                  std::string_view config_name) const;
    std::vector<const SystemConfiguration*> configurations_of(std::string_view device) const;

    bool operator==(const Catalog&) const = default;
};

// Builds a catalog in canonical order (devices by name, configurations by
// (device, config_name), components by id) and validates every invariant.
// Throws ValidationError on the first breach.
Catalog make_catalog(std::vector<DeviceModel> devices,
                     std::vector<SystemConfiguration> configurations,
                     int version = kCatalogFormatVersion);

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class IssueSeverity { Violation, Warning };

struct ValidationIssue {
    IssueSeverity severity;
    std::string message;

    bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool passed() const; // no hard violations (warnings allowed)
    std::vector<std::string> violations() const;
    std::vector<std::string> warnings() const;
};

// Configuration-level checks. Hard invariant breaches come back as
// violations; a single (count = 1) routing engine or fabric plane is only a
// warning, since non-redundant setups are valid but rate differently.
ValidationReport validate_configuration(const SystemConfiguration& config,
                                        const DeviceModel& device);

// ---------------------------------------------------------------------------
// Datasheet ingestion
// ---------------------------------------------------------------------------

enum class DatasheetFormat { Csv };

// Parsed datasheet: one configuration (named "default") per device model,
// rows with the same model accumulating components.
using IngestedSystem = std::pair<DeviceModel, SystemConfiguration>;

// Parses a datasheet document into validated device/configuration pairs.
// Column schema (header required):
//   model,vendor,application_class,technology,process_nm,slot_capacity_gbps,
//   frs_year,component_id,component_kind,unit_watts,count,
//   rated_capacity_gbps,capacity_convention
// Pure: never touches a stored catalog. Errors carry the 1-based file row.
std::vector<IngestedSystem> ingest_datasheet(std::string_view source,
                                             DatasheetFormat format = DatasheetFormat::Csv);

// ---------------------------------------------------------------------------
// Persistence
// ---------------------------------------------------------------------------

// Canonical UTF-8 JSON document. Byte-deterministic: structurally equal
// catalogs always serialize to identical bytes.
std::string save_catalog(const Catalog& catalog);

// Inverse of save_catalog; accepts any field order and re-canonicalizes.
// Throws ParseError / VersionError / ValidationError.
Catalog load_catalog(std::string_view content);

// ---------------------------------------------------------------------------
// Bundled reference systems
// ---------------------------------------------------------------------------

// The four core-routing generations of the bundled reference table (M40,
// M160, T640, T1600) plus the M10/M10i integration case study. Whole-system
// draws are modeled as a single chassis-common component since no per-FRU
// breakdown is published.
const Catalog& builtin_fixtures();

// Device names of the four-generation reference table, oldest first.
const std::vector<std::string>& table1_device_names();

} // namespace gores
