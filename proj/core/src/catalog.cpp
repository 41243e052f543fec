#include "gores/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "csv_util.hpp"

namespace gores {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Vocabulary tokens
// ---------------------------------------------------------------------------

namespace {

constexpr std::pair<AppClassKind, std::string_view> kAppClassTokens[] = {
    {AppClassKind::CoreRouting, "core-routing"},
    {AppClassKind::EthernetSwitching, "ethernet-switching"},
    {AppClassKind::IpMplsEdge, "ip-mpls-edge"},
    {AppClassKind::Firewall, "firewall"},
    {AppClassKind::DeepPacketInspection, "dpi"},
};

constexpr std::pair<ComponentKindVariant, std::string_view> kComponentKindTokens[] = {
    {ComponentKindVariant::RoutingEngine, "routing-engine"},
    {ComponentKindVariant::ForwardingEngine, "forwarding-engine"},
    {ComponentKindVariant::FabricPlane, "fabric-plane"},
    {ComponentKindVariant::Linecard, "linecard"},
    {ComponentKindVariant::ChassisCommon, "chassis-common"},
    {ComponentKindVariant::Cooling, "cooling"},
    {ComponentKindVariant::PowerSupplyOverhead, "power-supply-overhead"},
};

constexpr std::pair<ForwardingTechnology, std::string_view> kTechnologyTokens[] = {
    {ForwardingTechnology::GeneralPurposeCpu, "general-cpu"},
    {ForwardingTechnology::NetworkProcessor, "npu"},
    {ForwardingTechnology::ConfigurableCpuArray, "configurable-cpu-array"},
    {ForwardingTechnology::CustomAsic, "custom-asic"},
};

constexpr std::pair<CapacityConvention, std::string_view> kConventionTokens[] = {
    {CapacityConvention::FullDuplex, "full-duplex"},
    {CapacityConvention::AggregateBidirectional, "aggregate"},
};

} // namespace

ApplicationClass::ApplicationClass(AppClassKind kind) : kind_(kind) {
    if (kind == AppClassKind::Other) {
        throw ValidationError("Other application class requires a name");
    }
    for (const auto& [k, token] : kAppClassTokens) {
        if (k == kind) {
            name_ = std::string(token);
            return;
        }
    }
}

ApplicationClass ApplicationClass::from_token(std::string_view token) {
    const std::string t = detail::trim(token);
    if (t.empty()) {
        throw ValidationError("application class must be non-empty");
    }
    for (const auto& [kind, known] : kAppClassTokens) {
        if (t == known) {
            return ApplicationClass(kind);
        }
    }
    ApplicationClass c;
    c.kind_ = AppClassKind::Other;
    c.name_ = t;
    return c;
}

ApplicationClass ApplicationClass::other(std::string name) {
    // Known tokens normalize to their fixed variant so equal meanings stay
    // structurally equal across user input and reload.
    return from_token(name);
}

ComponentKind::ComponentKind(ComponentKindVariant kind) : kind_(kind) {
    if (kind == ComponentKindVariant::Other) {
        throw ValidationError("Other component kind requires a name");
    }
    for (const auto& [k, token] : kComponentKindTokens) {
        if (k == kind) {
            name_ = std::string(token);
            return;
        }
    }
}

ComponentKind ComponentKind::from_token(std::string_view token) {
    const std::string t = detail::trim(token);
    if (t.empty()) {
        throw ValidationError("component kind must be non-empty");
    }
    for (const auto& [kind, known] : kComponentKindTokens) {
        if (t == known) {
            return ComponentKind(kind);
        }
    }
    ComponentKind k;
    k.kind_ = ComponentKindVariant::Other;
    k.name_ = t;
    return k;
}

ComponentKind ComponentKind::other(std::string name) {
    return from_token(name);
}

std::string_view technology_token(ForwardingTechnology tech) {
    for (const auto& [t, token] : kTechnologyTokens) {
        if (t == tech) {
            return token;
        }
    }
    return "custom-asic";
}

std::optional<ForwardingTechnology> technology_from_token(std::string_view token) {
    const std::string t = detail::trim(token);
    for (const auto& [tech, known] : kTechnologyTokens) {
        if (t == known) {
            return tech;
        }
    }
    return std::nullopt;
}

std::string_view convention_token(CapacityConvention c) {
    return c == CapacityConvention::FullDuplex ? kConventionTokens[0].second
                                               : kConventionTokens[1].second;
}

std::optional<CapacityConvention> convention_from_token(std::string_view token) {
    const std::string t = detail::trim(token);
    for (const auto& [conv, known] : kConventionTokens) {
        if (t == known) {
            return conv;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Model methods
// ---------------------------------------------------------------------------

double SystemConfiguration::total_draw() const {
    double sum = 0.0;
    for (const auto& c : components) {
        sum += c.unit_draw * static_cast<double>(c.count);
    }
    return sum;
}

double SystemConfiguration::full_duplex_capacity() const {
    return capacity_convention == CapacityConvention::AggregateBidirectional
               ? rated_capacity / 2.0
               : rated_capacity;
}

const DeviceModel* Catalog::find_device(std::string_view name) const {
    for (const auto& d : devices) {
        if (d.name == name) {
            return &d;
        }
    }
    return nullptr;
}

const SystemConfiguration* Catalog::find_configuration(std::string_view device,
                                                       std::string_view config_name) const {
    for (const auto& c : configurations) {
        if (c.device == device && c.config_name == config_name) {
            return &c;
        }
    }
    return nullptr;
}

std::vector<const SystemConfiguration*> Catalog::configurations_of(std::string_view device) const {
    std::vector<const SystemConfiguration*> out;
    for (const auto& c : configurations) {
        if (c.device == device) {
            out.push_back(&c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

bool ValidationReport::passed() const {
    return std::none_of(issues.begin(), issues.end(), [](const ValidationIssue& i) {
        return i.severity == IssueSeverity::Violation;
    });
}

std::vector<std::string> ValidationReport::violations() const {
    std::vector<std::string> out;
    for (const auto& i : issues) {
        if (i.severity == IssueSeverity::Violation) {
            out.push_back(i.message);
        }
    }
    return out;
}

std::vector<std::string> ValidationReport::warnings() const {
    std::vector<std::string> out;
    for (const auto& i : issues) {
        if (i.severity == IssueSeverity::Warning) {
            out.push_back(i.message);
        }
    }
    return out;
}

ValidationReport validate_configuration(const SystemConfiguration& config,
                                        const DeviceModel& device) {
    ValidationReport report;
    auto violation = [&](std::string msg) {
        report.issues.push_back({IssueSeverity::Violation, std::move(msg)});
    };
    auto warning = [&](std::string msg) {
        report.issues.push_back({IssueSeverity::Warning, std::move(msg)});
    };

    if (config.device != device.name) {
        violation("configuration '" + config.config_name + "' references device '" +
                  config.device + "', not '" + device.name + "'");
    }
    if (config.components.empty()) {
        violation("components non-empty");
    }
    std::set<std::string> seen_ids;
    for (const auto& comp : config.components) {
        if (comp.id.empty()) {
            violation("component id must be non-empty");
        }
        if (!seen_ids.insert(comp.id).second) {
            violation("duplicate component id '" + comp.id + "'");
        }
        if (!(comp.unit_draw > 0.0)) {
            violation("component '" + comp.id + "' unit_draw must be > 0");
        }
        if (comp.count < 1) {
            violation("component '" + comp.id + "' count must be >= 1");
        }
        const auto kind = comp.kind.kind();
        if ((kind == ComponentKindVariant::RoutingEngine ||
             kind == ComponentKindVariant::FabricPlane) &&
            comp.count == 1) {
            warning("component '" + comp.id + "' (" + comp.kind.token() +
                    ") is non-redundant (count 1); redundant units change the power rating");
        }
    }
    if (!(config.rated_capacity > 0.0)) {
        violation("rated_capacity must be > 0");
    }
    if (!config.components.empty() && !(config.total_draw() > 0.0)) {
        violation("total draw must be > 0");
    }
    if (device.process_node && !(*device.process_node > 0.0)) {
        violation("device process_node must be > 0 when present");
    }
    if (device.slot_capacity && !(*device.slot_capacity > 0.0)) {
        violation("device slot_capacity must be > 0 when present");
    }
    if (device.frs_year && *device.frs_year <= 0) {
        violation("device frs_year must be > 0 when present");
    }
    return report;
}

namespace {

void validate_device(const DeviceModel& device) {
    if (device.name.empty()) {
        throw ValidationError("device name must be non-empty");
    }
    if (device.process_node && !(*device.process_node > 0.0)) {
        throw ValidationError("device '" + device.name + "': process_node must be > 0");
    }
    if (device.slot_capacity && !(*device.slot_capacity > 0.0)) {
        throw ValidationError("device '" + device.name + "': slot_capacity must be > 0");
    }
    if (device.frs_year && *device.frs_year <= 0) {
        throw ValidationError("device '" + device.name + "': frs_year must be > 0");
    }
}

void sort_canonical(Catalog& catalog) {
    std::sort(catalog.devices.begin(), catalog.devices.end(),
              [](const DeviceModel& a, const DeviceModel& b) { return a.name < b.name; });
    std::sort(catalog.configurations.begin(), catalog.configurations.end(),
              [](const SystemConfiguration& a, const SystemConfiguration& b) {
                  return std::tie(a.device, a.config_name) < std::tie(b.device, b.config_name);
              });
    for (auto& config : catalog.configurations) {
        std::sort(config.components.begin(), config.components.end(),
                  [](const PowerComponent& a, const PowerComponent& b) { return a.id < b.id; });
    }
}

} // namespace

Catalog make_catalog(std::vector<DeviceModel> devices,
                     std::vector<SystemConfiguration> configurations, int version) {
    Catalog catalog{version, std::move(devices), std::move(configurations)};
    sort_canonical(catalog);

    std::set<std::string> device_names;
    for (const auto& device : catalog.devices) {
        validate_device(device);
        if (!device_names.insert(device.name).second) {
            throw ValidationError("duplicate device name '" + device.name + "'");
        }
    }
    std::set<std::pair<std::string, std::string>> config_keys;
    for (const auto& config : catalog.configurations) {
        const DeviceModel* device = catalog.find_device(config.device);
        if (device == nullptr) {
            throw ValidationError("configuration '" + config.config_name +
                                  "' references unknown device '" + config.device + "'");
        }
        if (!config_keys.insert({config.device, config.config_name}).second) {
            throw ValidationError("duplicate configuration (" + config.device + ", " +
                                  config.config_name + ")");
        }
        ValidationReport report = validate_configuration(config, *device);
        if (!report.passed()) {
            throw ValidationError("configuration (" + config.device + ", " + config.config_name +
                                  "): " + report.violations().front());
        }
    }
    return catalog;
}

// ---------------------------------------------------------------------------
// Datasheet ingestion
// ---------------------------------------------------------------------------

namespace {

constexpr const char* kDatasheetHeader[] = {
    "model",        "vendor", "application_class",   "technology",
    "process_nm",   "slot_capacity_gbps",            "frs_year",
    "component_id", "component_kind",                "unit_watts",
    "count",        "rated_capacity_gbps",           "capacity_convention",
};
constexpr std::size_t kDatasheetColumns = std::size(kDatasheetHeader);

struct PendingSystem {
    DeviceModel device;
    SystemConfiguration config;
    int first_row = 0;
};

} // namespace

std::vector<IngestedSystem> ingest_datasheet(std::string_view source, DatasheetFormat format) {
    (void)format; // CSV is the only datasheet format

    const auto rows = detail::parse_csv(source);
    if (rows.empty()) {
        throw ParseError("datasheet is empty; expected a header row");
    }
    if (rows.front().fields.size() != kDatasheetColumns) {
        throw ParseError("header has " + std::to_string(rows.front().fields.size()) +
                             " columns, expected " + std::to_string(kDatasheetColumns),
                         rows.front().line);
    }
    for (std::size_t i = 0; i < kDatasheetColumns; ++i) {
        if (detail::trim(rows.front().fields[i]) != kDatasheetHeader[i]) {
            throw ParseError("header column " + std::to_string(i + 1) + " is '" +
                                 rows.front().fields[i] + "', expected '" + kDatasheetHeader[i] +
                                 "'",
                             rows.front().line);
        }
    }

    std::vector<PendingSystem> systems; // first-appearance order
    auto find_system = [&](const std::string& model) -> PendingSystem* {
        for (auto& s : systems) {
            if (s.device.name == model) {
                return &s;
            }
        }
        return nullptr;
    };

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const int line = row.line;
        if (row.fields.size() != kDatasheetColumns) {
            throw ParseError("expected " + std::to_string(kDatasheetColumns) + " columns, got " +
                                 std::to_string(row.fields.size()),
                             line);
        }
        auto field = [&](std::size_t i) { return detail::trim(row.fields[i]); };

        const std::string model = field(0);
        if (model.empty()) {
            throw ParseError("empty model name", line);
        }
        const std::string vendor = field(1);
        const std::string class_token = field(2);
        if (class_token.empty()) {
            throw ParseError("empty application_class", line);
        }
        const ApplicationClass app_class = ApplicationClass::from_token(class_token);
        const auto technology = technology_from_token(field(3));
        if (!technology) {
            throw ParseError("unknown technology '" + field(3) + "'", line);
        }

        DeviceModel device{model, vendor, app_class, *technology, {}, {}, {}};
        if (!field(4).empty()) {
            device.process_node = detail::parse_double_field(field(4), "process_nm", line);
        }
        if (!field(5).empty()) {
            device.slot_capacity = detail::parse_double_field(field(5), "slot_capacity_gbps", line);
        }
        if (!field(6).empty()) {
            device.frs_year = detail::parse_int_field(field(6), "frs_year", line);
        }

        PowerComponent component;
        component.id = field(7);
        if (component.id.empty()) {
            throw ParseError("empty component_id", line);
        }
        if (field(8).empty()) {
            throw ParseError("empty component_kind", line);
        }
        component.kind = ComponentKind::from_token(field(8));
        component.unit_draw = detail::parse_double_field(field(9), "unit_watts", line);
        component.count = detail::parse_int_field(field(10), "count", line);
        const double rated_capacity =
            detail::parse_double_field(field(11), "rated_capacity_gbps", line);
        const auto convention = convention_from_token(field(12));
        if (!convention) {
            throw ParseError("unknown capacity_convention '" + field(12) + "'", line);
        }

        if (!(component.unit_draw > 0.0)) {
            throw ValidationError("unit_watts must be > 0 for component '" + component.id + "'",
                                  line);
        }
        if (component.count < 1) {
            throw ValidationError("count must be >= 1 for component '" + component.id + "'", line);
        }
        if (!(rated_capacity > 0.0)) {
            throw ValidationError("rated_capacity_gbps must be > 0", line);
        }
        if (device.process_node && !(*device.process_node > 0.0)) {
            throw ValidationError("process_nm must be > 0 when present", line);
        }
        if (device.slot_capacity && !(*device.slot_capacity > 0.0)) {
            throw ValidationError("slot_capacity_gbps must be > 0 when present", line);
        }
        if (device.frs_year && *device.frs_year <= 0) {
            throw ValidationError("frs_year must be > 0 when present", line);
        }

        PendingSystem* existing = find_system(model);
        if (existing == nullptr) {
            PendingSystem fresh;
            fresh.device = device;
            fresh.config = SystemConfiguration{model, "default", {component}, rated_capacity,
                                               *convention};
            fresh.first_row = line;
            systems.push_back(std::move(fresh));
            continue;
        }

        // Accumulating rows must agree with the first row's device and
        // capacity facts; silent last-wins would hide data-entry slips.
        if (existing->device != device) {
            throw ValidationError("model '" + model +
                                      "' device fields conflict with its first row (row " +
                                      std::to_string(existing->first_row) + ")",
                                  line);
        }
        if (existing->config.rated_capacity != rated_capacity ||
            existing->config.capacity_convention != *convention) {
            throw ValidationError("model '" + model +
                                      "' capacity conflicts with its first row (row " +
                                      std::to_string(existing->first_row) + ")",
                                  line);
        }
        for (const auto& prior : existing->config.components) {
            if (prior.id == component.id) {
                throw ValidationError("duplicate component id '" + component.id + "' for model '" +
                                          model + "'",
                                      line);
            }
        }
        existing->config.components.push_back(std::move(component));
    }

    std::vector<IngestedSystem> result;
    result.reserve(systems.size());
    for (auto& s : systems) {
        result.emplace_back(std::move(s.device), std::move(s.config));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Persistence
// ---------------------------------------------------------------------------

namespace {

ordered_json device_to_json(const DeviceModel& device) {
    ordered_json j;
    j["name"] = device.name;
    j["vendor"] = device.vendor;
    j["application_class"] = device.application_class.token();
    j["technology"] = std::string(technology_token(device.technology));
    if (device.process_node) {
        j["process_node"] = *device.process_node;
    }
    if (device.slot_capacity) {
        j["slot_capacity"] = *device.slot_capacity;
    }
    if (device.frs_year) {
        j["frs_year"] = *device.frs_year;
    }
    return j;
}

ordered_json config_to_json(const SystemConfiguration& config) {
    ordered_json j;
    j["device"] = config.device;
    j["config_name"] = config.config_name;
    ordered_json comps = ordered_json::array();
    for (const auto& c : config.components) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["kind"] = c.kind.token();
        jc["unit_draw"] = c.unit_draw;
        jc["count"] = c.count;
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    j["rated_capacity"] = config.rated_capacity;
    j["capacity_convention"] = std::string(convention_token(config.capacity_convention));
    return j;
}

const ordered_json& require_field(const ordered_json& j, const char* key, const char* context) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(context) + ": missing field '" + key + "'");
    }
    return *it;
}

std::string get_string(const ordered_json& j, const char* key, const char* context) {
    const auto& v = require_field(j, key, context);
    if (!v.is_string()) {
        throw ParseError(std::string(context) + ": field '" + key + "' must be a string");
    }
    return v.get<std::string>();
}

double get_number(const ordered_json& j, const char* key, const char* context) {
    const auto& v = require_field(j, key, context);
    if (!v.is_number()) {
        throw ParseError(std::string(context) + ": field '" + key + "' must be a number");
    }
    return v.get<double>();
}

DeviceModel device_from_json(const ordered_json& j) {
    if (!j.is_object()) {
        throw ParseError("device entry must be an object");
    }
    DeviceModel device;
    device.name = get_string(j, "name", "device");
    device.vendor = get_string(j, "vendor", "device");
    device.application_class =
        ApplicationClass::from_token(get_string(j, "application_class", "device"));
    const std::string tech = get_string(j, "technology", "device");
    const auto technology = technology_from_token(tech);
    if (!technology) {
        throw ParseError("device '" + device.name + "': unknown technology '" + tech + "'");
    }
    device.technology = *technology;
    if (j.contains("process_node") && !j["process_node"].is_null()) {
        device.process_node = get_number(j, "process_node", "device");
    }
    if (j.contains("slot_capacity") && !j["slot_capacity"].is_null()) {
        device.slot_capacity = get_number(j, "slot_capacity", "device");
    }
    if (j.contains("frs_year") && !j["frs_year"].is_null()) {
        const auto& v = j["frs_year"];
        if (!v.is_number_integer()) {
            throw ParseError("device '" + device.name + "': frs_year must be an integer");
        }
        device.frs_year = v.get<int>();
    }
    return device;
}

SystemConfiguration config_from_json(const ordered_json& j) {
    if (!j.is_object()) {
        throw ParseError("configuration entry must be an object");
    }
    SystemConfiguration config;
    config.device = get_string(j, "device", "configuration");
    config.config_name = get_string(j, "config_name", "configuration");
    const auto& comps = require_field(j, "components", "configuration");
    if (!comps.is_array()) {
        throw ParseError("configuration (" + config.device + ", " + config.config_name +
                         "): components must be an array");
    }
    for (const auto& jc : comps) {
        PowerComponent c;
        c.id = get_string(jc, "id", "component");
        c.kind = ComponentKind::from_token(get_string(jc, "kind", "component"));
        c.unit_draw = get_number(jc, "unit_draw", "component");
        const auto& count = require_field(jc, "count", "component");
        if (!count.is_number_integer()) {
            throw ParseError("component '" + c.id + "': count must be an integer");
        }
        c.count = count.get<int>();
        config.components.push_back(std::move(c));
    }
    config.rated_capacity = get_number(j, "rated_capacity", "configuration");
    const std::string conv = get_string(j, "capacity_convention", "configuration");
    const auto convention = convention_from_token(conv);
    if (!convention) {
        throw ParseError("configuration (" + config.device + ", " + config.config_name +
                         "): unknown capacity_convention '" + conv + "'");
    }
    config.capacity_convention = *convention;
    return config;
}

} // namespace

std::string save_catalog(const Catalog& catalog) {
    // Serialize a canonically ordered copy so equal catalogs yield identical
    // bytes regardless of in-memory ordering.
    Catalog canonical = make_catalog(catalog.devices, catalog.configurations, catalog.version);

    ordered_json j;
    j["version"] = canonical.version;
    ordered_json devices = ordered_json::array();
    for (const auto& d : canonical.devices) {
        devices.push_back(device_to_json(d));
    }
    j["devices"] = std::move(devices);
    ordered_json configs = ordered_json::array();
    for (const auto& c : canonical.configurations) {
        configs.push_back(config_to_json(c));
    }
    j["configurations"] = std::move(configs);
    return j.dump(2) + "\n";
}

Catalog load_catalog(std::string_view content) {
    ordered_json j;
    try {
        j = ordered_json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid catalog JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("catalog document must be a JSON object");
    }
    const auto& version = require_field(j, "version", "catalog");
    if (!version.is_number_integer()) {
        throw ParseError("catalog: version must be an integer");
    }
    const int v = version.get<int>();
    if (v != kCatalogFormatVersion) {
        throw VersionError("unknown catalog format version " + std::to_string(v) +
                           " (supported: " + std::to_string(kCatalogFormatVersion) + ")");
    }
    const auto& devices = require_field(j, "devices", "catalog");
    const auto& configs = require_field(j, "configurations", "catalog");
    if (!devices.is_array() || !configs.is_array()) {
        throw ParseError("catalog: devices and configurations must be arrays");
    }
    std::vector<DeviceModel> device_list;
    device_list.reserve(devices.size());
    for (const auto& jd : devices) {
        device_list.push_back(device_from_json(jd));
    }
    std::vector<SystemConfiguration> config_list;
    config_list.reserve(configs.size());
    for (const auto& jc : configs) {
        config_list.push_back(config_from_json(jc));
    }
    return make_catalog(std::move(device_list), std::move(config_list), v);
}

// ---------------------------------------------------------------------------
// Bundled reference systems
// ---------------------------------------------------------------------------

namespace {

SystemConfiguration whole_chassis_config(std::string device, double draw_watts,
                                         double rated_capacity, CapacityConvention convention) {
    PowerComponent chassis{"chassis", ComponentKind(ComponentKindVariant::ChassisCommon),
                           draw_watts, 1};
    return SystemConfiguration{std::move(device), "fully-loaded", {chassis}, rated_capacity,
                               convention};
}

Catalog build_fixtures() {
    const ApplicationClass core = ApplicationClass(AppClassKind::CoreRouting);
    const ApplicationClass edge = ApplicationClass(AppClassKind::IpMplsEdge);
    const auto asic = ForwardingTechnology::CustomAsic;

    std::vector<DeviceModel> devices = {
        {"M40", "Juniper", core, asic, 180.0, 3.0, 1998},
        {"M160", "Juniper", core, asic, 180.0, 10.0, 2000},
        {"T640", "Juniper", core, asic, 130.0, 40.0, 2002},
        {"T1600", "Juniper", core, asic, 90.0, 100.0, 2007},
        {"M10", "Juniper", edge, asic, 250.0, std::nullopt, 2000},
        {"M10i", "Juniper", edge, asic, 180.0, std::nullopt, 2003},
    };
    std::vector<SystemConfiguration> configs = {
        whole_chassis_config("M40", 1500.0, 40.0, CapacityConvention::AggregateBidirectional),
        whole_chassis_config("M160", 3150.0, 160.0, CapacityConvention::AggregateBidirectional),
        whole_chassis_config("T640", 4520.0, 640.0, CapacityConvention::AggregateBidirectional),
        whole_chassis_config("T1600", 8350.0, 1600.0, CapacityConvention::AggregateBidirectional),
        whole_chassis_config("M10", 494.0, 5.0, CapacityConvention::FullDuplex),
        whole_chassis_config("M10i", 350.4, 5.0, CapacityConvention::FullDuplex),
    };
    return make_catalog(std::move(devices), std::move(configs));
}

} // namespace

const Catalog& builtin_fixtures() {
    static const Catalog fixtures = build_fixtures();
    return fixtures;
}

const std::vector<std::string>& table1_device_names() {
    static const std::vector<std::string> names = {"M40", "M160", "T640", "T1600"};
    return names;
}

} // namespace gores
