#include <doctest.h>

#include <random>

#include "gores/catalog.hpp"
#include "test_support.hpp"

using namespace gores;

namespace {

const char* kDatasheetHeader =
    "model,vendor,application_class,technology,process_nm,slot_capacity_gbps,frs_year,"
    "component_id,component_kind,unit_watts,count,rated_capacity_gbps,capacity_convention\n";

std::string sheet(const std::string& rows) {
    return std::string(kDatasheetHeader) + rows;
}

} // namespace

TEST_CASE("vocabulary tokens round-trip and normalize") {
    CHECK(ApplicationClass::from_token("core-routing").kind() == AppClassKind::CoreRouting);
    CHECK(ApplicationClass::from_token("dpi").kind() == AppClassKind::DeepPacketInspection);
    const auto custom = ApplicationClass::from_token("cable-headend");
    CHECK(custom.kind() == AppClassKind::Other);
    CHECK(custom.token() == "cable-headend");
    // Other() with a reserved token folds back into the fixed variant.
    CHECK(ApplicationClass::other("firewall").kind() == AppClassKind::Firewall);
    CHECK_THROWS_AS(ApplicationClass::from_token("  "), ValidationError);

    CHECK(ComponentKind::from_token("chassis-common").kind() ==
          ComponentKindVariant::ChassisCommon);
    CHECK(ComponentKind::from_token("fan-tray").kind() == ComponentKindVariant::Other);
    CHECK_THROWS_AS(ComponentKind::from_token(""), ValidationError);

    CHECK(technology_from_token("npu") == ForwardingTechnology::NetworkProcessor);
    CHECK(technology_from_token("warp-core") == std::nullopt);
    CHECK(technology_token(ForwardingTechnology::ConfigurableCpuArray) ==
          "configurable-cpu-array");

    CHECK(convention_from_token("aggregate") == CapacityConvention::AggregateBidirectional);
    CHECK(convention_from_token("half-duplex") == std::nullopt);
}

TEST_CASE("total draw and full-duplex capacity") {
    SystemConfiguration config;
    config.device = "box";
    config.config_name = "default";
    config.components = {
        {"re", ComponentKind(ComponentKindVariant::RoutingEngine), 120.0, 2},
        {"lc", ComponentKind(ComponentKindVariant::Linecard), 350.0, 4},
    };
    config.rated_capacity = 400.0;
    config.capacity_convention = CapacityConvention::AggregateBidirectional;

    CHECK(config.total_draw() == doctest::Approx(120.0 * 2 + 350.0 * 4));
    CHECK(config.full_duplex_capacity() == doctest::Approx(200.0));

    config.capacity_convention = CapacityConvention::FullDuplex;
    CHECK(config.full_duplex_capacity() == doctest::Approx(400.0));
}

TEST_CASE("builtin fixtures carry the published figures") {
    const Catalog& fixtures = builtin_fixtures();
    CHECK(fixtures.configurations.size() == 6);
    CHECK(fixtures.devices.size() == 6);

    const auto* m10 = fixtures.find_configuration("M10", "fully-loaded");
    REQUIRE(m10 != nullptr);
    CHECK(m10->capacity_convention == CapacityConvention::FullDuplex);
    CHECK(m10->rated_capacity == doctest::Approx(5.0));
    CHECK(m10->total_draw() == doctest::Approx(494.0));

    const auto* m10i = fixtures.find_configuration("M10i", "fully-loaded");
    REQUIRE(m10i != nullptr);
    CHECK(m10i->total_draw() == doctest::Approx(350.4));

    const auto* m40 = fixtures.find_configuration("M40", "fully-loaded");
    REQUIRE(m40 != nullptr);
    CHECK(m40->total_draw() == doctest::Approx(1500.0));
    CHECK(m40->capacity_convention == CapacityConvention::AggregateBidirectional);

    const auto* t1600_dev = fixtures.find_device("T1600");
    REQUIRE(t1600_dev != nullptr);
    CHECK(t1600_dev->process_node == 90.0);
    CHECK(t1600_dev->slot_capacity == 100.0);
    CHECK(t1600_dev->frs_year == 2007);
    CHECK(t1600_dev->application_class.kind() == AppClassKind::CoreRouting);

    for (const auto& config : fixtures.configurations) {
        const auto* device = fixtures.find_device(config.device);
        REQUIRE(device != nullptr);
        CHECK(validate_configuration(config, *device).passed());
    }
}

TEST_CASE("validate_configuration reports violations and redundancy warnings") {
    const Catalog& fixtures = builtin_fixtures();
    const auto* t1600 = fixtures.find_configuration("T1600", "fully-loaded");
    const auto* device = fixtures.find_device("T1600");

    SUBCASE("fixture passes clean") {
        const auto report = validate_configuration(*t1600, *device);
        CHECK(report.passed());
        CHECK(report.issues.empty());
    }

    SUBCASE("empty component list is a hard violation") {
        SystemConfiguration config = *t1600;
        config.components.clear();
        const auto report = validate_configuration(config, *device);
        CHECK_FALSE(report.passed());
        REQUIRE_FALSE(report.violations().empty());
        CHECK(report.violations().front() == "components non-empty");
    }

    SUBCASE("single routing engine passes with a warning") {
        SystemConfiguration config = *t1600;
        config.components.push_back(
            {"re0", ComponentKind(ComponentKindVariant::RoutingEngine), 90.0, 1});
        const auto report = validate_configuration(config, *device);
        CHECK(report.passed());
        REQUIRE(report.warnings().size() == 1);
        CHECK(report.warnings().front().find("re0") != std::string::npos);
    }

    SUBCASE("redundant routing engine draws no warning") {
        SystemConfiguration config = *t1600;
        config.components.push_back(
            {"re0", ComponentKind(ComponentKindVariant::RoutingEngine), 90.0, 2});
        CHECK(validate_configuration(config, *device).warnings().empty());
    }

    SUBCASE("duplicate id, zero draw, zero capacity are violations") {
        SystemConfiguration config = *t1600;
        config.components.push_back(
            {"chassis", ComponentKind(ComponentKindVariant::Cooling), 0.0, 0});
        config.rated_capacity = 0.0;
        const auto report = validate_configuration(config, *device);
        CHECK(report.violations().size() == 4);
    }
}

TEST_CASE("ingest_datasheet parses the reference row") {
    const auto systems = sheet(
        "T1600,Juniper,core-routing,custom-asic,90,100,2007,chassis,chassis-common,8350,1,1600,"
        "aggregate\n");
    const auto parsed = ingest_datasheet(systems);
    REQUIRE(parsed.size() == 1);
    const auto& [device, config] = parsed.front();
    CHECK(device.name == "T1600");
    CHECK(device.vendor == "Juniper");
    CHECK(device.application_class.kind() == AppClassKind::CoreRouting);
    CHECK(device.technology == ForwardingTechnology::CustomAsic);
    CHECK(device.process_node == 90.0);
    CHECK(device.slot_capacity == 100.0);
    CHECK(device.frs_year == 2007);
    CHECK(config.config_name == "default");
    CHECK(config.total_draw() == doctest::Approx(8350.0));
    CHECK(config.rated_capacity == doctest::Approx(1600.0));
    CHECK(config.capacity_convention == CapacityConvention::AggregateBidirectional);
}

TEST_CASE("ingest_datasheet accumulates components per model") {
    const auto parsed = ingest_datasheet(sheet(
        "EdgeBox,Acme,ip-mpls-edge,npu,65,40,2012,re,routing-engine,120,2,400,aggregate\n"
        "EdgeBox,Acme,ip-mpls-edge,npu,65,40,2012,lc,linecard,350,4,400,aggregate\n"));
    REQUIRE(parsed.size() == 1);
    const auto& config = parsed.front().second;
    CHECK(config.components.size() == 2);
    CHECK(config.total_draw() == doctest::Approx(120.0 * 2 + 350.0 * 4));
}

TEST_CASE("ingest_datasheet validation and parse failures carry row numbers") {
    SUBCASE("zero unit draw") {
        try {
            ingest_datasheet(sheet(
                "Box,V,firewall,npu,,,,psu,power-supply-overhead,0,1,10,full-duplex\n"));
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.row() == 2);
        }
    }
    SUBCASE("duplicate component id names the id") {
        try {
            ingest_datasheet(sheet(
                "Box,V,firewall,npu,,,,psu,power-supply-overhead,10,1,10,full-duplex\n"
                "Box,V,firewall,npu,,,,psu,power-supply-overhead,10,1,10,full-duplex\n"));
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("psu") != std::string::npos);
            CHECK(e.row() == 3);
        }
    }
    SUBCASE("wrong column count") {
        CHECK_THROWS_AS(ingest_datasheet(sheet("Box,V,firewall\n")), ParseError);
    }
    SUBCASE("unknown technology token") {
        CHECK_THROWS_AS(
            ingest_datasheet(sheet("Box,V,firewall,magic,,,,c,cooling,5,1,10,full-duplex\n")),
            ParseError);
    }
    SUBCASE("unknown capacity convention") {
        CHECK_THROWS_AS(
            ingest_datasheet(sheet("Box,V,firewall,npu,,,,c,cooling,5,1,10,simplex\n")),
            ParseError);
    }
    SUBCASE("malformed number") {
        CHECK_THROWS_AS(
            ingest_datasheet(sheet("Box,V,firewall,npu,,,,c,cooling,watts,1,10,full-duplex\n")),
            ParseError);
    }
    SUBCASE("conflicting device fields across rows of one model") {
        CHECK_THROWS_AS(ingest_datasheet(sheet(
                            "Box,V,firewall,npu,,,,a,cooling,5,1,10,full-duplex\n"
                            "Box,Other,firewall,npu,,,,b,cooling,5,1,10,full-duplex\n")),
                        ValidationError);
    }
    SUBCASE("conflicting capacity across rows of one model") {
        CHECK_THROWS_AS(ingest_datasheet(sheet(
                            "Box,V,firewall,npu,,,,a,cooling,5,1,10,full-duplex\n"
                            "Box,V,firewall,npu,,,,b,cooling,5,1,20,full-duplex\n")),
                        ValidationError);
    }
    SUBCASE("missing header") {
        CHECK_THROWS_AS(ingest_datasheet(""), ParseError);
        CHECK_THROWS_AS(ingest_datasheet("model,vendor\n"), ParseError);
    }
    SUBCASE("count below one") {
        try {
            ingest_datasheet(
                sheet("Box,V,firewall,npu,,,,c,cooling,5,0,10,full-duplex\n"));
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.row() == 2);
        }
    }
}

TEST_CASE("ingested rows assemble into configurations that validate cleanly") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> n_models(1, 4);
    std::uniform_int_distribution<int> n_comps(1, 3);
    std::uniform_int_distribution<int> count(1, 4);
    for (int round = 0; round < 50; ++round) {
        std::string rows;
        const int models = n_models(rng);
        for (int m = 0; m < models; ++m) {
            const std::string name = "box" + std::to_string(m);
            const double capacity = gores::testing::log_uniform(rng, 1.0, 2000.0);
            const int comps = n_comps(rng);
            for (int c = 0; c < comps; ++c) {
                rows += name + ",Vendor,core-routing,custom-asic,90,," + "2007,part" +
                        std::to_string(c) + ",linecard," +
                        std::to_string(gores::testing::log_uniform(rng, 1.0, 900.0)) + "," +
                        std::to_string(count(rng)) + "," + std::to_string(capacity) +
                        ",full-duplex\n";
            }
        }
        const auto parsed = ingest_datasheet(sheet(rows));
        CHECK(parsed.size() == static_cast<std::size_t>(models));
        for (const auto& [device, config] : parsed) {
            CHECK(validate_configuration(config, device).passed());
        }
    }
}

TEST_CASE("empty catalog saves to the fixed minimal document") {
    const Catalog empty = make_catalog({}, {});
    const std::string bytes = save_catalog(empty);
    CHECK(bytes == "{\n  \"version\": 1,\n  \"devices\": [],\n  \"configurations\": []\n}\n");
    CHECK(load_catalog(bytes) == empty);
}

TEST_CASE("fixture catalog round-trips byte-identically") {
    const std::string first = save_catalog(builtin_fixtures());
    const std::string second = save_catalog(load_catalog(first));
    CHECK(first == second);
}

TEST_CASE("save is deterministic and load inverts it for random catalogs") {
    std::mt19937 rng(1234);
    for (int round = 0; round < 25; ++round) {
        const Catalog catalog = gores::testing::random_catalog(rng, 1 + round % 5);
        const std::string bytes = save_catalog(catalog);
        CHECK(bytes == save_catalog(catalog));
        const Catalog reloaded = load_catalog(bytes);
        CHECK(reloaded == catalog);
        CHECK(save_catalog(reloaded) == bytes);
    }
}

TEST_CASE("save canonicalizes member order") {
    DeviceModel a{"alpha", "V", ApplicationClass::from_token("firewall"),
                  ForwardingTechnology::NetworkProcessor, {}, {}, {}};
    DeviceModel b{"beta", "V", ApplicationClass::from_token("firewall"),
                  ForwardingTechnology::NetworkProcessor, {}, {}, {}};
    SystemConfiguration config{"alpha",
                               "default",
                               {{"z", ComponentKind(ComponentKindVariant::Cooling), 5.0, 1},
                                {"a", ComponentKind(ComponentKindVariant::Linecard), 7.0, 1}},
                               10.0,
                               CapacityConvention::FullDuplex};

    const Catalog sorted = make_catalog({a, b}, {config});
    Catalog shuffled = sorted;
    std::swap(shuffled.devices[0], shuffled.devices[1]);
    CHECK(save_catalog(shuffled) == save_catalog(sorted));
    CHECK(sorted.configurations[0].components[0].id == "a");
}

TEST_CASE("load rejects broken documents") {
    SUBCASE("unknown version") {
        CHECK_THROWS_AS(
            load_catalog("{\"version\": 999, \"devices\": [], \"configurations\": []}"),
            VersionError);
    }
    SUBCASE("syntax error") {
        CHECK_THROWS_AS(load_catalog("{"), ParseError);
    }
    SUBCASE("wrong field type") {
        CHECK_THROWS_AS(
            load_catalog("{\"version\": 1, \"devices\": {}, \"configurations\": []}"),
            ParseError);
    }
    SUBCASE("missing field") {
        CHECK_THROWS_AS(load_catalog("{\"version\": 1, \"devices\": []}"), ParseError);
    }
    SUBCASE("dangling device reference") {
        const char* doc = R"({
          "version": 1,
          "devices": [],
          "configurations": [{
            "device": "ghost", "config_name": "x",
            "components": [{"id": "c", "kind": "cooling", "unit_draw": 5.0, "count": 1}],
            "rated_capacity": 10.0, "capacity_convention": "full-duplex"
          }]
        })";
        CHECK_THROWS_AS(load_catalog(doc), ValidationError);
    }
}

TEST_CASE("make_catalog enforces uniqueness invariants") {
    DeviceModel device{"box", "V", ApplicationClass::from_token("firewall"),
                       ForwardingTechnology::NetworkProcessor, {}, {}, {}};
    SystemConfiguration config{"box",
                               "default",
                               {{"c", ComponentKind(ComponentKindVariant::Cooling), 5.0, 1}},
                               10.0,
                               CapacityConvention::FullDuplex};

    CHECK_THROWS_AS(make_catalog({device, device}, {config}), ValidationError);
    CHECK_THROWS_AS(make_catalog({device}, {config, config}), ValidationError);
    CHECK_NOTHROW(make_catalog({device}, {config}));
}

TEST_CASE("optional device fields survive the round trip when absent") {
    DeviceModel device{"bare", "V", ApplicationClass::from_token("dpi"),
                       ForwardingTechnology::GeneralPurposeCpu, {}, {}, {}};
    SystemConfiguration config{"bare",
                               "default",
                               {{"c", ComponentKind(ComponentKindVariant::ChassisCommon), 42.0, 1}},
                               4.0,
                               CapacityConvention::FullDuplex};
    const Catalog catalog = make_catalog({device}, {config});
    const Catalog reloaded = load_catalog(save_catalog(catalog));
    CHECK(reloaded == catalog);
    CHECK_FALSE(reloaded.devices[0].process_node.has_value());
    CHECK_FALSE(reloaded.devices[0].frs_year.has_value());
}
