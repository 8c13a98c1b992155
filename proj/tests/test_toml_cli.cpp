#include <doctest.h>

#include "wwlab/operators.hpp"
#include "wwlab/scenarios.hpp"
#include "wwlab/toml.hpp"

using namespace wwlab;

TEST_CASE("toml subset parsing") {
    std::string text =
        "# experiment\n"
        "title = \"demo\"\n"
        "[scenario]\n"
        "name = \"ww-doubling\"  # inline comment\n"
        "[params]\n"
        "seeds = 32\n"
        "threshold = 0.05\n"
        "flag = true\n"
        "ns = [256, 1024, 4096]\n"
        "label = \"a # not a comment\"\n";
    TomlTable t = toml_parse(text);
    CHECK(t.at("title").as_string() == "demo");
    CHECK(t.at("scenario.name").as_string() == "ww-doubling");
    CHECK(t.at("params.seeds").as_integer() == 32);
    CHECK(t.at("params.threshold").as_double() == doctest::Approx(0.05));
    CHECK(t.at("params.flag").as_bool());
    REQUIRE(t.at("params.ns").as_array().size() == 3);
    CHECK(t.at("params.ns").as_array()[2].as_integer() == 4096);
    CHECK(t.at("params.label").as_string() == "a # not a comment");
    CHECK(t.at("params.seeds").as_double() == 32.0);  // int-to-double coercion

    CHECK_THROWS_AS(toml_parse("key"), config_error);
    CHECK_THROWS_AS(toml_parse("[unterminated\n"), config_error);
    CHECK_THROWS_AS(toml_parse("k = \"dangling\n"), config_error);
    CHECK_THROWS_AS(toml_parse("k = [1, 2\n"), config_error);
    CHECK_THROWS_AS(toml_parse("k = nonsense\n"), config_error);
    CHECK_THROWS_AS(t.at("title").as_integer(), config_error);
}

TEST_CASE("scenario registry covers the experiment suite") {
    const auto& reg = scenario_registry();
    CHECK(reg.size() >= 9);
    for (const auto& info : reg) {
        CHECK(!info.claim.empty());
        CHECK(find_scenario(info.name) == &info);
    }
    CHECK(find_scenario("no-such-scenario") == nullptr);
}

TEST_CASE("parameter lookup merges defaults and overrides") {
    const ScenarioInfo* info = find_scenario("dyadic-not-mean-ergodic");
    REQUIRE(info != nullptr);
    TomlTable empty;
    CHECK(param_int(empty, info->defaults, "params.m_max") == 10);
    TomlTable override_table = toml_parse("[params]\nm_max = 3\n");
    CHECK(param_int(override_table, info->defaults, "params.m_max") == 3);
    CHECK_THROWS_AS(param_int(empty, info->defaults, "params.missing"), config_error);
}

TEST_CASE("scenario outputs are identical for any worker count") {
    const ScenarioInfo* info = find_scenario("cert-soundness");
    REQUIRE(info != nullptr);
    TomlTable params = toml_parse("[params]\ninstances = 40\nn_max = 64\nseed = 7\n");
    ScenarioResult one = info->run(params, 1);
    ScenarioResult four = info->run(params, 4);
    CHECK(one.exit_code == 0);
    REQUIRE(one.artifacts.size() == four.artifacts.size());
    for (std::size_t i = 0; i < one.artifacts.size(); ++i) {
        CHECK(one.artifacts[i].name == four.artifacts[i].name);
        CHECK(one.artifacts[i].contents == four.artifacts[i].contents);
    }
}

TEST_CASE("fast scenarios pass their own assertions") {
    for (const char* name : {"rclass-membership", "mixing-profiles"}) {
        const ScenarioInfo* info = find_scenario(name);
        REQUIRE(info != nullptr);
        TomlTable empty;
        ScenarioResult res = info->run(empty, 2);
        CHECK(res.exit_code == 0);
        CHECK(!res.artifacts.empty());
        CHECK(!res.report.empty());
    }
}

TEST_CASE("median helper") {
    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == doctest::Approx(2.5));
    CHECK_THROWS_AS(median({}), contract_error);
}

TEST_CASE("format_double and hashes are stable") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(fnv1a64("wwlab") == fnv1a64("wwlab"));
    CHECK(fnv1a64("wwlab") != fnv1a64("wwlabx"));
}

TEST_CASE("operators and observables construct from config tables") {
    const ScenarioInfo* info = find_scenario("orbit-sup");
    REQUIRE(info != nullptr);
    TomlTable cfg = toml_parse(
        "[operator]\nvariant = \"MultKoopman\"\nmap = \"rotation\"\nalpha = \"1/4\"\n"
        "freq = 2\nscale_re = 0.5\nscale_im = 0.0\n"
        "[observable]\nkind = \"indicator\"\nlo = \"0/1\"\nhi = \"1/2\"\n");
    OperatorSpec op = operator_from_params(cfg, info->defaults);
    CHECK(std::string(variant_name(op)) == "MultKoopman");
    Observable f = observable_from_params(cfg, info->defaults);
    CHECK(f.dim() == 1);
    CHECK(f.norm_integral() == doctest::Approx(0.5));

    CHECK(fraction_from_string("sqrt2-1") == Fix128::sqrt2_minus_1());
    CHECK(fraction_from_string("1/4") == Fix128::from_ratio(1, 4));
    CHECK_THROWS_AS(fraction_from_string("nonsense"), config_error);
    CHECK_THROWS_AS(fraction_from_string("5/4"), config_error);

    TomlTable bad = toml_parse("[operator]\nvariant = \"Unknown\"\n");
    CHECK_THROWS_AS(operator_from_params(bad, info->defaults), config_error);

    // the generic scenario runs with defaults (doubling orbit of e(.))
    TomlTable empty;
    ScenarioResult res = info->run(empty, 1);
    CHECK(res.exit_code == 0);
    CHECK(res.artifacts.size() == 2);
}
