#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wwlab/scenarios.hpp"

namespace fs = std::filesystem;
using wwlab::config_error;
using wwlab::resource_error;

namespace {

constexpr const char* kVersion = "0.1.0";

std::size_t worker_count(int cli_workers) {
    if (cli_workers > 0) return std::size_t(cli_workers);
    if (const char* env = std::getenv("WWLAB_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return std::size_t(v);
    }
    return 1;
}

int run_command(const std::string& config_path, const std::string& out_override,
                int cli_workers) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw config_error("cannot open config file: " + config_path);
    std::stringstream raw;
    raw << in.rdbuf();
    wwlab::TomlTable table = wwlab::toml_parse(raw.str());

    auto name_it = table.find("scenario.name");
    if (name_it == table.end()) throw config_error("config is missing scenario.name");
    const std::string name = name_it->second.as_string();
    const wwlab::ScenarioInfo* info = wwlab::find_scenario(name);
    if (!info) throw config_error("unknown scenario: " + name);

    std::string out_dir = out_override;
    if (out_dir.empty()) {
        auto it = table.find("output.dir");
        out_dir = it != table.end() ? it->second.as_string() : "out/" + name;
    }
    std::size_t workers = worker_count(cli_workers);

    wwlab::ScenarioResult result = info->run(table, workers);

    fs::create_directories(out_dir);
    for (const auto& artifact : result.artifacts) {
        std::ofstream f(fs::path(out_dir) / artifact.name, std::ios::binary);
        f << artifact.contents;
    }
    nlohmann::ordered_json manifest;
    manifest["scenario"] = name;
    manifest["version"] = kVersion;
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(wwlab::fnv1a64(raw.str())));
    manifest["config_hash"] = hash;
    nlohmann::ordered_json arts = nlohmann::ordered_json::array();
    for (const auto& artifact : result.artifacts) arts.push_back(artifact.name);
    manifest["artifacts"] = arts;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table) {
        switch (value.kind) {
            case wwlab::TomlValue::Kind::String: params[key] = value.str; break;
            case wwlab::TomlValue::Kind::Integer: params[key] = value.integer; break;
            case wwlab::TomlValue::Kind::Float: params[key] = value.real; break;
            case wwlab::TomlValue::Kind::Boolean: params[key] = value.boolean; break;
            case wwlab::TomlValue::Kind::Array: params[key] = "[array]"; break;
        }
    }
    manifest["config"] = params;
    {
        std::ofstream f(fs::path(out_dir) / "manifest.json", std::ios::binary);
        f << manifest.dump(2) << "\n";
    }

    std::cout << result.report << "\n";
    std::cout << "artifacts written to " << out_dir << "\n";
    return result.exit_code;
}

int list_command() {
    for (const auto& info : wwlab::scenario_registry()) std::cout << info.name << "\n";
    return 0;
}

int describe_command(const std::string& name) {
    const wwlab::ScenarioInfo* info = wwlab::find_scenario(name);
    if (!info) throw config_error("unknown scenario: " + name);
    std::cout << info->name << "\n  " << info->claim << "\n  defaults:\n";
    for (const auto& [key, value] : info->defaults) {
        std::cout << "    " << key << " = ";
        switch (value.kind) {
            case wwlab::TomlValue::Kind::String: std::cout << '"' << value.str << '"'; break;
            case wwlab::TomlValue::Kind::Integer: std::cout << value.integer; break;
            case wwlab::TomlValue::Kind::Float: std::cout << value.real; break;
            case wwlab::TomlValue::Kind::Boolean: std::cout << (value.boolean ? "true" : "false"); break;
            case wwlab::TomlValue::Kind::Array: std::cout << "[...]"; break;
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wwlab: numerical experiments on twisted and weighted ergodic averages"};
    app.require_subcommand(1);

    std::string config_path, out_override, describe_name;
    int cli_workers = 0;

    CLI::App* run = app.add_subcommand("run", "run a scenario config");
    run->add_option("config", config_path, "TOML config file")->required();
    run->add_option("--out", out_override, "output directory override");
    run->add_option("--workers", cli_workers, "worker threads (results are identical)");

    CLI::App* list = app.add_subcommand("list", "list registered scenarios");

    CLI::App* describe = app.add_subcommand("describe", "show a scenario's claim and defaults");
    describe->add_option("name", describe_name, "scenario name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(config_path, out_override, cli_workers);
        if (list->parsed()) return list_command();
        if (describe->parsed()) return describe_command(describe_name);
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
