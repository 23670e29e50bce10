// SPDX-License-Identifier: Apache-2.0
//
// risdm: double-RIS two-way directional modulation simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "risdm/risdm.h"

namespace {

struct ScenarioDeleter {
    void operator()(risdm_scenario* s) const { risdm_scenario_free(s); }
};
struct SweepDeleter {
    void operator()(risdm_sweep* s) const { risdm_sweep_free(s); }
};
struct StringDeleter {
    void operator()(char* s) const { risdm_string_free(s); }
};
using ScenarioPtr = std::unique_ptr<risdm_scenario, ScenarioDeleter>;
using SweepPtr = std::unique_ptr<risdm_sweep, SweepDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Failure {
    risdm_status status;
};

void check(risdm_status st) {
    if (st != RISDM_OK) {
        std::fprintf(stderr, "risdm: %s: %s\n", risdm_status_string(st), risdm_last_error());
        throw Failure{st};
    }
}

ScenarioPtr open_scenario(const std::string& path) {
    risdm_scenario* s = nullptr;
    check(path.empty() ? risdm_scenario_default(&s) : risdm_scenario_load(path.c_str(), &s));
    return ScenarioPtr(s);
}

std::vector<double> parse_values(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
            throw CLI::ValidationError("--values", "not a number: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

void emit(const std::string& out_path, const char* text) {
    if (out_path.empty() || out_path == "-")
        std::fputs(text, stdout);
    else
        check(risdm_write_file(out_path.c_str(), text));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double-RIS two-way directional modulation simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(risdm_version()));

    std::string config_path, out_path;

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV records");
    std::string axis, values, methods = "max-sv", ris = "gpg", pa = "fixed";
    int trials = 50;
    std::uint64_t seed = 0, pa_seed = 0;
    double step_1d = 0.001, step_2d = 0.01;
    unsigned threads = 0;
    sweep->add_option("--config", config_path, "Scenario JSON (defaults when omitted)");
    sweep->add_option("--axis", axis, "power_dbm | elements_m | beta | distance_ab")->required();
    sweep->add_option("--values", values, "Comma-separated, strictly increasing axis values")->required();
    sweep->add_option("--methods", methods, "max-sv,leakage")->capture_default_str();
    sweep->add_option("--ris", ris, "gpg,gpg-literal,random,none,ris1-only,ris2-only")->capture_default_str();
    sweep->add_option("--pa", pa, "fixed,epa,es1d,es2d,hicf")->capture_default_str();
    sweep->add_option("--trials", trials, "Random-phase draws per point")->capture_default_str()->check(CLI::PositiveNumber);
    auto* seed_opt = sweep->add_option("--seed", seed, "Sweep seed (config seed when omitted)");
    auto* pa_seed_opt = sweep->add_option("--pa-seed", pa_seed, "HICF restart seed (sweep seed when omitted)");
    sweep->add_option("--grid-step", step_2d, "2-D grid step for es2d")->capture_default_str();
    sweep->add_option("--grid-step-1d", step_1d, "1-D grid step for es1d")->capture_default_str();
    sweep->add_option("--threads", threads, "Worker threads, 0 for all cores")->capture_default_str();
    sweep->add_option("--out", out_path, "Output CSV path, '-' for stdout")->required();

    auto* surface = app.add_subcommand("pa-surface", "Evaluate SSR over the (beta1, beta2) grid");
    double step = 0.01;
    std::string surface_method = "max-sv", surface_ris = "gpg";
    surface->add_option("--config", config_path, "Scenario JSON (defaults when omitted)");
    surface->add_option("--step", step, "Grid step")->capture_default_str();
    surface->add_option("--method", surface_method, "max-sv | leakage")->capture_default_str();
    surface->add_option("--ris", surface_ris, "RIS mode")->capture_default_str();
    surface->add_option("--out", out_path, "Output CSV path, '-' for stdout")->required();

    auto* scenario = app.add_subcommand("scenario", "Scenario inspection");
    scenario->require_subcommand(1);
    auto* dump = scenario->add_subcommand("dump", "Print the resolved geometry as JSON");
    dump->add_option("--config", config_path, "Scenario JSON (defaults when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep) {
            ScenarioPtr sc = open_scenario(config_path);
            risdm_sweep* raw = nullptr;
            check(risdm_sweep_create(sc.get(), axis.c_str(), &raw));
            SweepPtr sw(raw);
            const std::vector<double> v = parse_values(values);
            check(risdm_sweep_set_values(sw.get(), v.data(), v.size()));
            check(risdm_sweep_set_methods(sw.get(), methods.c_str()));
            check(risdm_sweep_set_ris_modes(sw.get(), ris.c_str()));
            check(risdm_sweep_set_pa_modes(sw.get(), pa.c_str()));
            check(risdm_sweep_set_trials(sw.get(), trials));
            if (*seed_opt) {
                check(risdm_sweep_set_seed(sw.get(), seed));
                check(risdm_sweep_set_pa_seed(sw.get(), seed));
            }
            if (*pa_seed_opt) check(risdm_sweep_set_pa_seed(sw.get(), pa_seed));
            check(risdm_sweep_set_grid_steps(sw.get(), step_1d, step_2d));
            check(risdm_sweep_set_threads(sw.get(), threads));
            char* csv = nullptr;
            check(risdm_sweep_run_csv(sw.get(), &csv));
            StringPtr text(csv);
            emit(out_path, text.get());
        } else if (*surface) {
            ScenarioPtr sc = open_scenario(config_path);
            char* csv = nullptr;
            check(risdm_pa_surface_csv(sc.get(), step, surface_method.c_str(), surface_ris.c_str(), &csv));
            StringPtr text(csv);
            emit(out_path, text.get());
        } else if (*dump) {
            ScenarioPtr sc = open_scenario(config_path);
            char* json = nullptr;
            check(risdm_scenario_dump(sc.get(), &json));
            StringPtr text(json);
            std::printf("%s\n", text.get());
        }
    } catch (const Failure& f) {
        return static_cast<int>(f.status) == 0 ? 1 : (f.status == RISDM_ERR_INTERNAL ? 3 : 2);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }
    return 0;
}
