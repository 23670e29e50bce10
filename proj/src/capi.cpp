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

#include "risdm/risdm.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "risdm/config_json.hpp"
#include "risdm/error.hpp"
#include "risdm/sim.hpp"

struct risdm_scenario {
    risdm::ScenarioConfig config;
};

struct risdm_sweep {
    risdm::ScenarioConfig config;
    risdm::SweepSpec spec;
};

namespace {

thread_local std::string last_error;

risdm_status status_of(risdm::ErrorCode code) { return static_cast<risdm_status>(static_cast<int>(code)); }

template <class F>
risdm_status guarded(F&& body) {
    try {
        body();
        last_error.clear();
        return RISDM_OK;
    } catch (const risdm::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return RISDM_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return RISDM_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) risdm::fail(risdm::ErrorCode::InvalidInput, std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

risdm::ScalarGains gains_from(const double* g) {
    require(g, "gains");
    risdm::ScalarGains s;
    s.s1 = g[0], s.s2 = g[1], s.s3 = g[2], s.s4 = g[3], s.s5 = g[4], s.s6 = g[5], s.s7 = g[6], s.s8 = g[7];
    s.sigma2_a = g[8], s.sigma2_b = g[9], s.sigma2_e = g[10];
    s.validate();
    return s;
}

template <class T, class F>
T parse_one(const char* name, F from_name, const char* what) {
    require(name, what);
    const auto v = from_name(name);
    if (!v) risdm::fail(risdm::ErrorCode::InvalidInput, std::string("unknown ") + what + " '" + name + "'");
    return *v;
}

} // namespace

extern "C" {

const char* risdm_version(void) { return "0.1.0"; }

const char* risdm_last_error(void) { return last_error.c_str(); }

const char* risdm_status_string(risdm_status status) {
    if (status == RISDM_OK) return "ok";
    if (status == RISDM_ERR_INTERNAL) return "internal error";
    if (status >= RISDM_ERR_INVALID_INPUT && status <= RISDM_ERR_PARSE)
        return risdm::to_string(static_cast<risdm::ErrorCode>(status));
    return "unknown status";
}

void risdm_string_free(char* str) { std::free(str); }

risdm_status risdm_scenario_from_json(const char* json, risdm_scenario** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new risdm_scenario{risdm::config_from_json(json)};
    });
}

risdm_status risdm_scenario_load(const char* path, risdm_scenario** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new risdm_scenario{risdm::load_config(path)};
    });
}

risdm_status risdm_scenario_default(risdm_scenario** out) {
    return guarded([&] {
        require(out, "out");
        *out = new risdm_scenario{};
    });
}

void risdm_scenario_free(risdm_scenario* scenario) { delete scenario; }

risdm_status risdm_scenario_dump(const risdm_scenario* scenario, char** out_json) {
    return guarded([&] {
        require(scenario, "scenario");
        require(out_json, "out_json");
        *out_json = copy_string(risdm::scenario_dump_json(risdm::build_scenario(scenario->config)));
    });
}

risdm_status risdm_scenario_gains(const risdm_scenario* scenario, const char* method, const char* ris_mode,
                                  uint64_t phase_seed, double* gains_out) {
    return guarded([&] {
        require(scenario, "scenario");
        require(gains_out, "gains_out");
        const auto m = parse_one<risdm::Method>(method, risdm::method_from_name, "method");
        const auto r = parse_one<risdm::RisMode>(ris_mode, risdm::ris_mode_from_name, "RIS mode");
        const risdm::Evaluation ev = risdm::evaluate(risdm::build_scenario(scenario->config), r, m, phase_seed);
        const auto s = ev.gains.s();
        for (std::size_t i = 0; i < 8; ++i) gains_out[i] = s[i];
        gains_out[8] = ev.gains.sigma2_a;
        gains_out[9] = ev.gains.sigma2_b;
        gains_out[10] = ev.gains.sigma2_e;
    });
}

risdm_status risdm_ssr(const double* gains, double beta1, double beta2, double* ssr_out) {
    return guarded([&] {
        require(ssr_out, "ssr_out");
        *ssr_out = risdm::ssr(beta1, beta2, gains_from(gains));
    });
}

risdm_status risdm_optimize_pa(const double* gains, const char* mode, double step, uint64_t seed,
                               double* beta1_out, double* beta2_out, double* ssr_out) {
    return guarded([&] {
        require(beta1_out, "beta1_out");
        require(beta2_out, "beta2_out");
        require(ssr_out, "ssr_out");
        const risdm::ScalarGains g = gains_from(gains);
        const auto pm = parse_one<risdm::PaMode>(mode, risdm::pa_mode_from_name, "PA mode");
        risdm::PaOutcome out;
        switch (pm) {
        case risdm::PaMode::Fixed: out = risdm::fixed_pa(g, *beta1_out, *beta2_out); break;
        case risdm::PaMode::Epa: out = risdm::epa(g); break;
        case risdm::PaMode::Es1d: out = risdm::es_1d(g, step); break;
        case risdm::PaMode::Es2d: out = risdm::es_2d(g, step); break;
        case risdm::PaMode::Hicf: out = risdm::hicf(g, seed); break;
        }
        *beta1_out = out.beta1;
        *beta2_out = out.beta2;
        *ssr_out = out.ssr;
    });
}

risdm_status risdm_sweep_create(const risdm_scenario* scenario, const char* axis, risdm_sweep** out) {
    return guarded([&] {
        require(scenario, "scenario");
        require(out, "out");
        auto* s = new risdm_sweep{scenario->config, {}};
        s->spec.axis = parse_one<risdm::SweepAxis>(axis, risdm::axis_from_name, "axis");
        s->spec.seed = scenario->config.seed;
        s->spec.pa.seed = scenario->config.seed;
        *out = s;
    });
}

void risdm_sweep_free(risdm_sweep* sweep) { delete sweep; }

risdm_status risdm_sweep_set_values(risdm_sweep* sweep, const double* values, size_t count) {
    return guarded([&] {
        require(sweep, "sweep");
        if (count > 0) require(values, "values");
        std::vector<double> v(values, values + count);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!std::isfinite(v[i]) || (i > 0 && !(v[i] > v[i - 1])))
                risdm::fail(risdm::ErrorCode::InvalidInput, "sweep: axis values must be finite and strictly increasing");
        sweep->spec.values = std::move(v);
    });
}

risdm_status risdm_sweep_set_methods(risdm_sweep* sweep, const char* list) {
    return guarded([&] {
        require(sweep, "sweep");
        require(list, "list");
        sweep->spec.methods = risdm::parse_methods(list);
    });
}

risdm_status risdm_sweep_set_ris_modes(risdm_sweep* sweep, const char* list) {
    return guarded([&] {
        require(sweep, "sweep");
        require(list, "list");
        sweep->spec.ris_modes = risdm::parse_ris_modes(list);
    });
}

risdm_status risdm_sweep_set_pa_modes(risdm_sweep* sweep, const char* list) {
    return guarded([&] {
        require(sweep, "sweep");
        require(list, "list");
        sweep->spec.pa_modes = risdm::parse_pa_modes(list);
    });
}

risdm_status risdm_sweep_set_trials(risdm_sweep* sweep, int trials) {
    return guarded([&] {
        require(sweep, "sweep");
        if (trials < 1) risdm::fail(risdm::ErrorCode::InvalidInput, "trials must be at least 1");
        sweep->spec.trials = trials;
    });
}

risdm_status risdm_sweep_set_seed(risdm_sweep* sweep, uint64_t seed) {
    return guarded([&] {
        require(sweep, "sweep");
        sweep->spec.seed = seed;
    });
}

risdm_status risdm_sweep_set_pa_seed(risdm_sweep* sweep, uint64_t seed) {
    return guarded([&] {
        require(sweep, "sweep");
        sweep->spec.pa.seed = seed;
    });
}

risdm_status risdm_sweep_set_grid_steps(risdm_sweep* sweep, double step_1d, double step_2d) {
    return guarded([&] {
        require(sweep, "sweep");
        for (double s : {step_1d, step_2d})
            if (!(s > 0.0 && s <= 0.5)) risdm::fail(risdm::ErrorCode::InvalidInput, "grid step must lie in (0, 0.5]");
        sweep->spec.pa.grid_step_1d = step_1d;
        sweep->spec.pa.grid_step_2d = step_2d;
    });
}

risdm_status risdm_sweep_set_threads(risdm_sweep* sweep, unsigned threads) {
    return guarded([&] {
        require(sweep, "sweep");
        sweep->spec.threads = threads;
    });
}

risdm_status risdm_sweep_run_csv(const risdm_sweep* sweep, char** out_csv) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out_csv, "out_csv");
        *out_csv = copy_string(risdm::emit_csv(risdm::run_sweep(sweep->config, sweep->spec)));
    });
}

risdm_status risdm_pa_surface_csv(const risdm_scenario* scenario, double step, const char* method,
                                  const char* ris_mode, char** out_csv) {
    return guarded([&] {
        require(scenario, "scenario");
        require(out_csv, "out_csv");
        const auto m = parse_one<risdm::Method>(method, risdm::method_from_name, "method");
        const auto r = parse_one<risdm::RisMode>(ris_mode, risdm::ris_mode_from_name, "RIS mode");
        *out_csv = copy_string(risdm::emit_csv(risdm::pa_surface(scenario->config, step, m, r)));
    });
}

risdm_status risdm_write_file(const char* path, const char* text) {
    return guarded([&] {
        require(path, "path");
        require(text, "text");
        risdm::write_text(path, text);
    });
}

} // extern "C"
