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

#include "risdm/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>
#include <tuple>

#include "risdm/error.hpp"
#include "risdm/seed.hpp"

namespace risdm {

namespace {

constexpr std::array<std::pair<SweepAxis, std::string_view>, 4> kAxisNames = {{
    {SweepAxis::PowerDbm, "power_dbm"},
    {SweepAxis::ElementsM, "elements_m"},
    {SweepAxis::Beta, "beta"},
    {SweepAxis::DistanceAb, "distance_ab"},
}};

template <class T, class F>
std::vector<T> parse_list(std::string_view list, F from_name, const char* what) {
    std::vector<T> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const std::size_t end = std::min(list.find(',', pos), list.size());
        std::string_view item = list.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        const auto v = from_name(item);
        if (!v) fail(ErrorCode::InvalidInput, std::string("unknown ") + what + " '" + std::string(item) + "'");
        if (std::find(out.begin(), out.end(), *v) != out.end())
            fail(ErrorCode::InvalidInput, std::string("repeated ") + what + " '" + std::string(item) + "'");
        out.push_back(*v);
        pos = end + 1;
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Runs task(i) for i in [0, n) on a small pool; the first failure is rethrown.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F task) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct Task {
    std::size_t axis_index;
    Method method;
    RisMode ris_mode;
    int trial;
};

} // namespace

std::string_view axis_name(SweepAxis axis) noexcept {
    for (const auto& [a, n] : kAxisNames)
        if (a == axis) return n;
    return "?";
}

std::optional<SweepAxis> axis_from_name(std::string_view name) noexcept {
    for (const auto& [a, n] : kAxisNames)
        if (n == name) return a;
    return std::nullopt;
}

std::vector<Method> parse_methods(std::string_view list) { return parse_list<Method>(list, method_from_name, "method"); }
std::vector<RisMode> parse_ris_modes(std::string_view list) {
    return parse_list<RisMode>(list, ris_mode_from_name, "RIS mode");
}
std::vector<PaMode> parse_pa_modes(std::string_view list) {
    return parse_list<PaMode>(list, pa_mode_from_name, "PA mode");
}

void SweepSpec::validate() const {
    if (values.empty()) fail(ErrorCode::InvalidInput, "sweep: no axis values");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) fail(ErrorCode::InvalidInput, "sweep: axis values must be finite");
        if (i > 0 && !(values[i] > values[i - 1]))
            fail(ErrorCode::InvalidInput, "sweep: axis values must be strictly increasing");
    }
    if (methods.empty() || ris_modes.empty() || pa_modes.empty())
        fail(ErrorCode::InvalidInput, "sweep: methods, RIS modes and PA modes must be nonempty");
    if (trials < 1) fail(ErrorCode::InvalidInput, "sweep: trials must be at least 1");
}

ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, double value) {
    ScenarioConfig c = base;
    switch (axis) {
    case SweepAxis::PowerDbm:
        c.pa_dbm = c.pb_dbm = value;
        break;
    case SweepAxis::ElementsM:
        if (value != std::floor(value) || value < 1.0 || value > 1e7)
            fail(ErrorCode::InvalidInput, "sweep: elements_m = " + fmt(value) + " is not a positive integer");
        c.m = static_cast<int>(value);
        break;
    case SweepAxis::Beta:
        c.beta1 = c.beta2 = value;
        break;
    case SweepAxis::DistanceAb: {
        if (!(value > 0.0)) fail(ErrorCode::InvalidInput, "sweep: distance_ab values must be positive");
        NodePose& bob = c.placement.bob;
        const NodePose& alice = c.placement.alice;
        const double dx = bob.x - alice.x, dy = bob.y - alice.y;
        const double d = std::hypot(dx, dy);
        if (d == 0.0) fail(ErrorCode::InvalidGeometry, "sweep: Alice and Bob coincide");
        bob.x = alice.x + dx / d * value;
        bob.y = alice.y + dy / d * value;
        break;
    }
    }
    c.validate();
    return c;
}

std::vector<SweepRecord> run_sweep(const ScenarioConfig& config, const SweepSpec& spec) {
    config.validate();
    spec.validate();

    std::vector<Scenario> scenarios(spec.values.size());
    parallel_for(spec.values.size(), spec.threads, [&](std::size_t i) {
        scenarios[i] = build_scenario(apply_axis(config, spec.axis, spec.values[i]));
    });

    std::vector<Task> tasks;
    for (std::size_t a = 0; a < spec.values.size(); ++a)
        for (Method m : spec.methods)
            for (RisMode r : spec.ris_modes) {
                const int trials = r == RisMode::Random ? spec.trials : 1;
                for (int t = 0; t < trials; ++t) tasks.push_back({a, m, r, t});
            }

    const std::size_t per_task = spec.pa_modes.size();
    std::vector<SweepRecord> records(tasks.size() * per_task);
    parallel_for(tasks.size(), spec.threads, [&](std::size_t k) {
        const Task& t = tasks[k];
        const Scenario& sc = scenarios[t.axis_index];
        const std::uint64_t sub_seed = mix_seed(spec.seed, t.axis_index, static_cast<std::uint64_t>(t.trial));
        try {
            const Evaluation ev = evaluate(sc, t.ris_mode, t.method, sub_seed);
            for (std::size_t p = 0; p < per_task; ++p) {
                const PaOutcome pa = allocate_power(ev.gains, sc.config, spec.pa_modes[p], spec.pa);
                SweepRecord& r = records[k * per_task + p];
                r.axis_value = spec.values[t.axis_index];
                r.axis_index = t.axis_index;
                r.method = t.method;
                r.ris_mode = t.ris_mode;
                r.pa_mode = spec.pa_modes[p];
                r.beta1 = pa.beta1;
                r.beta2 = pa.beta2;
                r.ssr_bits = pa.ssr;
                r.trial = t.trial;
                r.seed = sub_seed;
            }
        } catch (const Error& e) {
            fail(e.code(), std::string(e.what()) + " [" + std::string(axis_name(spec.axis)) + "=" +
                               fmt(spec.values[t.axis_index]) + ", method=" + std::string(method_name(t.method)) +
                               ", ris=" + std::string(ris_mode_name(t.ris_mode)) +
                               ", trial=" + std::to_string(t.trial) + "]");
        }
    });

    std::stable_sort(records.begin(), records.end(), [](const SweepRecord& x, const SweepRecord& y) {
        return std::tie(x.axis_index, x.method, x.ris_mode, x.pa_mode, x.trial) <
               std::tie(y.axis_index, y.method, y.ris_mode, y.pa_mode, y.trial);
    });
    return records;
}

std::vector<SweepRecord> pa_surface(const ScenarioConfig& config, double step, Method method, RisMode ris_mode) {
    if (!(step > 0.0 && step <= 0.5)) fail(ErrorCode::InvalidInput, "pa_surface: step must lie in (0, 0.5]");
    const Scenario sc = build_scenario(config);
    const Evaluation ev = evaluate(sc, ris_mode, method, config.seed);
    const auto n = static_cast<long>(std::llround(1.0 / step));
    std::vector<double> axis;
    for (long k = 0; k <= n && static_cast<double>(k) * step < 1.0; ++k) axis.push_back(static_cast<double>(k) * step);
    axis.push_back(1.0);

    std::vector<SweepRecord> out;
    out.reserve(axis.size() * axis.size());
    for (std::size_t i = 0; i < axis.size(); ++i)
        for (double b2 : axis) {
            SweepRecord r;
            r.axis_value = axis[i];
            r.axis_index = i;
            r.method = method;
            r.ris_mode = ris_mode;
            r.surface = true;
            r.beta1 = axis[i];
            r.beta2 = b2;
            r.ssr_bits = ssr(axis[i], b2, ev.gains);
            r.seed = config.seed;
            out.push_back(r);
        }
    return out;
}

std::string emit_csv(const std::vector<SweepRecord>& records) {
    if (records.empty()) fail(ErrorCode::InvalidInput, "emit_csv: no records");
    std::string out(kCsvHeader);
    out += '\n';
    for (const SweepRecord& r : records) {
        out += fmt(r.axis_value);
        out += ',';
        out += method_name(r.method);
        out += ',';
        out += ris_mode_name(r.ris_mode);
        out += ',';
        out += r.surface ? std::string_view("surface") : pa_mode_name(r.pa_mode);
        out += ',' + fmt(r.beta1) + ',' + fmt(r.beta2) + ',' + fmt(r.ssr_bits) + ',' + std::to_string(r.trial) + ',' +
               std::to_string(r.seed) + '\n';
    }
    return out;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) fail(ErrorCode::Io, "write to '" + path.string() + "' failed");
}

} // namespace risdm
