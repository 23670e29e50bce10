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

#include "risdm/config_json.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "risdm/error.hpp"

namespace risdm {

namespace {

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

constexpr std::array<Node, 5> kNodes = {Node::Alice, Node::Bob, Node::Eve, Node::Ris1, Node::Ris2};

void only_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
    if (!obj.is_object()) fail(ErrorCode::Parse, where + ": expected an object");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (std::string_view a : allowed) known = known || key == a;
        if (!known) fail(ErrorCode::Parse, where + ": unknown field '" + key + "'");
    }
}

template <class T>
void read(const json& obj, const char* key, T& out, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) return;
    try {
        out = it->get<T>();
    } catch (const json::exception&) {
        fail(ErrorCode::Parse, where + ": field '" + key + "' has the wrong type");
    }
}

void read_int(const json& obj, const char* key, int& out) {
    const auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_number_integer()) fail(ErrorCode::Parse, std::string("config: field '") + key + "' must be an integer");
    out = it->get<int>();
}

void read_pose(const json& obj, NodePose& pose, const std::string& where) {
    only_keys(obj, {"x", "y", "orientation"}, where);
    read(obj, "x", pose.x, where);
    read(obj, "y", pose.y, where);
    read(obj, "orientation", pose.orientation, where);
}

void read_placement(const json& obj, Placement& p) {
    only_keys(obj, {"alice", "bob", "eve", "ris1", "ris2", "link_overrides"}, "placement");
    for (Node n : kNodes) {
        const std::string name(node_name(n));
        if (obj.contains(name)) read_pose(obj.at(name), p.pose(n), "placement." + name);
    }
    if (!obj.contains("link_overrides")) return;
    const json& lo = obj.at("link_overrides");
    if (!lo.is_object()) fail(ErrorCode::Parse, "placement.link_overrides: expected an object");
    for (const auto& [key, value] : lo.items()) {
        const auto link = link_from_name(key);
        if (!link) fail(ErrorCode::Parse, "placement.link_overrides: unknown link '" + key + "'");
        const std::string where = "placement.link_overrides." + key;
        only_keys(value, {"theta_t", "theta_r", "distance"}, where);
        auto field = [&](const char* name) -> std::optional<double> {
            if (!value.contains(name)) return std::nullopt;
            double v = 0.0;
            read(value, name, v, where);
            return v;
        };
        p.overrides[*link] = LinkOverride{field("theta_t"), field("theta_r"), field("distance")};
    }
}

ordered pose_json(const NodePose& p) { return {{"x", p.x}, {"y", p.y}, {"orientation", p.orientation}}; }

ordered config_object(const ScenarioConfig& c) {
    ordered placement;
    for (Node n : kNodes) placement[std::string(node_name(n))] = pose_json(c.placement.pose(n));
    ordered overrides = ordered::object();
    for (const auto& [link, o] : c.placement.overrides) {
        ordered e = ordered::object();
        if (o.theta_t) e["theta_t"] = *o.theta_t;
        if (o.theta_r) e["theta_r"] = *o.theta_r;
        if (o.distance) e["distance"] = *o.distance;
        overrides[std::string(link_name(link))] = e;
    }
    placement["link_overrides"] = overrides;
    return {{"Na", c.na},
            {"Nb", c.nb},
            {"Ne", c.ne},
            {"M", c.m},
            {"d_over_lambda", c.d_over_lambda},
            {"Pa_dbm", c.pa_dbm},
            {"Pb_dbm", c.pb_dbm},
            {"beta1", c.beta1},
            {"beta2", c.beta2},
            {"sigma2_e_dbm", c.sigma2_e_dbm},
            {"noise_ratio", c.noise_ratio},
            {"pathloss_alpha", c.pathloss_alpha},
            {"pathloss_exp", {{"direct", c.pathloss_exp.direct}, {"ris", c.pathloss_exp.ris}}},
            {"placement", placement},
            {"seed", c.seed}};
}

} // namespace

ScenarioConfig config_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail(ErrorCode::Parse, std::string("config: ") + e.what());
    }
    only_keys(doc,
              {"Na", "Nb", "Ne", "M", "d_over_lambda", "Pa_dbm", "Pb_dbm", "beta1", "beta2", "sigma2_e_dbm",
               "noise_ratio", "pathloss_alpha", "pathloss_exp", "placement", "seed"},
              "config");
    ScenarioConfig c;
    read_int(doc, "Na", c.na);
    read_int(doc, "Nb", c.nb);
    read_int(doc, "Ne", c.ne);
    read_int(doc, "M", c.m);
    read(doc, "d_over_lambda", c.d_over_lambda, "config");
    read(doc, "Pa_dbm", c.pa_dbm, "config");
    read(doc, "Pb_dbm", c.pb_dbm, "config");
    read(doc, "beta1", c.beta1, "config");
    read(doc, "beta2", c.beta2, "config");
    read(doc, "sigma2_e_dbm", c.sigma2_e_dbm, "config");
    read(doc, "noise_ratio", c.noise_ratio, "config");
    read(doc, "pathloss_alpha", c.pathloss_alpha, "config");
    if (doc.contains("pathloss_exp")) {
        const json& pe = doc.at("pathloss_exp");
        if (pe.is_number()) {
            c.pathloss_exp.direct = c.pathloss_exp.ris = pe.get<double>();
        } else {
            only_keys(pe, {"direct", "ris"}, "pathloss_exp");
            read(pe, "direct", c.pathloss_exp.direct, "pathloss_exp");
            read(pe, "ris", c.pathloss_exp.ris, "pathloss_exp");
        }
    }
    if (doc.contains("placement")) read_placement(doc.at("placement"), c.placement);
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned() && !(doc.at("seed").is_number_integer() && doc.at("seed").get<long long>() >= 0))
            fail(ErrorCode::Parse, "config: seed must be a non-negative integer");
        c.seed = doc.at("seed").get<std::uint64_t>();
    }
    c.validate();
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot open config '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

std::string config_to_json(const ScenarioConfig& config) { return config_object(config).dump(2); }

std::string scenario_dump_json(const Scenario& s) {
    ordered links = ordered::object();
    for (Link l : kAllLinks) {
        const LinkGeometry& g = s.geometry[l];
        links[std::string(link_name(l))] = {
            {"theta_t", g.theta_t}, {"theta_r", g.theta_r}, {"distance", g.distance}, {"gain", g.gain}};
    }
    const CompositeGains& cg = s.channels.composite;
    ordered doc;
    doc["config"] = config_object(s.config);
    doc["links"] = links;
    doc["composite_gains"] = {{"ai1b", cg.ai1b}, {"ai2b", cg.ai2b}, {"bi1b", cg.bi1b}, {"bi2b", cg.bi2b},
                              {"ai1e", cg.ai1e}, {"ai2e", cg.ai2e}, {"bi1e", cg.bi1e}, {"bi2e", cg.bi2e}};
    doc["power_mw"] = {{"Pa", s.config.pa_mw()}, {"Pb", s.config.pb_mw()}};
    doc["noise_mw"] = {
        {"sigma2_a", s.config.sigma2_a()}, {"sigma2_b", s.config.sigma2_b()}, {"sigma2_e", s.config.sigma2_e()}};
    return doc.dump(2);
}

} // namespace risdm
