/**********
 *   Copyright 2026 The gnpvlc authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
\**********/
#include "gnpvlc/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gnpvlc {

using nlohmann::json;

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

namespace {

Vec3 vec3_from(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("config: " + field + " must be a 3-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json vec3_to(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Interval interval_from(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("config: " + field + " must be a 2-element array");
    return {j[0].get<double>(), j[1].get<double>()};
}

void parse_ranges(const json& j, const std::string& field, GnpPropertyRanges& out) {
    if (j.contains("a_l")) out.a_l = interval_from(j["a_l"], field + ".a_l");
    if (j.contains("a_r")) out.a_r = interval_from(j["a_r"], field + ".a_r");
    if (j.contains("delta_phi")) {
        const Interval iv = interval_from(j["delta_phi"], field + ".delta_phi");
        out.delta_phi_lo = iv.lo;
        out.delta_phi_hi = iv.hi;
    }
}

json ranges_to(const GnpPropertyRanges& r) {
    return json{{"a_l", {r.a_l.lo, r.a_l.hi}},
                {"a_r", {r.a_r.lo, r.a_r.hi}},
                {"delta_phi", {r.delta_phi_lo, r.delta_phi_hi}}};
}

template <typename T>
void get_if(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

void ExperimentConfig::validate() const {
    scene.validate();
    auto in_room = [&](const Vec3& p) {
        return p.x >= scene.room_min.x && p.x <= scene.room_max.x && p.y >= scene.room_min.y &&
               p.y <= scene.room_max.y && p.z >= scene.room_min.z && p.z <= scene.room_max.z;
    };
    if (!in_room(bob_position)) throw std::invalid_argument("config: bob_position outside room");
    bob_gnp.validate();
    eve_gnp.validate();
    if (!(zeta > 0.0)) throw std::invalid_argument("config: zeta must be positive");
    if (!(eta > 0.0)) throw std::invalid_argument("config: eta must be positive");
    if (!(i_dc > 0.0)) throw std::invalid_argument("config: i_dc must be positive");
    if (!(grid_step > 0.0)) throw std::invalid_argument("config: grid_step must be positive");
    if (!(grid_min < grid_max)) throw std::invalid_argument("config: grid_min must be < grid_max");
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (ser_p_tx_dbm.empty()) throw std::invalid_argument("config: ser_p_tx_dbm is empty");
    if (ser_eve_positions.empty()) throw std::invalid_argument("config: ser_eve_positions is empty");
    for (const auto& p : ser_eve_positions)
        if (!in_room(p)) throw std::invalid_argument("config: ser_eve_positions entry outside room");
    for (const auto& fe : multi_eve_fixed)
        if (!in_room(fe.position))
            throw std::invalid_argument("config: multi_eve_fixed entry outside room");
    if (!(bob_sweep_step > 0.0)) throw std::invalid_argument("config: bob_sweep_step must be positive");
    if (!(bob_sweep_min <= bob_sweep_max))
        throw std::invalid_argument("config: bob_sweep_min must be <= bob_sweep_max");
    if (!in_room(bob_sweep_eve)) throw std::invalid_argument("config: bob_sweep_eve outside room");
    if (gap_placements < 1) throw std::invalid_argument("config: gap_placements must be >= 1");
    if (gap_bins < 1) throw std::invalid_argument("config: gap_bins must be >= 1");
    if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
    if (!(std::abs(fixed_tx_angle) <= kPi / 2))
        throw std::invalid_argument("config: fixed_tx_angle outside [-pi/2, pi/2]");
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
    }

    static const std::vector<std::string> known = {
        "room_min", "room_max", "leds", "fov_rad", "pd_area_m2", "lambertian_order",
        "wall_reflectivity", "wall_patch_size_m", "wavelength_m", "bob_position",
        "bob_gnp", "eve_gnp", "zeta_w_per_a", "eta_a_per_w", "i_dc_a", "noise_dbm",
        "p_tx_dbm", "scheme", "tx_policy", "fixed_tx_angle_rad", "eve_policy",
        "grid_min_m", "grid_max_m", "grid_step_m", "grid_z_m", "trials", "eve_detector",
        "ser_p_tx_dbm", "ser_eve_positions", "multi_eve_fixed", "bob_sweep_min_m",
        "bob_sweep_max_m", "bob_sweep_step_m", "bob_sweep_eve", "gap_placements",
        "gap_bins", "seed", "threads"};
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const auto& k : known) ok = ok || k == item.key();
        if (!ok) throw std::invalid_argument("config: unknown field '" + item.key() + "'");
    }

    ExperimentConfig cfg;
    if (j.contains("room_min")) cfg.scene.room_min = vec3_from(j["room_min"], "room_min");
    if (j.contains("room_max")) cfg.scene.room_max = vec3_from(j["room_max"], "room_max");
    if (j.contains("leds")) {
        cfg.scene.led_positions.clear();
        for (const auto& e : j["leds"]) cfg.scene.led_positions.push_back(vec3_from(e, "leds"));
    }
    get_if(j, "fov_rad", cfg.scene.fov);
    get_if(j, "pd_area_m2", cfg.scene.pd_area);
    get_if(j, "lambertian_order", cfg.scene.lambertian_order);
    get_if(j, "wall_reflectivity", cfg.scene.wall_reflectivity);
    get_if(j, "wall_patch_size_m", cfg.scene.wall_patch_size);
    get_if(j, "wavelength_m", cfg.scene.wavelength);
    if (j.contains("bob_position")) cfg.bob_position = vec3_from(j["bob_position"], "bob_position");
    if (j.contains("bob_gnp")) parse_ranges(j["bob_gnp"], "bob_gnp", cfg.bob_gnp);
    if (j.contains("eve_gnp")) parse_ranges(j["eve_gnp"], "eve_gnp", cfg.eve_gnp);
    get_if(j, "zeta_w_per_a", cfg.zeta);
    get_if(j, "eta_a_per_w", cfg.eta);
    get_if(j, "i_dc_a", cfg.i_dc);
    get_if(j, "noise_dbm", cfg.noise_dbm);
    get_if(j, "p_tx_dbm", cfg.p_tx_dbm);

    if (j.contains("scheme")) {
        const std::string s = j["scheme"].get<std::string>();
        if (s == "gnp") cfg.scheme = Scheme::Gnp;
        else if (s == "baseline") cfg.scheme = Scheme::Baseline;
        else throw std::invalid_argument("config: scheme must be 'gnp' or 'baseline'");
    }
    if (j.contains("tx_policy")) {
        const std::string s = j["tx_policy"].get<std::string>();
        if (s == "suboptimal") cfg.tx_policy = TxAnglePolicy::Suboptimal;
        else if (s == "iterative") cfg.tx_policy = TxAnglePolicy::Iterative;
        else if (s == "fixed") cfg.tx_policy = TxAnglePolicy::Fixed;
        else throw std::invalid_argument("config: tx_policy must be suboptimal|iterative|fixed");
    }
    get_if(j, "fixed_tx_angle_rad", cfg.fixed_tx_angle);
    if (j.contains("eve_policy")) {
        const std::string s = j["eve_policy"].get<std::string>();
        if (s == "zero") cfg.eve_policy = EveAnglePolicy::Zero;
        else if (s == "match_bob") cfg.eve_policy = EveAnglePolicy::MatchBob;
        else throw std::invalid_argument("config: eve_policy must be zero|match_bob");
    }
    get_if(j, "grid_min_m", cfg.grid_min);
    get_if(j, "grid_max_m", cfg.grid_max);
    get_if(j, "grid_step_m", cfg.grid_step);
    get_if(j, "grid_z_m", cfg.grid_z);
    get_if(j, "trials", cfg.trials);
    if (j.contains("eve_detector")) {
        const std::string s = j["eve_detector"].get<std::string>();
        if (s == "joint") cfg.eve_detector = EveDetector::Joint;
        else if (s == "blind") cfg.eve_detector = EveDetector::Blind;
        else throw std::invalid_argument("config: eve_detector must be joint|blind");
    }
    if (j.contains("ser_p_tx_dbm")) cfg.ser_p_tx_dbm = j["ser_p_tx_dbm"].get<std::vector<double>>();
    if (j.contains("ser_eve_positions")) {
        cfg.ser_eve_positions.clear();
        for (const auto& e : j["ser_eve_positions"])
            cfg.ser_eve_positions.push_back(vec3_from(e, "ser_eve_positions"));
    }
    if (j.contains("multi_eve_fixed")) {
        cfg.multi_eve_fixed.clear();
        for (const auto& e : j["multi_eve_fixed"]) {
            FixedEve fe;
            fe.position = vec3_from(e.at("position"), "multi_eve_fixed.position");
            if (e.contains("theta_matches_bob"))
                fe.theta_matches_bob = e["theta_matches_bob"].get<bool>();
            cfg.multi_eve_fixed.push_back(fe);
        }
    }
    get_if(j, "bob_sweep_min_m", cfg.bob_sweep_min);
    get_if(j, "bob_sweep_max_m", cfg.bob_sweep_max);
    get_if(j, "bob_sweep_step_m", cfg.bob_sweep_step);
    if (j.contains("bob_sweep_eve")) cfg.bob_sweep_eve = vec3_from(j["bob_sweep_eve"], "bob_sweep_eve");
    get_if(j, "gap_placements", cfg.gap_placements);
    get_if(j, "gap_bins", cfg.gap_bins);
    get_if(j, "seed", cfg.seed);
    get_if(j, "threads", cfg.threads);

    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string ExperimentConfig::to_json_text(int indent) const {
    json leds = json::array();
    for (const auto& p : scene.led_positions) leds.push_back(vec3_to(p));
    json ser_eves = json::array();
    for (const auto& p : ser_eve_positions) ser_eves.push_back(vec3_to(p));
    json fixed = json::array();
    for (const auto& fe : multi_eve_fixed)
        fixed.push_back(json{{"position", vec3_to(fe.position)},
                             {"theta_matches_bob", fe.theta_matches_bob}});

    const json j{
        {"room_min", vec3_to(scene.room_min)},
        {"room_max", vec3_to(scene.room_max)},
        {"leds", leds},
        {"fov_rad", scene.fov},
        {"pd_area_m2", scene.pd_area},
        {"lambertian_order", scene.lambertian_order},
        {"wall_reflectivity", scene.wall_reflectivity},
        {"wall_patch_size_m", scene.wall_patch_size},
        {"wavelength_m", scene.wavelength},
        {"bob_position", vec3_to(bob_position)},
        {"bob_gnp", ranges_to(bob_gnp)},
        {"eve_gnp", ranges_to(eve_gnp)},
        {"zeta_w_per_a", zeta},
        {"eta_a_per_w", eta},
        {"i_dc_a", i_dc},
        {"noise_dbm", noise_dbm},
        {"p_tx_dbm", p_tx_dbm},
        {"scheme", to_string(scheme)},
        {"tx_policy", to_string(tx_policy)},
        {"fixed_tx_angle_rad", fixed_tx_angle},
        {"eve_policy", to_string(eve_policy)},
        {"grid_min_m", grid_min},
        {"grid_max_m", grid_max},
        {"grid_step_m", grid_step},
        {"grid_z_m", grid_z},
        {"trials", trials},
        {"eve_detector", eve_detector == EveDetector::Joint ? "joint" : "blind"},
        {"ser_p_tx_dbm", ser_p_tx_dbm},
        {"ser_eve_positions", ser_eves},
        {"multi_eve_fixed", fixed},
        {"bob_sweep_min_m", bob_sweep_min},
        {"bob_sweep_max_m", bob_sweep_max},
        {"bob_sweep_step_m", bob_sweep_step},
        {"bob_sweep_eve", vec3_to(bob_sweep_eve)},
        {"gap_placements", gap_placements},
        {"gap_bins", gap_bins},
        {"seed", seed},
        {"threads", threads},
    };
    return j.dump(indent);
}

const char* to_string(ExperimentConfig::Scheme s) {
    return s == ExperimentConfig::Scheme::Gnp ? "gnp" : "baseline";
}

const char* to_string(ExperimentConfig::TxAnglePolicy p) {
    switch (p) {
        case ExperimentConfig::TxAnglePolicy::Suboptimal: return "suboptimal";
        case ExperimentConfig::TxAnglePolicy::Iterative: return "iterative";
        default: return "fixed";
    }
}

const char* to_string(ExperimentConfig::EveAnglePolicy p) {
    return p == ExperimentConfig::EveAnglePolicy::Zero ? "zero" : "match_bob";
}

}  // namespace gnpvlc
