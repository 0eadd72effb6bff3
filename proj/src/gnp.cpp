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
#include "gnpvlc/gnp.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gnpvlc {

void GnpPathResponse::validate() const {
    if (!(a_bar_l >= 0.0 && a_bar_l <= 1.0) || !(a_bar_r >= 0.0 && a_bar_r <= 1.0))
        throw std::invalid_argument("GnpPathResponse: transmittance outside [0, 1]");
    if (!std::isfinite(delta_phi))
        throw std::invalid_argument("GnpPathResponse: non-finite retardation");
}

bool GnpPathResponse::is_chiroptical(double margin) const {
    return std::abs(a_bar_l - a_bar_r) >= margin;
}

double GnpPathResponse::asymmetry() const {
    if (a_bar_l <= 0.0 || a_bar_r <= 0.0)
        throw std::domain_error("GnpPathResponse: asymmetry undefined for zero transmittance");
    const double r = std::sqrt(a_bar_l / a_bar_r);
    return r + 1.0 / r;
}

void GnpPropertyRanges::validate() const {
    auto check = [](const Interval& iv, const char* name) {
        if (!(iv.lo >= 0.0 && iv.hi <= 1.0 && iv.lo <= iv.hi))
            throw std::invalid_argument(std::string("GnpPropertyRanges: bad interval ") + name);
    };
    check(a_l, "a_l");
    check(a_r, "a_r");
    if (!(delta_phi_lo < delta_phi_hi))
        throw std::invalid_argument("GnpPropertyRanges: retardation bounds must satisfy lo < hi");
}

void PlateGeometry::validate() const {
    for (double v : {plate_area, hexagon_area, gnp_volume, gold_density, gold_price_per_gram})
        if (!(v > 0.0)) throw std::invalid_argument("PlateGeometry: fields must be positive");
    if (gnps_per_hexagon < 0.0)
        throw std::invalid_argument("PlateGeometry: negative particle count");
}

JonesMatrix plate_matrix(const GnpPathResponse& r) {
    r.validate();
    Mat2c m;
    m(0, 0) = std::sqrt(r.a_bar_l);
    m(1, 1) = std::sqrt(r.a_bar_r) * std::exp(cplx(0.0, r.delta_phi));
    return {m, PolBasis::Circular};
}

GnpPathResponse extract_properties(cplx e_l, cplx e_r) {
    const double ml = std::abs(e_l), mr = std::abs(e_r);
    if (ml <= 0.0 || mr <= 0.0)
        throw std::domain_error("extract_properties: zero amplitude (total absorption)");
    if (ml > 1.0 + 1e-12 || mr > 1.0 + 1e-12)
        throw std::domain_error("extract_properties: amplitude above 1 is not a passive plate");
    GnpPathResponse r;
    r.a_bar_l = std::min(ml * ml, 1.0);
    r.a_bar_r = std::min(mr * mr, 1.0);
    r.delta_phi = wrap_pm_pi(std::arg(e_r) - std::arg(e_l));
    return r;
}

GnpPathResponse sample_path_response(const GnpPropertyRanges& ranges, Rng& rng) {
    ranges.validate();
    GnpPathResponse r;
    r.a_bar_l = 1.0 - rng.uniform(ranges.a_l.lo, ranges.a_l.hi);
    r.a_bar_r = 1.0 - rng.uniform(ranges.a_r.lo, ranges.a_r.hi);
    r.delta_phi = rng.uniform(ranges.delta_phi_lo, ranges.delta_phi_hi);
    return r;
}

double plate_cost(const PlateGeometry& g) {
    g.validate();
    const double total_volume = g.plate_area / g.hexagon_area * g.gnps_per_hexagon * g.gnp_volume;
    const double grams = total_volume * g.gold_density * 1000.0;
    return grams * g.gold_price_per_gram;
}

std::vector<std::vector<GnpPathResponse>> load_gnp_table(std::istream& in) {
    std::map<std::pair<long, long>, GnpPathResponse> entries;
    long max_tx = -1, max_path = -1;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("tx_index", 0) == 0) continue;  // header row
        std::istringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 5)
            throw std::runtime_error("gnp table: line " + std::to_string(lineno) +
                                     ": expected 5 comma-separated fields");
        try {
            const long tx = std::stol(fields[0]);
            const long path = std::stol(fields[1]);
            GnpPathResponse r{std::stod(fields[2]), std::stod(fields[3]), std::stod(fields[4])};
            r.validate();
            if (tx < 0 || path < 0) throw std::invalid_argument("negative index");
            if (!entries.emplace(std::make_pair(tx, path), r).second)
                throw std::invalid_argument("duplicate (tx, path) key");
            max_tx = std::max(max_tx, tx);
            max_path = std::max(max_path, path);
        } catch (const std::exception& e) {
            throw std::runtime_error("gnp table: line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (max_tx < 0) return {};
    std::vector<std::vector<GnpPathResponse>> table(
        static_cast<size_t>(max_tx + 1),
        std::vector<GnpPathResponse>(static_cast<size_t>(max_path + 1)));
    size_t count = 0;
    for (const auto& [key, r] : entries) {
        table[static_cast<size_t>(key.first)][static_cast<size_t>(key.second)] = r;
        ++count;
    }
    if (count != table.size() * table[0].size())
        throw std::runtime_error("gnp table: missing (tx, path) entries; table must be dense");
    return table;
}

}  // namespace gnpvlc
