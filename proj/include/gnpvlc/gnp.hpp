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
#ifndef GNPVLC_GNP_HPP
#define GNPVLC_GNP_HPP

#include <iosfwd>
#include <vector>

#include "gnpvlc/polarization.hpp"
#include "gnpvlc/rng.hpp"

namespace gnpvlc {

/// Chiroptical response of a chiral nanoparticle plate along one propagation
/// path: intensity transmittances for the LCP/RCP components and the phase
/// retardation difference between them.
struct GnpPathResponse {
    double a_bar_l = 1.0;   ///< LCP transmittance in [0, 1]
    double a_bar_r = 1.0;   ///< RCP transmittance in [0, 1]
    double delta_phi = 0.0; ///< retardation difference, rad

    /// Range/finiteness checks. Throws std::invalid_argument on violation.
    void validate() const;

    /// True when the LCP/RCP transmittances differ by at least `margin`,
    /// i.e. the plate is chiroptically active and u = sqrt(aL/aR) +
    /// sqrt(aR/aL) > 2 strictly.
    bool is_chiroptical(double margin = 1e-6) const;

    /// u = sqrt(a_bar_l/a_bar_r) + sqrt(a_bar_r/a_bar_l), the absorption
    /// asymmetry factor entering the angle optimizers.
    double asymmetry() const;
};

struct Interval {
    double lo = 0.0, hi = 0.0;
};

/// Sampling ranges for the plate response: absorption intervals (not
/// transmittance) for LCP/RCP and retardation-difference bounds.
struct GnpPropertyRanges {
    Interval a_l;              ///< LCP absorption range, within [0, 1]
    Interval a_r;              ///< RCP absorption range, within [0, 1]
    double delta_phi_lo = 0.0; ///< rad
    double delta_phi_hi = 0.0; ///< rad

    void validate() const;
};

/// Geometry and material inputs for the plate production-cost estimate.
struct PlateGeometry {
    double plate_area = 1e-4;            ///< m^2
    double hexagon_area = 12.0 * 1.7320508075688772 * 1e-14; ///< m^2
    double gnps_per_hexagon = 3.0;
    double gnp_volume = 8e-21;           ///< m^3, (200 nm)^3
    double gold_density = 19300.0;       ///< kg/m^3
    double gold_price_per_gram = 52.50;  ///< currency/gram; market input

    void validate() const;
};

/// Circular-basis Jones matrix of the plate: diag(sqrt(aL), sqrt(aR) e^{j dphi}).
JonesMatrix plate_matrix(const GnpPathResponse& r);

/// Recover the plate response from the measured circular amplitudes of
/// 0-degree linearly polarized probe light, i.e. from plate_matrix * [1, 1]^T.
/// delta_phi is returned wrapped to (-pi, pi]. Zero-magnitude inputs (total
/// absorption) are rejected.
GnpPathResponse extract_properties(cplx e_l, cplx e_r);

/// Draw one per-path response: absorption uniform in the configured ranges,
/// transmittance = 1 - absorption, retardation uniform in its bounds.
GnpPathResponse sample_path_response(const GnpPropertyRanges& ranges, Rng& rng);

/// Production cost of one plate in currency units:
/// (plate_area / hexagon_area) * gnps_per_hexagon * gnp_volume * density *
/// 1000 g/kg * price_per_gram.
double plate_cost(const PlateGeometry& g);

/// Load measured per-path responses from CSV rows
/// `tx_index,path_index,a_bar_l,a_bar_r,delta_phi`. Lines starting with '#'
/// and a literal header row are skipped. Result is indexed [tx][path]; the
/// table must be dense (every (tx, path) pair present exactly once).
std::vector<std::vector<GnpPathResponse>> load_gnp_table(std::istream& in);

}  // namespace gnpvlc

#endif
