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
#ifndef GNPVLC_QUARTIC_HPP
#define GNPVLC_QUARTIC_HPP

#include <array>
#include <vector>

#include "gnpvlc/linalg.hpp"

namespace gnpvlc {

/// Evaluate a polynomial with descending coefficients at t (Horner).
cplx polyval(const std::vector<cplx>& coeffs, cplx t);

/// All complex roots of c0 t^2 + c1 t + c2 = 0 (c is descending).
std::vector<cplx> quadratic_roots(const std::array<cplx, 3>& c);

/// All complex roots of a cubic (descending coefficients), Cardano form.
std::vector<cplx> cubic_roots(const std::array<cplx, 4>& c);

/// All complex roots of a quartic (descending coefficients) via Ferrari's
/// factorization with Newton polishing. Near-zero leading coefficients fall
/// back to the lower-degree closed forms; if the closed form goes
/// ill-conditioned the roots are recovered by Durand-Kerner iteration.
/// Every returned root has residual |p(t)| <= 1e-8 * coefficient scale.
std::vector<cplx> quartic_roots(const std::array<cplx, 5>& c);

}  // namespace gnpvlc

#endif
