#ifndef GNPVLC_TEST_ORACLES_HPP
#define GNPVLC_TEST_ORACLES_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <vector>

#include "gnpvlc/linalg.hpp"

namespace testutil {

// Companion-matrix eigenvalue oracle for polynomial roots, independent of
// the closed-form solver under test.
inline std::vector<gnpvlc::cplx> companion_roots(const std::vector<gnpvlc::cplx>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) c(i, deg - 1) = -coeffs[static_cast<size_t>(deg - i)] / coeffs[0];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c);
    std::vector<gnpvlc::cplx> roots;
    for (int i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

// Every element of a has a partner in b within tol and vice versa.
inline bool sets_match(const std::vector<gnpvlc::cplx>& a, const std::vector<gnpvlc::cplx>& b,
                       double tol) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        double best = 1e300;
        for (const auto& y : b) best = std::min(best, std::abs(x - y));
        if (best > tol) return false;
    }
    for (const auto& y : b) {
        double best = 1e300;
        for (const auto& x : a) best = std::min(best, std::abs(x - y));
        if (best > tol) return false;
    }
    return true;
}

}  // namespace testutil

#endif
