#pragma once

#include <cstdint>

#include "qent/measures.hpp"
#include "qent/qmat.hpp"

// Quantum and connected R-matrices, cubic classification of R^T R, and the
// maximal CHSH violation by three independent routes.

namespace qent {

struct CubicClassification {
    double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0;
    double gamma1 = 0.0, gamma2 = 0.0;
    double theta = 0.0;         // [0, pi/3]
    double discriminant = 0.0;  // gamma1^2 + gamma2^3
    double gamma = 0.0;         // maximal violation 2 sqrt(u1 + u2)
};

struct MeasurementSetting {
    Vec3 a{}, b{}, a2{}, b2{};
};

// R_jk = Tr(rho sigma_j x sigma_k)
Mat3 r_matrix(const ComplexMatrix& rho);

// R minus the outer product of the two single-qubit Bloch vectors.
Mat3 connected_r_matrix(const ComplexMatrix& rho);

// Classification from explicit cubic coefficients.
CubicClassification classify_from_alphas(double a1, double a2, double a3);

// Coefficients from charpoly3(R^T R), then the trigonometric closed form.
CubicClassification classify(const Mat3& r);

// Printed coefficient formulas for the quantum R-matrix, with the pair
// exchange rule applied for pairs 13 and 23.
std::array<double, 3> alpha_quantum(const MeasureSet& ms);

// Printed coefficient formulas for the connected R-matrix.
std::array<double, 3> alpha_connected(const MeasureSet& ms);

// 2 sqrt(u1 + u2) from the two largest eigenvalues of R^T R.
double max_violation_eigen(const Mat3& r);

// CHSH expectation sum_{jk} a_j R_jk (b_k + b2_k) + a2_j R_jk (b_k - b2_k).
double bell_value(const Mat3& r, const MeasurementSetting& m);

struct ChshResult {
    double value = 0.0;
    MeasurementSetting setting;
};

// Coordinate-ascent maximization of bell_value with closed-form half steps,
// best of `restarts` seeded starts.
ChshResult chsh_optimize(const Mat3& r, int restarts, std::uint64_t seed);

}  // namespace qent
