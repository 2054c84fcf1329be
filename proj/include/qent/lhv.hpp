#pragma once

#include <cstdint>

#include "qent/qmat.hpp"

// Local-hidden-variable model with a vector observable: SVD-diagonalized
// correlator strengths q_j, exponents k_j = (1 - q_j) / (2 q_j), component
// probability tables and Monte Carlo correlator estimation.

namespace qent {

struct LhvModel {
    Vec3 q{};                       // non-negative, descending
    Vec3 k{};                       // (1 - q_j) / (2 q_j) for active j
    Mat3 basis_a, basis_b;          // r = basis_a diag(q) basis_b^T
    std::array<bool, 3> active{};   // q_j > 1e-12

    Vec3 to_basis_a(const Vec3& lab) const;  // a~ = basis_a^T a
    Vec3 to_basis_b(const Vec3& lab) const;
};

struct OutcomeDistribution {
    // Indexed (S_a, S_b) = (+,+), (+,-), (-,+), (-,-).
    std::array<double, 4> p{};
    bool is_signed = false;  // any entry < -1e-12

    double correlator() const;  // sum S_a S_b p
};

LhvModel build_model(const Mat3& r);

// F(v~, lambda)_j = lambda^{k_j} v~_j on active components, 0 otherwise.
// Takes a vector already rotated into the model basis.
Vec3 f_observable(const LhvModel& m, const Vec3& v_tilde, double lambda);

// sum_j q_j a~_j b~_j; a and b in lab coordinates.
double correlator_closed(const LhvModel& m, const Vec3& a, const Vec3& b);

// Joint spin table at fixed lambda; a and b in lab coordinates.
OutcomeDistribution joint_distribution(const LhvModel& m, const Vec3& a, const Vec3& b,
                                       double lambda);

struct McResult {
    double estimate = 0.0;
    double stderr_ = 0.0;
    double signed_fraction = 0.0;
};

// Monte Carlo estimate of the correlator: samples spins from the joint
// table when it is non-negative, accumulates the exact conditional
// expectation when a signed table occurs.
McResult mc_correlator(const LhvModel& m, const Vec3& a, const Vec3& b, std::uint64_t n,
                       std::uint64_t seed);

// P(k | a, b, lambda) for the three components.
Vec3 k_distribution(const LhvModel& m, const Vec3& a, const Vec3& b, double lambda);

// Max-norm difference of k_distribution between two setting pairs.
double freedom_of_choice_witness(const LhvModel& m, const Vec3& a1, const Vec3& b1,
                                 const Vec3& a2, const Vec3& b2, double lambda);

struct RescaledConditionals {
    double a_plus = 0.0;   // P(S_a = +1 | a, lambda, k)
    double a_minus = 0.0;  // P(S_a = -1 | a, lambda, k)
    double b_plus = 0.0;   // P(S_b = +1 | b, lambda, k)
    double b_minus = 0.0;
};

RescaledConditionals rescaled_conditionals(const LhvModel& m, const Vec3& a, const Vec3& b,
                                           double lambda, int component);

}  // namespace qent
