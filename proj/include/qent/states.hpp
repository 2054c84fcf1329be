#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qent/qmat.hpp"

// Canonical three-qubit pure states, their density matrices and reductions,
// and seeded sampling of the parameter space.

namespace qent {

// Five-amplitude canonical form of a three-qubit pure state.
struct CanonicalParams {
    std::array<double, 5> lambda{};  // non-negative, unit norm
    double phi = 0.0;                // [0, pi]

    void validate() const;  // throws std::domain_error on invariant violation
};

struct StateVector {
    std::array<Complex, 8> amp{};

    double norm_sq() const;
};

enum class Pair { p12, p13, p23 };

const char* pair_name(Pair p);
Pair pair_from_string(const std::string& s);

// Amplitudes at |000>, |100>, |101>, |110>, |111> are
// l0, l1 e^{i phi}, l2, l3, l4; qubit 1 is the most significant bit.
StateVector canonical_state(const CanonicalParams& p);

// Normalized copy of eight raw amplitudes.
StateVector from_amplitudes(const std::array<Complex, 8>& a);

// rho = |psi><psi|
ComplexMatrix density(const StateVector& s);

// Two-qubit reduction of an 8x8 density matrix.
ComplexMatrix reduce_pair(const ComplexMatrix& rho3, Pair sel);

// Single-qubit reduction (qubit in 1..3).
ComplexMatrix reduce_single(const ComplexMatrix& rho3, int qubit);

// Amplitudes from |normal| draws normalized to the unit 4-sphere, phi
// uniform on [0, pi]; deterministic per seed.
CanonicalParams sample_canonical(std::uint64_t seed);

}  // namespace qent
