#pragma once

#include "qent/qmat.hpp"
#include "qent/states.hpp"

// The five entanglement measures E1..E5, bipartite and Wootters
// concurrences, and negativity.

namespace qent {

struct MeasureSet {
    // State-level roles: e1 = 2 l0 l3, e2 = 2 l0 l2,
    // e3 = 2 |l1 l4 e^{i phi} - l2 l3|, e4 = 2 l0 l4,
    // e5 = l0^2 (l2^2 l3^2 - l1^2 l4^2 + |l1 l4 e^{i phi} - l2 l3|^2).
    double e1 = 0.0, e2 = 0.0, e3 = 0.0, e4 = 0.0, e5 = 0.0;
    Pair pair = Pair::p12;

    // (A, B, C): the selected pair's own measure first, the other two after.
    std::array<double, 3> pair_adapted() const;
};

struct NegativityResult {
    double negativity = 0.0;
    double log_negativity = 0.0;  // ln(2N + 1)
};

MeasureSet measures_from_params(const CanonicalParams& p, Pair sel);

// sqrt(max(0, 2(1 - Tr rho_A^2)))
double bipartite_concurrence(const ComplexMatrix& rho_a);

// Tr((rho_a x rho_b) rho_pair) - Tr(rho_a^3)/3 - Tr(rho_b^3)/3
//   + (e1^2 + e2^2 + e3^2 + e4^2)/4 - 1/3
double e5_matrix(const ComplexMatrix& rho_pair, const ComplexMatrix& rho_a,
                 const ComplexMatrix& rho_b, const MeasureSet& ms);

// Spin-flip concurrence of a two-qubit mixed state.
double wootters_concurrence(const ComplexMatrix& rho);

NegativityResult negativity(const ComplexMatrix& rho);

}  // namespace qent
