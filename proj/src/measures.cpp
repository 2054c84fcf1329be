#include "qent/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace qent {

namespace {

// V sqrt(diag(w)) V^dagger with eigenvalues clamped at zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    Eigensystem es = hermitian_eigensystem(m);
    int n = m.dim();
    ComplexMatrix out(n);
    for (int k = 0; k < n; ++k) {
        double s = std::sqrt(std::max(0.0, es.values[k]));
        if (s == 0.0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += s * es.vectors(i, k) * std::conj(es.vectors(j, k));
    }
    return out;
}

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
    ComplexMatrix yy = kron(pauli_y(), pauli_y());
    ComplexMatrix conj(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) conj(i, j) = std::conj(rho(i, j));
    return yy * conj * yy;
}

}  // namespace

std::array<double, 3> MeasureSet::pair_adapted() const {
    switch (pair) {
        case Pair::p12: return {e1, e2, e3};
        case Pair::p13: return {e2, e1, e3};
        case Pair::p23: return {e3, e2, e1};
    }
    throw std::invalid_argument("MeasureSet: bad pair");
}

MeasureSet measures_from_params(const CanonicalParams& p, Pair sel) {
    p.validate();
    const auto& l = p.lambda;
    Complex cross = l[1] * l[4] * Complex{std::cos(p.phi), std::sin(p.phi)} - l[2] * l[3];
    double m = std::abs(cross);
    MeasureSet ms;
    ms.e1 = 2.0 * l[0] * l[3];
    ms.e2 = 2.0 * l[0] * l[2];
    ms.e3 = 2.0 * m;
    ms.e4 = 2.0 * l[0] * l[4];
    ms.e5 = l[0] * l[0] * (l[2] * l[2] * l[3] * l[3] - l[1] * l[1] * l[4] * l[4] + m * m);
    ms.pair = sel;
    return ms;
}

double bipartite_concurrence(const ComplexMatrix& rho_a) {
    double purity = (rho_a * rho_a).trace().real();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double e5_matrix(const ComplexMatrix& rho_pair, const ComplexMatrix& rho_a,
                 const ComplexMatrix& rho_b, const MeasureSet& ms) {
    double t = (kron(rho_a, rho_b) * rho_pair).trace().real();
    double ca = (rho_a * rho_a * rho_a).trace().real();
    double cb = (rho_b * rho_b * rho_b).trace().real();
    double esum = ms.e1 * ms.e1 + ms.e2 * ms.e2 + ms.e3 * ms.e3 + ms.e4 * ms.e4;
    // The constant -1/3 makes the expression vanish on product states and
    // agree with the amplitude form.
    return t - ca / 3.0 - cb / 3.0 + esum / 4.0 - 1.0 / 3.0;
}

double wootters_concurrence(const ComplexMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("wootters_concurrence: dimension must be 4");
    std::vector<double> ev = hermitian_eigenvalues(rho);
    if (ev.front() < -1e-8)
        throw std::domain_error("wootters_concurrence: input not positive semidefinite");
    // mu_j are the singular values of sqrt(rho) sqrt(rho~); this avoids the
    // sqrt-of-eigenvalue accuracy loss near zero.
    ComplexMatrix a = psd_sqrt(rho) * psd_sqrt(spin_flip(rho));
    std::vector<double> mu = singular_values(a);
    return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

NegativityResult negativity(const ComplexMatrix& rho) {
    std::vector<double> ev = hermitian_eigenvalues(partial_transpose(rho));
    NegativityResult r;
    for (double l : ev) r.negativity += (std::abs(l) - l) / 2.0;
    r.log_negativity = std::log(2.0 * r.negativity + 1.0);
    return r;
}

}  // namespace qent
