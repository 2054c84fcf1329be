#include "qent/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qent {

void CanonicalParams::validate() const {
    double s = 0.0;
    for (double l : lambda) {
        if (l < 0.0) throw std::domain_error("CanonicalParams: negative amplitude");
        s += l * l;
    }
    if (std::abs(s - 1.0) > 1e-12)
        throw std::domain_error("CanonicalParams: amplitudes not normalized");
    if (phi < 0.0 || phi > std::numbers::pi)
        throw std::domain_error("CanonicalParams: phi outside [0, pi]");
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const Complex& a : amp) s += std::norm(a);
    return s;
}

const char* pair_name(Pair p) {
    switch (p) {
        case Pair::p12: return "12";
        case Pair::p13: return "13";
        case Pair::p23: return "23";
    }
    return "?";
}

Pair pair_from_string(const std::string& s) {
    if (s == "12") return Pair::p12;
    if (s == "13") return Pair::p13;
    if (s == "23") return Pair::p23;
    throw std::invalid_argument("pair must be one of 12, 13, 23");
}

StateVector canonical_state(const CanonicalParams& p) {
    p.validate();
    StateVector s;
    s.amp[0] = Complex{p.lambda[0], 0.0};                                     // |000>
    s.amp[4] = p.lambda[1] * Complex{std::cos(p.phi), std::sin(p.phi)};       // |100>
    s.amp[5] = Complex{p.lambda[2], 0.0};                                     // |101>
    s.amp[6] = Complex{p.lambda[3], 0.0};                                     // |110>
    s.amp[7] = Complex{p.lambda[4], 0.0};                                     // |111>
    return s;
}

StateVector from_amplitudes(const std::array<Complex, 8>& a) {
    double n2 = 0.0;
    for (const Complex& x : a) n2 += std::norm(x);
    if (n2 == 0.0) throw std::domain_error("from_amplitudes: zero vector");
    double n = std::sqrt(n2);
    StateVector s;
    for (int i = 0; i < 8; ++i) s.amp[i] = a[i] / n;
    return s;
}

ComplexMatrix density(const StateVector& s) {
    ComplexMatrix rho(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) rho(i, j) = s.amp[i] * std::conj(s.amp[j]);
    return rho;
}

ComplexMatrix reduce_pair(const ComplexMatrix& rho3, Pair sel) {
    switch (sel) {
        case Pair::p12: return partial_trace(rho3, {3});
        case Pair::p13: return partial_trace(rho3, {2});
        case Pair::p23: return partial_trace(rho3, {1});
    }
    throw std::invalid_argument("reduce_pair: bad selector");
}

ComplexMatrix reduce_single(const ComplexMatrix& rho3, int qubit) {
    switch (qubit) {
        case 1: return partial_trace(rho3, {2, 3});
        case 2: return partial_trace(rho3, {1, 3});
        case 3: return partial_trace(rho3, {1, 2});
    }
    throw std::invalid_argument("reduce_single: qubit must be 1..3");
}

CanonicalParams sample_canonical(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, std::numbers::pi);
    CanonicalParams p;
    double s = 0.0;
    for (double& l : p.lambda) {
        l = std::abs(normal(gen));
        s += l * l;
    }
    s = std::sqrt(s);
    for (double& l : p.lambda) l /= s;
    p.phi = uniform(gen);
    return p;
}

}  // namespace qent
