#include "qent/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qent {

namespace {

const std::array<ComplexMatrix, 3>& paulis() {
    static const std::array<ComplexMatrix, 3> p{pauli_x(), pauli_y(), pauli_z()};
    return p;
}

double real_trace_checked(const ComplexMatrix& m, const char* what) {
    Complex t = m.trace();
    if (std::abs(t.imag()) > 1e-10)
        throw std::runtime_error(std::string(what) + ": imaginary residue exceeds 1e-10");
    return t.real();
}

Vec3 unit_checked(const Vec3& v, const char* what) {
    if (std::abs(norm(v) - 1.0) > 1e-12)
        throw std::domain_error(std::string(what) + ": vector not unit-norm");
    return v;
}

Vec3 random_unit(std::mt19937_64& gen) {
    std::normal_distribution<double> normal(0.0, 1.0);
    while (true) {
        Vec3 v{normal(gen), normal(gen), normal(gen)};
        if (norm(v) > 1e-6) return normalized(v);
    }
}

// Normalize, falling back to the previous direction for a vanishing update.
Vec3 ascend(const Vec3& update, const Vec3& prev) {
    return norm(update) > 1e-14 ? normalized(update) : prev;
}

}  // namespace

Mat3 r_matrix(const ComplexMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("r_matrix: dimension must be 4");
    Mat3 r;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            r(j, k) = real_trace_checked(rho * kron(paulis()[j], paulis()[k]), "r_matrix");
    return r;
}

Mat3 connected_r_matrix(const ComplexMatrix& rho) {
    Mat3 r = r_matrix(rho);
    Vec3 m1, m2;
    for (int j = 0; j < 3; ++j) {
        m1[j] = real_trace_checked(rho * kron(paulis()[j], identity2()), "connected_r_matrix");
        m2[j] = real_trace_checked(rho * kron(identity2(), paulis()[j]), "connected_r_matrix");
    }
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r(j, k) -= m1[j] * m2[k];
    return r;
}

CubicClassification classify_from_alphas(double a1, double a2, double a3) {
    CubicClassification c;
    c.alpha1 = a1;
    c.alpha2 = a2;
    c.alpha3 = a3;
    c.gamma1 = -a1 * a1 * a1 / 27.0 - a3 / 2.0 + a1 * a2 / 6.0;
    c.gamma2 = a2 / 3.0 - a1 * a1 / 9.0;
    c.discriminant = c.gamma1 * c.gamma1 + c.gamma2 * c.gamma2 * c.gamma2;

    // Degeneracy is judged against the root scale, not absolutely: a tiny
    // Gram matrix has tiny gamma2 without having a triple root.
    double scale = std::max({std::abs(a1), std::sqrt(std::abs(a2)), std::cbrt(std::abs(a3))});
    if (scale == 0.0 || -c.gamma2 <= 1e-12 * scale * scale) {
        c.theta = 0.0;
        c.gamma = 2.0 * std::sqrt(std::max(0.0, -2.0 * a1 / 3.0));
        return c;
    }

    double arg = c.gamma1 / std::pow(-c.gamma2, 1.5);
    if (arg > 1.0 + 1e-9 || arg < -1.0 - 1e-9)
        throw std::runtime_error("classify: arccos argument out of range (discriminant > 0)");
    arg = std::clamp(arg, -1.0, 1.0);
    c.theta = std::acos(arg) / 3.0;
    double inner = -2.0 * a1 / 3.0 +
                   2.0 * std::sqrt(-c.gamma2) * std::cos(c.theta - std::numbers::pi / 3.0);
    c.gamma = 2.0 * std::sqrt(std::max(0.0, inner));
    return c;
}

CubicClassification classify(const Mat3& r) {
    std::array<double, 3> a = charpoly3(r.transpose() * r);
    return classify_from_alphas(a[0], a[1], a[2]);
}

std::array<double, 3> alpha_quantum(const MeasureSet& ms) {
    auto [A, B, C] = ms.pair_adapted();
    double a2 = A * A, b2 = B * B, c2 = C * C;
    double w = ms.e5 - a2 / 4.0;
    return {b2 + c2 - 2.0 * a2 - 1.0, (b2 - a2) * (c2 - a2) - 8.0 * w, -16.0 * w * w};
}

std::array<double, 3> alpha_connected(const MeasureSet& ms) {
    auto [A, B, C] = ms.pair_adapted();
    double a2 = A * A, b2 = B * B, c2 = C * C, d2 = ms.e4 * ms.e4;
    double w = 4.0 * ms.e5 - a2;
    return {-(a2 + b2 + d2) * (a2 + c2 + d2) + 2.0 * w,
            a2 * (a2 + d2) * (2.0 * a2 + b2 + c2 + 2.0 * d2) + w * w,
            -a2 * a2 * (a2 + d2) * (a2 + d2)};
}

double max_violation_eigen(const Mat3& r) {
    std::array<double, 3> u = symmetric_eigenvalues3(r.transpose() * r);
    return 2.0 * std::sqrt(std::max(0.0, u[1] + u[2]));
}

double bell_value(const Mat3& r, const MeasurementSetting& m) {
    Vec3 a = unit_checked(m.a, "bell_value");
    Vec3 b = unit_checked(m.b, "bell_value");
    Vec3 a2 = unit_checked(m.a2, "bell_value");
    Vec3 b2 = unit_checked(m.b2, "bell_value");
    Vec3 bp{b[0] + b2[0], b[1] + b2[1], b[2] + b2[2]};
    Vec3 bm{b[0] - b2[0], b[1] - b2[1], b[2] - b2[2]};
    return dot(a, mul(r, bp)) + dot(a2, mul(r, bm));
}

ChshResult chsh_optimize(const Mat3& r, int restarts, std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("chsh_optimize: restarts must be >= 1");
    std::mt19937_64 gen(seed);
    ChshResult best;
    best.value = -1.0;
    for (int run = 0; run < restarts; ++run) {
        MeasurementSetting m;
        m.a = random_unit(gen);
        m.a2 = random_unit(gen);
        m.b = random_unit(gen);
        m.b2 = random_unit(gen);
        double prev = bell_value(r, m);
        for (int it = 0; it < 500; ++it) {
            Vec3 bp{m.b[0] + m.b2[0], m.b[1] + m.b2[1], m.b[2] + m.b2[2]};
            Vec3 bm{m.b[0] - m.b2[0], m.b[1] - m.b2[1], m.b[2] - m.b2[2]};
            m.a = ascend(mul(r, bp), m.a);
            m.a2 = ascend(mul(r, bm), m.a2);
            Vec3 ap = mul_t(r, Vec3{m.a[0] + m.a2[0], m.a[1] + m.a2[1], m.a[2] + m.a2[2]});
            Vec3 am = mul_t(r, Vec3{m.a[0] - m.a2[0], m.a[1] - m.a2[1], m.a[2] - m.a2[2]});
            m.b = ascend(ap, m.b);
            m.b2 = ascend(am, m.b2);
            double val = bell_value(r, m);
            if (val - prev < 1e-12) {
                prev = val;
                break;
            }
            prev = val;
        }
        if (prev > best.value) {
            best.value = prev;
            best.setting = m;
        }
    }
    return best;
}

}  // namespace qent
