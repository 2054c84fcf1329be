#include "qent/lhv.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qent {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Component factor P_j(S | v~, lambda): (sqrt(3) + 3 S lambda^{k_j} v~_j)/6
// for active j; inactive components keep the v-independent sqrt(3)/6.
double component_factor(const LhvModel& m, int j, int spin, double vt, double lambda) {
    if (!m.active[j]) return kSqrt3 / 6.0;
    double w = std::pow(lambda, m.k[j]) * vt;
    return (kSqrt3 + 3.0 * spin * w) / 6.0;
}

void check_lambda(double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw std::domain_error("lhv: hidden variable outside [0, 1]");
}

}  // namespace

Vec3 LhvModel::to_basis_a(const Vec3& lab) const { return mul_t(basis_a, lab); }
Vec3 LhvModel::to_basis_b(const Vec3& lab) const { return mul_t(basis_b, lab); }

double OutcomeDistribution::correlator() const { return p[0] - p[1] - p[2] + p[3]; }

LhvModel build_model(const Mat3& r) {
    Svd3 f = svd3(r);
    LhvModel m;
    m.basis_a = f.u;
    m.basis_b = f.v;
    for (int j = 0; j < 3; ++j) {
        double q = f.s[j];
        if (q > 1.0 + 1e-9) throw std::domain_error("build_model: singular value exceeds 1");
        m.q[j] = q;
        m.active[j] = q > 1e-12;
        if (m.active[j]) m.k[j] = std::max(0.0, (1.0 - q) / (2.0 * q));
    }
    return m;
}

Vec3 f_observable(const LhvModel& m, const Vec3& v_tilde, double lambda) {
    check_lambda(lambda);
    Vec3 f{};
    for (int j = 0; j < 3; ++j)
        if (m.active[j]) f[j] = std::pow(lambda, m.k[j]) * v_tilde[j];
    return f;
}

double correlator_closed(const LhvModel& m, const Vec3& a, const Vec3& b) {
    Vec3 at = m.to_basis_a(normalized(a));
    Vec3 bt = m.to_basis_b(normalized(b));
    double c = 0.0;
    for (int j = 0; j < 3; ++j) c += m.q[j] * at[j] * bt[j];
    return c;
}

OutcomeDistribution joint_distribution(const LhvModel& m, const Vec3& a, const Vec3& b,
                                       double lambda) {
    check_lambda(lambda);
    Vec3 at = m.to_basis_a(normalized(a));
    Vec3 bt = m.to_basis_b(normalized(b));
    OutcomeDistribution d;
    const int spins[2] = {+1, -1};
    for (int ia = 0; ia < 2; ++ia) {
        for (int ib = 0; ib < 2; ++ib) {
            double s = 0.0;
            for (int j = 0; j < 3; ++j)
                s += component_factor(m, j, spins[ia], at[j], lambda) *
                     component_factor(m, j, spins[ib], bt[j], lambda);
            d.p[2 * ia + ib] = s;
        }
    }
    for (double x : d.p)
        if (x < -1e-12) d.is_signed = true;
    return d;
}

McResult mc_correlator(const LhvModel& m, const Vec3& a, const Vec3& b, std::uint64_t n,
                       std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("mc_correlator: n must be >= 1");
    if (!m.active[0] && !m.active[1] && !m.active[2]) return {};  // correlator is identically 0
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t signed_draws = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        double lambda = unit(gen);
        OutcomeDistribution d = joint_distribution(m, a, b, lambda);
        double x;
        if (d.is_signed) {
            x = d.correlator();
            ++signed_draws;
        } else {
            double u = unit(gen);
            double acc = 0.0;
            int idx = 3;
            for (int j = 0; j < 4; ++j) {
                acc += std::max(0.0, d.p[j]);
                if (u <= acc) {
                    idx = j;
                    break;
                }
            }
            x = (idx == 0 || idx == 3) ? 1.0 : -1.0;
        }
        sum += x;
        sum_sq += x * x;
    }
    McResult r;
    double nn = static_cast<double>(n);
    r.estimate = sum / nn;
    double var = std::max(0.0, sum_sq / nn - r.estimate * r.estimate);
    r.stderr_ = std::sqrt(var / nn);
    r.signed_fraction = static_cast<double>(signed_draws) / nn;
    return r;
}

Vec3 k_distribution(const LhvModel& m, const Vec3& a, const Vec3& b, double lambda) {
    check_lambda(lambda);
    Vec3 at = m.to_basis_a(normalized(a));
    Vec3 bt = m.to_basis_b(normalized(b));
    Vec3 pk{};
    const int spins[2] = {+1, -1};
    for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int sa : spins)
            for (int sb : spins)
                s += component_factor(m, j, sa, at[j], lambda) *
                     component_factor(m, j, sb, bt[j], lambda);
        pk[j] = s;
    }
    return pk;
}

double freedom_of_choice_witness(const LhvModel& m, const Vec3& a1, const Vec3& b1,
                                 const Vec3& a2, const Vec3& b2, double lambda) {
    Vec3 p1 = k_distribution(m, a1, b1, lambda);
    Vec3 p2 = k_distribution(m, a2, b2, lambda);
    double d = 0.0;
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(p1[j] - p2[j]));
    return d;
}

RescaledConditionals rescaled_conditionals(const LhvModel& m, const Vec3& a, const Vec3& b,
                                           double lambda, int component) {
    if (component < 0 || component > 2)
        throw std::invalid_argument("rescaled_conditionals: component must be 0..2");
    Vec3 pk = k_distribution(m, a, b, lambda);
    if (pk[component] <= 1e-14)
        throw std::domain_error("rescaled_conditionals: vanishing component probability");
    Vec3 at = m.to_basis_a(normalized(a));
    Vec3 bt = m.to_basis_b(normalized(b));
    double root = std::sqrt(pk[component]);
    RescaledConditionals r;
    r.a_plus = component_factor(m, component, +1, at[component], lambda) / root;
    r.a_minus = component_factor(m, component, -1, at[component], lambda) / root;
    r.b_plus = component_factor(m, component, +1, bt[component], lambda) / root;
    r.b_minus = component_factor(m, component, -1, bt[component], lambda) / root;
    return r;
}

}  // namespace qent
