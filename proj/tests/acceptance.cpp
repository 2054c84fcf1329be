// Acceptance gate: one PASS/FAIL line per criterion, exit status equals the
// number of failed criteria.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "qent/correlation.hpp"
#include "qent/lhv.hpp"
#include "qent/measures.hpp"
#include "qent/scan.hpp"
#include "qent/states.hpp"

using namespace qent;

namespace {

const double kTsirelson = 2.0 * std::sqrt(2.0);

int failures = 0;

void report(int idx, const char* name, bool ok, double worst) {
    std::printf("%s: %2d. %s (worst %.3e)\n", ok ? "PASS" : "FAIL", idx, name, worst);
    if (!ok) ++failures;
}

Vec3 random_unit(std::mt19937_64& gen) {
    std::normal_distribution<double> normal(0.0, 1.0);
    while (true) {
        Vec3 v{normal(gen), normal(gen), normal(gen)};
        if (norm(v) > 1e-6) return normalized(v);
    }
}

CanonicalParams renormalized(CanonicalParams p) {
    double s = 0.0;
    for (double l : p.lambda) s += l * l;
    s = std::sqrt(s);
    for (double& l : p.lambda) l /= s;
    return p;
}

// 1. alpha formulas match the numeric Gram-matrix coefficients.
void criterion_1() {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        CanonicalParams p = sample_canonical(100000 + i);
        ComplexMatrix rho3 = density(canonical_state(p));
        for (Pair pr : {Pair::p12, Pair::p13, Pair::p23}) {
            ComplexMatrix rho = reduce_pair(rho3, pr);
            MeasureSet ms = measures_from_params(p, pr);
            Mat3 r = r_matrix(rho);
            Mat3 rc = connected_r_matrix(rho);
            auto nq = charpoly3(r.transpose() * r);
            auto nc = charpoly3(rc.transpose() * rc);
            auto aq = alpha_quantum(ms);
            auto ac = alpha_connected(ms);
            for (int j = 0; j < 3; ++j) {
                worst = std::max(worst, std::abs(nq[j] - aq[j]));
                worst = std::max(worst, std::abs(nc[j] - ac[j]));
            }
        }
    }
    report(1, "coefficient equivalence, 1000 states x 3 pairs, tol 1e-9", worst < 1e-9, worst);
}

// 2. closed form, eigenvalue formula and optimizer agree.
void criterion_2() {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        CanonicalParams p = sample_canonical(110000 + i);
        ComplexMatrix rho = reduce_pair(density(canonical_state(p)), Pair::p12);
        for (const Mat3& r : {r_matrix(rho), connected_r_matrix(rho)}) {
            double closed = classify(r).gamma;
            double eig = max_violation_eigen(r);
            double opt = chsh_optimize(r, 10, 110000 + i).value;
            worst = std::max({worst, std::abs(closed - eig), std::abs(opt - eig)});
        }
    }
    report(2, "triple-oracle gamma agreement, 200 R and R_c, tol 1e-6", worst < 1e-6, worst);
}

// 3. gamma_c = 2 sqrt(2) C(psi) for pure pair reductions.
void criterion_3() {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        CanonicalParams p = sample_canonical(120000 + i);
        p.lambda[2] = p.lambda[4] = 0.0;
        p = renormalized(p);
        ComplexMatrix rho = reduce_pair(density(canonical_state(p)), Pair::p12);
        double gc = max_violation_eigen(connected_r_matrix(rho));
        worst = std::max(worst, std::abs(gc - kTsirelson * wootters_concurrence(rho)));
    }
    report(3, "pure-state law gamma_c = 2 sqrt(2) C, 500 states, tol 1e-9", worst < 1e-9, worst);
}

// 4. single-measure limits of the connected gamma.
void criterion_4() {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        CanonicalParams s = sample_canonical(130000 + i);
        auto gamma_c = [](const CanonicalParams& p) {
            ComplexMatrix rho = reduce_pair(density(canonical_state(p)), Pair::p12);
            return max_violation_eigen(connected_r_matrix(rho));
        };

        CanonicalParams a = s;
        a.lambda[2] = a.lambda[4] = 0.0;
        a = renormalized(a);
        worst = std::max(worst,
                         std::abs(gamma_c(a) - kTsirelson * measures_from_params(a, Pair::p12).e1));

        CanonicalParams b = s;
        b.lambda[3] = b.lambda[4] = 0.0;
        worst = std::max(worst, gamma_c(renormalized(b)));

        CanonicalParams c = s;
        c.lambda[0] = 0.0;
        worst = std::max(worst, gamma_c(renormalized(c)));

        CanonicalParams d = s;
        d.lambda[1] = d.lambda[2] = d.lambda[3] = 0.0;
        d = renormalized(d);
        double e4 = measures_from_params(d, Pair::p12).e4;
        worst = std::max(worst, std::abs(gamma_c(d) - 2.0 * e4 * e4));
    }
    report(4, "single-measure limits, 200 states x 4 cases, tol 1e-9", worst < 1e-9, worst);
}

// 5. concurrence identities and the E5 expressions.
void criterion_5() {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        CanonicalParams p = sample_canonical(140000 + i);
        ComplexMatrix rho3 = density(canonical_state(p));
        MeasureSet m = measures_from_params(p, Pair::p12);
        double c1 = bipartite_concurrence(reduce_single(rho3, 1));
        double c2 = bipartite_concurrence(reduce_single(rho3, 2));
        double c12 = bipartite_concurrence(reduce_pair(rho3, Pair::p12));
        auto gsqrt = [](double x) { return std::sqrt(std::max(0.0, x)); };
        worst = std::max(worst, std::abs(m.e2 - gsqrt(c12 * c12 + m.e1 * m.e1 - c2 * c2)));
        worst = std::max(worst, std::abs(m.e3 - gsqrt(c12 * c12 + m.e1 * m.e1 - c1 * c1)));
        worst = std::max(
            worst, std::abs(m.e4 - gsqrt(c1 * c1 + c2 * c2 - c12 * c12 - 2.0 * m.e1 * m.e1)));
        worst = std::max(worst, std::abs(e5_matrix(reduce_pair(rho3, Pair::p12),
                                                   reduce_single(rho3, 1), reduce_single(rho3, 2),
                                                   m) -
                                         m.e5));
        worst = std::max(
            worst, std::abs(wootters_concurrence(reduce_pair(rho3, Pair::p12)) - m.e1));
        worst = std::max(
            worst, std::abs(wootters_concurrence(reduce_pair(rho3, Pair::p13)) - m.e2));
        worst = std::max(
            worst, std::abs(wootters_concurrence(reduce_pair(rho3, Pair::p23)) - m.e3));
    }
    report(5, "measure identities, 1000 states, tol 1e-8", worst < 1e-8, worst);
}

// 6. separable states bound every bin, in both binning modes.
void criterion_6(const std::vector<ScanRecord>& scan) {
    double worst_min_mode = -1e300, worst_max_mode = -1e300;
    for (const ClassBin& bin : bin_records(scan, 0.02, 0.02, FixMode::gamma2_theta)) {
        double sep_min = 1e300, nonsep_min = 1e300;
        bool has_sep = false, has_nonsep = false;
        for (const ScanRecord* r : bin.members) {
            if (r->separable) {
                has_sep = true;
                sep_min = std::min(sep_min, r->connected.gamma);
            } else {
                has_nonsep = true;
                nonsep_min = std::min(nonsep_min, r->connected.gamma);
            }
        }
        if (has_sep && has_nonsep) worst_min_mode = std::max(worst_min_mode, sep_min - nonsep_min);
    }
    for (const ClassBin& bin : bin_records(scan, 0.02, 0.02, FixMode::alpha1_theta)) {
        double sep_max = -1e300, nonsep_max = -1e300;
        bool has_sep = false, has_nonsep = false;
        for (const ScanRecord* r : bin.members) {
            if (r->separable) {
                has_sep = true;
                sep_max = std::max(sep_max, r->connected.gamma);
            } else {
                has_nonsep = true;
                nonsep_max = std::max(nonsep_max, r->connected.gamma);
            }
        }
        if (has_sep && has_nonsep) worst_max_mode = std::max(worst_max_mode, nonsep_max - sep_max);
    }
    double worst = std::max(worst_min_mode, worst_max_mode);

    // Continuous-limit version: with alpha2 = 0, gamma2 fixes alpha1 =
    // -3 sqrt(-gamma2), so the separable value at a record's own exact
    // (gamma2, theta) is the analytic floor 2 sqrt(2 s (1 + cos(theta -
    // pi/3))), s = sqrt(-gamma2).
    double worst_sep_floor = 0.0, worst_ent_floor = 0.0;
    for (const ScanRecord& r : scan) {
        double s = std::sqrt(std::max(0.0, -r.connected.gamma2));
        double floor_g = 2.0 * std::sqrt(std::max(
                                  0.0, 2.0 * s * (1.0 + std::cos(r.connected.theta -
                                                                 std::numbers::pi / 3.0))));
        if (r.separable)
            worst_sep_floor = std::max(worst_sep_floor, std::abs(r.connected.gamma - floor_g));
        else
            worst_ent_floor = std::max(worst_ent_floor, floor_g - r.connected.gamma);
    }
    std::printf("      6a. binned check, widths 0.02, tol 1e-6: %s (worst excess %.3e)\n",
                worst < 1e-6 ? "ok" : "FAIL", worst);
    std::printf("      6b. exact-(gamma2,theta) floor: separable on the floor to %.3e,\n"
                "          entangled above it to %.3e\n",
                worst_sep_floor, worst_ent_floor);
    if (worst >= 1e-6)
        std::printf("          note: the ordering is exact at identical (gamma2, theta) (6b)\n"
                    "          but gamma_c varies by O(width) across a 0.02-wide bin, so the\n"
                    "          binned comparison cannot meet a 1e-6 tolerance.\n");
    report(6, "separable states bound the bins in both binning modes, tol 1e-6", worst < 1e-6,
           worst);
}

// 7. log-negativity and gamma_c order oppositely for some within-bin pair.
void criterion_7(const std::vector<ScanRecord>& scan) {
    std::size_t n = fig2_witnesses(scan, 0.02, 0.02, 1).size();
    report(7, "at least one negativity/gamma_c ordering witness in the scan", n >= 1,
           static_cast<double>(n));
}

// 8. discriminant, theta and Tsirelson bounds over the scan.
void criterion_8(const std::vector<ScanRecord>& scan) {
    double worst = -1e300;
    for (const ScanRecord& r : scan) {
        for (const CubicClassification* c : {&r.quantum, &r.connected}) {
            worst = std::max(worst, c->discriminant - 1e-9);
            worst = std::max(worst, -c->theta);
            worst = std::max(worst, c->theta - std::numbers::pi / 3.0);
            worst = std::max(worst, c->gamma - kTsirelson - 1e-9);
        }
    }
    report(8, "bounds suite over the full scan", worst <= 0.0, worst);
}

// Adaptive Simpson quadrature on [lo, hi].
template <typename F>
double simpson(F f, double lo, double hi, double flo, double fmid, double fhi, double tol,
               int depth) {
    double mid = 0.5 * (lo + hi);
    double fl = f(0.5 * (lo + mid)), fr = f(0.5 * (mid + hi));
    double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    double left = (mid - lo) / 6.0 * (flo + 4.0 * fl + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4.0 * fr + fhi);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, lo, mid, flo, fl, fmid, tol / 2.0, depth - 1) +
           simpson(f, mid, hi, fmid, fr, fhi, tol / 2.0, depth - 1);
}

// 9. hidden-variable suite.
void criterion_9() {
    std::mt19937_64 gen(150000);
    bool mc_ok = true, norm_ok = true, quad_ok = true;
    double worst_norm = 0.0, worst_quad = 0.0, worst_mc = 0.0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<LhvModel> models;
    for (int i = 0; i < 20; ++i) {
        CanonicalParams p = sample_canonical(150000 + i);
        ComplexMatrix rho = reduce_pair(density(canonical_state(p)), Pair::p12);
        models.push_back(build_model(connected_r_matrix(rho)));
    }

    for (int i = 0; i < 20; ++i) {
        const LhvModel& m = models[i];
        Vec3 a = random_unit(gen), b = random_unit(gen);
        McResult mc = mc_correlator(m, a, b, 1000000, 150100 + i);
        double err = std::abs(mc.estimate - correlator_closed(m, a, b));
        if (err > 3.0 * mc.stderr_ + 1e-9) mc_ok = false;
        worst_mc = std::max(worst_mc, err - 3.0 * mc.stderr_);

        for (int rep = 0; rep < 20; ++rep) {
            double lambda = unit(gen);
            OutcomeDistribution d = joint_distribution(m, a, b, lambda);
            Vec3 pk = k_distribution(m, a, b, lambda);
            worst_norm = std::max(
                worst_norm, std::abs(d.p[0] + d.p[1] + d.p[2] + d.p[3] - 1.0));
            worst_norm = std::max(worst_norm, std::abs(pk[0] + pk[1] + pk[2] - 1.0));
        }

        Vec3 at = m.to_basis_a(random_unit(gen));
        Vec3 bt = m.to_basis_b(random_unit(gen));
        auto f = [&](double l) {
            return dot(f_observable(m, at, l), f_observable(m, bt, l));
        };
        double integral = simpson(f, 0.0, 1.0, f(0.0), f(0.5), f(1.0), 1e-10, 40);
        double expect = 0.0;
        for (int j = 0; j < 3; ++j) expect += m.q[j] * at[j] * bt[j];
        worst_quad = std::max(worst_quad, std::abs(integral - expect));
    }
    norm_ok = worst_norm < 1e-12;
    quad_ok = worst_quad < 1e-8;

    // search for a freedom-of-choice witness over models, settings and lambda
    double best_witness = 0.0;
    for (const LhvModel& m : models) {
        for (int rep = 0; rep < 50; ++rep) {
            double w = freedom_of_choice_witness(m, random_unit(gen), random_unit(gen),
                                                 random_unit(gen), random_unit(gen), unit(gen));
            best_witness = std::max(best_witness, w);
        }
    }
    bool witness_ok = best_witness > 1e-3;

    std::printf("      9a. mc within 3 stderr of closed form: %s (worst excess %.3e)\n",
                mc_ok ? "ok" : "FAIL", worst_mc);
    std::printf("      9b. joint and k normalization, tol 1e-12: %s (worst %.3e)\n",
                norm_ok ? "ok" : "FAIL", worst_norm);
    std::printf("      9c. quadrature identity, tol 1e-8: %s (worst %.3e)\n",
                quad_ok ? "ok" : "FAIL", worst_quad);
    std::printf("      9d. freedom-of-choice witness > 1e-3: %s (best found %.3e)\n",
                witness_ok ? "ok" : "FAIL", best_witness);
    if (!witness_ok)
        std::printf("          note: the printed component distributions make every spin-summed\n"
                    "          component weight exactly 1/3, so the witness is identically zero\n"
                    "          for all settings; no implementation of the stated definitions can\n"
                    "          exceed the threshold.\n");
    report(9, "hidden-variable suite", mc_ok && norm_ok && quad_ok && witness_ok, best_witness);
}

// 10. PPT biconditional across the scan.
void criterion_10(const std::vector<ScanRecord>& scan) {
    std::size_t bad = 0, neg_without_conc = 0;
    double max_bad_c = 0.0;
    for (const ScanRecord& r : scan) {
        ComplexMatrix rho = reduce_pair(density(canonical_state(r.params)), r.pair);
        double c = wootters_concurrence(rho);
        bool neg = r.neg.negativity > 1e-7;
        bool ent = c > 1e-7;
        if (neg != ent) {
            ++bad;
            if (neg) ++neg_without_conc;
            else max_bad_c = std::max(max_bad_c, c);
        }
    }
    if (bad > 0)
        std::printf("      all %zu mismatches have concurrence in (1e-7, %.3e] with\n"
                    "      negativity <= 1e-7 (%zu in the other direction): near the\n"
                    "      separability boundary the negativity scales like the square of\n"
                    "      the concurrence, so equal 1e-7 thresholds on both monotones\n"
                    "      cannot coincide on a large sample.\n",
                    bad, max_bad_c, neg_without_conc);
    report(10, "PPT biconditional across the scan", bad == 0, static_cast<double>(bad));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();

    std::vector<ScanRecord> scan = run_scan(100000, 1, Pair::p12, 0.1);
    criterion_6(scan);
    criterion_7(scan);
    criterion_8(scan);
    criterion_9();
    criterion_10(scan);

    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
