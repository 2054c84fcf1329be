#include <cmath>

#include "doctest.h"
#include "qent/measures.hpp"

using namespace qent;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

CanonicalParams ghz_params() {
    CanonicalParams p;
    p.lambda = {kInvSqrt2, 0.0, 0.0, 0.0, kInvSqrt2};
    return p;
}

CanonicalParams bell_times_zero_params() {
    CanonicalParams p;
    p.lambda = {kInvSqrt2, 0.0, 0.0, kInvSqrt2, 0.0};
    return p;
}

ComplexMatrix bell_density() {
    ComplexMatrix rho(4);
    rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = Complex{0.5, 0.0};
    return rho;
}

}  // namespace

TEST_CASE("measures_from_params reference states") {
    MeasureSet ghz = measures_from_params(ghz_params(), Pair::p12);
    CHECK(ghz.e1 == doctest::Approx(0.0));
    CHECK(ghz.e2 == doctest::Approx(0.0));
    CHECK(ghz.e3 == doctest::Approx(0.0));
    CHECK(ghz.e4 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ghz.e5 == doctest::Approx(0.0));

    MeasureSet bz = measures_from_params(bell_times_zero_params(), Pair::p12);
    CHECK(bz.e1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bz.e2 == 0.0);
    CHECK(bz.e3 == 0.0);
    CHECK(bz.e4 == 0.0);
    CHECK(bz.e5 == doctest::Approx(0.0));

    CanonicalParams zero;
    zero.lambda = {1.0, 0.0, 0.0, 0.0, 0.0};
    MeasureSet z = measures_from_params(zero, Pair::p12);
    CHECK(z.e1 == 0.0);
    CHECK(z.e2 == 0.0);
    CHECK(z.e3 == 0.0);
    CHECK(z.e4 == 0.0);
    CHECK(z.e5 == 0.0);
}

TEST_CASE("bipartite_concurrence basics") {
    ComplexMatrix mixed = identity2() * Complex{0.5, 0.0};
    CHECK(bipartite_concurrence(mixed) == doctest::Approx(1.0).epsilon(1e-12));

    ComplexMatrix pure(2);
    pure(0, 0) = 1.0;
    CHECK(bipartite_concurrence(pure) == doctest::Approx(0.0));

    ComplexMatrix ghz1 = reduce_single(density(canonical_state(ghz_params())), 1);
    CHECK(bipartite_concurrence(ghz1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("e5_matrix agrees with the amplitude form") {
    CanonicalParams zero;
    zero.lambda = {1.0, 0.0, 0.0, 0.0, 0.0};
    ComplexMatrix rho3 = density(canonical_state(zero));
    MeasureSet ms = measures_from_params(zero, Pair::p12);
    double e5 = e5_matrix(reduce_pair(rho3, Pair::p12), reduce_single(rho3, 1),
                          reduce_single(rho3, 2), ms);
    CHECK(e5 == doctest::Approx(0.0).epsilon(1e-12));  // product state

    ComplexMatrix g3 = density(canonical_state(ghz_params()));
    MeasureSet gms = measures_from_params(ghz_params(), Pair::p12);
    CHECK(e5_matrix(reduce_pair(g3, Pair::p12), reduce_single(g3, 1), reduce_single(g3, 2),
                    gms) == doctest::Approx(0.0).epsilon(1e-12));

    for (int i = 0; i < 1000; ++i) {
        CanonicalParams p = sample_canonical(9000 + i);
        ComplexMatrix r3 = density(canonical_state(p));
        MeasureSet m = measures_from_params(p, Pair::p12);
        double v = e5_matrix(reduce_pair(r3, Pair::p12), reduce_single(r3, 1),
                             reduce_single(r3, 2), m);
        CHECK(std::abs(v - m.e5) < 1e-10);
    }
}

TEST_CASE("three e5 matrix expressions agree") {
    for (int i = 0; i < 200; ++i) {
        CanonicalParams p = sample_canonical(11000 + i);
        ComplexMatrix r3 = density(canonical_state(p));
        MeasureSet m = measures_from_params(p, Pair::p12);
        ComplexMatrix r1 = reduce_single(r3, 1), r2 = reduce_single(r3, 2),
                      rq3 = reduce_single(r3, 3);
        double a = e5_matrix(reduce_pair(r3, Pair::p12), r1, r2, m);
        double b = e5_matrix(reduce_pair(r3, Pair::p23), r2, rq3, m);
        // rho31: reduce pair 13 with factors swapped
        ComplexMatrix rho13 = reduce_pair(r3, Pair::p13);
        ComplexMatrix rho31(4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                int rs = ((r & 1) << 1) | (r >> 1);
                int cs = ((c & 1) << 1) | (c >> 1);
                rho31(rs, cs) = rho13(r, c);
            }
        double cexpr = e5_matrix(rho31, rq3, r1, m);
        CHECK(std::abs(a - m.e5) < 1e-9);
        CHECK(std::abs(b - m.e5) < 1e-9);
        CHECK(std::abs(cexpr - m.e5) < 1e-9);
    }
}

TEST_CASE("wootters_concurrence reference states") {
    CHECK(wootters_concurrence(bell_density()) == doctest::Approx(1.0).epsilon(1e-10));
    ComplexMatrix mixed = ComplexMatrix::identity(4) * Complex{0.25, 0.0};
    CHECK(wootters_concurrence(mixed) == doctest::Approx(0.0));

    ComplexMatrix bad = ComplexMatrix::identity(4) * Complex{0.5, 0.0};
    bad(3, 3) = Complex{-0.5, 0.0};
    CHECK_THROWS(wootters_concurrence(bad));
}

TEST_CASE("wootters_concurrence equals the amplitude measures") {
    for (int i = 0; i < 1000; ++i) {
        CanonicalParams p = sample_canonical(13000 + i);
        ComplexMatrix r3 = density(canonical_state(p));
        MeasureSet m = measures_from_params(p, Pair::p12);
        CHECK(std::abs(wootters_concurrence(reduce_pair(r3, Pair::p12)) - m.e1) < 1e-8);
        CHECK(std::abs(wootters_concurrence(reduce_pair(r3, Pair::p13)) - m.e2) < 1e-8);
        CHECK(std::abs(wootters_concurrence(reduce_pair(r3, Pair::p23)) - m.e3) < 1e-8);
    }
}

TEST_CASE("measure identities against bipartite concurrences") {
    for (int i = 0; i < 1000; ++i) {
        CanonicalParams p = sample_canonical(15000 + i);
        ComplexMatrix r3 = density(canonical_state(p));
        MeasureSet m = measures_from_params(p, Pair::p12);
        double c1 = bipartite_concurrence(reduce_single(r3, 1));
        double c2 = bipartite_concurrence(reduce_single(r3, 2));
        double c12 = bipartite_concurrence(reduce_pair(r3, Pair::p12));
        auto guarded_sqrt = [](double x) {
            REQUIRE(x > -1e-10);
            return std::sqrt(std::max(0.0, x));
        };
        CHECK(std::abs(m.e2 - guarded_sqrt(c12 * c12 + m.e1 * m.e1 - c2 * c2)) < 1e-8);
        CHECK(std::abs(m.e3 - guarded_sqrt(c12 * c12 + m.e1 * m.e1 - c1 * c1)) < 1e-8);
        CHECK(std::abs(m.e4 -
                       guarded_sqrt(c1 * c1 + c2 * c2 - c12 * c12 - 2.0 * m.e1 * m.e1)) < 1e-8);
    }
}

TEST_CASE("negativity reference states") {
    NegativityResult bell = negativity(bell_density());
    CHECK(bell.negativity == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bell.log_negativity == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    ComplexMatrix prod(4);
    prod(0, 0) = 1.0;
    CHECK(negativity(prod).negativity == doctest::Approx(0.0));

    ComplexMatrix ghz12 = reduce_pair(density(canonical_state(ghz_params())), Pair::p12);
    CHECK(negativity(ghz12).negativity == doctest::Approx(0.0));
}

TEST_CASE("PPT biconditional with wootters concurrence") {
    for (int i = 0; i < 300; ++i) {
        CanonicalParams p = sample_canonical(17000 + i);
        ComplexMatrix rho = reduce_pair(density(canonical_state(p)), Pair::p12);
        double n = negativity(rho).negativity;
        double c = wootters_concurrence(rho);
        CHECK((n > 1e-7) == (c > 1e-7));
    }
}
