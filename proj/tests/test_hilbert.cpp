#include "doctest.h"

#include <random>

#include "cyclo/cyclotomy.hpp"
#include "cyclo/hilbert.hpp"
#include "cyclo/numsgp.hpp"

using namespace cyclo;

TEST_SUITE("hilbert") {

TEST_CASE("ci_series and reduce examples") {
    auto h = ci_series({2, 3}, {6}).reduce();
    CHECK(h.numerator() == IntPoly{1, -1, 1});
    CHECK(h.den_orders() == std::vector<long>{1});
    CHECK(h.reduced());
    CHECK(h.krull_dimension() == 1);

    auto poly_ring = ci_series({1, 1}, {});
    CHECK(poly_ring.numerator() == IntPoly::one());
    CHECK(poly_ring.den_orders() == std::vector<long>{1, 1});
    CHECK(poly_ring.krull_dimension() == 2);

    auto quadric = ci_series({1, 1}, {2}).reduce();
    CHECK(quadric.numerator() == IntPoly{1, 1});
    CHECK(quadric.den_orders() == std::vector<long>{1});

    CHECK_THROWS_AS(ci_series({2}, {3, 4}), TooManyRelations);
    CHECK_THROWS_AS(ci_series({2, 3}, {1}), std::invalid_argument);
}

TEST_CASE("reduce keeps the series when full cancellation does not fit the shape") {
    // No regular sequence realizes these degrees; the reduction falls back
    // to restoring shared factors so the denominator stays a product of
    // (1 - x^d), and reports itself unreduced.
    auto h = ci_series({2, 3}, {5, 7});
    auto r = h.reduce();
    CHECK_FALSE(r.reduced());
    CHECK(series_coefficients(h, 30) == series_coefficients(r, 30));
    CHECK(is_kronecker(r.numerator()));
    CHECK(r.krull_dimension() == 0);
}

TEST_CASE("series_coefficients examples") {
    auto poly_ring = HilbertSeries(IntPoly::one(), {1, 1}, true);
    CHECK(series_coefficients(poly_ring, 4) == SeriesTruncation({1, 2, 3, 4, 5}, 4));

    auto quadric = HilbertSeries(IntPoly{1, 1}, {1}, true);
    CHECK(series_coefficients(quadric, 3) == SeriesTruncation({1, 2, 2, 2}, 3));

    auto s23 = HilbertSeries(IntPoly{1, -1, 1}, {1}, true);
    auto values = series_coefficients(s23, 6);
    CHECK(values == SeriesTruncation({1, 0, 1, 1, 1, 1, 1}, 6));
    auto sgp = NumericalSemigroup::from_generators({2, 3});
    for (long n = 0; n <= 6; ++n) CHECK(values.coeff(n) == (sgp.contains(n) ? 1 : 0));
}

TEST_CASE("h_polynomial examples") {
    auto quadric = ci_series({1, 1}, {2}).reduce();
    auto [h1, d1] = h_polynomial(quadric);
    CHECK(h1 == IntPoly{1, 1});
    CHECK(d1 == 1);

    auto cubic_ring = HilbertSeries(IntPoly::one(), {1, 1, 1}, true);
    auto [h2, d2] = h_polynomial(cubic_ring);
    CHECK(h2 == IntPoly::one());
    CHECK(d2 == 3);

    auto weighted = HilbertSeries(IntPoly{1, -1, 1}, {2, 3}, true);
    CHECK_THROWS_AS(h_polynomial(weighted), NotStandardGraded);
}

TEST_CASE("koszul_deviations examples") {
    auto dev = koszul_deviations(IntPoly{1, 1}, 1, 8);
    CHECK(dev.values == std::vector<Int>{2, 1, 0, 0, 0, 0, 0, 0});

    auto free_ring = koszul_deviations(IntPoly::one(), 1, 6);
    CHECK(free_ring.values == std::vector<Int>{1, 0, 0, 0, 0, 0});

    auto dev3 = koszul_deviations(IntPoly{1, 1, -1}, 1, 30);
    CHECK(dev3.values[0] == 2);
    CHECK(dev3.values[1] == 2);
    CHECK(dev3.values[2] == 1);
    for (long i = 2; i <= 30; i += 2) CHECK(dev3.at(i) != 0);
}

TEST_CASE("poincare_coefficients examples") {
    auto line = HilbertSeries(IntPoly::one(), {1}, true);
    CHECK(poincare_coefficients(line, 4) == SeriesTruncation({1, 1, 0, 0, 0}, 4));

    auto quadric = HilbertSeries(IntPoly{1, 1}, {1}, true);
    CHECK(poincare_coefficients(quadric, 5) == SeriesTruncation({1, 2, 2, 2, 2, 2}, 5));

    for (long n : {2L, 3L, 5L}) {
        auto ring = HilbertSeries(IntPoly::one(), std::vector<long>(n, 1), true);
        auto betti = poincare_coefficients(ring, n + 2);
        for (long i = 0; i <= n + 2; ++i) {
            Int binom = 1;
            for (long t = 1; t <= i; ++t) {
                binom *= n - t + 1;
                binom /= t;
            }
            CHECK(betti.coeff(i) == (i <= n ? binom : 0));
        }
    }
}

TEST_CASE("deviations_from_poincare examples") {
    CHECK(deviations_from_poincare(SeriesTruncation({1, 1, 0, 0, 0, 0}, 5)).values ==
          std::vector<Int>{1, 0, 0, 0, 0});
    CHECK(deviations_from_poincare(SeriesTruncation({1, 2, 2, 2, 2, 2}, 5)).values ==
          std::vector<Int>{2, 1, 0, 0, 0});
    CHECK(deviations_from_poincare(SeriesTruncation({1, 3, 3, 1, 0, 0}, 5)).values ==
          std::vector<Int>{3, 0, 0, 0, 0});
    CHECK_THROWS_AS(deviations_from_poincare(SeriesTruncation({2, 1}, 1)),
                    ConstantTermNotOne);
}

TEST_CASE("prop 3.7 round trip on the named inputs") {
    const long bound = 20;
    for (auto h : {IntPoly{1}, IntPoly{1, 1}, IntPoly{1, 1, -1}}) {
        const long dim = 1;
        auto direct = koszul_deviations(h, dim, bound);
        auto series = HilbertSeries(h, std::vector<long>(dim, 1), true);
        auto via_poincare = deviations_from_poincare(poincare_coefficients(series, bound));
        CHECK(direct.values == via_poincare.values);
    }
}

TEST_CASE("kronecker h yields finitely supported deviations") {
    // Complete intersection shape: h a product of cyclotomics.
    IntPoly h = cyclotomic(6) * cyclotomic(2);
    auto fact = kronecker_factor(h);
    REQUIRE(fact.is_kronecker());
    auto dev = koszul_deviations(h, 1, 30);
    for (long i = fact.largest_index() + 1; i <= 30; ++i) CHECK(dev.at(i) == 0);
}

TEST_CASE("curvature estimates") {
    CHECK(curvature_estimate(SeriesTruncation(std::vector<Int>(21, 1), 20), 5).scaled ==
          10000);

    auto quadric = HilbertSeries(IntPoly{1, 1}, {1}, true);
    auto betti = poincare_coefficients(quadric, 20);
    auto est = curvature_estimate(betti, 10);
    CHECK(est.value() > 1.0);
    CHECK(est.value() <= 1.072);

    auto fib = HilbertSeries(IntPoly{1, 1, -1}, {1}, true);
    auto est2 = curvature_estimate(poincare_coefficients(fib, 30), 10);
    CHECK(est2.value() > 1.2);

    CHECK_THROWS_AS(curvature_estimate(SeriesTruncation(5), 7), std::invalid_argument);
}

TEST_CASE("h_to_f and f_to_h examples") {
    CHECK(h_to_f({1, 1, 1}, 2) == FVector{1, 3, 3});
    CHECK(h_to_f({1, 0, 0}, 2) == FVector{1, 2, 1});
    CHECK(h_to_f({1, 3, 3, 1}, 3) == FVector{1, 6, 12, 8});
    CHECK(f_to_h({1, 3, 3}) == HVector{1, 1, 1});
    CHECK(f_to_h({1, 6, 12, 8}) == HVector{1, 3, 3, 1});
    CHECK_THROWS_AS(h_to_f({1, 1, 1}, 1), DimensionTooSmall);
}

TEST_CASE("transform round trip") {
    std::mt19937_64 rng(20260817);
    std::uniform_int_distribution<long> len(1, 8);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int i = 0; i < 200; ++i) {
        HVector h(static_cast<std::size_t>(len(rng)));
        for (auto& v : h) v = coeff(rng);
        long dim = static_cast<long>(h.size()) - 1;
        CHECK(f_to_h(h_to_f(h, dim)) == h);
    }
}

TEST_CASE("lemma45_fD2 examples and identity") {
    CHECK(lemma45_fD2({1, -1, 1}, 4) == 3);  // D - s/2 for Phi_6
    CHECK(lemma45_fD2({1}, 3) == 3);
    CHECK(lemma45_fD2({1, 1, 1}, 2) == 3);

    std::mt19937_64 rng(20260818);
    std::uniform_int_distribution<long> half(1, 4);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<long> extra(0, 5);
    for (int i = 0; i < 200; ++i) {
        // Random palindromic vector of even degree s with entries summing
        // to one: mirror a random half, then fix the middle entry.
        long k = half(rng);
        long s = 2 * k;
        HVector h(static_cast<std::size_t>(s) + 1);
        Int partial = 0;
        for (long j = 0; j < k; ++j) {
            h[static_cast<std::size_t>(j)] = coeff(rng);
            h[static_cast<std::size_t>(s - j)] = h[static_cast<std::size_t>(j)];
            partial += h[static_cast<std::size_t>(j)];
        }
        h[static_cast<std::size_t>(k)] = 1 - 2 * partial;
        long dim = s + extra(rng);
        CHECK(lemma45_fD2(h, dim) == dim - s / 2);
    }
}

TEST_CASE("detect_irreducible_cyclotomic_h examples") {
    auto prime = detect_irreducible_cyclotomic_h(IntPoly{1, 1, 1});
    REQUIRE(prime.has_value());
    CHECK(prime->first == 3);
    CHECK(prime->second == CyclotomicHVerdict::AdmissibleHypersurface);

    auto six = detect_irreducible_cyclotomic_h(IntPoly{1, -1, 1});
    REQUIRE(six.has_value());
    CHECK(six->first == 6);
    CHECK(six->second == CyclotomicHVerdict::Inadmissible);

    CHECK_FALSE(detect_irreducible_cyclotomic_h(IntPoly{1, 2, 1}).has_value());
    CHECK_FALSE(detect_irreducible_cyclotomic_h(IntPoly{1}).has_value());
    CHECK_THROWS_AS(detect_irreducible_cyclotomic_h(IntPoly{-1, 1}), ConstantTermNotOne);
}

TEST_CASE("plane monoid hilbert function") {
    auto ex = plane_monoid_hilbert({{8, 0}, {6, 2}, {5, 3}, {3, 5}, {0, 8}}, 12);
    CHECK(ex.h == IntPoly{1, 3, 3, 1});
    CHECK(ex.values[0] == 1);
    CHECK(ex.values[1] == 5);

    auto plane = plane_monoid_hilbert({{1, 0}, {0, 1}}, 6);
    CHECK(plane.h == IntPoly::one());
    CHECK(plane.values == std::vector<long>{1, 2, 3, 4, 5, 6, 7});

    auto conic = plane_monoid_hilbert({{2, 0}, {1, 1}, {0, 2}}, 8);
    CHECK(conic.h == IntPoly{1, 1});
    CHECK(conic.values == std::vector<long>{1, 3, 5, 7, 9, 11, 13, 15, 17});

    CHECK_THROWS_AS(plane_monoid_hilbert({{8, 0}, {6, 2}, {5, 3}, {3, 5}, {0, 8}}, 3),
                    FitDidNotStabilize);
    CHECK_THROWS_AS(plane_monoid_hilbert({{1, 0}, {0, 2}}, 6), std::invalid_argument);
}

TEST_CASE("random complete intersection profiles reduce to Kronecker numerators") {
    std::mt19937_64 rng(20260819);
    std::uniform_int_distribution<long> nvars(1, 5);
    std::uniform_int_distribution<long> vdeg(1, 6);
    std::uniform_int_distribution<long> rdeg(2, 6);
    for (int i = 0; i < 100; ++i) {
        long n = nvars(rng);
        std::uniform_int_distribution<long> nrels(0, n);
        std::vector<long> vars, rels;
        for (long j = 0; j < n; ++j) vars.push_back(vdeg(rng));
        long e = nrels(rng);
        for (long j = 0; j < e; ++j) rels.push_back(rdeg(rng));
        auto series = ci_series(vars, rels);
        CHECK(is_kronecker(series.reduced_numerator()));
        auto reduced = series.reduce();
        long check_order = 3 * (series.numerator().degree() + 10);
        CHECK(series_coefficients(series, check_order) ==
              series_coefficients(reduced, check_order));
    }
}

}  // TEST_SUITE
