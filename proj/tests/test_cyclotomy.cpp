#include "doctest.h"

#include <random>

#include "cyclo/cyclotomy.hpp"
#include "oracles.hpp"

using namespace cyclo;

TEST_SUITE("cyclotomy") {

TEST_CASE("arithmetic functions") {
    CHECK(euler_phi(1) == 1);
    CHECK(moebius(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(moebius(12) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    CHECK(euler_phi(97) == 96);
    CHECK(divisors(36) == std::vector<long>{1, 2, 3, 4, 6, 9, 12, 18, 36});
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    for (long p : {2, 3, 5, 7, 11}) {
        std::vector<Int> ones(static_cast<std::size_t>(p), 1);
        CHECK(cyclotomic(p) == IntPoly(ones));
    }
    CHECK(cyclotomic(105).coeff(7) == -2);
    for (long n = 1; n <= 60; ++n) CHECK(cyclotomic(n).degree() == euler_phi(n));
}

TEST_CASE("cyclotomic matches the recursive-quotient oracle") {
    for (long n = 1; n <= 120; ++n) CHECK(cyclotomic(n) == oracles::cyclotomic_by_recursion(n));
}

TEST_CASE("lemma: value at 1 is p on prime powers, else 1") {
    for (long m = 2; m <= 200; ++m) {
        long base = 0;
        long t = m;
        bool single_prime = true;
        for (long q = 2; q * q <= t; ++q) {
            if (t % q) continue;
            if (base == 0)
                base = q;
            else
                single_prime = false;
            while (t % q == 0) t /= q;
        }
        if (t > 1) {
            if (base == 0)
                base = t;
            else
                single_prime = false;
        }
        Int expected = single_prime ? Int(base) : Int(1);
        CHECK(cyclotomic(m).evaluate(1) == expected);
    }
}

TEST_CASE("lemma: prime power index composes with x^(p^(k-1))") {
    for (long p : {2, 3, 5, 7, 11, 13}) {
        for (long k = 2; k <= 3; ++k) {
            long pk = 1;
            for (long i = 0; i < k; ++i) pk *= p;
            IntPoly composed;
            {
                long step = pk / p;
                std::vector<Int> c(static_cast<std::size_t>(step * (p - 1)) + 1, 0);
                for (long j = 0; j < p; ++j) c[static_cast<std::size_t>(j * step)] = 1;
                composed = IntPoly(std::move(c));  // Phi_p evaluated at x^(p^(k-1))
            }
            CHECK(cyclotomic(pk) == composed);
        }
    }
}

TEST_CASE("kronecker_factor examples") {
    auto cube = kronecker_factor(pow(IntPoly{1, 1}, 3));
    CHECK(cube.factors == std::vector<std::pair<long, long>>{{2, 3}});
    CHECK(cube.remainder.is_one());
    CHECK(cube.unit_sign == 1);
    CHECK(cube.is_kronecker());

    auto none = kronecker_factor(IntPoly{1, -1, 0, 1});
    CHECK(none.factors.empty());
    CHECK(none.remainder == IntPoly{1, -1, 0, 1});
    CHECK_FALSE(none.is_kronecker());

    auto p35 = kronecker_factor(IntPoly{1, -1, 0, 1, -1, 1, 0, -1, 1});
    CHECK(p35.factors == std::vector<std::pair<long, long>>{{15, 1}});
    CHECK(p35.is_kronecker());

    CHECK_THROWS_AS(kronecker_factor(IntPoly()), ZeroInput);
    CHECK_THROWS_AS(kronecker_factor(IntPoly{0, 1}), NonUnitAtZero);
}

TEST_CASE("kronecker_factor expand reproduces the input") {
    std::mt19937_64 rng(20260812);
    for (int i = 0; i < 50; ++i) {
        IntPoly f = oracles::random_cyclotomic_product(rng, 20, 24, 4);
        auto fact = kronecker_factor(f);
        CHECK(fact.expand() == f);
        CHECK(fact.is_kronecker());
    }
}

TEST_CASE("is_kronecker examples") {
    CHECK(is_kronecker(IntPoly{1, 1, 1}));
    CHECK_FALSE(is_kronecker(IntPoly{1, -1, 0, 1}));
    CHECK(is_kronecker(IntPoly{1, -1, 1} * pow(IntPoly{1, 1}, 2)));
    CHECK(is_kronecker(IntPoly{1}));
    CHECK_FALSE(is_kronecker(IntPoly{-1}));
    CHECK_FALSE(is_kronecker(IntPoly{2, 2}));
    // Phi_1 is Kronecker (root 1 lies on the unit circle) but flagged.
    auto phi1 = kronecker_factor(IntPoly{-1, 1});
    CHECK(phi1.is_kronecker());
    CHECK(phi1.has_phi1());
}

TEST_CASE("multiplicity extraction keeps dividing the same index") {
    IntPoly f = pow(cyclotomic(6), 4) * pow(cyclotomic(2), 2) * cyclotomic(12);
    auto fact = kronecker_factor(f);
    CHECK(fact.factors ==
          std::vector<std::pair<long, long>>{{2, 2}, {6, 4}, {12, 1}});
}

TEST_CASE("exponent_sequence examples") {
    auto e = exponent_sequence(IntPoly{1, -1, 1}, 8);
    CHECK(e.values == std::vector<Int>{1, -1, -1, 0, 0, 1, 0, 0});
    CHECK(e.residual_is_trivial);

    auto e2 = exponent_sequence(IntPoly{1, 1}, 4);
    CHECK(e2.values == std::vector<Int>{-1, 1, 0, 0});

    auto e3 = exponent_sequence(IntPoly{1}, 6);
    CHECK(e3.values == std::vector<Int>(6, 0));

    CHECK_THROWS_AS(exponent_sequence(IntPoly{2, 1}, 4), ConstantTermNotOne);
    CHECK_THROWS_AS(exponent_sequence(IntPoly{1, 1}, 0), std::invalid_argument);
}

TEST_CASE("reconstruct_from_exponents examples") {
    ExponentSequence seq{6, {1, -1, -1, 0, 0, 1}, true};
    auto series = reconstruct_from_exponents(seq);
    CHECK(series == SeriesTruncation::of(IntPoly{1, -1, 1}, 6));

    ExponentSequence zero{5, {0, 0, 0, 0, 0}, true};
    CHECK(reconstruct_from_exponents(zero).is_one());

    ExponentSequence neg{1, {-1}, true};
    CHECK(reconstruct_from_exponents(neg) == SeriesTruncation({1, 1}, 1));
}

TEST_CASE("exponent sequence round trip") {
    std::mt19937_64 rng(20260813);
    std::uniform_int_distribution<long> deg(0, 15);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int i = 0; i < 100; ++i) {
        std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = coeff(rng);
        c[0] = 1;
        IntPoly f(std::move(c));
        long bound = std::max(1L, 2 * f.degree());
        auto seq = exponent_sequence(f, bound);
        CHECK(reconstruct_from_exponents(seq) == SeriesTruncation::of(f, bound));
    }
}

TEST_CASE("Kronecker polynomials have finitely supported exponent sequences") {
    std::mt19937_64 rng(20260814);
    for (int i = 0; i < 25; ++i) {
        IntPoly f = oracles::random_cyclotomic_product(rng, 16, 12, 3);
        auto fact = kronecker_factor(f);
        REQUIRE(fact.is_kronecker());
        REQUIRE(f.evaluate(1) != 0);
        long bound = 2 * f.degree() * f.degree();
        auto seq = exponent_sequence(f, bound);
        long largest = fact.largest_index();
        for (long j = largest + 1; j <= bound; ++j) CHECK(seq.at(j) == 0);
        // Cross-multiplied exact polynomial identity:
        // prod_{e_i > 0} (1 - x^i)^{e_i} == f * prod_{e_i < 0} (1 - x^i)^{-e_i}.
        IntPoly lhs = IntPoly::one();
        IntPoly rhs = f;
        for (long j = 1; j <= largest; ++j) {
            const Int& e = seq.at(j);
            if (e == 0) continue;
            std::vector<Int> c(static_cast<std::size_t>(j) + 1, 0);
            c[0] = 1;
            c.back() = -1;
            IntPoly factor(std::move(c));
            unsigned long count = abs(e).convert_to<unsigned long>();
            if (e > 0)
                lhs *= pow(factor, count);
            else
                rhs *= pow(factor, count);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("agreement with the root-modulus oracle") {
    std::mt19937_64 rng(20260815);
    std::uniform_int_distribution<long> flip(1, 39);
    std::uniform_int_distribution<int> delta(1, 2);
    int kronecker_seen = 0, non_kronecker_seen = 0;
    for (int i = 0; i < 100; ++i) {
        IntPoly f = oracles::random_cyclotomic_product(rng, 30, 40, 5);
        bool exact = is_kronecker(f);
        CHECK(exact == oracles::unit_circle_roots(f));
        if (exact) ++kronecker_seen;

        // Perturb one inner coefficient; keep f(0) != 0.
        std::vector<Int> c = f.coeffs();
        if (c.size() > 2) {
            std::size_t k = static_cast<std::size_t>(flip(rng)) % (c.size() - 1);
            if (k == 0) k = 1;
            c[k] += delta(rng);
            IntPoly g(std::move(c));
            bool exact_g = is_kronecker(g);
            CHECK(exact_g == oracles::unit_circle_roots(g));
            if (!exact_g) ++non_kronecker_seen;
        }
    }
    CHECK(kronecker_seen > 50);
    CHECK(non_kronecker_seen > 50);
}

TEST_CASE("Kronecker with nonzero value at 1 implies palindromic") {
    std::mt19937_64 rng(20260816);
    for (int i = 0; i < 50; ++i) {
        IntPoly f = oracles::random_cyclotomic_product(rng, 25, 30, 4);
        if (f.evaluate(1) == 0) continue;
        CHECK(f.is_palindromic());
    }
}

}  // TEST_SUITE
