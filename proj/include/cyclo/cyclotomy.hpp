#pragma once

#include <utility>
#include <vector>

#include "cyclo/intpoly.hpp"

namespace cyclo {

long euler_phi(long n);
/// Moebius function, in {-1, 0, 1}.
int moebius(long n);
bool is_prime(long n);
std::vector<long> divisors(long n);

/// The n-th cyclotomic polynomial, computed exactly as
/// prod_{d | n} (x^d - 1)^{mu(n/d)} via exact division. Memoized.
IntPoly cyclotomic(long n);

/// Result of extracting every cyclotomic factor from a polynomial:
///   unit_sign * prod Phi_n^mult * remainder == input
/// with remainder free of cyclotomic divisors and remainder(0) != 0.
struct CyclotomicFactorization {
    std::vector<std::pair<long, long>> factors;  // (index n, multiplicity), ascending n
    IntPoly remainder;
    int unit_sign = 1;

    /// All roots on the unit circle, i.e. the input is a (monic) product
    /// of cyclotomic polynomials.
    bool is_kronecker() const { return unit_sign == 1 && remainder.is_one(); }
    /// Phi_1 = x - 1 is allowed but worth flagging: numerators in scope
    /// never vanish at x = 1.
    bool has_phi1() const { return !factors.empty() && factors.front().first == 1; }
    long largest_index() const { return factors.empty() ? 0 : factors.back().first; }
    IntPoly expand() const;
};

/// Complete cyclotomic factor extraction by bounded trial division: any
/// Phi_n dividing f has phi(n) <= deg f, and phi(n) >= sqrt(n/2) caps the
/// candidates at n <= 2 deg^2.
CyclotomicFactorization kronecker_factor(const IntPoly& f);
bool is_kronecker(const IntPoly& f);

/// Truncated cyclotomic exponent sequence: the unique integers e_1..e_B
/// with prod_{i<=B} (1 - x^i)^{e_i} == f mod x^{B+1}.
struct ExponentSequence {
    long bound = 0;
    std::vector<Int> values;  // values[i-1] is the exponent of (1 - x^i)
    bool residual_is_trivial = true;

    const Int& at(long i) const { return values.at(static_cast<std::size_t>(i - 1)); }
};

ExponentSequence exponent_sequence(const IntPoly& f, long bound);
ExponentSequence exponent_sequence_of_series(SeriesTruncation series);
SeriesTruncation reconstruct_from_exponents(const ExponentSequence& seq);

}  // namespace cyclo
