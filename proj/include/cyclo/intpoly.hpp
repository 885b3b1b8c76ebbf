#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

using Int = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Coefficients are stored low degree first and trailing
/// zeros are trimmed after every operation, so the zero polynomial is the
/// empty vector and equality is structural.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<Int> coeffs);

    static IntPoly constant(Int c);
    static IntPoly one() { return constant(1); }
    /// c * x^degree
    static IntPoly monomial(long degree, Int coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^i; zero outside the stored range.
    const Int& coeff(long i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const;

    Int evaluate(const Int& t) const;
    /// True iff p(x) = x^s p(1/x), s = degree. Throws EmptyInput on zero.
    bool is_palindromic() const;
    IntPoly reversed() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly operator-() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

   private:
    std::vector<Int> coeffs_;
    void trim();
};

IntPoly operator+(IntPoly lhs, const IntPoly& rhs);
IntPoly operator-(IntPoly lhs, const IntPoly& rhs);
IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);

/// Exact quotient p/q over the integers. Throws ZeroDivisor when q = 0 and
/// NonExactDivision when q does not divide p in Z[x].
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

/// base^k by repeated squaring.
IntPoly pow(const IntPoly& base, unsigned long k);

/// p(x) -> p(-x)
IntPoly alternate_signs(const IntPoly& p);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// Power series truncated at a fixed order B (inclusive): coefficients of
/// x^0..x^B. Arithmetic is only defined between equal orders.
class SeriesTruncation {
   public:
    explicit SeriesTruncation(long order);
    SeriesTruncation(std::vector<Int> coeffs, long order);

    static SeriesTruncation one(long order);
    static SeriesTruncation of(const IntPoly& p, long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Int& coeff(long i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_one() const;

    /// Leading polynomial part: coefficients up to the last nonzero one.
    IntPoly to_poly() const;

    SeriesTruncation& operator+=(const SeriesTruncation& rhs);
    SeriesTruncation& operator-=(const SeriesTruncation& rhs);
    SeriesTruncation& operator*=(const SeriesTruncation& rhs);

    friend bool operator==(const SeriesTruncation&, const SeriesTruncation&) = default;

   private:
    std::vector<Int> coeffs_;  // always order()+1 entries
    void check_order(const SeriesTruncation& rhs) const;
};

SeriesTruncation operator+(SeriesTruncation lhs, const SeriesTruncation& rhs);
SeriesTruncation operator-(SeriesTruncation lhs, const SeriesTruncation& rhs);
SeriesTruncation operator*(const SeriesTruncation& lhs, const SeriesTruncation& rhs);

/// Multiplicative inverse of p as a power series mod x^{B+1}. Requires
/// p(0) = +-1 so the inverse has integer coefficients.
SeriesTruncation series_inverse(const IntPoly& p, long order);
SeriesTruncation series_inverse(const SeriesTruncation& s);

/// (1 - x^k)^e truncated, for any integer exponent e (negative allowed).
SeriesTruncation binomial_series(long k, const Int& exponent, long order);

std::ostream& operator<<(std::ostream& os, const SeriesTruncation& s);

// Text forms used across the CLI: comma-separated coefficients, low degree
// first ("1,-1,0,1" is 1 - x + x^3), and a pretty-printer emitting
// "1 - x + x^3".
IntPoly parse_coeff_list(const std::string& text);
std::string coeff_list(const IntPoly& p);
std::string pretty(const IntPoly& p);

}  // namespace cyclo
