#include "cyclo/cyclotomy.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cyclo {

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi needs n >= 1");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        result -= result / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) result -= result / n;
    return result;
}

int moebius(long n) {
    if (n < 1) throw std::invalid_argument("moebius needs n >= 1");
    int sign = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

IntPoly x_power_minus_one(long d) {
    std::vector<Int> c(static_cast<std::size_t>(d) + 1, 0);
    c[0] = -1;
    c.back() = 1;
    return IntPoly(std::move(c));
}

IntPoly compute_cyclotomic(long n) {
    if (n == 1) return IntPoly({-1, 1});
    IntPoly num = IntPoly::one();
    std::vector<long> den_degrees;
    for (long d : divisors(n)) {
        int mu = moebius(n / d);
        if (mu == 1)
            num *= x_power_minus_one(d);
        else if (mu == -1)
            den_degrees.push_back(d);
    }
    for (long d : den_degrees) num = exact_div(num, x_power_minus_one(d));
    return num;
}

}  // namespace

IntPoly cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic needs n >= 1");
    static std::mutex mutex;
    static std::map<long, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IntPoly value = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(n, std::move(value)).first->second;
}

IntPoly CyclotomicFactorization::expand() const {
    IntPoly p = IntPoly::constant(unit_sign);
    for (const auto& [n, mult] : factors) p *= pow(cyclotomic(n), static_cast<unsigned long>(mult));
    return p * remainder;
}

CyclotomicFactorization kronecker_factor(const IntPoly& f) {
    if (f.is_zero()) throw ZeroInput("kronecker_factor of the zero polynomial");
    if (f.coeff(0) == 0)
        throw NonUnitAtZero("kronecker_factor needs f(0) != 0; strip x powers first");

    CyclotomicFactorization out;
    IntPoly rem = f;
    long deg = rem.degree();
    // phi(n) >= sqrt(n/2), so any cyclotomic divisor has index <= 2 deg^2.
    long limit = 2 * deg * deg;
    for (long n = 1; n <= limit && rem.degree() > 0; ++n) {
        long phi = euler_phi(n);
        if (phi > rem.degree()) continue;
        const IntPoly phi_n = cyclotomic(n);
        long mult = 0;
        while (rem.degree() >= phi_n.degree()) {
            try {
                rem = exact_div(rem, phi_n);
                ++mult;
            } catch (const NonExactDivision&) {
                break;
            }
        }
        if (mult > 0) out.factors.emplace_back(n, mult);
    }
    out.unit_sign = rem.leading() < 0 ? -1 : 1;
    out.remainder = out.unit_sign < 0 ? -rem : rem;
    return out;
}

bool is_kronecker(const IntPoly& f) { return kronecker_factor(f).is_kronecker(); }

ExponentSequence exponent_sequence(const IntPoly& f, long bound) {
    if (f.coeff(0) != 1) throw ConstantTermNotOne("exponent_sequence needs f(0) = 1");
    if (bound < 1) throw std::invalid_argument("exponent_sequence needs bound >= 1");
    return exponent_sequence_of_series(SeriesTruncation::of(f, bound));
}

ExponentSequence exponent_sequence_of_series(SeriesTruncation residual) {
    if (residual.coeff(0) != 1)
        throw ConstantTermNotOne("exponent sequence extraction needs constant term 1");
    const long bound = residual.order();
    ExponentSequence seq;
    seq.bound = bound;
    seq.values.reserve(static_cast<std::size_t>(bound));
    // At step i the residual is 1 + c x^i + ...; dividing by (1 - x^i)^{-c}
    // clears the x^i term and leaves lower terms untouched.
    for (long i = 1; i <= bound; ++i) {
        const Int c = residual.coeff(i);
        seq.values.push_back(-c);
        if (c != 0) residual *= binomial_series(i, c, bound);
    }
    seq.residual_is_trivial = residual.is_one();
    return seq;
}

SeriesTruncation reconstruct_from_exponents(const ExponentSequence& seq) {
    SeriesTruncation out = SeriesTruncation::one(seq.bound);
    for (long i = 1; i <= static_cast<long>(seq.values.size()) && i <= seq.bound; ++i) {
        const Int& e = seq.values[static_cast<std::size_t>(i - 1)];
        if (e != 0) out *= binomial_series(i, e, seq.bound);
    }
    return out;
}

}  // namespace cyclo
