#include "cyclo/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "cyclo/cyclotomy.hpp"

namespace cyclo {

namespace {

IntPoly one_minus_x_pow(long d) {
    std::vector<Int> c(static_cast<std::size_t>(d) + 1, 0);
    c[0] = 1;
    c.back() = -1;
    return IntPoly(std::move(c));
}

using FactorMultiset = std::map<long, long>;

FactorMultiset divisor_multiset(const std::vector<long>& orders) {
    FactorMultiset out;
    for (long d : orders)
        for (long k : divisors(d)) ++out[k];
    return out;
}

}  // namespace

HilbertSeries::HilbertSeries(IntPoly numerator, std::vector<long> den_orders, bool reduced)
    : numerator_(std::move(numerator)), den_orders_(std::move(den_orders)), reduced_(reduced) {
    for (long d : den_orders_)
        if (d < 1) throw std::invalid_argument("denominator orders must be >= 1");
    std::sort(den_orders_.begin(), den_orders_.end());
}

IntPoly HilbertSeries::denominator_poly() const {
    IntPoly den = IntPoly::one();
    for (long d : den_orders_) den *= one_minus_x_pow(d);
    return den;
}

HilbertSeries HilbertSeries::reduce() const {
    if (numerator_.is_zero()) return HilbertSeries(IntPoly(), {}, true);

    CyclotomicFactorization fact = kronecker_factor(numerator_);
    FactorMultiset num;
    for (const auto& [n, mult] : fact.factors) num[n] = mult;
    FactorMultiset den = divisor_multiset(den_orders_);

    // Full cancellation in the Phi-multiset domain.
    FactorMultiset cancelled;
    for (auto& [k, cnt] : den) {
        auto it = num.find(k);
        if (it == num.end()) continue;
        long c = std::min(cnt, it->second);
        if (c == 0) continue;
        cancelled[k] = c;
        cnt -= c;
        it->second -= c;
    }

    // Recompose the leftover denominator as prod (1 - x^d), greedily from
    // the largest index. A missing divisor is pulled back from the
    // cancelled pool (restoring it on both sides keeps the series equal).
    std::vector<long> orders;
    bool restored = false;
    while (true) {
        long m = 0;
        for (const auto& [k, cnt] : den)
            if (cnt > 0) m = std::max(m, k);
        if (m == 0) break;
        for (long k : divisors(m)) {
            if (den[k] > 0) continue;
            auto it = cancelled.find(k);
            if (it == cancelled.end() || it->second == 0)
                throw std::logic_error("denominator multiset lost divisor closure");
            --it->second;
            ++den[k];
            ++num[k];
            restored = true;
        }
        for (long k : divisors(m)) --den[k];
        orders.push_back(m);
    }

    // Sign bookkeeping: prod (1 - x^{d}) over the new orders equals
    // (-1)^{#orders} prod Phi, and the original numerator carried
    // fact.unit_sign together with one -1 per original denominator factor.
    int sign = fact.unit_sign;
    if ((den_orders_.size() + orders.size()) % 2 == 1) sign = -sign;
    IntPoly new_num = IntPoly::constant(sign);
    for (const auto& [k, cnt] : num)
        if (cnt > 0) new_num *= pow(cyclotomic(k), static_cast<unsigned long>(cnt));
    new_num *= fact.remainder;

    return HilbertSeries(std::move(new_num), std::move(orders), !restored);
}

IntPoly HilbertSeries::reduced_numerator() const {
    if (numerator_.is_zero()) return IntPoly();
    CyclotomicFactorization fact = kronecker_factor(numerator_);
    FactorMultiset num;
    for (const auto& [n, mult] : fact.factors) num[n] = mult;
    FactorMultiset den = divisor_multiset(den_orders_);
    long den_phi1_left = 0;
    for (auto& [k, cnt] : den) {
        auto it = num.find(k);
        if (it != num.end()) {
            long c = std::min(cnt, it->second);
            cnt -= c;
            it->second -= c;
        }
        if (k == 1) den_phi1_left = cnt;
    }
    // N = H * D with D the leftover denominator normalized to D(0) = 1,
    // which costs a sign per leftover Phi_1 and one per original factor.
    int sign = fact.unit_sign;
    if ((static_cast<long>(den_orders_.size()) + den_phi1_left) % 2 == 1) sign = -sign;
    IntPoly out = IntPoly::constant(sign);
    for (const auto& [k, cnt] : num)
        if (cnt > 0) out *= pow(cyclotomic(k), static_cast<unsigned long>(cnt));
    return out * fact.remainder;
}

long HilbertSeries::krull_dimension() const {
    if (numerator_.is_zero()) return 0;
    long root_one_mult = 0;
    IntPoly p = numerator_;
    const IntPoly x_minus_one({-1, 1});
    while (p.degree() >= 1 && p.evaluate(1) == 0) {
        p = exact_div(p, x_minus_one);
        ++root_one_mult;
    }
    return static_cast<long>(den_orders_.size()) - root_one_mult;
}

HilbertSeries ci_series(const std::vector<long>& var_degrees,
                        const std::vector<long>& rel_degrees) {
    if (rel_degrees.size() > var_degrees.size())
        throw TooManyRelations("more relations than variables");
    for (long d : var_degrees)
        if (d < 1) throw std::invalid_argument("variable degrees must be >= 1");
    for (long m : rel_degrees)
        if (m < 2) throw std::invalid_argument("relation degrees must be >= 2");
    IntPoly num = IntPoly::one();
    for (long m : rel_degrees) num *= one_minus_x_pow(m);
    return HilbertSeries(std::move(num), var_degrees, false);
}

SeriesTruncation series_coefficients(const HilbertSeries& h, long order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    SeriesTruncation inv = series_inverse(h.denominator_poly(), order);
    return SeriesTruncation::of(h.numerator(), order) * inv;
}

std::pair<IntPoly, long> h_polynomial(const HilbertSeries& h) {
    HilbertSeries r = h.reduced() ? h : h.reduce();
    for (long d : r.den_orders())
        if (d != 1) throw NotStandardGraded("reduced denominator is not a power of (1 - x)");
    return {r.numerator(), static_cast<long>(r.den_orders().size())};
}

DeviationSequence koszul_deviations(const IntPoly& h, long dim, long bound) {
    ExponentSequence e = exponent_sequence(h, bound);
    DeviationSequence out;
    out.bound = bound;
    out.values.reserve(e.values.size());
    for (long i = 1; i <= bound; ++i) {
        const Int& ei = e.values[static_cast<std::size_t>(i - 1)];
        if (i == 1)
            out.values.push_back(dim - ei);
        else
            out.values.push_back(i % 2 == 0 ? ei : -ei);
    }
    return out;
}

SeriesTruncation poincare_coefficients(const HilbertSeries& h, long bound) {
    // Froeberg's identity H(R,x) P(R,-x) = 1 gives P(R,x) = 1 / H(R,-x).
    IntPoly den_neg = alternate_signs(h.denominator_poly());
    IntPoly num_neg = alternate_signs(h.numerator());
    return SeriesTruncation::of(den_neg, bound) * series_inverse(num_neg, bound);
}

DeviationSequence deviations_from_poincare(const SeriesTruncation& betti) {
    if (betti.coeff(0) != 1) throw ConstantTermNotOne("Poincare series must start with 1");
    const long bound = betti.order();
    std::vector<Int> neg = betti.coeffs();
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    SeriesTruncation p_neg(std::move(neg), bound);
    // P(R,-x)^{-1} = prod (1 - x^i)^{(-1)^i epsilon_i}
    ExponentSequence e = exponent_sequence_of_series(series_inverse(p_neg));
    DeviationSequence out;
    out.bound = bound;
    for (long i = 1; i <= bound; ++i) {
        const Int& ei = e.values[static_cast<std::size_t>(i - 1)];
        out.values.push_back(i % 2 == 0 ? ei : -ei);
    }
    return out;
}

namespace {

double log_of(const Int& v) {
    if (v <= 1) return 0.0;
    // Split off the top bits so huge values stay in double range.
    unsigned msb = boost::multiprecision::msb(v);
    if (msb <= 52) return std::log(v.convert_to<double>());
    Int top = v >> (msb - 52);
    return std::log(top.convert_to<double>()) + static_cast<double>(msb - 52) * std::log(2.0);
}

}  // namespace

CurvatureEstimate curvature_estimate(const SeriesTruncation& betti, long window) {
    if (window < 1 || window > betti.order() + 1)
        throw std::invalid_argument("window must be within the truncation");
    double best = 0.0;
    for (long n = betti.order() - window + 1; n <= betti.order(); ++n) {
        if (n < 1) continue;
        Int b = abs(betti.coeff(n));
        if (b == 0) continue;
        best = std::max(best, std::exp(log_of(b) / static_cast<double>(n)));
    }
    return CurvatureEstimate{static_cast<long>(std::llround(best * 1e4))};
}

FVector h_to_f(const HVector& h, long dim) {
    if (static_cast<long>(h.size()) > dim + 1)
        throw DimensionTooSmall("h-vector longer than dim + 1");
    // f_{i-1} = sum_j h_j C(D-j, i-j), the coefficient of y^{D-i} in
    // sum_j h_j (y+1)^{D-j}.
    FVector f(static_cast<std::size_t>(dim) + 1, 0);
    for (long i = 0; i <= dim; ++i) {
        Int acc = 0;
        for (long j = 0; j <= i && j < static_cast<long>(h.size()); ++j) {
            Int binom = 1;  // C(dim-j, i-j)
            for (long t = 1; t <= i - j; ++t) {
                binom *= dim - j - t + 1;
                binom /= t;
            }
            acc += h[static_cast<std::size_t>(j)] * binom;
        }
        f[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return f;
}

HVector f_to_h(const FVector& f) {
    const long dim = static_cast<long>(f.size()) - 1;
    if (dim < 0) throw EmptyInput("f_to_h of an empty vector");
    HVector h(f.size(), 0);
    for (long j = 0; j <= dim; ++j) {
        Int acc = 0;
        for (long i = 0; i <= j; ++i) {
            Int binom = 1;  // C(dim-i, j-i)
            for (long t = 1; t <= j - i; ++t) {
                binom *= dim - i - t + 1;
                binom /= t;
            }
            if ((j - i) % 2 == 1) binom = -binom;
            acc += f[static_cast<std::size_t>(i)] * binom;
        }
        h[static_cast<std::size_t>(j)] = std::move(acc);
    }
    return h;
}

Int lemma45_fD2(const HVector& h, long dim) {
    if (static_cast<long>(h.size()) > dim + 1)
        throw DimensionTooSmall("h-vector longer than dim + 1");
    Int acc = 0;
    for (long j = 0; j < static_cast<long>(h.size()); ++j)
        acc += h[static_cast<std::size_t>(j)] * (dim - j);
    return acc;
}

std::optional<std::pair<long, CyclotomicHVerdict>> detect_irreducible_cyclotomic_h(
    const IntPoly& h) {
    if (h.coeff(0) != 1) throw ConstantTermNotOne("h-polynomial must have constant term 1");
    long deg = h.degree();
    if (deg < 1) return std::nullopt;
    long limit = 2 * deg * deg;
    for (long m = 2; m <= limit; ++m) {
        if (euler_phi(m) != deg) continue;
        if (cyclotomic(m) == h) {
            auto verdict = is_prime(m) ? CyclotomicHVerdict::AdmissibleHypersurface
                                       : CyclotomicHVerdict::Inadmissible;
            return std::make_pair(m, verdict);
        }
    }
    return std::nullopt;
}

PlaneMonoidResult plane_monoid_hilbert(const std::vector<std::pair<long, long>>& generators,
                                       long order) {
    if (generators.empty()) throw EmptyInput("plane monoid needs at least one generator");
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    const long total = generators.front().first + generators.front().second;
    if (total < 1) throw std::invalid_argument("generators must have positive degree");
    for (const auto& [a, b] : generators) {
        if (a < 0 || b < 0) throw std::invalid_argument("generator coordinates must be >= 0");
        if (a + b != total)
            throw std::invalid_argument("generators must share one coordinate sum");
    }

    // Closure of the monoid on the grid [0, total*order]^2; an element of
    // coordinate sum total*i lives in graded piece i.
    const long side = total * order + 1;
    if (side > 8192) throw std::invalid_argument("grid too large; lower degree * order");
    std::vector<uint8_t> reach(static_cast<std::size_t>(side) * side, 0);
    auto at = [&](long x, long y) -> uint8_t& {
        return reach[static_cast<std::size_t>(x) * side + y];
    };
    at(0, 0) = 1;
    for (long x = 0; x < side; ++x)
        for (long y = 0; y < side; ++y) {
            if (at(x, y)) continue;
            for (const auto& [a, b] : generators)
                if (x >= a && y >= b && at(x - a, y - b)) {
                    at(x, y) = 1;
                    break;
                }
        }

    PlaneMonoidResult result;
    result.values.assign(static_cast<std::size_t>(order) + 1, 0);
    for (long x = 0; x < side; ++x)
        for (long y = 0; y < side; ++y) {
            if (!at(x, y)) continue;
            long sum = x + y;
            if (sum % total == 0 && sum / total <= order) ++result.values[sum / total];
        }

    std::vector<Int> values(result.values.begin(), result.values.end());
    SeriesTruncation fitted =
        SeriesTruncation::of(IntPoly({1, -2, 1}), order) * SeriesTruncation(values, order);
    long last = -1;
    for (long i = 0; i <= order; ++i)
        if (fitted.coeff(i) != 0) last = i;
    if (last > order - 2)
        throw FitDidNotStabilize("h-polynomial fit did not stabilize; raise the order");
    result.h = fitted.to_poly();
    return result;
}

}  // namespace cyclo
