#include "cyclo/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace cyclo {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { trim(); }

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(long degree, Int coeff) {
    IntPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Int& IntPoly::leading() const {
    if (coeffs_.empty()) throw EmptyInput("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Int IntPoly::evaluate(const Int& t) const {
    Int value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        value *= t;
        value += *it;
    }
    return value;
}

bool IntPoly::is_palindromic() const {
    if (coeffs_.empty()) throw EmptyInput("palindromy of the zero polynomial");
    std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    return true;
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> r(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly operator+(IntPoly lhs, const IntPoly& rhs) {
    lhs += rhs;
    return lhs;
}

IntPoly operator-(IntPoly lhs, const IntPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<Int> out(lhs.coeffs().size() + rhs.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < lhs.coeffs().size(); ++i) {
        const Int& a = lhs.coeffs()[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs().size(); ++j) {
            const Int& b = rhs.coeffs()[j];
            if (b != 0) out[i + j] += a * b;
        }
    }
    return IntPoly(std::move(out));
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw ZeroDivisor("division by the zero polynomial");
    if (p.is_zero()) return IntPoly();
    if (p.degree() < q.degree()) throw NonExactDivision("degree of dividend below divisor");

    std::vector<Int> rem = p.coeffs();
    const auto& d = q.coeffs();
    const Int& lead = d.back();
    std::size_t qlen = static_cast<std::size_t>(p.degree() - q.degree()) + 1;
    std::vector<Int> quot(qlen, 0);

    for (std::size_t step = qlen; step-- > 0;) {
        Int& top = rem[step + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw NonExactDivision("leading coefficient does not divide");
        Int c = top / lead;
        for (std::size_t j = 0; j < d.size(); ++j) rem[step + j] -= c * d[j];
        quot[step] = std::move(c);
    }
    for (const Int& r : rem)
        if (r != 0) throw NonExactDivision("nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly pow(const IntPoly& base, unsigned long k) {
    IntPoly result = IntPoly::one();
    IntPoly sq = base;
    while (k > 0) {
        if (k & 1) result *= sq;
        k >>= 1;
        if (k) sq *= sq;
    }
    return result;
}

IntPoly alternate_signs(const IntPoly& p) {
    std::vector<Int> c = p.coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPoly(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << pretty(p); }

SeriesTruncation::SeriesTruncation(long order) {
    if (order < 0) throw OrderMismatch("truncation order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

SeriesTruncation::SeriesTruncation(std::vector<Int> coeffs, long order) : SeriesTruncation(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i)
        coeffs_[i] = std::move(coeffs[i]);
}

SeriesTruncation SeriesTruncation::one(long order) {
    SeriesTruncation s(order);
    s.coeffs_[0] = 1;
    return s;
}

SeriesTruncation SeriesTruncation::of(const IntPoly& p, long order) {
    return SeriesTruncation(p.coeffs(), order);
}

const Int& SeriesTruncation::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool SeriesTruncation::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

IntPoly SeriesTruncation::to_poly() const { return IntPoly(coeffs_); }

void SeriesTruncation::check_order(const SeriesTruncation& rhs) const {
    if (coeffs_.size() != rhs.coeffs_.size())
        throw OrderMismatch("series truncation orders differ");
}

SeriesTruncation& SeriesTruncation::operator+=(const SeriesTruncation& rhs) {
    check_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

SeriesTruncation& SeriesTruncation::operator-=(const SeriesTruncation& rhs) {
    check_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

SeriesTruncation& SeriesTruncation::operator*=(const SeriesTruncation& rhs) {
    *this = *this * rhs;
    return *this;
}

SeriesTruncation operator+(SeriesTruncation lhs, const SeriesTruncation& rhs) {
    lhs += rhs;
    return lhs;
}

SeriesTruncation operator-(SeriesTruncation lhs, const SeriesTruncation& rhs) {
    lhs -= rhs;
    return lhs;
}

SeriesTruncation operator*(const SeriesTruncation& lhs, const SeriesTruncation& rhs) {
    if (lhs.order() != rhs.order()) throw OrderMismatch("series truncation orders differ");
    std::size_t n = lhs.coeffs().size();
    std::vector<Int> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Int& a = lhs.coeffs()[i];
        if (a == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            const Int& b = rhs.coeffs()[j];
            if (b != 0) out[i + j] += a * b;
        }
    }
    return SeriesTruncation(std::move(out), lhs.order());
}

SeriesTruncation series_inverse(const IntPoly& p, long order) {
    return series_inverse(SeriesTruncation::of(p, order));
}

SeriesTruncation series_inverse(const SeriesTruncation& s) {
    const Int& c0 = s.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw NonUnitConstantTerm("series inverse needs constant term +-1");
    long order = s.order();
    std::vector<Int> inv(static_cast<std::size_t>(order) + 1, 0);
    inv[0] = c0;  // 1/c0 = c0 for a unit
    for (long i = 1; i <= order; ++i) {
        Int acc = 0;
        for (long j = 1; j <= i; ++j) {
            const Int& pj = s.coeff(j);
            if (pj != 0) acc += pj * inv[static_cast<std::size_t>(i - j)];
        }
        inv[static_cast<std::size_t>(i)] = -c0 * acc;
    }
    return SeriesTruncation(std::move(inv), order);
}

SeriesTruncation binomial_series(long k, const Int& exponent, long order) {
    if (k < 1) throw OrderMismatch("binomial_series needs k >= 1");
    std::vector<Int> out(static_cast<std::size_t>(order) + 1, 0);
    // (1 - x^k)^e = sum_j C(e, j) (-1)^j x^{kj}; the running product
    // C(e,j) = C(e,j-1) * (e-j+1) / j stays integral at every step.
    Int binom = 1;
    out[0] = 1;
    for (long j = 1; j * k <= order; ++j) {
        binom *= exponent - (j - 1);
        binom /= j;
        out[static_cast<std::size_t>(j * k)] = (j % 2 == 0) ? binom : -binom;
    }
    return SeriesTruncation(std::move(out), order);
}

std::ostream& operator<<(std::ostream& os, const SeriesTruncation& s) {
    os << pretty(s.to_poly()) << " + O(x^" << s.order() + 1 << ")";
    return os;
}

IntPoly parse_coeff_list(const std::string& text) {
    std::vector<Int> coeffs;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    while (true) {
        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t start = pos;
        if (pos < n && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits = 0;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected an integer", start);
        coeffs.emplace_back(text.substr(start, pos - start));
        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == n) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return IntPoly(std::move(coeffs));
}

std::string coeff_list(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ',';
        out += p.coeffs()[i].str();
    }
    return out;
}

std::string pretty(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i <= p.degree(); ++i) {
        const Int& c = p.coeff(i);
        if (c == 0) continue;
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag.str();
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace cyclo
