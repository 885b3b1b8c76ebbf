#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclo/intpoly.hpp"

namespace cyclo {

/// Hilbert series numerator / prod_d (1 - x^d), the denominator given as a
/// multiset of factor orders d. `reduced` means numerator and denominator
/// share no cyclotomic factor.
class HilbertSeries {
   public:
    HilbertSeries(IntPoly numerator, std::vector<long> den_orders, bool reduced = false);

    const IntPoly& numerator() const { return numerator_; }
    const std::vector<long>& den_orders() const { return den_orders_; }
    bool reduced() const { return reduced_; }

    IntPoly denominator_poly() const;

    /// Cancels shared cyclotomic factors between numerator and
    /// denominator, keeping the denominator expressible as a product of
    /// (1 - x^d). Factors that cannot be cancelled within that shape are
    /// kept on both sides, in which case the result is marked unreduced.
    HilbertSeries reduce() const;

    /// Numerator of the series in lowest terms with the denominator
    /// normalized to constant term 1, with no shape restriction on the
    /// denominator. For a complete intersection profile this is a monic
    /// product of cyclotomic polynomials.
    IntPoly reduced_numerator() const;

    /// Order of the pole at x = 1: number of denominator factors minus the
    /// multiplicity of the root 1 in the numerator.
    long krull_dimension() const;

   private:
    IntPoly numerator_;
    std::vector<long> den_orders_;  // sorted ascending
    bool reduced_;
};

/// Hilbert series of a graded complete intersection with variables of
/// degrees d_1..d_n and a regular sequence of degrees m_1..m_e:
/// prod (1 - x^{m_j}) / prod (1 - x^{d_i}), non-reduced. Throws
/// TooManyRelations when e > n.
HilbertSeries ci_series(const std::vector<long>& var_degrees,
                        const std::vector<long>& rel_degrees);

/// Hilbert function values 0..order.
SeriesTruncation series_coefficients(const HilbertSeries& h, long order);

/// (numerator, d) for a reduced series with denominator (1 - x)^d.
/// Throws NotStandardGraded otherwise.
std::pair<IntPoly, long> h_polynomial(const HilbertSeries& h);

/// Deviations epsilon_1..epsilon_B of a graded algebra, defined through
/// the infinite-product form of the Poincare series.
struct DeviationSequence {
    long bound = 0;
    std::vector<Int> values;  // values[i-1] = epsilon_i

    const Int& at(long i) const { return values.at(static_cast<std::size_t>(i - 1)); }
};

/// Deviations of a Koszul algebra with h-polynomial h and Krull dimension
/// d, through the cyclotomic exponent sequence of h:
/// epsilon_1 = d - e_1 and epsilon_i = (-1)^i e_i for i >= 2.
/// Koszulness is an asserted precondition, never verified here.
DeviationSequence koszul_deviations(const IntPoly& h, long dim, long bound);

/// Betti numbers beta_0..beta_B of the residue field over a Koszul algebra
/// with the given Hilbert series, read off 1 / H(R, -x).
SeriesTruncation poincare_coefficients(const HilbertSeries& h, long bound);

/// Extracts the deviations from a Poincare series truncation, using
/// P(R,-x)^{-1} = prod (1 - x^i)^{(-1)^i epsilon_i}.
DeviationSequence deviations_from_poincare(const SeriesTruncation& betti);

/// max beta_n^{1/n} over the trailing `window` indices; a diagnostic
/// stand-in for the curvature limsup, reported to 4 decimal places.
struct CurvatureEstimate {
    long scaled = 0;  // estimate * 10^4, rounded
    double value() const { return static_cast<double>(scaled) / 1e4; }
};
CurvatureEstimate curvature_estimate(const SeriesTruncation& betti, long window);

using HVector = std::vector<Int>;  // h_0..h_s
using FVector = std::vector<Int>;  // f_{-1}..f_{D-1}

/// Transforms along sum_i f_{i-1} (x-1)^{D-i} = sum_i h_i x^{D-i}.
FVector h_to_f(const HVector& h, long dim);
HVector f_to_h(const FVector& f);
/// f_{D-2} = D h_0 + (D-1) h_1 + ... directly from the transform.
Int lemma45_fD2(const HVector& h, long dim);

enum class CyclotomicHVerdict {
    AdmissibleHypersurface,  // h = Phi_p, p prime: hypersurface of degree p
    Inadmissible,            // h = Phi_m, m not prime: no standard graded algebra
};

/// If h equals some cyclotomic polynomial Phi_m, returns m with the
/// verdict; nullopt when h is no cyclotomic polynomial.
std::optional<std::pair<long, CyclotomicHVerdict>> detect_irreducible_cyclotomic_h(
    const IntPoly& h);

/// Graded count of the submonoid of N^2 generated by pairs of equal
/// coordinate sum D, plus the h-polynomial fitted against denominator
/// (1 - x)^2. Throws FitDidNotStabilize when the fit is not polynomial
/// within the truncation (raise the order).
struct PlaneMonoidResult {
    std::vector<long> values;  // monoid elements of coordinate sum D*i, i = 0..order
    IntPoly h;
};
PlaneMonoidResult plane_monoid_hilbert(const std::vector<std::pair<long, long>>& generators,
                                       long order);

}  // namespace cyclo
