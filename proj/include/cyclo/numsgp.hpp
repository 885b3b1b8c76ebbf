#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "cyclo/intpoly.hpp"

namespace cyclo {

/// Numerical semigroup: an additive submonoid of N with finite complement.
/// Immutable after construction; membership is O(1) through the Apery set
/// with respect to the multiplicity.
class NumericalSemigroup {
   public:
    /// Builds the semigroup generated by `gens`, minimalizing the
    /// generating set. Throws EmptyInput and GcdNotOne.
    static NumericalSemigroup from_generators(const std::vector<long>& gens);
    /// N itself, encoded with frobenius -1, genus 0, min_gens {1}.
    static NumericalSemigroup natural();
    /// {0} united with [m, infinity); natural() when m = 1.
    static NumericalSemigroup ordinary(long m);

    const std::vector<long>& min_gens() const { return min_gens_; }
    long embedding_dimension() const { return static_cast<long>(min_gens_.size()); }
    long multiplicity() const { return static_cast<long>(apery_.size()); }
    long frobenius() const { return frobenius_; }
    long genus() const { return genus_; }
    /// apery()[i] is the least element congruent to i mod multiplicity.
    const std::vector<long>& apery() const { return apery_; }
    std::vector<long> gaps() const;

    bool contains(long n) const;
    /// z in S iff F - z not in S; equivalently 2 genus = frobenius + 1.
    bool is_symmetric() const { return 2 * genus_ == frobenius_ + 1; }

    /// P_S(x) = 1 + (x - 1) sum_{g gap} x^g.
    IntPoly semigroup_polynomial() const;

    /// Children in the semigroup tree: S minus one minimal generator
    /// g > frobenius, derived incrementally from this node's Apery set.
    /// Children with frobenius (= g) above `max_frobenius` are skipped;
    /// pass -1 for no bound.
    std::vector<NumericalSemigroup> children(long max_frobenius = -1) const;

    friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

   private:
    NumericalSemigroup(std::vector<long> min_gens, std::vector<long> apery, long frobenius,
                       long genus);
    NumericalSemigroup child_without(long g) const;

    std::vector<long> min_gens_;
    std::vector<long> apery_;
    long frobenius_ = -1;
    long genus_ = 0;
};

/// Checks P_S(x) == (1 - x) * sum_{s in S} x^s mod x^{order+1}; the reduced
/// Hilbert series of the semigroup ring has numerator P_S over (1 - x).
/// Requires order >= frobenius + 2.
bool hilbert_numerator_identity_check(const NumericalSemigroup& s, long order);

/// {n : n | ab, n does not divide a or b}, sorted. The product of the
/// corresponding cyclotomic polynomials equals P_{<a,b>} (verified).
std::vector<long> two_generator_factorization(long a, long b);

/// Witness that a semigroup is a complete intersection: a binary gluing
/// tree. A leaf is N or a two-generator semigroup; an inner node splits
/// S = mu*S1 + lambda*S2 with gcd(mu, lambda) = 1, lambda in S1 and mu in
/// S2, neither a minimal generator of its side.
class CIWitness {
   public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        std::vector<long> gens;  // minimal generators of this subtree's semigroup
        long mu = 0, lambda = 0;
        NodePtr left, right;
        bool is_leaf() const { return left == nullptr; }
    };

    NodePtr root;

    /// Minimal generators reproduced bottom-up from the gluing tree.
    std::vector<long> gens() const;
    /// Degrees of the defining relations: mu*lambda at each node, with the
    /// subtree relations scaled by the matching multiplier. Sorted.
    std::vector<long> relation_degrees() const;
};

/// Gluing-based complete intersection decision. Returns a witness tree iff
/// the semigroup ring is a complete intersection. Memoized process-wide on
/// the minimal generating set.
std::optional<CIWitness> is_complete_intersection(const NumericalSemigroup& s);

struct EnumerationLimit {
    std::optional<long> max_frobenius;
    std::optional<long> max_genus;
};

struct EnumerationStats {
    long visited = 0;                // nodes visited, N included
    long proper = 0;                 // semigroups with genus >= 1
    std::vector<long> by_genus;      // histogram indexed by genus, N included
};

/// Visits every numerical semigroup within the limit exactly once via the
/// semigroup tree (children remove one minimal generator > frobenius, so
/// frobenius strictly increases along edges and genus equals depth).
EnumerationStats enumerate_semigroups(const EnumerationLimit& limit,
                                      const std::function<void(const NumericalSemigroup&)>& visit);

/// Comma-separated positive integers, e.g. "4,6,9".
std::vector<long> parse_generator_list(const std::string& text);

}  // namespace cyclo
