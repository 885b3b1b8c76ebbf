#include "cyclo/numsgp.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "cyclo/cyclotomy.hpp"

namespace cyclo {

NumericalSemigroup::NumericalSemigroup(std::vector<long> min_gens, std::vector<long> apery,
                                       long frobenius, long genus)
    : min_gens_(std::move(min_gens)), apery_(std::move(apery)), frobenius_(frobenius),
      genus_(genus) {}

NumericalSemigroup NumericalSemigroup::natural() {
    return NumericalSemigroup({1}, {0}, -1, 0);
}

NumericalSemigroup NumericalSemigroup::ordinary(long m) {
    if (m < 1) throw std::invalid_argument("ordinary needs m >= 1");
    if (m == 1) return natural();
    std::vector<long> gens(static_cast<std::size_t>(m));
    std::iota(gens.begin(), gens.end(), m);  // m, m+1, ..., 2m-1
    std::vector<long> ap(static_cast<std::size_t>(m));
    for (long r = 1; r < m; ++r) ap[static_cast<std::size_t>(r)] = m + r;
    return NumericalSemigroup(std::move(gens), std::move(ap), m - 1, m - 1);
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<long>& gens) {
    if (gens.empty()) throw EmptyInput("from_generators needs at least one generator");
    std::vector<long> sorted;
    for (long g : gens) {
        if (g < 1) throw std::invalid_argument("generators must be positive");
        sorted.push_back(g);
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    long d = 0;
    for (long g : sorted) d = std::gcd(d, g);
    if (d != 1) throw GcdNotOne("generators must have gcd 1");

    const long m = sorted.front();
    if (m == 1) return natural();

    // Apery set with respect to m via Dijkstra on residues: ap[r] is the
    // least semigroup element congruent to r mod m.
    const long kUnset = -1;
    std::vector<long> ap(static_cast<std::size_t>(m), kUnset);
    ap[0] = 0;
    using Entry = std::pair<long, long>;  // (value, residue)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [value, r] = queue.top();
        queue.pop();
        if (value != ap[static_cast<std::size_t>(r)]) continue;
        for (long g : sorted) {
            long next = value + g;
            long nr = next % m;
            if (ap[static_cast<std::size_t>(nr)] == kUnset ||
                next < ap[static_cast<std::size_t>(nr)]) {
                ap[static_cast<std::size_t>(nr)] = next;
                queue.emplace(next, nr);
            }
        }
    }

    long frob = 0;
    long genus = 0;
    for (long r = 1; r < m; ++r) {
        long a = ap[static_cast<std::size_t>(r)];
        frob = std::max(frob, a - m);
        genus += (a - r) / m;
    }

    auto member = [&](long n) {
        return n >= 0 && n >= ap[static_cast<std::size_t>(n % m)];
    };
    std::vector<long> minimal;
    for (long g : sorted) {
        bool is_sum = false;
        for (long s = m; 2 * s <= g && !is_sum; ++s)
            if (member(s) && member(g - s)) is_sum = true;
        if (!is_sum) minimal.push_back(g);
    }
    return NumericalSemigroup(std::move(minimal), std::move(ap), frob, genus);
}

bool NumericalSemigroup::contains(long n) const {
    if (n < 0) return false;
    long m = multiplicity();
    return n >= apery_[static_cast<std::size_t>(n % m)];
}

std::vector<long> NumericalSemigroup::gaps() const {
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(genus_));
    long m = multiplicity();
    for (long r = 1; r < m; ++r)
        for (long n = r; n < apery_[static_cast<std::size_t>(r)]; n += m) out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
}

IntPoly NumericalSemigroup::semigroup_polynomial() const {
    if (genus_ == 0) return IntPoly::one();
    std::vector<Int> c(static_cast<std::size_t>(frobenius_) + 2, 0);
    c[0] = 1;
    for (long g : gaps()) {
        c[static_cast<std::size_t>(g)] -= 1;
        c[static_cast<std::size_t>(g) + 1] += 1;
    }
    return IntPoly(std::move(c));
}

NumericalSemigroup NumericalSemigroup::child_without(long g) const {
    const long m = multiplicity();
    // g is a minimal generator > frobenius and g != m, so g is the Apery
    // element of its class and the next one up is g + m.
    std::vector<long> ap = apery_;
    ap[static_cast<std::size_t>(g % m)] = g + m;

    std::vector<long> gens;
    gens.reserve(min_gens_.size() + 1);
    for (long a : min_gens_)
        if (a != g) gens.push_back(a);

    // New minimal generators of S' = S \ {g} live in (g, g + m]: elements
    // whose every decomposition in S went through g.
    for (long n = g + 1; n <= g + m; ++n) {
        if (n < apery_[static_cast<std::size_t>(n % m)]) continue;  // n not in S
        if (std::binary_search(min_gens_.begin(), min_gens_.end(), n)) continue;  // kept above
        bool is_sum = false;
        for (long a : gens) {
            if (a >= n) break;
            long r = n - a;
            if (r != g && r >= apery_[static_cast<std::size_t>(r % m)]) {
                is_sum = true;
                break;
            }
        }
        if (!is_sum) gens.push_back(n);
    }
    std::sort(gens.begin(), gens.end());
    return NumericalSemigroup(std::move(gens), std::move(ap), g, genus_ + 1);
}

std::vector<NumericalSemigroup> NumericalSemigroup::children(long max_frobenius) const {
    std::vector<NumericalSemigroup> out;
    const long m = multiplicity();
    for (long g : min_gens_) {
        if (g <= frobenius_) continue;
        if (max_frobenius >= 0 && g > max_frobenius) continue;
        if (g == m)
            out.push_back(ordinary(m + 1));  // only reachable from ordinary semigroups
        else
            out.push_back(child_without(g));
    }
    return out;
}

bool hilbert_numerator_identity_check(const NumericalSemigroup& s, long order) {
    if (order < s.frobenius() + 2)
        throw std::invalid_argument("order must be at least frobenius + 2");
    std::vector<Int> elems(static_cast<std::size_t>(order) + 1, 0);
    for (long n = 0; n <= order; ++n)
        if (s.contains(n)) elems[static_cast<std::size_t>(n)] = 1;
    SeriesTruncation sum(std::move(elems), order);
    SeriesTruncation lhs = SeriesTruncation::of(IntPoly({1, -1}), order) * sum;
    return lhs == SeriesTruncation::of(s.semigroup_polynomial(), order);
}

std::vector<long> two_generator_factorization(long a, long b) {
    if (a < 2 || b < 2) throw std::invalid_argument("generators must be >= 2");
    if (std::gcd(a, b) != 1) throw NotCoprime("two_generator_factorization needs gcd(a,b) = 1");
    std::vector<long> out;
    for (long n : divisors(a * b))
        if (a % n != 0 && b % n != 0) out.push_back(n);

    IntPoly product = IntPoly::one();
    for (long n : out) product *= cyclotomic(n);
    if (product != NumericalSemigroup::from_generators({a, b}).semigroup_polynomial())
        throw std::logic_error("two-generator factorization identity failed");
    return out;
}

std::vector<long> CIWitness::gens() const {
    std::function<std::vector<long>(const NodePtr&)> expand =
        [&](const NodePtr& node) -> std::vector<long> {
        if (node->is_leaf()) return node->gens;
        std::vector<long> out;
        for (long g : expand(node->left)) out.push_back(node->mu * g);
        for (long g : expand(node->right)) out.push_back(node->lambda * g);
        std::sort(out.begin(), out.end());
        return out;
    };
    return expand(root);
}

std::vector<long> CIWitness::relation_degrees() const {
    std::function<std::vector<long>(const NodePtr&)> collect =
        [&](const NodePtr& node) -> std::vector<long> {
        if (node->is_leaf()) {
            // A two-generator leaf <a,b> has the single relation of degree ab.
            if (node->gens.size() == 2) return {node->gens[0] * node->gens[1]};
            return {};
        }
        std::vector<long> out;
        for (long r : collect(node->left)) out.push_back(node->mu * r);
        for (long r : collect(node->right)) out.push_back(node->lambda * r);
        out.push_back(node->mu * node->lambda);
        return out;
    };
    auto out = collect(root);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

CIWitness::NodePtr make_leaf(std::vector<long> gens) {
    auto node = std::make_shared<CIWitness::Node>();
    node->gens = std::move(gens);
    return node;
}

std::optional<CIWitness::NodePtr> decide_ci(const NumericalSemigroup& s);

/// Tries every bipartition of the minimal generators, smaller side first.
std::optional<CIWitness::NodePtr> search_gluing(const NumericalSemigroup& s) {
    const auto& gens = s.min_gens();
    const std::size_t e = gens.size();
    // Masks over gens[1..e-1]; gens[0] always stays on the left side.
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << (e - 1)); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
        auto smaller = [&](unsigned m) {
            unsigned c = static_cast<unsigned>(__builtin_popcount(m));
            return std::min(c, static_cast<unsigned>(e) - c);
        };
        return smaller(a) < smaller(b);
    });

    for (unsigned mask : masks) {
        std::vector<long> left{gens[0]}, right;
        for (std::size_t i = 1; i < e; ++i)
            ((mask >> (i - 1)) & 1 ? right : left).push_back(gens[i]);

        long d_left = 0, d_right = 0;
        for (long g : left) d_left = std::gcd(d_left, g);
        for (long g : right) d_right = std::gcd(d_right, g);
        if (std::gcd(d_left, d_right) != 1) continue;
        if (d_left == 1 || d_right == 1) continue;  // the multiplier would be a
                                                    // minimal generator of N

        std::vector<long> gens1, gens2;
        for (long g : left) gens1.push_back(g / d_left);
        for (long g : right) gens2.push_back(g / d_right);
        NumericalSemigroup s1 = NumericalSemigroup::from_generators(gens1);
        NumericalSemigroup s2 = NumericalSemigroup::from_generators(gens2);
        if (s1.min_gens() != gens1 || s2.min_gens() != gens2) continue;

        // Gluing conditions: lambda = d_right in S1, mu = d_left in S2,
        // neither a minimal generator of its side.
        if (!s1.contains(d_right) ||
            std::binary_search(gens1.begin(), gens1.end(), d_right))
            continue;
        if (!s2.contains(d_left) ||
            std::binary_search(gens2.begin(), gens2.end(), d_left))
            continue;

        auto w1 = decide_ci(s1);
        if (!w1) continue;
        auto w2 = decide_ci(s2);
        if (!w2) continue;

        auto node = std::make_shared<CIWitness::Node>();
        node->gens = gens;
        node->mu = d_left;
        node->lambda = d_right;
        node->left = *w1;
        node->right = *w2;
        return node;
    }
    return std::nullopt;
}

std::optional<CIWitness::NodePtr> decide_ci(const NumericalSemigroup& s) {
    if (s.embedding_dimension() <= 2) return make_leaf(s.min_gens());
    // A glued semigroup has multiplicity at least 2^(e-1): each gluing
    // multiplier is a non-generator of its side, hence at least twice that
    // side's multiplicity, and the bound follows by induction.
    const long e = s.embedding_dimension();
    if (e - 1 >= 62 || s.multiplicity() < (1L << (e - 1))) return std::nullopt;
    if (e > 24)
        throw std::invalid_argument("bipartition search limited to embedding dimension 24");

    static std::mutex mutex;
    static std::map<std::vector<long>, std::optional<CIWitness::NodePtr>> memo;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(s.min_gens());
        if (it != memo.end()) return it->second;
    }
    auto result = search_gluing(s);
    std::lock_guard<std::mutex> lock(mutex);
    return memo.emplace(s.min_gens(), std::move(result)).first->second;
}

}  // namespace

std::optional<CIWitness> is_complete_intersection(const NumericalSemigroup& s) {
    auto node = decide_ci(s);
    if (!node) return std::nullopt;
    return CIWitness{*node};
}

EnumerationStats enumerate_semigroups(
    const EnumerationLimit& limit,
    const std::function<void(const NumericalSemigroup&)>& visit) {
    EnumerationStats stats;
    long max_f = limit.max_frobenius.value_or(-1);
    std::vector<NumericalSemigroup> stack{NumericalSemigroup::natural()};
    while (!stack.empty()) {
        NumericalSemigroup s = std::move(stack.back());
        stack.pop_back();
        ++stats.visited;
        if (s.genus() >= 1) ++stats.proper;
        if (stats.by_genus.size() <= static_cast<std::size_t>(s.genus()))
            stats.by_genus.resize(static_cast<std::size_t>(s.genus()) + 1, 0);
        ++stats.by_genus[static_cast<std::size_t>(s.genus())];
        visit(s);
        if (limit.max_genus && s.genus() >= *limit.max_genus) continue;
        auto kids = s.children(max_f);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
    }
    return stats;
}

std::vector<long> parse_generator_list(const std::string& text) {
    std::vector<long> out;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    while (true) {
        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t start = pos;
        std::size_t digits = 0;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected a positive integer", start);
        if (digits > 18) throw ParseError("generator too large", start);
        out.push_back(std::stol(text.substr(start, digits)));
        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == n) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return out;
}

}  // namespace cyclo
