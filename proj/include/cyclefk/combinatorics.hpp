// Matchings of cycles and paths, q-Fibonacci/q-Lucas polynomials, and the
// monomial basis of the cyclic quotient with its Hilbert series.
#pragma once

#include "cyclefk/algebra.hpp"
#include "cyclefk/qpoly.hpp"
#include "cyclefk/rewriting.hpp"

#include <utility>
#include <vector>

namespace cyclefk {

/// Edges with pairwise disjoint endpoints, kept sorted by (i, j).
class Matching {
 public:
  Matching() = default;
  /// Throws InvalidArgument if two edges share a vertex.
  explicit Matching(std::vector<EdgeVar> edges);

  std::size_t size() const { return edges_.size(); }
  const std::vector<EdgeVar>& edges() const { return edges_; }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend bool operator<(const Matching& a, const Matching& b);

 private:
  std::vector<EdgeVar> edges_;
};

/// Largest n accepted by the subset-filter oracles (2^n subsets).
inline constexpr int kBruteForceCap = 16;

/// Every matching of C_n, found by filtering all 2^n edge subsets.
std::vector<Matching> enumerate_matchings_cycle(int n);

/// Every matching of the path with vertices 1..m (segments 12, ..., (m-1)m),
/// again by subset filtering.
std::vector<Matching> enumerate_matchings_path(int m);

/// Binomial coefficient, 0 outside 0 <= k <= n.
Integer binomial(long n, long k);

/// C(m-k, k): size-k matchings of the path on m vertices.
Integer count_path_matchings(int m, int k);

/// n/(n-k) * C(n-k, k): size-k matchings of C_n. Throws ConsistencyError if
/// the quotient is not exact.
Integer count_cycle_matchings(int n, int k);

/// F_m(q) = sum_k C(m-k, k) q^k, with F_0 = F_1 = 1.
QPoly q_fibonacci(int m);

/// L_n(q) = sum_k n/(n-k) C(n-k, k) q^k, with L_0 = 2.
QPoly q_lucas(int n);

/// Lucas numbers by recurrence: L_1 = 1, L_2 = 3.
Integer lucas_number(int n);

/// Word of a matching: edges by decreasing first index, x_{1n} in front.
Word canonical_word(const Matching& m, const CycleContext& ctx);
/// Inverse of canonical_word; throws InvalidArgument if letters share a
/// vertex or repeat.
Matching matching_of_word(const Word& w);

/// Words containing no left-hand side of gb, by degree. Found by extending
/// irreducible words one letter at a time.
std::vector<Word> algebra_basis(const GroebnerBasis& gb);

/// The same set written down directly: decreasing first indices with gaps
/// >= 2 in [1, n-1], optionally preceded by x_{1n} when all indices lie in
/// [2, n-2].
std::vector<Word> basis_closed_form(const CycleContext& ctx);

QPoly hilbert_series(const GroebnerBasis& gb);

struct MaxDegreeStats {
  int max_degree;
  Integer multiplicity;
  friend bool operator==(const MaxDegreeStats&, const MaxDegreeStats&) = default;
};

/// (floor(n/2), 2) for even n, (floor(n/2), n) for odd n.
MaxDegreeStats max_degree_stats(int n);

}  // namespace cyclefk
