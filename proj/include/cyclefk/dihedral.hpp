// The dihedral group D_n acting on the cyclic quotient: signed action on
// words, graded characters (by brute force and in closed form), irreducible
// characters, and multiplicities of irreducibles.
#pragma once

#include "cyclefk/algebra.hpp"
#include "cyclefk/qpoly.hpp"
#include "cyclefk/rewriting.hpp"

#include <string>
#include <vector>

namespace cyclefk {

/// Vertex permutation, 1-based: images[v - 1] is the image of v.
using Permutation = std::vector<int>;

/// r^k s^f as a permutation of the vertices, with r = (1 2 ... n) and
/// s(v) = n + 1 - v. Products compose right to left: (a*b)(v) = a(b(v)).
class DihedralElement {
 public:
  DihedralElement(int n, int rotation, bool reflection);
  static DihedralElement identity(int n) { return {n, 0, false}; }
  static DihedralElement r(int n) { return {n, 1, false}; }
  static DihedralElement s(int n) { return {n, 0, true}; }

  int n() const { return n_; }
  int rotation() const { return rotation_; }
  bool reflection() const { return reflection_; }
  const Permutation& perm() const { return perm_; }
  int operator()(int v) const { return perm_[static_cast<std::size_t>(v - 1)]; }

  /// Position in dn_elements(n): rotation + n * reflection.
  std::size_t index() const { return static_cast<std::size_t>(rotation_ + (reflection_ ? n_ : 0)); }

  DihedralElement inverse() const;

  /// "e", "r^k", "s", "r^k*s".
  std::string name() const;

  friend bool operator==(const DihedralElement& a, const DihedralElement& b) {
    return a.n_ == b.n_ && a.rotation_ == b.rotation_ && a.reflection_ == b.reflection_;
  }

 private:
  int n_;
  int rotation_;
  bool reflection_;
  Permutation perm_;
};

/// All 2n elements, ordered by index().
std::vector<DihedralElement> dn_elements(int n);
DihedralElement dn_multiply(const DihedralElement& a, const DihedralElement& b);
Permutation compose(const Permutation& a, const Permutation& b);
/// Orbits of conjugation, each sorted by index(), ordered by their first
/// element.
std::vector<std::vector<DihedralElement>> dn_conjugacy_classes(int n);

struct SignedWord {
  int sign;
  Word word;
  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// g x_{ij} = x_{g(i)g(j)} if g(i) < g(j), else -x_{g(j)g(i)}.
SignedWord act_on_var(const DihedralElement& g, EdgeVar v, const CycleContext& ctx);
/// Letter-by-letter action, no reduction.
SignedWord act_on_word(const DihedralElement& g, const Word& w, const CycleContext& ctx);
Poly act_on_poly(const DihedralElement& g, const Poly& p, const CycleContext& ctx);
/// The action on a basis word followed by normal_form. Throws
/// ConsistencyError if the result is not plus or minus one basis word.
SignedWord act_on_basis(const DihedralElement& g, const Word& b, const GroebnerBasis& gb);

/// g applied to every quadratic generator of the ideal reduces to zero, for
/// every g.
bool check_ideal_stability(const GroebnerBasis& gb);

/// For each degree, the sum over basis words z of the coefficient of z in
/// normal_form(g z).
QPoly graded_trace(const DihedralElement& g, const GroebnerBasis& gb);

/// 1 + p q^(n/p) when p >= 2 divides n, else 1. Defined for 1 <= p <= n-1.
QPoly char_rotation_closed(int n, int p);
/// F_{n/2}(q^2) - 2q F_{n/2-1}(q^2) + q^2 F_{n/2-2}(q^2), even n.
QPoly char_reflection_even(int n);
/// F_{n/2-1}(q^2), even n.
QPoly char_reflection_sr_even(int n);
/// F_{(n-1)/2}(q^2) - q F_{(n-3)/2}(q^2), odd n.
QPoly char_reflection_odd(int n);

struct Irrep {
  std::string label;
  int dimension;
  /// 0 for the one-dimensional irreps, otherwise the h of 2cos(2 pi h k / n).
  int h;
  /// Character value at each element, indexed by DihedralElement::index().
  std::vector<double> values;
};

struct IrrepTable {
  int n;
  std::vector<Irrep> irreps;

  const Irrep& find(const std::string& label) const;
};

/// Complete list of irreducible characters, built from the group structure.
IrrepTable irrep_table(int n);

struct Multiplicity {
  std::string label;
  int dimension;
  QPoly multiplicity;
};

/// (1/2n) sum_g graded_trace(g) chi_i(g), degree by degree, over all 2n
/// elements. Throws ConsistencyError when a coefficient is negative or not
/// an integer.
std::vector<Multiplicity> decompose(const GroebnerBasis& gb);

/// Same inner product with the closed-form characters standing in for the
/// brute-force traces (class representatives e, r^p, s and, for even n, sr),
/// so coefficients may come out fractional.
struct ApproxMultiplicity {
  std::string label;
  int dimension;
  std::vector<double> coeffs;

  /// Every coefficient within tol of a nonnegative integer.
  bool is_integral(double tol = 1e-9) const;
  /// Throws ConsistencyError unless is_integral().
  QPoly rounded() const;
};
std::vector<ApproxMultiplicity> closed_form_multiplicities(int n);

/// Product of the transpositions (i j) of the letters, in word order.
Permutation sn_degree(const Word& w, int n);
/// Finest set partition of {1..n} joining i and j for each letter x_{ij};
/// blocks sorted by least element.
std::vector<std::vector<int>> set_partition_degree(const Word& w, int n);
/// Cycle lengths, descending.
std::vector<int> cycle_type(const Permutation& p);
/// Block sizes, descending.
std::vector<int> partition_type(const std::vector<std::vector<int>>& blocks);

}  // namespace cyclefk
