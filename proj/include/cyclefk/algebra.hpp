// Noncommutative monomials and polynomials over the edge generators of the
// n-cycle, ordered by graded lexicographic order.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclefk {

using Integer = boost::multiprecision::cpp_int;

/// Raised for inputs that violate a documented precondition (bad n, a pair
/// that is not an edge of the cycle, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a mathematical invariant that the library relies on is found
/// broken at run time.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One edge of C_n: either x_{m,m+1} (1 <= m <= n-1) or the closing edge
/// x_{1n}. Always stored with i < j.
class EdgeVar {
 public:
  constexpr EdgeVar() = default;

  /// The segment {i, i+1}, i >= 1, independent of any cycle (used for paths).
  static EdgeVar segment(int i);

  constexpr int i() const { return i_; }
  constexpr int j() const { return j_; }

  /// True for x_{1n}; every other generator joins consecutive vertices.
  constexpr bool is_closing() const { return j_ != i_ + 1; }

  /// Dense code in 0..n-1: x_{m,m+1} -> m-1, x_{1n} -> n-1. Smaller code
  /// means larger in the variable order.
  constexpr int code(int n) const { return is_closing() ? n - 1 : i_ - 1; }

  friend constexpr bool operator==(EdgeVar, EdgeVar) = default;

  std::string to_string() const;

 private:
  friend class CycleContext;
  constexpr EdgeVar(int i, int j) : i_(static_cast<std::int16_t>(i)), j_(static_cast<std::int16_t>(j)) {}

  std::int16_t i_ = 0;
  std::int16_t j_ = 0;
};

/// The cycle C_n, n >= 4, and the factory for its generators.
class CycleContext {
 public:
  explicit CycleContext(int n);

  int n() const { return n_; }

  /// The edge {i, j}; the endpoints may be given in either order. Throws
  /// InvalidArgument when {i, j} is not an edge of C_n.
  EdgeVar edge(int i, int j) const;
  bool is_edge(int i, int j) const;

  /// x_{m,m+1}, 1 <= m <= n-1.
  EdgeVar path_edge(int m) const;
  /// x_{1n}.
  EdgeVar closing_edge() const { return EdgeVar(1, n_); }

  /// Inverse of EdgeVar::code.
  EdgeVar from_code(int code) const;

  /// All n generators in decreasing variable order:
  /// x_{12} > x_{23} > ... > x_{n-1,n} > x_{1n}.
  std::vector<EdgeVar> variables() const;

  friend bool operator==(const CycleContext&, const CycleContext&) = default;

 private:
  int n_;
};

/// Variable order: a > b iff a.j < b.j, or a.j == b.j and a.i > b.i.
std::strong_ordering var_compare(EdgeVar a, EdgeVar b);

/// A noncommutative monomial; the empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<EdgeVar> vars) : vars_(vars) {}
  explicit Word(std::vector<EdgeVar> vars) : vars_(std::move(vars)) {}

  std::size_t degree() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  std::span<const EdgeVar> vars() const { return vars_; }
  EdgeVar operator[](std::size_t k) const { return vars_[k]; }

  Word subword(std::size_t pos, std::size_t len) const;
  friend Word operator*(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;

  /// "1" for the empty word, otherwise e.g. "x34*x12", or "x{10,11}*x{1,12}"
  /// when any index exceeds 9.
  std::string to_string() const;

 private:
  std::vector<EdgeVar> vars_;
};

/// Degree first, then lexicographic from the left by var_compare.
std::strong_ordering glex_compare(const Word& a, const Word& b);

struct GlexLess {
  bool operator()(const Word& a, const Word& b) const { return glex_compare(a, b) < 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Finite Z-linear combination of words. Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Word, Integer, GlexLess>;

  Poly() = default;
  Poly(const Word& w, Integer coeff = 1);
  static Poly one() { return Poly(Word{}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of w (0 when absent).
  Integer coefficient(const Word& w) const;

  /// Adds coeff * w in place.
  void add_term(const Word& w, const Integer& coeff);

  /// glex-maximal word with its coefficient. Throws InvalidArgument on zero.
  std::pair<Word, Integer> leading_term() const;

  /// Largest degree among the terms; -1 for the zero polynomial.
  int degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Integer& c, const Poly& p);

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Signed sum in decreasing glex order, e.g. "x34*x12 - x14*x23"; "0" for
  /// the zero polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_scale(const Integer& c, const Poly& p);
Poly poly_mul(const Poly& p, const Poly& q);
std::pair<Word, Integer> leading_term(const Poly& p);

}  // namespace cyclefk
