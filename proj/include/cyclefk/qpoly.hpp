// Univariate integer polynomials in q (graded counts and characters).
#pragma once

#include "cyclefk/algebra.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace cyclefk {

class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<Integer> coeffs);
  explicit QPoly(std::vector<Integer> coeffs);

  static QPoly constant(const Integer& c) { return QPoly({c}); }
  /// c * q^k.
  static QPoly monomial(std::size_t k, const Integer& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of q^k; 0 beyond the degree.
  Integer operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// Adds c to the coefficient of q^k.
  void add(std::size_t k, const Integer& c);

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  QPoly operator-() const;
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Integer& c, const QPoly& p);

  /// p(q^k).
  QPoly substitute_power(std::size_t k) const;
  Integer evaluate(const Integer& q) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// e.g. "1 - q + q^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace cyclefk
