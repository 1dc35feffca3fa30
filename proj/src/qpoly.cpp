#include "cyclefk/qpoly.hpp"

#include <sstream>

namespace cyclefk {

QPoly::QPoly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { trim(); }

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(std::size_t k, const Integer& c) {
  QPoly out;
  out.add(k, c);
  return out;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void QPoly::add(std::size_t k, const Integer& c) {
  if (c == 0) return;
  if (coeffs_.size() <= k) coeffs_.resize(k + 1);
  coeffs_[k] += c;
  trim();
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(const Integer& c, const QPoly& p) {
  std::vector<Integer> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return QPoly(std::move(out));
}

QPoly QPoly::substitute_power(std::size_t k) const {
  if (k == 0) return constant(evaluate(1));
  QPoly out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.add(i * k, coeffs_[i]);
  return out;
}

Integer QPoly::evaluate(const Integer& q) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag;
      out << 'q';
      if (k > 1) out << '^' << k;
    }
    first = false;
  }
  return out.str();
}

}  // namespace cyclefk
