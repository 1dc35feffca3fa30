#include "cyclefk/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace cyclefk {

namespace {

void append_var(std::ostringstream& out, EdgeVar v, bool braced) {
  if (braced) {
    out << "x{" << v.i() << ',' << v.j() << '}';
  } else {
    out << 'x' << v.i() << v.j();
  }
}

bool needs_braces(std::span<const EdgeVar> vars) {
  return std::any_of(vars.begin(), vars.end(), [](EdgeVar v) { return v.j() > 9; });
}

}  // namespace

EdgeVar EdgeVar::segment(int i) {
  if (i < 1 || i > 254) throw InvalidArgument("segment index out of range: " + std::to_string(i));
  return EdgeVar(i, i + 1);
}

std::string EdgeVar::to_string() const {
  std::ostringstream out;
  append_var(out, *this, j_ > 9);
  return out.str();
}

CycleContext::CycleContext(int n) : n_(n) {
  if (n < 4) {
    throw InvalidArgument("cycle size must be at least 4, got " + std::to_string(n));
  }
  if (n > 255) {
    throw InvalidArgument("cycle size above 255 is not supported");
  }
}

bool CycleContext::is_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_) return false;
  return j == i + 1 || (i == 1 && j == n_);
}

EdgeVar CycleContext::edge(int i, int j) const {
  if (!is_edge(i, j)) {
    throw InvalidArgument("{" + std::to_string(i) + "," + std::to_string(j) +
                          "} is not an edge of C_" + std::to_string(n_));
  }
  if (i > j) std::swap(i, j);
  return EdgeVar(i, j);
}

EdgeVar CycleContext::path_edge(int m) const {
  if (m < 1 || m > n_ - 1) {
    throw InvalidArgument("path edge index out of range: " + std::to_string(m));
  }
  return EdgeVar(m, m + 1);
}

EdgeVar CycleContext::from_code(int code) const {
  if (code < 0 || code >= n_) {
    throw InvalidArgument("generator code out of range: " + std::to_string(code));
  }
  return code == n_ - 1 ? closing_edge() : EdgeVar(code + 1, code + 2);
}

std::vector<EdgeVar> CycleContext::variables() const {
  std::vector<EdgeVar> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int c = 0; c < n_; ++c) out.push_back(from_code(c));
  return out;
}

std::strong_ordering var_compare(EdgeVar a, EdgeVar b) {
  // Larger j means smaller variable; ties broken by larger i being larger.
  if (a.j() != b.j()) return b.j() <=> a.j();
  return a.i() <=> b.i();
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<EdgeVar>(vars_.begin() + static_cast<std::ptrdiff_t>(pos),
                                   vars_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<EdgeVar> out;
  out.reserve(a.degree() + b.degree());
  out.insert(out.end(), a.vars_.begin(), a.vars_.end());
  out.insert(out.end(), b.vars_.begin(), b.vars_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  if (vars_.empty()) return "1";
  std::ostringstream out;
  const bool braced = needs_braces(vars_);
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (k) out << '*';
    append_var(out, vars_[k], braced);
  }
  return out.str();
}

std::strong_ordering glex_compare(const Word& a, const Word& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t k = 0; k < a.degree(); ++k) {
    if (auto c = var_compare(a[k], b[k]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (EdgeVar v : w.vars()) {
    h ^= static_cast<std::size_t>(v.i()) * 1021u + static_cast<std::size_t>(v.j());
    h *= 0x100000001b3ull;
  }
  return h;
}

Poly::Poly(const Word& w, Integer coeff) {
  if (coeff != 0) terms_.emplace(w, std::move(coeff));
}

Integer Poly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Poly::add_term(const Word& w, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::pair<Word, Integer> Poly::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  const auto& [w, c] = *terms_.rbegin();
  return {w, c};
}

int Poly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  }
  return out;
}

Poly operator*(const Integer& c, const Poly& p) {
  Poly out;
  if (c == 0) return out;
  for (const auto& [w, coeff] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), w, c * coeff);
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    if (mag != 1) {
      out << mag << (w.empty() ? "" : "*");
      if (!w.empty()) out << w.to_string();
    } else {
      out << w.to_string();
    }
    first = false;
  }
  return out.str();
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
Poly poly_scale(const Integer& c, const Poly& p) { return c * p; }
Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }
std::pair<Word, Integer> leading_term(const Poly& p) { return p.leading_term(); }

}  // namespace cyclefk
