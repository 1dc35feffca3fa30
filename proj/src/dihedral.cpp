#include "cyclefk/dihedral.hpp"

#include "cyclefk/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace cyclefk {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

std::string repeated_parts(int part, int count) {
  if (part < 10) return std::string(static_cast<std::size_t>(count), static_cast<char>('0' + part));
  std::string base = std::to_string(part);
  return count == 1 ? base : base + "^" + std::to_string(count);
}

// Element-indexed values of the closed-form characters: class representative,
// its class size, and the closed-form graded trace.
struct ClassTerm {
  std::size_t element;
  int weight;
  QPoly trace;
};

std::vector<ClassTerm> closed_form_class_terms(int n) {
  std::vector<ClassTerm> terms;
  terms.push_back({0, 1, q_lucas(n)});
  const int half = n / 2;
  for (int p = 1; p <= (n - 1) / 2; ++p) {
    terms.push_back({static_cast<std::size_t>(p), 2, char_rotation_closed(n, p)});
  }
  if (n % 2 == 0) {
    terms.push_back({static_cast<std::size_t>(half), 1, char_rotation_closed(n, half)});
    terms.push_back({static_cast<std::size_t>(n), half, char_reflection_even(n)});
    // s*r = r^(n-1)*s
    terms.push_back({static_cast<std::size_t>(2 * n - 1), half, char_reflection_sr_even(n)});
  } else {
    terms.push_back({static_cast<std::size_t>(n), n, char_reflection_odd(n)});
  }
  return terms;
}

}  // namespace

DihedralElement::DihedralElement(int n, int rotation, bool reflection)
    : n_(n), rotation_(static_cast<int>(mod(rotation, n))), reflection_(reflection) {
  if (n < 3) throw InvalidArgument("dihedral group needs n >= 3");
  perm_.resize(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    const int reflected = reflection_ ? n + 1 - v : v;
    perm_[static_cast<std::size_t>(v - 1)] = static_cast<int>(mod(reflected - 1 + rotation_, n)) + 1;
  }
}

DihedralElement DihedralElement::inverse() const {
  // Reflections are involutions; rotations invert their exponent.
  return reflection_ ? *this : DihedralElement(n_, -rotation_, false);
}

std::string DihedralElement::name() const {
  if (rotation_ == 0) return reflection_ ? "s" : "e";
  std::string rot = rotation_ == 1 ? "r" : "r^" + std::to_string(rotation_);
  return reflection_ ? rot + "*s" : rot;
}

std::vector<DihedralElement> dn_elements(int n) {
  std::vector<DihedralElement> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (int f = 0; f < 2; ++f) {
    for (int k = 0; k < n; ++k) out.emplace_back(n, k, f == 1);
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) out[v] = a[static_cast<std::size_t>(b[v] - 1)];
  return out;
}

DihedralElement dn_multiply(const DihedralElement& a, const DihedralElement& b) {
  if (a.n() != b.n()) throw InvalidArgument("elements of different dihedral groups");
  // r^a s^f r^b s^g = r^(a + (-1)^f b) s^(f + g)
  const int rotation = a.rotation() + (a.reflection() ? -b.rotation() : b.rotation());
  return DihedralElement(a.n(), rotation, a.reflection() != b.reflection());
}

std::vector<std::vector<DihedralElement>> dn_conjugacy_classes(int n) {
  const auto elements = dn_elements(n);
  std::vector<bool> seen(elements.size(), false);
  std::vector<std::vector<DihedralElement>> classes;
  for (const auto& x : elements) {
    if (seen[x.index()]) continue;
    std::vector<DihedralElement> orbit;
    for (const auto& g : elements) {
      DihedralElement y = dn_multiply(dn_multiply(g, x), g.inverse());
      if (!seen[y.index()]) {
        seen[y.index()] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end(), [](const auto& a, const auto& b) { return a.index() < b.index(); });
    classes.push_back(std::move(orbit));
  }
  return classes;
}

SignedWord act_on_var(const DihedralElement& g, EdgeVar v, const CycleContext& ctx) {
  const int a = g(v.i());
  const int b = g(v.j());
  if (a < b) return {1, Word{ctx.edge(a, b)}};
  return {-1, Word{ctx.edge(b, a)}};
}

SignedWord act_on_word(const DihedralElement& g, const Word& w, const CycleContext& ctx) {
  if (g.n() != ctx.n()) throw InvalidArgument("group and cycle sizes differ");
  int sign = 1;
  std::vector<EdgeVar> vars;
  vars.reserve(w.degree());
  for (EdgeVar v : w.vars()) {
    SignedWord image = act_on_var(g, v, ctx);
    sign *= image.sign;
    vars.push_back(image.word[0]);
  }
  return {sign, Word(std::move(vars))};
}

Poly act_on_poly(const DihedralElement& g, const Poly& p, const CycleContext& ctx) {
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    SignedWord image = act_on_word(g, w, ctx);
    out.add_term(image.word, image.sign * c);
  }
  return out;
}

SignedWord act_on_basis(const DihedralElement& g, const Word& b, const GroebnerBasis& gb) {
  SignedWord image = act_on_word(g, b, gb.context());
  Poly reduced = normal_form(Poly(image.word, image.sign), gb);
  if (reduced.size() != 1) {
    throw ConsistencyError(g.name() + " sends " + b.to_string() + " to " + reduced.to_string());
  }
  const auto& [w, c] = *reduced.terms().begin();
  if (c != 1 && c != -1) {
    throw ConsistencyError(g.name() + " sends " + b.to_string() + " to " + reduced.to_string());
  }
  return {c == 1 ? 1 : -1, w};
}

bool check_ideal_stability(const GroebnerBasis& gb) {
  const auto& ctx = gb.context();
  const auto generators = quadratic_rules(ctx);
  for (const auto& g : dn_elements(ctx.n())) {
    for (const auto& rule : generators) {
      if (!normal_form(act_on_poly(g, rule.as_poly(), ctx), gb).is_zero()) return false;
    }
  }
  return true;
}

QPoly graded_trace(const DihedralElement& g, const GroebnerBasis& gb) {
  QPoly out;
  for (const Word& z : algebra_basis(gb)) {
    SignedWord image = act_on_word(g, z, gb.context());
    Poly reduced = normal_form(Poly(image.word, image.sign), gb);
    out.add(z.degree(), reduced.coefficient(z));
  }
  return out;
}

QPoly char_rotation_closed(int n, int p) {
  if (p < 1 || p > n - 1) {
    throw InvalidArgument("rotation closed form is defined for 1 <= p <= n-1, got p=" + std::to_string(p));
  }
  QPoly out = QPoly::constant(1);
  if (p >= 2 && n % p == 0) out.add(static_cast<std::size_t>(n / p), p);
  return out;
}

QPoly char_reflection_even(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("char_reflection_even needs even n >= 4");
  const int h = n / 2;
  return q_fibonacci(h).substitute_power(2) - QPoly::monomial(1, 2) * q_fibonacci(h - 1).substitute_power(2) +
         QPoly::monomial(2) * q_fibonacci(h - 2).substitute_power(2);
}

QPoly char_reflection_sr_even(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("char_reflection_sr_even needs even n >= 4");
  return q_fibonacci(n / 2 - 1).substitute_power(2);
}

QPoly char_reflection_odd(int n) {
  if (n < 5 || n % 2 == 0) throw InvalidArgument("char_reflection_odd needs odd n >= 5");
  return q_fibonacci((n - 1) / 2).substitute_power(2) - QPoly::monomial(1) * q_fibonacci((n - 3) / 2).substitute_power(2);
}

const Irrep& IrrepTable::find(const std::string& label) const {
  for (const auto& irrep : irreps) {
    if (irrep.label == label) return irrep;
  }
  throw InvalidArgument("no irreducible character labelled " + label);
}

IrrepTable irrep_table(int n) {
  CycleContext ctx(n);
  const auto elements = dn_elements(n);
  auto one_dim = [&](std::string label, auto value) {
    Irrep irrep{std::move(label), 1, 0, {}};
    for (const auto& g : elements) irrep.values.push_back(value(g.rotation(), g.reflection() ? 1 : 0));
    return irrep;
  };
  auto parity = [](int e) { return e % 2 == 0 ? 1.0 : -1.0; };

  IrrepTable table{n, {}};
  const std::string trivial = "1^" + std::to_string(n);
  table.irreps.push_back(one_dim(trivial, [](int, int) { return 1.0; }));
  if (n % 2 == 0) {
    const std::string twos = repeated_parts(2, n / 2);
    table.irreps.push_back(one_dim(twos, [&](int, int f) { return parity(f); }));
    table.irreps.push_back(one_dim(twos + "'", [&](int k, int) { return parity(k); }));
    table.irreps.push_back(one_dim(repeated_parts(2, n / 2 - 1) + "11", [&](int k, int f) { return parity(k + f); }));
  } else {
    table.irreps.push_back(one_dim(repeated_parts(2, (n - 1) / 2) + "1", [&](int, int f) { return parity(f); }));
  }

  // Two-dimensional irreps: label by the cycle type of r^h, priming repeats.
  std::vector<std::string> used;
  for (int h = 1; h <= (n - 1) / 2; ++h) {
    const int g = std::gcd(n, h);
    std::string label = repeated_parts(n / g, g);
    const auto repeats = std::count(used.begin(), used.end(), label);
    used.push_back(label);
    label += std::string(static_cast<std::size_t>(repeats), '\'');
    Irrep irrep{label, 2, h, {}};
    for (const auto& e : elements) {
      irrep.values.push_back(e.reflection() ? 0.0
                                            : 2.0 * std::cos(2.0 * std::numbers::pi * h * e.rotation() / n));
    }
    table.irreps.push_back(std::move(irrep));
  }
  return table;
}

namespace {

std::vector<double> inner_products(const std::vector<std::pair<std::vector<double>, double>>& weighted_traces,
                                   const std::vector<double>& chi_at, int group_order) {
  std::vector<double> acc;
  for (std::size_t t = 0; t < weighted_traces.size(); ++t) {
    const auto& [coeffs, weight] = weighted_traces[t];
    if (acc.size() < coeffs.size()) acc.resize(coeffs.size(), 0.0);
    for (std::size_t d = 0; d < coeffs.size(); ++d) acc[d] += weight * coeffs[d] * chi_at[t];
  }
  for (auto& x : acc) x /= group_order;
  while (!acc.empty() && std::abs(acc.back()) < 1e-9) acc.pop_back();
  return acc;
}

std::vector<double> to_doubles(const QPoly& p) {
  std::vector<double> out;
  for (const auto& c : p.coeffs()) out.push_back(c.convert_to<double>());
  return out;
}

}  // namespace

std::vector<Multiplicity> decompose(const GroebnerBasis& gb) {
  const int n = gb.context().n();
  const auto elements = dn_elements(n);
  std::vector<std::pair<std::vector<double>, double>> traces;
  for (const auto& g : elements) traces.emplace_back(to_doubles(graded_trace(g, gb)), 1.0);

  std::vector<Multiplicity> out;
  for (const auto& irrep : irrep_table(n).irreps) {
    ApproxMultiplicity approx{irrep.label, irrep.dimension, inner_products(traces, irrep.values, 2 * n)};
    out.push_back({irrep.label, irrep.dimension, approx.rounded()});
  }
  return out;
}

bool ApproxMultiplicity::is_integral(double tol) const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [tol](double c) { return std::abs(c - std::round(c)) <= tol && std::round(c) >= 0; });
}

QPoly ApproxMultiplicity::rounded() const {
  if (!is_integral(1e-6)) {
    std::string shown;
    for (double c : coeffs) shown += (shown.empty() ? "" : ", ") + std::to_string(c);
    throw ConsistencyError("multiplicity of " + label + " is not a nonnegative integer polynomial: [" + shown + "]");
  }
  std::vector<Integer> ints;
  for (double c : coeffs) ints.emplace_back(static_cast<long long>(std::llround(c)));
  return QPoly(std::move(ints));
}

std::vector<ApproxMultiplicity> closed_form_multiplicities(int n) {
  const auto terms = closed_form_class_terms(n);
  std::vector<std::pair<std::vector<double>, double>> weighted;
  for (const auto& t : terms) weighted.emplace_back(to_doubles(t.trace), static_cast<double>(t.weight));
  std::vector<ApproxMultiplicity> out;
  for (const auto& irrep : irrep_table(n).irreps) {
    std::vector<double> chi;
    for (const auto& t : terms) chi.push_back(irrep.values[t.element]);
    out.push_back({irrep.label, irrep.dimension, inner_products(weighted, chi, 2 * n)});
  }
  return out;
}

Permutation sn_degree(const Word& w, int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (EdgeVar v : w.vars()) {
    Permutation t(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 1);
    std::swap(t[static_cast<std::size_t>(v.i() - 1)], t[static_cast<std::size_t>(v.j() - 1)]);
    p = compose(p, t);
  }
  return p;
}

std::vector<std::vector<int>> set_partition_degree(const Word& w, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (EdgeVar v : w.vars()) {
    const int a = root(v.i());
    const int b = root(v.j());
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(static_cast<std::size_t>(n + 1), -1);
  for (int v = 1; v <= n; ++v) {
    const int r = root(v);
    if (block_of[static_cast<std::size_t>(r)] < 0) {
      block_of[static_cast<std::size_t>(r)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(r)])].push_back(v);
  }
  return blocks;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> out;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (seen[v]) continue;
    int len = 0;
    for (std::size_t u = v; !seen[u]; u = static_cast<std::size_t>(p[u] - 1)) {
      seen[u] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<int> partition_type(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> out;
  for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace cyclefk
