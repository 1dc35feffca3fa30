#include "cyclefk/algebra.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace cyclefk;

namespace {

Poly random_poly(const CycleContext& ctx, std::mt19937_64& rng) {
  const auto vars = ctx.variables();
  std::uniform_int_distribution<int> terms(1, 3), len(0, 3), coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  Poly p;
  for (int t = terms(rng); t > 0; --t) {
    std::vector<EdgeVar> w;
    for (int k = len(rng); k > 0; --k) w.push_back(vars[pick(rng)]);
    p.add_term(Word(std::move(w)), coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("cycle context validates n and edges") {
  CHECK_THROWS_AS(CycleContext(3), InvalidArgument);
  CHECK_THROWS_AS(CycleContext(0), InvalidArgument);
  CycleContext ctx(6);
  CHECK(ctx.edge(2, 3) == ctx.edge(3, 2));
  CHECK(ctx.edge(6, 1) == ctx.closing_edge());
  CHECK_THROWS_AS(ctx.edge(1, 3), InvalidArgument);
  CHECK_THROWS_AS(ctx.edge(2, 6), InvalidArgument);
  CHECK_THROWS_AS(ctx.edge(6, 7), InvalidArgument);
  CHECK_THROWS_AS(ctx.path_edge(6), InvalidArgument);
  CHECK(ctx.closing_edge().i() == 1);
  CHECK(ctx.closing_edge().j() == 6);
  CHECK(ctx.closing_edge().is_closing());
  CHECK_FALSE(ctx.path_edge(5).is_closing());
}

TEST_CASE("exactly n generators, codes round-trip") {
  for (int n = 4; n <= 12; ++n) {
    CycleContext ctx(n);
    const auto vars = ctx.variables();
    REQUIRE(vars.size() == static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> seen;
    for (int c = 0; c < n; ++c) {
      CHECK(vars[c].code(n) == c);
      CHECK(ctx.from_code(c) == vars[c]);
      CHECK(vars[c].i() < vars[c].j());
      seen.insert({vars[c].i(), vars[c].j()});
    }
    CHECK(seen.size() == static_cast<std::size_t>(n));
    // Every pair that is an edge appears, nothing else does.
    int edges = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (ctx.is_edge(i, j)) {
          ++edges;
          CHECK(seen.count({i, j}) == 1);
        }
      }
    }
    CHECK(edges == n);
  }
}

TEST_CASE("variable order") {
  CycleContext ctx(6);
  const auto x12 = ctx.edge(1, 2), x34 = ctx.edge(3, 4), x23 = ctx.edge(2, 3);
  CHECK(var_compare(x12, x34) > 0);
  CHECK(var_compare(ctx.edge(5, 6), ctx.closing_edge()) > 0);
  CHECK(var_compare(x23, x23) == 0);

  // Oracle: the defining rule, a > b iff a.j < b.j or (a.j == b.j and a.i > b.i).
  auto oracle_greater = [](EdgeVar a, EdgeVar b) { return a.j() < b.j() || (a.j() == b.j() && a.i() > b.i()); };
  for (int n = 4; n <= 9; ++n) {
    CycleContext c(n);
    const auto vars = c.variables();
    for (std::size_t a = 0; a < vars.size(); ++a) {
      for (std::size_t b = 0; b < vars.size(); ++b) {
        CHECK((var_compare(vars[a], vars[b]) > 0) == oracle_greater(vars[a], vars[b]));
        CHECK((var_compare(vars[a], vars[b]) == 0) == (a == b));
        // variables() lists them in decreasing order
        CHECK((var_compare(vars[a], vars[b]) > 0) == (a < b));
      }
    }
  }
}

TEST_CASE("glex order") {
  CycleContext ctx(5);
  const auto x12 = ctx.edge(1, 2), x34 = ctx.edge(3, 4), x15 = ctx.closing_edge();
  CHECK(glex_compare(Word{x12}, Word{x34, x12}) < 0);
  CHECK(glex_compare(Word{x34, x12}, Word{x12, x34}) < 0);
  CHECK(glex_compare(Word{}, Word{}) == 0);
  CHECK(glex_compare(Word{x15, x15, x15}, Word{x12, x12}) > 0);
  // Shared prefix: decided at the first difference.
  CHECK(glex_compare(Word{x12, x34, x12}, Word{x12, x34, x15}) > 0);

  std::mt19937_64 rng(7);
  const auto vars = ctx.variables();
  std::vector<Word> words;
  for (int t = 0; t < 200; ++t) {
    std::vector<EdgeVar> w;
    for (int k = static_cast<int>(rng() % 4); k > 0; --k) w.push_back(vars[rng() % vars.size()]);
    words.emplace_back(std::move(w));
  }
  for (const auto& a : words) {
    for (const auto& b : words) {
      CHECK((glex_compare(a, b) == 0) == (a == b));
      CHECK((glex_compare(a, b) < 0) == (glex_compare(b, a) > 0));
      if (a.degree() < b.degree()) CHECK(glex_compare(a, b) < 0);
    }
  }
  std::sort(words.begin(), words.end(), GlexLess{});
  for (std::size_t k = 0; k + 1 < words.size(); ++k) CHECK(glex_compare(words[k], words[k + 1]) <= 0);
}

TEST_CASE("word printing and slicing") {
  CycleContext ctx(12);
  const auto x34 = ctx.edge(3, 4), x12 = ctx.edge(1, 2);
  CHECK(Word{}.to_string() == "1");
  CHECK(Word{x34, x12}.to_string() == "x34*x12");
  CHECK(Word{ctx.edge(10, 11), ctx.closing_edge()}.to_string() == "x{10,11}*x{1,12}");
  const Word w{x34, x12, ctx.closing_edge()};
  CHECK(w.subword(1, 2) == Word{x12, ctx.closing_edge()});
  CHECK((Word{x34} * Word{x12}) == Word{x34, x12});
  CHECK(WordHash{}(Word{x34, x12}) != WordHash{}(Word{x12, x34}));
}

TEST_CASE("polynomial arithmetic") {
  CycleContext ctx(5);
  const auto x12 = ctx.edge(1, 2), x34 = ctx.edge(3, 4), x23 = ctx.edge(2, 3), x15 = ctx.closing_edge();
  const Poly p12(Word{x12}), p34(Word{x34});

  const Poly prod = poly_mul(p12, p34);
  CHECK(prod.size() == 1);
  CHECK(prod.coefficient(Word{x12, x34}) == 1);
  CHECK(poly_add(p12, -p12).is_zero());
  CHECK(poly_add(p12, poly_scale(-1, p12)).terms().empty());
  CHECK(poly_mul(Poly::one(), prod) == prod);
  CHECK(poly_scale(0, prod).is_zero());
  CHECK(Poly(Word{x12}, 0).is_zero());

  SUBCASE("leading terms") {
    const auto [w1, c1] = leading_term(Poly(Word{x12, x34}) - Poly(Word{x34, x12}));
    CHECK(w1 == Word{x12, x34});
    CHECK(c1 == 1);
    const auto [w2, c2] = leading_term(Poly(Word{x23, x15}) - Poly(Word{x15, x23}));
    CHECK(w2 == Word{x23, x15});
    CHECK(c2 == 1);
    const auto [w3, c3] = leading_term(Poly(Word{x15}));
    CHECK(w3 == Word{x15});
    CHECK(c3 == 1);
    CHECK_THROWS_AS(leading_term(Poly{}), InvalidArgument);
    CHECK(Poly{}.degree() == -1);
  }

  SUBCASE("printing") {
    CHECK(Poly{}.to_string() == "0");
    CHECK((Poly(Word{x34, x12}) - Poly(Word{x15, x23})).to_string() == "x34*x12 - x15*x23");
    CHECK(Poly(Word{x12}, -2).to_string() == "-2*x12");
    CHECK(Poly::one().to_string() == "1");
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int n = 5; n <= 8; ++n) {
    CycleContext ctx(n);
    for (int t = 0; t < 40; ++t) {
      const Poly a = random_poly(ctx, rng), b = random_poly(ctx, rng), c = random_poly(ctx, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
      const Poly ab = a * b;
      for (const auto& [w, coeff] : ab.terms()) CHECK(coeff != 0);
    }
  }
}

TEST_CASE("lead of a product of monomials is the concatenation") {
  std::mt19937_64 rng(3);
  CycleContext ctx(7);
  const auto vars = ctx.variables();
  for (int t = 0; t < 100; ++t) {
    std::vector<EdgeVar> u, v;
    for (int k = 1 + static_cast<int>(rng() % 3); k > 0; --k) u.push_back(vars[rng() % vars.size()]);
    for (int k = 1 + static_cast<int>(rng() % 3); k > 0; --k) v.push_back(vars[rng() % vars.size()]);
    const Word wu(u), wv(v);
    CHECK((Poly(wu) * Poly(wv)).leading_term().first == wu * wv);
  }
}

TEST_CASE("big coefficients stay exact") {
  CycleContext ctx(4);
  Poly p(Word{ctx.edge(1, 2)}, Integer(1) << 100);
  p = p * p;
  CHECK(p.coefficient(Word{ctx.edge(1, 2), ctx.edge(1, 2)}) == (Integer(1) << 200));
}
