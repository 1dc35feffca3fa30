#include "cyclefk/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cyclefk {

namespace {

bool shares_vertex(EdgeVar a, EdgeVar b) {
  return a.i() == b.i() || a.i() == b.j() || a.j() == b.i() || a.j() == b.j();
}

bool edge_less(EdgeVar a, EdgeVar b) { return a.i() != b.i() ? a.i() < b.i() : a.j() < b.j(); }

std::vector<Matching> filter_subsets(const std::vector<EdgeVar>& edges) {
  const std::size_t count = edges.size();
  std::vector<Matching> out;
  for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
    std::vector<EdgeVar> chosen;
    bool ok = true;
    for (std::size_t e = 0; e < count && ok; ++e) {
      if (!(mask & (1u << e))) continue;
      for (EdgeVar c : chosen) {
        if (shares_vertex(c, edges[e])) {
          ok = false;
          break;
        }
      }
      chosen.push_back(edges[e]);
    }
    if (ok) out.emplace_back(std::move(chosen));
  }
  std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

void closed_form_tail(int next_max, int lowest, std::vector<EdgeVar>& current, const CycleContext& ctx,
                      std::vector<Word>& out) {
  for (int m = next_max; m >= lowest; --m) {
    current.push_back(ctx.path_edge(m));
    out.emplace_back(current);
    closed_form_tail(m - 2, lowest, current, ctx, out);
    current.pop_back();
  }
}

}  // namespace

Matching::Matching(std::vector<EdgeVar> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), edge_less);
  for (std::size_t a = 0; a < edges_.size(); ++a) {
    for (std::size_t b = a + 1; b < edges_.size(); ++b) {
      if (shares_vertex(edges_[a], edges_[b])) {
        throw InvalidArgument("edges " + edges_[a].to_string() + " and " + edges_[b].to_string() +
                              " share a vertex");
      }
    }
  }
}

bool operator<(const Matching& a, const Matching& b) {
  return std::lexicographical_compare(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(),
                                      edge_less);
}

std::vector<Matching> enumerate_matchings_cycle(int n) {
  const CycleContext ctx(n);
  if (n > kBruteForceCap) {
    throw InvalidArgument("subset enumeration is limited to n <= " + std::to_string(kBruteForceCap));
  }
  return filter_subsets(ctx.variables());
}

std::vector<Matching> enumerate_matchings_path(int m) {
  if (m < 2) throw InvalidArgument("path needs at least 2 vertices, got " + std::to_string(m));
  if (m > kBruteForceCap + 1) {
    throw InvalidArgument("subset enumeration is limited to " + std::to_string(kBruteForceCap) + " segments");
  }
  std::vector<EdgeVar> segments;
  for (int i = 1; i < m; ++i) segments.push_back(EdgeVar::segment(i));
  return filter_subsets(segments);
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer acc = 1;
  for (long t = 1; t <= k; ++t) acc = acc * (n - k + t) / t;
  return acc;
}

Integer count_path_matchings(int m, int k) {
  if (k < 0) return 0;
  return binomial(m - k, k);
}

Integer count_cycle_matchings(int n, int k) {
  if (k < 0 || 2 * k > n) return 0;
  const Integer numer = Integer(n) * binomial(n - k, k);
  if (numer % (n - k) != 0) {
    throw ConsistencyError("non-integral matching count for n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  return numer / (n - k);
}

QPoly q_fibonacci(int m) {
  if (m < 0) throw InvalidArgument("q-Fibonacci index must be >= 0");
  QPoly out;
  for (int k = 0; 2 * k <= m; ++k) out.add(static_cast<std::size_t>(k), binomial(m - k, k));
  return out;
}

QPoly q_lucas(int n) {
  if (n < 0) throw InvalidArgument("q-Lucas index must be >= 0");
  if (n == 0) return QPoly::constant(2);
  QPoly out;
  for (int k = 0; 2 * k <= n; ++k) out.add(static_cast<std::size_t>(k), count_cycle_matchings(n, k));
  return out;
}

Integer lucas_number(int n) {
  if (n < 1) throw InvalidArgument("Lucas recurrence starts at n = 1");
  Integer prev = 1;  // L_1
  Integer cur = 3;   // L_2
  if (n == 1) return prev;
  for (int k = 3; k <= n; ++k) {
    Integer next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Word canonical_word(const Matching& m, const CycleContext& ctx) {
  std::vector<EdgeVar> vars;
  bool closing = false;
  for (EdgeVar e : m.edges()) {
    if (!ctx.is_edge(e.i(), e.j())) throw InvalidArgument(e.to_string() + " is not an edge of the cycle");
    if (e == ctx.closing_edge()) {
      closing = true;
    } else {
      vars.push_back(e);
    }
  }
  std::sort(vars.begin(), vars.end(), [](EdgeVar a, EdgeVar b) { return a.i() > b.i(); });
  if (closing) vars.insert(vars.begin(), ctx.closing_edge());
  return Word(std::move(vars));
}

Matching matching_of_word(const Word& w) {
  return Matching(std::vector<EdgeVar>(w.vars().begin(), w.vars().end()));
}

std::vector<Word> algebra_basis(const GroebnerBasis& gb) {
  const CycleContext& ctx = gb.context();
  const auto alphabet = ctx.variables();
  const auto depth_limit = static_cast<std::size_t>(ctx.n());
  std::vector<std::vector<Word>> by_degree{{Word{}}};
  for (std::size_t d = 1;; ++d) {
    std::vector<Word> next;
    for (const Word& w : by_degree.back()) {
      for (EdgeVar v : alphabet) {
        Word extended = w * Word{v};
        if (!gb.has_suffix_match(extended.vars())) next.push_back(std::move(extended));
      }
    }
    if (next.empty()) break;
    if (d > depth_limit) throw ConsistencyError("normal words do not terminate; the rule set is incomplete");
    std::sort(next.begin(), next.end(), [](const Word& a, const Word& b) { return glex_compare(a, b) > 0; });
    by_degree.push_back(std::move(next));
  }
  std::vector<Word> out;
  for (auto& slice : by_degree) {
    for (auto& w : slice) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> basis_closed_form(const CycleContext& ctx) {
  const int n = ctx.n();
  std::vector<Word> out{Word{}};
  std::vector<EdgeVar> current;
  closed_form_tail(n - 1, 1, current, ctx, out);
  current.push_back(ctx.closing_edge());
  out.emplace_back(current);
  closed_form_tail(n - 2, 2, current, ctx, out);
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : glex_compare(a, b) > 0;
  });
  return out;
}

QPoly hilbert_series(const GroebnerBasis& gb) {
  QPoly out;
  for (const Word& w : algebra_basis(gb)) out.add(w.degree(), 1);
  return out;
}

MaxDegreeStats max_degree_stats(int n) {
  CycleContext ctx(n);
  return MaxDegreeStats{n / 2, n % 2 == 0 ? Integer(2) : Integer(n)};
}

}  // namespace cyclefk
