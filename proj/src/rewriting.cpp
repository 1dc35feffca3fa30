#include "cyclefk/rewriting.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cyclefk {

namespace {

Word make_word(std::vector<EdgeVar> vars) { return Word(std::move(vars)); }

RewriteRule monomial_rule(std::vector<EdgeVar> vars) { return RewriteRule{make_word(std::move(vars)), Poly{}}; }

RewriteRule commutation_rule(EdgeVar big, EdgeVar small) {
  // big*small - small*big, with big*small leading.
  Poly relation = Poly(Word{big, small}) - Poly(Word{small, big});
  return RewriteRule::from_relation(relation);
}

// Index sets {m_1 < ... < m_j}, j >= 1, inside [lo, hi] with gaps >= 2.
void spaced_sequences(int lo, int hi, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  for (int m = lo; m <= hi; ++m) {
    current.push_back(m);
    out.push_back(current);
    spaced_sequences(m + 2, hi, current, out);
    current.pop_back();
  }
}

}  // namespace

RewriteRule RewriteRule::from_relation(const Poly& relation) {
  auto [lead, coeff] = relation.leading_term();
  Poly monic = relation;
  if (coeff == -1) {
    monic = -relation;
  } else if (coeff != 1) {
    throw InvalidArgument("relation is not monic up to sign: " + relation.to_string());
  }
  return RewriteRule{lead, Poly(lead) - monic};
}

GroebnerBasis::GroebnerBasis(CycleContext ctx, std::vector<RewriteRule> rules)
    : ctx_(ctx), rules_(std::move(rules)) {
  const auto n = static_cast<std::size_t>(ctx_.n());
  children_.assign(n, -1);
  terminal_.assign(1, -1);
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const Word& lhs = rules_[r].lhs;
    if (lhs.empty()) throw InvalidArgument("rule with empty left-hand side");
    for (const auto& [w, c] : rules_[r].rhs.terms()) {
      if (glex_compare(w, lhs) >= 0) {
        throw InvalidArgument("rule rhs is not below its lhs: " + lhs.to_string());
      }
    }
    std::size_t node = 0;
    for (EdgeVar v : lhs.vars()) {
      if (!ctx_.is_edge(v.i(), v.j())) throw InvalidArgument("rule uses a non-edge " + v.to_string());
      const std::size_t slot = node * n + static_cast<std::size_t>(v.code(ctx_.n()));
      if (children_[slot] < 0) {
        children_[slot] = static_cast<std::int32_t>(terminal_.size());
        terminal_.push_back(-1);
        children_.resize(children_.size() + n, -1);
      }
      node = static_cast<std::size_t>(children_[slot]);
    }
    if (terminal_[node] >= 0) throw InvalidArgument("duplicate left-hand side " + lhs.to_string());
    terminal_[node] = static_cast<std::int32_t>(r);
  }
}

std::vector<std::size_t> GroebnerBasis::degrees() const {
  std::vector<std::size_t> out;
  out.reserve(rules_.size());
  for (const auto& r : rules_) out.push_back(r.degree());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t GroebnerBasis::max_rule_degree() const {
  std::size_t d = 0;
  for (const auto& r : rules_) d = std::max(d, r.degree());
  return d;
}

std::vector<RewriteRule> GroebnerBasis::rules_of_degree(std::size_t degree) const {
  std::vector<RewriteRule> out;
  for (const auto& r : rules_) {
    if (r.degree() == degree) out.push_back(r);
  }
  return out;
}

GroebnerBasis GroebnerBasis::truncated(std::size_t max_degree) const {
  std::vector<RewriteRule> kept;
  for (const auto& r : rules_) {
    if (r.degree() <= max_degree) kept.push_back(r);
  }
  return GroebnerBasis(ctx_, std::move(kept));
}

std::optional<std::size_t> GroebnerBasis::match_at(std::span<const EdgeVar> word, std::size_t pos) const {
  const auto n = static_cast<std::size_t>(ctx_.n());
  std::size_t node = 0;
  for (std::size_t k = pos; k < word.size(); ++k) {
    const std::int32_t child = children_[node * n + static_cast<std::size_t>(word[k].code(ctx_.n()))];
    if (child < 0) return std::nullopt;
    node = static_cast<std::size_t>(child);
    if (terminal_[node] >= 0) return static_cast<std::size_t>(terminal_[node]);
  }
  return std::nullopt;
}

std::optional<GroebnerBasis::Match> GroebnerBasis::find_leftmost(std::span<const EdgeVar> word) const {
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    if (auto r = match_at(word, pos)) return Match{*r, pos};
  }
  return std::nullopt;
}

std::optional<GroebnerBasis::Match> GroebnerBasis::find_rightmost(std::span<const EdgeVar> word) const {
  for (std::size_t pos = word.size(); pos-- > 0;) {
    if (auto r = match_at(word, pos)) return Match{*r, pos};
  }
  return std::nullopt;
}

bool GroebnerBasis::has_suffix_match(std::span<const EdgeVar> word) const {
  const auto n = static_cast<std::size_t>(ctx_.n());
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    std::size_t node = 0;
    bool alive = true;
    for (std::size_t k = pos; k < word.size(); ++k) {
      const std::int32_t child = children_[node * n + static_cast<std::size_t>(word[k].code(ctx_.n()))];
      if (child < 0) {
        alive = false;
        break;
      }
      node = static_cast<std::size_t>(child);
    }
    if (alive && terminal_[node] >= 0) return true;
  }
  return false;
}

std::vector<RewriteRule> quadratic_rules(const CycleContext& ctx) {
  const int n = ctx.n();
  const EdgeVar closing = ctx.closing_edge();
  std::vector<RewriteRule> rules;
  for (int m = 1; m <= n - 1; ++m) rules.push_back(monomial_rule({ctx.path_edge(m), ctx.path_edge(m)}));
  rules.push_back(monomial_rule({closing, closing}));
  for (int m = 1; m <= n - 2; ++m) {
    rules.push_back(monomial_rule({ctx.path_edge(m), ctx.path_edge(m + 1)}));
    rules.push_back(monomial_rule({ctx.path_edge(m + 1), ctx.path_edge(m)}));
  }
  rules.push_back(monomial_rule({ctx.path_edge(n - 1), closing}));
  rules.push_back(monomial_rule({closing, ctx.path_edge(n - 1)}));
  rules.push_back(monomial_rule({ctx.path_edge(1), closing}));
  rules.push_back(monomial_rule({closing, ctx.path_edge(1)}));
  for (int l = 3; l <= n - 1; ++l) {
    for (int m = 1; m <= l - 2; ++m) rules.push_back(commutation_rule(ctx.path_edge(m), ctx.path_edge(l)));
  }
  for (int m = 2; m <= n - 2; ++m) rules.push_back(commutation_rule(ctx.path_edge(m), closing));
  return rules;
}

GroebnerBasis build_groebner(const CycleContext& ctx) {
  const int n = ctx.n();
  std::vector<RewriteRule> rules = quadratic_rules(ctx);

  std::vector<std::vector<int>> sequences;
  std::vector<int> scratch;
  spaced_sequences(3, n - 2, scratch, sequences);
  std::stable_sort(sequences.begin(), sequences.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& seq : sequences) {
    std::vector<EdgeVar> vars{ctx.closing_edge()};
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) vars.push_back(ctx.path_edge(*it));
    vars.push_back(ctx.path_edge(1));
    rules.push_back(monomial_rule(std::move(vars)));
  }
  return GroebnerBasis(ctx, std::move(rules));
}

std::size_t expected_quadratic_rule_count(int n) {
  const auto un = static_cast<std::size_t>(n);
  const std::size_t squares = un;
  const std::size_t adjacent = 2 * (un - 2);
  const std::size_t boundary = 4;
  const std::size_t commuting_path = (un - 3) * (un - 2) / 2;
  const std::size_t commuting_closing = un - 3;
  return squares + adjacent + boundary + commuting_path + commuting_closing;
}

std::size_t expected_max_rule_degree(int n) {
  const int span = n - 4;  // size of [3, n-2]
  return 2 + static_cast<std::size_t>(span > 0 ? (span + 1) / 2 : 0);
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb, Strategy strategy) {
  Poly::Terms work = p.terms();
  Poly result;
  while (!work.empty()) {
    auto last = std::prev(work.end());
    Word w = last->first;
    Integer c = std::move(last->second);
    work.erase(last);

    auto match = strategy == Strategy::Leftmost ? gb.find_leftmost(w.vars()) : gb.find_rightmost(w.vars());
    if (!match) {
      result.add_term(w, c);
      continue;
    }
    const RewriteRule& rule = gb.rules()[match->rule];
    const auto vars = w.vars();
    const std::size_t tail = match->pos + rule.degree();
    for (const auto& [u, d] : rule.rhs.terms()) {
      std::vector<EdgeVar> out;
      out.reserve(w.degree() - rule.degree() + u.degree());
      out.insert(out.end(), vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(match->pos));
      out.insert(out.end(), u.vars().begin(), u.vars().end());
      out.insert(out.end(), vars.begin() + static_cast<std::ptrdiff_t>(tail), vars.end());
      Word rewritten(std::move(out));
      Integer delta = c * d;
      auto [it, inserted] = work.try_emplace(std::move(rewritten), delta);
      if (!inserted) {
        it->second += delta;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return result;
}

Poly quotient_multiply(const Poly& a, const Poly& b, const GroebnerBasis& gb) { return normal_form(a * b, gb); }

std::vector<Overlap> overlaps(const RewriteRule& r1, const RewriteRule& r2) {
  const auto u = r1.lhs.vars();
  const auto v = r2.lhs.vars();
  std::vector<Overlap> out;
  // v strictly inside u (not the identical occurrence of a rule with itself).
  if (v.size() <= u.size()) {
    for (std::size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
      if (v.size() == u.size() && r1 == r2) break;
      if (std::equal(v.begin(), v.end(), u.begin() + static_cast<std::ptrdiff_t>(pos))) {
        out.push_back(Overlap{Overlap::Kind::Inclusion, pos, r1.lhs});
      }
    }
  }
  // Proper suffix of u equal to a proper prefix of v.
  const std::size_t limit = std::min(u.size(), v.size());
  for (std::size_t len = limit > 0 ? limit - 1 : 0; len >= 1; --len) {
    const std::size_t pos = u.size() - len;
    if (std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len),
                   u.begin() + static_cast<std::ptrdiff_t>(pos))) {
      out.push_back(Overlap{Overlap::Kind::Suffix, pos, r1.lhs * r2.lhs.subword(len, v.size() - len)});
    }
  }
  return out;
}

Poly s_polynomial(const RewriteRule& r1, const RewriteRule& r2, const Overlap& overlap) {
  const Word& sup = overlap.superword;
  const std::size_t d = sup.degree();
  const Word after_first = sup.subword(r1.degree(), d - r1.degree());
  const Word before_second = sup.subword(0, overlap.position);
  const std::size_t end_second = overlap.position + r2.degree();
  const Word after_second = sup.subword(end_second, d - end_second);
  return r1.rhs * Poly(after_first) - Poly(before_second) * r2.rhs * Poly(after_second);
}

std::size_t default_verify_degree(const GroebnerBasis& gb) { return gb.max_rule_degree() + 2; }

VerificationReport verify_groebner(const GroebnerBasis& gb, std::size_t max_degree, const VerifyOptions& options) {
  if (max_degree < 3) throw InvalidArgument("verification degree must be at least 3");
  VerificationReport report;
  report.max_degree = max_degree;
  const auto rules = gb.rules();
  for (std::size_t a = 0; a < rules.size(); ++a) {
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const std::size_t du = rules[a].degree();
      const std::size_t dv = rules[b].degree();
      const std::size_t min_sup = dv < du ? du : dv + 1;
      if (min_sup > max_degree) continue;
      for (const Overlap& ov : overlaps(rules[a], rules[b])) {
        const std::size_t deg = ov.superword.degree();
        if (deg > max_degree) continue;
        ++report.overlaps_checked;
        ++report.overlaps_by_degree[deg];
        if (rules[a].is_monomial() && rules[b].is_monomial()) continue;
        Poly residue = normal_form(s_polynomial(rules[a], rules[b], ov), gb);
        if (!residue.is_zero()) {
          report.passed = false;
          ++report.failure_count;
          if (report.failures.size() < options.max_failures) {
            report.failures.push_back({a, b, ov, std::move(residue)});
          }
        }
      }
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> degree_dist(0, max_degree);
  std::uniform_int_distribution<int> letter_dist(0, gb.context().n() - 1);
  for (std::size_t t = 0; t < options.random_words; ++t) {
    std::vector<EdgeVar> vars(degree_dist(rng));
    for (auto& v : vars) v = gb.context().from_code(letter_dist(rng));
    const Poly word{Word(std::move(vars))};
    ++report.random_words;
    if (normal_form(word, gb, Strategy::Leftmost) != normal_form(word, gb, Strategy::Rightmost)) {
      report.passed = false;
      if (report.strategy_mismatches++ == 0) report.first_mismatch = word.leading_term().first;
    }
  }
  return report;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << (passed ? "pass" : "FAIL") << ": " << overlaps_checked << " overlaps up to degree " << max_degree << ", "
      << failure_count << " nonzero S-polynomials; " << random_words << " random words, " << strategy_mismatches
      << " strategy mismatches";
  for (const auto& f : failures) {
    out << "\n  overlap " << f.overlap.superword.to_string() << " (rules " << f.rule1 << ", " << f.rule2
        << ") leaves " << f.residue.to_string();
  }
  if (first_mismatch) out << "\n  first mismatch on " << first_mismatch->to_string();
  return out.str();
}

}  // namespace cyclefk
