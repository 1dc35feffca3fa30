// Gröbner basis of the cyclic quotient, normal forms, and an overlap-based
// verifier for the basis.
#pragma once

#include "cyclefk/algebra.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclefk {

/// lhs -> rhs, i.e. the basis element lhs - rhs. Every word of rhs is
/// glex-smaller than lhs.
struct RewriteRule {
  Word lhs;
  Poly rhs;

  std::size_t degree() const { return lhs.degree(); }
  bool is_monomial() const { return rhs.is_zero(); }
  Poly as_poly() const { return Poly(lhs) - rhs; }

  /// Builds the rule for a nonzero relation, negating it first if its
  /// leading coefficient is -1. Throws InvalidArgument for any other leading
  /// coefficient.
  static RewriteRule from_relation(const Poly& relation);

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

class GroebnerBasis {
 public:
  /// Rules must be over ctx and have pairwise distinct left-hand sides.
  GroebnerBasis(CycleContext ctx, std::vector<RewriteRule> rules);

  const CycleContext& context() const { return ctx_; }
  std::span<const RewriteRule> rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

  /// Multiset of rule degrees, ascending.
  std::vector<std::size_t> degrees() const;
  std::size_t max_rule_degree() const;

  /// Rules of the given degree, in generation order.
  std::vector<RewriteRule> rules_of_degree(std::size_t degree) const;

  /// Subset of the rules of degree <= max_degree.
  GroebnerBasis truncated(std::size_t max_degree) const;

  /// An occurrence of rules()[rule].lhs starting at word[pos]. When several
  /// left-hand sides start at the same position the shortest one wins.
  struct Match {
    std::size_t rule;
    std::size_t pos;
  };
  std::optional<Match> find_leftmost(std::span<const EdgeVar> word) const;
  std::optional<Match> find_rightmost(std::span<const EdgeVar> word) const;
  /// Some lhs ends exactly at the end of word.
  bool has_suffix_match(std::span<const EdgeVar> word) const;

  bool is_reducible(const Word& w) const { return find_leftmost(w.vars()).has_value(); }

 private:
  std::optional<std::size_t> match_at(std::span<const EdgeVar> word, std::size_t pos) const;

  CycleContext ctx_;
  std::vector<RewriteRule> rules_;
  // Trie over generator codes; node 0 is the root. children_[node * n + code]
  // is the child index or -1; terminal_[node] is the rule index or -1.
  std::vector<std::int32_t> children_;
  std::vector<std::int32_t> terminal_;
};

/// All rules of the cyclic quotient: the quadratic relations, the degree-3
/// words x_{1n} x_{m,m+1} x_{12}, and the longer words
/// x_{1n} x_{m_j} ... x_{m_1} x_{12} with 3 <= m_1, gaps >= 2, m_j <= n-2.
GroebnerBasis build_groebner(const CycleContext& ctx);

/// The quadratic relations only (the defining generators of the ideal).
std::vector<RewriteRule> quadratic_rules(const CycleContext& ctx);

/// Number of degree-2 rules predicted by counting the index ranges.
std::size_t expected_quadratic_rule_count(int n);

/// 2 + the largest number of indices in [3, n-2] with pairwise gaps >= 2.
std::size_t expected_max_rule_degree(int n);

enum class Strategy { Leftmost, Rightmost };

/// Repeatedly rewrites the glex-largest reducible word until no word of the
/// polynomial contains a left-hand side. The strategy picks which occurrence
/// inside that word is rewritten.
Poly normal_form(const Poly& p, const GroebnerBasis& gb, Strategy strategy = Strategy::Leftmost);

/// normal_form(a * b).
Poly quotient_multiply(const Poly& a, const Poly& b, const GroebnerBasis& gb);

struct Overlap {
  enum class Kind { Suffix, Inclusion };
  Kind kind;
  /// Offset of the second lhs inside the superword.
  std::size_t position;
  Word superword;

  friend bool operator==(const Overlap&, const Overlap&) = default;
};

/// Proper suffix/prefix overlaps of r1.lhs with r2.lhs, plus occurrences of
/// r2.lhs strictly inside r1.lhs.
std::vector<Overlap> overlaps(const RewriteRule& r1, const RewriteRule& r2);

/// The ambiguity superword rewritten both ways, as a difference.
Poly s_polynomial(const RewriteRule& r1, const RewriteRule& r2, const Overlap& overlap);

struct VerificationReport {
  struct Failure {
    std::size_t rule1;
    std::size_t rule2;
    Overlap overlap;
    Poly residue;
  };

  bool passed = true;
  std::size_t max_degree = 0;
  std::size_t overlaps_checked = 0;
  std::map<std::size_t, std::size_t> overlaps_by_degree;
  /// Overlaps whose S-polynomial did not reduce to zero; at most
  /// VerifyOptions::max_failures of them are kept in `failures`.
  std::size_t failure_count = 0;
  std::vector<Failure> failures;
  std::size_t random_words = 0;
  std::size_t strategy_mismatches = 0;
  std::optional<Word> first_mismatch;

  std::string summary() const;
};

struct VerifyOptions {
  std::size_t random_words = 1000;
  std::uint64_t seed = 0x5eed;
  std::size_t max_failures = 16;
};

/// Reduces the S-polynomial of every overlap with superword degree
/// <= max_degree, then checks that leftmost and rightmost rewriting agree on
/// random words of degree <= max_degree.
VerificationReport verify_groebner(const GroebnerBasis& gb, std::size_t max_degree,
                                   const VerifyOptions& options = {});

/// max_rule_degree() + 2.
std::size_t default_verify_degree(const GroebnerBasis& gb);

}  // namespace cyclefk
