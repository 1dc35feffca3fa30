#include "cyclefk/cli.hpp"

#include "cyclefk/combinatorics.hpp"
#include "cyclefk/dihedral.hpp"
#include "cyclefk/qpoly.hpp"
#include "cyclefk/rewriting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace cyclefk {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  int n = 0;
  std::string format = "text";
  std::optional<int> max_degree;
  std::uint64_t seed = VerifyOptions{}.seed;
  bool unsafe_large_n = false;
  bool no_timing = false;
  std::string element;
  std::string word;
};

struct Result {
  json payload;
  std::string text;
  std::string csv;
  int exit_code = kExitOk;
};

bool logging_enabled() {
  const char* v = std::getenv("CYCLEFK_LOG");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void log_line(std::ostream& err, const std::string& msg) {
  if (logging_enabled()) err << "cyclefk: " << msg << '\n';
}

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

json qpoly_json(const QPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(integer_json(c));
  return arr;
}

json word_json(const Word& w) {
  json arr = json::array();
  for (EdgeVar v : w.vars()) arr.push_back(json::array({v.i(), v.j()}));
  return arr;
}

json edges_json(const std::vector<EdgeVar>& edges) {
  json arr = json::array();
  for (EdgeVar v : edges) arr.push_back(json::array({v.i(), v.j()}));
  return arr;
}

// Doubles go through a fixed rounding so that summation noise never reaches
// the output.
double tidy(double x) {
  double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

std::string coeff_list(const QPoly& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out << (k ? ", " : "") << p.coeffs()[k];
  out << ']';
  return out.str();
}

std::string edges_text(const std::vector<EdgeVar>& edges) {
  if (edges.empty()) return "{}";
  std::string out;
  for (EdgeVar v : edges) out += (out.empty() ? "" : " ") + std::to_string(v.i()) + "-" + std::to_string(v.j());
  return out;
}

std::string signed_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s = p.to_string();
  return s.front() == '-' ? s : "+" + s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void require_cap(const Options& o) {
  if (o.n > kDefaultCliCap && !o.unsafe_large_n) {
    throw InvalidArgument("n = " + std::to_string(o.n) + " exceeds the default cap of " +
                          std::to_string(kDefaultCliCap) + "; pass --unsafe-large-n to override");
  }
}

// ---------------------------------------------------------------- basis

Result cmd_basis(const Options& o) {
  require_cap(o);
  const CycleContext ctx(o.n);
  const auto gb = build_groebner(ctx);
  const auto basis = algebra_basis(gb);

  std::vector<std::vector<const Word*>> by_degree;
  for (const Word& w : basis) {
    if (by_degree.size() <= w.degree()) by_degree.resize(w.degree() + 1);
    by_degree[w.degree()].push_back(&w);
  }

  Result r;
  json histogram = json::array();
  json degrees = json::array();
  std::ostringstream text, csv;
  text << "basis of the cyclic quotient, n = " << o.n << '\n';
  csv << "degree,word,matching\n";
  for (std::size_t d = 0; d < by_degree.size(); ++d) {
    histogram.push_back(by_degree[d].size());
    json elements = json::array();
    text << "degree " << d << " (" << by_degree[d].size() << "):\n";
    for (const Word* w : by_degree[d]) {
      const Matching m = matching_of_word(*w);
      if (!(canonical_word(m, ctx) == *w)) {
        throw ConsistencyError(w->to_string() + " is not the canonical word of its matching");
      }
      elements.push_back({{"word", word_json(*w)}, {"matching", edges_json(m.edges())}});
      text << "  " << w->to_string() << "  <->  " << edges_text(m.edges()) << '\n';
      csv << d << ',' << w->to_string() << ',' << edges_text(m.edges()) << '\n';
    }
    degrees.push_back({{"degree", d}, {"count", by_degree[d].size()}, {"elements", std::move(elements)}});
  }
  text << "total " << basis.size() << '\n';
  r.payload = {{"total", basis.size()}, {"histogram", std::move(histogram)}, {"degrees", std::move(degrees)}};
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

// ---------------------------------------------------------------- hilbert / dim

Result cmd_hilbert(const Options& o) {
  const CycleContext ctx(o.n);
  const QPoly series = q_lucas(o.n);
  Result r;
  json cross = {{"performed", false}, {"agrees", nullptr}, {"basis_histogram", nullptr}};
  std::string cross_text = "skipped (n above the enumeration cap)";
  if (o.n <= kDefaultCliCap || o.unsafe_large_n) {
    const QPoly counted = hilbert_series(build_groebner(ctx));
    const bool agrees = counted == series;
    cross = {{"performed", true}, {"agrees", agrees}, {"basis_histogram", qpoly_json(counted)}};
    cross_text = agrees ? "agrees" : "DISAGREES: basis gives " + counted.to_string();
    if (!agrees) r.exit_code = kExitConsistency;
  }
  r.payload = {{"hilbert", qpoly_json(series)},
               {"dimension", integer_json(series.evaluate(1))},
               {"cross_check", std::move(cross)}};
  std::ostringstream text, csv;
  text << "H_" << o.n << "(q) = " << series.to_string() << '\n'
       << "coefficients " << coeff_list(series) << '\n'
       << "cross-check against basis enumeration: " << cross_text << '\n';
  csv << "degree,coefficient\n";
  for (std::size_t k = 0; k < series.coeffs().size(); ++k) csv << k << ',' << series.coeffs()[k] << '\n';
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

Result cmd_dim(const Options& o) {
  const CycleContext ctx(o.n);
  const Integer dim = q_lucas(o.n).evaluate(1);
  const Integer lucas = lucas_number(o.n);
  Result r;
  r.payload = {{"dimension", integer_json(dim)}, {"lucas_recurrence", integer_json(lucas)}, {"agrees", dim == lucas}};
  if (dim != lucas) r.exit_code = kExitConsistency;
  std::ostringstream text;
  text << "dim = " << dim << '\n';
  if (dim != lucas) text << "Lucas recurrence gives " << lucas << '\n';
  r.text = text.str();
  r.csv = "n,dimension\n" + std::to_string(o.n) + "," + dim.str() + "\n";
  return r;
}

// ---------------------------------------------------------------- matchings

Result cmd_matchings(const Options& o) {
  if (o.n > kBruteForceCap) {
    throw InvalidArgument("matchings enumerates all edge subsets and is limited to n <= " +
                          std::to_string(kBruteForceCap));
  }
  const auto all = enumerate_matchings_cycle(o.n);
  const Integer lucas = lucas_number(o.n);
  std::vector<std::size_t> by_size;
  json list = json::array();
  std::ostringstream text, csv;
  csv << "size,matching\n";
  for (const auto& m : all) {
    if (by_size.size() <= m.size()) by_size.resize(m.size() + 1, 0);
    ++by_size[m.size()];
    list.push_back(edges_json(m.edges()));
    text << edges_text(m.edges()) << '\n';
    csv << m.size() << ',' << edges_text(m.edges()) << '\n';
  }
  Result r;
  const bool agrees = Integer(all.size()) == lucas;
  if (!agrees) r.exit_code = kExitConsistency;
  r.payload = {{"count", all.size()},
               {"by_size", by_size},
               {"lucas_recurrence", integer_json(lucas)},
               {"agrees", agrees},
               {"matchings", std::move(list)}};
  text << "count " << all.size() << " (by size " << json(by_size).dump() << "), Lucas number " << lucas << '\n';
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

// ---------------------------------------------------------------- character

DihedralElement parse_element(const std::string& spec, int n) {
  auto bad = [&]() { return InvalidArgument("malformed element '" + spec + "'; expected e, r^k, s, s*r^k or all"); };
  auto exponent = [&](const std::string& s) -> int {
    if (s == "r") return 1;
    if (s.size() < 3 || s.compare(0, 2, "r^") != 0) throw bad();
    const std::string digits = s.substr(2);
    if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos) throw bad();
    return std::stoi(digits);
  };
  const DihedralElement s = DihedralElement::s(n);
  if (spec == "e") return DihedralElement::identity(n);
  if (spec == "s") return s;
  if (spec.compare(0, 2, "s*") == 0) return dn_multiply(s, DihedralElement(n, exponent(spec.substr(2)), false));
  if (spec.size() > 2 && spec.compare(spec.size() - 2, 2, "*s") == 0) {
    return dn_multiply(DihedralElement(n, exponent(spec.substr(0, spec.size() - 2)), false), s);
  }
  return DihedralElement(n, exponent(spec), false);
}

struct ClosedForm {
  std::string formula;
  QPoly value;
};

std::optional<ClosedForm> closed_form_for(const DihedralElement& g) {
  const int n = g.n();
  if (!g.reflection()) {
    if (g.rotation() == 0) return ClosedForm{"q_lucas", q_lucas(n)};
    return ClosedForm{"rotation", char_rotation_closed(n, g.rotation())};
  }
  if (n % 2 == 1) return ClosedForm{"reflection_odd", char_reflection_odd(n)};
  // r^k s is conjugate to s for even k and to s*r for odd k.
  if (g.rotation() % 2 == 0) return ClosedForm{"reflection_s", char_reflection_even(n)};
  return ClosedForm{"reflection_sr", char_reflection_sr_even(n)};
}

json closed_json(const std::optional<ClosedForm>& cf, const QPoly& trace) {
  if (!cf) return nullptr;
  return {{"formula", cf->formula}, {"value", qpoly_json(cf->value)}, {"agrees", cf->value == trace}};
}

std::string closed_text(const std::optional<ClosedForm>& cf, const QPoly& trace) {
  if (!cf) return "no closed form";
  return "closed form (" + cf->formula + "): " + cf->value.to_string() + ", " +
         (cf->value == trace ? "agrees" : "DISAGREES");
}

Result cmd_character(const Options& o) {
  require_cap(o);
  const CycleContext ctx(o.n);
  const auto gb = build_groebner(ctx);
  Result r;
  std::ostringstream text, csv;
  csv << "element,degree,trace,closed_form\n";
  auto csv_rows = [&](const std::string& name, const QPoly& trace, const std::optional<ClosedForm>& cf) {
    const int top = std::max(trace.degree(), cf ? cf->value.degree() : -1);
    for (int d = 0; d <= top; ++d) {
      csv << name << ',' << d << ',' << trace[static_cast<std::size_t>(d)] << ',';
      if (cf) csv << cf->value[static_cast<std::size_t>(d)];
      csv << '\n';
    }
  };

  if (o.element == "all") {
    json classes = json::array();
    for (const auto& cls : dn_conjugacy_classes(o.n)) {
      const DihedralElement& rep = cls.front();
      const QPoly trace = graded_trace(rep, gb);
      json names = json::array();
      for (const auto& g : cls) {
        if (!(graded_trace(g, gb) == trace)) {
          throw ConsistencyError("graded trace is not constant on the class of " + rep.name());
        }
        names.push_back(g.name());
      }
      const auto cf = closed_form_for(rep);
      classes.push_back({{"representative", rep.name()},
                         {"size", cls.size()},
                         {"elements", std::move(names)},
                         {"trace", qpoly_json(trace)},
                         {"closed_form", closed_json(cf, trace)}});
      text << "[" << rep.name() << "] (size " << cls.size() << "): " << trace.to_string() << "  "
           << coeff_list(trace) << "; " << closed_text(cf, trace) << '\n';
      csv_rows(rep.name(), trace, cf);
    }
    r.payload = {{"element", "all"}, {"classes", std::move(classes)}};
  } else {
    const DihedralElement g = parse_element(o.element, o.n);
    const QPoly trace = graded_trace(g, gb);
    const auto cf = closed_form_for(g);
    r.payload = {{"element", g.name()}, {"trace", qpoly_json(trace)}, {"closed_form", closed_json(cf, trace)}};
    text << "chi(" << g.name() << ") = " << trace.to_string() << "  " << coeff_list(trace) << '\n'
         << closed_text(cf, trace) << '\n';
    csv_rows(g.name(), trace, cf);
  }
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

// ---------------------------------------------------------------- decompose

Result cmd_decompose(const Options& o) {
  require_cap(o);
  const CycleContext ctx(o.n);
  const auto gb = build_groebner(ctx);
  const auto mults = decompose(gb);
  const QPoly hilbert = hilbert_series(gb);

  Result r;
  std::ostringstream text, csv;
  csv << "label,dimension,degree,multiplicity\n";
  json mult_json = json::array();
  json totals = json::array();
  QPoly weighted;
  for (const auto& m : mults) {
    weighted += Integer(m.dimension) * m.multiplicity;
    const Integer at_one = m.multiplicity.evaluate(1);
    totals.push_back(integer_json(at_one));
    mult_json.push_back({{"label", m.label},
                         {"dimension", m.dimension},
                         {"multiplicity", qpoly_json(m.multiplicity)},
                         {"at_q1", integer_json(at_one)}});
    text << "m_" << m.label << " = " << m.multiplicity.to_string() << "  " << coeff_list(m.multiplicity)
         << "  (q=1: " << at_one << ")\n";
    for (std::size_t d = 0; d < m.multiplicity.coeffs().size(); ++d) {
      csv << m.label << ',' << m.dimension << ',' << d << ',' << m.multiplicity.coeffs()[d] << '\n';
    }
  }
  const bool dims_agree = weighted == hilbert;
  if (!dims_agree) r.exit_code = kExitConsistency;
  text << "sum of dim * m = " << weighted.to_string() << "; Hilbert series " << hilbert.to_string() << ": "
       << (dims_agree ? "agrees" : "DISAGREES") << '\n';

  json closed = json::array();
  bool closed_all = true;
  for (const auto& a : closed_form_multiplicities(o.n)) {
    bool agrees = a.is_integral();
    if (agrees) {
      const auto it = std::find_if(mults.begin(), mults.end(), [&](const Multiplicity& m) { return m.label == a.label; });
      agrees = it != mults.end() && it->multiplicity == a.rounded();
    }
    closed_all = closed_all && agrees;
    json coeffs = json::array();
    std::ostringstream shown;
    for (std::size_t d = 0; d < a.coeffs.size(); ++d) {
      coeffs.push_back(tidy(a.coeffs[d]));
      shown << (d ? ", " : "") << tidy(a.coeffs[d]);
    }
    closed.push_back({{"label", a.label}, {"coefficients", std::move(coeffs)}, {"integral", a.is_integral()}, {"agrees", agrees}});
    if (!agrees) text << "closed-form characters give m_" << a.label << " = [" << shown.str() << "]\n";
  }
  text << "closed-form characters: " << (closed_all ? "agree" : "DISAGREE") << '\n';

  r.payload = {{"multiplicities", std::move(mult_json)},
               {"q1_totals", std::move(totals)},
               {"dimension_check",
                {{"weighted_sum", qpoly_json(weighted)}, {"hilbert", qpoly_json(hilbert)}, {"agrees", dims_agree}}},
               {"closed_form", std::move(closed)},
               {"closed_form_agrees", closed_all}};
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

// ---------------------------------------------------------------- verify-groebner

Result cmd_verify(const Options& o) {
  require_cap(o);
  const CycleContext ctx(o.n);
  const auto gb = build_groebner(ctx);
  std::size_t max_degree = default_verify_degree(gb);
  if (o.max_degree) {
    if (*o.max_degree < 3) throw InvalidArgument("--max-degree must be at least 3");
    max_degree = static_cast<std::size_t>(*o.max_degree);
  }
  VerifyOptions opts;
  opts.seed = o.seed;
  const auto report = verify_groebner(gb, max_degree, opts);

  std::map<std::size_t, std::size_t> rule_degrees;
  for (std::size_t d : gb.degrees()) ++rule_degrees[d];
  json rules_by_degree = json::array();
  for (const auto& [d, c] : rule_degrees) rules_by_degree.push_back({{"degree", d}, {"count", c}});
  json overlaps = json::array();
  for (const auto& [d, c] : report.overlaps_by_degree) overlaps.push_back({{"degree", d}, {"count", c}});
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"rule1", word_json(gb.rules()[f.rule1].lhs)},
                        {"rule2", word_json(gb.rules()[f.rule2].lhs)},
                        {"superword", word_json(f.overlap.superword)},
                        {"residue", f.residue.to_string()}});
  }

  Result r;
  if (!report.passed) r.exit_code = kExitConsistency;
  r.payload = {{"passed", report.passed},
               {"max_degree", report.max_degree},
               {"rule_count", gb.size()},
               {"rules_by_degree", std::move(rules_by_degree)},
               {"overlaps_checked", report.overlaps_checked},
               {"overlaps_by_degree", std::move(overlaps)},
               {"nonzero_s_polynomials", report.failure_count},
               {"failures", std::move(failures)},
               {"random_words", report.random_words},
               {"seed", o.seed},
               {"strategy_mismatches", report.strategy_mismatches},
               {"first_mismatch", report.first_mismatch ? word_json(*report.first_mismatch) : json(nullptr)}};

  std::ostringstream text, csv;
  text << (report.passed ? "PASS" : "FAIL") << " n = " << o.n << ", " << gb.size() << " rules\n" << report.summary()
       << '\n';
  for (const auto& [d, c] : report.overlaps_by_degree) text << "  degree " << d << ": " << c << " overlaps\n";
  for (const auto& f : report.failures) {
    text << "  nonzero: " << f.overlap.superword.to_string() << " -> " << f.residue.to_string() << '\n';
  }
  csv << "key,value\npassed," << bool_text(report.passed) << "\nmax_degree," << report.max_degree
      << "\noverlaps_checked," << report.overlaps_checked << "\nnonzero_s_polynomials," << report.failure_count
      << "\nrandom_words," << report.random_words << "\nstrategy_mismatches," << report.strategy_mismatches << '\n';
  for (const auto& [d, c] : report.overlaps_by_degree) csv << "overlaps_degree_" << d << ',' << c << '\n';
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

// ---------------------------------------------------------------- stability

Result cmd_stability(const Options& o) {
  require_cap(o);
  const CycleContext ctx(o.n);
  const auto gb = build_groebner(ctx);
  const bool stable = check_ideal_stability(gb);
  const auto basis = algebra_basis(gb);
  std::size_t images = 0;
  for (const auto& g : dn_elements(o.n)) {
    for (const Word& b : basis) {
      act_on_basis(g, b, gb);
      ++images;
    }
  }
  Result r;
  if (!stable) r.exit_code = kExitConsistency;
  r.payload = {{"stable", stable},
               {"group_order", 2 * o.n},
               {"generators_checked", quadratic_rules(ctx).size()},
               {"basis_images_checked", images}};
  std::ostringstream text;
  text << "ideal " << (stable ? "is" : "is NOT") << " stable under D_" << o.n << " (" << 2 * o.n
       << " elements); every image of the " << basis.size() << " basis words is a signed basis word\n";
  r.text = text.str();
  r.csv = "key,value\nstable," + bool_text(stable) + "\nbasis_images_checked," + std::to_string(images) + "\n";
  return r;
}

// ---------------------------------------------------------------- reduce

Result cmd_reduce(const Options& o) {
  const CycleContext ctx(o.n);
  const Poly input = parse_word(o.word, ctx);
  const Poly nf = normal_form(input, build_groebner(ctx));
  json terms = json::array();
  std::ostringstream csv;
  csv << "coefficient,word\n";
  for (auto it = nf.terms().rbegin(); it != nf.terms().rend(); ++it) {
    terms.push_back({{"coefficient", integer_json(it->second)}, {"word", word_json(it->first)}});
    csv << it->second << ',' << it->first.to_string() << '\n';
  }
  Result r;
  r.payload = {{"input", signed_text(input)},
               {"normal_form", std::move(terms)},
               {"is_zero", nf.is_zero()},
               {"text", signed_text(nf)}};
  r.text = signed_text(nf) + "\n";
  r.csv = csv.str();
  return r;
}

}  // namespace

Poly parse_word(const std::string& text, const CycleContext& ctx) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto fail = [&](const std::string& why) { return InvalidArgument("cannot parse '" + text + "': " + why); };
  if (s.empty()) throw fail("empty input");
  int sign = 1;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    sign = s[0] == '-' ? -1 : 1;
    pos = 1;
  }
  if (s.substr(pos) == "1") return Poly(Word{}, sign);

  auto read_int = [&](std::size_t& p, std::size_t max_digits) {
    const std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])) && p - start < max_digits) ++p;
    if (p == start) throw fail("expected a digit at position " + std::to_string(start));
    return std::stoi(s.substr(start, p - start));
  };

  std::vector<EdgeVar> vars;
  while (true) {
    if (pos >= s.size() || s[pos] != 'x') throw fail("expected 'x' at position " + std::to_string(pos));
    ++pos;
    int i = 0;
    int j = 0;
    if (pos < s.size() && s[pos] == '{') {
      ++pos;
      i = read_int(pos, 3);
      if (pos >= s.size() || s[pos] != ',') throw fail("expected ',' in braced variable");
      ++pos;
      j = read_int(pos, 3);
      if (pos >= s.size() || s[pos] != '}') throw fail("expected '}' in braced variable");
      ++pos;
    } else {
      i = read_int(pos, 1);
      j = read_int(pos, 1);
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        throw fail("indices above 9 need the braced form x{i,j}");
      }
    }
    if (i >= j) throw fail("variable indices must satisfy i < j");
    if (!ctx.is_edge(i, j)) {
      throw fail("x" + std::to_string(i) + std::to_string(j) + " is not an edge of C_" + std::to_string(ctx.n()));
    }
    vars.push_back(ctx.edge(i, j));
    if (pos == s.size()) break;
    if (s[pos] != '*') throw fail("expected '*' at position " + std::to_string(pos));
    ++pos;
  }
  return Poly(Word(std::move(vars)), sign);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic quotient of the Fomin-Kirillov algebra: Groebner basis, matchings basis, q-Lucas Hilbert "
               "series and dihedral characters.",
               "cyclefk"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--n", o.n, "Size of the cycle (n >= 4)")->required();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--max-degree", o.max_degree, "Largest superword degree for verify-groebner");
  app.add_option("--seed", o.seed, "Seed for the random confluence words");
  app.add_flag("--unsafe-large-n", o.unsafe_large_n, "Lift the n <= 20 cap of the enumerative commands");
  app.add_flag("--no-timing", o.no_timing, "Report meta.elapsed_ms as 0 (byte-identical output)");

  std::vector<std::pair<CLI::App*, Result (*)(const Options&)>> commands;
  auto add = [&](const char* name, const char* help, Result (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    return sub;
  };
  add("basis", "List the monomial basis by degree with its matchings", cmd_basis);
  add("hilbert", "Hilbert series (q-Lucas polynomial), cross-checked against the basis", cmd_hilbert);
  add("dim", "Dimension (Lucas number)", cmd_dim);
  add("matchings", "All matchings of the cycle by subset enumeration (n <= 16)", cmd_matchings);
  add("character", "Graded character of a dihedral element", cmd_character)
      ->add_option("--element", o.element, "e, r^k, s, s*r^k, r^k*s or all")
      ->required();
  add("decompose", "Multiplicities of the irreducible characters", cmd_decompose);
  add("verify-groebner", "Reduce all S-polynomials and test confluence on random words", cmd_verify);
  add("stability", "Check that the ideal is stable under the dihedral action", cmd_stability);
  add("reduce", "Normal form of a word such as x15*x34*x12", cmd_reduce)
      ->add_option("word", o.word, "Word to reduce")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::string name;
  Result (*fn)(const Options&) = nullptr;
  for (const auto& [sub, f] : commands) {
    if (sub->parsed()) {
      name = sub->get_name();
      fn = f;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  Result result;
  try {
    log_line(err, "running " + name + " with n = " + std::to_string(o.n));
    result = fn(o);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  log_line(err, name + " finished in " + std::to_string(elapsed) + " ms, exit " + std::to_string(result.exit_code));

  if (o.format == "json") {
    json envelope = {{"command", name},
                     {"n", o.n},
                     {"payload", std::move(result.payload)},
                     {"meta", {{"version", kSchemaVersion}, {"elapsed_ms", o.no_timing ? 0 : elapsed}}}};
    out << envelope.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << result.csv;
  } else {
    out << result.text;
  }
  if (result.exit_code == kExitConsistency) err << "consistency check failed\n";
  return result.exit_code;
}

}  // namespace cyclefk
