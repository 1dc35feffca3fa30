#include "cyclefk/cli.hpp"
#include "cyclefk/combinatorics.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace cyclefk;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclefk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json payload(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return r.parsed().at("payload");
}

}  // namespace

TEST_CASE("basis") {
  CHECK(run({"basis", "--n", "4"}).out.find("total 7") != std::string::npos);
  CHECK(payload({"basis", "--n", "5"}).at("histogram") == json::array({1, 5, 5}));
  const json p = payload({"basis", "--n", "6"});
  CHECK(p.at("total") == 18);
  CHECK(p.at("degrees").at(2).at("elements").at(0).at("word") == json::parse("[[3,4],[1,2]]"));
  CHECK(p.at("degrees").at(2).at("elements").at(0).at("matching") == json::parse("[[1,2],[3,4]]"));
  CHECK(run({"basis", "--n", "3"}).code == kExitUsage);
  CHECK(run({"basis", "--n", "21"}).code == kExitUsage);
  CHECK(run({"basis", "--n", "5", "--format", "csv"}).out.rfind("degree,word,matching\n", 0) == 0);
}

TEST_CASE("hilbert and dim") {
  CHECK(payload({"hilbert", "--n", "6"}).at("hilbert") == json::array({1, 6, 9, 2}));
  CHECK(payload({"hilbert", "--n", "6"}).at("cross_check").at("agrees") == true);
  CHECK(payload({"dim", "--n", "5"}).at("dimension") == 11);
  CHECK(payload({"dim", "--n", "4"}).at("dimension") == 7);
  CHECK(run({"dim", "--n", "5"}).out == "dim = 11\n");
  CHECK(run({"hilbert", "--n", "2"}).code == kExitUsage);

  // Beyond the cap the series is still printed, without the enumeration.
  const json big = payload({"hilbert", "--n", "40"});
  CHECK(big.at("cross_check").at("performed") == false);
  CHECK(big.at("dimension") == 228826127);

  // Values beyond 64 bits are written as strings.
  CHECK(payload({"dim", "--n", "100"}).at("dimension") == lucas_number(100).str());
}

TEST_CASE("matchings") {
  const json p = payload({"matchings", "--n", "5"});
  CHECK(p.at("count") == 11);
  CHECK(p.at("by_size") == json::array({1, 5, 5}));
  CHECK(p.at("agrees") == true);
  CHECK(run({"matchings", "--n", "17"}).code == kExitUsage);
}

TEST_CASE("verify-groebner") {
  const json p = payload({"verify-groebner", "--n", "5"});
  CHECK(p.at("passed") == true);
  CHECK(p.at("max_degree") == 5);
  CHECK(p.at("nonzero_s_polynomials") == 0);
  CHECK(p.at("overlaps_by_degree").size() > 0);
  CHECK(run({"verify-groebner", "--n", "5"}).out.rfind("PASS", 0) == 0);
  CHECK(payload({"verify-groebner", "--n", "8", "--max-degree", "7"}).at("passed") == true);
  CHECK(run({"verify-groebner", "--n", "3"}).code == kExitUsage);
  CHECK(run({"verify-groebner", "--n", "5", "--max-degree", "2"}).code == kExitUsage);
  CHECK(payload({"verify-groebner", "--n", "6", "--seed", "42"}).at("seed") == 42);
}

TEST_CASE("character") {
  const json s5 = payload({"character", "--n", "5", "--element", "s"});
  CHECK(s5.at("trace") == json::array({1, -1, 1}));
  CHECK(s5.at("closed_form").at("agrees") == true);
  CHECK(payload({"character", "--n", "6", "--element", "s*r"}).at("trace") == json::array({1, 0, 1}));
  CHECK(payload({"character", "--n", "6", "--element", "r^3"}).at("trace") == json::array({1, 0, 3}));
  CHECK(payload({"character", "--n", "6", "--element", "e"}).at("closed_form").at("formula") == "q_lucas");
  CHECK(payload({"character", "--n", "6", "--element", "s*r^2"}).at("element") == "r^4*s");
  CHECK(payload({"character", "--n", "6", "--element", "r^2*s"}).at("closed_form").at("formula") == "reflection_s");

  const json r4 = payload({"character", "--n", "6", "--element", "r^4"});
  CHECK(r4.at("trace") == json::array({1, 0, 0, 2}));
  CHECK(r4.at("closed_form").at("agrees") == false);

  const json all = payload({"character", "--n", "6", "--element", "all"});
  CHECK(all.at("classes").size() == 6);
  std::size_t total = 0;
  for (const auto& c : all.at("classes")) total += c.at("size").get<std::size_t>();
  CHECK(total == 12);

  for (const char* bad : {"bogus", "r^", "r^x", "s*", "t", "r^-1"}) {
    CHECK(run({"character", "--n", "6", "--element", bad}).code == kExitUsage);
  }
  CHECK(run({"character", "--n", "6"}).code == kExitUsage);
}

TEST_CASE("decompose") {
  const json p6 = payload({"decompose", "--n", "6"});
  const auto& m = p6.at("multiplicities");
  CHECK(m.at(0).at("label") == "1^6");
  CHECK(m.at(0).at("multiplicity") == json::array({1, 0, 2}));
  CHECK(m.at(4).at("label") == "6");
  CHECK(m.at(4).at("multiplicity") == json::array({0, 1, 1}));
  CHECK(p6.at("q1_totals") == json::array({3, 2, 1, 2, 2, 3}));
  CHECK(p6.at("dimension_check").at("agrees") == true);
  CHECK(p6.at("closed_form_agrees") == true);

  CHECK(payload({"decompose", "--n", "5"}).at("q1_totals") == json::array({2, 1, 2, 2}));
  for (const auto& entry : payload({"decompose", "--n", "7"}).at("multiplicities")) {
    for (const auto& c : entry.at("multiplicity")) CHECK(c.get<long>() >= 0);
  }
  // The closed-form inner product inherits the rotation discrepancy at r^4.
  CHECK(payload({"decompose", "--n", "8"}).at("closed_form_agrees") == false);
}

TEST_CASE("reduce") {
  CHECK(run({"reduce", "--n", "5", "x12*x34"}).out == "+x34*x12\n");
  CHECK(run({"reduce", "--n", "5", "x15*x34*x12"}).out == "0\n");
  CHECK(run({"reduce", "--n", "6", "x13*x12"}).code == kExitUsage);
  CHECK(run({"reduce", "--n", "5", "--", "-x12*x34"}).out == "-x34*x12\n");
  CHECK(run({"reduce", "--n", "5", " x23 * x15 "}).out == "+x15*x23\n");
  CHECK(run({"reduce", "--n", "12", "x{1,12}*x{10,11}"}).out == "+x{1,12}*x{10,11}\n");
  const json p = payload({"reduce", "--n", "5", "x34*x15"});
  CHECK(p.at("normal_form").at(0).at("word") == json::parse("[[1,5],[3,4]]"));
  CHECK(p.at("normal_form").at(0).at("coefficient") == 1);
  CHECK(p.at("is_zero") == false);
}

TEST_CASE("word parser") {
  CycleContext ctx(12);
  CHECK(parse_word("x12*x23", ctx) == Poly(Word{ctx.edge(1, 2), ctx.edge(2, 3)}));
  CHECK(parse_word("-x{1,12}", ctx) == Poly(Word{ctx.closing_edge()}, -1));
  CHECK(parse_word("1", ctx) == Poly::one());
  for (const char* bad : {"", "x", "x1", "x123", "x12*", "*x12", "x12x23", "y12", "x21", "x{1,12", "x{10,12}",
                          "x13", "x{1,13}"}) {
    CHECK_THROWS_AS(parse_word(bad, ctx), InvalidArgument);
  }
}

TEST_CASE("stability") {
  const json p = payload({"stability", "--n", "7"});
  CHECK(p.at("stable") == true);
  CHECK(p.at("group_order") == 14);
  CHECK(p.at("basis_images_checked") == 14 * 29);
}

TEST_CASE("usage handling and envelope") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"basis", "--help"}).code == 0);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate", "--n", "5"}).code == kExitUsage);
  CHECK(run({"basis"}).code == kExitUsage);
  CHECK(run({"basis", "--n", "five"}).code == kExitUsage);
  CHECK(run({"basis", "--n", "5", "--format", "xml"}).code == kExitUsage);

  const Run r = run({"dim", "--n", "6", "--format", "json"});
  const json env = r.parsed();
  CHECK(env.at("command") == "dim");
  CHECK(env.at("n") == 6);
  CHECK(env.at("meta").at("version") == kSchemaVersion);
  CHECK(env.at("meta").at("elapsed_ms").is_number_integer());
}

TEST_CASE("json output is deterministic") {
  for (const char* cmd : {"basis", "hilbert", "decompose", "verify-groebner", "stability"}) {
    const Run a = run({cmd, "--n", "7", "--format", "json", "--no-timing"});
    const Run b = run({cmd, "--n", "7", "--format", "json", "--no-timing"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.parsed().at("meta").at("elapsed_ms") == 0);
    // The payload never carries timing, so it matches even without the flag.
    CHECK(run({cmd, "--n", "7", "--format", "json"}).parsed().at("payload") == a.parsed().at("payload"));
  }
}

TEST_CASE("diagnostics are gated by CYCLEFK_LOG") {
  ::unsetenv("CYCLEFK_LOG");
  CHECK(run({"dim", "--n", "5"}).err.empty());
  ::setenv("CYCLEFK_LOG", "1", 1);
  CHECK(run({"dim", "--n", "5"}).err.find("cyclefk: running dim") != std::string::npos);
  ::setenv("CYCLEFK_LOG", "0", 1);
  CHECK(run({"dim", "--n", "5"}).err.empty());
  ::unsetenv("CYCLEFK_LOG");
}
