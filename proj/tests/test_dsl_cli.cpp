#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "noethera/cli.hpp"
#include "noethera/dsl.hpp"

using namespace noethera;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kData = NOETHERA_DATA_DIR;

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("noethera-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::map<std::string, std::string> read_tree(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    out[e.path().filename().string()] = ss.str();
  }
  return out;
}

cli::CommandOutcome run(const std::string& verb, const std::string& ring, std::optional<std::string> gens = {}) {
  cli::CommandOptions opts;
  opts.base_dir = kData;
  opts.gens = std::move(gens);
  return cli::run_command(verb, ring, opts);
}

}  // namespace

TEST_CASE("parse examples") {
  auto z12 = dsl::parse("Z/12");
  CHECK(z12 == dsl::RingExpr{dsl::ZModExpr{12}});

  auto p = dsl::parse("product(Z/8, Z[sqrt(-5)])");
  auto* prod = std::get_if<dsl::ProductExpr>(&p.node);
  REQUIRE(prod);
  REQUIRE(prod->children.size() == 2);
  CHECK(prod->children[0] == dsl::RingExpr{dsl::ZModExpr{8}});
  CHECK(prod->children[1] == dsl::RingExpr{dsl::QuadExpr{-5, true}});

  CHECK(dsl::parse("Z[sqrt(-3)]") == dsl::RingExpr{dsl::QuadExpr{-3, false}});
  CHECK(dsl::parse("O(-3)") == dsl::RingExpr{dsl::QuadExpr{-3, true}});
  CHECK(dsl::parse("  GF( 2 , x^2 + x + 1 ) ") == dsl::RingExpr{dsl::GFExpr{2, {{1, 1, 1}}}});

  // Z/0 parses; construction rejects it.
  const auto z0 = dsl::parse("Z/0");
  CHECK_THROWS_WITH_AS(dsl::build(z0), doctest::Contains("empty modulus"), InputError);
}

TEST_CASE("syntax errors carry positions") {
  try {
    dsl::parse("product(Z/8,\n  Z[sqrt(-5)");
    FAIL("expected a syntax error");
  } catch (const dsl::SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 13);
    CHECK(std::string(e.what()).starts_with("line 2, column 13: "));
  }
  for (const char* bad : {"", "Z/", "Z/12 Z/3", "product()", "quot(Z/4)", "GF(2 x)", "R/5", "poly(Z/4", "Z[sqrt(x)]"})
    CHECK_THROWS_AS(dsl::parse(bad), dsl::SyntaxError);
  CHECK_THROWS_AS(dsl::parse_elements("(1, "), dsl::SyntaxError);
}

TEST_CASE("printing") {
  CHECK(dsl::print(dsl::parse("quot( product(Z/4,Z/4) ; (2,2) )")) == "quot(product(Z/4, Z/4); (2, 2))");
  CHECK(dsl::print(dsl::parse("Z[sqrt(-7)]")) == "Z[sqrt(-7)]");
  CHECK(dsl::print(dsl::parse("O(-7)")) == "O(-7)");
  CHECK(dsl::print(dsl::parse("O(-5)")) == "Z[sqrt(-5)]");
  CHECK(dsl::print(dsl::parse("poly(GF(3, x^2+1))")) == "poly(GF(3, x^2+1))");
  const auto elems = dsl::parse_elements("x, [0,1,0], (2, x+1)");
  REQUIRE(elems.size() == 3);
  CHECK(dsl::print(elems[0]) == "x");
  CHECK(dsl::print(elems[1]) == "[0,1,0]");
  CHECK(dsl::print(elems[2]) == "(2, x+1)");
}

TEST_CASE("parse after print is the identity on random expressions") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    const auto e = dsl::random_expr(rng);
    const auto text = dsl::print(e);
    INFO(text);
    const auto back = dsl::parse(text);
    CHECK(back == e);
    CHECK(dsl::print(back) == text);
  }
}

TEST_CASE("building rings") {
  const auto z12 = dsl::build(dsl::parse("Z/12"));
  REQUIRE(z12.as_finite());
  CHECK(z12.as_finite()->size() == 12);
  CHECK(z12.describe() == "Z/12");

  const auto mixed = dsl::build(dsl::parse("product(Z/8, Z[sqrt(-5)])"));
  REQUIRE(mixed.as_product());
  CHECK(mixed.as_product()->components.size() == 2);

  const auto fin = dsl::build(dsl::parse("product(Z/4, Z/3)"));
  REQUIRE(fin.as_finite());
  CHECK(fin.as_finite()->size() == 12);

  const auto q = dsl::build(dsl::parse("quot(Z/12; 4)"));
  CHECK(q.as_finite()->size() == 4);

  const auto m2 = dsl::build(dsl::parse("quot(product(Z/4, Z/4); (2, 2))"));
  CHECK(m2.as_finite()->size() == 4);  // (1,0)(2,2) = (2,0), so the ideal is {0,2}^2

  const auto alg = dsl::build(dsl::parse("algebra(trunc_n3.sc)"), {{}, kData});
  CHECK(alg.as_finite()->size() == 16);

  const auto poly = dsl::build(dsl::parse("poly(Z/4)"));
  REQUIRE(poly.as_poly());

  CHECK_THROWS_AS(dsl::build(dsl::parse("GF(2, x^2+1)")), InputError);
  CHECK_THROWS_AS(dsl::build(dsl::parse("algebra(missing.sc)"), {{}, kData}), InputError);
  CHECK_THROWS_AS(dsl::build(dsl::parse("quot(Z[sqrt(-5)]; 2)")), InputError);
  CHECK_THROWS_AS(dsl::build(dsl::parse("poly(Z[sqrt(-5)])")), InputError);
  CHECK_THROWS_AS(dsl::build(dsl::parse("Z[sqrt(-4)]")), InputError);
}

TEST_CASE("element literals resolve through the presentation") {
  const auto gf = dsl::build(dsl::parse("GF(2, x^2+x+1)"));
  const auto& f = *gf.as_finite();
  const auto x = dsl::resolve_element(f, dsl::parse_elements("x")[0]);
  const auto x2 = dsl::resolve_element(f, dsl::parse_elements("x^2")[0]);
  const auto x1 = dsl::resolve_element(f, dsl::parse_elements("x+1")[0]);
  CHECK(f.mul(x, x) == x2);
  CHECK(x2 == x1);

  const auto p = dsl::build(dsl::parse("product(Z/4, Z/3)"));
  const auto& r = *p.as_finite();
  const auto e = dsl::resolve_element(r, dsl::parse_elements("(3, 2)")[0]);
  CHECK(r.label(e) == "(3,2)");
  CHECK(dsl::resolve_element(r, dsl::parse_elements("5")[0]) == dsl::resolve_element(r, dsl::parse_elements("(1, 2)")[0]));
  CHECK_THROWS_AS(dsl::resolve_element(r, dsl::parse_elements("(1, 2, 3)")[0]), InputError);

  const auto alg = dsl::build(dsl::parse("algebra(trunc_n3.sc)"), {{}, kData});
  const auto v = dsl::resolve_element(*alg.as_finite(), dsl::parse_elements("[0,1,0,0]")[0]);
  CHECK(alg.as_finite()->label(v) == "[0,1,0,0]");
  CHECK_THROWS_AS(dsl::resolve_element(*alg.as_finite(), dsl::parse_elements("[0,1]")[0]), InputError);
}

TEST_CASE("commands") {
  SUBCASE("rank") {
    const auto o = run("rank", "Z/12");
    CHECK(o.code == ExitCode::Success);
    CHECK(o.report["rk"] == 1);
    CHECK(o.report["lrk"] == 1);
    CHECK(o.text.find("rk: 1") != std::string::npos);
  }
  SUBCASE("classify") {
    const auto o = run("classify", "Z[sqrt(-5)]");
    CHECK(o.code == ExitCode::Success);
    CHECK(o.report["verdict"] == "not-of-local-rank");
  }
  SUBCASE("ideals and rank of an algebra") {
    const auto i = run("ideals", "algebra(trunc_n3.sc)");
    CHECK(i.code == ExitCode::Success);
    CHECK(i.report["count"] == 9);
    const auto r = run("rank", "algebra(trunc_n3.sc)");
    CHECK(r.report["rk"] == 2);
    CHECK(r.report["lattice_size"] == 9);
  }
  SUBCASE("mu") {
    const auto o = run("mu", "algebra(trunc_n3.sc)", "[0,1,0,0], [0,0,0,1]");
    CHECK(o.code == ExitCode::Success);
    CHECK(o.report["mu"] == 2);
    CHECK(o.report["bruteforce_agrees"] == true);
    const auto q = run("mu", "Z[sqrt(-5)]", "2, [1,1]");
    CHECK(q.report["mu"] == 2);
    CHECK(q.report["norm"] == 2);
    CHECK(run("mu", "Z/12").code == ExitCode::InputError);
  }
  SUBCASE("spectrum, decompose, hilbert, poly-report, parse-check") {
    const auto s = run("spectrum", "Z/12");
    CHECK(s.report["maximal_ideals"].size() == 2);
    const auto d = run("decompose", "Z/12");
    CHECK(d.report["idempotents"][0]["label"] == "4");
    CHECK(d.report["idempotents"][1]["label"] == "9");
    const auto h = run("hilbert", "algebra(trunc_n3.sc)");
    CHECK(h.report["factors"][0]["values"][1] == 2);
    const auto p = run("poly-report", "poly(Z/4)");
    CHECK(p.report["length"] == 2);
    const auto c = run("parse-check", "product( Z/8 ,Z[sqrt(-5)] )");
    CHECK(c.report["canonical"] == "product(Z/8, Z[sqrt(-5)])");
  }
}

TEST_CASE("exit codes") {
  CHECK(run("rank", "Z/0").code == ExitCode::InputError);
  CHECK(run("rank", "Z/").code == ExitCode::InputError);
  CHECK(run("ideals", "Z[sqrt(-5)]").code == ExitCode::InputError);
  CHECK(run("frobnicate", "Z/4").code == ExitCode::InputError);
  CHECK(run("rank", "algebra(nope.sc)").code == ExitCode::InputError);

  cli::CommandOptions tight;
  tight.engine.lattice.max_ideals = 3;
  const auto b = cli::run_command("rank", "product(Z/2, Z/2, Z/2)", tight);
  CHECK(b.code == ExitCode::BudgetExhausted);
  CHECK(b.report["partial"] == true);

  CHECK(static_cast<int>(ExitCode::InvariantBreach) == 1);
  CHECK(static_cast<int>(ExitCode::BudgetExhausted) == 2);
  CHECK(static_cast<int>(ExitCode::InputError) == 3);
  using cli::worse;
  CHECK(worse(ExitCode::Success, ExitCode::InputError) == ExitCode::InputError);
  CHECK(worse(ExitCode::InputError, ExitCode::BudgetExhausted) == ExitCode::BudgetExhausted);
  CHECK(worse(ExitCode::BudgetExhausted, ExitCode::InvariantBreach) == ExitCode::InvariantBreach);
  CHECK(worse(ExitCode::InvariantBreach, ExitCode::Success) == ExitCode::InvariantBreach);
}

TEST_CASE("manifest validation") {
  auto parse = [](const json& j) { return cli::parse_manifest(j, "."); };
  const json good = {{"output_dir", "out"}, {"entries", {{{"name", "a"}, {"ring", "Z/4"}, {"commands", {"rank"}}}}}};
  CHECK(parse(good).entries.size() == 1);
  CHECK(parse(good).output_dir == fs::path(".") / "out");

  json dup = good;
  dup["entries"].push_back(good["entries"][0]);
  CHECK_THROWS_WITH_AS(parse(dup), doctest::Contains("duplicate"), InputError);
  json neg = good;
  neg["budgets"] = {{"ideals", 0}};
  CHECK_THROWS_AS(parse(neg), InputError);
  json neg_time = good;
  neg_time["budgets"] = {{"seconds", -1}};
  CHECK_THROWS_AS(parse(neg_time), InputError);
  json unknown = good;
  unknown["entries"][0]["commands"] = {"explode"};
  CHECK_THROWS_AS(parse(unknown), InputError);
  json slash = good;
  slash["entries"][0]["name"] = "a/b";
  CHECK_THROWS_AS(parse(slash), InputError);
  CHECK_THROWS_AS(parse(json::array()), InputError);
}

TEST_CASE("corpus runs") {
  const auto dir = scratch_dir("corpus");
  const json manifest = {
      {"output_dir", "out"},
      {"budgets", {{"ideals", 100000}}},
      {"entries",
       {{{"name", "z12"}, {"ring", "Z/12"}, {"commands", {"rank"}}},
        {{"name", "zsqrt-5"}, {"ring", "Z[sqrt(-5)]"}, {"commands", {"classify"}}},
        {{"name", "trunc3"}, {"ring", "algebra(" + (kData / "trunc_n3.sc").string() + ")"}, {"commands", {"ideals", "rank"}}},
        {{"name", "bad"}, {"ring", "Z/0"}, {"commands", {"rank"}}}}}};
  std::ofstream(dir / "m.json") << manifest.dump(2);
  const auto m = cli::load_manifest(dir / "m.json");
  const auto outcome = cli::run_corpus(m, 2, {});
  CHECK(outcome.code == ExitCode::InputError);
  CHECK(outcome.reports == 5);

  const auto files = read_tree(dir / "out");
  CHECK(files.size() == 6);
  const auto z12 = json::parse(files.at("z12.rank.json"));
  CHECK(z12["status"] == "ok");
  CHECK(z12["report"]["rk"] == 1);
  CHECK(z12["report"]["lrk"] == 1);
  CHECK(json::parse(files.at("zsqrt-5.classify.json"))["report"]["verdict"] == "not-of-local-rank");
  const auto t = json::parse(files.at("trunc3.rank.json"));
  CHECK(t["report"]["rk"] == 2);
  CHECK(t["report"]["lattice_size"] == 9);
  const auto bad = json::parse(files.at("bad.rank.json"));
  CHECK(bad["status"] == "input-error");
  CHECK(bad["error"].get<std::string>().find("empty modulus") != std::string::npos);
  for (const auto& [name, bytes] : files) CHECK(bytes.back() == '\n');
  CHECK(files.at("summary.txt").find("z12\trank\tok\t1\t1\tof-local-rank") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("corpus output does not depend on the worker count") {
  const auto dir = scratch_dir("determinism");
  auto m = cli::load_manifest(kData / "sample_manifest.json");
  m.budget_seconds = 0;
  std::map<std::string, std::string> first;
  for (unsigned threads : {1u, 8u}) {
    m.output_dir = dir / ("t" + std::to_string(threads));
    const auto outcome = cli::run_corpus(m, threads, {});
    CHECK(outcome.code == ExitCode::Success);
    const auto files = read_tree(m.output_dir);
    if (first.empty())
      first = files;
    else
      CHECK(files == first);
  }
  fs::remove_all(dir);
}

TEST_CASE("atomic writes leave no temporary files") {
  const auto dir = scratch_dir("atomic");
  cli::write_atomic(dir / "sub" / "x.txt", "hello\n");
  cli::write_atomic(dir / "sub" / "x.txt", "again\n");
  const auto files = read_tree(dir / "sub");
  CHECK(files.size() == 1);
  CHECK(files.at("x.txt") == "again\n");
  fs::remove_all(dir);
}
