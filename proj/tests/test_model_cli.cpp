#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "hopfcat/model.hpp"

using namespace hopfcat;

namespace {

std::string fixture(const std::string& name) {
  return std::string(HOPFCAT_FIXTURE_DIR) + "/" + name;
}

struct RunOutput {
  int exit_code = -1;
  std::string out;
};

/* Run the installed CLI binary; stderr is folded into stdout so error text
   is observable too. */
RunOutput run_cli(const std::string& args) {
  RunOutput r;
  std::string cmd = std::string(HOPFCAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string expect_error(const std::string& text) {
  try {
    parse_model(text, "inline", 4);
  } catch (const ModelError& e) {
    return e.what();
  }
  FAIL("expected a ModelError");
  return {};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("parser errors carry file and line") {
  CHECK(expect_error("[hopf H]\nkind = group\ngroup = nope\n") ==
        "inline:1: unknown group 'nope'");
  CHECK(expect_error("[morphism f]\nsource = A\ntarget = A\n") ==
        "inline:1: unknown hopf object 'A'");
  CHECK(expect_error("[morphism f]\nsource = A\n") ==
        "inline:1: [morphism f] is missing 'target = ...'");
  CHECK(expect_error("[group G]\nelements = e g\n") ==
        "inline:1: [group G] is missing 'table = ...'");
  CHECK(expect_error("x = 1\n") ==
        "inline:1: only 'degree = ...' may appear before the first section");
  CHECK(expect_error("[widget W]\nx = 1\n") == "inline:1: unknown section kind 'widget'");
  CHECK(expect_error("[lie L]\nletters = x\n[lie L]\nletters = y\n") ==
        "inline:3: name 'L' is already defined");

  // canonical diagram rows must not name outer maps
  const char* text =
      "[group C2]\nelements = e g\ntable = e g / g e\n"
      "[hopf K]\nkind = group\ngroup = C2\n"
      "[morphism id]\nsource = K\ntarget = K\ng = g\n"
      "[diagram D]\ntop = K\nbottom = K\nmiddle = id\nleft = id\n";
  std::string msg = expect_error(text);
  CHECK(msg.find("canonical rows derive the left and right maps") != std::string::npos);
}

TEST_CASE("element expressions evaluate against the presentation") {
  Model m = load_model(fixture("h2.model"), 4);
  const auto& h = m.hopf("H2");

  Element e = eval_element(h, "2*x^2*g - 1/3*x + 1");
  Element want = h->one();
  want.add_scaled(*h->find_basis(BasisKey{{1}, 0}), rat(-1, 3));
  want.add_scaled(*h->find_basis(BasisKey{{2}, 1}), rat(2));
  CHECK(e == want);

  CHECK(eval_element(h, "0") == h->zero());
  CHECK(eval_element(h, "g*g") == h->one());
  CHECK_THROWS_AS(eval_element(h, "z + 1"), ValidationError);
}

TEST_CASE("degree defaulting and override") {
  Model m = load_model(fixture("h2.model"), 9);
  CHECK(m.degree == 4);  // the file pins its own degree

  Model inl = parse_model("[lie L]\nletters = x\n[hopf U]\nkind = enveloping\nlie = L\n",
                          "inline", 3);
  CHECK(inl.degree == 3);
  CHECK(inl.hopf("U")->degree_bound() == 3);
  CHECK(inl.hopf("U")->dim() == 4);

  CHECK_THROWS_AS(load_model(fixture("no_such.model"), 4), ModelError);
  CHECK_THROWS_AS(m.hopf("nope"), ModelError);
  CHECK_THROWS_AS(m.morphism("nope"), ModelError);
  CHECK_THROWS_AS(m.diagram("nope"), ModelError);
}

TEST_CASE("cli exit codes separate pass, fail, and misuse") {
  CHECK(run_cli("check-axioms " + fixture("h2.model") + " H2").exit_code == 0);
  CHECK(run_cli("check-axioms " + fixture("badhopf.model") + " badC3").exit_code == 1);
  CHECK(run_cli("verify-ses " + fixture("h2.model") + " iH pH bad_s").exit_code == 1);
  CHECK(run_cli("verify-ses " + fixture("h2.model") + " iH pH s_triv").exit_code == 1);

  RunOutput unknown = run_cli("check-axioms " + fixture("h2.model") + " NO");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.out.find("unknown hopf object") != std::string::npos);
  CHECK(run_cli("check-axioms /no/such/file.model H2").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli commands cover the pipeline end to end") {
  const std::string h2 = fixture("h2.model");
  CHECK(run_cli("decompose " + h2 + " H2").exit_code == 0);
  CHECK(run_cli("torsion " + h2 + " H2").exit_code == 0);
  CHECK(run_cli("factorize " + h2 + " pH").exit_code == 0);
  CHECK(run_cli("zero-hom " + h2 + " Ux KC2").exit_code == 0);
  CHECK(run_cli("verify-diagram " + h2 + " self --lemma five").exit_code == 0);
  CHECK(run_cli("verify-diagram " + h2 + " self --lemma surjectivity").exit_code == 0);
  CHECK(run_cli("verify-diagram " + h2 + " canon --lemma five").exit_code == 0);
  CHECK(run_cli("verify-diagram " + h2 + " crushed --lemma five").exit_code == 1);

  RunOutput fac = run_cli("factorize " + fixture("aff2.model") + " q");
  CHECK(fac.exit_code == 0);
  CHECK(fac.out.find("\"ideal_dims_by_level\": [\n      0,\n      1,\n      3,\n      6,\n      10\n    ]") != std::string::npos);

  RunOutput text = run_cli("torsion " + fixture("c4c2.model") + " KC4 --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("verdict: PASS") != std::string::npos);
}

TEST_CASE("consecutive runs are byte-identical") {
  const std::string cmd = "torsion " + fixture("h2.model") + " H2";
  RunOutput a = run_cli(cmd);
  RunOutput b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  RunOutput serial = run_cli(cmd + " --serial");
  CHECK(serial.out == a.out);
}

TEST_SUITE_END();
