// Tests for the verification-report layer and the command-line binary:
// check-name catalogue, selection parsing, report construction on known
// solutions and non-solutions, byte-exact JSON serialisation against a stored
// reference, and subprocess runs of the installed binary covering the
// documented exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "hh/checks.hpp"
#include "hh/families.hpp"
#include "hh/parser.hpp"

namespace {

const std::string kBinary = HHVERIFY_BINARY;
const std::string kGoldenDir = GOLDEN_DIR;

// Runs a shell command and returns its exit status (not the raw wait value).
int runCommand(const std::string& cmd) {
  const int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  REQUIRE(WIFEXITED(raw));
  return WEXITSTATUS(raw);
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

hh::PotentialPair monomialPair() {
  return {hh::parseExpr("a*x^4"), hh::parseExpr("b*y^3")};
}

}  // namespace

TEST_CASE("check name catalogue and selection parsing") {
  const auto all = hh::allCheckNames();
  const std::vector<std::string> expected = {
      "pde",       "special-case", "lax",          "eq-system", "nijenhuis",
      "lee-structure", "maxwell",  "gauduchon",    "structure-eq", "curvature",
      "invariant", "hyper-kahler", "first-integral", "det",     "petrov"};
  CHECK(all == expected);

  const auto def = hh::defaultCheckSelection();
  CHECK(def.size() == all.size() - 1);
  for (const auto& name : def) CHECK(name != "petrov");

  CHECK(hh::parseCheckSelection("all") == all);
  CHECK(hh::parseCheckSelection("default") == def);
  CHECK(hh::parseCheckSelection("") == def);
  CHECK(hh::parseCheckSelection("pde,det") ==
        std::vector<std::string>{"pde", "det"});
  CHECK(hh::parseCheckSelection(" lax , invariant ") ==
        std::vector<std::string>{"lax", "invariant"});
  CHECK(hh::parseCheckSelection("pde,,det") ==
        std::vector<std::string>{"pde", "det"});
  CHECK_THROWS_AS(hh::parseCheckSelection("pde,weyl"), std::invalid_argument);
  CHECK_THROWS_AS(hh::parseCheckSelection(","), std::invalid_argument);
}

TEST_CASE("full verification of a closed-form solution passes in order") {
  const auto report =
      hh::runChecks(monomialPair(), hh::parseCheckSelection("all"), {});
  CHECK(report.allPassed());
  const auto all = hh::allCheckNames();
  REQUIRE(report.entries.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    CHECK(report.entries[i].name == all[i]);
  const auto* inv = report.find("invariant");
  REQUIRE(inv != nullptr);
  CHECK(inv->residual == "72*x*a*b");
}

TEST_CASE("a non-solution fails the dynamical checks but not the kinematic ones") {
  const hh::PotentialPair bad{hh::parseExpr("-x*y"), hh::parseExpr("0")};
  const auto report =
      hh::runChecks(bad, hh::defaultCheckSelection(), {});
  CHECK_FALSE(report.allPassed());
  REQUIRE(report.find("pde") != nullptr);
  CHECK(report.find("pde")->status == hh::CheckStatus::Fail);
  REQUIRE(report.find("lax") != nullptr);
  CHECK(report.find("lax")->status == hh::CheckStatus::Fail);
  // The determinant normalisation holds for any potential pair.
  REQUIRE(report.find("det") != nullptr);
  CHECK(report.find("det")->status == hh::CheckStatus::Pass);
  // The torsion one-form is null and divergence-free off-shell as well.
  REQUIRE(report.find("gauduchon") != nullptr);
  CHECK(report.find("gauduchon")->status == hh::CheckStatus::Pass);
}

TEST_CASE("single-check selection produces a single entry") {
  const auto report = hh::runChecks(monomialPair(), {"det"}, {});
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].name == "det");
  CHECK(report.allPassed());
}

TEST_CASE("opt-in algebraic classification reports the degenerate type") {
  const hh::FamilySpec spec{hh::FamilyTag::EguchiHanson, 0, 0, 0, 0,
                            hh::RationalExpr(1), hh::RationalExpr(1)};
  const auto report = hh::runChecks(hh::makeFamily(spec), {"petrov"}, {});
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].status == hh::CheckStatus::Pass);
  CHECK(report.entries[0].note.find("type D") != std::string::npos);
}

TEST_CASE("user expression validation rejects reserved symbols") {
  CHECK_NOTHROW(hh::validateUserExpression(hh::parseExpr("a*x^2+b/w"),
                                           "potential", true));
  CHECK_THROWS_AS(hh::validateUserExpression(hh::parseExpr("lambda*x"),
                                             "potential", true),
                  std::invalid_argument);
  CHECK_THROWS_AS(hh::validateUserExpression(hh::parseExpr("eps+1"),
                                             "potential", true),
                  std::invalid_argument);
  CHECK_THROWS_AS(hh::validateUserExpression(hh::parseExpr("t^2"),
                                             "potential", true),
                  std::invalid_argument);
  // Scale parameters must not depend on coordinates.
  CHECK_NOTHROW(hh::validateUserExpression(hh::parseExpr("3*a"), "scale", false));
  CHECK_THROWS_AS(hh::validateUserExpression(hh::parseExpr("x"), "scale", false),
                  std::invalid_argument);
}

TEST_CASE("report serialisation matches the stored reference byte for byte") {
  const auto p = monomialPair();
  hh::CheckOptions options;
  options.seed = 7;
  options.points = 5;
  const auto report = hh::runChecks(p, hh::parseCheckSelection("all"), options);
  const std::string produced = hh::reportToJson(report, p, true) + "\n";
  const std::string stored = readFile(kGoldenDir + "/report_monomial.json");
  CHECK(produced == stored);
}

TEST_CASE("text rendering summarises passes and failures") {
  const hh::PotentialPair bad{hh::parseExpr("-x*y"), hh::parseExpr("0")};
  const auto report = hh::runChecks(bad, {"pde", "det"}, {});
  const std::string text = hh::reportToText(report);
  CHECK(text.find("[FAIL] pde") != std::string::npos);
  CHECK(text.find("[pass] det") != std::string::npos);
  CHECK(text.find("residual:") != std::string::npos);
  CHECK(text.find("1/2 checks passed") != std::string::npos);
}

TEST_CASE("command line: verification of a known solution exits cleanly") {
  CHECK(runCommand(kBinary +
                   " check --theta0 \"x^2\" --theta1 \"0\" --checks pde,lax"
                   " > /dev/null") == 0);
  // Same invocation that produced the stored reference file.
  const std::string out = "/tmp/hhcli_golden.json";
  CHECK(runCommand(kBinary +
                   " check --theta0 \"a*x^4\" --theta1 \"b*y^3\" --checks all"
                   " --seed 7 > " + out) == 0);
  CHECK(readFile(out) == readFile(kGoldenDir + "/report_monomial.json"));
}

TEST_CASE("command line: failure and usage exit codes") {
  CHECK(runCommand(kBinary +
                   " check --theta0 \"-x*y\" --theta1 \"0\" > /dev/null") == 1);
  CHECK(runCommand(kBinary +
                   " check --theta0 \"x+*2\" --theta1 \"0\" 2> /dev/null") == 2);
  CHECK(runCommand(kBinary +
                   " check --theta0 \"x^2\" --theta1 \"0\" --checks nosuch"
                   " 2> /dev/null") == 2);
  CHECK(runCommand(kBinary +
                   " check --theta0 \"lambda*x\" --theta1 \"0\" 2> /dev/null") ==
        2);
  CHECK(runCommand(kBinary + " nosuchcommand 2> /dev/null") == 2);
  CHECK(runCommand(kBinary + " --help > /dev/null") == 0);
}

TEST_CASE("command line: file input and report output round trip") {
  const std::string in = "/tmp/hhcli_pair.json";
  const std::string out = "/tmp/hhcli_report.json";
  writeFile(in, "{\"theta0\": \"a*x^4\", \"theta1\": \"b*y^3\"}\n");
  CHECK(runCommand(kBinary + " check --file " + in + " --out " + out +
                   " > /dev/null") == 0);
  const auto doc = nlohmann::json::parse(readFile(out));
  CHECK(doc.at("tool") == "hhverify");
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("all_passed") == true);
  CHECK(doc.at("potentials").at("theta0") == "x^4*a");
  // Malformed document in the input file is a usage error.
  writeFile(in, "{\"theta0\": \"a*x^4\"}\n");
  CHECK(runCommand(kBinary + " check --file " + in + " 2> /dev/null") == 2);
}

TEST_CASE("command line: family subcommand checks the closed-form metric") {
  const std::string out = "/tmp/hhcli_family.json";
  CHECK(runCommand(kBinary +
                   " family --name monomial --k 3 --l 4 --checks pde,det"
                   " > " + out) == 0);
  const auto doc = nlohmann::json::parse(readFile(out));
  CHECK(doc.at("family").at("name") == "monomial");
  CHECK(doc.at("family").at("metric_display_supported") == true);
  CHECK(doc.at("family").at("metric_display_matches") == true);
  CHECK(runCommand(kBinary + " family --name nosuch 2> /dev/null") == 2);
}

TEST_CASE("command line: residue verification and classification") {
  CHECK(runCommand(kBinary +
                   " residue --k 0 --l 0 --m 0 --n 0 --a 1 --b 1 --verify"
                   " > /dev/null") == 0);
  const std::string out = "/tmp/hhcli_classify.json";
  CHECK(runCommand(kBinary +
                   " classify --theta0 \"0\" --theta1 \"0\" > " + out) == 0);
  const auto doc = nlohmann::json::parse(readFile(out));
  CHECK(doc.at("label") == "O");
  CHECK(doc.at("consistent") == true);
}
