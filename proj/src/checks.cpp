#include "hh/checks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hh/families.hpp"
#include "hh/parser.hpp"

namespace hh {

namespace {

using OrderedJson = nlohmann::ordered_json;

const char* statusName(CheckStatus s) { return s == CheckStatus::Pass ? "pass" : "fail"; }

CheckStatus statusOf(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

std::string pairString(const std::array<RationalExpr, 2>& r) {
  return "(" + r[0].str() + ", " + r[1].str() + ")";
}

std::string vectorOpString(const VectorFieldOperator& v) {
  std::string out = "(";
  for (int c = 0; c < 4; ++c) {
    if (c) out += ", ";
    out += v.coeff(c).str();
  }
  return out + ")";
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Individual checks.
// ---------------------------------------------------------------------------

CheckEntry checkPde(const PotentialPair& p) {
  const auto r = hypereqResidual(p);
  CheckEntry e;
  e.name = "pde";
  e.status = statusOf(r[0].isZero() && r[1].isZero());
  e.residual = pairString(r);
  e.note = "coupled second-order field equations for the potential pair";
  return e;
}

CheckEntry checkSpecialCase(const PotentialPair& p) {
  const auto split = specialCaseResiduals(p);
  const auto full = hypereqResidual(p);
  std::array<RationalExpr, 2> defect;
  for (int c = 0; c < 2; ++c)
    defect[static_cast<std::size_t>(c)] = split.linear[static_cast<std::size_t>(c)] +
                                          split.nonlinear[static_cast<std::size_t>(c)] -
                                          full[static_cast<std::size_t>(c)];
  const bool sums = defect[0].isZero() && defect[1].isZero();
  const bool linZero = split.linear[0].isZero() && split.linear[1].isZero();
  const bool quadZero = split.nonlinear[0].isZero() && split.nonlinear[1].isZero();
  CheckEntry e;
  e.name = "special-case";
  e.status = statusOf(sums);
  e.residual = pairString(defect);
  e.note = "linear and quadratic parts sum to the full residual; linear part zero: " +
           yesNo(linZero) + "; quadratic part zero: " + yesNo(quadZero);
  return e;
}

CheckEntry checkLax(const PotentialPair& p) {
  const VectorFieldOperator c = laxCommutator(p);
  CheckEntry e;
  e.name = "lax";
  e.status = statusOf(c.isZero());
  e.residual = vectorOpString(c);
  e.note = "commutator of the spectral-parameter operator pencil vanishes for all "
           "parameter values";
  return e;
}

CheckEntry checkEqSystem(const PotentialPair& p) {
  const EqSystem es = eqSystemResiduals(p);
  bool z1 = true, z2 = true, z3 = true;
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      z1 = z1 && es.eq1[A][B].isZero();
      z2 = z2 && es.eq2[A][B].isZero();
      z3 = z3 && es.eq3[A][B].isZero();
    }
  CheckEntry e;
  e.name = "eq-system";
  e.status = statusOf(z1 && z2 && z3);
  e.residual = (z1 && z2 && z3) ? "(0, 0, 0)" : vectorOpString(es.eq3[0][1]);
  e.note = "frame commutator system; first block zero: " + yesNo(z1) +
           "; mixed block zero: " + yesNo(z2) + "; second block zero: " + yesNo(z3);
  return e;
}

CheckEntry checkNijenhuis(const PotentialPair& p) {
  std::string nonzero;
  bool all = true;
  for (int Ap = 0; Ap < 2; ++Ap)
    for (int Bp = 0; Bp < 2; ++Bp) {
      if (!nijenhuis(p, Ap, Bp).isZero()) {
        all = false;
        if (!nonzero.empty()) nonzero += ", ";
        nonzero += "(" + std::to_string(Ap) + "," + std::to_string(Bp) + ")";
      }
    }
  CheckEntry e;
  e.name = "nijenhuis";
  e.status = statusOf(all);
  e.residual = all ? "0" : "nonzero for structures " + nonzero;
  e.note = "integrability torsion of all four endomorphism structures";
  return e;
}

CheckEntry checkLeeStructure(const PotentialPair& p) {
  const auto res = leeStructureResidual(p);
  bool all = true;
  std::string bad = "0";
  for (const auto& f : res)
    if (!f.isZero()) {
      if (all) bad = f.str();
      all = false;
    }
  CheckEntry e;
  e.name = "lee-structure";
  e.status = statusOf(all);
  e.residual = bad;
  e.note = "exterior derivative of each invariant two-form is minus the torsion "
           "one-form wedged with it";
  return e;
}

CheckEntry checkMaxwell(const MaxwellReport& m) {
  const bool ok = m.phiSymmetric && m.antiSelfDualPartZero && m.reassemblyExact;
  CheckEntry e;
  e.name = "maxwell";
  e.status = statusOf(ok);
  e.residual = ok ? "0" : "structure defect";
  e.note = "curvature of the torsion one-form: symmetric spinor part: " +
           yesNo(m.phiSymmetric) +
           "; opposite-chirality part zero: " + yesNo(m.antiSelfDualPartZero) +
           "; spinor reassembly exact: " + yesNo(m.reassemblyExact);
  return e;
}

CheckEntry checkGauduchon(const MaxwellReport& m) {
  const bool ok = m.normSquared.isZero() && m.codifferential.isZero();
  CheckEntry e;
  e.name = "gauduchon";
  e.status = statusOf(ok);
  e.residual = "(" + m.normSquared.str() + ", " + m.codifferential.str() + ")";
  e.note = "torsion one-form is null and divergence-free in this gauge";
  return e;
}

CheckEntry checkStructureEq(const PotentialPair& p) {
  const auto res = structureEquationResidual(p);
  bool all = true;
  std::string bad = "0";
  for (const auto& row : res)
    for (const auto& f : row)
      if (!f.isZero()) {
        if (all) bad = f.str();
        all = false;
      }
  CheckEntry e;
  e.name = "structure-eq";
  e.status = statusOf(all);
  e.residual = bad;
  e.note = "first structure equation of the coframe with both connection sectors";
  return e;
}

CheckEntry checkCurvature(const CurvatureDecomposition& cd) {
  const bool scalarZero = cd.scalar.isZero() && cd.scalarPrimedRoute.isZero();
  const bool primedWeylZero = cd.weylPrimed.isZero();
  const bool ricciAgree = cd.ricci == cd.ricciPrimedRoute;
  const bool ok = scalarZero && primedWeylZero && cd.extractionConsistent && ricciAgree;
  CheckEntry e;
  e.name = "curvature";
  e.status = statusOf(ok);
  e.residual = ok ? "0"
                  : "(scalar " + cd.scalar.str() + ", primed-route scalar " +
                        cd.scalarPrimedRoute.str() + ")";
  e.note = "scalar curvature zero: " + yesNo(scalarZero) +
           "; primed symmetric curvature zero: " + yesNo(primedWeylZero) +
           "; overdetermined extraction slots agree: " + yesNo(cd.extractionConsistent) +
           "; trace-free part agrees between sectors: " + yesNo(ricciAgree);
  return e;
}

CheckEntry checkInvariant(const PotentialPair& p, const CurvatureDecomposition& cd) {
  const RationalExpr route1 = weylInvariant(p);
  const auto c = weylDirectComponents(p);
  const RationalExpr route2 = RationalExpr(2) * c[0] * c[4] - RationalExpr(8) * c[1] * c[3] +
                              RationalExpr(6) * c[2] * c[2];
  (void)cd;
  CheckEntry e;
  e.name = "invariant";
  e.status = statusOf(route1 == route2);
  e.residual = route1.str();
  e.note = "quadratic curvature invariant; contraction route and component route agree: " +
           yesNo(route1 == route2);
  return e;
}

CheckEntry checkHyperKahler(const PotentialPair& p) {
  const HyperKahlerReport hk = hyperKahlerReduction(p, std::nullopt);
  CheckEntry e;
  e.name = "hyper-kahler";
  e.status = CheckStatus::Pass;  // the classification itself always completes
  e.residual = hk.verdict ? "divergence-free" : "generic";
  e.note = std::string("reduction analysis; divergence-free: ") + yesNo(hk.divergenceFree) +
           "; admits a single-potential description in this gauge: " + yesNo(hk.verdict);
  return e;
}

CheckEntry checkFirstIntegral(const PotentialPair& p) {
  const FirstIntegralReport fi = firstIntegralObstruction(p);
  const auto full = hypereqResidual(p);
  std::array<RationalExpr, 2> defect;
  for (int c = 0; c < 2; ++c)
    defect[static_cast<std::size_t>(c)] =
        fi.obstruction[static_cast<std::size_t>(c)] - full[static_cast<std::size_t>(c)];
  CheckEntry e;
  e.name = "first-integral";
  e.status = statusOf(defect[0].isZero() && defect[1].isZero());
  e.residual = pairString(defect);
  e.note = "cross-derivative obstruction of the first integrals reproduces the "
           "field-equation residual exactly";
  return e;
}

CheckEntry checkDet(const PotentialPair& p) {
  const GeometryBundle g = buildGeometry(p);
  CheckEntry e;
  e.name = "det";
  e.status = statusOf(g.metricDet == RationalExpr(1));
  e.residual = g.metricDet.str();
  e.note = "metric determinant in the coordinate volume normalisation";
  return e;
}

CheckEntry checkPetrov(const PotentialPair& p, const CheckOptions& o) {
  CheckEntry e;
  e.name = "petrov";
  try {
    const auto pts = drawSamplePoints(p, o.seed, o.points);
    const PetrovVerdict v = petrovClassify(p, pts);
    e.status = statusOf(v.consistent);
    e.residual = v.label;
    std::ostringstream os;
    os << "algebraic type " << v.label << " from " << v.pointsUsed.size()
       << " sample points; multiplicity patterns:";
    for (const auto& pat : v.patterns) {
      os << " [";
      for (std::size_t i = 0; i < pat.size(); ++i) {
        if (i) os << ",";
        os << pat[i];
      }
      os << "]";
    }
    e.note = os.str();
  } catch (const std::exception& ex) {
    e.status = CheckStatus::Fail;
    e.residual = "error";
    e.note = ex.what();
  }
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Report plumbing.
// ---------------------------------------------------------------------------

bool CheckReport::allPassed() const {
  for (const auto& e : entries)
    if (e.status != CheckStatus::Pass) return false;
  return true;
}

const CheckEntry* CheckReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

const std::vector<std::string>& allCheckNames() {
  static const std::vector<std::string> names = {
      "pde",        "special-case", "lax",          "eq-system", "nijenhuis",
      "lee-structure", "maxwell",   "gauduchon",    "structure-eq", "curvature",
      "invariant",  "hyper-kahler", "first-integral", "det",     "petrov"};
  return names;
}

std::vector<std::string> defaultCheckSelection() {
  std::vector<std::string> names = allCheckNames();
  names.erase(std::remove(names.begin(), names.end(), "petrov"), names.end());
  return names;
}

std::vector<std::string> parseCheckSelection(const std::string& text) {
  if (text.empty() || text == "default") return defaultCheckSelection();
  if (text == "all") return allCheckNames();
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    if (std::find(allCheckNames().begin(), allCheckNames().end(), item) ==
        allCheckNames().end())
      throw std::invalid_argument("unknown check name '" + item + "'");
    out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty check selection");
  return out;
}

CheckReport runChecks(const PotentialPair& p, const std::vector<std::string>& selection,
                      const CheckOptions& options) {
  for (const auto& name : selection)
    if (std::find(allCheckNames().begin(), allCheckNames().end(), name) ==
        allCheckNames().end())
      throw std::invalid_argument("unknown check name '" + name + "'");

  const auto selected = [&](const std::string& name) {
    return std::find(selection.begin(), selection.end(), name) != selection.end();
  };

  CheckReport report;
  report.seed = options.seed;
  report.points = options.points;

  // Shared intermediate results.
  std::optional<MaxwellReport> maxwell;
  if (selected("maxwell") || selected("gauduchon")) maxwell = maxwellCheck(p);
  std::optional<CurvatureDecomposition> curv;
  if (selected("curvature") || selected("invariant")) curv = curvatureDecompose(p);

  for (const auto& name : allCheckNames()) {
    if (!selected(name)) continue;
    if (name == "pde") report.entries.push_back(checkPde(p));
    else if (name == "special-case") report.entries.push_back(checkSpecialCase(p));
    else if (name == "lax") report.entries.push_back(checkLax(p));
    else if (name == "eq-system") report.entries.push_back(checkEqSystem(p));
    else if (name == "nijenhuis") report.entries.push_back(checkNijenhuis(p));
    else if (name == "lee-structure") report.entries.push_back(checkLeeStructure(p));
    else if (name == "maxwell") report.entries.push_back(checkMaxwell(*maxwell));
    else if (name == "gauduchon") report.entries.push_back(checkGauduchon(*maxwell));
    else if (name == "structure-eq") report.entries.push_back(checkStructureEq(p));
    else if (name == "curvature") report.entries.push_back(checkCurvature(*curv));
    else if (name == "invariant") report.entries.push_back(checkInvariant(p, *curv));
    else if (name == "hyper-kahler") report.entries.push_back(checkHyperKahler(p));
    else if (name == "first-integral") report.entries.push_back(checkFirstIntegral(p));
    else if (name == "det") report.entries.push_back(checkDet(p));
    else if (name == "petrov") report.entries.push_back(checkPetrov(p, options));
  }
  return report;
}

std::vector<NumericPoint> drawSamplePoints(const PotentialPair& p, std::uint64_t seed,
                                           int count) {
  if (count < 1) throw std::invalid_argument("need at least one sample point");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mod(0.5, 2.0), arg(0.0, 6.283185307179586);

  std::vector<RationalExpr> guards{p.theta0, p.theta1};
  for (const auto& c : weylDirectComponents(p)) guards.push_back(c);

  std::vector<NumericPoint> out;
  int attempts = 0;
  const int maxAttempts = 200 * count;
  while (static_cast<int>(out.size()) < count && attempts < maxAttempts) {
    ++attempts;
    NumericPoint pt;
    for (int g = 0; g < kGenCount; ++g) {
      const double m = mod(rng), t = arg(rng);
      pt[g] = {m * std::cos(t), m * std::sin(t)};
    }
    bool ok = true;
    for (const auto& e : guards)
      if (e.denominatorMagnitude(pt) < 1e-3) {
        ok = false;
        break;
      }
    if (ok) out.push_back(pt);
  }
  if (static_cast<int>(out.size()) < count)
    throw std::runtime_error("could not draw sample points away from denominator zeros");
  return out;
}

namespace {

OrderedJson reportJson(const CheckReport& report, const PotentialPair& p) {
  OrderedJson j;
  j["tool"] = "hhverify";
  j["schema"] = 1;
  j["convention"] = OrderedJson{
      {"epsilon", "eps_(01) = eps^(01) = eps_(0'1') = eps^(0'1') = 1"},
      {"chart", "x^(00') = y, x^(01') = w, x^(10') = -x, x^(11') = z"},
  };
  j["potentials"] = OrderedJson{
      {"theta0", p.theta0.str()},
      {"theta1", p.theta1.str()},
  };
  j["seed"] = report.seed;
  j["points"] = report.points;
  OrderedJson checks = OrderedJson::array();
  for (const auto& e : report.entries)
    checks.push_back(OrderedJson{
        {"name", e.name},
        {"status", statusName(e.status)},
        {"residual", e.residual},
        {"note", e.note},
    });
  j["checks"] = checks;
  j["all_passed"] = report.allPassed();
  return j;
}

}  // namespace

std::string reportToJson(const CheckReport& report, const PotentialPair& p, bool pretty) {
  const OrderedJson j = reportJson(report, p);
  return pretty ? j.dump(2) : j.dump();
}

std::string reportToText(const CheckReport& report) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& e : report.entries) {
    os << (e.status == CheckStatus::Pass ? "[pass] " : "[FAIL] ") << e.name;
    for (std::size_t i = e.name.size(); i < 16; ++i) os << ' ';
    os << e.note << "\n";
    if (e.status != CheckStatus::Pass) os << "       residual: " << e.residual << "\n";
    if (e.status == CheckStatus::Pass) ++passed;
  }
  os << passed << "/" << report.entries.size() << " checks passed\n";
  return os.str();
}

void validateUserExpression(const RationalExpr& e, const std::string& what,
                            bool allowCoordinates) {
  auto dependsOn = [&](int g) {
    return e.numerator().dependsOn(g) || e.denominatorDependsOn(g);
  };
  for (int g : {GLambda, GEps, GT})
    if (dependsOn(g))
      throw std::invalid_argument(what + " must not use the reserved symbol '" +
                                  std::string(kGenNames[static_cast<std::size_t>(g)]) + "'");
  if (!allowCoordinates)
    for (int g = 0; g < kCoordCount; ++g)
      if (dependsOn(g))
        throw std::invalid_argument(what + " must be constant in the coordinates ('" +
                                    std::string(kGenNames[static_cast<std::size_t>(g)]) +
                                    "' found)");
}

// ---------------------------------------------------------------------------
// Command line driver.
// ---------------------------------------------------------------------------

namespace {

void writeOutput(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(outPath);
    if (!f) throw std::invalid_argument("cannot open output path '" + outPath + "'");
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
  }
}

PotentialPair loadPair(std::string theta0Str, std::string theta1Str,
                       const std::string& fileStr) {
  if (!fileStr.empty()) {
    std::ifstream in(fileStr);
    if (!in) throw std::invalid_argument("cannot open input file '" + fileStr + "'");
    const auto j = nlohmann::json::parse(in);
    theta0Str = j.at("theta0").get<std::string>();
    theta1Str = j.at("theta1").get<std::string>();
  }
  if (theta0Str.empty() || theta1Str.empty())
    throw std::invalid_argument("provide --theta0 and --theta1, or --file");
  PotentialPair p{parseExpr(theta0Str), parseExpr(theta1Str)};
  validateUserExpression(p.theta0, "theta0", true);
  validateUserExpression(p.theta1, "theta1", true);
  return p;
}

int emitCheckReport(const CheckReport& report, const PotentialPair& p, bool human,
                    const std::string& outPath, const OrderedJson* familyInfo) {
  if (human) {
    writeOutput(reportToText(report), outPath);
  } else {
    OrderedJson j = reportJson(report, p);
    if (familyInfo) j["family"] = *familyInfo;
    writeOutput(j.dump(2), outPath);
  }
  return report.allPassed() ? 0 : 1;
}

}  // namespace

int cliMain(int argc, char** argv) {
  CLI::App app{"exact verifier for the hyper-Hermitian geometry of a potential pair"};
  app.require_subcommand(1);

  // Shared flag storage.
  std::string theta0Str, theta1Str, fileStr, checksStr, outStr;
  std::uint64_t seed = 0;
  int points = 5;
  bool human = false;

  auto addIoFlags = [&](CLI::App* cmd) {
    cmd->add_option("--out", outStr, "write the report to this path instead of stdout");
    cmd->add_flag("--human", human, "plain-text report instead of JSON");
  };
  auto addCheckFlags = [&](CLI::App* cmd) {
    cmd->add_option("--checks", checksStr,
                    "comma-separated check names, or 'all', or 'default'");
    cmd->add_option("--seed", seed, "seed for numeric sample points");
    cmd->add_option("--points", points, "number of numeric sample points");
    addIoFlags(cmd);
  };

  CLI::App* checkCmd =
      app.add_subcommand("check", "run the verification suite on explicit potentials");
  checkCmd->add_option("--theta0", theta0Str, "first potential (expression text)");
  checkCmd->add_option("--theta1", theta1Str, "second potential (expression text)");
  checkCmd->add_option("--file", fileStr, "JSON file with \"theta0\"/\"theta1\" strings");
  addCheckFlags(checkCmd);

  std::string familyName;
  int fk = 0, fl = 0, fm = 0, fn = 0;
  std::string aStr = "a", bStr = "b";
  CLI::App* familyCmd =
      app.add_subcommand("family", "construct a named solution family and verify it");
  familyCmd->add_option("--name", familyName, "family name")->required();
  familyCmd->add_option("--k", fk, "first exponent");
  familyCmd->add_option("--l", fl, "second exponent");
  familyCmd->add_option("--m", fm, "third exponent");
  familyCmd->add_option("--n", fn, "fourth exponent");
  familyCmd->add_option("--a", aStr, "first scale (constant expression)");
  familyCmd->add_option("--b", bStr, "second scale (constant expression)");
  addCheckFlags(familyCmd);

  bool verify = false;
  int samples = 256;
  CLI::App* residueCmd = app.add_subcommand(
      "residue", "build potentials from the pole residue of the rational generating function");
  residueCmd->add_option("--k", fk, "first exponent");
  residueCmd->add_option("--l", fl, "second exponent");
  residueCmd->add_option("--m", fm, "third exponent");
  residueCmd->add_option("--n", fn, "fourth exponent");
  residueCmd->add_option("--a", aStr, "first scale (constant expression)");
  residueCmd->add_option("--b", bStr, "second scale (constant expression)");
  residueCmd->add_flag("--verify", verify,
                       "check the residue against the closed form, the second pole, and "
                       "the numeric contour integral");
  residueCmd->add_option("--samples", samples, "contour quadrature sample count");
  residueCmd->add_option("--seed", seed, "seed for numeric sample points");
  addIoFlags(residueCmd);

  CLI::App* classifyCmd =
      app.add_subcommand("classify", "algebraic classification at numeric sample points");
  classifyCmd->add_option("--theta0", theta0Str, "first potential (expression text)");
  classifyCmd->add_option("--theta1", theta1Str, "second potential (expression text)");
  classifyCmd->add_option("--file", fileStr, "JSON file with \"theta0\"/\"theta1\" strings");
  classifyCmd->add_option("--seed", seed, "seed for numeric sample points");
  classifyCmd->add_option("--points", points, "number of numeric sample points");
  addIoFlags(classifyCmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (checkCmd->parsed()) {
      const PotentialPair p = loadPair(theta0Str, theta1Str, fileStr);
      const auto selection = parseCheckSelection(checksStr);
      const CheckReport report = runChecks(p, selection, {seed, points});
      return emitCheckReport(report, p, human, outStr, nullptr);
    }

    if (familyCmd->parsed()) {
      FamilySpec spec;
      if (!familyTagFromName(familyName, spec.tag))
        throw std::invalid_argument("unknown family name '" + familyName + "'");
      if (fk < 0 || fl < 0 || fm < 0 || fn < 0)
        throw std::invalid_argument("family exponents must be non-negative");
      spec.k = fk;
      spec.l = fl;
      spec.m = fm;
      spec.n = fn;
      spec.a = parseExpr(aStr);
      spec.b = parseExpr(bStr);
      validateUserExpression(spec.a, "a", false);
      validateUserExpression(spec.b, "b", false);

      const PotentialPair p = makeFamily(spec);
      const auto selection = parseCheckSelection(checksStr);
      const CheckReport report = runChecks(p, selection, {seed, points});

      const FamilyMetricCheck metric = familyMetricCheck(spec);
      OrderedJson familyInfo{
          {"name", familyTagName(spec.tag)},
          {"k", spec.k},
          {"l", spec.l},
          {"m", spec.m},
          {"n", spec.n},
          {"a", spec.a.str()},
          {"b", spec.b.str()},
          {"metric_display_supported", metric.supported},
          {"metric_display_matches", metric.supported ? OrderedJson(metric.matches)
                                                      : OrderedJson(nullptr)},
      };
      const int code = emitCheckReport(report, p, human, outStr, &familyInfo);
      if (metric.supported && !metric.matches) return 1;
      return code;
    }

    if (residueCmd->parsed()) {
      if (fk < 0 || fl < 0 || fm < 0 || fn < 0)
        throw std::invalid_argument("residue exponents must be non-negative");
      TwistorFunctionSpec ts;
      ts.k = fk;
      ts.l = fl;
      ts.m = fm;
      ts.n = fn;
      ts.a = parseExpr(aStr);
      ts.b = parseExpr(bStr);
      validateUserExpression(ts.a, "a", false);
      validateUserExpression(ts.b, "b", false);

      const PotentialPair first = residueTheta(ts);
      const PotentialPair second = residueThetaSecondPole(ts);

      OrderedJson j;
      j["tool"] = "hhverify";
      j["schema"] = 1;
      j["residue"] = OrderedJson{{"theta0", first.theta0.str()},
                                 {"theta1", first.theta1.str()}};
      j["second_pole"] = OrderedJson{{"theta0", second.theta0.str()},
                                     {"theta1", second.theta1.str()}};
      bool ok = true;
      if (verify) {
        FamilySpec sm;
        sm.tag = FamilyTag::SpecialMonomial;
        sm.k = ts.k;
        sm.l = ts.l;
        sm.m = ts.m;
        sm.n = ts.n;
        sm.a = ts.a;
        sm.b = ts.b;
        const PotentialPair closed = makeFamily(sm);
        const bool closedMatch =
            first.theta0 == closed.theta0 && first.theta1 == closed.theta1;
        const bool poleSum = (first.theta0 + second.theta0).isZero() &&
                             (first.theta1 + second.theta1).isZero();

        bool contourOk = true;
        double maxRel = 0.0;
        int done = 0;
        const auto pts = drawSamplePoints(first, seed, 8);
        for (const auto& pt : pts) {
          if (done >= 3) break;
          try {
            const ContourResult c = contourOracle(ts, pt, samples);
            const std::complex<double> e0 = first.theta0.eval(pt);
            const std::complex<double> e1 = first.theta1.eval(pt);
            maxRel = std::max(maxRel,
                              std::abs(c.value[0] - e0) / std::max(1.0, std::abs(e0)));
            maxRel = std::max(maxRel,
                              std::abs(c.value[1] - e1) / std::max(1.0, std::abs(e1)));
            ++done;
          } catch (const std::runtime_error&) {
            continue;  // contour could not separate the poles here; try another point
          }
        }
        contourOk = done >= 3 && maxRel < 1e-8;
        ok = closedMatch && poleSum && contourOk;
        j["verification"] = OrderedJson{
            {"closed_form_match", closedMatch},
            {"pole_residues_sum_to_zero", poleSum},
            {"contour_matches", contourOk},
            {"contour_points", done},
            {"samples", samples},
        };
      }
      if (human) {
        std::ostringstream os;
        os << "theta0 = " << first.theta0.str() << "\n"
           << "theta1 = " << first.theta1.str() << "\n";
        if (verify) os << (ok ? "verification passed" : "verification FAILED") << "\n";
        writeOutput(os.str(), outStr);
      } else {
        writeOutput(j.dump(2), outStr);
      }
      return ok ? 0 : 1;
    }

    if (classifyCmd->parsed()) {
      const PotentialPair p = loadPair(theta0Str, theta1Str, fileStr);
      const auto pts = drawSamplePoints(p, seed, points);
      const PetrovVerdict v = petrovClassify(p, pts);
      OrderedJson j;
      j["tool"] = "hhverify";
      j["schema"] = 1;
      j["label"] = v.label;
      j["consistent"] = v.consistent;
      j["points_used"] = v.pointsUsed.size();
      OrderedJson patterns = OrderedJson::array();
      for (const auto& pat : v.patterns) patterns.push_back(pat);
      j["patterns"] = patterns;
      if (human) {
        std::ostringstream os;
        os << "algebraic type " << v.label << " (consistent: " << yesNo(v.consistent)
           << ", points: " << v.pointsUsed.size() << ")\n";
        writeOutput(os.str(), outStr);
      } else {
        writeOutput(j.dump(2), outStr);
      }
      return v.consistent ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "expression error at position " << e.position() << ": " << e.what()
              << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hh
