#include "akschur/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <stdexcept>

#include "akschur/basicset.hpp"
#include "akschur/io.hpp"
#include "akschur/schur.hpp"
#include "akschur/symbol.hpp"
#include "akschur/verify.hpp"

namespace akschur::cli {

namespace {

using combinatorics::ChargeData;
using combinatorics::Multipartition;
using json = nlohmann::ordered_json;
using schur::CycloSpec;

class FlagError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Flags {
  int l = 0;
  int n = 0;
  int p = 1;
  int e = 0;
  int k = 1;
  long r = 1;
  std::string charges;
  std::string v;
  std::string lambda;
  std::string formula = "cancel";
  std::string method = "combinatorial";
  std::string suite = "all";
  int symbolSize = -1;
  int maxL = 3;
  int maxN = 4;
  unsigned jobs = 1;
  bool json = false;
  bool all = false;
};

Multipartition lambdaFlag(const Flags& f) {
  try {
    return io::parseMultipartition(f.lambda);
  } catch (const io::ParseError& ex) {
    throw FlagError(std::string("--lambda: ") + ex.what());
  }
}

std::vector<long> listFlag(const std::string& name, const std::string& text, int expected) {
  std::vector<long> out;
  if (text.empty()) {
    out.assign(static_cast<std::size_t>(std::max(expected, 0)), 0);
  } else {
    try {
      out = io::parseIntegerList(text);
    } catch (const io::ParseError& ex) {
      throw FlagError(name + ": " + ex.what());
    }
  }
  if (expected >= 0 && static_cast<int>(out.size()) != expected)
    throw FlagError(name + " needs " + std::to_string(expected) + " entries, got " + std::to_string(out.size()));
  return out;
}

CycloSpec cyclotomicFlags(const Flags& f, int chargeCount) {
  const auto charges = listFlag("--charges", f.charges, chargeCount);
  try {
    return CycloSpec::cyclotomic(f.e, f.k, f.r, charges);
  } catch (const std::domain_error& ex) {
    throw FlagError(ex.what());
  }
}

void requireLevel(const Flags& f) {
  if (f.l < 1) throw FlagError("l must be >= 1");
  if (f.n < 0) throw FlagError("n must be >= 0");
}

std::string verdict(bool agree) { return agree ? "AGREE" : "DISAGREE"; }

int runSchur(const Flags& f, std::ostream& out) {
  const Multipartition mp = lambdaFlag(f);
  const int L = f.symbolSize >= 0 ? f.symbolSize : mp.length();
  if ((f.formula == "gim" || f.formula == "all") && L < mp.length())
    throw FlagError("symbol size must be >= the length of lambda (" + std::to_string(mp.length()) + ")");

  std::vector<std::pair<std::string, std::string>> rendered;
  if (f.formula == "cancel" || f.formula == "all")
    rendered.emplace_back("cancel", exactalg::render(schur::schurCancellationFree(mp)));
  if (f.formula == "mathas" || f.formula == "all")
    rendered.emplace_back("mathas", exactalg::render(schur::schurMathas(mp)));
  if (f.formula == "gim" || f.formula == "all") rendered.emplace_back("gim", exactalg::render(schur::schurGIM(mp, L)));

  bool agree = true;
  for (const auto& [name, text] : rendered) agree = agree && text == rendered.front().second;
  if (f.json) {
    json doc{{"lambda", io::toJson(mp)}};
    for (const auto& [name, text] : rendered) doc["schur"][name] = text;
    if (f.formula == "all") doc["verdict"] = verdict(agree);
    out << doc.dump() << "\n";
  } else if (f.formula == "all") {
    for (const auto& [name, text] : rendered) out << name << ": " << text << "\n";
    out << verdict(agree) << "\n";
  } else {
    out << rendered.front().second << "\n";
  }
  return f.formula == "all" && !agree ? 1 : 0;
}

int runSemisimple(const Flags& f, std::ostream& out) {
  requireLevel(f);
  CycloSpec spec = f.v.empty() ? cyclotomicFlags(f, f.l) : [&] {
    try {
      return CycloSpec::rootOfUnity(f.e, f.k, listFlag("--v", f.v, f.l));
    } catch (const std::domain_error& ex) {
      throw FlagError(ex.what());
    }
  }();
  const bool ok = schur::isSemisimple(spec, f.l, f.n);
  const std::string text = ok ? "SEMISIMPLE" : "NOT SEMISIMPLE";
  if (f.json) {
    json doc{{"semisimple", ok}, {"verdict", text}};
    doc["thetaP"] = f.n == 0 ? std::string("1")
                             : io::render(exactalg::specialise(schur::arikiPoly(f.l, f.n), schur::specMapFor(spec, f.l)));
    out << doc.dump() << "\n";
  } else {
    out << text << "\n";
  }
  return 0;
}

int runDefect0(const Flags& f, std::ostream& out) {
  if (f.e < 2) throw FlagError("e must be > 1");
  if (f.all == !f.lambda.empty()) throw FlagError("give exactly one of --lambda and --all");
  if (!f.all) {
    const Multipartition mp = lambdaFlag(f);
    const auto v = listFlag("--v", f.v, mp.level());
    const bool ok = schur::isDefectZero(mp, f.e, v);
    if (f.json)
      out << json{{"lambda", io::toJson(mp)}, {"defect0", ok}}.dump() << "\n";
    else
      out << (ok ? "DEFECT 0" : "NOT DEFECT 0") << "\n";
    return 0;
  }
  const int l = f.l > 0 ? f.l : (f.v.empty() ? 1 : static_cast<int>(io::parseIntegerList(f.v).size()));
  if (f.n < 0) throw FlagError("n must be >= 0");
  const auto v = listFlag("--v", f.v, l);
  json list = json::array();
  std::string text = "[";
  for (const auto& mp : combinatorics::enumerateMultipartitions(l, f.n)) {
    if (!schur::isDefectZero(mp, f.e, v)) continue;
    text += (list.empty() ? "" : ", ") + io::toLiteral(mp);
    list.push_back(json(io::toJson(mp)));
  }
  if (f.json)
    out << json{{"defect0", list}}.dump() << "\n";
  else
    out << text << "]\n";
  return 0;
}

int runAvalue(const Flags& f, std::ostream& out) {
  const Multipartition mp = lambdaFlag(f);
  const auto charges = listFlag("--charges", f.charges, mp.level());
  std::unique_ptr<ChargeData> m;
  try {
    m = std::make_unique<ChargeData>(f.r, charges);
  } catch (const std::domain_error& ex) {
    throw FlagError(ex.what());
  }
  if (f.symbolSize >= 0) {
    // Validate the explicit size against both lambda and the empty multipartition.
    try {
      combinatorics::shiftedSymbol(mp, *m, f.symbolSize);
      combinatorics::shiftedSymbol(Multipartition::empty(mp.level()), *m, f.symbolSize);
    } catch (const std::domain_error& ex) {
      throw FlagError(std::string("--symbol-size: ") + ex.what());
    }
  }

  std::vector<std::pair<std::string, std::string>> values;
  if (f.method == "combinatorial" || f.method == "all")
    values.emplace_back("combinatorial",
                        io::renderRational(f.symbolSize >= 0 ? combinatorics::aValueCombinatorial(mp, *m, f.symbolSize)
                                                              : combinatorics::aValueCombinatorial(mp, *m)));
  if (f.method == "hooks" || f.method == "all")
    values.emplace_back("hooks", io::renderRational(combinatorics::aValueHookFormula(mp, *m)));
  if (f.method == "valuation" || f.method == "all")
    values.emplace_back("valuation", std::to_string(schur::aValueViaValuation(mp, *m)));

  bool agree = true;
  for (const auto& [name, text] : values) agree = agree && text == values.front().second;
  if (f.json) {
    json doc{{"lambda", io::toJson(mp)}};
    for (const auto& [name, text] : values) doc["avalue"][name] = text;
    if (f.method == "all") doc["verdict"] = verdict(agree);
    out << doc.dump() << "\n";
  } else if (f.method == "all") {
    for (const auto& [name, text] : values) out << name << ": " << text << "\n";
    out << verdict(agree) << "\n";
  } else {
    out << values.front().second << "\n";
  }
  return f.method == "all" && !agree ? 1 : 0;
}

json paramsJson(const Flags& f, const CycloSpec& spec) {
  json params{{"l", f.l}, {"n", f.n}, {"e", spec.e()}, {"k", spec.k()}, {"r", spec.r()}, {"charges", spec.charges()}};
  return params;
}

int runBasicSet(const Flags& f, std::ostream& out, std::ostream& err) {
  requireLevel(f);
  const CycloSpec spec = cyclotomicFlags(f, f.l);
  const auto B = basicset::assembleBasicSet(spec, f.l, f.n);
  for (const auto& d : B.diagnostics) err << "note: " << d << "\n";
  if (f.json) {
    json elements = json::array();
    for (const auto& mp : B.elements) elements.push_back(json(io::toJson(mp)));
    out << json{{"params", paramsJson(f, spec)}, {"elements", elements}}.dump() << "\n";
  } else {
    for (const auto& mp : B.elements) out << io::toLiteral(mp) << "\n";
  }
  return 0;
}

int runBasicSetGPN(const Flags& f, std::ostream& out, std::ostream& err) {
  requireLevel(f);
  if (f.p < 1 || f.l % f.p != 0) throw FlagError("p must divide l");
  // Either a d-tuple or a p-periodic l-tuple of charges.
  const int d = f.l / f.p;
  const auto given = listFlag("--charges", f.charges, -1);
  const int count = f.charges.empty() ? d : static_cast<int>(given.size());
  const CycloSpec spec = cyclotomicFlags(f, count == f.l ? f.l : d);
  const auto gpn = basicset::assembleBasicSetGPN(spec, f.l, f.p, f.n);
  for (const auto& diag : gpn.ambient.diagnostics) err << "note: " << diag << "\n";
  if (f.json) {
    json orbits = json::array();
    for (const auto& o : gpn.orbits)
      orbits.push_back(
          {{"representative", io::toJson(o.representative)}, {"orbitSize", o.orbitSize}, {"stabilizerSize", o.stabilizerSize}});
    out << json{{"orbits", orbits}}.dump() << "\n";
  } else {
    for (const auto& o : gpn.orbits) {
      out << io::toLiteral(o.representative) << " orbitSize=" << o.orbitSize << " stabilizerSize=" << o.stabilizerSize;
      for (const auto& label : o.labels) out << " " << label;
      out << "\n";
    }
  }
  return 0;
}

int runVerify(const Flags& f, std::ostream& out) {
  if (f.maxL < 1 || f.maxN < 1) throw FlagError("--max-l and --max-n must be >= 1");
  if (f.jobs < 1) throw FlagError("--jobs must be >= 1");
  verify::Options opt;
  opt.maxL = f.maxL;
  opt.maxN = f.maxN;
  opt.jobs = f.jobs;
  std::vector<verify::SuiteReport> reports;
  try {
    reports = verify::run(f.suite, opt);
  } catch (const std::invalid_argument& ex) {
    throw FlagError(ex.what());
  }
  bool ok = true;
  json list = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed;
    if (f.json) {
      json item{{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}};
      if (!r.passed) item["firstCounterexample"] = r.firstCounterexample;
      list.push_back(item);
    } else {
      out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.checks << " checks)\n";
      if (!r.passed) out << "  first counterexample: " << r.firstCounterexample << "\n";
    }
  }
  if (f.json) out << json{{"suites", list}, {"passed", ok}}.dump() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur elements and canonical basic sets of Ariki-Koike algebras"};
  app.name("akschur");
  app.require_subcommand(1);
  Flags f;

  auto addSpecFlags = [&f](CLI::App* cmd) {
    cmd->add_option("--l", f.l, "number of components")->required();
    cmd->add_option("--n", f.n, "rank")->required();
    cmd->add_option("--e", f.e, "order of eta")->required();
    cmd->add_option("--k", f.k, "eta = exp(2 pi i k / e)");
    cmd->add_option("--r", f.r, "exponent of q");
    cmd->add_option("--charges", f.charges, "comma-separated integers");
  };

  auto* schurCmd = app.add_subcommand("schur", "Schur element of a multipartition");
  schurCmd->add_option("--lambda", f.lambda, "multipartition, e.g. [[2],[],[1,1]]")->required();
  schurCmd->add_option("--formula", f.formula)->check(CLI::IsMember({"cancel", "mathas", "gim", "all"}));
  schurCmd->add_option("--symbol-size", f.symbolSize, "L for the beta-number formula");

  auto* ssCmd = app.add_subcommand("semisimple", "semisimplicity of the specialised algebra");
  addSpecFlags(ssCmd);
  ssCmd->add_option("--v", f.v, "root-of-unity mode: Q_j -> eta^{v_j}");

  auto* d0Cmd = app.add_subcommand("defect0", "blocks of defect 0");
  d0Cmd->add_option("--l", f.l);
  d0Cmd->add_option("--n", f.n);
  d0Cmd->add_option("--e", f.e)->required();
  d0Cmd->add_option("--v", f.v, "comma-separated integers");
  d0Cmd->add_option("--lambda", f.lambda);
  d0Cmd->add_flag("--all", f.all, "list every defect-0 multipartition of n");

  auto* avCmd = app.add_subcommand("avalue", "a-value of a multipartition");
  avCmd->add_option("--lambda", f.lambda)->required();
  avCmd->add_option("--r", f.r);
  avCmd->add_option("--charges", f.charges);
  avCmd->add_option("--method", f.method)->check(CLI::IsMember({"combinatorial", "hooks", "valuation", "all"}));
  avCmd->add_option("--symbol-size", f.symbolSize);

  auto* bsCmd = app.add_subcommand("basicset", "canonical basic set for G(l,1,n)");
  addSpecFlags(bsCmd);

  auto* gpnCmd = app.add_subcommand("basicset-gpn", "canonical basic set for G(l,p,n)");
  addSpecFlags(gpnCmd);
  gpnCmd->add_option("--p", f.p)->required();

  auto* verifyCmd = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites = verify::suiteNames();
  suites.push_back("all");
  verifyCmd->add_option("--suite", f.suite)->check(CLI::IsMember(suites));
  verifyCmd->add_option("--max-l", f.maxL);
  verifyCmd->add_option("--max-n", f.maxN);
  verifyCmd->add_option("--jobs", f.jobs);

  for (auto* cmd : {schurCmd, ssCmd, d0Cmd, avCmd, bsCmd, gpnCmd, verifyCmd}) cmd->add_flag("--json", f.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (schurCmd->parsed()) return runSchur(f, out);
    if (ssCmd->parsed()) return runSemisimple(f, out);
    if (d0Cmd->parsed()) return runDefect0(f, out);
    if (avCmd->parsed()) return runAvalue(f, out);
    if (bsCmd->parsed()) return runBasicSet(f, out, err);
    if (gpnCmd->parsed()) return runBasicSetGPN(f, out, err);
    if (verifyCmd->parsed()) return runVerify(f, out);
  } catch (const FlagError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const io::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace akschur::cli
