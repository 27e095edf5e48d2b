// preop: enumerate bases, evaluate expressions, sweep operad laws and print
// the non-freeness witnesses.
//
// Exit status: 0 pass, 1 counterexample found, 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "preop/errors.hpp"
#include "preop/expression.hpp"
#include "preop/instances.hpp"
#include "preop/trees.hpp"
#include "preop/verify.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

struct EnumerateOptions {
  std::string family;
  std::size_t size = 0;
  bool count_only = false;
  std::string signature = "g:2";
  std::size_t max_basis = preop::Bounds{}.max_basis;
  bool json = false;
};

int cmd_enumerate(const EnumerateOptions& o) {
  using namespace preop;
  if (o.size == 0) throw DomainError("--size must be at least 1");
  std::size_t count = 0;
  std::vector<std::string> listing;
  auto price = [&](std::size_t expected) {
    if (expected > o.max_basis)
      throw BudgetError("refusing to enumerate " + std::to_string(expected) + " " + o.family +
                        " trees: above --max-basis " + std::to_string(o.max_basis));
  };
  if (o.family == "unlabeled") {
    price(count_unlabeled(o.size));
    for (const auto& t : enumerate_unlabeled(o.size)) listing.push_back(t.code());
  } else if (o.family == "labeled") {
    price(PreLieOperad().basis_count(o.size));
    for (const auto& t : enumerate_labeled(o.size)) listing.push_back(t.code());
  } else if (o.family == "planar-binary" || o.family == "planar") {
    const auto sig = o.family == "planar" ? Signature::parse(o.signature) : Signature::mag2();
    price(count_planar(o.size, sig));
    const auto terms = o.family == "planar" ? enumerate_planar(o.size, sig)
                                            : enumerate_planar_binary(o.size, sig.generators().front());
    for (const auto& t : terms) listing.push_back(t.code());
  } else {
    throw DomainError("unknown family '" + o.family + "' (expected unlabeled, labeled, planar-binary, planar)");
  }
  count = listing.size();

  if (o.json) {
    nlohmann::json out{{"family", o.family}, {"size", o.size}, {"count", count}};
    if (!o.count_only) out["trees"] = listing;
    std::cout << out.dump(2) << "\n";
  } else if (o.count_only) {
    std::cout << count << "\n";
  } else {
    for (const auto& line : listing) std::cout << line << "\n";
  }
  return kPass;
}

struct EvalOptions {
  std::string operad;
  std::string expression;
  bool json = false;
};

int cmd_eval(const EvalOptions& o) {
  const auto result = preop::evaluate_in(o.operad, o.expression);
  if (o.json)
    std::cout << nlohmann::json{{"operad", o.operad}, {"expression", o.expression}, {"result", result.json}}.dump(2)
              << "\n";
  else
    std::cout << result.text << "\n";
  return kPass;
}

struct CheckOptions {
  std::string operad;
  std::string law;
  std::optional<std::size_t> max_arity;
  std::size_t max_vertices = preop::Bounds{}.max_vertices;
  std::size_t max_basis = preop::Bounds{}.max_basis;
  bool json = false;
  bool no_time = false;
};

// Default arity: 3, or 4 leaves for free ns operads. Insertion sweeps grow
// as (basis size)^(arity+1) with large intermediate sums, so they default to 2.
preop::Bounds bounds_for(const std::string& operad, const std::string& law, const CheckOptions& o) {
  preop::Bounds b;
  const bool planar = operad == "mag2" || operad.rfind("free:", 0) == 0;
  const bool insertion = law.rfind("insertion", 0) == 0;
  b.max_arity = o.max_arity.value_or(insertion ? 2 : planar ? 4 : 3);
  b.max_vertices = o.max_vertices;
  b.max_basis = o.max_basis;
  return b;
}

void print_report(const preop::VerificationReport& r) {
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.instance << " " << r.law << ": " << r.cases << " cases, "
            << r.failure_count << " failures\n";
  for (const auto& f : r.failures) {
    std::cout << "  inputs:";
    for (const auto& in : f.inputs) std::cout << " [" << in << "]";
    std::cout << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n";
  }
}

int cmd_check(const CheckOptions& o) {
  const auto report = preop::run_check(o.operad, o.law, bounds_for(o.operad, o.law, o));
  if (o.json)
    std::cout << report.to_json(!o.no_time).dump(2) << "\n";
  else
    print_report(report);
  return report.passed() ? kPass : kCounterexample;
}

struct TheoremOptions {
  std::vector<std::string> operads;
  bool json = false;
};

void print_theorem(const preop::TheoremReport& r) {
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.instance << " theorem witnesses\n";
  for (const auto& w : r.witnesses) {
    std::cout << "  [" << w.flavor << "] " << w.relation << " = " << w.operad_value << " (closed form "
              << w.closed_form_value << ")\n"
              << "       free: " << w.free_relation << " = " << w.free_value
              << (w.free_nonzero ? "  (nonzero: not a pre-Lie relation)" : "  (zero)") << "\n";
  }
}

int cmd_theorem(const TheoremOptions& o) {
  const auto names = o.operads.empty() ? preop::builtin_operad_names() : o.operads;
  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& name : names) {
    const auto report = preop::run_theorem(name);
    ok = ok && report.passed();
    if (o.json)
      all.push_back(report.to_json());
    else
      print_theorem(report);
  }
  if (o.json) std::cout << all.dump(2) << "\n";
  return ok ? kPass : kCounterexample;
}

struct ReportOptions {
  std::vector<std::string> operads;
  CheckOptions check;
  bool json = false;
};

int cmd_report(const ReportOptions& o) {
  auto names = o.operads;
  if (names.empty()) {
    names = preop::builtin_operad_names();
    names.push_back("free-prelie");
  }
  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  nlohmann::json theorems = nlohmann::json::array();
  for (const auto& name : names) {
    for (const auto& law : preop::laws_for(name)) {
      const auto r = preop::run_check(name, law, bounds_for(name, law, o.check));
      ok = ok && r.passed();
      if (o.json)
        reports.push_back(r.to_json(!o.check.no_time));
      else
        print_report(r);
    }
    if (name == "free-prelie") continue;
    const auto t = preop::run_theorem(name);
    ok = ok && t.passed();
    if (o.json)
      theorems.push_back(t.to_json());
    else
      print_theorem(t);
  }
  if (o.json) std::cout << nlohmann::json{{"passed", ok}, {"reports", reports}, {"theorems", theorems}}.dump(2) << "\n";
  return ok ? kPass : kCounterexample;
}

void add_bounds(CLI::App* cmd, CheckOptions& o) {
  auto* arity = cmd->add_option("--max-arity", o.max_arity, "Largest basis arity swept");
  cmd->add_option("--max-leaves", o.max_arity, "Alias of --max-arity for free ns operads")->excludes(arity);
  cmd->add_option("--max-vertices", o.max_vertices, "Total vertex budget for free-prelie sweeps");
  cmd->add_option("--max-basis", o.max_basis, "Refuse any basis larger than this");
  cmd->add_flag("--no-time", o.no_time, "Omit wall time from JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pre-Lie structures on operads: enumeration, evaluation and law verification"};
  app.require_subcommand(1);

  EnumerateOptions enumerate;
  auto* e = app.add_subcommand("enumerate", "List a tree basis in canonical order");
  e->add_option("--family", enumerate.family, "unlabeled | labeled | planar-binary | planar")->required();
  e->add_option("--size", enumerate.size, "Vertices (unlabeled, labeled) or leaves (planar)")->required();
  e->add_flag("--count-only", enumerate.count_only, "Print only the number of trees");
  e->add_option("--signature", enumerate.signature, "Signature for --family planar, e.g. g:2,h:3");
  e->add_option("--max-basis", enumerate.max_basis, "Refuse enumerations larger than this");
  e->add_flag("--json", enumerate.json, "JSON output");

  EvalOptions eval;
  auto* v = app.add_subcommand("eval", "Evaluate an expression exactly");
  v->add_option("--operad", eval.operad, "nsassoc | mag2 | free:<sig> | prelie | nap | free-prelie")->required();
  v->add_option("expression", eval.expression, "e.g. \"id <| (id, id)\"")->required();
  v->add_flag("--json", eval.json, "JSON output");

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Sweep one law exhaustively within bounds");
  c->add_option("--operad", check.operad, "Instance name")->required();
  c->add_option("--law", check.law, "Law name; see `report` for the full list")->required();
  add_bounds(c, check);
  c->add_flag("--json", check.json, "JSON report");

  TheoremOptions theorem;
  auto* t = app.add_subcommand("theorem", "Vanishing insertion elements versus the free pre-Lie algebra");
  t->add_option("--operad", theorem.operads, "Instance (repeatable); default: all built-in instances");
  t->add_flag("--json", theorem.json, "JSON output");

  ReportOptions report;
  auto* r = app.add_subcommand("report", "Run every law and the theorem witnesses");
  r->add_option("--operad", report.operads, "Instance (repeatable); default: all");
  add_bounds(r, report.check);
  r->add_flag("--json", report.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*e) return cmd_enumerate(enumerate);
    if (*v) return cmd_eval(eval);
    if (*c) return cmd_check(check);
    if (*t) return cmd_theorem(theorem);
    if (*r) return cmd_report(report);
  } catch (const preop::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
