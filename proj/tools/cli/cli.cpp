// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dilator/barind.hpp"
#include "dilator/chain_search.hpp"
#include "dilator/checks.hpp"
#include "dilator/compose.hpp"
#include "dilator/derivative.hpp"
#include "dilator/errors.hpp"
#include "dilator/extension.hpp"
#include "dilator/oracle.hpp"
#include "dilator/registry.hpp"
#include "dilator/report.hpp"
#include "dilator/suites.hpp"

namespace dilator::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string dilator = "omega";
  std::string inner = "omega";
  std::string order;
  std::string a, b;
  std::string term;
  std::string family;
  std::string suite;
  std::string bound_text = "small";
  std::size_t n = 0;
  std::size_t max_n = 2;
  std::size_t bound = 6;
  std::size_t depth = 10;
  std::size_t samples = 10'000;
  std::uint64_t budget = ChainBudget{}.max_comparisons;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool unicode = false;
};

const char* OrderingName(Ordering o) { return o < 0 ? "less" : (o > 0 ? "greater" : "equal"); }

OrderRef ParseOrder(const std::string& text) {
  if (text == "nat") return Naturals();
  std::size_t k = 0;
  std::istringstream is(text);
  if (!(is >> k) || !is.eof()) throw ParseError("--order must be a size k or 'nat', got '" + text + "'");
  return FiniteOrder(k);
}

ExtTerm ParseExt(const PraeDilator& t, const LinearOrder& x, const std::string& text) {
  ExtTerm s = ExtTerm::FromToken(Token::Parse(text));
  if (!ExtMember(t, x, s)) throw DomainError(text + " is not a term of D^" + t.name + " over " + x.name);
  return s;
}

Token ParseDerivTerm(const PraeDilator& t, std::size_t n, const std::string& text) {
  Token s = Token::Parse(text);
  if (!DerivMember(t, n, s)) {
    throw DomainError(text + " is not a derivative term over " + std::to_string(n));
  }
  return s;
}

int Emit(const std::vector<SuiteReport>& reports, const Options& o, std::ostream& out) {
  bool pass = true;
  for (const SuiteReport& r : reports) pass = pass && r.pass();
  if (o.json) {
    out << ToJson(reports) << "\n";
  } else {
    for (const SuiteReport& r : reports) {
      out << Summary(r) << "\n";
      std::size_t shown = 0;
      for (const Violation& v : r.violations) {
        if (shown++ == 5) break;
        out << "  " << v.law << " n=" << v.n;
        for (const std::string& w : v.witness) out << " " << w;
        if (!v.detail.empty()) out << "  (" << v.detail << ")";
        out << "\n";
      }
    }
  }
  return pass ? kExitPass : kExitViolation;
}

int DilatorsList(const Options& o, std::ostream& out) {
  json arr = json::array();
  for (const std::string& name : BuiltinDilatorNames()) {
    Dilator d = LookupDilator(name);
    if (o.json) {
      arr.push_back({{"name", name}, {"normal", d->is_normal()}, {"enumerate", d->can_enumerate()}});
    } else {
      out << name << (d->is_normal() ? " normal" : "") << (d->can_enumerate() ? " enumerable" : "")
          << "\n";
    }
  }
  if (o.json) out << json{{"schema", kReportSchema}, {"dilators", arr}}.dump(2) << "\n";
  else out << "d:<name> is the derivative of a normal dilator\n";
  return kExitPass;
}

int ExtCompareCmd(const Options& o, std::ostream& out) {
  Dilator t = LookupDilator(o.dilator);
  OrderRef x = ParseOrder(o.order);
  Ordering c = ExtCompare(*t, *x, ParseExt(*t, *x, o.a), ParseExt(*t, *x, o.b));
  if (o.json) out << json{{"result", OrderingName(c)}}.dump() << "\n";
  else out << OrderingName(c) << "\n";
  return kExitPass;
}

int DerivEnumerate(const Options& o, std::ostream& out) {
  Dilator d = Derivative(LookupDilator(o.dilator));
  std::vector<Token> terms = d->Members(o.n, o.bound);
  if (o.json) {
    json arr = json::array();
    for (const Token& s : terms) arr.push_back(s.str());
    out << json{{"schema", kReportSchema}, {"dilator", d->name}, {"n", o.n}, {"bound", o.bound},
                {"count", terms.size()}, {"terms", arr}}
               .dump(2)
        << "\n";
  } else {
    for (const Token& s : terms) out << s.str() << "\n";
  }
  return kExitPass;
}

int DerivCompareCmd(const Options& o, std::ostream& out) {
  Dilator t = LookupDilator(o.dilator);
  Ordering c = DerivCompare(*t, ParseDerivTerm(*t, o.n, o.a), ParseDerivTerm(*t, o.n, o.b));
  if (o.json) out << json{{"result", OrderingName(c)}}.dump() << "\n";
  else out << OrderingName(c) << "\n";
  return kExitPass;
}

int DerivCheck(const Options& o, std::ostream& out) {
  Dilator t = LookupDilator(o.dilator);
  SuiteReport r;
  if (o.suite == "linearity") {
    r = DerivLinearitySuite(t, o.max_n, o.bound);
  } else if (o.suite == "equalizer") {
    r = DerivEqualizerSuite(t, o.max_n, o.bound);
  } else if (o.suite == "normality") {
    r = DerivNormalitySuite(t, o.max_n, o.bound);
  } else {
    HeightSuiteOptions h;
    h.max_n = o.max_n;
    h.bound = o.bound;
    h.samples = o.samples;
    h.segment_samples = std::max<std::size_t>(1, o.samples / 10);
    h.seed = o.seed;
    r = DerivHeightSuite(t, h);
  }
  return Emit({r}, o, out);
}

int ChainSearch(const Options& o, std::ostream& out) {
  Dilator t = LookupDilator(o.dilator);
  ChainResult c = SearchDilatorChain(t, o.n, o.depth, o.bound, ChainBudget{o.budget});
  if (o.json) {
    json chain = json::array();
    for (const Token& s : c.chain) chain.push_back(s.str());
    out << json{{"schema", kReportSchema}, {"dilator", t->name}, {"n", o.n}, {"depth", o.depth},
                {"bound", o.bound}, {"status", ToString(c.status)}, {"pool_size", c.pool_size},
                {"comparisons", c.comparisons}, {"chain", chain}}
               .dump(2)
        << "\n";
  } else {
    out << ToString(c.status) << " (pool " << c.pool_size << ", " << c.comparisons
        << " comparisons)\n";
    for (const Token& s : c.chain) out << "  " << s.str() << "\n";
  }
  return kExitPass;
}

int ComposeCheck(const Options& o, std::ostream& out) {
  Dilator outer = LookupDilator(o.dilator);
  Dilator inner = LookupDilator(o.inner);
  std::vector<SuiteReport> reports;
  reports.push_back(CheckPraeDilatorLaws(Compose(outer, inner), o.max_n, o.bound));
  reports.push_back(ZetaSuite(outer, inner, o.max_n, o.bound));
  return Emit(reports, o, out);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int BarindDemo(const Options& o, std::ostream& out) {
  auto family = std::make_shared<const TreeFamily>(TreeFamily::FromJson(ReadFile(o.family)));
  FamilyDilators bundle = MakeFamilyDilators(family);
  TreeEmbedding j(bundle, DefaultFamilyTarget(bundle));
  std::vector<SuiteReport> reports{CheckFamilyWellFounded(*family), CheckTreeEmbedding(j)};
  bool pass = reports[0].pass() && reports[1].pass();
  if (o.json) {
    json table = json::array();
    for (const Token& e : family->SumElements()) {
      table.push_back({{"element", e.str()}, {"code", family->Code(e)}, {"image", j(e).ToToken().str()}});
    }
    json doc = json::parse(ToJson(reports));
    doc["table"] = std::move(table);
    out << doc.dump(2) << "\n";
  } else {
    for (const Token& e : family->SumElements()) {
      out << e.str() << "  code " << family->Code(e) << "\n    " << j(e).ToToken().str() << "\n";
    }
    for (const SuiteReport& r : reports) out << Summary(r) << "\n";
  }
  return pass ? kExitPass : kExitViolation;
}

int OracleTranslate(const Options& o, std::ostream& out) {
  const Dilator omega = OmegaDilator();
  Token s = ParseDerivTerm(*omega, 0, o.term);
  CnfOrdinal a = TranslateTerm(s);
  if (o.json) out << json{{"term", s.str()}, {"cnf", a.str(o.unicode)}}.dump() << "\n";
  else out << a.str(o.unicode) << "\n";
  return kExitPass;
}

int SuiteAll(const Options& o, std::ostream& out) {
  return Emit(RunAllSuites(ConfigForBound(o.bound_text, o.seed)), o, out);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coded dilators, their derivatives and ordinal checks", "dilator"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto json_flag = [&o](CLI::App* c) { c->add_flag("--json", o.json, "Machine-readable output"); };
  auto dilator_opt = [&o](CLI::App* c) {
    c->add_option("--dilator", o.dilator, "Dilator name (see `dilators list`)")->capture_default_str();
  };

  CLI::App* dilators = app.add_subcommand("dilators", "Registered dilators");
  dilators->require_subcommand(1);
  CLI::App* list = dilators->add_subcommand("list", "List names and capabilities");
  json_flag(list);
  list->callback([&] { action = [&] { return DilatorsList(o, out); }; });

  CLI::App* ext = app.add_subcommand("ext", "Extensions to arbitrary orders");
  ext->require_subcommand(1);
  CLI::App* ext_cmp = ext->add_subcommand("compare", "Compare two (ext (set ...) tok) terms");
  dilator_opt(ext_cmp);
  ext_cmp->add_option("--order", o.order, "Order size k, or nat")->required();
  ext_cmp->add_option("--a,--left", o.a)->required();
  ext_cmp->add_option("--b,--right", o.b)->required();
  json_flag(ext_cmp);
  ext_cmp->callback([&] { action = [&] { return ExtCompareCmd(o, out); }; });

  CLI::App* deriv = app.add_subcommand("deriv", "Derivative term systems");
  deriv->require_subcommand(1);
  CLI::App* enumerate = deriv->add_subcommand("enumerate", "List derivative terms, ascending");
  dilator_opt(enumerate);
  enumerate->add_option("--n", o.n)->capture_default_str();
  enumerate->add_option("--bound", o.bound, "Size bound")->capture_default_str();
  json_flag(enumerate);
  enumerate->callback([&] { action = [&] { return DerivEnumerate(o, out); }; });

  CLI::App* compare = deriv->add_subcommand("compare", "Compare two derivative terms");
  dilator_opt(compare);
  compare->add_option("--n", o.n)->capture_default_str();
  compare->add_option("--a", o.a)->required();
  compare->add_option("--b", o.b)->required();
  json_flag(compare);
  compare->callback([&] { action = [&] { return DerivCompareCmd(o, out); }; });

  CLI::App* check = deriv->add_subcommand("check", "Run a derivative suite");
  dilator_opt(check);
  check->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"linearity", "equalizer", "normality", "heights"}));
  check->add_option("--n", o.max_n, "Largest n")->capture_default_str();
  check->add_option("--bound", o.bound, "Size bound")->capture_default_str();
  check->add_option("--seed", o.seed)->capture_default_str();
  check->add_option("--samples", o.samples, "Random samples per law")->capture_default_str();
  json_flag(check);
  check->callback([&] { action = [&] { return DerivCheck(o, out); }; });

  CLI::App* chain = app.add_subcommand("chain", "Descending chain search");
  chain->require_subcommand(1);
  CLI::App* search = chain->add_subcommand("search", "Search T_n for a descending chain");
  dilator_opt(search);
  search->add_option("--n", o.n)->capture_default_str();
  search->add_option("--depth", o.depth, "Chain length")->capture_default_str();
  search->add_option("--bound", o.bound, "Largest pool bound")->capture_default_str();
  search->add_option("--budget", o.budget, "Comparison budget")->capture_default_str();
  json_flag(search);
  search->callback([&] { action = [&] { return ChainSearch(o, out); }; });

  CLI::App* compose = app.add_subcommand("compose", "Composition of dilators");
  compose->require_subcommand(1);
  CLI::App* compose_check = compose->add_subcommand("check", "Laws of outer o inner and zeta");
  compose_check->add_option("--outer,--dilator", o.dilator)->capture_default_str();
  compose_check->add_option("--inner", o.inner)->capture_default_str();
  compose_check->add_option("--n,--depth", o.max_n, "Largest n and order size")->capture_default_str();
  compose_check->add_option("--bound", o.bound, "Size bound")->capture_default_str();
  json_flag(compose_check);
  compose_check->callback([&] { action = [&] { return ComposeCheck(o, out); }; });

  CLI::App* barind = app.add_subcommand("barind", "Tree families");
  barind->require_subcommand(1);
  CLI::App* demo = barind->add_subcommand("demo", "Embed a finite tree family");
  demo->add_option("--family", o.family, "Family JSON file")->required();
  json_flag(demo);
  demo->callback([&] { action = [&] { return BarindDemo(o, out); }; });

  CLI::App* oracle = app.add_subcommand("oracle", "Cantor normal forms");
  oracle->require_subcommand(1);
  CLI::App* translate = oracle->add_subcommand("translate", "Read a closed omega term as an ordinal");
  translate->add_option("--term", o.term)->required();
  translate->add_flag("--unicode", o.unicode);
  json_flag(translate);
  translate->callback([&] { action = [&] { return OracleTranslate(o, out); }; });

  CLI::App* suite = app.add_subcommand("suite", "Suite runner");
  suite->require_subcommand(1);
  CLI::App* all = suite->add_subcommand("all", "Run every suite");
  all->add_option("--bound", o.bound_text, "small or a size bound")->capture_default_str();
  all->add_option("--seed", o.seed)->capture_default_str();
  json_flag(all);
  all->callback([&] { action = [&] { return SuiteAll(o, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace dilator::cli
