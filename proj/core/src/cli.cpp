#include "engelkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "engelkit/corpus.hpp"
#include "engelkit/verify.hpp"

#ifndef ENGELKIT_VERSION
#define ENGELKIT_VERSION "0.0.0"
#endif

namespace engelkit::cli {

namespace {

int cmd_list(std::size_t cap, std::ostream& out) {
  out << std::left << std::setw(10) << "label" << std::setw(42)
      << "constructor" << std::right << std::setw(6) << "order"
      << "  solvable nilpotent\n";
  for (const auto& [label, ctor] : corpus_catalog()) {
    Group g = builtin(ctor, cap);
    Subgroup whole = whole_subgroup(g);
    bool solv = is_solvable(whole);
    bool nil = is_nilpotent(whole);
    out << std::left << std::setw(10) << label << std::setw(42) << ctor
        << std::right << std::setw(6) << g.order() << "  "
        << (solv ? "yes" : "no") << "       " << (nil ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

nlohmann::ordered_json analysis_json(const GroupAnalysis& a, bool elements) {
  nlohmann::ordered_json j;
  j["group"] = a.group.label();
  j["degree"] = a.group.degree();
  j["order"] = a.group.order();
  j["exponent"] = a.group_exponent;
  j["nilpotent"] = a.nilpotent;
  j["solvable"] = a.solvable;
  j["fitting_order"] = a.fitting_subgroup.order();
  j["fitting_index"] = a.group.order() / a.fitting_subgroup.order();
  if (a.height)
    j["fitting_height"] = *a.height;
  else
    j["fitting_height"] = "NONE";
  j["gamma_inf_order"] = a.gamma_inf.order();
  j["quotient_exponent"] = a.quotient_exponent;
  j["m"] = a.profile.m;
  if (elements) {
    j["elements"] = nlohmann::ordered_json::array();
    for (const EngelRecord& r : a.profile.records) {
      nlohmann::ordered_json je;
      je["g"] = to_cycles(a.group.element(r.g));
      je["stable_order"] = r.stable_order;
      je["n_stab"] = r.n_stab;
      je["engel"] = r.engel;
      j["elements"].push_back(std::move(je));
    }
  }
  return j;
}

int cmd_analyze(const std::string& selector, const std::string& json_path,
                bool elements, std::size_t cap, std::ostream& out) {
  Group g = resolve_group(selector, cap);
  VerifyOptions opts;
  opts.cap = cap;
  GroupAnalysis a = analyze_group(g, opts);

  out << "group: " << g.label() << "\n";
  out << "degree: " << g.degree() << "\n";
  out << "order: " << g.order() << "\n";
  out << "exponent: " << a.group_exponent << "\n";
  out << "nilpotent: " << (a.nilpotent ? "true" : "false") << "\n";
  out << "solvable: " << (a.solvable ? "true" : "false") << "\n";
  out << "fitting_order: " << a.fitting_subgroup.order() << "\n";
  out << "fitting_index: " << g.order() / a.fitting_subgroup.order() << "\n";
  out << "fitting_height: ";
  if (a.height)
    out << *a.height;
  else
    out << "NONE";
  out << "\n";
  out << "gamma_inf_order: " << a.gamma_inf.order() << "\n";
  out << "quotient_exponent: " << a.quotient_exponent << "\n";
  out << "m: " << a.profile.m << "\n";
  if (elements) {
    for (const EngelRecord& r : a.profile.records)
      out << "  g=" << to_cycles(g.element(r.g)) << " |E(g)|="
          << r.stable_order << " n_stab=" << r.n_stab << " engel="
          << (r.engel ? "true" : "false") << "\n";
  }
  if (!json_path.empty()) {
    std::ofstream f(json_path, std::ios::binary);
    if (!f) throw Error("cannot write " + json_path);
    f << analysis_json(a, elements).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_engel(const std::string& selector, const std::string& element,
              std::size_t cap, std::ostream& out) {
  Group g = resolve_group(selector, cap);
  Perm x = parse_cycles(element, g.degree());
  if (!g.contains(x))
    throw Error("element " + to_cycles(x) + " is not in " + g.label());
  Subgroup whole = whole_subgroup(g);
  EngelStable st = stable_engel_subgroup(whole, x);
  bool engel = is_engel_element(whole, x);

  // show the chain of |E_n| up to stabilization; one confirming term past
  // n_stab unless the stable subgroup is trivial (it cannot drop further)
  unsigned shown = st.stable.is_trivial() ? st.n_stab : st.n_stab + 1;
  out << "group: " << g.label() << "\n";
  out << "element: " << to_cycles(x) << "\n";
  out << "E_n orders: ";
  for (unsigned n = 1; n <= shown; ++n) {
    if (n > 1) out << ",";
    out << (n <= st.orders.size() ? st.orders[n - 1] : st.stable.order());
  }
  out << "\n";
  out << "stable |E(g)|: " << st.stable.order() << "\n";
  out << "n_stab: " << st.n_stab << "\n";
  out << "engel: " << (engel ? "true" : "false") << "\n";

  // worst chain: longest terminating one, or a witness cycle when g is not
  // an Engel element
  EngelChain worst;
  ElementIndex worst_x = 0;
  bool have = false;
  for (ElementIndex xi = 0; xi < g.order(); ++xi) {
    EngelChain ch = engel_chain(whole, g.element(xi), x);
    bool better = !have ||
                  (engel ? ch.steps > worst.steps
                         : (!ch.terminates && worst.terminates));
    if (!engel && !ch.terminates && have && !worst.terminates) better = false;
    if (better) {
      worst = std::move(ch);
      worst_x = xi;
      have = true;
      if (!engel && !worst.terminates) break; // first witness is enough
    }
  }
  out << "worst chain [x=" << to_cycles(g.element(worst_x)) << "]: ";
  for (std::size_t k = 0; k < worst.trace.size(); ++k) {
    if (k) out << " -> ";
    out << to_cycles(g.element(worst.trace[k]));
  }
  if (worst.terminates)
    out << " (" << worst.steps << " steps)\n";
  else
    out << " (cycle, non-terminating)\n";
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& suites, std::uint64_t seed,
               const std::string& report_path, unsigned jobs, unsigned budget,
               std::size_t cap, std::ostream& out) {
  std::vector<std::string> selection =
      resolve_suites(suites.empty() ? std::vector<std::string>{"all"}
                                    : suites);
  VerifyOptions opts;
  opts.seed = seed;
  opts.jobs = jobs;
  opts.hall_budget = budget;
  opts.cap = cap;
  VerificationReport report = run_suites(default_corpus(cap), selection, opts);

  for (const SuiteResult& s : report.suites) {
    out << s.name << ": passed=" << s.passed() << " failed=" << s.failed()
        << " skipped=" << s.skipped() << "\n";
    for (const CaseResult& c : s.cases)
      if (c.status != Status::PASS)
        out << "  [" << status_name(c.status) << "] " << c.group << ": "
            << c.detail << "\n";
  }
  if (!report_path.empty()) {
    std::ofstream f(report_path, std::ios::binary);
    if (!f) throw Error("cannot write " + report_path);
    f << to_json(report);
  }
  out << (report.ok() ? "OK" : "FAILED") << "\n";
  return report.ok() ? kExitOk : kExitVerificationFailure;
}

int cmd_table(const std::string& out_path, std::uint64_t seed, unsigned jobs,
              std::size_t cap, std::ostream& out) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.jobs = jobs;
  opts.cap = cap;
  AnalyzedCorpus analyzed = analyze_corpus(default_corpus(cap), opts);
  std::string csv = to_csv(bound_table(analyzed));
  if (out_path.empty()) {
    out << csv;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot write " + out_path);
    f << csv;
  }
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite-group Engel/Fitting toolkit and verification harness",
               "engelkit"};
  app.set_version_flag("--version", std::string(ENGELKIT_VERSION));
  app.require_subcommand(1);

  std::size_t cap = kDefaultEnumerationCap;
  app.add_option("--max-order", cap,
                 "enumeration cap for group materialization");

  CLI::App* list = app.add_subcommand("list", "list the built-in corpus");

  CLI::App* analyze =
      app.add_subcommand("analyze", "structural profile of one group");
  std::string selector;
  std::string json_path;
  bool elements = false;
  analyze->add_option("group", selector,
                      "corpus label, builtin constructor, or group file")
      ->required();
  analyze->add_option("--json", json_path, "also write the profile as JSON");
  analyze->add_flag("--elements", elements, "include per-element records");

  CLI::App* engel = app.add_subcommand(
      "engel", "iterated-commutator chain detail for one element");
  std::string engel_selector, element;
  engel->add_option("group", engel_selector, "group selector")->required();
  engel->add_option("--element", element, "element in cycle notation")
      ->required();

  CLI::App* verify =
      app.add_subcommand("verify", "run verification suites on the corpus");
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  std::string report_path;
  unsigned jobs = 1;
  unsigned budget = 2000;
  verify->add_option("--suite", suites, "suites to run (or 'all')")
      ->delimiter(',');
  verify->add_option("--seed", seed, "seed for randomized searches");
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--budget", budget, "Hall search closure budget");

  CLI::App* table =
      app.add_subcommand("table", "emit the per-group bound table as CSV");
  std::string out_path;
  std::uint64_t table_seed = 0;
  unsigned table_jobs = 1;
  table->add_option("--out", out_path, "CSV output path (stdout if omitted)");
  table->add_option("--seed", table_seed, "seed (echoed for reproducibility)");
  table->add_option("--jobs", table_jobs, "worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list(cap, out);
    if (analyze->parsed())
      return cmd_analyze(selector, json_path, elements, cap, out);
    if (engel->parsed()) return cmd_engel(engel_selector, element, cap, out);
    if (verify->parsed())
      return cmd_verify(suites, seed, report_path, jobs, budget, cap, out);
    if (table->parsed())
      return cmd_table(out_path, table_seed, table_jobs, cap, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace engelkit::cli
