#ifndef ENGELKIT_VERIFY_HPP
#define ENGELKIT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "engelkit/engel.hpp"
#include "engelkit/structure.hpp"

namespace engelkit {

enum class Status { PASS, FAIL, SKIP };

std::string_view status_name(Status s);

struct CaseResult {
  std::string group; // group label or instance description
  Status status = Status::PASS;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CaseResult> cases;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
};

struct VerificationReport {
  std::string tool_version;
  std::uint64_t seed = 0;
  std::vector<std::string> corpus_labels;
  std::vector<SuiteResult> suites;

  bool ok() const; // no FAIL anywhere
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  unsigned hall_budget = 2000;
  unsigned jobs = 1;
  std::size_t cap = kDefaultEnumerationCap;
};

/// Everything the suites need per corpus group, computed once up front.
struct GroupAnalysis {
  Group group;
  Subgroup whole;
  EngelProfile profile; // per-element stable subgroups + Engel verdicts
  Subgroup fitting_subgroup;
  Subgroup gamma_inf; // nilpotent residual
  std::vector<std::pair<unsigned, Subgroup>> nontrivial_p_cores;
  bool nilpotent = false;
  bool solvable = false;
  std::optional<unsigned> height; // Fitting height
  unsigned quotient_exponent = 1; // exp(G/F(G))
  unsigned group_exponent = 1;
  /// Deterministic normal-subgroup sample: normal closures of single
  /// nontrivial elements plus pairwise joins, deduplicated, at most 25.
  std::vector<Subgroup> sampled_normals;
};

GroupAnalysis analyze_group(const Group& G, const VerifyOptions& opts = {});

struct AnalyzedCorpus {
  std::vector<GroupAnalysis> groups;
};

AnalyzedCorpus analyze_corpus(const std::vector<Group>& corpus,
                              const VerifyOptions& opts = {});

/// One row of the empirical bound table.
struct BoundTableRow {
  std::string group;
  std::size_t order = 0;
  std::size_t m = 1;              // max |E(g)|
  std::size_t gamma_inf = 1;      // |nilpotent residual|
  std::size_t fitting_index = 1;  // [G : F(G)]
  unsigned quotient_exponent = 1; // exp(G/F(G))
  std::optional<unsigned> fitting_height;
  bool nilpotent = false;
};

std::vector<BoundTableRow> bound_table(const AnalyzedCorpus& corpus);

// Suites. Each returns one verdict per corpus group (or per constructed
// instance), in deterministic order.
SuiteResult suite_baer_zorn(const AnalyzedCorpus&, const VerifyOptions&);
SuiteResult suite_residual(const AnalyzedCorpus&, const VerifyOptions&);
SuiteResult suite_pcore_engel(const AnalyzedCorpus&, const VerifyOptions&);
SuiteResult suite_action_bound(const AnalyzedCorpus&, const VerifyOptions&);
SuiteResult suite_height2_residual(const AnalyzedCorpus&,
                                   const VerifyOptions&);
SuiteResult suite_coprime_action(const AnalyzedCorpus&, const VerifyOptions&);
SuiteResult suite_hall_nilpotency(const AnalyzedCorpus&,
                                  const VerifyOptions&);
SuiteResult suite_inheritance(const AnalyzedCorpus&, const VerifyOptions&);
SuiteResult suite_bound_table(const AnalyzedCorpus&, const VerifyOptions&);

/// Canonical suite names in report order.
const std::vector<std::string>& all_suite_names();
/// Expand aliases ("all", "baer", "zorn"), validate, and return the
/// selection in canonical order. Throws Error on unknown names.
std::vector<std::string>
resolve_suites(const std::vector<std::string>& requested);

VerificationReport run_suites(const std::vector<Group>& corpus,
                              const std::vector<std::string>& suites,
                              const VerifyOptions& opts);

/// Nilpotency class bound d*c*(c+1)/2 - c*(c-1)/2 used by the
/// hall_nilpotency suite.
unsigned long long centralizer_class_bound(unsigned c, unsigned d);

// report.cpp
std::string to_json(const VerificationReport& report);
std::string to_csv(const std::vector<BoundTableRow>& rows);

namespace detail {
/// Index-parallel loop with deterministic result order (callers write into
/// preallocated slots). jobs==1 runs inline.
void parallel_for(std::size_t n, unsigned jobs,
                  const std::function<void(std::size_t)>& fn);
} // namespace detail

} // namespace engelkit

#endif
