#include "engelkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "engelkit/corpus.hpp"

#ifndef ENGELKIT_VERSION
#define ENGELKIT_VERSION "0.0.0"
#endif

namespace engelkit {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::SKIP: return "SKIP";
  }
  return "?";
}

std::size_t SuiteResult::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(),
                    [](const CaseResult& c) { return c.status == Status::PASS; }));
}
std::size_t SuiteResult::failed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(),
                    [](const CaseResult& c) { return c.status == Status::FAIL; }));
}
std::size_t SuiteResult::skipped() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(),
                    [](const CaseResult& c) { return c.status == Status::SKIP; }));
}

bool VerificationReport::ok() const {
  for (const SuiteResult& s : suites)
    if (s.failed() > 0) return false;
  return true;
}

namespace detail {

void parallel_for(std::size_t n, unsigned jobs,
                  const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(n));
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

} // namespace detail

namespace {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// per-case seed independent of job count and suite order
std::uint64_t derive_seed(std::uint64_t base, std::string_view suite,
                          std::string_view label, std::uint64_t extra = 0) {
  return splitmix64(base ^ splitmix64(fnv1a64(suite)) ^
                    splitmix64(fnv1a64(label) + extra));
}

std::vector<Subgroup> sample_normals(const Group& G, std::size_t max_count) {
  std::set<std::vector<ElementIndex>> seen;
  std::vector<Subgroup> singles;
  std::vector<Subgroup> out;
  for (ElementIndex i = 1; i < G.order() && out.size() < max_count; ++i) {
    ElementIndex gens[1] = {i};
    Subgroup n = normal_closure(G, subgroup_from_indices(G, gens));
    if (seen.insert(n.members()).second) {
      singles.push_back(n);
      out.push_back(std::move(n));
    }
  }
  for (std::size_t a = 0; a < singles.size() && out.size() < max_count; ++a)
    for (std::size_t b = a + 1;
         b < singles.size() && out.size() < max_count; ++b) {
      Subgroup j = join(singles[a], singles[b]);
      if (seen.insert(j.members()).second) out.push_back(std::move(j));
    }
  return out;
}

std::string subgroup_brief(const Subgroup& s) {
  return "order " + std::to_string(s.order());
}

} // namespace

GroupAnalysis analyze_group(const Group& G, const VerifyOptions& opts) {
  (void)opts;
  Subgroup whole = whole_subgroup(G);
  EngelProfile profile = engel_profile(whole);

  std::vector<std::pair<unsigned, Subgroup>> cores;
  detail::ClosureBuilder fit_cb(G);
  for (unsigned p : prime_factors(G.order())) {
    Subgroup c = p_core(whole, p);
    fit_cb.adjoin_all(c.gen_indices());
    if (!c.is_trivial()) cores.emplace_back(p, std::move(c));
  }
  Subgroup fit(G, fit_cb.sorted_members(), fit_cb.irredundant_gens());

  Subgroup gamma = nilpotent_residual(whole);
  bool nil = gamma.is_trivial();
  bool solv = is_solvable(whole);
  std::optional<unsigned> height = fitting_height(G);

  unsigned group_exp = exponent(whole);
  unsigned quo_exp;
  if (fit.is_whole())
    quo_exp = 1;
  else if (fit.is_trivial())
    quo_exp = group_exp; // G/1
  else
    quo_exp = exponent(whole_subgroup(quotient(G, fit).action()));

  GroupAnalysis out{G,
                    std::move(whole),
                    std::move(profile),
                    std::move(fit),
                    std::move(gamma),
                    std::move(cores),
                    nil,
                    solv,
                    height,
                    quo_exp,
                    group_exp,
                    sample_normals(G, 25)};
  return out;
}

AnalyzedCorpus analyze_corpus(const std::vector<Group>& corpus,
                              const VerifyOptions& opts) {
  std::vector<std::optional<GroupAnalysis>> slots(corpus.size());
  detail::parallel_for(corpus.size(), opts.jobs, [&](std::size_t i) {
    slots[i] = analyze_group(corpus[i], opts);
  });
  AnalyzedCorpus out;
  out.groups.reserve(corpus.size());
  for (auto& s : slots) out.groups.push_back(std::move(*s));
  return out;
}

// ---------------------------------------------------------------------------
// suites

SuiteResult suite_baer_zorn(const AnalyzedCorpus& corpus,
                            const VerifyOptions& opts) {
  SuiteResult suite{"baer_zorn", {}};
  suite.cases.resize(corpus.groups.size());
  detail::parallel_for(corpus.groups.size(), opts.jobs, [&](std::size_t i) {
    const GroupAnalysis& a = corpus.groups[i];
    CaseResult c{a.group.label(), Status::PASS, ""};
    std::size_t engel_count = 0;
    for (const EngelRecord& r : a.profile.records) {
      bool in_fitting = a.fitting_subgroup.contains(r.g);
      bool stable_trivial = r.stable_order == 1;
      if (r.engel != in_fitting || r.engel != stable_trivial) {
        c.status = Status::FAIL;
        c.detail = "element " + to_cycles(a.group.element(r.g)) +
                   ": engel=" + (r.engel ? "true" : "false") +
                   " in_fitting=" + (in_fitting ? "true" : "false") +
                   " |E(g)|=" + std::to_string(r.stable_order);
        break;
      }
      if (r.engel) ++engel_count;
    }
    bool zorn = (a.profile.m == 1) == a.nilpotent;
    if (c.status == Status::PASS && !zorn) {
      c.status = Status::FAIL;
      c.detail = "m=" + std::to_string(a.profile.m) + " but nilpotent=" +
                 (a.nilpotent ? "true" : "false");
    }
    if (c.status == Status::PASS)
      c.detail = std::to_string(2 * a.profile.records.size()) +
                 " evaluations; engel set = F(G) (" +
                 subgroup_brief(a.fitting_subgroup) + "); m=" +
                 std::to_string(a.profile.m) + "; engel elements: " +
                 std::to_string(engel_count);
    suite.cases[i] = std::move(c);
  });
  return suite;
}

SuiteResult suite_residual(const AnalyzedCorpus& corpus,
                           const VerifyOptions& opts) {
  SuiteResult suite{"residual", {}};
  suite.cases.resize(corpus.groups.size());
  detail::parallel_for(corpus.groups.size(), opts.jobs, [&](std::size_t i) {
    const GroupAnalysis& a = corpus.groups[i];
    const Group& G = a.group;
    CaseResult c{G.label(), Status::PASS, ""};

    // (a) residual = subgroup generated by coprime-order commutators
    std::vector<bool> seen(G.order(), false);
    std::vector<ElementIndex> gens;
    std::size_t pairs = 0;
    for_each_coprime_order_pair(a.whole, [&](ElementIndex x, ElementIndex y) {
      ++pairs;
      ElementIndex k = G.comm(x, y);
      if (!seen[k]) {
        seen[k] = true;
        gens.push_back(k);
      }
    });
    Subgroup generated = subgroup_from_indices(G, gens);
    if (!(generated == a.gamma_inf)) {
      c.status = Status::FAIL;
      c.detail = "coprime commutators generate order " +
                 std::to_string(generated.order()) + " != residual order " +
                 std::to_string(a.gamma_inf.order());
      suite.cases[i] = std::move(c);
      return;
    }

    // (b) residual of a quotient = image of the residual
    std::size_t quotients = 0;
    for (const Subgroup& n : a.sampled_normals) {
      Quotient q = quotient(G, n);
      Subgroup image = image_in_quotient(q, a.gamma_inf);
      Subgroup direct = nilpotent_residual(whole_subgroup(q.action()));
      ++quotients;
      if (!(image == direct)) {
        c.status = Status::FAIL;
        c.detail = "quotient by N of order " + std::to_string(n.order()) +
                   ": image of residual has order " +
                   std::to_string(image.order()) + ", residual of quotient " +
                   std::to_string(direct.order());
        suite.cases[i] = std::move(c);
        return;
      }
    }
    c.detail = "residual order " + std::to_string(a.gamma_inf.order()) +
               " from " + std::to_string(pairs) + " coprime pairs; " +
               std::to_string(quotients) + " quotients consistent";
    suite.cases[i] = std::move(c);
  });
  return suite;
}

SuiteResult suite_pcore_engel(const AnalyzedCorpus& corpus,
                              const VerifyOptions& opts) {
  SuiteResult suite{"pcore_engel", {}};
  suite.cases.resize(corpus.groups.size());
  detail::parallel_for(corpus.groups.size(), opts.jobs, [&](std::size_t i) {
    const GroupAnalysis& a = corpus.groups[i];
    const Group& G = a.group;
    CaseResult c{G.label(), Status::PASS, ""};
    std::size_t checks = 0;
    for (const auto& [p, core] : a.nontrivial_p_cores) {
      for (const EngelRecord& r : a.profile.records) {
        if (G.element_order(r.g) % p == 0) continue; // need a p'-element
        ElementIndex gens[1] = {r.g};
        Subgroup cyc = subgroup_from_indices(G, gens);
        Subgroup comm = commutator_subgroup(core, cyc);
        ++checks;
        if (!comm.subset_of(r.stable)) {
          c.status = Status::FAIL;
          c.detail = "p=" + std::to_string(p) + " g=" +
                     to_cycles(G.element(r.g)) + ": |[O_p,g]|=" +
                     std::to_string(comm.order()) + " not inside |E(g)|=" +
                     std::to_string(r.stable_order);
          suite.cases[i] = std::move(c);
          return;
        }
      }
    }
    c.detail = a.nontrivial_p_cores.empty()
                   ? "no nontrivial p-cores (vacuous)"
                   : std::to_string(checks) + " (p, p'-element) checks";
    suite.cases[i] = std::move(c);
  });
  return suite;
}

SuiteResult suite_action_bound(const AnalyzedCorpus& corpus,
                               const VerifyOptions& opts) {
  SuiteResult suite{"action_bound", {}};
  struct Triple {
    std::size_t m_loc, vu, u;
  };
  std::vector<std::vector<CaseResult>> slots(corpus.groups.size());
  std::vector<std::vector<Triple>> triples(corpus.groups.size());
  detail::parallel_for(corpus.groups.size(), opts.jobs, [&](std::size_t i) {
    const GroupAnalysis& a = corpus.groups[i];
    const Group& G = a.group;
    for (const auto& [q, core] : a.nontrivial_p_cores) {
      CaseResult c{G.label() + " q=" + std::to_string(q), Status::PASS, ""};
      if (!a.solvable) {
        c.status = Status::SKIP;
        c.detail = "non-solvable group, Hall search not applicable";
        slots[i].push_back(std::move(c));
        continue;
      }
      std::optional<Subgroup> hall = hall_qprime(
          G, q, opts.hall_budget,
          derive_seed(opts.seed, "action_bound", G.label(), q));
      if (!hall) {
        c.status = Status::SKIP;
        c.detail = "Hall " + std::to_string(q) + "'-subgroup not found";
        slots[i].push_back(std::move(c));
        continue;
      }

      // V = core/Phi(core) elementary abelian, U = image of the Hall
      // subgroup; when Phi is trivial everything already lives in G
      Subgroup phi = frattini_p(core);
      std::optional<Quotient> quo;
      const Group* amb = &G;
      std::optional<Subgroup> v_store, u_store;
      if (phi.is_trivial()) {
        v_store = core;
        u_store = *hall;
      } else {
        quo.emplace(G, phi);
        amb = &quo->action();
        v_store = image_in_quotient(*quo, core);
        u_store = image_in_quotient(*quo, *hall);
      }
      const Subgroup& V = *v_store;
      const Subgroup& U = *u_store;

      std::size_t m_loc = 1;
      std::vector<ElementIndex> union_gens;
      std::vector<bool> seen(amb->order(), false);
      for (ElementIndex u : U.members()) {
        ElementIndex gens[1] = {u};
        Subgroup part =
            commutator_subgroup(V, subgroup_from_indices(*amb, gens));
        m_loc = std::max(m_loc, part.order());
        for (ElementIndex w : part.members())
          if (!seen[w]) {
            seen[w] = true;
            union_gens.push_back(w);
          }
      }
      Subgroup from_union = subgroup_from_indices(*amb, union_gens);
      Subgroup direct = commutator_subgroup(V, U);
      if (!(from_union == direct)) {
        c.status = Status::FAIL;
        c.detail = "union of [V,u] generates order " +
                   std::to_string(from_union.order()) +
                   " != direct [V,U] order " + std::to_string(direct.order());
      } else {
        c.detail = "(m_loc, |[V,U]|, |U|) = (" + std::to_string(m_loc) + ", " +
                   std::to_string(direct.order()) + ", " +
                   std::to_string(U.order()) + "); |V|=" +
                   std::to_string(V.order());
        triples[i].push_back(Triple{m_loc, direct.order(), U.order()});
      }
      slots[i].push_back(std::move(c));
    }
  });
  for (auto& group_cases : slots)
    for (CaseResult& c : group_cases) suite.cases.push_back(std::move(c));
  // envelope over instances: largest |[V,U]| and |U| seen per m_loc value
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> envelope;
  for (const auto& group_triples : triples)
    for (const Triple& t : group_triples) {
      auto& e = envelope[t.m_loc];
      e.first = std::max(e.first, t.vu);
      e.second = std::max(e.second, t.u);
    }
  std::string env = "envelope";
  for (const auto& [m_loc, e] : envelope)
    env += " m_loc=" + std::to_string(m_loc) + ":|[V,U]|<=" +
           std::to_string(e.first) + ",|U|<=" + std::to_string(e.second);
  suite.cases.push_back(CaseResult{"(instances)", Status::PASS, env});
  return suite;
}

SuiteResult suite_height2_residual(const AnalyzedCorpus& corpus,
                                   const VerifyOptions& opts) {
  SuiteResult suite{"height2_residual", {}};
  suite.cases.resize(corpus.groups.size());
  detail::parallel_for(corpus.groups.size(), opts.jobs, [&](std::size_t i) {
    const GroupAnalysis& a = corpus.groups[i];
    const Group& G = a.group;
    CaseResult c{G.label(), Status::PASS, ""};
    if (!a.solvable) {
      c.status = Status::SKIP;
      c.detail = "non-solvable group";
      suite.cases[i] = std::move(c);
      return;
    }
    if (!a.height || *a.height > 2) {
      c.status = Status::SKIP;
      c.detail = "Fitting height " +
                 (a.height ? std::to_string(*a.height) : std::string("NONE")) +
                 " > 2";
      suite.cases[i] = std::move(c);
      return;
    }

    // product over q of [F_q, Hall_q'] computed for two seeds
    auto rhs_for = [&](std::uint64_t seed_tag,
                       bool& found_all) -> Subgroup {
      detail::ClosureBuilder cb(G);
      found_all = true;
      for (const auto& [q, core] : a.nontrivial_p_cores) {
        std::optional<Subgroup> hall = hall_qprime(
            G, q, opts.hall_budget,
            derive_seed(opts.seed + seed_tag, "height2_residual", G.label(),
                        q));
        if (!hall) {
          found_all = false;
          break;
        }
        Subgroup part = commutator_subgroup(core, *hall);
        cb.adjoin_all(part.gen_indices());
      }
      return Subgroup(G, cb.sorted_members(), cb.irredundant_gens());
    };

    bool found1 = true, found2 = true;
    Subgroup rhs1 = rhs_for(0, found1);
    if (!found1) {
      c.status = Status::SKIP;
      c.detail = "Hall subgroup not found within budget";
      suite.cases[i] = std::move(c);
      return;
    }
    Subgroup rhs2 = rhs_for(0x9e37ull, found2);

    if (!(rhs1 == a.gamma_inf)) {
      c.status = Status::FAIL;
      c.detail = "product of [F_q, Hall_q'] has order " +
                 std::to_string(rhs1.order()) + " != residual order " +
                 std::to_string(a.gamma_inf.order());
    } else {
      c.detail = "residual order " + std::to_string(a.gamma_inf.order()) +
                 " over " + std::to_string(a.nontrivial_p_cores.size()) +
                 " primes; second Hall choice " +
                 (found2 && rhs2 == rhs1 ? "agrees" : "differs");
    }
    suite.cases[i] = std::move(c);
  });
  return suite;
}

SuiteResult suite_coprime_action(const AnalyzedCorpus& corpus,
                                 const VerifyOptions& opts) {
  SuiteResult suite{"coprime_action", {}};
  suite.cases.resize(corpus.groups.size());
  detail::parallel_for(corpus.groups.size(), opts.jobs, [&](std::size_t i) {
    const GroupAnalysis& a = corpus.groups[i];
    const Group& G = a.group;
    CaseResult c{G.label(), Status::PASS, ""};
    std::size_t checks = 0;
    for (const Subgroup& b : a.sampled_normals) {
      bool abelian = is_abelian(b);
      for (ElementIndex alpha = 0; alpha < G.order(); ++alpha) {
        if (std::gcd<std::size_t>(G.element_order(alpha), b.order()) != 1)
          continue;
        ElementIndex gens[1] = {alpha};
        Subgroup cyc = subgroup_from_indices(G, gens);
        Subgroup t1 = commutator_subgroup(b, cyc);
        Subgroup t2 = commutator_subgroup(t1, cyc);
        ++checks;
        if (!(t1 == t2)) {
          c.status = Status::FAIL;
          c.detail = "[B,a] != [[B,a],a] for B order " +
                     std::to_string(b.order()) + ", a=" +
                     to_cycles(G.element(alpha));
          suite.cases[i] = std::move(c);
          return;
        }
        if (abelian) {
          std::vector<ElementIndex> fixed;
          for (ElementIndex x : b.members())
            if (G.conj(x, alpha) == x) fixed.push_back(x);
          Subgroup cent = subgroup_from_members(G, std::move(fixed));
          if (t1.order() * cent.order() != b.order() ||
              !intersect(t1, cent).is_trivial()) {
            c.status = Status::FAIL;
            c.detail = "abelian decomposition fails for B order " +
                       std::to_string(b.order()) + ", a=" +
                       to_cycles(G.element(alpha)) + ": |[B,a]|=" +
                       std::to_string(t1.order()) + " |C_B(a)|=" +
                       std::to_string(cent.order());
            suite.cases[i] = std::move(c);
            return;
          }
        }
      }
    }
    c.detail = std::to_string(checks) + " coprime (B, a) pairs";
    suite.cases[i] = std::move(c);
  });
  return suite;
}

unsigned long long centralizer_class_bound(unsigned c, unsigned d) {
  unsigned long long cc = c;
  return static_cast<unsigned long long>(d) * cc * (cc + 1) / 2 -
         cc * (cc - 1) / 2;
}

SuiteResult suite_hall_nilpotency(const AnalyzedCorpus&,
                                  const VerifyOptions& opts) {
  struct Instance {
    const char* ctor;
    bool b_is_fitting; // otherwise B = A
    unsigned d;
  };
  static const Instance kInstances[] = {
      {"cyclic(12)", false, 1},
      {"dihedral(4)", false, 1},
      {"quaternion8", false, 2},
      {"wreath_c2_c2", false, 1},
      {"symmetric(4)", true, 2},
      {"alternating(4)", true, 1},
      {"symmetric(3)", true, 3},
      {"frobenius(7,3)", true, 2},
      {"direct_product(symmetric(3),cyclic(2))", true, 2},
      {"direct_product(dihedral(4),symmetric(3))", true, 2},
  };

  SuiteResult suite{"hall_nilpotency", {}};
  suite.cases.resize(std::size(kInstances));
  detail::parallel_for(std::size(kInstances), opts.jobs, [&](std::size_t k) {
    const Instance& inst = kInstances[k];
    Group A = builtin(inst.ctor, opts.cap);
    Subgroup whole = whole_subgroup(A);
    Subgroup B = inst.b_is_fitting ? fitting(whole) : whole;
    CaseResult c{A.label() + " B=" + (inst.b_is_fitting ? "F(A)" : "A") +
                     " d=" + std::to_string(inst.d),
                 Status::PASS, ""};

    std::optional<unsigned> cls = nilpotency_class(B);
    if (!cls || !is_normal(A, B)) {
      c.status = Status::FAIL;
      c.detail = "instance invalid: B must be normal nilpotent";
      suite.cases[k] = std::move(c);
      return;
    }
    unsigned cval = *cls;
    Subgroup bprime = commutator_subgroup(B, B);

    SeriesRecord lcs = lower_central_series(whole);
    const Subgroup& gamma_d =
        lcs.terms[std::min<std::size_t>(inst.d - 1, lcs.terms.size() - 1)];

    std::vector<ElementIndex> members;
    for (ElementIndex x = 0; x < A.order(); ++x) {
      bool ok = true;
      for (ElementIndex w : gamma_d.gen_indices())
        if (!bprime.contains(A.comm(w, x))) {
          ok = false;
          break;
        }
      if (ok) members.push_back(x);
    }
    std::optional<Subgroup> centralizer_sub;
    try {
      centralizer_sub = subgroup_from_members(A, std::move(members));
    } catch (const Error&) {
      c.status = Status::FAIL;
      c.detail = "computed element set is not a subgroup";
      suite.cases[k] = std::move(c);
      return;
    }
    const Subgroup& C = *centralizer_sub;

    std::optional<unsigned> c_class = nilpotency_class(C);
    unsigned long long bound = centralizer_class_bound(cval, inst.d);
    if (!c_class) {
      c.status = Status::FAIL;
      c.detail = "C is not nilpotent (order " + std::to_string(C.order()) +
                 ")";
      suite.cases[k] = std::move(c);
      return;
    }
    if (*c_class > bound) {
      c.status = Status::FAIL;
      c.detail = "class(C)=" + std::to_string(*c_class) + " exceeds bound " +
                 std::to_string(bound);
      suite.cases[k] = std::move(c);
      return;
    }

    std::size_t k_order;
    if (bprime.is_trivial()) {
      k_order = gamma_d.order();
    } else {
      Quotient q = quotient(A, bprime);
      SeriesRecord qlcs = lower_central_series(whole_subgroup(q.action()));
      k_order =
          qlcs.terms[std::min<std::size_t>(inst.d - 1, qlcs.terms.size() - 1)]
              .order();
    }
    c.detail = "c=" + std::to_string(cval) + " class(C)=" +
               std::to_string(*c_class) + " <= f(c,d)=" +
               std::to_string(bound) + "; [A:C]=" +
               std::to_string(A.order() / C.order()) +
               "; |gamma_d(A/B')|=" + std::to_string(k_order);
    suite.cases[k] = std::move(c);
  });
  return suite;
}

SuiteResult suite_inheritance(const AnalyzedCorpus& corpus,
                              const VerifyOptions& opts) {
  SuiteResult suite{"inheritance", {}};
  suite.cases.resize(corpus.groups.size());
  detail::parallel_for(corpus.groups.size(), opts.jobs, [&](std::size_t i) {
    const GroupAnalysis& a = corpus.groups[i];
    const Group& G = a.group;
    CaseResult c{G.label(), Status::PASS, ""};
    std::size_t m = a.profile.m;

    std::size_t quotient_sections = 0, subgroup_sections = 0;
    for (const Subgroup& n : a.sampled_normals) {
      Quotient q = quotient(G, n);
      std::size_t mq = engel_m(whole_subgroup(q.action()));
      ++quotient_sections;
      if (mq > m) {
        c.status = Status::FAIL;
        c.detail = "quotient by N of order " + std::to_string(n.order()) +
                   " has m=" + std::to_string(mq) + " > " + std::to_string(m);
        suite.cases[i] = std::move(c);
        return;
      }
    }

    // cyclic and two-generator subgroup samples
    std::mt19937_64 rng(derive_seed(opts.seed, "inheritance", G.label()));
    std::set<std::vector<ElementIndex>> seen;
    std::vector<Subgroup> samples;
    auto add_sample = [&](std::vector<ElementIndex> gens) {
      Subgroup h = subgroup_from_indices(G, gens);
      if (seen.insert(h.members()).second) samples.push_back(std::move(h));
    };
    if (G.order() > 1) {
      for (int t = 0; t < 4; ++t)
        add_sample({static_cast<ElementIndex>(1 + rng() % (G.order() - 1))});
      for (int t = 0; t < 3; ++t)
        add_sample({static_cast<ElementIndex>(1 + rng() % (G.order() - 1)),
                    static_cast<ElementIndex>(1 + rng() % (G.order() - 1))});
    }
    for (const Subgroup& h : samples) {
      std::size_t mh = h.is_whole() ? m : engel_m(h);
      ++subgroup_sections;
      if (mh > m) {
        c.status = Status::FAIL;
        c.detail = "subgroup of order " + std::to_string(h.order()) +
                   " has m=" + std::to_string(mh) + " > " + std::to_string(m);
        suite.cases[i] = std::move(c);
        return;
      }
    }
    c.detail = "m=" + std::to_string(m) + "; " +
               std::to_string(quotient_sections) + " quotients, " +
               std::to_string(subgroup_sections) + " subgroups within bound";
    suite.cases[i] = std::move(c);
  });
  return suite;
}

std::vector<BoundTableRow> bound_table(const AnalyzedCorpus& corpus) {
  std::vector<BoundTableRow> rows;
  rows.reserve(corpus.groups.size());
  for (const GroupAnalysis& a : corpus.groups) {
    BoundTableRow r;
    r.group = a.group.label();
    r.order = a.group.order();
    r.m = a.profile.m;
    r.gamma_inf = a.gamma_inf.order();
    r.fitting_index = a.group.order() / a.fitting_subgroup.order();
    r.quotient_exponent = a.quotient_exponent;
    r.fitting_height = a.height;
    r.nilpotent = a.nilpotent;
    rows.push_back(std::move(r));
  }
  return rows;
}

SuiteResult suite_bound_table(const AnalyzedCorpus& corpus,
                              const VerifyOptions& opts) {
  (void)opts;
  SuiteResult suite{"bound_table", {}};
  std::map<std::size_t, std::size_t> envelope;
  for (const GroupAnalysis& a : corpus.groups) {
    const Group& G = a.group;
    CaseResult c{G.label(), Status::PASS, ""};
    std::size_t m = a.profile.m;
    std::size_t gamma = a.gamma_inf.order();
    std::size_t fitting_index = G.order() / a.fitting_subgroup.order();

    bool divides = G.order() % gamma == 0;
    bool product_ok =
        fitting_index * a.fitting_subgroup.order() == G.order();
    bool three_way = (a.nilpotent == (m == 1)) && ((m == 1) == (gamma == 1));
    bool degenerate_ok = m != 1 || (gamma == 1 && fitting_index == 1);

    if (!divides || !product_ok || !three_way || !degenerate_ok) {
      c.status = Status::FAIL;
      c.detail = std::string("row inconsistency:") +
                 (divides ? "" : " residual order does not divide |G|;") +
                 (product_ok ? "" : " fitting index product mismatch;") +
                 (three_way ? "" : " nilpotent/m/residual equivalence;") +
                 (degenerate_ok ? "" : " m=1 must force residual=1, F=G");
    } else {
      c.detail = "m=" + std::to_string(m) + " |residual|=" +
                 std::to_string(gamma) + " [G:F]=" +
                 std::to_string(fitting_index) + " exp(G/F)=" +
                 std::to_string(a.quotient_exponent);
    }
    auto it = envelope.find(m);
    if (it == envelope.end())
      envelope[m] = gamma;
    else
      it->second = std::max(it->second, gamma);
    suite.cases.push_back(std::move(c));
  }
  std::string env = "envelope";
  for (const auto& [m, g] : envelope)
    env += " m=" + std::to_string(m) + ":|residual|<=" + std::to_string(g);
  suite.cases.push_back(CaseResult{"(corpus)", Status::PASS, env});
  return suite;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {
      "baer_zorn",        "residual",       "pcore_engel",
      "action_bound",     "height2_residual", "coprime_action",
      "hall_nilpotency",  "inheritance",    "bound_table",
  };
  return names;
}

std::vector<std::string>
resolve_suites(const std::vector<std::string>& requested) {
  std::set<std::string> selected;
  for (const std::string& r : requested) {
    if (r == "all") {
      for (const std::string& n : all_suite_names()) selected.insert(n);
      continue;
    }
    std::string name = r;
    if (r == "baer" || r == "zorn") name = "baer_zorn";
    if (std::find(all_suite_names().begin(), all_suite_names().end(), name) ==
        all_suite_names().end())
      throw Error("unknown suite '" + r + "'");
    selected.insert(name);
  }
  std::vector<std::string> out;
  for (const std::string& n : all_suite_names())
    if (selected.count(n)) out.push_back(n);
  return out;
}

VerificationReport run_suites(const std::vector<Group>& corpus,
                              const std::vector<std::string>& suites,
                              const VerifyOptions& opts) {
  VerificationReport report;
  report.tool_version = ENGELKIT_VERSION;
  report.seed = opts.seed;
  for (const Group& g : corpus) report.corpus_labels.push_back(g.label());

  AnalyzedCorpus analyzed = analyze_corpus(corpus, opts);
  for (const std::string& name : resolve_suites(suites)) {
    if (name == "baer_zorn")
      report.suites.push_back(suite_baer_zorn(analyzed, opts));
    else if (name == "residual")
      report.suites.push_back(suite_residual(analyzed, opts));
    else if (name == "pcore_engel")
      report.suites.push_back(suite_pcore_engel(analyzed, opts));
    else if (name == "action_bound")
      report.suites.push_back(suite_action_bound(analyzed, opts));
    else if (name == "height2_residual")
      report.suites.push_back(suite_height2_residual(analyzed, opts));
    else if (name == "coprime_action")
      report.suites.push_back(suite_coprime_action(analyzed, opts));
    else if (name == "hall_nilpotency")
      report.suites.push_back(suite_hall_nilpotency(analyzed, opts));
    else if (name == "inheritance")
      report.suites.push_back(suite_inheritance(analyzed, opts));
    else if (name == "bound_table")
      report.suites.push_back(suite_bound_table(analyzed, opts));
    else
      throw Error("unknown suite '" + name + "'");
  }
  return report;
}

} // namespace engelkit
