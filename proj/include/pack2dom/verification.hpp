#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "pack2dom/bounds.hpp"
#include "pack2dom/canonical.hpp"
#include "pack2dom/domination.hpp"
#include "pack2dom/enumeration.hpp"
#include "pack2dom/family.hpp"
#include "pack2dom/graph.hpp"
#include "pack2dom/packing.hpp"
#include "pack2dom/subgraph.hpp"

namespace pack2dom {

using Json = nlohmann::ordered_json;

enum class Claim : int {
  eq1,           // gamma <= beta
  eq2lo,         // ceil(nu2 / 2) <= beta
  eq2hi,         // beta <= nu2 - 1
  eq3,           // gamma <= nu2 - 1
  thm_main,      // gamma = nu2 - 1  <=>  member of the extremal tree family
  lem_connected, // G[R] connected for a maximum R  =>  gamma <= nu2 - 2
  lem_forest,    // gamma = nu2 - 1  =>  G[R] acyclic for every maximum R
  prop_nu2_2,    // nu2 = 2  <=>  beta = 1
  prop_nu2_3,    // nu2 = 3  =>  beta = 2
  prop_nu2_4,    // nu2 = 4  =>  beta <= 3
};

inline constexpr std::size_t kClaimCount = 10;

inline constexpr std::array<const char*, kClaimCount> kClaimIds = {
    "eq1",     "eq2lo",         "eq2hi",      "eq3",        "thm-main",
    "lem-connected", "lem-forest", "prop-nu2-2", "prop-nu2-3", "prop-nu2-4"};

inline const char* claim_id(Claim c) { return kClaimIds[static_cast<std::size_t>(c)]; }

enum class Verdict { pass, fail, na };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::na: return "na";
  }
  return "na";
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "na") return Verdict::na;
  throw std::invalid_argument("unknown verdict: " + s);
}

inline Verdict holds(bool b) { return b ? Verdict::pass : Verdict::fail; }

struct Invariants {
  int gamma = 0;
  int beta = 0;
  int alpha = 0;
  int nu2 = 0;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

inline Invariants compute_invariants(const Graph& g, const SolverBounds& bounds = default_bounds()) {
  Invariants inv;
  inv.gamma = gamma_exact(g, bounds).gamma;
  const BetaResult cover = beta_exact(g, bounds);
  inv.beta = cover.beta;
  inv.alpha = g.order() - cover.beta;
  inv.nu2 = nu2_number(g);
  return inv;
}

struct InequalityFlags {
  Verdict eq1 = Verdict::na;
  Verdict eq2lo = Verdict::na;
  Verdict eq2hi = Verdict::na;
  Verdict eq3 = Verdict::na;
};

/// gamma <= beta needs no isolated vertices. The nu2 bounds are stated for
/// connected graphs; the upper bounds additionally need at least two edges
/// (K2 has beta = gamma = nu2 = 1).
inline InequalityFlags check_inequalities(const Graph& g, const Invariants& inv) {
  InequalityFlags f;
  if (g.size() == 0) return f;
  if (degree_profile(g).min_degree > 0) f.eq1 = holds(inv.gamma <= inv.beta);
  if (!is_connected(g)) return f;
  f.eq2lo = holds((inv.nu2 + 1) / 2 <= inv.beta);
  if (g.size() >= 2) {
    f.eq2hi = holds(inv.beta <= inv.nu2 - 1);
    f.eq3 = holds(inv.gamma <= inv.nu2 - 1);
  }
  return f;
}

/// Standing hypotheses of the characterization: connected, more edges than
/// nu2 (so some vertex has degree >= 3), and nu2 >= 5.
inline bool in_theorem_scope(const Graph& g, const Invariants& inv) {
  return is_connected(g) && g.size() > inv.nu2 && inv.nu2 >= 5;
}

inline Verdict check_theorem_equality(const Graph& g, const Invariants& inv,
                                      const Recognition& recognition) {
  if (!in_theorem_scope(g, inv)) return Verdict::na;
  const bool equality = inv.gamma == inv.nu2 - 1;
  const bool member = recognition.accepted() && recognition.params->r == inv.nu2;
  return holds(equality == member);
}

inline Verdict check_theorem_equality(const Graph& g, const Invariants& inv) {
  return check_theorem_equality(g, inv, recognize(g));
}

/// For every maximum 2-packing R with G[R] connected, gamma <= nu2 - 2.
/// When gamma <= nu2 - 2 already holds the implication is true for every R
/// and the packings are not enumerated.
inline Verdict check_lemma_connected_packing(const Graph& g, const Invariants& inv,
                                             const SolverBounds& bounds = default_bounds()) {
  if (!in_theorem_scope(g, inv) || g.size() > bounds.oracle_edges) return Verdict::na;
  if (inv.gamma <= inv.nu2 - 2) return Verdict::pass;
  for (const TwoPacking& r : enumerate_max_2packings(g, bounds)) {
    if (edge_subgraph(g, r.edges()).components().size() == 1) return Verdict::fail;
  }
  return Verdict::pass;
}

/// If gamma = nu2 - 1, every maximum 2-packing spans a forest.
inline Verdict check_lemma_forest(const Graph& g, const Invariants& inv,
                                  const SolverBounds& bounds = default_bounds()) {
  if (!is_connected(g) || g.size() <= inv.nu2 || inv.gamma != inv.nu2 - 1 ||
      g.size() > bounds.oracle_edges) {
    return Verdict::na;
  }
  for (const TwoPacking& r : enumerate_max_2packings(g, bounds)) {
    for (const ComponentKind& k : classify_components(edge_subgraph(g, r.edges()))) {
      if (k.shape != ComponentShape::path) return Verdict::fail;
    }
  }
  return Verdict::pass;
}

struct SmallNu2Flags {
  Verdict nu2_2 = Verdict::na;
  Verdict nu2_3 = Verdict::na;
  Verdict nu2_4 = Verdict::na;
};

inline SmallNu2Flags check_small_nu2(const Graph& g, const Invariants& inv) {
  SmallNu2Flags f;
  if (!is_connected(g) || g.size() <= inv.nu2) return f;
  f.nu2_2 = holds((inv.nu2 == 2) == (inv.beta == 1));
  if (inv.nu2 == 3) f.nu2_3 = holds(inv.beta == 2);
  if (inv.nu2 == 4) f.nu2_4 = holds(inv.beta <= 3);
  return f;
}

using Flags = std::array<Verdict, kClaimCount>;

struct GraphReport {
  std::string g6;  // canonical form when n <= 12, else the input string
  int n = 0;
  int m = 0;
  std::optional<Invariants> invariants;  // empty when a solver bound was hit
  std::optional<FamilyParams> family;
  bool connected = true;
  Flags flags{};
  std::string note;

  Verdict flag(Claim c) const { return flags[static_cast<std::size_t>(c)]; }

  friend bool operator==(const GraphReport&, const GraphReport&) = default;
};

inline GraphReport evaluate_graph(const Graph& g, std::string id,
                                  const SolverBounds& bounds = default_bounds()) {
  GraphReport rep;
  rep.g6 = std::move(id);
  rep.n = g.order();
  rep.m = g.size();
  rep.connected = is_connected(g);
  rep.flags.fill(Verdict::na);
  const Recognition rec = recognize(g);
  if (rec.accepted()) rep.family = rec.params;
  Invariants inv;
  try {
    inv = compute_invariants(g, bounds);
  } catch (const BoundExceeded& e) {
    rep.note = e.what();
    return rep;
  }
  rep.invariants = inv;
  auto set = [&](Claim c, Verdict v) { rep.flags[static_cast<std::size_t>(c)] = v; };
  const InequalityFlags ineq = check_inequalities(g, inv);
  set(Claim::eq1, ineq.eq1);
  set(Claim::eq2lo, ineq.eq2lo);
  set(Claim::eq2hi, ineq.eq2hi);
  set(Claim::eq3, ineq.eq3);
  set(Claim::thm_main, check_theorem_equality(g, inv, rec));
  set(Claim::lem_connected, check_lemma_connected_packing(g, inv, bounds));
  set(Claim::lem_forest, check_lemma_forest(g, inv, bounds));
  const SmallNu2Flags small = check_small_nu2(g, inv);
  set(Claim::prop_nu2_2, small.nu2_2);
  set(Claim::prop_nu2_3, small.nu2_3);
  set(Claim::prop_nu2_4, small.nu2_4);
  return rep;
}

inline Json to_json(const GraphReport& r) {
  Json j;
  j["g6"] = r.g6;
  j["n"] = r.n;
  j["m"] = r.m;
  if (r.invariants) {
    j["gamma"] = r.invariants->gamma;
    j["beta"] = r.invariants->beta;
    j["alpha"] = r.invariants->alpha;
    j["nu2"] = r.invariants->nu2;
  } else {
    j["gamma"] = nullptr;
    j["beta"] = nullptr;
    j["alpha"] = nullptr;
    j["nu2"] = nullptr;
  }
  if (r.family) {
    j["family"] = Json{{"s", r.family->s}, {"t", r.family->t}};
  } else {
    j["family"] = nullptr;
  }
  Json flags = Json::object();
  for (std::size_t i = 0; i < kClaimCount; ++i) flags[kClaimIds[i]] = to_string(r.flags[i]);
  j["flags"] = flags;
  if (!r.connected) j["connected"] = false;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline GraphReport report_from_json(const Json& j) {
  GraphReport r;
  r.g6 = j.at("g6").get<std::string>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  if (!j.at("gamma").is_null()) {
    r.invariants = Invariants{j.at("gamma").get<int>(), j.at("beta").get<int>(),
                              j.at("alpha").get<int>(), j.at("nu2").get<int>()};
  }
  if (!j.at("family").is_null()) {
    r.family = FamilyParams::make(j.at("family").at("s").get<int>(), j.at("family").at("t").get<int>());
  }
  for (std::size_t i = 0; i < kClaimCount; ++i) {
    r.flags[i] = verdict_from_string(j.at("flags").at(kClaimIds[i]).get<std::string>());
  }
  r.connected = j.value("connected", true);
  r.note = j.value("note", std::string{});
  return r;
}

struct ClaimTotals {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t na = 0;
};

struct Counterexample {
  std::string claim;
  std::string g6;
};

/// Names of the equality inventories kept by the survey.
namespace inventory {
inline constexpr const char* eq1 = "eq1-equality";            // gamma = beta
inline constexpr const char* eq2lo = "eq2lo-equality";        // ceil(nu2/2) = beta
inline constexpr const char* eq2hi = "eq2hi-equality";        // beta = nu2 - 1
inline constexpr const char* eq3 = "eq3-equality";            // gamma = nu2 - 1
inline constexpr const char* thm_main = "thm-main-equality";  // eq3 equality inside theorem scope
inline constexpr const char* small_nu2 = "small-nu2-equality";        // |E| > nu2, nu2 < 5
inline constexpr const char* max_degree_2 = "max-degree-2-equality";  // |E| = nu2
inline constexpr const char* gamma1_nu2_2 = "gamma1-nu2-2";
inline constexpr const char* nu2_3_gamma_2 = "nu2-3-gamma-2";
inline constexpr const char* nu2_4_gamma_3 = "nu2-4-gamma-3";
inline constexpr const char* nu2_3_beta_2 = "nu2-3-beta-2";
inline constexpr const char* nu2_4_beta_3 = "nu2-4-beta-3";
inline constexpr const char* family = "family-members";
}  // namespace inventory

struct SurveyReport {
  std::string corpus;
  std::size_t graphs = 0;
  std::size_t solver_na = 0;
  std::size_t skipped_disconnected = 0;
  std::array<ClaimTotals, kClaimCount> totals{};
  std::vector<Counterexample> counterexamples;
  std::map<std::string, std::vector<std::string>> inventories;

  const ClaimTotals& totals_for(Claim c) const { return totals[static_cast<std::size_t>(c)]; }
  const std::vector<std::string>& inventory(const std::string& name) const {
    static const std::vector<std::string> none;
    auto it = inventories.find(name);
    return it == inventories.end() ? none : it->second;
  }
  bool ok() const { return counterexamples.empty(); }
};

/// Folds reports into a SurveyReport. Feed reports in a fixed order for
/// reproducible lists; the totals do not depend on order.
class SurveyAccumulator {
 public:
  explicit SurveyAccumulator(std::string corpus) {
    report_.corpus = std::move(corpus);
    for (const char* name :
         {inventory::eq1, inventory::eq2lo, inventory::eq2hi, inventory::eq3, inventory::thm_main,
          inventory::small_nu2, inventory::max_degree_2, inventory::gamma1_nu2_2,
          inventory::nu2_3_gamma_2, inventory::nu2_4_gamma_3, inventory::nu2_3_beta_2,
          inventory::nu2_4_beta_3, inventory::family}) {
      report_.inventories[name];
    }
  }

  void add(const GraphReport& r) {
    ++report_.graphs;
    if (!r.invariants) ++report_.solver_na;
    for (std::size_t i = 0; i < kClaimCount; ++i) {
      ClaimTotals& t = report_.totals[i];
      switch (r.flags[i]) {
        case Verdict::pass: ++t.pass; break;
        case Verdict::fail:
          ++t.fail;
          report_.counterexamples.push_back({kClaimIds[i], r.g6});
          break;
        case Verdict::na: ++t.na; break;
      }
    }
    if (r.family) record(inventory::family, r);
    if (!r.invariants) return;
    const Invariants& inv = *r.invariants;
    auto applicable = [&](Claim c) { return r.flag(c) != Verdict::na; };
    if (applicable(Claim::eq1) && inv.gamma == inv.beta) record(inventory::eq1, r);
    if (applicable(Claim::eq2lo) && (inv.nu2 + 1) / 2 == inv.beta) record(inventory::eq2lo, r);
    if (applicable(Claim::eq2hi) && inv.beta == inv.nu2 - 1) record(inventory::eq2hi, r);
    if (applicable(Claim::eq3) && inv.gamma == inv.nu2 - 1) {
      record(inventory::eq3, r);
      if (r.m == inv.nu2) {
        record(inventory::max_degree_2, r);
      } else if (inv.nu2 >= 5) {
        record(inventory::thm_main, r);
      } else {
        record(inventory::small_nu2, r);
      }
    }
    if (r.connected && r.m > inv.nu2) {
      if (inv.gamma == 1 && inv.nu2 == 2) record(inventory::gamma1_nu2_2, r);
      if (inv.nu2 == 3 && inv.gamma == 2) record(inventory::nu2_3_gamma_2, r);
      if (inv.nu2 == 4 && inv.gamma == 3) record(inventory::nu2_4_gamma_3, r);
      if (inv.nu2 == 3 && inv.beta == 2) record(inventory::nu2_3_beta_2, r);
      if (inv.nu2 == 4 && inv.beta == 3) record(inventory::nu2_4_beta_3, r);
    }
  }

  void set_skipped(std::size_t skipped) { report_.skipped_disconnected = skipped; }

  SurveyReport finish() const { return report_; }

 private:
  void record(const char* name, const GraphReport& r) { report_.inventories[name].push_back(r.g6); }

  SurveyReport report_;
};

inline Json to_json(const SurveyReport& s) {
  Json j;
  j["corpus"] = s.corpus;
  j["graphs"] = s.graphs;
  j["solver_na"] = s.solver_na;
  j["skipped_disconnected"] = s.skipped_disconnected;
  Json claims = Json::object();
  for (std::size_t i = 0; i < kClaimCount; ++i) {
    claims[kClaimIds[i]] = Json{{"pass", s.totals[i].pass}, {"fail", s.totals[i].fail},
                                {"na", s.totals[i].na}};
  }
  j["claims"] = claims;
  Json cex = Json::array();
  for (const auto& c : s.counterexamples) cex.push_back(Json{{"claim", c.claim}, {"g6", c.g6}});
  j["counterexamples"] = cex;
  Json inv = Json::object();
  for (const auto& [name, list] : s.inventories) {
    inv[name] = Json{{"count", list.size()}, {"graphs", list}};
  }
  j["inventories"] = inv;
  return j;
}

struct SurveyOptions {
  int workers = 1;
  /// JSON-lines file of finished reports. Reports found there are reused
  /// instead of recomputed, and new ones are appended as batches complete.
  std::string checkpoint;
  std::size_t batch = 256;
  SolverBounds bounds = default_bounds();
};

struct SurveyResult {
  std::vector<GraphReport> reports;  // sorted by g6
  SurveyReport summary;
};

namespace detail {

inline std::string report_id(const StreamItem& item) {
  if (item.graph.order() > kMaxCanonicalOrder) return item.graph6;
  return canonical_form(item.graph);
}

inline std::unordered_map<std::string, GraphReport> load_checkpoint(const std::string& path) {
  std::unordered_map<std::string, GraphReport> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      GraphReport r = report_from_json(Json::parse(line));
      out.emplace(r.g6, std::move(r));
    } catch (const std::exception&) {
      // A torn final line from an interrupted run; it is recomputed.
    }
  }
  return out;
}

}  // namespace detail

/// Evaluates every graph in the stream on a pool of `workers` threads.
/// Reports are sorted by canonical form before aggregation, so the result
/// does not depend on completion order or worker count.
inline SurveyResult run_survey(GraphStream& stream, const SurveyOptions& options = {}) {
  std::unordered_map<std::string, GraphReport> cached;
  std::ofstream checkpoint;
  if (!options.checkpoint.empty()) {
    cached = detail::load_checkpoint(options.checkpoint);
    bool torn = false;
    {
      std::ifstream existing(options.checkpoint, std::ios::binary | std::ios::ate);
      if (existing && existing.tellg() > 0) {
        existing.seekg(-1, std::ios::end);
        torn = existing.get() != '\n';
      }
    }
    checkpoint.open(options.checkpoint, std::ios::app);
    if (!checkpoint) throw std::runtime_error("cannot write checkpoint " + options.checkpoint);
    // Terminate a partial last line so the next report starts fresh.
    if (torn) checkpoint << '\n';
  }

  struct Slot {
    std::size_t order;
    std::string id;
    StreamItem item;
    std::optional<GraphReport> report;
  };
  std::vector<GraphReport> reports;
  const int workers = std::max(1, options.workers);
  std::size_t seen = 0;

  while (true) {
    std::vector<Slot> batch;
    while (batch.size() < std::max<std::size_t>(1, options.batch)) {
      auto item = stream.next();
      if (!item) break;
      Slot slot{seen++, detail::report_id(*item), std::move(*item), std::nullopt};
      if (auto it = cached.find(slot.id); it != cached.end()) slot.report = it->second;
      batch.push_back(std::move(slot));
    }
    if (batch.empty()) break;

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= batch.size()) return;
        if (batch[i].report) continue;
        try {
          batch[i].report = evaluate_graph(batch[i].item.graph, batch[i].id, options.bounds);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (Slot& slot : batch) {
      if (checkpoint.is_open() && !cached.contains(slot.id)) {
        checkpoint << to_json(*slot.report).dump() << '\n';
      }
      reports.push_back(std::move(*slot.report));
    }
    if (checkpoint.is_open()) checkpoint.flush();
  }

  std::vector<std::size_t> idx(reports.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return reports[a].g6 < reports[b].g6; });
  SurveyResult result;
  result.reports.reserve(reports.size());
  for (std::size_t i : idx) result.reports.push_back(std::move(reports[i]));

  SurveyAccumulator acc(stream.descriptor());
  for (const GraphReport& r : result.reports) acc.add(r);
  acc.set_skipped(stream.skipped());
  result.summary = acc.finish();
  return result;
}

inline void write_reports(std::ostream& out, const std::vector<GraphReport>& reports) {
  for (const GraphReport& r : reports) out << to_json(r).dump() << '\n';
}

}  // namespace pack2dom
