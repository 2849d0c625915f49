// Command-line front end: invariants, generate, recognize, survey, enumerate.
//
// Exit codes: 0 success, 1 usage error, 2 input/parse/IO error,
// 3 solver bound exceeded, 4 invalid family parameters,
// 5 survey found a counterexample.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pack2dom/pack2dom.hpp"

namespace {

using namespace pack2dom;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kBoundExceeded = 3,
  kBadParameters = 4,
  kCounterexample = 5,
};

struct CliConfig {
  std::string input = "-";
  std::string format = "auto";
  std::string output;
  std::string out_format;
  int workers = 1;
  int builtin = 0;
  std::string corpus;
  std::string checkpoint;
  bool roles = false;
  int s = 0;
  int t = 0;
};

struct InputGraph {
  Graph graph;
  std::size_t line = 0;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "auto" picks edgelist when the first data line is two integers.
std::string sniff_format(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    long long a = 0;
    long long b = 0;
    std::string rest;
    std::istringstream probe(line);
    if ((probe >> a >> b) && !(probe >> rest)) return "edgelist";
    return "graph6";
  }
  return "graph6";
}

std::vector<InputGraph> read_graphs(const std::string& path, std::string format) {
  const std::string text = slurp(path);
  if (format == "auto") format = sniff_format(text);
  std::vector<InputGraph> out;
  std::istringstream in(text);
  if (format == "graph6") {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (detail::trim(line).empty()) continue;
      try {
        out.push_back({parse_graph6(line), line_no});
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    return out;
  }
  EdgeListReader reader(in);
  while (true) {
    const std::size_t start = reader.line_number() + 1;
    auto g = reader.next();
    if (!g) break;
    if (reader.last_duplicates() > 0) {
      std::cerr << "warning: graph starting near line " << start << ": collapsed "
                << reader.last_duplicates() << " duplicate edge(s)\n";
    }
    out.push_back({std::move(*g), start});
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string graph_label(const Graph& g) {
  return g.order() <= kMaxGraph6Order ? to_graph6(g) : std::string("-");
}

int cmd_invariants(const CliConfig& cfg) {
  const auto graphs = read_graphs(cfg.input, cfg.format);
  const std::string fmt = cfg.out_format.empty() ? "json" : cfg.out_format;
  Output out(cfg.output);
  std::ostream& os = out.stream();
  if (fmt == "csv") os << "index,g6,n,m,gamma,beta,alpha,nu2,max_degree,min_degree,connected\n";
  std::size_t index = 0;
  for (const InputGraph& in : graphs) {
    const Graph& g = in.graph;
    const Invariants inv = compute_invariants(g);
    const DegreeProfile deg = degree_profile(g);
    const bool connected = is_connected(g);
    if (fmt == "csv") {
      os << index << ',' << graph_label(g) << ',' << g.order() << ',' << g.size() << ','
         << inv.gamma << ',' << inv.beta << ',' << inv.alpha << ',' << inv.nu2 << ','
         << deg.max_degree << ',' << deg.min_degree << ',' << (connected ? "true" : "false")
         << '\n';
    } else if (fmt == "text") {
      os << "graph " << index << ": n=" << g.order() << " m=" << g.size()
         << " gamma=" << inv.gamma << " beta=" << inv.beta << " alpha=" << inv.alpha
         << " nu2=" << inv.nu2 << " max_degree=" << deg.max_degree
         << " min_degree=" << deg.min_degree << " connected=" << (connected ? "yes" : "no")
         << '\n';
    } else {
      Json j;
      j["index"] = index;
      j["g6"] = graph_label(g);
      j["n"] = g.order();
      j["m"] = g.size();
      j["gamma"] = inv.gamma;
      j["beta"] = inv.beta;
      j["alpha"] = inv.alpha;
      j["nu2"] = inv.nu2;
      j["max_degree"] = deg.max_degree;
      j["min_degree"] = deg.min_degree;
      j["connected"] = connected;
      os << j.dump() << '\n';
    }
    ++index;
  }
  return kOk;
}

Json roles_json(const FamilyRoles& r) {
  return Json{{"v", r.v}, {"p", r.p}, {"q", r.q}, {"w", r.w}};
}

int cmd_generate(const CliConfig& cfg) {
  FamilyMember member;
  try {
    member = generate_family(cfg.s, cfg.t);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadParameters;
  }
  Output out(cfg.output);
  std::ostream& os = out.stream();
  if (cfg.format == "edgelist") {
    os << to_edge_list(member.graph);
  } else {
    os << to_graph6(member.graph) << '\n';
  }
  if (cfg.roles) os << roles_json(member.roles).dump() << '\n';
  return kOk;
}

int cmd_recognize(const CliConfig& cfg) {
  const auto graphs = read_graphs(cfg.input, cfg.format);
  Output out(cfg.output);
  std::ostream& os = out.stream();
  for (const InputGraph& in : graphs) {
    const Recognition r = recognize(in.graph);
    if (cfg.out_format == "json") {
      Json j;
      j["g6"] = graph_label(in.graph);
      if (r.accepted()) {
        j["family"] = Json{{"s", r.params->s}, {"t", r.params->t}, {"r", r.params->r}};
        j["roles"] = roles_json(*r.roles);
      } else {
        j["family"] = nullptr;
        j["reason"] = to_string(r.reason);
      }
      os << j.dump() << '\n';
    } else if (r.accepted()) {
      os << to_string(*r.params) << '\n';
    } else {
      os << "reject: " << to_string(r.reason) << '\n';
    }
  }
  return kOk;
}

void write_summary_text(std::ostream& os, const SurveyReport& s) {
  os << "corpus " << s.corpus << ": " << s.graphs << " graphs";
  if (s.skipped_disconnected) os << ", " << s.skipped_disconnected << " disconnected skipped";
  if (s.solver_na) os << ", " << s.solver_na << " beyond solver bounds";
  os << '\n';
  for (std::size_t i = 0; i < kClaimCount; ++i) {
    os << "  " << kClaimIds[i] << ": pass=" << s.totals[i].pass << " fail=" << s.totals[i].fail
       << " na=" << s.totals[i].na << '\n';
  }
  for (const auto& [name, list] : s.inventories) {
    os << "  inventory " << name << ": " << list.size() << '\n';
  }
  os << (s.ok() ? "no counterexamples\n" : "COUNTEREXAMPLES FOUND\n");
  for (const auto& c : s.counterexamples) os << "  " << c.claim << ' ' << c.g6 << '\n';
}

void write_summary_csv(std::ostream& os, const SurveyReport& s) {
  os << "claim,pass,fail,na\n";
  for (std::size_t i = 0; i < kClaimCount; ++i) {
    os << kClaimIds[i] << ',' << s.totals[i].pass << ',' << s.totals[i].fail << ','
       << s.totals[i].na << '\n';
  }
}

int cmd_survey(const CliConfig& cfg) {
  std::unique_ptr<GraphStream> stream;
  if (cfg.builtin > 0) {
    stream = std::make_unique<GraphStream>(enumerate_connected(cfg.builtin));
  } else if (cfg.corpus == "-") {
    stream = std::make_unique<GraphStream>(ingest_graph6(std::cin, true, "stdin"));
  } else {
    stream = std::make_unique<GraphStream>(ingest_graph6(cfg.corpus, true));
  }
  SurveyOptions options;
  options.workers = cfg.workers;
  options.checkpoint = cfg.checkpoint;
  const SurveyResult result = run_survey(*stream, options);
  if (!cfg.output.empty()) {
    Output reports(cfg.output);
    write_reports(reports.stream(), result.reports);
  }
  const std::string fmt = cfg.out_format.empty() ? "json" : cfg.out_format;
  if (fmt == "text") {
    write_summary_text(std::cout, result.summary);
  } else if (fmt == "csv") {
    write_summary_csv(std::cout, result.summary);
  } else {
    std::cout << to_json(result.summary).dump(2) << '\n';
  }
  return result.summary.ok() ? kOk : kCounterexample;
}

int cmd_enumerate(const CliConfig& cfg) {
  GraphStream stream = enumerate_connected(cfg.builtin);
  Output out(cfg.output);
  while (auto item = stream.next()) out.stream() << item->graph6 << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domination, vertex cover and 2-packing invariants of small graphs"};
  app.require_subcommand(1);
  CliConfig cfg;

  const std::vector<std::string> in_formats{"graph6", "edgelist", "auto"};
  const std::vector<std::string> out_formats{"json", "csv", "text"};

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "input file, or - for stdin")->capture_default_str();
    sub->add_option("--format", cfg.format, "input format")
        ->check(CLI::IsMember(in_formats))
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "output file (default stdout)");
    sub->add_option("--out-format", cfg.out_format, "json, csv or text")
        ->check(CLI::IsMember(out_formats));
  };

  auto* invariants = app.add_subcommand("invariants", "gamma, beta, alpha, nu2 and degrees per graph");
  add_input(invariants);
  add_output(invariants);

  auto* generate = app.add_subcommand("generate", "emit the extremal tree T(s,t,s+4)");
  generate->add_option("-s", cfg.s, "number of extra pendant 2-paths")->required();
  generate->add_option("-t", cfg.t, "number of pendant leaves")->required();
  generate->add_option("--format", cfg.format, "graph6 or edgelist")
      ->check(CLI::IsMember(std::vector<std::string>{"graph6", "edgelist", "auto"}));
  generate->add_flag("--roles", cfg.roles, "also print the role map as JSON");
  generate->add_option("--output", cfg.output, "output file (default stdout)");

  auto* recognize_cmd = app.add_subcommand("recognize", "test membership in the extremal tree family");
  add_input(recognize_cmd);
  add_output(recognize_cmd);

  auto* survey = app.add_subcommand("survey", "check every claim over a corpus");
  auto* builtin_opt = survey->add_option("--builtin", cfg.builtin, "all connected graphs on N vertices");
  auto* corpus_opt = survey->add_option("--corpus", cfg.corpus, "graph6 corpus file, or - for stdin");
  builtin_opt->excludes(corpus_opt);
  survey->add_option("--output", cfg.output, "JSON-lines per-graph reports");
  survey->add_option("--out-format", cfg.out_format, "summary format: json, csv or text")
      ->check(CLI::IsMember(out_formats));
  survey->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  survey->add_option("--checkpoint", cfg.checkpoint, "JSON-lines checkpoint for resuming");

  auto* enumerate = app.add_subcommand("enumerate", "dump the built-in connected-graph stream as graph6");
  enumerate->add_option("--builtin", cfg.builtin, "vertex count")->required();
  enumerate->add_option("--output", cfg.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (*survey && cfg.builtin <= 0 && cfg.corpus.empty()) {
    std::cerr << "error: survey needs --builtin N or --corpus PATH\n";
    return kUsage;
  }

  try {
    if (*invariants) return cmd_invariants(cfg);
    if (*generate) return cmd_generate(cfg);
    if (*recognize_cmd) return cmd_recognize(cfg);
    if (*survey) return cmd_survey(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBoundExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}
