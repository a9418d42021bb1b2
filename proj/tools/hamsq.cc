// Copyright 2026 The hamsq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end for the hamsq library.
//
// Exit codes: 0 everything found / held, 1 some None or violation,
// 2 some search ran out of budget (and nothing was violated), 64 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hamsq/corpus.h"
#include "hamsq/decomposition.h"
#include "hamsq/eps.h"
#include "hamsq/error.h"
#include "hamsq/hamilton.h"
#include "hamsq/hamilton_checks.h"
#include "hamsq/harness.h"
#include "hamsq/powers.h"
#include "hamsq/serialize.h"

namespace {

using namespace hamsq;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input;
  std::string format = "text";
  std::string budget_text;
  std::string out;
  int jobs = 1;
  std::uint64_t seed = 1;

  bool json() const { return format == "json"; }

  std::uint64_t budget() const {
    std::string text = budget_text;
    if (text.empty()) {
      if (const char* env = std::getenv("HAMSQ_BUDGET")) text = env;
    }
    if (text.empty()) return kDefaultBudget;
    try {
      std::size_t used = 0;
      const double value = std::stod(text, &used);
      if (used != text.size() || value < 1) throw std::invalid_argument(text);
      return static_cast<std::uint64_t>(value);
    } catch (const std::exception&) {
      throw UsageError("bad budget '" + text + "'");
    }
  }
};

// Collects the exit status across many results.
struct Verdict {
  bool violation = false;
  bool unknown = false;

  void add(SearchStatus s) {
    violation = violation || s == SearchStatus::kNone;
    unknown = unknown || s == SearchStatus::kUnknown;
  }
  int code() const { return violation ? kExitViolation : unknown ? kExitUnknown : kExitOk; }
};

void add_common(CLI::App* cmd, Common& c, bool corpus = false) {
  cmd->add_option(corpus ? "--stream,--in" : "--in,--stream", c.input,
                  "graph6 (.g6) or edge-list (.el) file; - for stdin graph6")
      ->required();
  cmd->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--budget", c.budget_text, "search-node cap per query (HAMSQ_BUDGET)");
  cmd->add_option("--out", c.out, "write output here instead of stdout");
  cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "seed for sampled checks");
}

std::vector<Graph> load(const Common& c) {
  if (c.input == "-") return read_graphs(std::cin, GraphFormat::kGraph6);
  return read_graph_file(c.input);
}

std::vector<Vertex> parse_list(const std::string& text) {
  std::vector<Vertex> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad vertex list '" + text + "'");
    }
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

// Writes to --out or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw HamsqError(ErrorCode::kInvalidInput, "cannot write " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

Json envelope(const std::string& command, Json results) {
  Json j;
  j["schema-version"] = kSchemaVersion;
  j["command"] = command;
  j["results"] = std::move(results);
  return j;
}

// Graph-to-graph commands: square, power, subdivide, filter.
int emit_graphs(const Common& c, const std::string& command, const std::vector<Graph>& graphs) {
  Sink sink(c.out);
  if (c.json()) {
    Json results = Json::array();
    for (const auto& g : graphs) results.push_back({{"graph", graph_label(g)}});
    sink.out() << envelope(command, results).dump(2) << '\n';
  } else {
    for (const auto& g : graphs) {
      sink.out() << graph_label(g) << (g.is_simple() ? "\n" : "");
    }
  }
  return kExitOk;
}

void print_sweep(std::ostream& out, const SweepReport& r, bool json) {
  if (json) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  for (const auto& item : r.flagged) {
    if (!item.error.empty()) out << item.graph << " error " << item.error << '\n';
    for (const auto& f : item.tally.findings) {
      out << item.graph << ' ' << f.query << ' ' << outcome_name(f.outcome);
      if (!f.detail.empty()) out << ' ' << f.detail;
      out << '\n';
    }
  }
  out << r.target << ": graphs=" << r.graphs << " skipped=" << r.skipped
      << " checked=" << r.total.checked << " violated=" << r.total.violated
      << " unknown=" << r.total.unknown << " flagged=" << r.total.flagged
      << " errors=" << r.errors << '\n';
}

int sweep_code(const SweepReport& r) {
  if (r.total.violated > 0 || r.errors > 0) return kExitViolation;
  return r.total.unknown > 0 ? kExitUnknown : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hamsq: squares of graphs, EPS-graphs and F_k certificates"};
  app.require_subcommand(1);

  Common c;
  int k = 2;
  std::string a_text, v_text, w_text, zero_text, one_text, keep_text, target;
  int v = -1, w = -1;
  int min_n = 0, max_n = INT_MAX, max_m = INT_MAX, max_block = INT_MAX;
  int sample = 0;
  bool nonempty_e = false, all_orders = false;
  std::string cert_path;

  auto* square_cmd = app.add_subcommand("square", "emit G^2");
  add_common(square_cmd, c);
  auto* power_cmd = app.add_subcommand("power", "emit G^k");
  add_common(power_cmd, c);
  power_cmd->add_option("--k", k, "exponent")->required();
  auto* blocks_cmd = app.add_subcommand("blocks", "blocks, cutvertices and chain type");
  add_common(blocks_cmd, c);
  auto* dt_cmd = app.add_subcommand("dt", "DT-graph test and V2");
  add_common(dt_cmd, c);
  auto* subdivide_cmd = app.add_subcommand("subdivide", "emit the full subdivision S(G)");
  add_common(subdivide_cmd, c);
  auto* filter_cmd = app.add_subcommand("filter", "keep graphs meeting every predicate");
  add_common(filter_cmd, c, true);
  filter_cmd->add_option("--keep", keep_text,
                         "comma list of connected, two-connected, dt, block-chain, tree");
  filter_cmd->add_option("--min-n", min_n);
  filter_cmd->add_option("--max-n", max_n);
  filter_cmd->add_option("--max-m", max_m);
  filter_cmd->add_option("--max-block", max_block, "largest block order");

  auto* eps_cmd = app.add_subcommand("eps-find", "search an EPS-graph");
  add_common(eps_cmd, c);
  eps_cmd->add_option("--zero", zero_text, "vertices with d_P = 0");
  eps_cmd->add_option("--at-most-one", one_text, "vertices with d_P <= 1");
  eps_cmd->add_flag("--nonempty-e", nonempty_e, "require E to have an edge");
  auto* jeps_cmd = app.add_subcommand("jeps-find", "search a JEPS-graph with trail ends v, w");
  add_common(jeps_cmd, c);
  jeps_cmd->add_option("--v", v)->required();
  jeps_cmd->add_option("--w", w)->required();
  jeps_cmd->add_option("--zero", zero_text, "vertices with d_P = 0");
  jeps_cmd->add_option("--at-most-one", one_text, "vertices with d_P <= 1");
  auto* wcycle_cmd = app.add_subcommand("wcycle", "a W-maximal cycle");
  add_common(wcycle_cmd, c);
  wcycle_cmd->add_option("--w", w_text, "the set W")->required();
  auto* fk_cmd = app.add_subcommand("fk", "F_k certificate for one tuple");
  add_common(fk_cmd, c);
  fk_cmd->add_option("--k", k, "k >= 3")->required();
  fk_cmd->add_option("--a", a_text, "x1,...,xk")->required();
  fk_cmd->add_option("--check", cert_path, "verify this certificate JSON instead of searching");
  auto* ham_cmd = app.add_subcommand("hamcycle", "[v; w...]-hamiltonian cycle of G^2");
  add_common(ham_cmd, c);
  ham_cmd->add_option("--v", v, "vertex needing two G-edges");
  ham_cmd->add_option("--w", w_text, "vertices needing one G-edge");

  auto* verify_cmd = app.add_subcommand("verify", "check a statement over a corpus");
  add_common(verify_cmd, c, true);
  std::vector<std::string> names;
  for (const auto& t : verify_targets()) names.push_back(t.name);
  verify_cmd->add_option("target", target, "statement")->required()->check(CLI::IsMember(names));
  verify_cmd->add_option("--sample", sample, "random instances (theoremA..D) instead of all");
  verify_cmd->add_flag("--all-orders", all_orders, "F_k: search every ordered tuple");
  auto* hunt_cmd = app.add_subcommand("hunt-fk", "look for F_k failures");
  add_common(hunt_cmd, c, true);
  hunt_cmd->add_option("--k", k, "k >= 3")->required();
  hunt_cmd->add_flag("--all-orders", all_orders, "search every ordered tuple");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    const std::uint64_t budget = c.budget();
    if (*filter_cmd) {
      CorpusFilter f;
      for (const auto& name : CLI::detail::split(keep_text, ',')) {
        if (name.empty()) continue;
        auto p = parse_predicate(name);
        if (!p) throw UsageError("unknown predicate '" + name + "'");
        f.predicates.push_back(*p);
      }
      f.min_n = min_n;
      f.max_n = max_n;
      f.max_size = max_m;
      f.max_block_order = max_block;
      // Streams, so that enumerations larger than memory pass through.
      std::ifstream file;
      if (c.input != "-") {
        file.open(c.input);
        if (!file) throw HamsqError(ErrorCode::kInvalidInput, "cannot open " + c.input);
      }
      GraphReader reader(c.input == "-" ? std::cin : file,
                         c.input == "-" ? GraphFormat::kGraph6 : format_for_path(c.input));
      Sink sink(c.out);
      Json results = Json::array();
      while (auto g = reader.next()) {
        if (!f.accepts(*g)) continue;
        if (c.json()) {
          results.push_back({{"graph", graph_label(*g)}});
        } else {
          sink.out() << graph_label(*g) << (g->is_simple() ? "\n" : "");
        }
      }
      if (c.json()) sink.out() << envelope("filter", results).dump(2) << '\n';
      return kExitOk;
    }
    const auto graphs = load(c);
    Verdict verdict;

    if (*square_cmd || *power_cmd || *subdivide_cmd) {
      std::vector<Graph> out;
      for (const auto& g : graphs) {
        out.push_back(*square_cmd ? square(g) : *power_cmd ? power(g, k) : full_subdivision(g));
      }
      return emit_graphs(c, app.get_subcommands().front()->get_name(), out);
    }

    Sink sink(c.out);
    auto& out = sink.out();

    if (*verify_cmd || *hunt_cmd) {
      SweepReport report;
      if (*hunt_cmd) {
        report = hunt_fk_failures(graphs, k, budget, c.jobs, !all_orders);
      } else if (sample > 0) {
        report = sample_target(graphs, target, sample, c.seed, budget, c.jobs);
      } else if (all_orders && (target == "theorem2" || target == "theoremG")) {
        const VerifyTarget& t = *find_target(target);
        report = run_sweep(graphs, target, t.applies, [&](const Graph& g) {
          return target == "theorem2" ? verify_theorem2(g, budget, false)
                                      : verify_theorem_g(g, budget, false);
        }, c.jobs);
      } else {
        report = run_target(graphs, *find_target(target), budget, c.jobs);
      }
      print_sweep(out, report, c.json());
      // A hunt reports refutations as findings; only Unknown fails it.
      if (*hunt_cmd) return report.total.unknown > 0 || report.errors > 0 ? kExitUnknown : kExitOk;
      return sweep_code(report);
    }

    Json results = Json::array();
    for (const auto& g : graphs) {
      const std::string label = graph_label(g);
      if (*blocks_cmd) {
        const auto forest = block_forest(g);
        std::string chain = "disconnected";
        if (is_connected(g)) {
          const auto kind = is_block_chain(g);
          chain = kind == ChainKind::kTrivial      ? "trivial"
                  : kind == ChainKind::kNonTrivial ? "non-trivial"
                                                   : "not-a-chain";
        }
        if (c.json()) {
          Json j = to_json(forest);
          j["graph"] = label;
          j["two-connected"] = is_two_connected(g);
          j["chain"] = chain;
          results.push_back(j);
        } else {
          out << label << " blocks=" << forest.blocks.size()
              << " cutvertices=" << join(forest.cutvertices.members()) << " chain=" << chain
              << " two-connected=" << (is_two_connected(g) ? "yes" : "no") << '\n';
        }
      } else if (*dt_cmd) {
        const bool dt = is_dt_graph(g);
        const auto twos = v2(g).members();
        if (c.json()) {
          results.push_back({{"graph", label}, {"dt", dt}, {"v2", twos}});
        } else {
          out << label << " dt=" << (dt ? "yes" : "no") << " v2=" << join(twos) << '\n';
        }
      } else if (*eps_cmd || *jeps_cmd) {
        DegreeConstraint dc = DegreeConstraint::at_most_one(parse_list(one_text));
        for (Vertex z : parse_list(zero_text)) dc.set_cap(z, PCap::kZero);
        dc.nonempty_e = nonempty_e;
        Json witness;
        std::string digest;
        SearchStatus status;
        if (*eps_cmd) {
          auto r = find_eps(g, dc, budget);
          status = r.status;
          if (r.found()) {
            witness = to_json(*r.witness);
            digest = "E=" + join(r.witness->e_edges) + " P=" + join(r.witness->p_edges);
          }
        } else {
          auto r = find_jeps(g, v, w, dc, budget);
          status = r.status;
          if (r.found()) {
            witness = to_json(*r.witness);
            digest = "J=" + join(r.witness->j_edges) + " E=" + join(r.witness->e_edges) +
                     " P=" + join(r.witness->p_edges);
          }
        }
        verdict.add(status);
        if (c.json()) {
          results.push_back({{"graph", label}, {"result", status_name(status)}, {"witness", witness}});
        } else {
          out << label << ' ' << status_name(status) << (digest.empty() ? "" : " " + digest) << '\n';
        }
      } else if (*wcycle_cmd) {
        const VertexSet ws(parse_list(w_text));
        const auto best = best_w_cycle(g, ws);
        if (c.json()) {
          results.push_back({{"graph", label},
                             {"cycle", best.cycle.vertices},
                             {"edges", best.cycle.edges},
                             {"count", best.count},
                             {"sound", best.sound},
                             {"certified", best.certified}});
        } else {
          out << label << " cycle=" << join(best.cycle.vertices) << " count=" << best.count
              << " sound=" << (best.sound ? "yes" : "no")
              << " certified=" << (best.certified ? "yes" : "no") << '\n';
        }
      } else if (*fk_cmd) {
        const FkQuery q{g, k, parse_list(a_text)};
        validate_query(q);
        if (!cert_path.empty()) {
          std::ifstream in(cert_path);
          if (!in) throw HamsqError(ErrorCode::kInvalidInput, "cannot open " + cert_path);
          const auto report = verify_certificate(q, certificate_from_json(Json::parse(in)));
          verdict.violation = verdict.violation || !report;
          out << label << (report ? " valid" : " invalid " + report.violation) << '\n';
          continue;
        }
        const auto r = check_fk(q, budget);
        verdict.add(r.status);
        if (c.json()) {
          Json j = r.found() ? to_json(q, *r.witness) : Json::object();
          j["result"] = status_name(r.status);
          j["graph"] = label;
          results.push_back(j);
        } else {
          out << label << " A=" << join(q.a) << ' ' << status_name(r.status);
          if (r.found()) {
            out << " path=" << join(r.witness->path) << " witnesses=";
            bool first = true;
            for (const auto& [i, e] : r.witness->witnesses) {
              out << (first ? "" : ",") << i << ':' << e;
              first = false;
            }
          }
          out << '\n';
        }
      } else if (*ham_cmd) {
        const HamCycleConstraint hc{v, parse_list(w_text)};
        const auto r = ham_cycle_in_square(g, hc, budget);
        verdict.add(r.status);
        if (c.json()) {
          Json j{{"graph", label}, {"result", status_name(r.status)}};
          if (r.found()) j["cycle"] = r.witness->vertices;
          results.push_back(j);
        } else {
          out << label << ' ' << status_name(r.status);
          if (r.found()) out << " cycle=" << join(r.witness->vertices);
          out << '\n';
        }
      }
    }
    if (c.json()) out << envelope(app.get_subcommands().front()->get_name(), results).dump(2) << '\n';
    return verdict.code();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const HamsqError& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kInvalidQuery:
      case ErrorCode::kInvalidK:
      case ErrorCode::kSameVertex:
      case ErrorCode::kVertexOutOfRange:
        return kExitUsage;
      default:
        return kExitViolation;
    }
  }
}
