// edgp command-line entry point.
//
// Exit status: 0 yes or success, 1 no, 2 usage or input error.

#include "edgp/ambiguous_sat.hpp"
#include "edgp/approx.hpp"
#include "edgp/cnf.hpp"
#include "edgp/gadgets.hpp"
#include "edgp/graph_io.hpp"
#include "edgp/realizer.hpp"
#include "edgp/reproduce.hpp"
#include "edgp/sat_reductions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using edgp::Rational;
using edgp::Real;
using Json = nlohmann::ordered_json;

constexpr int kYes = 0, kNo = 1, kError = 2;

struct Globals {
  bool json = false;
  std::uint64_t seed = edgp::reproduce::kDefaultSeed;
  std::size_t cap = 1000;
  unsigned jobs = 1;
};

Json coords_json(const edgp::Realization& x) {
  Json rows = Json::array();
  for (edgp::Vertex v = 0; v < x.vertex_count(); ++v) {
    Json row = Json::array();
    for (std::size_t k = 0; k < x.dimension(); ++k) row.push_back(edgp::format_rational(x.at(v, k)));
    rows.push_back(row);
  }
  return rows;
}

Json coords_json(const edgp::RealRealization& x) {
  Json rows = Json::array();
  for (edgp::Vertex v = 0; v < x.vertex_count(); ++v) {
    Json row = Json::array();
    for (std::size_t k = 0; k < x.dimension(); ++k) row.push_back(edgp::format_real(x.at(v, k)));
    rows.push_back(row);
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const auto& s : split(text, ',')) {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw edgp::ParseError("not an integer: '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw edgp::ParseError("empty value list");
  return out;
}

// Each command fills `result` and returns the exit status; text output goes
// to stdout unless --json is set.
class Runner {
 public:
  explicit Runner(const Globals& g) : g_(g) {}

  Json result;
  std::ostringstream text;

  int finish(int code) {
    if (g_.json) std::cout << result.dump(2) << "\n";
    else std::cout << text.str();
    return code;
  }

  int reduce_sat(const std::string& dimacs, const std::string& out, const std::string& witness) {
    const auto f = edgp::load_dimacs(dimacs);
    const auto compiled = edgp::compile_3sat(f);
    edgp::save_graph(out, compiled.graph);
    result = {{"command", "reduce sat"},
              {"variables", f.variable_count()},
              {"clauses", f.clause_count()},
              {"vertices", compiled.graph.vertex_count()},
              {"edges", compiled.graph.edge_count()},
              {"graph", out}};
    text << "wrote " << out << " (" << compiled.graph.vertex_count() << " vertices, " << compiled.graph.edge_count()
         << " edges)\n";
    if (!witness.empty()) {
      const auto models = edgp::enumerate_models(f, g_.cap);
      namespace fs = std::filesystem;
      const fs::path base(witness);
      Json map = Json::object();
      for (const auto& a : models.models) {
        const std::string bits = a.bits();
        const fs::path file = base.parent_path() / (base.stem().string() + "." + bits + ".real");
        edgp::save_realization(file.string(), compiled.witness.forward(a));
        map[bits] = file.filename().string();
      }
      Json doc = {{"graph", out}, {"variables", f.variable_count()}, {"truncated", models.truncated},
                  {"realizations", map}};
      write_file(witness, doc.dump(2) + "\n");
      result["witness"] = witness;
      result["models"] = models.models.size();
      text << "wrote " << witness << " (" << models.models.size() << " model realizations"
           << (models.truncated ? ", truncated at --cap" : "") << ")\n";
    }
    return kYes;
  }

  int reduce_partition(const std::string& values, const std::string& out) {
    edgp::PartitionInstance p;
    for (long v : parse_long_list(values)) p.values.push_back(v);
    const auto red = edgp::reduce_partition(p);
    edgp::save_graph(out, red.graph);
    result = {{"command", "reduce partition"}, {"values", p.values}, {"vertices", red.graph.vertex_count()},
              {"edges", red.graph.edge_count()}, {"graph", out}};
    text << "wrote " << out << " (" << red.graph.vertex_count() << " vertices, " << red.graph.edge_count()
         << " edges)\n";
    return kYes;
  }

  int lift(const std::string& gadget, std::optional<std::size_t> dim, const std::string& in, const std::string& out) {
    const auto g = edgp::load_graph(in);
    edgp::LiftedGraph lifted;
    if (gadget == "saxe") {
      if (dim && *dim != 2) throw std::invalid_argument("the saxe lift targets dimension 2");
      lifted = edgp::lift_saxe(g);
    } else if (gadget == "clique") {
      lifted = edgp::lift_clique(g, dim.value_or(3));
    } else if (gadget == "rbar") {
      lifted = edgp::lift_rbar(g, dim.value_or(3));
    } else {
      throw std::invalid_argument("unknown gadget '" + gadget + "' (saxe, clique, rbar)");
    }
    edgp::save_graph(out, lifted.graph);
    result = {{"command", "lift"},
              {"gadget", gadget},
              {"dimension", lifted.graph.dimension()},
              {"gadgets", lifted.gadgets.size()},
              {"vertices", lifted.graph.vertex_count()},
              {"edges", lifted.graph.edge_count()},
              {"scale", edgp::format_rational(lifted.scale)},
              {"graph", out}};
    text << "wrote " << out << " (dimension " << lifted.graph.dimension() << ", " << lifted.gadgets.size()
         << " gadget copies, " << lifted.graph.vertex_count() << " vertices)\n";
    return kYes;
  }

  int expand(const std::string& in, const std::string& out) {
    const auto lifted = edgp::expand_weights(edgp::load_graph(in));
    edgp::save_graph(out, lifted.graph);
    result = {{"command", "expand-weights"},
              {"gadgets", lifted.gadgets.size()},
              {"vertices", lifted.graph.vertex_count()},
              {"edges", lifted.graph.edge_count()},
              {"graph", out}};
    text << "wrote " << out << " (" << lifted.gadgets.size() << " edges expanded)\n";
    return kYes;
  }

  int gadget_emit(const std::string& kind, std::size_t k, bool realize) {
    const auto t = edgp::make_gadget(edgp::parse_gadget_kind(kind), k);
    const std::string graph = edgp::to_text(t.graph);
    result = {{"command", "gadget emit"}, {"kind", edgp::to_string(t.kind)}, {"parameter", t.parameter},
              {"terminals", t.terminals}, {"graph", graph}};
    text << graph;
    if (realize) {
      const auto x = edgp::realize_gadget(t);
      result["realization"] = coords_json(x);
      text << edgp::to_text(x);
    }
    return kYes;
  }

  int solve(const std::string& in, bool enumerate, const std::string& out) {
    const auto g = edgp::load_graph(in);
    const auto report = enumerate ? edgp::bp_enumerate(g, g_.cap) : edgp::bp_solve(g);
    result = {{"command", "solve"},
              {"realizable", report.realizable()},
              {"count", report.realizations.size()},
              {"truncated", report.truncated},
              {"nodes", report.nodes_explored}};
    Json all = Json::array();
    for (const auto& x : report.realizations) all.push_back(coords_json(x));
    result["realizations"] = all;
    text << (report.realizable() ? "REALIZABLE" : "UNREALIZABLE");
    if (enumerate) text << " (" << report.realizations.size() << " classes" << (report.truncated ? ", cap hit" : "") << ")";
    text << "\n";
    for (const auto& x : report.realizations) text << edgp::to_text(x);
    if (!out.empty() && report.realizable()) edgp::save_realization(out, report.realizations[0]);
    return report.realizable() ? kYes : kNo;
  }

  int ambiguous(const std::string& in, const std::string& xpath) {
    const auto g = edgp::load_graph(in);
    const auto x = edgp::load_realization(xpath);
    if (!edgp::verify_realization(g, x).ok) throw std::invalid_argument("the given realization does not verify");
    const auto r = edgp::decide_ambiguous(g, x);
    result = {{"command", "ambiguous"}, {"ambiguous", r.ambiguous}, {"nodes", r.nodes_explored}};
    text << (r.ambiguous ? "AMBIGUOUS" : "UNIQUE") << "\n";
    if (r.witness) {
      result["witness"] = coords_json(*r.witness);
      text << edgp::to_text(*r.witness);
    }
    return r.ambiguous ? kYes : kNo;
  }

  int verify(const std::string& in, const std::string& xpath) {
    const auto g = edgp::load_graph(in);
    const auto x = edgp::load_realization(xpath);
    const auto r = edgp::verify_realization(g, x);
    Json bad = Json::array();
    for (const auto& v : r.edge_violations) {
      const auto& e = g.edge(v.edge);
      bad.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"residual", edgp::format_rational(v.residual)}});
      text << "edge " << e.u + 1 << " " << e.v + 1 << " off by " << edgp::format_rational(v.residual) << "\n";
    }
    Json anchors = Json::array();
    for (auto v : r.anchor_violations) {
      anchors.push_back(v + 1);
      text << "anchor " << v + 1 << " moved\n";
    }
    result = {{"command", "verify"}, {"ok", r.ok}, {"edge_violations", bad}, {"anchor_violations", anchors}};
    text << (r.ok ? "OK" : "FAILED") << "\n";
    return r.ok ? kYes : kNo;
  }

  int verify_approx(const std::string& in, const std::string& ypath, const std::string& eps) {
    const auto r = edgp::verify_approx(edgp::load_graph(in), edgp::load_real_realization(ypath), edgp::parse_real(eps));
    result = {{"command", "verify-approx"}, {"ok", r.ok}, {"epsilon_achieved", edgp::format_real(r.epsilon_achieved)}};
    text << (r.ok ? "OK" : "FAILED") << " (max relative deviation " << edgp::format_real(r.epsilon_achieved) << ")\n";
    return r.ok ? kYes : kNo;
  }

  int round(const std::string& in, const std::string& ypath, const std::string& out) {
    const auto g = edgp::load_graph(in);
    const auto r = edgp::round_approximate(g, edgp::load_real_realization(ypath));
    Json rules = Json::array();
    for (const auto& s : r.steps) rules.push_back({{"vertex", s.vertex + 1}, {"rule", s.rule}});
    Json hits = Json::array(), degenerate = Json::array();
    for (auto v : r.integer_hits) hits.push_back(v + 1);
    for (auto v : r.degenerate) degenerate.push_back(v + 1);
    result = {{"command", "round"}, {"verified", r.verified}, {"realization", coords_json(r.x)},
              {"steps", rules},     {"integer_hits", hits},   {"degenerate", degenerate}};
    text << (r.verified ? "VERIFIED" : "NOT VERIFIED") << "\n" << edgp::to_text(r.x);
    if (!out.empty()) edgp::save_realization(out, r.x);
    return r.verified ? kYes : kNo;
  }

  int cycle_decide(const std::string& weights, const std::string& delta, const std::string& eps) {
    const auto w = parse_long_list(weights);
    const Rational d = edgp::parse_rational(delta);
    const auto r = eps.empty() ? edgp::cycle_approx_decide(w, d)
                               : edgp::cycle_approx_classify(w, edgp::parse_rational(eps), d);
    const auto& a = r.analysis;
    result = {{"command", "cycle-decide"},
              {"verdict", edgp::to_string(r.verdict)},
              {"length", a.length.get_str()},
              {"min_closure_gap", a.min_closure_gap.get_str()},
              {"least_tolerance", edgp::format_rational(a.least_tolerance)},
              {"delta_threshold", edgp::format_rational(a.delta_threshold)}};
    text << edgp::to_string(r.verdict) << " (least tolerance " << edgp::format_rational(a.least_tolerance)
         << ", 2/L = " << edgp::format_rational(a.delta_threshold) << ")\n";
    if (!r.positions.empty()) {
      Json pos = Json::array(), lens = Json::array();
      text << "positions";
      for (const auto& p : r.positions) {
        pos.push_back(edgp::format_rational(p));
        text << " " << edgp::format_rational(p);
      }
      for (const auto& l : r.lengths) lens.push_back(edgp::format_rational(l));
      text << "\n";
      result["positions"] = pos;
      result["lengths"] = lens;
      result["signs"] = r.signs;
    }
    return r.verdict == edgp::ApproxVerdict::Yes ? kYes : kNo;
  }

  int ambiguate(const std::string& in, const std::string& out, const std::string& cert) {
    const auto a = edgp::ambiguate_3sat(edgp::load_dimacs(in));
    edgp::save_dimacs(out, a.formula);
    if (!cert.empty()) write_file(cert, edgp::format_certificate(a.designated));
    result = {{"command", "ambiguate"}, {"variables", a.formula.variable_count()},
              {"clauses", a.formula.clause_count()}, {"formula", out}, {"designated", a.designated.bits()}};
    text << "wrote " << out << " (" << a.formula.variable_count() << " variables, " << a.formula.clause_count()
         << " clauses)\n";
    return kYes;
  }

  int desugar(const std::string& in, const std::string& out) {
    const auto d = edgp::desugar_4sat(edgp::load_dimacs(in));
    edgp::save_dimacs(out, d.formula);
    result = {{"command", "desugar"}, {"variables", d.formula.variable_count()},
              {"clauses", d.formula.clause_count()}, {"formula", out}};
    text << "wrote " << out << " (" << d.formula.variable_count() << " variables, " << d.formula.clause_count()
         << " clauses)\n";
    return kYes;
  }

  int pipeline(const std::string& in, const std::string& out, const std::string& cert) {
    const auto p = edgp::ambiguous_pipeline(edgp::load_dimacs(in));
    edgp::save_graph(out, p.compiled.graph);
    if (!cert.empty()) edgp::save_realization(cert, p.designated);
    result = {{"command", "pipeline"},
              {"vertices", p.compiled.graph.vertex_count()},
              {"edges", p.compiled.graph.edge_count()},
              {"graph", out},
              {"designated_certificate", p.designated_certificate.bits()}};
    text << "wrote " << out << " (" << p.compiled.graph.vertex_count() << " vertices)\n";
    return kYes;
  }

  int reproduce(const std::string& suite, const edgp::reproduce::Options& options) {
    std::vector<edgp::reproduce::SuiteReport> reports;
    if (suite == "all") reports = edgp::reproduce::run_all(options);
    else reports.push_back(edgp::reproduce::run_suite(suite, options));
    bool pass = true;
    Json suites = Json::array();
    for (const auto& r : reports) {
      pass = pass && r.passed();
      Json checks = Json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"status", c.informational ? "INFO" : c.pass ? "PASS" : "FAIL"},
                          {"measured", c.measured},
                          {"expected", c.expected}});
      suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"details", r.details}, {"checks", checks}});
      text << edgp::reproduce::format_text(r);
    }
    result = {{"command", "reproduce"}, {"generator", "mt19937_64"}, {"seed", options.seed},
              {"passed", pass}, {"suites", suites}};
    return pass ? kYes : kNo;
  }

 private:
  const Globals& g_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance geometry reductions, realizers and gadgets"};
  app.require_subcommand(1);
  Globals globals;
  app.add_flag("--json", globals.json, "Print one JSON object on stdout");
  app.add_option("--seed", globals.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--cap", globals.cap, "Cap on enumerated realizations or models")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--jobs", globals.jobs, "Worker threads for property suites")->check(CLI::PositiveNumber);

  Runner run(globals);
  std::function<int()> action;
  auto fall = [](CLI::App* sub) { sub->fallthrough(); };

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Compile SAT or PARTITION into a line graph");
  reduce->require_subcommand(1);
  fall(reduce);
  std::string dimacs, out, witness, values;
  auto* reduce_sat = reduce->add_subcommand("sat", "3SAT to anchored line graph");
  fall(reduce_sat);
  reduce_sat->add_option("--dimacs", dimacs, "DIMACS CNF input")->required();
  reduce_sat->add_option("--out", out, "Graph output")->required();
  reduce_sat->add_option("--witness", witness, "JSON map from model bits to realization files");
  reduce_sat->callback([&] { action = [&] { return run.reduce_sat(dimacs, out, witness); }; });
  auto* reduce_part = reduce->add_subcommand("partition", "PARTITION to cycle");
  fall(reduce_part);
  reduce_part->add_option("--values", values, "Comma separated values")->required();
  reduce_part->add_option("--out", out, "Graph output")->required();
  reduce_part->callback([&] { action = [&] { return run.reduce_partition(values, out); }; });

  // lift
  std::string gadget, in, in2;
  std::optional<std::size_t> dim;
  auto* lift = app.add_subcommand("lift", "Lift a line graph into higher dimension");
  fall(lift);
  lift->add_option("--gadget", gadget, "saxe, clique or rbar")->required();
  lift->add_option("--dim", dim, "Target dimension K");
  lift->add_option("in", in)->required();
  lift->add_option("out", out)->required();
  lift->callback([&] { action = [&] { return run.lift(gadget, dim, in, out); }; });

  auto* expand = app.add_subcommand("expand-weights", "Replace weights 3, 4, 5, 8 by T gadgets");
  fall(expand);
  expand->add_option("in", in)->required();
  expand->add_option("out", out)->required();
  expand->callback([&] { action = [&] { return run.expand(in, out); }; });

  // gadget emit
  std::string kind;
  std::size_t gadget_k = 2;
  bool realize = false;
  auto* gadget_cmd = app.add_subcommand("gadget", "Gadget templates");
  gadget_cmd->require_subcommand(1);
  fall(gadget_cmd);
  auto* emit = gadget_cmd->add_subcommand("emit", "Print a gadget template in graph format");
  fall(emit);
  emit->add_option("--kind", kind, "T3 T4 T5 T8 R1 R2 Clique RbarK1 RbarK2")->required();
  emit->add_option("--dim", gadget_k, "K for clique and Rbar gadgets")->capture_default_str();
  emit->add_flag("--realize", realize, "Also print the canonical realization");
  emit->callback([&] { action = [&] { return run.gadget_emit(kind, gadget_k, realize); }; });

  bool enumerate = false;
  auto* solve = app.add_subcommand("solve", "Branch-and-prune on the line");
  fall(solve);
  solve->add_option("in", in)->required();
  solve->add_flag("--enumerate", enumerate, "List every class up to --cap");
  solve->add_option("--out", out, "Write the first realization");
  solve->callback([&] { action = [&] { return run.solve(in, enumerate, out); }; });

  auto* amb = app.add_subcommand("ambiguous", "Look for a second incongruent realization");
  fall(amb);
  amb->add_option("in", in)->required();
  amb->add_option("realization", in2)->required();
  amb->callback([&] { action = [&] { return run.ambiguous(in, in2); }; });

  auto* verify = app.add_subcommand("verify", "Exact check of a realization");
  fall(verify);
  verify->add_option("in", in)->required();
  verify->add_option("realization", in2)->required();
  verify->callback([&] { action = [&] { return run.verify(in, in2); }; });

  std::string eps, delta, weights;
  auto* vapprox = app.add_subcommand("verify-approx", "Check an eps-approximate realization");
  fall(vapprox);
  vapprox->add_option("in", in)->required();
  vapprox->add_option("realization", in2)->required();
  vapprox->add_option("--eps", eps)->required();
  vapprox->callback([&] { action = [&] { return run.verify_approx(in, in2, eps); }; });

  auto* round = app.add_subcommand("round", "Round an approximate line realization");
  fall(round);
  round->add_option("in", in)->required();
  round->add_option("realization", in2)->required();
  round->add_option("--out", out);
  round->callback([&] { action = [&] { return run.round(in, in2, out); }; });

  auto* cdecide = app.add_subcommand("cycle-decide", "Approximate realizability of a cycle");
  fall(cdecide);
  cdecide->add_option("--weights", weights, "Comma separated integer weights")->required();
  cdecide->add_option("--delta", delta, "Tolerance, e.g. 1/8")->required();
  cdecide->add_option("--eps", eps, "Lower tolerance for the three-way verdict");
  cdecide->callback([&] { action = [&] { return run.cycle_decide(weights, delta, eps); }; });

  std::string cert;
  auto* ambiguate = app.add_subcommand("ambiguate", "3SAT to a formula with a designated model");
  fall(ambiguate);
  ambiguate->add_option("in", in)->required();
  ambiguate->add_option("--out", out)->required();
  ambiguate->add_option("--cert", cert, "Designated certificate output");
  ambiguate->callback([&] { action = [&] { return run.ambiguate(in, out, cert); }; });

  auto* desugar = app.add_subcommand("desugar", "Width-4 clauses to width 3");
  fall(desugar);
  desugar->add_option("in", in)->required();
  desugar->add_option("--out", out)->required();
  desugar->callback([&] { action = [&] { return run.desugar(in, out); }; });

  auto* pipeline = app.add_subcommand("pipeline", "3SAT to a line graph with a designated realization");
  fall(pipeline);
  pipeline->add_option("in", in)->required();
  pipeline->add_option("--out", out)->required();
  pipeline->add_option("--cert", cert, "Designated realization output");
  pipeline->callback([&] { action = [&] { return run.pipeline(in, out, cert); }; });

  std::string suite = "all";
  edgp::reproduce::Options options;
  auto* reproduce = app.add_subcommand("reproduce", "Run acceptance suites");
  fall(reproduce);
  reproduce->add_option("--suite", suite, "Suite name or all")->capture_default_str();
  reproduce->add_option("--n", options.n, "Variable bound");
  reproduce->add_option("--m", options.m, "Clause bound");
  reproduce->add_option("--trials", options.trials, "Trial count");
  reproduce->callback([&] {
    action = [&] {
      options.seed = globals.seed;
      options.jobs = globals.jobs;
      return run.reproduce(suite, options);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kError;
  }
  try {
    return run.finish(action());
  } catch (const std::exception& e) {
    std::cerr << "edgp: error: " << e.what() << "\n";
    return kError;
  }
}
