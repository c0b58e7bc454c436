#include "ramsey/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramsey/arrow.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/cnf.hpp"
#include "ramsey/gadget.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

namespace {

using nlohmann::json;

Graph named_graph(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'K' && name.find('-') == std::string::npos) {
    int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 12) return Graph::complete(n);
  }
  if (name == "C5") return Graph::cycle(5);
  if (name == "K8-C5") return Graph::k8_minus_c5();
  throw error("unknown named graph: " + name + " (builtins: K1..K12, C5, K8-C5)");
}

Graph load_graph(const std::string& file, const std::string& g6, const std::string& name) {
  int given = (!file.empty()) + (!g6.empty()) + (!name.empty());
  if (given != 1) throw error("give exactly one of --graph, --g6, --name");
  if (!g6.empty()) return parse_graph6(g6);
  if (!name.empty()) return named_graph(name);
  std::ifstream in(file);
  if (!in) throw error("cannot open graph file: " + file);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    return parse_graph6(line);
  }
  throw error("graph file holds no graph6 line: " + file);
}

json arrow_report(const Graph& g, const std::string& pattern_text, const ArrowResult& r,
                  bool stats) {
  json j;
  j["graph"] = write_graph6(g);
  j["pattern"] = pattern_text;
  j["verdict"] = r.verdict == Verdict::Arrows ? "Arrows" : "NotArrows";
  if (r.witness)
    j["witness"] = colouring_lines(*r.witness);
  else
    j["witness"] = nullptr;
  j["nodes"] = r.stats.nodes;
  // wall-clock stays off the reproducible output unless asked for
  if (stats)
    j["millis"] = r.stats.millis;
  else
    j["millis"] = nullptr;
  return j;
}

json record_json(const ScanRecord& rec) {
  json j;
  if (rec.input_error) {
    j["line"] = rec.line;
    j["error"] = *rec.input_error;
    j["input"] = rec.graph6;
    return j;
  }
  j["graph"] = rec.graph6;
  j["omega"] = rec.omega;
  j["arrows_target"] = rec.arrows_target;
  j["arrows_cotarget"] = rec.arrows_cotarget ? json(*rec.arrows_cotarget) : json(nullptr);
  j["contains_k6"] = rec.contains_k6;
  j["minimal_for_target"] =
      rec.minimal_for_target ? json(*rec.minimal_for_target) : json(nullptr);
  if (!rec.note.empty()) j["note"] = rec.note;
  if (rec.violation()) j["violation"] = true;
  return j;
}

GadgetSpec build_named(const std::string& name, int n, const std::string& variant) {
  if (name == "lemma1") return lemma1_gadget_search(n);
  if (name == "theorem1_final") {
    T1Variant v = variant == "intersecting" ? T1Variant::Intersecting : T1Variant::Disjoint;
    return builtin_gadget(name, n, v);
  }
  if (name == "t2_5v" || name == "t2_k62missing" || name == "t2_k6missing" ||
      name == "cor_small_k4")
    return search_gadget(name);
  return builtin_gadget(name, n);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Ramsey arrowing toolkit for clique-union targets"};
  app.require_subcommand(1);

  std::string graph_file, g6, graph_name, pattern_text, cotarget_text, pattern2_text;
  std::string colouring_file, corpus_file, output_file, gadget_name, variant = "disjoint";
  std::string colour_filter;
  int n = 4, enumerate_n = 5, max_n = 0, clique_size = 0;
  int threads = 1;
  bool stats = false;

  auto add_graph_opts = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_file, "file with one graph6 line");
    cmd->add_option("--g6", g6, "inline graph6 string");
    cmd->add_option("--name", graph_name, "named builtin graph (K1..K12, C5, K8-C5)");
  };

  CLI::App* arrow_cmd = app.add_subcommand("arrow", "decide g -> pattern");
  add_graph_opts(arrow_cmd);
  arrow_cmd->add_option("--pattern", pattern_text, "clique union, e.g. K3+K2")->required();
  arrow_cmd->add_option("--threads", threads, "search workers (default 1, reproducible)");
  arrow_cmd->add_option("--witness-out", output_file, "write the witness colouring to a file");
  arrow_cmd->add_flag("--stats", stats, "include wall-clock millis in the report");

  CLI::App* mono_cmd = app.add_subcommand("mono", "find a monochromatic placement");
  add_graph_opts(mono_cmd);
  mono_cmd->add_option("--pattern", pattern_text)->required();
  mono_cmd->add_option("--colouring", colouring_file, "edge-line colouring file")->required();
  mono_cmd->add_option("--colour", colour_filter, "restrict to R or B");

  CLI::App* cnf_cmd = app.add_subcommand("cnf", "export the arrowing query as DIMACS CNF");
  add_graph_opts(cnf_cmd);
  cnf_cmd->add_option("--pattern", pattern_text)->required();
  cnf_cmd->add_option("-o,--output", output_file, "write DIMACS here instead of stdout");

  CLI::App* gb_cmd = app.add_subcommand("gadget-build", "emit a builtin recolouring gadget");
  gb_cmd->add_option("--name", gadget_name)->required();
  gb_cmd->add_option("--n", n, "clique size parameter");
  gb_cmd->add_option("--variant", variant, "theorem1_final: disjoint|intersecting");

  CLI::App* gs_cmd = app.add_subcommand("gadget-search", "search for a reconstructed gadget");
  gs_cmd->add_option("--name", gadget_name)->required();
  gs_cmd->add_option("--n", n, "clique size parameter (lemma1)");

  CLI::App* gv_cmd = app.add_subcommand("gadget-verify", "certify a gadget's case analysis");
  gv_cmd->add_option("--name", gadget_name)->required();
  gv_cmd->add_option("--n", n, "clique size parameter");
  gv_cmd->add_option("--variant", variant, "theorem1_final: disjoint|intersecting");
  gv_cmd->add_option("--clique-size", clique_size, "override the analysed clique size");

  CLI::App* sc_cmd = app.add_subcommand("scenario", "check stability-usage size arithmetic");
  sc_cmd->add_option("--n", n)->required();

  CLI::App* en_cmd = app.add_subcommand("enumerate", "graph6 of all graphs on n vertices");
  en_cmd->add_option("--n", enumerate_n)->required();
  en_cmd->add_option("-o,--output", output_file);

  CLI::App* scan_cmd = app.add_subcommand("scan", "scan a corpus for target/cotarget arrowing");
  scan_cmd->add_option("--corpus", corpus_file, "graph6 file, one graph per line")->required();
  scan_cmd->add_option("--target", pattern_text)->required();
  scan_cmd->add_option("--cotarget", cotarget_text)->required();
  scan_cmd->add_option("--threads", threads);

  CLI::App* min_cmd = app.add_subcommand("minimal", "Ramsey minimality report");
  add_graph_opts(min_cmd);
  min_cmd->add_option("--pattern", pattern_text)->required();

  CLI::App* div_cmd = app.add_subcommand("divergence", "divergence set over a corpus");
  div_cmd->add_option("--corpus", corpus_file, "graph6 file");
  div_cmd->add_option("--max-n", max_n, "use the internal enumeration up to this n");
  div_cmd->add_option("--p1", pattern_text)->required();
  div_cmd->add_option("--p2", pattern2_text)->required();
  div_cmd->add_option("--threads", threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (arrow_cmd->parsed()) {
      Graph g = load_graph(graph_file, g6, graph_name);
      Pattern p = Pattern::parse(pattern_text);
      ArrowOptions opts;
      opts.threads = threads;
      ArrowResult r = arrows(g, p, opts);
      json j = arrow_report(g, pattern_text, r, stats);
      if (!output_file.empty() && r.witness) {
        std::ofstream wout(output_file);
        wout << write_colouring(*r.witness);
        j["witness_file"] = output_file;
      }
      out << j.dump(2) << "\n";
      return 0;
    }
    if (mono_cmd->parsed()) {
      Graph g = load_graph(graph_file, g6, graph_name);
      Pattern p = Pattern::parse(pattern_text);
      std::ifstream in(colouring_file);
      if (!in) throw error("cannot open colouring file: " + colouring_file);
      std::stringstream buf;
      buf << in.rdbuf();
      Colouring c = parse_colouring(g, buf.str());
      std::optional<Colour> filter;
      if (colour_filter == "R") filter = Colour::Red;
      else if (colour_filter == "B") filter = Colour::Blue;
      else if (!colour_filter.empty()) throw error("--colour must be R or B");
      auto hit = find_mono(c, p, filter);
      json j;
      j["graph"] = write_graph6(g);
      j["pattern"] = pattern_text;
      j["found"] = hit.has_value();
      if (hit) {
        j["colour"] = hit->first == Colour::Red ? "R" : "B";
        json parts = json::array();
        for (VertexSet part : hit->second) parts.push_back(set_vertices(part));
        j["parts"] = parts;
      }
      out << j.dump(2) << "\n";
      return 0;
    }
    if (cnf_cmd->parsed()) {
      Graph g = load_graph(graph_file, g6, graph_name);
      Pattern p = Pattern::parse(pattern_text);
      std::string dimacs = write_dimacs(to_cnf(g, p));
      if (output_file.empty()) {
        out << dimacs;
      } else {
        std::ofstream f(output_file);
        f << dimacs;
        out << "{\"written\": \"" << output_file << "\"}\n";
      }
      return 0;
    }
    if (gb_cmd->parsed()) {
      T1Variant v = variant == "intersecting" ? T1Variant::Intersecting : T1Variant::Disjoint;
      GadgetSpec spec = gadget_name == "theorem1_final" ? builtin_gadget(gadget_name, n, v)
                                                        : builtin_gadget(gadget_name, n);
      out << spec.to_json().dump(2) << "\n";
      return 0;
    }
    if (gs_cmd->parsed()) {
      GadgetSpec spec =
          gadget_name == "lemma1" ? lemma1_gadget_search(n) : search_gadget(gadget_name);
      out << spec.to_json().dump(2) << "\n";
      return 0;
    }
    if (gv_cmd->parsed()) {
      GadgetSpec spec = build_named(gadget_name, n, variant);
      CaseReport report;
      if (clique_size > 0)
        report = analyze_gadget_cases(spec, n, clique_size,
                                      gadget_conclusions(gadget_name, spec, n));
      else
        report = certify_gadget(gadget_name, spec, n);
      out << report.to_json().dump(2) << "\n";
      return report.passes() ? 0 : 1;
    }
    if (sc_cmd->parsed()) {
      ScenarioReport rep = scenario_arithmetic(n);
      out << rep.to_json().dump(2) << "\n";
      return rep.all_hold() ? 0 : 1;
    }
    if (en_cmd->parsed()) {
      const auto& graphs = enumerate_graphs_small(enumerate_n);
      std::ofstream f;
      std::ostream* dst = &out;
      if (!output_file.empty()) {
        f.open(output_file);
        dst = &f;
      }
      for (const Graph& g : graphs) *dst << write_graph6(g) << "\n";
      return 0;
    }
    if (scan_cmd->parsed()) {
      std::ifstream in(corpus_file);
      if (!in) throw error("cannot open corpus: " + corpus_file);
      Pattern target = Pattern::parse(pattern_text);
      Pattern cotarget = Pattern::parse(cotarget_text);
      ScanOptions opts;
      opts.threads = threads;
      ScanSummary summary = scan_stream(in, target, cotarget, opts, [&](const ScanRecord& rec) {
        out << record_json(rec).dump() << "\n";
      });
      json foot;
      foot["summary"] = {{"total", summary.total},
                         {"errors", summary.errors},
                         {"arrows_target", summary.arrows_target},
                         {"violations", summary.violations}};
      out << foot.dump() << "\n";
      return summary.violations.empty() ? 0 : 1;
    }
    if (min_cmd->parsed()) {
      Graph g = load_graph(graph_file, g6, graph_name);
      Pattern p = Pattern::parse(pattern_text);
      MinimalityReport rep = is_ramsey_minimal(g, p);
      json j;
      j["graph"] = write_graph6(g);
      j["pattern"] = pattern_text;
      j["is_ramsey"] = rep.is_ramsey;
      json crit = json::array();
      for (auto [u, v] : rep.critical_edges) crit.push_back({u, v});
      j["critical_edges"] = crit;
      j["is_minimal"] = rep.is_minimal;
      out << j.dump(2) << "\n";
      return 0;
    }
    if (div_cmd->parsed()) {
      std::vector<Graph> corpus;
      if (!corpus_file.empty()) {
        std::ifstream in(corpus_file);
        if (!in) throw error("cannot open corpus: " + corpus_file);
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty() || line[0] == '#') continue;
          corpus.push_back(parse_graph6(line));
        }
      } else if (max_n >= 1) {
        for (int k = 1; k <= max_n; ++k)
          for (const Graph& g : enumerate_graphs_small(k)) corpus.push_back(g);
      } else {
        throw error("give --corpus or --max-n");
      }
      ScanOptions opts;
      opts.threads = threads;
      DivergenceResult res =
          divergence_set(corpus, Pattern::parse(pattern_text), Pattern::parse(pattern2_text), opts);
      json j;
      j["p1"] = pattern_text;
      j["p2"] = pattern2_text;
      j["scanned"] = res.scanned;
      j["members"] = res.members;
      out << j.dump(2) << "\n";
      return 0;
    }
  } catch (const search_exhausted_error& e) {
    err << "not found: " << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace ramsey
