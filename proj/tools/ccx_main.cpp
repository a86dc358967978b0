#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccx/canonical.hpp"
#include "ccx/complex.hpp"
#include "ccx/constructions.hpp"
#include "ccx/enumerate.hpp"
#include "ccx/planar_code.hpp"
#include "ccx/scan.hpp"

using namespace ccx;

namespace {

// graph spec: qk:K, qkprime:K, a builtin name, or a planar_code file path
Triangulation load_graph(const std::string& spec, int index) {
  if (spec.rfind("qk:", 0) == 0) return q_k(std::stoi(spec.substr(3))).t;
  if (spec.rfind("qkprime:", 0) == 0) return q_k_prime(std::stoi(spec.substr(8))).t;
  if (std::filesystem::exists(spec)) {
    std::vector<Triangulation> graphs = read_planar_code_file(spec);
    if (index < 0 || index >= static_cast<int>(graphs.size()))
      throw std::runtime_error(spec + ": graph index " + std::to_string(index) + " out of range (" +
                               std::to_string(graphs.size()) + " graphs)");
    return graphs[index];
  }
  return builtin(spec);
}

struct OutStream {
  std::ofstream file;
  std::ostream& out;

  explicit OutStream(const std::string& path)
      : file(path == "-" ? std::ofstream() : std::ofstream(path, std::ios::binary)),
        out(path == "-" ? std::cout : file) {
    if (path != "-" && !file) throw std::runtime_error("cannot open " + path + " for writing");
  }
};

int run_analyze(const Triangulation& t, int cap, bool as_json) {
  ScanRecord r = analyze_graph(t, cap);
  std::vector<Coloring> colorings = enumerate_colorings(t);
  ColoringComplex b = build_complex(t, colorings);
  std::vector<Component> comps = b.empty() ? std::vector<Component>{} : components(t, b);
  std::vector<int> comp_of(colorings.size(), -1);
  for (size_t ci = 0; ci < comps.size(); ++ci)
    for (int id : comps[ci].coloring_ids) comp_of[id] = static_cast<int>(ci);
  std::vector<std::vector<int>> kc =
      colorings.empty() ? std::vector<std::vector<int>>{} : kempe_classes(t, colorings);

  if (as_json) {
    nlohmann::ordered_json doc = scan_record_json(r);
    doc.erase("graph_id");
    doc["kempe_classes"] = kc.size();
    auto arr = nlohmann::ordered_json::array();
    for (size_t i = 0; i < colorings.size(); ++i) {
      nlohmann::ordered_json c;
      c["id"] = i;
      c["assignment"] = colorings[i].assignment();
      c["parity"] = to_string(parity(t, colorings[i]));
      c["homology_degree"] = homology_degree(t, colorings[i]);
      c["component"] = comp_of[i];
      arr.push_back(std::move(c));
    }
    doc["colorings"] = std::move(arr);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::cout << "n=" << t.n() << " edges=" << t.num_edges() << " faces=" << t.num_faces()
            << " euler_genus=" << t.euler_genus() << " connectivity=" << r.connectivity << " (cap "
            << cap << ")\n";
  std::cout << "colorings: " << r.num_colorings << (b.empty() ? " (no 4-colorings)" : "") << "\n";
  if (!b.empty()) {
    std::cout << "classes: " << b.num_classes() << "\n";
    std::cout << "components: " << comps.size() << "\n";
    for (size_t ci = 0; ci < comps.size(); ++ci)
      std::cout << "  component " << ci << ": " << to_string(comps[ci].parity) << ", "
                << comps[ci].coloring_ids.size() << " colorings, " << comps[ci].class_ids.size()
                << " classes\n";
    std::cout << "kempe classes: " << kc.size() << "\n";
    for (size_t i = 0; i < colorings.size(); ++i)
      std::cout << "coloring " << i << ": parity=" << to_string(parity(t, colorings[i]))
                << " homology_degree=" << homology_degree(t, colorings[i])
                << " component=" << comp_of[i] << "\n";
  }
  std::cout << "tutte witness: " << (r.tutte_witness ? "yes" : "no") << "\n";
  std::cout << "conjecture violation: " << (r.conjecture_violation ? "yes" : "no") << "\n";
  std::cout << "canonical code: " << r.canonical_code << "\n";
  return 0;
}

int run_scan(const std::vector<Triangulation>& corpus, const ScanOptions& opt, bool serial,
             const std::string& report_path) {
  std::vector<ScanRecord> records =
      serial ? scan_corpus_serial(corpus, opt) : scan_corpus(corpus, opt);
  OutStream os(report_path);
  write_report(os.out, records);
  os.out.flush();
  long witnesses = 0, violations = 0;
  for (const ScanRecord& r : records) {
    witnesses += r.tutte_witness;
    violations += r.conjecture_violation;
  }
  std::cerr << "scanned " << records.size() << " graphs: " << witnesses << " tutte witnesses, "
            << violations << " conjecture violations\n";
  return witnesses > 0 ? 2 : 0;
}

int run_validate(const std::string& path) {
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
  }
  ReportCheck rc = validate_report(path == "-" ? std::cin : file);
  std::cout << "records: " << rc.records << "\n";
  std::cout << "witnesses: " << rc.witnesses << "\n";
  std::cout << "violations: " << rc.violations << "\n";
  std::cout << "problems: " << rc.problems.size() << "\n";
  for (const std::string& p : rc.problems) std::cerr << p << "\n";
  return rc.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"4-coloring complexes of surface triangulations"};
  app.require_subcommand(1);

  std::string input, output = "-", report = "-", format;
  std::string base, lhs, rhs;
  int index = 0, cap = 5, k = 0, n = 0, face = 0, lhs_face = 0, rhs_face = 0;
  int min_conn = 0;
  long max_graphs = -1, skip = 0;
  bool as_json = false, no_header = false, serial = false;
  std::vector<int> corr;

  CLI::App* analyze = app.add_subcommand("analyze", "colorings, components, parities, degrees");
  analyze->add_option("input", input, "builtin name, qk:K, qkprime:K, or planar_code file")
      ->required();
  analyze->add_option("--index", index, "graph index within a file");
  analyze->add_option("--connectivity-cap", cap, "stop testing connectivity above this")
      ->check(CLI::Range(1, 6));
  analyze->add_flag("--json", as_json, "emit a JSON document");

  CLI::App* generate = app.add_subcommand("generate", "write families as planar_code");
  generate->require_subcommand(1);
  CLI::App* gen_qk = generate->add_subcommand("qk", "ringed sphere family");
  gen_qk->add_option("--k", k, "number of middle rings")->required();
  CLI::App* gen_qkp = generate->add_subcommand("qkprime", "ringed family, rotated outer cap");
  gen_qkp->add_option("--k", k, "number of middle rings")->required();
  CLI::App* gen_builtin = generate->add_subcommand("builtin", "named example");
  gen_builtin->add_option("name", input, "k4, octahedron, icosahedron, example1, example2, torus_grid:P,Q")
      ->required();
  CLI::App* gen_stack = generate->add_subcommand("stack", "subdivide one face of a base graph");
  gen_stack->add_option("--base", base, "graph spec")->required();
  gen_stack->add_option("--face", face, "face index to subdivide");
  CLI::App* gen_trisum = generate->add_subcommand("trisum", "glue two graphs along a face");
  gen_trisum->add_option("--lhs", lhs, "graph spec")->required();
  gen_trisum->add_option("--rhs", rhs, "graph spec")->required();
  gen_trisum->add_option("--lhs-face", lhs_face, "face index in lhs");
  gen_trisum->add_option("--rhs-face", rhs_face, "face index in rhs");
  gen_trisum->add_option("--corr", corr, "lhs vertices receiving the rhs face, in face order")
      ->expected(3);
  for (CLI::App* sub : {gen_qk, gen_qkp, gen_builtin, gen_stack, gen_trisum}) {
    sub->add_option("--output", output, "output path, - for stdout");
    sub->add_flag("--no-header", no_header, "omit the planar_code header");
  }

  CLI::App* enumerate = app.add_subcommand("enumerate", "all sphere triangulations on n vertices");
  enumerate->add_option("--n", n, "vertex count (4..14)")->required()->check(CLI::Range(4, 14));
  enumerate->add_option("--output", output, "output path, - for stdout");
  enumerate->add_flag("--no-header", no_header, "omit the planar_code header");

  CLI::App* scan = app.add_subcommand("scan", "analyze a corpus, emit a JSONL report");
  scan->add_option("--n", n, "enumerate sphere triangulations on n vertices")->check(CLI::Range(4, 14));
  scan->add_option("--input", input, "planar_code corpus file");
  scan->add_option("--report", report, "report path, - for stdout");
  scan->add_option("--min-connectivity", min_conn, "skip graphs below this connectivity");
  scan->add_option("--connectivity-cap", cap, "stop testing connectivity above this")
      ->check(CLI::Range(1, 6));
  scan->add_option("--max-graphs", max_graphs, "analyze at most this many graphs");
  scan->add_option("--skip", skip, "skip this many graphs first (resume)");
  scan->add_flag("--serial", serial, "use the single-threaded scanner");

  CLI::App* exp = app.add_subcommand("export", "write a coloring complex as DOT or JSON");
  exp->add_option("input", input, "builtin name, qk:K, qkprime:K, or planar_code file")->required();
  exp->add_option("--index", index, "graph index within a file");
  exp->add_option("--format", format, "dot or json")->required()->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--output", output, "output path, - for stdout");

  CLI::App* validate = app.add_subcommand("validate-report", "re-check a JSONL report");
  validate->add_option("input", report, "report path, - for stdin");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(load_graph(input, index), cap, as_json);

    if (generate->parsed()) {
      Triangulation t = builtin("k4");
      if (gen_qk->parsed()) t = q_k(k).t;
      if (gen_qkp->parsed()) t = q_k_prime(k).t;
      if (gen_builtin->parsed()) t = builtin(input);
      if (gen_stack->parsed()) t = stack_vertex(load_graph(base, 0), face);
      if (gen_trisum->parsed()) {
        Triangulation g = load_graph(lhs, 0), h = load_graph(rhs, 0);
        if (lhs_face < 0 || lhs_face >= g.num_faces())
          throw std::runtime_error("lhs face index out of range");
        Face fg = g.faces()[lhs_face];
        std::array<int, 3> c = corr.empty() ? std::array<int, 3>{fg[0], fg[1], fg[2]}
                                            : std::array<int, 3>{corr[0], corr[1], corr[2]};
        t = triangle_sum(g, lhs_face, h, rhs_face, c);
      }
      OutStream os(output);
      write_planar_code(os.out, {t}, !no_header);
      return 0;
    }

    if (enumerate->parsed()) {
      OutStream os(output);
      write_planar_code(os.out, enumerate_triangulations(n), !no_header);
      return 0;
    }

    if (scan->parsed()) {
      if ((n == 0) == input.empty())
        throw std::runtime_error("scan needs exactly one of --n and --input");
      std::vector<Triangulation> corpus =
          input.empty() ? enumerate_triangulations(n) : read_planar_code_file(input);
      ScanOptions opt;
      opt.connectivity_cap = cap;
      opt.min_connectivity = min_conn;
      opt.skip = skip;
      opt.max_graphs = max_graphs;
      return run_scan(corpus, opt, serial, report);
    }

    if (exp->parsed()) {
      Triangulation t = load_graph(input, index);
      ColoringComplex b = build_complex(t);
      OutStream os(output);
      if (format == "dot")
        os.out << export_complex_dot(t, b);
      else
        os.out << export_complex_json(t, b).dump(2) << "\n";
      return 0;
    }

    if (validate->parsed()) return run_validate(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
