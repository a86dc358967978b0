#include "ccx/scan.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>

#include "ccx/canonical.hpp"
#include "ccx/complex.hpp"
#include "ccx/connectivity.hpp"

namespace ccx {

ScanRecord analyze_graph(const Triangulation& t, int connectivity_cap) {
  ScanRecord r;
  r.n = t.n();
  r.euler_genus = t.euler_genus();
  r.connectivity = vertex_connectivity(t, connectivity_cap);
  ColoringComplex b = build_complex(t);
  r.num_colorings = b.num_colorings();
  Signature sig = b.empty() ? Signature{} : signature(t, b);
  r.num_components = sig.even_components + sig.odd_components;
  r.components = sig.component_summary;
  r.tutte_witness = sig.even_components >= 2 || sig.odd_components >= 2;
  r.conjecture_violation =
      r.num_components >= 2 && (sig.even_components == 0 || sig.odd_components == 0);
  r.canonical_code = canonical_code(t).hex();
  return r;
}

namespace {

std::vector<ScanRecord> scan_impl(const std::vector<Triangulation>& graphs, const ScanOptions& opt,
                                  bool parallel) {
  if (opt.min_connectivity > opt.connectivity_cap)
    fail(ErrorKind::OutOfRange, "connectivity filter exceeds the cap");
  // order by canonical code (ties keep input order; they are isomorphic)
  std::vector<std::string> codes(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (size_t i = 0; i < graphs.size(); ++i) codes[i] = canonical_code(graphs[i]).bytes;
  std::vector<size_t> idx(graphs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return codes[a] < codes[b]; });

  std::vector<size_t> kept;
  for (size_t i : idx)
    if (opt.min_connectivity <= 1 ||
        vertex_connectivity(graphs[i], opt.connectivity_cap) >= opt.min_connectivity)
      kept.push_back(i);

  size_t lo = std::min(static_cast<size_t>(std::max(opt.skip, 0L)), kept.size());
  size_t hi = kept.size();
  if (opt.max_graphs >= 0) hi = std::min(hi, lo + static_cast<size_t>(opt.max_graphs));

  std::vector<ScanRecord> records(hi - lo);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (size_t k = lo; k < hi; ++k) {
    records[k - lo] = analyze_graph(graphs[kept[k]], opt.connectivity_cap);
    records[k - lo].graph_id = static_cast<long>(k);
  }
  return records;
}

}  // namespace

std::vector<ScanRecord> scan_corpus(const std::vector<Triangulation>& graphs, const ScanOptions& opt) {
  return scan_impl(graphs, opt, true);
}

std::vector<ScanRecord> scan_corpus_serial(const std::vector<Triangulation>& graphs, const ScanOptions& opt) {
  return scan_impl(graphs, opt, false);
}

nlohmann::ordered_json scan_record_json(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["euler_genus"] = r.euler_genus;
  j["connectivity"] = r.connectivity;
  j["num_colorings"] = r.num_colorings;
  j["num_components"] = r.num_components;
  auto comps = nlohmann::ordered_json::array();
  for (const auto& [colorings, classes, par] : r.components)
    comps.push_back({colorings, classes, to_string(par)});
  j["components"] = std::move(comps);
  j["tutte_witness"] = r.tutte_witness;
  j["conjecture_violation"] = r.conjecture_violation;
  j["canonical_code"] = r.canonical_code;
  return j;
}

ScanRecord scan_record_from_json(const nlohmann::json& j) {
  ScanRecord r;
  r.graph_id = j.at("graph_id").get<long>();
  r.n = j.at("n").get<int>();
  r.euler_genus = j.at("euler_genus").get<int>();
  r.connectivity = j.at("connectivity").get<int>();
  r.num_colorings = j.at("num_colorings").get<int>();
  r.num_components = j.at("num_components").get<int>();
  for (const auto& c : j.at("components")) {
    std::string p = c.at(2).get<std::string>();
    if (p != "even" && p != "odd") throw std::invalid_argument("parity must be even or odd");
    r.components.emplace_back(c.at(0).get<int>(), c.at(1).get<int>(),
                              p == "even" ? Parity::Even : Parity::Odd);
  }
  r.tutte_witness = j.at("tutte_witness").get<bool>();
  r.conjecture_violation = j.at("conjecture_violation").get<bool>();
  r.canonical_code = j.at("canonical_code").get<std::string>();
  return r;
}

void write_report(std::ostream& out, const std::vector<ScanRecord>& records) {
  for (const ScanRecord& r : records) out << scan_record_json(r).dump() << "\n";
}

ReportCheck validate_report(std::istream& in) {
  ReportCheck rc;
  std::string line;
  long lineno = 0;
  long prev_id = -1;
  auto complain = [&](const std::string& what) {
    rc.problems.push_back("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ScanRecord r;
    try {
      r = scan_record_from_json(nlohmann::json::parse(line));
    } catch (const std::exception& e) {
      complain(e.what());
      continue;
    }
    ++rc.records;
    if (r.graph_id <= prev_id) complain("graph_id not increasing");
    prev_id = r.graph_id;
    if (r.num_components != static_cast<int>(r.components.size()))
      complain("num_components disagrees with the component list");
    int colorings = 0, even = 0, odd = 0;
    for (const auto& [ncol, ncls, par] : r.components) {
      colorings += ncol;
      (par == Parity::Even ? even : odd)++;
      if (ncol < 1 || ncls < 4) complain("component smaller than one 4-coloring");
    }
    if (!std::is_sorted(r.components.begin(), r.components.end())) complain("components not sorted");
    if (colorings != r.num_colorings) complain("num_colorings disagrees with the component list");
    if (r.tutte_witness != (even >= 2 || odd >= 2)) complain("tutte_witness flag wrong");
    if (r.conjecture_violation != (r.num_components >= 2 && (even == 0 || odd == 0)))
      complain("conjecture_violation flag wrong");
    if (r.conjecture_violation && !r.tutte_witness) complain("violation without witness");
    if (r.euler_genus < 0 || r.euler_genus % 2) complain("euler_genus not even and nonnegative");
    if (r.canonical_code.empty() ||
        r.canonical_code.find_first_not_of("0123456789abcdef") != std::string::npos)
      complain("canonical_code is not lowercase hex");
    if (r.tutte_witness) ++rc.witnesses;
    if (r.conjecture_violation) ++rc.violations;
  }
  return rc;
}

}  // namespace ccx
