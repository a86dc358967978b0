#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "ccx/coloring.hpp"
#include "ccx/triangulation.hpp"

namespace ccx {

// One JSONL row of a corpus scan. `components` holds, per component,
// (coloring count, class count, parity), sorted ascending. A Tutte witness
// has two components of equal parity; a conjecture violation has at least
// two components and only one parity among them (so every violation is a
// witness).
struct ScanRecord {
  long graph_id = 0;
  int n = 0;
  int euler_genus = 0;
  int connectivity = 0;  // capped
  int num_colorings = 0;
  int num_components = 0;
  std::vector<std::tuple<int, int, Parity>> components;
  bool tutte_witness = false;
  bool conjecture_violation = false;
  std::string canonical_code;  // hex

  bool operator==(const ScanRecord&) const = default;
};

struct ScanOptions {
  int connectivity_cap = 5;
  int min_connectivity = 0;
  long skip = 0;
  long max_graphs = -1;  // < 0: unlimited
};

ScanRecord analyze_graph(const Triangulation& t, int connectivity_cap);

// Scan a corpus: graphs are ordered by canonical code, filtered by
// connectivity, then the [skip, skip+max) window is analyzed. graph_id is
// the position in the filtered order, so a later run with --skip appends
// where the previous one stopped. scan_corpus fans the per-graph analysis
// out over OpenMP threads; scan_corpus_serial is the reference
// implementation, kept for tests and benchmarks, and both produce
// identical records.
std::vector<ScanRecord> scan_corpus(const std::vector<Triangulation>& graphs, const ScanOptions& opt);
std::vector<ScanRecord> scan_corpus_serial(const std::vector<Triangulation>& graphs, const ScanOptions& opt);

nlohmann::ordered_json scan_record_json(const ScanRecord& r);
ScanRecord scan_record_from_json(const nlohmann::json& j);
void write_report(std::ostream& out, const std::vector<ScanRecord>& records);

struct ReportCheck {
  long records = 0;
  long witnesses = 0;
  long violations = 0;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

// Re-derive the witness/violation flags and consistency facts from each row.
ReportCheck validate_report(std::istream& in);

}  // namespace ccx
