#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccx/canonical.hpp"
#include "ccx/connectivity.hpp"
#include "ccx/constructions.hpp"
#include "ccx/enumerate.hpp"
#include "ccx/scan.hpp"

using namespace ccx;

namespace {

Triangulation k7_torus() {
  std::vector<Face> fs;
  for (int i = 0; i < 7; ++i) {
    fs.push_back({i, (i + 1) % 7, (i + 3) % 7});
    fs.push_back({i, (i + 3) % 7, (i + 2) % 7});
  }
  return Triangulation::from_faces(7, fs);
}

std::string report_text(const std::vector<ScanRecord>& records) {
  std::ostringstream out;
  write_report(out, records);
  return out.str();
}

}  // namespace

TEST_CASE("analyze a known graph") {
  Triangulation t = q_k(1).t;
  ScanRecord r = analyze_graph(t, 5);
  CHECK(r.n == 12);
  CHECK(r.euler_genus == 0);
  CHECK(r.connectivity == 4);
  CHECK(r.num_colorings == 6);
  CHECK(r.num_components == 3);
  std::vector<std::tuple<int, int, Parity>> want = {
      {1, 4, Parity::Even}, {1, 4, Parity::Even}, {4, 11, Parity::Odd}};
  CHECK(r.components == want);
  CHECK(r.tutte_witness);
  CHECK(!r.conjecture_violation);
  CHECK(r.canonical_code == canonical_code(t).hex());
}

TEST_CASE("parallel and serial scans agree") {
  std::vector<Triangulation> corpus = enumerate_triangulations(9);
  ScanOptions opt;
  std::vector<ScanRecord> par = scan_corpus(corpus, opt);
  std::vector<ScanRecord> ser = scan_corpus_serial(corpus, opt);
  REQUIRE(par.size() == corpus.size());
  CHECK(par == ser);
  CHECK(report_text(par) == report_text(ser));
  // repeat runs are byte-identical
  CHECK(report_text(scan_corpus(corpus, opt)) == report_text(par));
  for (size_t i = 0; i < par.size(); ++i) CHECK(par[i].graph_id == static_cast<long>(i));
}

TEST_CASE("skip and max window a scan") {
  std::vector<Triangulation> corpus = enumerate_triangulations(8);
  ScanOptions opt;
  std::vector<ScanRecord> full = scan_corpus(corpus, opt);
  ScanOptions head_opt;
  head_opt.max_graphs = 5;
  ScanOptions tail_opt;
  tail_opt.skip = 5;
  std::vector<ScanRecord> head = scan_corpus(corpus, head_opt);
  std::vector<ScanRecord> tail = scan_corpus(corpus, tail_opt);
  REQUIRE(head.size() == 5);
  REQUIRE(head.size() + tail.size() == full.size());
  head.insert(head.end(), tail.begin(), tail.end());
  CHECK(head == full);

  ScanOptions none;
  none.max_graphs = 0;
  CHECK(scan_corpus(corpus, none).empty());
}

TEST_CASE("connectivity filter") {
  std::vector<Triangulation> corpus = enumerate_triangulations(8);
  ScanOptions opt;
  opt.min_connectivity = 4;
  std::vector<ScanRecord> got = scan_corpus(corpus, opt);
  long manual = 0;
  for (const Triangulation& t : corpus)
    if (vertex_connectivity(t, 5) >= 4) ++manual;
  CHECK(static_cast<long>(got.size()) == manual);
  for (const ScanRecord& r : got) CHECK(r.connectivity >= 4);

  ScanOptions bad;
  bad.min_connectivity = 6;
  CHECK_THROWS_AS(scan_corpus(corpus, bad), GraphError);
}

TEST_CASE("record json round trip") {
  ScanRecord r = analyze_graph(q_k(1).t, 5);
  r.graph_id = 42;
  ScanRecord back = scan_record_from_json(nlohmann::json::parse(scan_record_json(r).dump()));
  CHECK(back == r);
}

TEST_CASE("report validation accepts a real report") {
  std::vector<Triangulation> corpus = enumerate_triangulations(7);
  std::vector<ScanRecord> records = scan_corpus(corpus, ScanOptions{});
  std::string text = report_text(records);
  std::istringstream in(text + "\n\n");  // trailing blank lines are fine
  ReportCheck rc = validate_report(in);
  CHECK(rc.ok());
  CHECK(rc.records == static_cast<long>(records.size()));
  CHECK(rc.witnesses == 0);
  CHECK(rc.violations == 0);
}

TEST_CASE("report validation catches corruption") {
  std::vector<ScanRecord> records = scan_corpus(enumerate_triangulations(6), ScanOptions{});
  REQUIRE(records.size() == 2);

  auto problems_after = [&](auto mutate) {
    std::vector<ScanRecord> bad = records;
    mutate(bad);
    std::istringstream in(report_text(bad));
    return validate_report(in).problems;
  };

  CHECK(!problems_after([](auto& rs) { rs[1].tutte_witness = true; }).empty());
  CHECK(!problems_after([](auto& rs) { std::swap(rs[0], rs[1]); }).empty());
  CHECK(!problems_after([](auto& rs) { rs[0].num_components += 1; }).empty());
  CHECK(!problems_after([](auto& rs) { rs[0].num_colorings += 1; }).empty());
  CHECK(!problems_after([](auto& rs) { rs[0].canonical_code = "NOTHEX"; }).empty());
  CHECK(!problems_after([](auto& rs) { rs[0].euler_genus = 1; }).empty());
  // a multi-component record with its component list out of order
  CHECK(!problems_after([](auto& rs) {
          rs.push_back(analyze_graph(q_k(1).t, 5));
          rs.back().graph_id = 99;
          std::reverse(rs.back().components.begin(), rs.back().components.end());
        }).empty());

  std::istringstream garbage("this is not json\n");
  ReportCheck rc = validate_report(garbage);
  CHECK(!rc.ok());
  CHECK(rc.records == 0);
}

TEST_CASE("scan handles higher-genus and uncolorable graphs") {
  std::vector<Triangulation> corpus = {k7_torus(), torus_grid(3, 3), builtin("octahedron"),
                                       q_k(1).t};
  std::vector<ScanRecord> got = scan_corpus(corpus, ScanOptions{});
  REQUIRE(got.size() == 4);

  std::map<std::string, ScanRecord> by_code;
  for (const ScanRecord& r : got) by_code[r.canonical_code] = r;
  ScanRecord k7 = by_code.at(canonical_code(k7_torus()).hex());
  CHECK(k7.n == 7);
  CHECK(k7.euler_genus == 2);
  CHECK(k7.connectivity == 5);  // capped
  CHECK(k7.num_colorings == 0);
  CHECK(k7.num_components == 0);
  CHECK(k7.components.empty());
  CHECK(!k7.tutte_witness);
  CHECK(!k7.conjecture_violation);

  ScanRecord tg = by_code.at(canonical_code(torus_grid(3, 3)).hex());
  CHECK(tg.euler_genus == 2);
  CHECK(tg.num_colorings == 9);
  CHECK(tg.num_components == 1);
  CHECK(std::get<2>(tg.components[0]) == Parity::Even);

  // each record matches a direct analysis of its graph
  for (const Triangulation& t : corpus) {
    ScanRecord direct = analyze_graph(t, 5);
    ScanRecord scanned = by_code.at(direct.canonical_code);
    direct.graph_id = scanned.graph_id;
    CHECK(direct == scanned);
  }

  std::string text = report_text(got);
  std::istringstream in(text);
  ReportCheck rc = validate_report(in);
  CHECK(rc.ok());
  CHECK(rc.records == 4);
  CHECK(rc.witnesses == 1);  // the ringed example
}
