#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccx/enumerate.hpp"
#include "ccx/scan.hpp"

using namespace ccx;
using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 10;
  if (n < 4 || n > 14) {
    std::cerr << "usage: ccx_bench [n in 4..14]\n";
    return 1;
  }
#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  std::cout << "threads: " << threads << "\n";

  auto t0 = Clock::now();
  std::vector<Triangulation> corpus = enumerate_triangulations(n);
  double t_enum = seconds_since(t0);
  std::cout << "enumerate n=" << n << ": " << corpus.size() << " graphs in " << t_enum << "s\n";

  ScanOptions opt;
  t0 = Clock::now();
  std::vector<ScanRecord> serial = scan_corpus_serial(corpus, opt);
  double t_serial = seconds_since(t0);
  std::cout << "scan serial:   " << t_serial << "s\n";

  t0 = Clock::now();
  std::vector<ScanRecord> parallel = scan_corpus(corpus, opt);
  double t_parallel = seconds_since(t0);
  std::cout << "scan parallel: " << t_parallel << "s ("
            << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x)\n";

  if (serial != parallel) {
    std::cerr << "FAIL: parallel scan diverged from the serial reference\n";
    return 1;
  }
  std::cout << "records identical: " << serial.size() << "\n";
  return 0;
}
