// bench_census: wall-clock comparison of the serial census against the
// OpenMP-sharded one, verifying byte-identical output along the way.

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kpo/census.hpp"

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 5;
  int threads = 8;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (argc > 2) threads = std::atoi(argv[2]);

  auto timed = [&](int jobs, std::string* jsonl) {
    kpo::CensusOptions opts;
    opts.jobs = jobs;
    auto t0 = std::chrono::steady_clock::now();
    auto records = kpo::run_census(n, opts);
    auto t1 = std::chrono::steady_clock::now();
    *jsonl = kpo::census_to_jsonl(records);
    return std::chrono::duration<double>(t1 - t0).count();
  };

  std::string serial_out, parallel_out;
  double serial = timed(1, &serial_out);
  double parallel = timed(threads, &parallel_out);
  std::cout << "census n=" << n << "\n";
  std::cout << "  serial reference: " << serial << " s\n";
  std::cout << "  " << threads << " shards:        " << parallel << " s ("
            << serial / parallel << "x)\n";
  if (serial_out != parallel_out) {
    std::cout << "  OUTPUT MISMATCH between serial and sharded runs\n";
    return 1;
  }
  std::cout << "  outputs byte-identical\n";
  return 0;
}
