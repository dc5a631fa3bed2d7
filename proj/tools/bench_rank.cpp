// Benchmark: serial reference kernels vs the OpenMP ones on boundary
// matrices of catalog-style algebras. All strategies must agree on the
// rank; timings show where the parallel row updates pay off.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "liemult/catalog.hpp"
#include "liemult/multiplier.hpp"
#include "liemult/report.hpp"

using namespace liemult;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

struct Case {
  std::string name;
  LieAlgebra algebra;
};

void bench_case(const Case& c) {
  const ExactMatrix d3 = boundary_d3(c.algebra);
  std::printf("%-14s d3 is %4zu x %5zu, %6zu nonzeros\n", c.name.c_str(),
              d3.rows(), d3.cols(), d3.nnz());

  struct Run {
    const char* label;
    RankStrategy strategy;
  };
  const Run runs[] = {
      {"streaming (serial)", RankStrategy::streaming},
      {"bareiss   (serial)", RankStrategy::bareiss},
      {"bareiss   (openmp)", RankStrategy::bareiss_parallel},
  };
  std::size_t reference = 0;
  bool first = true;
  for (const Run& run : runs) {
    const auto start = clock_type::now();
    const std::size_t r = rank(d3, run.strategy);
    const double dt = seconds_since(start);
    std::printf("  %-20s rank %4zu   %8.3f s\n", run.label, r, dt);
    if (first) {
      reference = r;
      first = false;
    } else if (r != reference) {
      std::printf("  RANK MISMATCH (%zu vs %zu)\n", r, reference);
      std::exit(1);
    }
  }

  // prime-field kernels on the same matrix, reduced mod a fixed prime
  const std::uint32_t p = 1073741789;  // largest prime below 2^30
  const StructureConstants mod =
      convert_field(c.algebra.sc(), FieldDescriptor::prime_field(p));
  const ExactMatrix d3p = boundary_d3(LieAlgebra::validate(mod));
  for (bool parallel : {false, true}) {
    const auto start = clock_type::now();
    const std::size_t r = rank(
        d3p, parallel ? RankStrategy::bareiss_parallel : RankStrategy::bareiss);
    const double dt = seconds_since(start);
    std::printf("  gf(p)     (%s) rank %4zu   %8.3f s\n",
                parallel ? "openmp" : "serial", r, dt);
    if (r != reference) {
      std::printf("  RANK MISMATCH mod p (%zu vs %zu)\n", r, reference);
      std::exit(1);
    }
  }
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_filiform = 20;
  if (argc > 1) max_filiform = std::stoul(argv[1]);
#ifdef _OPENMP
  std::printf("openmp: %d thread(s)\n\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled\n\n");
#endif

  std::vector<Case> cases;
  for (std::size_t n = 12; n <= max_filiform; n += 4)
    cases.push_back({"filiform_" + std::to_string(n), make_filiform(n)});
  cases.push_back({"heisenberg_7", make_heisenberg(7)});

  for (const Case& c : cases) bench_case(c);
  return 0;
}
