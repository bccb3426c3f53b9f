// Compares the serial and OpenMP elimination/assembly kernels on the
// workloads that dominate the pipeline: the stacked derivation system for
// the invariant 5-forms and dense random eliminations.

#include <chrono>
#include <iostream>

#include "g2mae/exterior.hpp"
#include "g2mae/g2rep.hpp"

using namespace g2mae;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

QMatrix stacked_system(int degree) {
  const std::vector<QMatrix> ops = {g2rep::ad_operator(g2rep::OpName::Ealpha1),
                                    g2rep::ad_operator(g2rep::OpName::Eminusalpha1)};
  const long n = binom(10, degree);
  QMatrix stacked(2 * n, n);
  for (int k = 0; k < 2; ++k) {
    QMatrix d = derivation_matrix(ops[k], degree, 10, ExecPolicy::Serial);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) stacked.at(k * n + i, j) = d.at(i, j);
  }
  return stacked;
}

void bench_rref(const char* label, const QMatrix& m) {
  auto t0 = Clock::now();
  auto serial = rref(m, ExecPolicy::Serial);
  const double ts = ms_since(t0);
  t0 = Clock::now();
  auto parallel = rref(m, ExecPolicy::Parallel);
  const double tp = ms_since(t0);
  const bool same = serial.mat == parallel.mat && serial.pivot_cols == parallel.pivot_cols;
  std::cout << label << ": serial " << ts << " ms, parallel " << tp << " ms, speedup "
            << (tp > 0 ? ts / tp : 0.0) << (same ? "" : "  MISMATCH") << "\n";
  if (!same) std::exit(1);
}

}  // namespace

int main() {
  for (int degree : {4, 5}) {
    const QMatrix sys = stacked_system(degree);
    std::cout << "stacked derivation system, degree " << degree << " (" << sys.rows() << "x"
              << sys.cols() << ")\n";
    bench_rref("  rref", sys);
  }

  RatSampler rs(1);
  for (std::size_t n : {60, 120}) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rs.next_int(0, 2) == 0) m.at(i, j) = rs.next();
    std::cout << "dense random " << n << "x" << n << "\n";
    bench_rref("  rref", m);
  }

  const QMatrix e = g2rep::ad_operator(g2rep::OpName::Ealpha1);
  auto t0 = Clock::now();
  auto a = derivation_matrix(e, 5, 10, ExecPolicy::Serial);
  const double ts = ms_since(t0);
  t0 = Clock::now();
  auto b = derivation_matrix(e, 5, 10, ExecPolicy::Parallel);
  const double tp = ms_since(t0);
  std::cout << "derivation-matrix assembly (252 columns): serial " << ts << " ms, parallel "
            << tp << " ms" << (a == b ? "" : "  MISMATCH") << "\n";
  return a == b ? 0 : 1;
}
