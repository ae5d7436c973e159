// Timing comparison of the OpenMP kernels against their serial references:
// action-matrix assembly and batch word reduction.

#include <chrono>
#include <iostream>
#include <vector>

#include "qweyl/minorops.hpp"
#include "qweyl/paction.hpp"
#include "qweyl/parallel.hpp"
#include "qweyl/suites.hpp"

using namespace qweyl;
using Clock = std::chrono::steady_clock;

namespace {

double ms(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

void benchActionMatrix(int m, int n, long d) {
  WeylElement D(filtered(m, n));
  RatQ q2m1 = RatQ::qpow(2) - RatQ(1);
  for (long r = 0; r <= m; ++r) D = D + D_r(r, m, n).scaled(q2m1.pow(r));

  auto t0 = Clock::now();
  QMatrix serial = action_matrix_serial(D, d);
  auto t1 = Clock::now();
  QMatrix parallel = action_matrix(D, d);
  auto t2 = Clock::now();

  bool same = serial == parallel;
  std::cout << "action_matrix " << m << "x" << n << " deg " << d << " (dim " << serial.rows()
            << "): serial " << ms(t0, t1) << " ms, parallel " << ms(t1, t2) << " ms, "
            << (same ? "results match" : "RESULTS DIFFER") << "\n";
}

void benchBatchReduce(int m, int n, int words, int len) {
  Rng rng(1);
  AlgebraSpec spec = filtered(m, n);
  std::vector<std::vector<GenRef>> batch;
  batch.reserve(words);
  for (int i = 0; i < words; ++i) batch.push_back(random_word(rng, spec, len));

  std::vector<WeylElement> out1(batch.size()), out2(batch.size());
  auto t0 = Clock::now();
  serial_for(batch.size(), [&](size_t i) { out1[i] = normal_form(batch[i], spec); });
  auto t1 = Clock::now();
  parallel_for(batch.size(), [&](size_t i) { out2[i] = normal_form(batch[i], spec); });
  auto t2 = Clock::now();

  bool same = out1 == out2;
  std::cout << "normal_form batch " << words << " words len " << len << " in " << m << "x" << n
            << ": serial " << ms(t0, t1) << " ms, parallel " << ms(t1, t2) << " ms, "
            << (same ? "results match" : "RESULTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  benchActionMatrix(2, 2, 2 + scale);
  benchActionMatrix(3, 3, 2);
  benchBatchReduce(2, 2, 400 * scale, 6);
  benchBatchReduce(3, 3, 150 * scale, 6);
  return 0;
}
