// Copyright 2026 The ckpoints Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference vs OpenMP for the parallel kernels; every pair must agree.
// The search_ck reference solves each fiber with generic rational roots, so
// its gap is algorithmic as well as parallel.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ckpoints/family.hpp"
#include "ckpoints/ffcheck.hpp"
#include "ckpoints/search.hpp"

#ifdef CKPOINTS_HAVE_OPENMP
#include <omp.h>
#endif

using namespace ckp;

namespace {

template <class F>
double best_ms(int repeat, F f) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

int threads() {
#ifdef CKPOINTS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool row(const std::string& name, int repeat, const std::function<bool(bool)>& kernel) {
  bool same_serial = false, same_parallel = false;
  const double s = best_ms(repeat, [&] { same_serial = kernel(false); });
  const double p = best_ms(repeat, [&] { same_parallel = kernel(true); });
  const bool ok = same_serial && same_parallel;
  std::printf("%-32s %10.2f %10.2f %7.2fx  %s\n", name.c_str(), s, p, s / p, ok ? "match" : "MISMATCH");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ckpoints kernel benchmark"};
  int repeat = 3;
  long height = 60;
  long prime = 4001;
  app.add_option("--repeat", repeat)->capture_default_str();
  app.add_option("--height", height, "search height for the C_k and E searches")->capture_default_str();
  app.add_option("--prime", prime, "prime for the F_p count")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", threads());
  std::printf("%-32s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

  const auto ck_ref = search_ck_serial(Rational(135), height);
  const auto e = e_curve(2, Rational(-56000));
  const auto e_ref = search_e_serial(e, 4 * height);
  const std::vector<Integer> sextic = {Integer(1), Integer(0), Integer(0), Integer(0), Integer(0), Integer(-2), Integer(1)};
  const auto h_ref = search_hyperelliptic_serial(sextic, 20 * height);
  const auto c_ref = count_affine_quartic_serial(Integer(3), prime);

  bool ok = true;
  ok &= row("search_ck k=135 (generic ref)", repeat, [&](bool par) {
    return (par ? search_ck(Rational(135), height) : search_ck_serial(Rational(135), height)) == ck_ref;
  });
  ok &= row("search_e E2,-56000", repeat, [&](bool par) {
    return (par ? search_e(e, 4 * height) : search_e_serial(e, 4 * height)) == e_ref;
  });
  ok &= row("search_hyperelliptic sextic", repeat, [&](bool par) {
    return (par ? search_hyperelliptic(sextic, 20 * height) : search_hyperelliptic_serial(sextic, 20 * height)) == h_ref;
  });
  ok &= row("count C_3 over F_p", repeat, [&](bool par) {
    return (par ? count_affine_quartic(Integer(3), prime) : count_affine_quartic_serial(Integer(3), prime)) == c_ref;
  });
  return ok ? 0 : 1;
}
