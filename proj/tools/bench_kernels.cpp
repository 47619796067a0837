// Compares the serial and OpenMP paths of the two parallel kernels and checks
// that both produce identical results. Timings are informational; the equality
// column is the contract. --smoke shrinks the workload for CI.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>

#include "leibniz/catalog.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/derivations.hpp"

using namespace leibniz;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return ms_since(t0);
}

// Unimodular mixing change; keeps the table integral but makes it dense, so
// the row batches carry realistic work.
Matrix mixing_change(int n, unsigned seed) {
  std::mt19937 rng(seed);
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) g.at(i, i) = rat(1);
  for (int s = 0; s < 3 * n; ++s) {
    const int i = int(rng() % n), j = int(rng() % n);
    if (i == j) continue;
    const Rational c = rat(rng() % 2 ? 1 : -1);
    for (int r = 0; r < n; ++r) g.at(r, j) += c * g.at(r, i);
  }
  return g;
}

Algebra random_table(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  Algebra a(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Terms t;
      t.emplace_back(int(rng() % dim), rat(int(rng() % 9) - 4));
      a.set_bracket(i, j, std::move(t));
    }
  return a;
}

void report(const char* kernel, double serial_ms, double parallel_ms,
            bool equal) {
  std::printf(
      "%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   equal %s\n",
      kernel, serial_ms, parallel_ms,
      parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "yes" : "NO");
}

int run(bool smoke) {
  const int par = 4;
  bool all_equal = true;

  {
    const Algebra base = smoke ? make_mu3(9, 2) : make_mu3(12, 3);
    const Algebra a = change_basis(base, mixing_change(base.dim(), 1));
    std::vector<LeibnizDefect> ds, dp;
    set_threads(1);
    const double ts = timed([&] { ds = verify_leibniz(a); });
    set_threads(par);
    const double tp = timed([&] { dp = verify_leibniz(a); });
    const bool eq = ds.empty() && dp.empty();
    all_equal = all_equal && eq;
    report("identity check (clean)", ts, tp, eq);
  }

  {
    const Algebra a = random_table(smoke ? 6 : 10, 2);
    std::vector<LeibnizDefect> ds, dp;
    set_threads(1);
    const double ts = timed([&] { ds = verify_leibniz(a); });
    set_threads(par);
    const double tp = timed([&] { dp = verify_leibniz(a); });
    bool eq = ds.size() == dp.size();
    for (size_t i = 0; eq && i < ds.size(); ++i)
      eq = ds[i].i == dp[i].i && ds[i].j == dp[i].j && ds[i].k == dp[i].k &&
           ds[i].value == dp[i].value;
    all_equal = all_equal && eq;
    report("identity check (defects)", ts, tp, eq);
  }

  {
    const Algebra base = smoke ? make_mu2(8, 2) : make_mu2(12, 3);
    const Algebra a = change_basis(base, mixing_change(base.dim(), 3));
    DerivationBasis s, p;
    set_threads(1);
    const double ts = timed([&] { s = derivation_space(a); });
    set_threads(par);
    const double tp = timed([&] { p = derivation_space(a); });
    bool eq = s.dim() == p.dim();
    for (int i = 0; eq && i < s.dim(); ++i) eq = s.basis[i] == p.basis[i];
    all_equal = all_equal && eq;
    report("derivation space", ts, tp, eq);
  }

  {
    const Algebra a = smoke ? make_lt(2, 1) : make_lt(3, 1);
    CohomologyReport s{}, p{};
    set_threads(1);
    const double ts = timed([&] { s = cohomology(a); });
    set_threads(par);
    const double tp = timed([&] { p = cohomology(a); });
    const bool eq = s.zl2 == p.zl2 && s.bl2 == p.bl2 && s.hl2 == p.hl2;
    all_equal = all_equal && eq;
    report("second cohomology", ts, tp, eq);
  }

  std::printf("effective thread count for the parallel runs: %d\n",
              effective_threads());
  if (!all_equal) {
    std::printf("MISMATCH between serial and parallel results\n");
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  bool smoke = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--smoke") == 0) smoke = true;
  return run(smoke);
}
