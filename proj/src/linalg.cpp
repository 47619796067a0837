#include "leibniz/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace leibniz {

namespace {

std::atomic<int> g_threads{0};

// int64 fast path keeps magnitudes below 2^62 so gcd/negation never hit the
// LLONG_MIN edge; anything larger promotes the row to GMP coefficients.
constexpr long long kSmallBound = 1LL << 62;

static_assert(sizeof(long) == sizeof(long long), "int64 fast path assumes LP64");

Int to_int(long long v) { return Int(static_cast<long>(v)); }

bool mul_ok(long long a, long long b, long long* out) {
  if (__builtin_mul_overflow(a, b, out)) return false;
  return *out < kSmallBound && *out > -kSmallBound;
}

bool sub_ok(long long a, long long b, long long* out) {
  if (__builtin_sub_overflow(a, b, out)) return false;
  return *out < kSmallBound && *out > -kSmallBound;
}

}  // namespace

int threads() { return g_threads.load(); }

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int effective_threads() {
#ifdef _OPENMP
  const int t = g_threads.load();
  return t == 0 ? omp_get_max_threads() : t;
#else
  return 1;
#endif
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scaled(const Vec& a, const Rational& c) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

void vec_axpy(Vec& acc, const Rational& c, const Vec& x) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (sgn(x[i]) != 0) acc[i] += c * x[i];
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : d_)
    if (sgn(x) != 0) return false;
  return true;
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_col(int j, const Vec& v) {
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Vec Matrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (sgn(o.at(k, j)) != 0) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r(*this);
  for (std::size_t i = 0; i < r.d_.size(); ++i) r.d_[i] += o.d_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r(*this);
  for (std::size_t i = 0; i < r.d_.size(); ++i) r.d_[i] -= o.d_[i];
  return r;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(*this);
  for (auto& x : r.d_) x *= c;
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::power(long e) const {
  Matrix acc = Matrix::identity(rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

Vec Matrix::apply(const Vec& v) const {
  Vec r(rows_);
  for (int j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (int i = 0; i < rows_; ++i)
      if (sgn(at(i, j)) != 0) r[i] += at(i, j) * v[j];
  }
  return r;
}

RowReducer::RowReducer(int cols) : cols_(cols), pivot_row_(cols, -1) {}

RowReducer::Row RowReducer::make_row(const std::vector<std::pair<int, Rational>>& terms) {
  std::vector<std::pair<int, Rational>> t(terms);
  std::sort(t.begin(), t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Rational>> merged;
  merged.reserve(t.size());
  for (auto& e : t) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  Int l(1);
  for (auto& e : merged)
    if (sgn(e.second) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
  Row r;
  bool fits = true;
  std::vector<std::pair<int, Int>> big;
  big.reserve(merged.size());
  for (auto& e : merged) {
    if (sgn(e.second) == 0) continue;
    Int v = e.second.get_num() * (l / e.second.get_den());
    if (!mpz_fits_slong_p(v.get_mpz_t()) ||
        v.get_si() >= kSmallBound || v.get_si() <= -kSmallBound)
      fits = false;
    big.emplace_back(e.first, std::move(v));
  }
  if (fits) {
    r.big = false;
    r.s.reserve(big.size());
    for (auto& e : big) r.s.emplace_back(e.first, e.second.get_si());
  } else {
    r.big = true;
    r.b = std::move(big);
  }
  normalize(r);
  return r;
}

void RowReducer::promote(Row& r) {
  if (r.big) return;
  r.b.clear();
  r.b.reserve(r.s.size());
  for (auto& e : r.s) r.b.emplace_back(e.first, to_int(e.second));
  r.s.clear();
  r.big = true;
}

void RowReducer::normalize(Row& r) {
  if (r.empty()) return;
  if (!r.big) {
    long long g = 0;
    for (auto& e : r.s) g = std::gcd(g, e.second);
    if (r.s.front().second < 0) g = -g;
    if (g != 1)
      for (auto& e : r.s) e.second /= g;
  } else {
    Int g(0);
    for (auto& e : r.b) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (sgn(r.b.front().second) < 0) g = -g;
    if (g != 1)
      for (auto& e : r.b) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    // demote when everything fits again
    bool fits = true;
    for (auto& e : r.b)
      if (!mpz_fits_slong_p(e.second.get_mpz_t()) ||
          e.second.get_si() >= kSmallBound || e.second.get_si() <= -kSmallBound) {
        fits = false;
        break;
      }
    if (fits) {
      r.s.clear();
      r.s.reserve(r.b.size());
      for (auto& e : r.b) r.s.emplace_back(e.first, e.second.get_si());
      r.b.clear();
      r.big = false;
    }
  }
}

void RowReducer::combine(Row& r, const Row& p) {
  if (!r.big && !p.big) {
    const long long a = p.s.front().second;
    long long b = 0;
    for (auto& e : r.s)
      if (e.first == p.s.front().first) {
        b = e.second;
        break;
      }
    thread_local std::vector<std::pair<int, long long>> scratch;
    scratch.clear();
    scratch.reserve(r.s.size() + p.s.size());
    bool ok = true;
    std::size_t i = 0, j = 0;
    while (ok && (i < r.s.size() || j < p.s.size())) {
      long long v = 0;
      int c;
      if (j == p.s.size() || (i < r.s.size() && r.s[i].first < p.s[j].first)) {
        c = r.s[i].first;
        ok = mul_ok(a, r.s[i].second, &v);
        ++i;
      } else if (i == r.s.size() || p.s[j].first < r.s[i].first) {
        long long bv;
        c = p.s[j].first;
        ok = mul_ok(b, p.s[j].second, &bv) && sub_ok(0, bv, &v);
        ++j;
      } else {
        long long av, bv;
        c = r.s[i].first;
        ok = mul_ok(a, r.s[i].second, &av) && mul_ok(b, p.s[j].second, &bv) &&
             sub_ok(av, bv, &v);
        ++i;
        ++j;
      }
      if (ok && v != 0) scratch.emplace_back(c, v);
    }
    if (ok) {
      r.s.assign(scratch.begin(), scratch.end());
      normalize(r);
      return;
    }
    promote(r);
  }
  if (!r.big) promote(r);
  const Row* pp = &p;
  Row pc;
  if (!p.big) {
    pc = p;
    promote(pc);
    pp = &pc;
  }
  const Int& a = pp->b.front().second;
  Int b(0);
  for (auto& e : r.b)
    if (e.first == pp->b.front().first) {
      b = e.second;
      break;
    }
  std::vector<std::pair<int, Int>> out;
  out.reserve(r.b.size() + pp->b.size());
  std::size_t i = 0, j = 0;
  while (i < r.b.size() || j < pp->b.size()) {
    Int v;
    int c;
    if (j == pp->b.size() || (i < r.b.size() && r.b[i].first < pp->b[j].first)) {
      c = r.b[i].first;
      v = a * r.b[i].second;
      ++i;
    } else if (i == r.b.size() || pp->b[j].first < r.b[i].first) {
      c = pp->b[j].first;
      v = -b * pp->b[j].second;
      ++j;
    } else {
      c = r.b[i].first;
      v = a * r.b[i].second - b * pp->b[j].second;
      ++i;
      ++j;
    }
    if (sgn(v) != 0) out.emplace_back(c, std::move(v));
  }
  r.b = std::move(out);
  normalize(r);
}

bool RowReducer::reduce(Row& r, int limit) const {
  while (!r.empty()) {
    const int l = r.lead();
    const int pr = pivot_row_[l];
    if (pr < 0 || (limit >= 0 && pr >= limit)) return false;
    combine(r, rows_[pr]);
  }
  return true;
}

void RowReducer::insert(Row&& r) {
  pivot_row_[r.lead()] = int(rows_.size());
  rows_.push_back(std::move(r));
}

void RowReducer::add_row(const Vec& v) {
  std::vector<std::pair<int, Rational>> terms;
  for (int j = 0; j < int(v.size()); ++j)
    if (sgn(v[j]) != 0) terms.emplace_back(j, v[j]);
  add_row(terms);
}

void RowReducer::add_row(const std::vector<std::pair<int, Rational>>& terms) {
  Row r = make_row(terms);
  reduce(r, -1);
  if (!r.empty()) insert(std::move(r));
}

void RowReducer::add_rows(std::vector<std::vector<std::pair<int, Rational>>>&& batch) {
  const int frozen = int(rows_.size());
  const int nt = effective_threads();
  std::vector<Row> prepared(batch.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(nt) if (nt != 1)
#endif
  for (long i = 0; i < long(batch.size()); ++i) {
    prepared[i] = make_row(batch[i]);
    reduce(prepared[i], frozen);
  }
  for (auto& r : prepared) {
    reduce(r, -1);
    if (!r.empty()) insert(std::move(r));
  }
  batch.clear();
}

std::vector<Vec> RowReducer::rref_basis() const {
  std::vector<int> pcols;
  for (int c = 0; c < cols_; ++c)
    if (pivot_row_[c] >= 0) pcols.push_back(c);
  std::vector<Row> work;
  work.reserve(pcols.size());
  for (int c : pcols) work.push_back(rows_[pivot_row_[c]]);
  for (int j = int(pcols.size()) - 1; j >= 1; --j)
    for (int i = 0; i < j; ++i) {
      bool hit = false;
      if (work[i].big) {
        for (auto& e : work[i].b)
          if (e.first == pcols[j]) {
            hit = sgn(e.second) != 0;
            break;
          }
      } else {
        for (auto& e : work[i].s)
          if (e.first == pcols[j]) {
            hit = e.second != 0;
            break;
          }
      }
      if (hit) combine(work[i], work[j]);
    }
  std::vector<Vec> out;
  out.reserve(work.size());
  for (auto& r : work) {
    Vec v(cols_);
    if (r.big) {
      Rational lead(r.b.front().second);
      for (auto& e : r.b) v[e.first] = Rational(e.second) / lead;
    } else {
      Rational lead(to_int(r.s.front().second));
      for (auto& e : r.s) v[e.first] = Rational(to_int(e.second)) / lead;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> RowReducer::nullspace() const {
  const std::vector<Vec> rr = rref_basis();
  std::vector<int> pcols;
  for (int c = 0; c < cols_; ++c)
    if (pivot_row_[c] >= 0) pcols.push_back(c);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pcols) is_pivot[c] = true;
  RowReducer canon(cols_);
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::pair<int, Rational>> terms;
    terms.emplace_back(f, Rational(1));
    for (std::size_t r = 0; r < pcols.size(); ++r)
      if (sgn(rr[r][f]) != 0) terms.emplace_back(pcols[r], -rr[r][f]);
    canon.add_row(terms);
  }
  return canon.rref_basis();
}

bool RowReducer::reduces_to_zero(const Vec& v) const {
  std::vector<std::pair<int, Rational>> terms;
  for (int j = 0; j < int(v.size()); ++j)
    if (sgn(v[j]) != 0) terms.emplace_back(j, v[j]);
  Row r = make_row(terms);
  reduce(r, -1);
  return r.empty();
}

int rank(const Matrix& m) {
  RowReducer red(m.cols());
  for (int i = 0; i < m.rows(); ++i) red.add_row(m.row(i));
  return red.rank();
}

std::vector<Vec> nullspace(const Matrix& m) {
  RowReducer red(m.cols());
  for (int i = 0; i < m.rows(); ++i) red.add_row(m.row(i));
  return red.nullspace();
}

namespace {

// Gauss-Jordan over the first lead_cols columns; returns the pivot columns.
std::vector<int> dense_rref(Matrix& m, int lead_cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < lead_cols && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (sgn(m.at(i, c)) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    const Rational inv = 1 / m.at(r, c);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m.at(i, c)) == 0) continue;
      const Rational f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j)
        if (sgn(m.at(r, j)) != 0) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix must be square");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  if (int(dense_rref(aug, n).size()) < n) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (int(b.size()) != m.rows()) throw std::invalid_argument("solve: size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  const std::vector<int> pivots = dense_rref(aug, m.cols());
  for (int i = int(pivots.size()); i < m.rows(); ++i)
    if (sgn(aug.at(i, m.cols())) != 0) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), m.cols());
  return x;
}

bool is_nilpotent_matrix(const Matrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("is_nilpotent_matrix: matrix must be square");
  const int n = m.rows();
  if (n == 0) return true;
  Matrix p = m;
  long e = 1;
  while (e < n && !p.is_zero()) {
    p = p * p;
    e *= 2;
  }
  return p.is_zero();
}

std::vector<int> jordan_blocks_nilpotent(const Matrix& m) {
  if (!is_nilpotent_matrix(m))
    throw std::invalid_argument("jordan_blocks_nilpotent: matrix is not nilpotent");
  const int n = m.rows();
  std::vector<int> ranks{n};  // ranks[j] = rank(m^j)
  Matrix p = Matrix::identity(n);
  while (ranks.back() > 0) {
    p = p * m;
    ranks.push_back(rank(p));
  }
  const int maxsize = int(ranks.size()) - 1;
  // blocks_ge[j] = number of blocks of size >= j
  std::vector<int> blocks_ge(maxsize + 2, 0);
  for (int j = 1; j <= maxsize; ++j) blocks_ge[j] = ranks[j - 1] - ranks[j];
  std::vector<int> sizes;
  for (int j = maxsize; j >= 1; --j)
    for (int c = 0; c < blocks_ge[j] - blocks_ge[j + 1]; ++c) sizes.push_back(j);
  return sizes;
}

std::vector<Rational> char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: matrix must be square");
  const int n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix acc = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    acc = m * acc;
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += acc.at(i, i);
    c[n - k] = -tr / k;
    for (int i = 0; i < n; ++i) acc.at(i, i) += c[n - k];
  }
  return c;
}

namespace {

std::vector<Int> positive_divisors(Int v) {
  if (sgn(v) < 0) v = -v;
  std::vector<Int> out;
  for (Int i = 1; i * i <= v; ++i)
    if (v % i == 0) {
      out.push_back(i);
      out.push_back(v / i);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational acc(0);
  for (int i = int(c.size()) - 1; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

// Divides by (x - r); the remainder is known to vanish.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  const int d = int(c.size()) - 1;
  std::vector<Rational> q(d);
  Rational carry = c[d];
  for (int i = d - 1; i >= 0; --i) {
    q[i] = carry;
    carry = c[i] + r * carry;
  }
  return q;
}

}  // namespace

RootReport rational_roots(const std::vector<Rational>& monic) {
  if (monic.empty() || monic.back() != 1)
    throw std::invalid_argument("rational_roots: polynomial must be monic");
  RootReport rep;
  std::vector<Rational> cur = monic;
  int zero_mult = 0;
  while (cur.size() > 1 && sgn(cur.front()) == 0) {
    cur.erase(cur.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) rep.roots.emplace_back(Rational(0), zero_mult);
  if (cur.size() > 1) {
    Int den_lcm(1);
    for (const auto& x : cur)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    Int a0 = Rational(cur.front() * den_lcm).get_num();
    Int ad = Rational(cur.back() * den_lcm).get_num();
    std::set<Rational> candidates;
    for (const Int& p : positive_divisors(a0))
      for (const Int& q : positive_divisors(ad)) {
        Rational r(p, q);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    for (const Rational& cand : candidates) {
      int mult = 0;
      while (cur.size() > 1 && sgn(eval_poly(cur, cand)) == 0) {
        cur = deflate(cur, cand);
        ++mult;
      }
      if (mult > 0) rep.roots.emplace_back(cand, mult);
      if (cur.size() <= 1) break;
    }
  }
  std::sort(rep.roots.begin(), rep.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  rep.splits = cur.size() <= 1;
  return rep;
}

}  // namespace leibniz
