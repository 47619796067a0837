#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

// Thread-count hint for the parallel kernels. 1 forces the serial reference
// path, 0 defers to the OpenMP runtime default. Results are identical for any
// value; only scheduling changes.
int threads();
void set_threads(int n);
// The hint resolved against the runtime: always 1 without OpenMP.
int effective_threads();

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Rational& c);
void vec_axpy(Vec& acc, const Rational& c, const Vec& x);  // acc += c * x

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(std::size_t(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& at(int i, int j) { return d_[std::size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return d_[std::size_t(i) * cols_ + j]; }

  Vec col(int j) const;
  void set_col(int j, const Vec& v);
  Vec row(int i) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  Matrix transposed() const;
  Matrix power(long e) const;  // square matrices, e >= 0
  Vec apply(const Vec& v) const;

  bool operator==(const Matrix& o) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> d_;
};

// Incremental exact echelonization of a stream of rows. Rows are held as
// sparse integer vectors (content-stripped, fraction-free combinations, int64
// coefficients promoted to GMP on overflow). The reduced row echelon form of
// a row space is unique, so every output is independent of insertion order,
// batching, and thread count.
class RowReducer {
 public:
  explicit RowReducer(int cols);

  void add_row(const Vec& v);
  void add_row(const std::vector<std::pair<int, Rational>>& terms);
  // Pre-reduces the batch against the frozen echelon prefix in parallel, then
  // finishes insertion serially in batch order.
  void add_rows(std::vector<std::vector<std::pair<int, Rational>>>&& batch);

  int cols() const { return cols_; }
  int rank() const { return int(rows_.size()); }

  // Unique RREF basis of the accumulated row space (leading coefficient 1).
  std::vector<Vec> rref_basis() const;
  // Canonical nullspace basis: the standard free-column construction,
  // re-echelonized so equality tests are literal.
  std::vector<Vec> nullspace() const;
  bool reduces_to_zero(const Vec& v) const;

 private:
  struct Row {
    std::vector<std::pair<int, long long>> s;
    std::vector<std::pair<int, Int>> b;
    bool big = false;
    bool empty() const { return big ? b.empty() : s.empty(); }
    int lead() const { return big ? b.front().first : s.front().first; }
  };

  static Row make_row(const std::vector<std::pair<int, Rational>>& terms);
  static void promote(Row& r);
  static void normalize(Row& r);  // strip content, make the leading coefficient positive
  // r <- lead(p) * r - r[lead(p)] * p; assumes r has a term at lead(p)
  static void combine(Row& r, const Row& p);
  // Eliminates against pivots with row index < limit (-1: no limit). Returns
  // false if the reduction stopped at a column without an eligible pivot.
  bool reduce(Row& r, int limit) const;

  void insert(Row&& r);

  int cols_;
  std::vector<Row> rows_;
  std::vector<int> pivot_row_;  // column -> index into rows_, or -1
};

int rank(const Matrix& m);
std::vector<Vec> nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);            // square input
std::optional<Vec> solve(const Matrix& m, const Vec& b);   // one solution if consistent

bool is_nilpotent_matrix(const Matrix& m);                 // non-square input is an error
// Jordan block sizes of a nilpotent matrix, weakly decreasing, from the rank
// profile of its powers. Non-nilpotent input is an error.
std::vector<int> jordan_blocks_nilpotent(const Matrix& m);

// Monic characteristic polynomial coefficients c_0..c_n (c_n = 1),
// Faddeev-LeVerrier over exact rationals.
std::vector<Rational> char_poly(const Matrix& m);

struct RootReport {
  std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity), sorted
  bool splits = false;                          // true iff multiplicities sum to the degree
};
RootReport rational_roots(const std::vector<Rational>& monic);

}  // namespace leibniz
