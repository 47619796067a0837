#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

// Sparse coordinates: (basis index, coefficient), sorted by index, nonzero
// coefficients, at most one term per index.
using Terms = std::vector<std::pair<int, Rational>>;

Terms to_terms(const Vec& v);
Vec to_dense(const Terms& t, int dim);

// One failing instance of the Leibniz identity
//   L(x,y,z) = [x,[y,z]] - [[x,y],z] + [[x,z],y]
// on a basis triple. Indices are 0-based; value holds the coordinates of L.
struct LeibnizDefect {
  int i = 0, j = 0, k = 0;
  Vec value;
  bool operator==(const LeibnizDefect&) const = default;
};

// A finite-dimensional algebra over Q given by structure constants. The table
// stores only nonzero products [b_i, b_j]; any bilinear product is
// representable, bracket names come from the Leibniz setting.
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(int dim);
  Algebra(int dim, std::vector<std::string> labels);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Replaces the (i,j) entry; terms are normalized, zeros dropped.
  void set_bracket(int i, int j, Terms terms);
  void add_term(int i, int j, int k, const Rational& c);
  // nullptr when [b_i, b_j] = 0
  const Terms* entry(int i, int j) const;
  const std::map<std::pair<int, int>, Terms>& table() const { return table_; }

  Vec bracket_basis(int i, int j) const;
  // Bilinear extension of the table.
  Vec bracket(const Vec& u, const Vec& v) const;

  // Structural equality: dimension and table. Labels are presentation only.
  bool operator==(const Algebra& o) const {
    return dim_ == o.dim_ && table_ == o.table_;
  }

 private:
  void check_index(int i) const;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::map<std::pair<int, int>, Terms> table_;
};

// All basis triples where the Leibniz identity fails, in lexicographic order.
std::vector<LeibnizDefect> verify_leibniz(const Algebra& a);

// Substitution convention: column j of g holds the coordinates of the new
// basis vector b'_j in the old basis, and the new table is
// c'(i,j) = g^{-1} [g b_i, g b_j]. Labels carry over positionally.
// Singular or wrongly sized g is an error.
Algebra change_basis(const Algebra& a, const Matrix& g);

// Block-diagonal product on the concatenated bases.
Algebra direct_sum(const Algebra& a, const Algebra& b);

}  // namespace leibniz
