#pragma once

#include <optional>

#include "leibniz/algebra.hpp"

namespace leibniz {

// Subspace of Q^n held by its reduced-echelon basis, so equal subspaces
// compare literally equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace whole(int ambient);
  static Subspace span(int ambient, const std::vector<Vec>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  bool operator==(const Subspace&) const = default;

 private:
  int ambient_ = 0;
  std::vector<Vec> basis_;  // RREF rows
};

// span of [u, v] over basis pairs of U x V
Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v);

// L^1 = L, L^{k+1} = [L^k, L]; terms through the first repeated or zero term.
std::vector<Subspace> lower_central_series(const Algebra& a);
// L^(1) = L, L^(s+1) = [L^(s), L^(s)]; same stopping rule.
std::vector<Subspace> derived_series(const Algebra& a);

struct NilpotencyStatus {
  bool nilpotent = false;
  std::optional<int> index;  // smallest m with L^m = 0
};
NilpotencyStatus nilpotency_status(const Algebra& a);

struct SolvabilityStatus {
  bool solvable = false;
  std::optional<int> index;  // smallest s with L^(s) = 0
};
SolvabilityStatus solvability_status(const Algebra& a);

Subspace right_annihilator(const Algebra& a);  // { v : [x, v] = 0 for all x }
Subspace center(const Algebra& a);             // { v : [v, x] = [x, v] = 0 for all x }

Matrix right_mult(const Algebra& a, const Vec& x);  // y -> [y, x]
Matrix left_mult(const Algebra& a, const Vec& x);   // y -> [x, y]

// Characteristic sequence: Jordan block sizes of the right multiplication
// operator, weakly decreasing.
using CharSeq = std::vector<int>;

// Preconditions: x outside L^2 and R_x nilpotent; both are errors otherwise.
CharSeq char_seq_at(const Algebra& a, const Vec& x);

// Lexicographic maximum of char_seq_at over a deterministic candidate set:
// basis vectors outside L^2, their pairwise sums, plus extra_candidates seeded
// random vectors. Nilpotent algebras only.
CharSeq char_seq_max(const Algebra& a, int extra_candidates = 8, unsigned seed = 0);

// char_seq_max == (n-p, 1, ..., 1) with p trailing ones
bool is_p_filiform(const Algebra& a, int p, int extra_candidates = 8, unsigned seed = 0);

// Associated graded algebra of a nilpotent algebra on an adapted basis
// (degree blocks L^i mod L^{i+1} in series order). Labels become g1..gn.
Algebra associated_graded(const Algebra& a);

struct Fingerprint {
  int dim = 0;
  std::vector<int> lcs_dims;
  std::vector<int> ds_dims;
  int dim_ann_r = 0;
  int dim_center = 0;
  int dim_der = 0;
  bool nilpotent = false;
  bool solvable = false;
  std::optional<CharSeq> char_seq;  // nilpotent algebras only
  bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const Algebra& a, int extra_candidates = 8, unsigned seed = 0);
// Name of the first differing field in documented comparison order, "" if equal.
std::string fingerprint_difference(const Fingerprint& x, const Fingerprint& y);

struct NilradicalVerdict {
  bool two_sided_ideal = false;
  bool nilpotent_subalgebra = false;
  // No single complementary basis direction extends the candidate to a larger
  // nilpotent ideal. One-sided probe, not a maximality proof.
  bool maximality_probe = false;
  bool maximality_vacuous = false;  // candidate is the whole algebra
  bool all_hold() const {
    return two_sided_ideal && nilpotent_subalgebra && maximality_probe;
  }
};
NilradicalVerdict check_nilradical_candidate(const Algebra& a, const Subspace& n);

}  // namespace leibniz
