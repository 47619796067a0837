#pragma once

#include "leibniz/invariants.hpp"

namespace leibniz {

// d is n x n in column convention: column v holds the coordinates of d(b_v).
bool is_derivation(const Algebra& a, const Matrix& d);

struct DerivationBasis {
  int n = 0;
  // Canonical: the matrices, flattened row-major to n^2-vectors, form a
  // reduced-echelon basis of the solution space.
  std::vector<Matrix> basis;
  int dim() const { return int(basis.size()); }
};
DerivationBasis derivation_space(const Algebra& a);

enum class NilIndependenceMode { commuting_exact, randomized };

struct NilIndependenceVerdict {
  enum class Kind { certified_independent, dependent, no_dependence_found };
  Kind kind = Kind::no_dependence_found;
  Vec witness;  // nonzero coefficients with nilpotent combination, when dependent
};

// commuting_exact: requires pairwise commuting matrices whose characteristic
// polynomials split over Q (errors otherwise); the verdict is two-sided.
// randomized: seeded candidate sweep; only "dependent" is a certificate.
NilIndependenceVerdict nil_independence(const std::vector<Matrix>& mats,
                                        NilIndependenceMode mode,
                                        int samples = 64, unsigned seed = 0);

// Data for a solvable extension of a nilpotent algebra N (dim m) by an
// abelian complement spanned by q_1..q_s. Empty containers mean zero maps.
struct ExtensionSpec {
  Algebra nilradical;
  int s = 0;
  std::vector<Matrix> right_action;            // s matrices m x m: n -> [n, q_j]
  std::vector<std::vector<Vec>> left_action;   // [j][i]: N-coords of [q_j, n_i]
  std::vector<std::vector<Vec>> qq_products;   // [j][t]: N-coords of [q_j, q_t]
  std::vector<std::vector<Vec>> q_on_q;        // [j][t]: Q-coords of [q_j, q_t], normally zero
  std::vector<std::string> q_labels;           // defaults to "x" or "x1".."xs"
};

struct ExtensionResult {
  Algebra algebra;
  std::vector<LeibnizDefect> leibniz_report;
};

// Right-action matrices must be derivations of the nilradical (checked
// eagerly, validation error otherwise). The result is not required to satisfy
// the Leibniz identity; the attached report says whether it does.
ExtensionResult build_extension(const ExtensionSpec& spec);

}  // namespace leibniz
