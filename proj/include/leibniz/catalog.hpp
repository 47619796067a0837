#pragma once

#include <optional>

#include "leibniz/invariants.hpp"

namespace leibniz {

// Families keyed by their defining parameters. Basis orders are frozen:
//   A(k)              f_1..f_k                                  (abelian)
//   l2                e, x            with [e,x] = e
//   r2                e, x            with [e,x] = e, [x,e] = -e
//   Lt(k,t)           e_1..e_t, x_1..x_t, y_1..y_{k-t}, f_1..f_{k-t}
//   R1(k), R2(k)      f_1..f_k, x
//   RAkk(k; alpha)    f_1..f_k, x_1..x_k        alpha_i in {0,-1}
//   mu1(n,k)          e_1..e_{n-2k}, f_1..f_{2k}                (n-2k >= 4)
//   mu2(n,k)          same order and constraint as mu1
//   mu3(n,k)          e_1..e_{n-2k}, f_1..f_{2k}                (n-2k-1 >= 4)
//   mu3_original(n,k) e_1..e_{n-2k-1}, f_1..f_{2k+1}
//   Rmu1(n,k; a_2..a_{n-2k+1})      mu1 basis then x
//   Rmu2(n,k; alpha,beta,gamma)     mu2 basis then x
//   Rmu3(n,k; subfamily params)     mu3 basis then x
enum class Family {
  A,
  l2,
  r2,
  Lt,
  R1,
  R2,
  RAkk,
  mu1,
  mu2,
  mu3,
  mu3_original,
  Rmu1,
  Rmu2,
  Rmu3,
};

enum class Subfamily { none, I1, I2, I3, I4 };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);
std::string subfamily_name(Subfamily s);
std::optional<Subfamily> subfamily_from_name(const std::string& s);

// params carries the family-specific free values, in this documented order:
//   RAkk   alpha_1..alpha_k
//   Rmu1   a_2..a_{n-2k+1}
//   Rmu2   alpha, beta, gamma
//   Rmu3   I1: a_4..a_{n-2k}, beta, gamma, delta2
//          I2: a_4..a_{n-2k}, b2, beta, delta3, theta_n
//          I3: a2, a_4..a_{n-2k}, beta          (a2 outside {-1,0})
//          I4: a1, a2, a_{n-2k}, b1, delta2, delta3, theta_n   (a1 nonzero)
struct CatalogSpec {
  Family family = Family::A;
  int n = 0;
  int k = 0;
  int t = 0;
  Subfamily subfamily = Subfamily::none;
  Vec params;
};

// Full parameter set of the solvable family over mu3; a_3 is not a parameter.
struct Rmu3Params {
  Rational a1, a2;
  Vec a_high;  // a_4 .. a_{n-2k}, size n-2k-3
  Rational b1, b2, beta, gamma, delta1, delta2, delta3;
  Vec theta;  // theta_{n-k+1} .. theta_n, size k
};

// Evaluates every defining relation on the parameter set exactly and returns
// the violated ones verbatim; empty means consistent.
std::vector<std::string> validate_I(int n, int k, const Rmu3Params& p);

// Expands a subfamily's free values (CatalogSpec::params layout above) into
// the full parameter set, applying the subfamily's fixed values and derived
// relations.
Rmu3Params rmu3_subfamily_params(int n, int k, Subfamily sf, const Vec& params);

Algebra make_abelian(int k);
Algebra make_l2();
Algebra make_r2();
Algebra make_lt(int k, int t);
Algebra make_r1(int k);
Algebra make_r2k(int k);
Algebra make_rakk(int k, const Vec& alpha);
Algebra make_mu1(int n, int k);
Algebra make_mu2(int n, int k);
Algebra make_mu3(int n, int k);
Algebra make_mu3_original(int n, int k);
Algebra make_rmu1(int n, int k, const Vec& a);
Algebra make_rmu2(int n, int k, const Rational& alpha, const Rational& beta,
                  const Rational& gamma);
Algebra make_rmu3(int n, int k, const Rmu3Params& p);  // validate_I enforced

// Dispatcher; parameter problems raise validation errors naming the violated
// relation.
Algebra make(const CatalogSpec& spec);

// Deterministic display name, e.g. "mu1(n=6,k=1)" or "RAkk(k=2,alpha=0,-1)".
std::string spec_name(const CatalogSpec& spec);

// Basis indices of the documented nilradical of the instance (every index for
// the nilpotent families).
std::vector<int> nilradical_indices(const CatalogSpec& spec);

struct Grid {
  int max_n = 12;    // ceiling on the defining n of the mu-families
  int max_k = 4;     // ceiling on k for the k-indexed families
  int samples = 3;   // seeded parameter draws per parametric solvable instance
  unsigned seed = 0;
};

// Deterministic enumeration for sweeps. Lt yields k+1 specs per k; RAkk
// enumerates all alpha tuples while 2^k stays small, seeded samples beyond;
// the parametric solvable families get `samples` seeded draws per (n,k),
// Rmu3 rotating through the four subfamilies.
std::vector<CatalogSpec> list_family_instances(Family family, const Grid& grid);

}  // namespace leibniz
