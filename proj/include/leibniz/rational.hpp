#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace leibniz {

using Rational = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rational>;

// Malformed external input (files, rational literals). CLI maps this to exit 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a documented precondition. CLI maps this to exit 3.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p" or "p/q" with arbitrary-precision integers, q != 0.
Rational rat_parse(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rat_str(const Rational& r);

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace leibniz
