#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "repcensus/errors.hpp"

namespace repcensus {

using Int = mpz_class;

// Accumulates a product of positive rational factors as separate numerator
// and denominator products, reducing by their gcd periodically so the
// intermediates stay proportional to the final value. The final value must
// be an integer; finalize() checks the exact division and throws
// IntegralityFault otherwise.
class ExactProduct {
 public:
  ExactProduct() : num_(1), den_(1) {}

  void mul_num(std::int64_t v);
  void mul_den(std::int64_t v);
  void mul(std::int64_t num, std::int64_t den) {
    mul_num(num);
    mul_den(den);
  }
  void mul(const Int& num, const Int& den);
  void mul_num(const Int& v);

  // True iff the current value is strictly greater than bound.
  bool exceeds(const Int& bound) const;

  // Exact integer value. Throws IntegralityFault if the fully reduced
  // denominator is not 1.
  Int finalize() const;

  const Int& raw_num() const { return num_; }
  const Int& raw_den() const { return den_; }

 private:
  void maybe_reduce();

  Int num_;
  Int den_;
  int pending_ = 0;
};

// Floor of the square root, exact for all inputs.
std::uint64_t isqrt_u64(std::uint64_t x);

// An exact non-negative rational, reduced on demand. Used for report margins.
struct Frac {
  Int num;
  Int den;

  Frac() : num(0), den(1) {}
  Frac(Int n, Int d) : num(std::move(n)), den(std::move(d)) {}

  void reduce();
  std::string str() const;  // "p/q" after reduction

  // this < other, exact cross multiplication
  bool less_than(const Frac& other) const;
};

}  // namespace repcensus
