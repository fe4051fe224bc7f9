#include "repcensus/bigint.hpp"

#include <cassert>

namespace repcensus {

namespace {
constexpr int kReduceEvery = 48;
}

void ExactProduct::mul_num(std::int64_t v) {
  assert(v > 0);
  mpz_mul_ui(num_.get_mpz_t(), num_.get_mpz_t(),
             static_cast<unsigned long>(v));
  maybe_reduce();
}

void ExactProduct::mul_den(std::int64_t v) {
  assert(v > 0);
  mpz_mul_ui(den_.get_mpz_t(), den_.get_mpz_t(),
             static_cast<unsigned long>(v));
  maybe_reduce();
}

void ExactProduct::mul(const Int& num, const Int& den) {
  assert(sgn(num) > 0 && sgn(den) > 0);
  num_ *= num;
  den_ *= den;
  maybe_reduce();
}

void ExactProduct::mul_num(const Int& v) {
  assert(sgn(v) > 0);
  num_ *= v;
  maybe_reduce();
}

void ExactProduct::maybe_reduce() {
  if (++pending_ < kReduceEvery) return;
  pending_ = 0;
  Int g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

bool ExactProduct::exceeds(const Int& bound) const {
  Int rhs = bound * den_;
  return num_ > rhs;
}

Int ExactProduct::finalize() const {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num_.get_mpz_t(),
              den_.get_mpz_t());
  if (r != 0) {
    throw IntegralityFault("dimension product did not reduce to an integer");
  }
  return q;
}

std::uint64_t isqrt_u64(std::uint64_t x) {
  Int big;
  mpz_import(big.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  Int root;
  mpz_sqrt(root.get_mpz_t(), big.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, root.get_mpz_t());
  return out;
}

void Frac::reduce() {
  if (den == 0) return;
  Int g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
}

std::string Frac::str() const {
  Frac copy(num, den);
  copy.reduce();
  return copy.num.get_str() + "/" + copy.den.get_str();
}

bool Frac::less_than(const Frac& other) const {
  Int lhs = num * other.den;
  Int rhs = other.num * den;
  return lhs < rhs;
}

}  // namespace repcensus
