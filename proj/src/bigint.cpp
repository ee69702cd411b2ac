#include "permsep/bigint.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace permsep {

namespace mp = boost::multiprecision;

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt multinomial(unsigned n, std::initializer_list<unsigned> parts) {
  unsigned remaining = n;
  BigInt r = 1;
  for (unsigned p : parts) {
    if (p > remaining) throw std::invalid_argument("multinomial parts exceed n");
    r *= binomial(remaining, p);
    remaining -= p;
  }
  if (remaining != 0) throw std::invalid_argument("multinomial parts must sum to n");
  return r;
}

BigInt pow2(std::size_t exponent) {
  BigInt r = 1;
  r <<= exponent;
  return r;
}

BigInt ipow(const BigInt& base, unsigned exponent) { return mp::pow(base, exponent); }

double log2_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log2 of a non-positive value");
  const std::size_t top = mp::msb(x);
  if (top < 1000) return std::log2(x.convert_to<double>());
  // Top 63 bits read directly; a big shift trips a false memcpy warning in gcc 11.
  const std::size_t shift = top - 62;
  std::uint64_t head = 0;
  for (std::size_t b = top + 1; b-- > shift;) {
    head = (head << 1) | (mp::bit_test(x, static_cast<unsigned>(b)) ? 1U : 0U);
  }
  return std::log2(static_cast<double>(head)) + static_cast<double>(shift);
}

double log2_big(const BigRational& x) {
  if (x <= 0) throw std::domain_error("log2 of a non-positive value");
  return log2_big(BigInt(mp::numerator(x))) - log2_big(BigInt(mp::denominator(x)));
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace permsep
