#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace permsep {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
/// n! / (parts[0]! parts[1]! ...); parts must sum to n.
BigInt multinomial(unsigned n, std::initializer_list<unsigned> parts);
BigInt pow2(std::size_t exponent);
BigInt ipow(const BigInt& base, unsigned exponent);

/// log2 of a positive value, accurate for values far beyond double range.
double log2_big(const BigInt& x);
double log2_big(const BigRational& x);

std::string to_string(const BigInt& x);

}  // namespace permsep
