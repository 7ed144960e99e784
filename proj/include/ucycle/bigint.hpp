#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ucycle {

// Every count and matrix entry in this library is an exact integer; the
// counts outgrow 64 bits already at n=5, k=3, so arbitrary precision is the
// only representation used.
using BigInt = boost::multiprecision::cpp_int;

// Unsupported (n, k) range or malformed argument value.
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An input object violates its own invariants (bad permutation, empty
// sequence, ...).
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline BigInt factorial(int m) {
  BigInt r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

// n (n-1) ... (n-k+1), the number of k-permutations of [n].
inline BigInt falling_factorial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

inline BigInt big_pow(const BigInt& base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace ucycle
