#ifndef HYPEREHRHART_ARITH_HPP
#define HYPEREHRHART_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperehrhart {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for malformed or out-of-range user input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside its documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when two exact computations that must agree do not. Signals a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt factorial(std::int64_t n) {
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

inline BigInt ipow(const BigInt& base, std::int64_t exp) {
  if (exp < 0) throw PreconditionError("ipow: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

// x * (x-1) * ... * (x-k+1), valid for any integer x.
inline BigInt falling_factorial(const BigInt& x, std::int64_t k) {
  BigInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) result *= x - i;
  return result;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Returns the integer value of `v`, throwing InternalInconsistency when it is not integral.
inline BigInt require_integer(const Rational& v, const char* what) {
  if (boost::multiprecision::denominator(v) != 1) {
    throw InternalInconsistency(std::string(what) + ": expected an integer, got " + to_string(v));
  }
  return boost::multiprecision::numerator(v);
}

}  // namespace hyperehrhart

#endif  // HYPEREHRHART_ARITH_HPP
