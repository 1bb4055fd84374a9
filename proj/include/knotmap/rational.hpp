#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace knotmap {

// Exact arbitrary-precision scalars. Every geometric and dynamical quantity
// in this library is a Rat; there is no floating-point mode.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Rat& r) { return r.sign(); }
inline int sgn(const BigInt& n) { return n.sign(); }

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

// Floor of the exact square root if n is a perfect square, else nullopt-like
// flag via the bool.
inline bool exact_sqrt(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

// Rational square root of a nonnegative rational, when one exists.
inline bool exact_sqrt(const Rat& r, Rat& root) {
  BigInt np, dp;
  if (!exact_sqrt(numerator(r), np)) return false;
  if (!exact_sqrt(denominator(r), dp)) return false;
  root = Rat(np, dp);
  return true;
}

}  // namespace knotmap
