#pragma once

#include <map>
#include <string>

#include "knotmap/rational.hpp"

namespace knotmap {

// Integer Laurent polynomials in one formal variable (called A throughout).
// Coefficients are exact big integers; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly term(long exp, BigInt coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
  }
  static LaurentPoly one() { return term(0, 1); }

  const std::map<long, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

  BigInt coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // Multiply by coeff * A^exp.
  LaurentPoly shifted(long exp, const BigInt& coeff = 1) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e + exp, c * coeff);
    return r;
  }

  // Substitute A -> A^(-1).
  LaurentPoly inverted_variable() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Canonical text form, e.g. "-A^-3 + 2 - A^5". Used for reports and tests.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      BigInt a = c < 0 ? BigInt(-c) : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (a != 1 || e == 0) s += a.str();
      if (e != 0) {
        if (a != 1) s += "*";
        s += "A";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void add_term(long exp, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_[exp] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  std::map<long, BigInt> terms_;
};

// x^k in Z[x]/(x^4+1), used when evaluating the bracket at the determinant
// point A = primitive 8th root of unity.
struct Cyclotomic8 {
  std::array<BigInt, 4> c{};  // c0 + c1 x + c2 x^2 + c3 x^3
  static Cyclotomic8 monomial(long k) {
    Cyclotomic8 r;
    long m = ((k % 8) + 8) % 8;
    BigInt sign = m < 4 ? 1 : -1;
    r.c[m % 4] = sign;
    return r;
  }
};

inline Cyclotomic8 eval_cyclotomic8(const LaurentPoly& p) {
  Cyclotomic8 r;
  for (const auto& [e, coeff] : p.terms()) {
    Cyclotomic8 m = Cyclotomic8::monomial(e);
    for (int i = 0; i < 4; ++i) r.c[i] += coeff * m.c[i];
  }
  return r;
}

}  // namespace knotmap
