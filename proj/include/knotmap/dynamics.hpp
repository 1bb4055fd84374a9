#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotmap/errors.hpp"
#include "knotmap/rational.hpp"

namespace knotmap {

// Exact piecewise-linear interval dynamics: tent maps, iteration,
// itineraries and their constructive inverse, realizing pairs.

// Piecewise-linear self-map of the line: strictly increasing breakpoints
// b_0 < ... < b_{m-1} and m+1 affine pieces (slope, intercept) on
// (-inf, b_0], [b_0, b_1], ..., [b_{m-1}, inf), agreeing at breakpoints.
struct PLMap1D {
  std::vector<Rat> breakpoints;
  std::vector<std::pair<Rat, Rat>> pieces;  // (slope, intercept)

  Rat eval(const Rat& z) const {
    size_t i = 0;
    while (i < breakpoints.size() && z > breakpoints[i]) ++i;
    return pieces[i].first * z + pieces[i].second;
  }
};

inline void validate(const PLMap1D& f) {
  if (f.pieces.size() != f.breakpoints.size() + 1)
    throw ValidationError("piecewise map needs one more piece than breakpoints");
  for (size_t i = 1; i < f.breakpoints.size(); ++i)
    if (!(f.breakpoints[i - 1] < f.breakpoints[i]))
      throw ValidationError("breakpoints must be strictly increasing");
  for (size_t i = 0; i < f.breakpoints.size(); ++i) {
    const Rat& b = f.breakpoints[i];
    Rat left = f.pieces[i].first * b + f.pieces[i].second;
    Rat right = f.pieces[i + 1].first * b + f.pieces[i + 1].second;
    if (left != right) throw ValidationError("map is discontinuous at breakpoint " + rat_to_string(b));
  }
}

// t_mu(z) = mu z for z <= 1/2, -mu z + mu for z >= 1/2.
inline PLMap1D make_tent(const Rat& mu) {
  if (!(mu > 0)) throw NonPositiveSlopeError("tent slope must be positive, got " + rat_to_string(mu));
  PLMap1D f;
  f.breakpoints = {Rat(1, 2)};
  f.pieces = {{mu, Rat(0)}, {-mu, mu}};
  return f;
}

inline PLMap1D identity_map() {
  PLMap1D f;
  f.pieces = {{Rat(1), Rat(0)}};
  return f;
}

inline PLMap1D abs_value_map() {
  PLMap1D f;
  f.breakpoints = {Rat(0)};
  f.pieces = {{Rat(-1), Rat(0)}, {Rat(1), Rat(0)}};
  return f;
}

inline Rat iterate(const PLMap1D& f, Rat x, int n) {
  if (n < 0) throw ValidationError("iteration count must be nonnegative");
  for (int i = 0; i < n; ++i) x = f.eval(x);
  return x;
}

// ---------------------------------------------------------------------------
// Symbol sequences with a finite prefix and a repeating tail. The tail is
// never empty, so every sequence is defined for all n.

template <typename Sym>
struct EventuallyPeriodic {
  std::vector<Sym> prefix;
  std::vector<Sym> tail;

  // 0-based index; position i corresponds to step i (the paper's n = i+1).
  Sym at(size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return tail[(i - prefix.size()) % tail.size()];
  }
  size_t preperiod() const { return prefix.size(); }
  size_t period() const { return tail.size(); }

  EventuallyPeriodic shifted() const {
    EventuallyPeriodic s = *this;
    if (!s.prefix.empty()) {
      s.prefix.erase(s.prefix.begin());
    } else {
      std::rotate(s.tail.begin(), s.tail.begin() + 1, s.tail.end());
    }
    return s;
  }
};

using Itinerary = EventuallyPeriodic<int>;  // symbols 0/1
using SignSeq = EventuallyPeriodic<int>;    // symbols -1/+1

inline void validate_itinerary(const Itinerary& it) {
  if (it.tail.empty()) throw ValidationError("itinerary tail must be nonempty");
  for (int s : it.prefix)
    if (s != 0 && s != 1) throw ValidationError("itinerary symbols are 0/1");
  for (int s : it.tail)
    if (s != 0 && s != 1) throw ValidationError("itinerary symbols are 0/1");
}

inline void validate_signseq(const SignSeq& s) {
  if (s.tail.empty()) throw ValidationError("sign sequence tail must be nonempty");
  for (int v : s.prefix)
    if (v != 1 && v != -1) throw ValidationError("sign symbols are +1/-1");
  for (int v : s.tail)
    if (v != 1 && v != -1) throw ValidationError("sign symbols are +1/-1");
}

// Text form "prefix|tail" over {0,1} or {-,+}: "01|1", "+-|+".
inline Itinerary parse_itinerary(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw ParseError("itinerary needs a '|' separator: " + text);
  Itinerary it;
  auto read = [&](const std::string& part, std::vector<int>& out) {
    for (char ch : part) {
      if (ch == '0') out.push_back(0);
      else if (ch == '1') out.push_back(1);
      else throw ParseError(std::string("bad itinerary symbol '") + ch + "'");
    }
  };
  read(text.substr(0, bar), it.prefix);
  read(text.substr(bar + 1), it.tail);
  validate_itinerary(it);
  return it;
}

inline SignSeq parse_signseq(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw ParseError("sign sequence needs a '|' separator: " + text);
  SignSeq s;
  auto read = [&](const std::string& part, std::vector<int>& out) {
    for (char ch : part) {
      if (ch == '+') out.push_back(1);
      else if (ch == '-') out.push_back(-1);
      else throw ParseError(std::string("bad sign symbol '") + ch + "'");
    }
  };
  read(text.substr(0, bar), s.prefix);
  read(text.substr(bar + 1), s.tail);
  validate_signseq(s);
  return s;
}

inline std::string itinerary_to_string(const Itinerary& it) {
  std::string s;
  for (int v : it.prefix) s += char('0' + v);
  s += '|';
  for (int v : it.tail) s += char('0' + v);
  return s;
}

inline std::string signseq_to_string(const SignSeq& sq) {
  std::string s;
  for (int v : sq.prefix) s += v > 0 ? '+' : '-';
  s += '|';
  for (int v : sq.tail) s += v > 0 ? '+' : '-';
  return s;
}

// ---------------------------------------------------------------------------
// Itineraries of tent maps (mu > 2).

inline void require_expanding(const Rat& mu) {
  if (!(mu > 2)) throw ValidationError("tent itinerary coding needs mu > 2, got " + rat_to_string(mu));
}

// Symbol word of x under t_mu: 0 where the iterate is < 1/2, 1 where > 1/2.
// Errors when an iterate hits 1/2 exactly (symbol undefined) or leaves
// [0,1] (x is outside the invariant Cantor set).
inline std::vector<int> itinerary_of(const Rat& mu, Rat x, int depth) {
  require_expanding(mu);
  PLMap1D t = make_tent(mu);
  std::vector<int> word;
  word.reserve(depth);
  for (int i = 0; i < depth; ++i) {
    if (x < 0 || x > 1)
      throw EscapesUnitIntervalError("iterate " + std::to_string(i) + " = " + rat_to_string(x) +
                                     " leaves [0,1]");
    if (x == Rat(1, 2)) throw HitsHalfError("iterate " + std::to_string(i) + " equals 1/2");
    word.push_back(x > Rat(1, 2) ? 1 : 0);
    x = t.eval(x);
  }
  return word;
}

// Constructive inverse of the itinerary coding. The two inverse branches are
// Phi_0(w) = w/mu and Phi_1(w) = 1 - w/mu; the periodic tail is the fixed
// point of the corresponding branch composition, and the prefix is applied
// outermost-first.
inline Rat point_from_itinerary(const Rat& mu, const Itinerary& it) {
  require_expanding(mu);
  validate_itinerary(it);
  // Affine composition g = Phi_{tail[0]} o ... o Phi_{tail[q-1]}, built from
  // the innermost branch outward.
  Rat a(1), b(0);  // g(w) = a w + b
  for (size_t i = it.tail.size(); i-- > 0;) {
    // g := Phi_{tail[i]} o g
    if (it.tail[i] == 0) {
      a = a / mu;
      b = b / mu;
    } else {
      a = -a / mu;
      b = Rat(1) - b / mu;
    }
  }
  Rat fixed = b / (Rat(1) - a);
  Rat x = fixed;
  for (size_t i = it.prefix.size(); i-- > 0;) {
    x = it.prefix[i] == 0 ? Rat(x / mu) : Rat(1 - x / mu);
  }
  return x;
}

// Realizing pair of a sign sequence psi with respect to t_mu: exact points
// (x, y) with sign(t^n(x) - t^n(y)) = psi at every step, forever. Built from
// the complementary itineraries u (1 where psi = +1) and v.
inline std::pair<Rat, Rat> realizing_pair(const Rat& mu, const SignSeq& psi) {
  validate_signseq(psi);
  Itinerary u, v;
  for (int s : psi.prefix) {
    u.prefix.push_back(s > 0 ? 1 : 0);
    v.prefix.push_back(s > 0 ? 0 : 1);
  }
  for (int s : psi.tail) {
    u.tail.push_back(s > 0 ? 1 : 0);
    v.tail.push_back(s > 0 ? 0 : 1);
  }
  return {point_from_itinerary(mu, u), point_from_itinerary(mu, v)};
}

}  // namespace knotmap
