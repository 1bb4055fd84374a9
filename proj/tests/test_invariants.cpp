#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "knotmap/diagram.hpp"
#include "knotmap/invariants.hpp"

using namespace knotmap;

namespace {

Diagram trefoil_code() {
  Diagram d;
  d.word = {{0, true}, {1, false}, {2, true}, {0, false}, {1, true}, {2, false}};
  d.signs = {1, 1, 1};
  return d;
}

Diagram kink_code(int sign) {
  Diagram d;
  d.word = {{0, true}, {0, false}};
  d.signs = {sign};
  return d;
}

// ---------------------------------------------------------------------------
// Independent bracket oracle: skein recursion on explicit multi-component
// shadows with strand splicing, no union-find. Kept deliberately separate
// from the library's state-sum implementation.

struct Shadow {
  std::vector<std::vector<Passage>> comps;
  std::map<int, int> signs;
};

Shadow shadow_of(const Diagram& d) {
  Shadow s;
  s.comps.push_back(d.word);
  for (int c = 0; c < d.crossing_count(); ++c) s.signs[c] = d.signs[c];
  return s;
}

// Flip signs of crossings with exactly one passage inside the piece.
void flip_signs_for_reversal(Shadow& s, const std::vector<Passage>& piece) {
  std::map<int, int> count;
  for (const auto& p : piece) count[p.crossing]++;
  for (auto [c, k] : count)
    if (k == 1) s.signs[c] = -s.signs[c];
}

std::vector<Passage> reversed(std::vector<Passage> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// Removes crossing c, reconnecting with or without strand reversal.
// oriented = join (in_i, out_j), (out_i, in_j); reversing = join incoming
// with incoming.
Shadow resolve(const Shadow& s, int c, bool oriented) {
  int ci = -1, cj = -1, pi = -1, pj = -1;
  for (int k = 0; k < (int)s.comps.size(); ++k)
    for (int p = 0; p < (int)s.comps[k].size(); ++p)
      if (s.comps[k][p].crossing == c) {
        if (ci < 0) {
          ci = k;
          pi = p;
        } else {
          cj = k;
          pj = p;
        }
      }
  Shadow out;
  out.signs = s.signs;
  out.signs.erase(c);
  if (ci == cj) {
    const auto& w = s.comps[ci];
    int m = (int)w.size();
    std::vector<Passage> part1, part2;
    for (int p = (pi + 1) % m; p != pj; p = (p + 1) % m) part1.push_back(w[p]);
    for (int p = (pj + 1) % m; p != pi; p = (p + 1) % m) part2.push_back(w[p]);
    if (oriented) {
      out.comps.push_back(part1);
      out.comps.push_back(part2);
    } else {
      flip_signs_for_reversal(out, part1);
      auto joined = part2;
      auto r = reversed(part1);
      joined.insert(joined.end(), r.begin(), r.end());
      out.comps.push_back(joined);
    }
  } else {
    const auto& u = s.comps[ci];
    const auto& v = s.comps[cj];
    int mu = (int)u.size(), mv = (int)v.size();
    std::vector<Passage> upart, vpart;
    for (int p = (pi + 1) % mu; p != pi; p = (p + 1) % mu) upart.push_back(u[p]);
    for (int p = (pj + 1) % mv; p != pj; p = (p + 1) % mv) vpart.push_back(v[p]);
    std::vector<Passage> joined = upart;
    if (oriented) {
      joined.insert(joined.end(), vpart.begin(), vpart.end());
    } else {
      flip_signs_for_reversal(out, vpart);
      auto r = reversed(vpart);
      joined.insert(joined.end(), r.begin(), r.end());
    }
    out.comps.push_back(joined);
  }
  // keep untouched components
  for (int k = 0; k < (int)s.comps.size(); ++k)
    if (k != ci && k != cj) out.comps.push_back(s.comps[k]);
  return out;
}

LaurentPoly bracket_oracle(const Shadow& s) {
  if (s.signs.empty()) {
    LaurentPoly delta = LaurentPoly::term(2, -1) + LaurentPoly::term(-2, -1);
    LaurentPoly r = LaurentPoly::one();
    for (size_t i = 1; i < s.comps.size(); ++i) r *= delta;
    return r;
  }
  int c = s.signs.begin()->first;
  bool positive = s.signs.begin()->second > 0;
  // A-smoothing is the oriented one at positive crossings.
  Shadow a = resolve(s, c, positive);
  Shadow b = resolve(s, c, !positive);
  return bracket_oracle(a).shifted(1) + bracket_oracle(b).shifted(-1);
}

LaurentPoly bracket_oracle(const Diagram& d) { return bracket_oracle(shadow_of(d)); }

LaurentPoly jones_in_t_to_A(std::map<long, long> t_terms) {
  // helper: convert a polynomial in t = A^-4 into the A variable
  LaurentPoly p;
  for (auto [e, c] : t_terms) p += LaurentPoly::term(-4 * e, c);
  return p;
}

}  // namespace

TEST_CASE("kauffman bracket basics") {
  SECTION("empty diagram brackets to 1") {
    REQUIRE(kauffman_bracket(Diagram{}).is_one());
  }
  SECTION("positive kink brackets to -A^3") {
    REQUIRE(kauffman_bracket(kink_code(1)) == LaurentPoly::term(3, -1));
  }
  SECTION("negative kink brackets to -A^-3") {
    REQUIRE(kauffman_bracket(kink_code(-1)) == LaurentPoly::term(-3, -1));
  }
  SECTION("trefoil bracket matches the skein-recursion oracle") {
    Diagram t = trefoil_code();
    REQUIRE(kauffman_bracket(t) == bracket_oracle(t));
  }
  SECTION("crossing cap is enforced") {
    Diagram t = trefoil_code();
    REQUIRE_THROWS_AS(kauffman_bracket(t, 2), TooManyCrossingsError);
  }
}

TEST_CASE("jones polynomial") {
  Diagram t = trefoil_code();
  SECTION("unknot gives 1") {
    REQUIRE(jones(Diagram{}).is_one());
    REQUIRE(jones(kink_code(1)).is_one());
    REQUIRE(jones(kink_code(-1)).is_one());
  }
  SECTION("positive trefoil: V = t + t^3 - t^4") {
    REQUIRE(jones(t) == jones_in_t_to_A({{1, 1}, {3, 1}, {4, -1}}));
  }
  SECTION("mirror inverts the variable and differs for the trefoil") {
    LaurentPoly j = jones(t);
    LaurentPoly jm = jones(mirror(t));
    REQUIRE(jm == j.inverted_variable());
    REQUIRE(jm != j);
  }
  SECTION("connected sum multiplies Jones") {
    Diagram s = connected_sum(t, mirror(t));
    REQUIRE(jones(s) == jones(t) * jones(mirror(t)));
  }
  SECTION("invariant under a kink (R1)") {
    Diagram with_kink = connected_sum(t, kink_code(1));
    REQUIRE(jones(with_kink) == jones(t));
  }
  SECTION("invariant under simplify") {
    Diagram with_kink = connected_sum(connected_sum(t, kink_code(1)), kink_code(-1));
    Diagram s = simplify(with_kink);
    REQUIRE(s.crossing_count() == 3);
    REQUIRE(jones(s) == jones(t));
  }
}

TEST_CASE("determinant") {
  Diagram t = trefoil_code();
  SECTION("unknot determinant is 1") {
    REQUIRE(determinant(Diagram{}) == 1);
    REQUIRE(determinant(kink_code(1)) == 1);
  }
  SECTION("trefoil determinant is 3") { REQUIRE(determinant(t) == 3); }
  SECTION("connected sums multiply") {
    REQUIRE(determinant(connected_sum(t, t)) == 9);
  }
  SECTION("Goeritz value matches |V(-1)| via the cyclotomic evaluation") {
    for (const Diagram& d : {trefoil_code(), connected_sum(trefoil_code(), trefoil_code()),
                             change_crossings(trefoil_code(), {0})}) {
      Cyclotomic8 v = eval_cyclotomic8(jones(d));
      REQUIRE(v.c[1] == 0);
      REQUIRE(v.c[2] == 0);
      REQUIRE(v.c[3] == 0);
      BigInt a = v.c[0] < 0 ? BigInt(-v.c[0]) : v.c[0];
      REQUIRE(determinant(d) == a);
    }
  }
}

TEST_CASE("fingerprints") {
  Diagram t = trefoil_code();
  SECTION("unknot fingerprint") {
    Fingerprint fp = fingerprint(Diagram{});
    REQUIRE(fp.is_unknot());
    REQUIRE(fp.det == 1);
  }
  SECTION("chirality is distinguished") {
    REQUIRE(fingerprint(t) != fingerprint(mirror(t)));
  }
  SECTION("state sum equals the oracle on crossing-changed variants") {
    for (int c = 0; c < 3; ++c) {
      Diagram d = change_crossings(trefoil_code(), {c});
      REQUIRE(kauffman_bracket(d) == bracket_oracle(d));
    }
  }
}
