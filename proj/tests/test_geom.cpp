#include <catch2/catch_amalgamated.hpp>

#include "knotmap/geom.hpp"
#include "knotmap/invariants.hpp"

using namespace knotmap;

namespace {

Point3 pt(long x, long y, long z) { return {Rat(x), Rat(y), Rat(z)}; }

// Independent brute-force genericity oracle: direct linear solves over all
// segment pairs, no orientation predicates, no sweep. Returns {ok, crossing
// points}.
struct BruteResult {
  bool ok = true;
  std::vector<Point2> crossings;
};

BruteResult brute_force_generic(const PolyKnot& k) {
  BruteResult res;
  const int n = k.segment_count();
  for (int i = 0; i < n; ++i) {
    Point2 a = project(k.seg_a(i)), b = project(k.seg_b(i));
    if (a == b) res.ok = false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      Point2 a = project(k.seg_a(i)), b = project(k.seg_b(i));
      Point2 c = project(k.seg_a(j)), d = project(k.seg_b(j));
      Rat d1x = b.x - a.x, d1y = b.y - a.y, d2x = d.x - c.x, d2y = d.y - c.y;
      Rat det = d1x * d2y - d1y * d2x;
      if (det != 0) {
        Rat rx = c.x - a.x, ry = c.y - a.y;
        Rat t1 = (rx * d2y - ry * d2x) / det;
        Rat t2 = (rx * d1y - ry * d1x) / det;
        if (t1 < 0 || t1 > 1 || t2 < 0 || t2 > 1) continue;
        bool interior = t1 > 0 && t1 < 1 && t2 > 0 && t2 < 1;
        if (adjacent) {
          // only the shared vertex is allowed
          bool shared = (t1 == 0 || t1 == 1) && (t2 == 0 || t2 == 1);
          if (!shared) res.ok = false;
          continue;
        }
        if (interior)
          res.crossings.push_back({a.x + t1 * d1x, a.y + t1 * d1y});
        else
          res.ok = false;  // endpoint touch
      } else {
        // parallel: collinear overlap?
        Rat rx = c.x - a.x, ry = c.y - a.y;
        if (rx * d1y - ry * d1x != 0) continue;
        Rat len2 = d1x * d1x + d1y * d1y;
        Rat tc = (rx * d1x + ry * d1y) / len2;
        Rat td = ((d.x - a.x) * d1x + (d.y - a.y) * d1y) / len2;
        Rat lo = std::min(tc, td), hi = std::max(tc, td);
        if (std::min(hi, Rat(1)) > std::max(lo, Rat(0))) res.ok = false;
        else if (!adjacent && hi >= 0 && lo <= 1) res.ok = false;  // point touch
      }
    }
  // triple points
  for (size_t i = 0; i < res.crossings.size(); ++i)
    for (size_t j = i + 1; j < res.crossings.size(); ++j)
      if (res.crossings[i] == res.crossings[j]) res.ok = false;
  return res;
}

void check_against_oracle(const PolyKnot& k) {
  auto mine = is_generic_projection(k);
  auto brute = brute_force_generic(k);
  REQUIRE(mine.ok == brute.ok);
  if (mine.ok) {
    REQUIRE(mine.crossings.size() == brute.crossings.size());
    std::vector<Point2> a, b;
    for (const auto& c : mine.crossings) a.push_back(c.where);
    b = brute.crossings;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    REQUIRE(a == b);
  }
}

// One positive kink: a closed curve crossing itself once, over-strand at
// z = 1 above an under-strand at z = 0.
PolyKnot kink_knot() {
  return make_polyknot({pt(0, 0, 0), pt(4, 0, 0), pt(4, 2, 1), pt(2, 2, 1), pt(2, -2, 1), pt(0, -2, 0)});
}

}  // namespace

TEST_CASE("make_polyknot validates inputs") {
  SECTION("triangle is a valid knot") {
    PolyKnot k = make_polyknot({pt(0, 0, 0), pt(4, 0, 0), pt(0, 4, 1)});
    REQUIRE(k.segment_count() == 3);
  }
  SECTION("repeated consecutive vertex is degenerate") {
    REQUIRE_THROWS_AS(make_polyknot({pt(0, 0, 0), pt(4, 0, 0), pt(4, 0, 0), pt(0, 4, 0)}),
                      DegenerateVertexError);
  }
  SECTION("bowtie is not simple") {
    REQUIRE_THROWS_AS(make_polyknot({pt(0, 0, 0), pt(2, 2, 0), pt(2, 0, 0), pt(0, 2, 0)}),
                      NotSimpleError);
  }
  SECTION("vertical segments are rejected") {
    REQUIRE_THROWS_AS(make_polyknot({pt(0, 0, 0), pt(0, 0, 2), pt(1, 1, 1)}), VerticalSegmentError);
  }
  SECTION("fewer than three vertices is invalid") {
    REQUIRE_THROWS_AS(make_polyknot({pt(0, 0, 0), pt(1, 0, 0)}), ValidationError);
  }
}

TEST_CASE("is_generic_projection basics") {
  SECTION("planar triangle: generic, no crossings") {
    PolyKnot k = make_polyknot({pt(0, 0, 0), pt(4, 0, 0), pt(0, 4, 0)});
    auto rep = is_generic_projection(k);
    REQUIRE(rep.ok);
    REQUIRE(rep.crossings.empty());
  }
  SECTION("kink: generic, one crossing") {
    auto rep = is_generic_projection(kink_knot());
    REQUIRE(rep.ok);
    REQUIRE(rep.crossings.size() == 1);
    REQUIRE(rep.crossings[0].where == Point2{Rat(2), Rat(0)});
  }
  SECTION("doubled segment at two heights: overlapping projections flagged") {
    PolyKnot k = make_polyknot({pt(0, 0, 0), pt(4, 0, 0), pt(4, 2, 0), pt(-1, 2, 2), pt(-1, 0, 2),
                                pt(3, 0, 2), pt(3, -2, 2), pt(0, -2, 1)});
    auto rep = is_generic_projection(k);
    REQUIRE_FALSE(rep.ok);
    bool found = false;
    for (const auto& v : rep.violations)
      if (v.kind == Violation::Kind::OverlappingSegments) found = true;
    REQUIRE(found);
  }
  SECTION("agrees with the brute-force oracle") {
    check_against_oracle(kink_knot());
    check_against_oracle(make_polyknot({pt(0, 0, 0), pt(4, 0, 0), pt(0, 4, 0)}));
    // a small tangle with several crossings
    PolyKnot k = make_polyknot({pt(0, 0, 0), pt(6, 0, 0), pt(6, 4, 1), pt(1, 4, 1), pt(1, -1, 1),
                                pt(3, -1, 1), pt(3, 5, 2), pt(5, 5, 2), pt(5, -2, 2), pt(0, -2, 2)});
    check_against_oracle(k);
  }
}

TEST_CASE("subdivide_at_planes") {
  PolyKnot k = make_polyknot({pt(0, 0, -1), pt(4, 0, 1), pt(0, 4, 1)});
  SECTION("empty plane list is the identity") {
    PolyKnot s = subdivide_at_planes(k, {});
    REQUIRE(s.vertices == k.vertices);
  }
  SECTION("plane z=0 splits the crossing segment with exact interpolation") {
    PolyKnot s = subdivide_at_planes(k, {Rat(0)});
    REQUIRE(s.segment_count() == 5);  // two segments cross z=0
    bool found = false;
    for (const auto& v : s.vertices)
      if (v.z == 0 && v.y == 0) {
        found = true;
        REQUIRE(v.x == Rat(2));
      }
    REQUIRE(found);
  }
  SECTION("segment endpoint already on the plane inserts nothing") {
    PolyKnot s = subdivide_at_planes(k, {Rat(1)});
    REQUIRE(s.vertices == k.vertices);
  }
  SECTION("projection and diagram are unchanged") {
    PolyKnot kk = kink_knot();
    PolyKnot s = subdivide_at_planes(kk, {Rat(1, 2), Rat(0)});
    REQUIRE(s.segment_count() > kk.segment_count());
    Diagram d1 = project_to_diagram(kk);
    Diagram d2 = project_to_diagram(s);
    REQUIRE(d1.word == d2.word);
    REQUIRE(d1.signs == d2.signs);
  }
}

TEST_CASE("project_to_diagram on small knots") {
  SECTION("planar triangle gives the empty diagram") {
    Diagram d = project_to_diagram(make_polyknot({pt(0, 0, 0), pt(4, 0, 0), pt(0, 4, 0)}));
    REQUIRE(d.empty());
  }
  SECTION("kink gives a one-crossing diagram with the expected sign") {
    Diagram d = project_to_diagram(kink_knot());
    REQUIRE(d.crossing_count() == 1);
    REQUIRE(d.signs[0] == 1);
    REQUIRE(d.word[0].over == false);  // the z=0 strand comes first along the walk
    REQUIRE(d.geo[0].over_height == Rat(1));
    REQUIRE(d.geo[0].under_height == Rat(0));
  }
  SECTION("fingerprint is invariant under cyclic rotation of the vertex list") {
    PolyKnot k = kink_knot();
    Fingerprint fp = fingerprint(project_to_diagram(k));
    for (int r = 1; r < k.segment_count(); ++r) {
      std::vector<Point3> rotated(k.vertices.begin() + r, k.vertices.end());
      rotated.insert(rotated.end(), k.vertices.begin(), k.vertices.begin() + r);
      Fingerprint fr = fingerprint(project_to_diagram(make_polyknot(rotated)));
      REQUIRE(fp == fr);
    }
  }
  SECTION("orientation reversal preserves signs") {
    PolyKnot k = kink_knot();
    std::vector<Point3> rev(k.vertices.rbegin(), k.vertices.rend());
    Diagram d1 = project_to_diagram(k);
    Diagram d2 = project_to_diagram(make_polyknot(rev));
    REQUIRE(d1.signs == d2.signs);
  }
}

TEST_CASE("fiber_heights locates strands over plane points") {
  PolyKnot k = kink_knot();
  auto fibers = fiber_heights(k, {{Rat(2), Rat(0)}, {Rat(1), Rat(1)}});
  REQUIRE(fibers[0].size() == 2);
  std::sort(fibers[0].begin(), fibers[0].end());
  REQUIRE(fibers[0][0] == Rat(0));
  REQUIRE(fibers[0][1] == Rat(1));
  REQUIRE(fibers[1].empty());
}
