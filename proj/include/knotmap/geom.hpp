#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "knotmap/diagram.hpp"
#include "knotmap/errors.hpp"
#include "knotmap/rational.hpp"

namespace knotmap {

// Exact rational 3D polyline kernel. All predicates and constructions are
// exact; outputs stay in the field generated by the inputs.

struct Point3 {
  Rat x, y, z;
  bool operator==(const Point3&) const = default;
};

struct Point2 {
  Rat x, y;
  bool operator==(const Point2&) const = default;
  bool operator<(const Point2& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 scale(const Rat& s, const Point3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Rat dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline bool is_zero(const Point3& a) { return a.x == 0 && a.y == 0 && a.z == 0; }

inline Rat cross2(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }

// Closed oriented polyline in 3-space. Invariants (enforced by
// make_polyknot): at least 3 vertices, consecutive vertices distinct, no
// vertical segment, simple.
struct PolyKnot {
  std::vector<Point3> vertices;

  int segment_count() const { return static_cast<int>(vertices.size()); }
  const Point3& seg_a(int i) const { return vertices[i]; }
  const Point3& seg_b(int i) const { return vertices[(i + 1) % vertices.size()]; }
  Point3 point_at(int seg, const Rat& t) const {
    return seg_a(seg) + scale(t, seg_b(seg) - seg_a(seg));
  }
};

namespace detail {

// Exact 3D segment intersection test (closed segments). Returns true if the
// segments share at least one point.
inline bool segments_intersect_3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  Point3 d1 = b - a, d2 = d - c, r = c - a;
  Point3 n = cross(d1, d2);
  if (!is_zero(n)) {
    if (dot(r, n) != 0) return false;  // skew
    Rat nn = dot(n, n);
    Rat s = dot(cross(r, d2), n) / nn;
    Rat t = dot(cross(r, d1), n) / nn;
    return s >= 0 && s <= 1 && t >= 0 && t <= 1;
  }
  // Parallel lines.
  if (!is_zero(cross(r, d1))) return false;
  Rat len2 = dot(d1, d1);
  Rat sc = dot(r, d1) / len2;
  Rat sd = dot(d - a, d1) / len2;
  Rat lo = std::min(sc, sd), hi = std::max(sc, sd);
  return hi >= 0 && lo <= 1;
}

// True if the two collinear 1D intervals overlap in more than a point.
inline bool overlap_positive(const Rat& lo1, const Rat& hi1, const Rat& lo2, const Rat& hi2) {
  return std::min(hi1, hi2) > std::max(lo1, lo2);
}

}  // namespace detail

// Validated constructor. Throws DegenerateVertexError, VerticalSegmentError
// or NotSimpleError (with a witness segment pair).
inline PolyKnot make_polyknot(std::vector<Point3> vertices) {
  if (vertices.size() < 3) throw ValidationError("a polygonal knot needs at least 3 vertices");
  const int n = static_cast<int>(vertices.size());
  for (int i = 0; i < n; ++i) {
    const Point3& p = vertices[i];
    const Point3& q = vertices[(i + 1) % n];
    if (p == q) throw DegenerateVertexError("repeated consecutive vertex at index " + std::to_string(i));
    if (p.x == q.x && p.y == q.y)
      throw VerticalSegmentError("segment " + std::to_string(i) + " projects to a point");
  }
  PolyKnot k{std::move(vertices)};
  // Simplicity. Adjacent segments may only share their common vertex; a
  // fold-back (anti-parallel collinear continuation) is a self-intersection.
  for (int i = 0; i < n; ++i) {
    const Point3 a = k.seg_a(i), b = k.seg_b(i);
    Point3 d1 = b - a;
    int j = (i + 1) % n;
    Point3 d2 = k.seg_b(j) - k.seg_a(j);
    if (is_zero(cross(d1, d2)) && dot(d1, d2) < 0)
      throw NotSimpleError("adjacent segments fold back at vertex " + std::to_string(j), i, j);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the seam
      if (detail::segments_intersect_3d(k.seg_a(i), k.seg_b(i), k.seg_a(j), k.seg_b(j)))
        throw NotSimpleError("segments " + std::to_string(i) + " and " + std::to_string(j) + " intersect", i, j);
    }
  return k;
}

// ---------------------------------------------------------------------------
// Generic projections.

struct PlanarCrossing {
  int seg_a = 0, seg_b = 0;  // seg_a < seg_b
  Rat ta, tb;                // parameters of the double point on each segment
  Point2 where;
};

struct Violation {
  enum class Kind { VerticalSegment, OverlappingSegments, VertexCrossing, TriplePoint };
  Kind kind;
  int seg_a = -1, seg_b = -1;
  std::string detail;
};

struct GenericityReport {
  bool ok = true;
  std::vector<PlanarCrossing> crossings;
  std::vector<Violation> violations;

  std::string summary() const {
    if (ok) return "generic projection with " + std::to_string(crossings.size()) + " crossings";
    std::string s = "non-generic projection:";
    for (const auto& v : violations) s += " [" + v.detail + "]";
    return s;
  }
};

namespace detail {

enum class Isect2D { None, Proper, Touch, Overlap };

struct Isect2DResult {
  Isect2D kind = Isect2D::None;
  Rat ta, tb;
  Point2 where;
};

inline int orient(const Point2& a, const Point2& b, const Point2& c) {
  return sgn(cross2(b - a, c - a));
}

inline bool on_segment_collinear(const Point2& a, const Point2& b, const Point2& p) {
  // assumes a,b,p collinear
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Classifies the intersection of 2D segments [a,b] and [c,d].
inline Isect2DResult intersect_2d(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  Isect2DResult r;
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear.
    Point2 dir = b - a;
    Rat len2 = dir.x * dir.x + dir.y * dir.y;
    auto param = [&](const Point2& p) { return ((p.x - a.x) * dir.x + (p.y - a.y) * dir.y) / len2; };
    Rat tc = param(c), td = param(d);
    Rat lo = std::min(tc, td), hi = std::max(tc, td);
    if (hi < 0 || lo > 1) return r;
    if (std::min(hi, Rat(1)) > std::max(lo, Rat(0))) {
      r.kind = Isect2D::Overlap;
    } else {
      r.kind = Isect2D::Touch;
    }
    return r;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    // Proper transverse crossing of the interiors.
    Point2 d1 = b - a, d2 = d - c, rr = c - a;
    Rat denom = cross2(d1, d2);
    r.ta = cross2(rr, d2) / denom;
    r.tb = cross2(rr, d1) / denom;
    r.where = {a.x + r.ta * d1.x, a.y + r.ta * d1.y};
    r.kind = Isect2D::Proper;
    return r;
  }
  // Some endpoint lies on the other segment.
  if (o1 == 0 && on_segment_collinear(a, b, c)) r.kind = Isect2D::Touch;
  else if (o2 == 0 && on_segment_collinear(a, b, d)) r.kind = Isect2D::Touch;
  else if (o3 == 0 && on_segment_collinear(c, d, a)) r.kind = Isect2D::Touch;
  else if (o4 == 0 && on_segment_collinear(c, d, b)) r.kind = Isect2D::Touch;
  return r;
}

struct SegBox {
  Rat xmin, xmax, ymin, ymax;
};

inline std::vector<SegBox> projection_boxes(const PolyKnot& k) {
  const int n = k.segment_count();
  std::vector<SegBox> boxes(n);
  for (int i = 0; i < n; ++i) {
    const Point3& a = k.seg_a(i);
    const Point3& b = k.seg_b(i);
    boxes[i] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
  }
  return boxes;
}

// All candidate segment pairs whose projected boxes meet, by plane sweep.
template <typename F>
inline void for_box_overlapping_pairs(const std::vector<SegBox>& boxes, F&& fn) {
  const int n = static_cast<int>(boxes.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return boxes[i].xmin < boxes[j].xmin; });
  for (int ii = 0; ii < n; ++ii) {
    int i = order[ii];
    for (int jj = ii + 1; jj < n; ++jj) {
      int j = order[jj];
      if (boxes[j].xmin > boxes[i].xmax) break;
      if (boxes[j].ymin > boxes[i].ymax || boxes[j].ymax < boxes[i].ymin) continue;
      fn(std::min(i, j), std::max(i, j));
    }
  }
}

}  // namespace detail

inline Point2 project(const Point3& p) { return {p.x, p.y}; }

// Report-valued genericity check of p(k): only transverse double points away
// from vertex images, no triple points, no overlapping segment projections.
inline GenericityReport is_generic_projection(const PolyKnot& k) {
  GenericityReport rep;
  const int n = k.segment_count();
  for (int i = 0; i < n; ++i) {
    const Point3& a = k.seg_a(i);
    const Point3& b = k.seg_b(i);
    if (a.x == b.x && a.y == b.y) {
      rep.violations.push_back({Violation::Kind::VerticalSegment, i, -1,
                                "segment " + std::to_string(i) + " projects to a point"});
    }
  }
  auto boxes = detail::projection_boxes(k);
  detail::for_box_overlapping_pairs(boxes, [&](int i, int j) {
    bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
    Point2 a = project(k.seg_a(i)), b = project(k.seg_b(i));
    Point2 c = project(k.seg_a(j)), d = project(k.seg_b(j));
    auto res = detail::intersect_2d(a, b, c, d);
    if (adjacent) {
      // Shared vertex is expected; a collinear overlap is not.
      if (res.kind == detail::Isect2D::Overlap)
        rep.violations.push_back({Violation::Kind::OverlappingSegments, i, j,
                                  "adjacent segments " + std::to_string(i) + "," + std::to_string(j) +
                                      " overlap in projection"});
      return;
    }
    switch (res.kind) {
      case detail::Isect2D::None:
        break;
      case detail::Isect2D::Proper:
        rep.crossings.push_back({i, j, res.ta, res.tb, res.where});
        break;
      case detail::Isect2D::Touch:
        rep.violations.push_back({Violation::Kind::VertexCrossing, i, j,
                                  "projection crossing at a vertex image (segments " + std::to_string(i) +
                                      "," + std::to_string(j) + ")"});
        break;
      case detail::Isect2D::Overlap:
        rep.violations.push_back({Violation::Kind::OverlappingSegments, i, j,
                                  "segments " + std::to_string(i) + "," + std::to_string(j) +
                                      " have overlapping projections"});
        break;
    }
  });
  // Triple points: identical double-point coordinates from different pairs.
  std::map<Point2, int> seen;
  for (const auto& c : rep.crossings) {
    auto [it, fresh] = seen.emplace(c.where, 1);
    if (!fresh && it->second++ == 1)
      rep.violations.push_back({Violation::Kind::TriplePoint, c.seg_a, c.seg_b,
                                "three or more strands meet over one point"});
  }
  rep.ok = rep.violations.empty();
  std::sort(rep.crossings.begin(), rep.crossings.end(), [](const PlanarCrossing& l, const PlanarCrossing& r) {
    return l.seg_a < r.seg_a || (l.seg_a == r.seg_a && l.ta < r.ta);
  });
  return rep;
}

// Same point set, with every segment interior avoiding the planes z = zs[i].
// The projection is unchanged.
inline PolyKnot subdivide_at_planes(const PolyKnot& k, const std::vector<Rat>& zs) {
  if (zs.empty()) return k;
  std::vector<Point3> out;
  const int n = k.segment_count();
  for (int i = 0; i < n; ++i) {
    const Point3& a = k.seg_a(i);
    const Point3& b = k.seg_b(i);
    out.push_back(a);
    if (a.z == b.z) continue;
    std::vector<Rat> params;
    for (const Rat& z : zs) {
      Rat lo = std::min(a.z, b.z), hi = std::max(a.z, b.z);
      if (z <= lo || z >= hi) continue;  // endpoint hits insert nothing
      params.push_back((z - a.z) / (b.z - a.z));
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    for (const Rat& t : params) out.push_back(a + scale(t, b - a));
  }
  PolyKnot r{std::move(out)};
  return r;
}

// ---------------------------------------------------------------------------
// Diagram extraction.

// Walks the polyline and reads off the signed Gauss code. Crossing ids are
// assigned in order of first encounter along the walk starting at vertex 0,
// which makes the result reproducible. Heights at each fiber are recorded.
inline Diagram project_to_diagram(const PolyKnot& k) {
  GenericityReport rep = is_generic_projection(k);
  if (!rep.ok) throw NonGenericError(rep.summary());

  struct PassageRec {
    int seg;
    Rat t;
    int pair_index;  // index into rep.crossings
    bool first_of_pair;
  };
  std::vector<PassageRec> passages;
  passages.reserve(rep.crossings.size() * 2);
  for (int idx = 0; idx < static_cast<int>(rep.crossings.size()); ++idx) {
    const auto& c = rep.crossings[idx];
    passages.push_back({c.seg_a, c.ta, idx, true});
    passages.push_back({c.seg_b, c.tb, idx, false});
  }
  std::sort(passages.begin(), passages.end(), [](const PassageRec& a, const PassageRec& b) {
    return a.seg < b.seg || (a.seg == b.seg && a.t < b.t);
  });

  Diagram d;
  std::vector<int> id_of_pair(rep.crossings.size(), -1);
  int next_id = 0;
  for (const auto& p : passages) {
    if (id_of_pair[p.pair_index] < 0) id_of_pair[p.pair_index] = next_id++;
  }
  d.signs.assign(next_id, 0);
  d.geo.resize(next_id);
  for (const auto& p : passages) {
    const auto& c = rep.crossings[p.pair_index];
    int id = id_of_pair[p.pair_index];
    Rat za = k.seg_a(c.seg_a).z + c.ta * (k.seg_b(c.seg_a).z - k.seg_a(c.seg_a).z);
    Rat zb = k.seg_a(c.seg_b).z + c.tb * (k.seg_b(c.seg_b).z - k.seg_a(c.seg_b).z);
    if (za == zb) throw NonGenericError("coincident heights over a double point (non-simple input?)");
    bool a_over = za > zb;
    bool this_over = p.first_of_pair ? a_over : !a_over;
    d.word.push_back({id, this_over});
    if (d.signs[id] == 0) {
      Point2 over_dir = a_over ? project(k.seg_b(c.seg_a)) - project(k.seg_a(c.seg_a))
                               : project(k.seg_b(c.seg_b)) - project(k.seg_a(c.seg_b));
      Point2 under_dir = a_over ? project(k.seg_b(c.seg_b)) - project(k.seg_a(c.seg_b))
                                : project(k.seg_b(c.seg_a)) - project(k.seg_a(c.seg_a));
      d.signs[id] = sgn(cross2(over_dir, under_dir));
      d.geo[id] = {c.where.x, c.where.y, std::max(za, zb), std::min(za, zb)};
    }
  }
  validate(d);
  return d;
}

// Heights of the polyline over given plane points, as (height, walk order)
// pairs. Each fiber point is reported once (segment parameters in [0,1)).
inline std::vector<std::vector<Rat>> fiber_heights(const PolyKnot& k, const std::vector<Point2>& points) {
  std::vector<std::vector<Rat>> out(points.size());
  const int n = k.segment_count();
  auto boxes = detail::projection_boxes(k);
  for (int i = 0; i < n; ++i) {
    Point2 a = project(k.seg_a(i)), b = project(k.seg_b(i));
    Point2 dir = b - a;
    for (size_t pi = 0; pi < points.size(); ++pi) {
      const Point2& p = points[pi];
      if (p.x < boxes[i].xmin || p.x > boxes[i].xmax || p.y < boxes[i].ymin || p.y > boxes[i].ymax)
        continue;
      if (cross2(dir, p - a) != 0) continue;
      Rat len2 = dir.x * dir.x + dir.y * dir.y;
      Rat t = ((p.x - a.x) * dir.x + (p.y - a.y) * dir.y) / len2;
      if (t < 0 || t >= 1) continue;
      out[pi].push_back(k.seg_a(i).z + t * (k.seg_b(i).z - k.seg_a(i).z));
    }
  }
  return out;
}

}  // namespace knotmap
