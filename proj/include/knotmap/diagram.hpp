#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "knotmap/errors.hpp"
#include "knotmap/rational.hpp"

namespace knotmap {

// Combinatorial one-component knot diagrams.
//
// A diagram is stored as a signed Gauss code: a circular word of 2n passages
// (each crossing visited once over, once under, in the order the knot
// traverses them) plus a sign per crossing. The sign convention, fixed
// project-wide: a crossing is +1 when the under-strand direction equals the
// over-strand direction rotated 90 degrees counterclockwise, i.e.
// sgn(over_dir x under_dir) with the usual 2D cross product. Right-handed
// crossings are +1.
//
// A signed Gauss code of a planar diagram determines the embedding: the
// rotation of the four edge-ends around each crossing follows from the sign.
// Validation checks the Euler characteristic (faces == n + 2), which rejects
// words that are not realizable in the sphere.

using CrossingSet = std::set<int>;

struct Passage {
  int crossing = 0;
  bool over = false;
  bool operator==(const Passage&) const = default;
};

// Optional geometric payload per crossing, filled when the diagram comes
// from a projection.
struct CrossingGeo {
  Rat x, y;          // double point in the plane
  Rat over_height;   // height of the over strand at the fiber
  Rat under_height;  // height of the under strand
};

struct Diagram {
  std::vector<Passage> word;  // circular, length 2n
  std::vector<int> signs;     // length n, entries +1/-1
  std::vector<CrossingGeo> geo;  // empty, or length n

  int crossing_count() const { return static_cast<int>(signs.size()); }
  bool empty() const { return signs.empty(); }
  bool has_geometry() const { return geo.size() == signs.size() && !signs.empty(); }

  int writhe() const {
    int w = 0;
    for (int s : signs) w += s;
    return w;
  }

  // Word positions of the over and under passage of each crossing.
  void passage_positions(std::vector<int>& pos_over, std::vector<int>& pos_under) const {
    const int n = crossing_count();
    pos_over.assign(n, -1);
    pos_under.assign(n, -1);
    for (int p = 0; p < static_cast<int>(word.size()); ++p) {
      const Passage& pa = word[p];
      if (pa.crossing < 0 || pa.crossing >= n)
        throw ValidationError("diagram word references unknown crossing id");
      int& slot = pa.over ? pos_over[pa.crossing] : pos_under[pa.crossing];
      if (slot != -1) throw ValidationError("crossing visited twice with the same role");
      slot = p;
    }
    for (int c = 0; c < n; ++c)
      if (pos_over[c] < 0 || pos_under[c] < 0)
        throw ValidationError("crossing missing an over or under passage");
  }
};

// ---------------------------------------------------------------------------
// Embedding: rotation system, faces, Euler check.

// Edge p runs from passage p to passage p+1 (mod 2n). An edge end is
// 2*edge+0 at its tail (start) and 2*edge+1 at its head. A dart is a directed
// edge: 2*edge+0 forward, 2*edge+1 backward.
struct FaceData {
  int face_count = 0;
  std::vector<int> face_of_dart;                 // size 4n
  std::vector<int> face_degree;                  // darts per face
  std::vector<std::array<int, 4>> corner_face;   // per crossing, face at corner k
  std::vector<std::array<int, 4>> rotation_end;  // per crossing, CCW edge-end list
  std::vector<std::array<int, 2>> dart_word_pos; // per dart, the word positions it spans
};

namespace detail {

inline int edge_head_end(int edge) { return 2 * edge + 1; }
inline int edge_tail_end(int edge) { return 2 * edge; }

}  // namespace detail

// Computes the faces of the sphere embedding induced by the signs. Throws
// ValidationError when the word fails the Euler test (non-realizable code).
inline FaceData compute_faces(const Diagram& d) {
  const int n = d.crossing_count();
  const int m = static_cast<int>(d.word.size());
  if (m != 2 * n) throw ValidationError("diagram word length must be twice the crossing count");
  FaceData fd;
  if (n == 0) {
    fd.face_count = 2;  // a crossingless circle bounds two faces
    return fd;
  }

  std::vector<int> pos_over, pos_under;
  d.passage_positions(pos_over, pos_under);

  auto prev_edge = [m](int p) { return (p + m - 1) % m; };
  // Rotation per crossing, counterclockwise:
  //   sign +1: [o_out, u_out, o_in, u_in]
  //   sign -1: [o_out, u_in, o_in, u_out]
  // where o_in is the head end of the edge entering the over passage, etc.
  // Corners 0 (between ends 0,1) and 2 are the A-channel corners of the
  // Kauffman smoothing for both signs.
  fd.rotation_end.resize(n);
  std::vector<int> ccw_next(2 * m, -1);
  for (int c = 0; c < n; ++c) {
    const int po = pos_over[c], pu = pos_under[c];
    const int o_in = detail::edge_head_end(prev_edge(po));
    const int o_out = detail::edge_tail_end(po);
    const int u_in = detail::edge_head_end(prev_edge(pu));
    const int u_out = detail::edge_tail_end(pu);
    std::array<int, 4> rot = d.signs[c] > 0 ? std::array<int, 4>{o_out, u_out, o_in, u_in}
                                            : std::array<int, 4>{o_out, u_in, o_in, u_out};
    fd.rotation_end[c] = rot;
    for (int k = 0; k < 4; ++k) ccw_next[rot[k]] = rot[(k + 1) % 4];
  }

  // Dart 2e+0 = forward along edge e (enters at the head end), dart 2e+1 =
  // backward (enters at the tail end).
  auto entering_end = [](int dart) {
    int e = dart / 2;
    return (dart % 2 == 0) ? detail::edge_head_end(e) : detail::edge_tail_end(e);
  };
  auto dart_leaving_through = [](int end) {
    int e = end / 2;
    return (end % 2 == 0) ? 2 * e : 2 * e + 1;  // tail end -> forward, head end -> backward
  };

  fd.face_of_dart.assign(2 * m, -1);
  fd.dart_word_pos.resize(2 * m);
  for (int e = 0; e < m; ++e) {
    fd.dart_word_pos[2 * e] = {e, (e + 1) % m};
    fd.dart_word_pos[2 * e + 1] = {e, (e + 1) % m};
  }
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (fd.face_of_dart[d0] != -1) continue;
    int face = fd.face_count++;
    int deg = 0;
    int cur = d0;
    do {
      fd.face_of_dart[cur] = face;
      ++deg;
      cur = dart_leaving_through(ccw_next[entering_end(cur)]);
      if (deg > 2 * m) throw ValidationError("face trace failed to close");
    } while (cur != d0);
    fd.face_degree.push_back(deg);
  }

  // V - E + F = 2 on the sphere: n - 2n + F = 2.
  if (fd.face_count != n + 2)
    throw ValidationError("diagram code is not realizable (Euler check failed)");

  fd.corner_face.resize(n);
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      int end = fd.rotation_end[c][k];
      int dart_in = (end % 2 == 1) ? 2 * (end / 2) : 2 * (end / 2) + 1;  // dart entering at end
      fd.face_of_dart[dart_in];  // bounds-checked by construction
      fd.corner_face[c][k] = fd.face_of_dart[dart_in];
    }
  return fd;
}

// Full structural validation.
inline void validate(const Diagram& d) {
  const int n = d.crossing_count();
  if (static_cast<int>(d.word.size()) != 2 * n)
    throw ValidationError("diagram word length must be twice the crossing count");
  for (int s : d.signs)
    if (s != 1 && s != -1) throw ValidationError("crossing sign must be +1 or -1");
  if (!d.geo.empty() && static_cast<int>(d.geo.size()) != n)
    throw ValidationError("geometry payload size mismatch");
  if (n == 0) return;
  std::vector<int> po, pu;
  d.passage_positions(po, pu);
  compute_faces(d);  // Euler / realizability
}

// ---------------------------------------------------------------------------
// Elementary operations.

// Over/under swapped at exactly s; signs flip there. Geometry payload is
// dropped (heights no longer describe an embedding).
inline Diagram change_crossings(const Diagram& d, const CrossingSet& s) {
  const int n = d.crossing_count();
  for (int c : s)
    if (c < 0 || c >= n) throw UnknownCrossingError("no crossing with id " + std::to_string(c));
  Diagram out;
  out.word = d.word;
  out.signs = d.signs;
  for (auto& p : out.word)
    if (s.count(p.crossing)) p.over = !p.over;
  for (int c : s) out.signs[c] = -out.signs[c];
  return out;
}

inline Diagram mirror(const Diagram& d) {
  Diagram out;
  out.word = d.word;
  out.signs = d.signs;
  for (auto& p : out.word) p.over = !p.over;
  for (auto& s : out.signs) s = -s;
  return out;
}

// Diagram-connected sum, performed at the arc leaving word position 0 of
// each operand (the first arc of the canonical traversal). Crossing ids of
// d2 are offset by d1.crossing_count(), so origins stay distinguishable.
inline Diagram connected_sum(const Diagram& d1, const Diagram& d2) {
  Diagram out;
  out.word = d1.word;
  const int off = d1.crossing_count();
  for (const auto& p : d2.word) out.word.push_back({p.crossing + off, p.over});
  out.signs = d1.signs;
  out.signs.insert(out.signs.end(), d2.signs.begin(), d2.signs.end());
  return out;
}

namespace detail {

// Removes the given crossings and compacts ids.
inline Diagram drop_crossings(const Diagram& d, const CrossingSet& gone) {
  Diagram out;
  std::vector<int> remap(d.crossing_count(), -1);
  int next = 0;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (!gone.count(c)) remap[c] = next++;
  for (const auto& p : d.word)
    if (remap[p.crossing] >= 0) out.word.push_back({remap[p.crossing], p.over});
  out.signs.resize(next);
  for (int c = 0; c < d.crossing_count(); ++c)
    if (remap[c] >= 0) out.signs[remap[c]] = d.signs[c];
  return out;
}

struct ReductionStep {
  bool found = false;
  Diagram result;
};

// One greedy R1 or R2 reduction, if available.
inline ReductionStep reduce_once(const Diagram& d) {
  if (d.crossing_count() == 0) return {};
  FaceData fd = compute_faces(d);
  const int m = static_cast<int>(d.word.size());
  // R1: monogon face.
  for (int dart = 0; dart < 2 * m; ++dart) {
    int f = fd.face_of_dart[dart];
    if (fd.face_degree[f] != 1) continue;
    auto [p, q] = fd.dart_word_pos[dart];
    if (d.word[p].crossing != d.word[q].crossing) continue;
    return {true, drop_crossings(d, {d.word[p].crossing})};
  }
  // R2: bigon face whose strand is over at both corners.
  std::vector<std::vector<int>> darts_of_face(fd.face_count);
  for (int dart = 0; dart < 2 * m; ++dart) darts_of_face[fd.face_of_dart[dart]].push_back(dart);
  for (int f = 0; f < fd.face_count; ++f) {
    if (fd.face_degree[f] != 2) continue;
    int d1 = darts_of_face[f][0], d2 = darts_of_face[f][1];
    if (d1 / 2 == d2 / 2) continue;  // both sides of one edge
    auto [p1, q1] = fd.dart_word_pos[d1];
    auto [p2, q2] = fd.dart_word_pos[d2];
    int a = d.word[p1].crossing, b = d.word[q1].crossing;
    if (a == b) continue;
    std::set<int> corners2 = {d.word[p2].crossing, d.word[q2].crossing};
    if (corners2 != std::set<int>{a, b}) continue;
    if (d.word[p1].over != d.word[q1].over) continue;  // strand must be over (or under) at both
    return {true, drop_crossings(d, {a, b})};
  }
  return {};
}

struct TriangleMove {
  std::array<int, 3> swap_pos;  // word positions p: swap word[p] <-> word[p+1]
};

// Movable triangle faces: some edge's strand is over at both of its corners
// (or under at both). An R3 swaps the three adjacent passage pairs.
inline std::vector<TriangleMove> r3_moves(const Diagram& d, const FaceData& fd) {
  std::vector<TriangleMove> moves;
  const int m = static_cast<int>(d.word.size());
  std::vector<std::vector<int>> darts_of_face(fd.face_count);
  for (int dart = 0; dart < 2 * m; ++dart) darts_of_face[fd.face_of_dart[dart]].push_back(dart);
  for (int f = 0; f < fd.face_count; ++f) {
    if (fd.face_degree[f] != 3) continue;
    auto& ds = darts_of_face[f];
    std::set<int> crossings, positions;
    bool movable = false;
    TriangleMove mv{};
    for (int i = 0; i < 3; ++i) {
      auto [p, q] = fd.dart_word_pos[ds[i]];
      mv.swap_pos[i] = p;
      positions.insert(p);
      positions.insert(q);
      crossings.insert(d.word[p].crossing);
      crossings.insert(d.word[q].crossing);
      if (d.word[p].over == d.word[q].over) movable = true;
    }
    if (crossings.size() != 3 || positions.size() != 6 || !movable) continue;
    moves.push_back(mv);
  }
  return moves;
}

inline Diagram apply_r3(const Diagram& d, const TriangleMove& mv) {
  Diagram out = d;
  const int m = static_cast<int>(d.word.size());
  for (int p : mv.swap_pos) std::swap(out.word[p], out.word[(p + 1) % m]);
  return out;
}

}  // namespace detail

// Greedy R1/R2 reduction with a bounded R3 search (depth <= 3) to unlock
// further reductions. The empty diagram certifies the unknot; a non-empty
// result is inconclusive as an unknot test.
inline Diagram simplify(const Diagram& d0) {
  Diagram work = d0;
  work.geo.clear();
  int guard = 0;
  while (work.crossing_count() > 0 && guard++ < 10000) {
    auto step = detail::reduce_once(work);
    if (step.found) {
      work = std::move(step.result);
      continue;
    }
    // Depth-limited R3 search for a position admitting R1/R2.
    struct Node {
      Diagram d;
      int depth;
    };
    std::vector<Node> frontier{{work, 0}};
    bool unlocked = false;
    size_t head = 0;
    while (head < frontier.size() && !unlocked) {
      Node node = frontier[head++];
      if (node.depth >= 3) continue;
      FaceData fd = compute_faces(node.d);
      for (const auto& mv : detail::r3_moves(node.d, fd)) {
        Diagram cand = detail::apply_r3(node.d, mv);
        auto red = detail::reduce_once(cand);
        if (red.found) {
          work = std::move(red.result);
          unlocked = true;
          break;
        }
        if (frontier.size() < 4096) frontier.push_back({std::move(cand), node.depth + 1});
      }
    }
    if (!unlocked) break;
  }
  return work;
}

// ---------------------------------------------------------------------------
// Band-sum of a Hopf link replacing a crossing change.
//
// For each crossing c in s, a loop is band-summed onto the under-strand just
// before c so that it encircles both strands of the crossing. In the
// inactive form the loop lies entirely on one side (over everything for
// positive c, under everything for negative c), so it retracts and the knot
// type is unchanged. Changing the designated clasp pair hooks the loop
// around the cable, which performs the crossing change at c.
//
// Each rewrite adds four crossings, appended in the order
// [t_south, t_west, t_north, t_east]; the designated clasp pair is
// {t_east, t_north}.

struct BandSumRewrite {
  Diagram diagram;
  // For each crossing of s (in ascending order): the pair of new crossing
  // ids whose change performs the original crossing change.
  std::vector<std::pair<int, int>> clasp_pairs;
};

inline BandSumRewrite band_sum_hopf_rewrite(const Diagram& d, const CrossingSet& s) {
  if (s.empty()) throw EmptySetError("band_sum_hopf_rewrite: empty crossing set");
  const int n0 = d.crossing_count();
  for (int c : s)
    if (c < 0 || c >= n0) throw UnknownCrossingError("no crossing with id " + std::to_string(c));

  BandSumRewrite out;
  out.diagram = d;
  out.diagram.geo.clear();
  for (int c : s) {
    Diagram& cur = out.diagram;
    const int base = cur.crossing_count();
    const int tS = base, tW = base + 1, tN = base + 2, tE = base + 3;
    const bool loop_over = cur.signs[c] > 0;
    std::vector<Passage> w;
    w.reserve(cur.word.size() + 8);
    for (const auto& p : cur.word) {
      if (p.crossing == c && !p.over) {
        // Loop circuit, then the through passage of the under strand.
        w.push_back({tS, loop_over});
        w.push_back({tW, loop_over});
        w.push_back({tN, loop_over});
        w.push_back({tE, loop_over});
        w.push_back({tS, !loop_over});
        w.push_back(p);
        w.push_back({tN, !loop_over});
      } else if (p.crossing == c && p.over) {
        w.push_back({tW, !loop_over});
        w.push_back(p);
        w.push_back({tE, !loop_over});
      } else {
        w.push_back(p);
      }
    }
    cur.word = std::move(w);
    int flip = loop_over ? 1 : -1;
    cur.signs.push_back(-1 * flip);  // t_south
    cur.signs.push_back(-1 * flip);  // t_west
    cur.signs.push_back(+1 * flip);  // t_north
    cur.signs.push_back(+1 * flip);  // t_east
    out.clasp_pairs.emplace_back(tE, tN);
  }
  validate(out.diagram);
  return out;
}

}  // namespace knotmap
