#pragma once

#include <numeric>
#include <vector>

#include "knotmap/diagram.hpp"
#include "knotmap/laurent.hpp"

namespace knotmap {

// Knot-type fingerprints from diagrams: Kauffman bracket, Jones polynomial
// (kept as a Laurent polynomial in A; t = A^-4), and the determinant via the
// Goeritz matrix. Fingerprint equality is this library's operational notion
// of "same knot type": sound for distinguishing, heuristic for equality, and
// sufficient for every catalog type used by the test suites.

namespace detail {

struct Dsu {
  std::vector<int> parent;
  void reset(int n) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

// Full 2^n state sum. The A-smoothing joins (o_in,u_out),(o_out,u_in) at
// positive crossings and (o_in,u_in),(o_out,u_out) at negative ones; loops
// evaluate to -A^2 - A^-2.
inline LaurentPoly kauffman_bracket(const Diagram& d, int max_crossings = 20) {
  const int n = d.crossing_count();
  if (n > max_crossings)
    throw TooManyCrossingsError("state sum over " + std::to_string(n) + " crossings exceeds cap " +
                                std::to_string(max_crossings));
  if (n == 0) return LaurentPoly::one();

  const int m = 2 * n;
  std::vector<int> pos_over, pos_under;
  d.passage_positions(pos_over, pos_under);
  auto prev = [m](int p) { return (p + m - 1) % m; };

  // Per crossing, the two edge pairs joined by the A- and B-smoothing.
  struct Pairs {
    int a1, a2, b1, b2, a3, a4, b3, b4;
  };
  std::vector<std::array<int, 8>> join(n);
  for (int c = 0; c < n; ++c) {
    int o_in = prev(pos_over[c]), o_out = pos_over[c];
    int u_in = prev(pos_under[c]), u_out = pos_under[c];
    if (d.signs[c] > 0)
      join[c] = {o_in, u_out, o_out, u_in,   // A pairs
                 o_in, u_in, o_out, u_out};  // B pairs
    else
      join[c] = {o_in, u_in, o_out, u_out,   // A pairs
                 o_in, u_out, o_out, u_in};  // B pairs
  }

  LaurentPoly delta = LaurentPoly::term(2, -1) + LaurentPoly::term(-2, -1);
  std::vector<LaurentPoly> delta_pow(n + 1);
  delta_pow[0] = LaurentPoly::one();
  for (int i = 1; i <= n; ++i) delta_pow[i] = delta_pow[i - 1] * delta;

  LaurentPoly result;
  detail::Dsu dsu;
  for (unsigned long state = 0; state < (1ull << n); ++state) {
    dsu.reset(m);
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      bool a_smooth = ((state >> c) & 1) == 0;
      const auto& j = join[c];
      if (a_smooth) {
        ++a_count;
        dsu.unite(j[0], j[1]);
        dsu.unite(j[2], j[3]);
      } else {
        dsu.unite(j[4], j[5]);
        dsu.unite(j[6], j[7]);
      }
    }
    int loops = 0;
    for (int e = 0; e < m; ++e)
      if (dsu.find(e) == e) ++loops;
    result += delta_pow[loops - 1].shifted(a_count - (n - a_count));
  }
  return result;
}

// Writhe-normalized bracket: (-A)^(-3w) * <D>, a knot invariant.
inline LaurentPoly jones(const Diagram& d, int max_crossings = 20) {
  LaurentPoly b = kauffman_bracket(d, max_crossings);
  int w = d.writhe();
  BigInt sign = (w % 2 == 0) ? 1 : -1;
  return b.shifted(-3 * w, sign);
}

namespace detail {

// |det| of an integer matrix, fraction-free Bareiss elimination.
inline BigInt abs_det(std::vector<std::vector<BigInt>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  return det < 0 ? BigInt(-det) : det;
}

}  // namespace detail

// Knot determinant via the Goeritz matrix of a checkerboard coloring of the
// faces. Exact; equals |V(-1)|.
inline BigInt determinant(const Diagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return 1;
  FaceData fd = compute_faces(d);

  // Checkerboard coloring: faces adjacent across an edge get opposite colors.
  std::vector<int> color(fd.face_count, -1);
  std::vector<int> stack{0};
  color[0] = 0;
  const int m = 2 * n;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int e = 0; e < m; ++e) {
      int f1 = fd.face_of_dart[2 * e], f2 = fd.face_of_dart[2 * e + 1];
      int other;
      if (f1 == f) other = f2;
      else if (f2 == f) other = f1;
      else continue;
      if (color[other] == -1) {
        color[other] = 1 - color[f];
        stack.push_back(other);
      } else if (color[other] == color[f]) {
        throw ValidationError("diagram faces are not checkerboard colorable");
      }
    }
  }

  // White class: the smaller one (tie: the class of face 0).
  int count0 = 0;
  for (int c : color) count0 += (c == 0);
  int white = (2 * count0 <= fd.face_count) ? 0 : 1;
  std::vector<int> white_index(fd.face_count, -1);
  int nw = 0;
  for (int f = 0; f < fd.face_count; ++f)
    if (color[f] == white) white_index[f] = nw++;

  // Goeritz matrix over white faces. Corners 0,2 of the rotation are the
  // A-channel; eta is +1 when the white faces sit there.
  std::vector<std::vector<BigInt>> g(nw, std::vector<BigInt>(nw, 0));
  for (int c = 0; c < n; ++c) {
    int fa0 = fd.corner_face[c][0], fa2 = fd.corner_face[c][2];
    int fb1 = fd.corner_face[c][1], fb3 = fd.corner_face[c][3];
    int u, v, eta;
    if (color[fa0] == white) {
      u = white_index[fa0];
      v = white_index[fa2];
      eta = 1;
    } else {
      u = white_index[fb1];
      v = white_index[fb3];
      eta = -1;
    }
    g[u][u] += eta;
    g[v][v] += eta;
    g[u][v] -= eta;
    g[v][u] -= eta;
  }

  // Delete one row and column.
  std::vector<std::vector<BigInt>> minor(nw > 0 ? nw - 1 : 0);
  for (int i = 1; i < nw; ++i) {
    minor[i - 1].assign(g[i].begin() + 1, g[i].end());
  }
  return detail::abs_det(std::move(minor));
}

struct Fingerprint {
  BigInt det = 1;
  LaurentPoly jones = LaurentPoly::one();

  bool operator==(const Fingerprint& o) const { return det == o.det && jones == o.jones; }
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
  bool is_unknot() const { return det == 1 && jones.is_one(); }
  std::string str() const { return "(det " + det.str() + ", jones " + jones.str() + ")"; }
};

inline Fingerprint fingerprint(const Diagram& d, int max_crossings = 20) {
  Fingerprint fp;
  fp.det = determinant(d);
  fp.jones = jones(d, max_crossings);
  return fp;
}

// Fingerprint of a possibly large diagram: greedy simplification first, then
// the state sum on whatever remains.
inline Fingerprint fingerprint_reduced(const Diagram& d, int max_crossings = 20) {
  return fingerprint(simplify(d), max_crossings);
}

}  // namespace knotmap
