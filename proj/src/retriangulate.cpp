// Copyright 2026 The meshbool Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "meshbool/retriangulate.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace meshbool {

double SignedArea(std::span<const Point2> loop) {
  double area = 0;
  const size_t n = loop.size();
  for (size_t i = 0; i < n; ++i) area += Cross2(loop[i], loop[(i + 1) % n]);
  return 0.5 * area;
}

Vec3 NewellNormal(std::span<const Point3> poly) {
  Vec3 n;
  const size_t count = poly.size();
  for (size_t i = 0; i < count; ++i) {
    const Point3& a = poly[i];
    const Point3& b = poly[(i + 1) % count];
    n.x += (a.y - b.y) * (a.z + b.z);
    n.y += (a.z - b.z) * (a.x + b.x);
    n.z += (a.x - b.x) * (a.y + b.y);
  }
  return n;
}

LocalFrame MakeFrame(std::span<const Point3> poly, Vec3 normal) {
  LocalFrame frame;
  frame.origin = poly.empty() ? Point3{} : poly[0];
  frame.n = Normalized(normal);
  Vec3 longest;
  double best = -1;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Vec3 e = poly[(i + 1) % poly.size()] - poly[i];
    const Vec3 inPlane = e - frame.n * Dot(e, frame.n);
    const double len = Norm(inPlane);
    if (len > best) {
      best = len;
      longest = inPlane;
    }
  }
  if (!(best > 0)) {
    // Any direction orthogonal to n.
    const Vec3 axis = std::abs(frame.n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    longest = Cross(frame.n, axis);
  }
  frame.u = Normalized(longest);
  frame.v = Cross(frame.n, frame.u);
  return frame;
}

LocalPolygon ToLocalCcw(std::span<const Point3> poly) {
  Vec3 n = NewellNormal(poly);
  double diam = 0;
  for (size_t i = 0; i < poly.size(); ++i)
    for (size_t j = i + 1; j < poly.size(); ++j)
      diam = std::max(diam, Distance(poly[i], poly[j]));
  if (poly.size() < 3 || !(Norm(n) > 1e-14 * diam * diam))
    throw Error(ErrorKind::DegeneratePolygon, "polygon has zero area");
  // Canonical normal: its dominant component is positive, so the winding of
  // the input shows up as the sign of the projected area.
  int axis = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(n[k]) > std::abs(n[axis])) axis = k;
  if (n[axis] < 0) n = -n;

  LocalPolygon out;
  out.frame = MakeFrame(poly, n);
  out.loop.reserve(poly.size());
  for (const Point3& p : poly) out.loop.push_back(out.frame.ToLocal(p));
  if (SignedArea(out.loop) < 0) {
    std::reverse(out.loop.begin(), out.loop.end());
    out.reversed = true;
  }
  return out;
}

namespace {

double Orient(Point2 a, Point2 b, Point2 c) { return Cross2(b - a, c - a); }

bool SegmentsCross(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double d1 = Orient(c, d, a), d2 = Orient(c, d, b);
  const double d3 = Orient(a, b, c), d4 = Orient(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

double Diameter(std::span<const Point2> pts) {
  double minX = INFINITY, minY = INFINITY, maxX = -INFINITY, maxY = -INFINITY;
  for (const Point2& p : pts) {
    minX = std::min(minX, p.x);
    maxX = std::max(maxX, p.x);
    minY = std::min(minY, p.y);
    maxY = std::max(maxY, p.y);
  }
  return pts.empty() ? 0 : std::hypot(maxX - minX, maxY - minY);
}

bool InTriangle(Point2 p, Point2 a, Point2 b, Point2 c, double eps) {
  return Orient(a, b, p) >= -eps && Orient(b, c, p) >= -eps &&
         Orient(c, a, p) >= -eps;
}

// Ear clipping over a possibly bridged polygon. Coincident points (bridge
// duplicates) never block an ear. Collinear ears are taken only when no
// strictly convex ear exists; with `lenient` the least-bad vertex is
// clipped instead of failing.
std::vector<std::array<int, 3>> EarClipImpl(std::span<const Point2> pts,
                                            bool lenient) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::array<int, 3>> tris;
  if (n < 3) return tris;
  const double diam = Diameter(pts);
  const double areaEps = 1e-12 * diam * diam;

  std::vector<int> prev(n), next(n);
  for (int i = 0; i < n; ++i) {
    prev[i] = (i + n - 1) % n;
    next[i] = (i + 1) % n;
  }
  auto isEar = [&](int i, bool allowFlat) {
    const int a = prev[i], c = next[i];
    if (pts[a] == pts[c]) return false;  // tip of a slit
    const double cross = Orient(pts[a], pts[i], pts[c]);
    if (allowFlat ? cross < -areaEps : cross <= areaEps) return false;
    for (int j = next[c]; j != a; j = next[j]) {
      const Point2 p = pts[j];
      if (p == pts[a] || p == pts[i] || p == pts[c]) continue;
      if (InTriangle(p, pts[a], pts[i], pts[c], areaEps)) return false;
    }
    return true;
  };

  int remaining = n;
  int cur = 0;
  while (remaining > 3) {
    int ear = -1;
    for (int pass = 0; pass < 2 && ear < 0; ++pass) {
      int i = cur;
      for (int k = 0; k < remaining; ++k, i = next[i]) {
        if (isEar(i, pass == 1)) {
          ear = i;
          break;
        }
      }
    }
    if (ear < 0) {
      if (!lenient)
        throw Error(ErrorKind::NotSimple, "no ear found; polygon not simple");
      double best = -INFINITY;
      int i = cur;
      for (int k = 0; k < remaining; ++k, i = next[i]) {
        const double cross = Orient(pts[prev[i]], pts[i], pts[next[i]]);
        if (cross > best) {
          best = cross;
          ear = i;
        }
      }
    }
    tris.push_back({prev[ear], ear, next[ear]});
    next[prev[ear]] = next[ear];
    prev[next[ear]] = prev[ear];
    cur = next[ear];
    --remaining;
  }
  tris.push_back({prev[cur], cur, next[cur]});
  return tris;
}

}  // namespace

std::vector<std::array<int, 3>> EarClip(std::span<const Point2> loop) {
  const int n = static_cast<int>(loop.size());
  if (n < 3) throw Error(ErrorKind::DegeneratePolygon, "fewer than 3 points");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (SegmentsCross(loop[i], loop[(i + 1) % n], loop[j],
                        loop[(j + 1) % n]))
        throw Error(ErrorKind::NotSimple, "polygon edges cross");
    }
  }
  if (SignedArea(loop) <= 0)
    throw Error(ErrorKind::NotSimple, "polygon is not counter-clockwise");
  return EarClipImpl(loop, false);
}

namespace {

bool PointInLoop(Point2 p, std::span<const Point2> loop) {
  bool inside = false;
  const size_t n = loop.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = loop[i], b = loop[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

std::vector<SplitPolygon> SplitTriangle(
    std::span<const int> boundary, std::span<const std::pair<int, int>> chords,
    const std::vector<Point3>& verts, double tol, int parent_tri) {
  // Local node numbering.
  std::vector<int> nodeId;
  std::unordered_map<int, int> local;
  auto node = [&](int id) {
    auto [it, inserted] = local.try_emplace(id, static_cast<int>(nodeId.size()));
    if (inserted) nodeId.push_back(id);
    return it->second;
  };
  std::vector<Point3> ring;
  for (int id : boundary) {
    node(id);
    ring.push_back(verts[id]);
  }
  const LocalFrame frame = MakeFrame(ring, NewellNormal(ring));
  std::vector<Point2> boundary2d;
  for (const Point3& p : ring) boundary2d.push_back(frame.ToLocal(p));

  for (const auto& [a, b] : chords) {
    node(a);
    node(b);
  }
  const int n = static_cast<int>(nodeId.size());
  std::vector<Point2> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = frame.ToLocal(verts[nodeId[i]]);

  for (int i = static_cast<int>(boundary.size()); i < n; ++i) {
    double dist = INFINITY;
    const size_t m = boundary2d.size();
    for (size_t k = 0; k < m; ++k) {
      const Point3 a = verts[boundary[k]], b = verts[boundary[(k + 1) % m]];
      const Vec3 ab = b - a;
      const double t = std::clamp(Dot(verts[nodeId[i]] - a, ab) / Dot(ab, ab),
                                  0.0, 1.0);
      dist = std::min(dist, Distance(verts[nodeId[i]], a + ab * t));
    }
    if (!PointInLoop(pos[i], boundary2d) && dist > tol) {
      std::ostringstream msg;
      msg << "chord point " << nodeId[i] << " lies outside triangle "
          << parent_tri;
      throw Error(ErrorKind::GeometryError, msg.str());
    }
  }

  // Raw edges: boundary chain plus chords, each split at nodes on it.
  std::vector<std::pair<int, int>> raw;
  for (size_t k = 0; k < boundary.size(); ++k)
    raw.emplace_back(local[boundary[k]],
                     local[boundary[(k + 1) % boundary.size()]]);
  for (const auto& [a, b] : chords) raw.emplace_back(local[a], local[b]);

  std::set<std::pair<int, int>> edges;
  for (const auto& [i, j] : raw) {
    if (i == j) continue;
    const Point3 a = verts[nodeId[i]], b = verts[nodeId[j]];
    const Vec3 ab = b - a;
    const double len2 = Dot(ab, ab);
    std::vector<std::pair<double, int>> on;
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      const Point3 p = verts[nodeId[k]];
      const double t = Dot(p - a, ab) / len2;
      if (t <= 0 || t >= 1) continue;
      if (Distance(p, a + ab * t) <= tol) on.emplace_back(t, k);
    }
    std::sort(on.begin(), on.end());
    int from = i;
    for (const auto& [t, k] : on) {
      if (from != k) edges.insert(std::minmax(from, k));
      from = k;
    }
    if (from != j) edges.insert(std::minmax(from, j));
  }

  // Dangling chords stay in the graph: the face walk runs out and back
  // along them, leaving a slit that the ear clipper keeps as an edge.
  std::vector<std::set<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }

  // Angular order of neighbors around each node.
  std::vector<std::vector<int>> around(n);
  for (int i = 0; i < n; ++i) {
    around[i].assign(adj[i].begin(), adj[i].end());
    std::sort(around[i].begin(), around[i].end(), [&](int a, int b) {
      const Point2 da = pos[a] - pos[i], db = pos[b] - pos[i];
      return std::atan2(da.y, da.x) < std::atan2(db.y, db.x);
    });
  }

  // Face walk with the face on the left of each half-edge.
  std::set<std::pair<int, int>> visited;
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < n; ++i) {
    for (int j : around[i]) {
      if (visited.contains({i, j})) continue;
      std::vector<int> cycle;
      int u = i, v = j;
      while (!visited.contains({u, v})) {
        visited.insert({u, v});
        cycle.push_back(u);
        const std::vector<int>& nb = around[v];
        const int idx = static_cast<int>(
            std::find(nb.begin(), nb.end(), u) - nb.begin());
        const int w = nb[(idx + static_cast<int>(nb.size()) - 1) % nb.size()];
        u = v;
        v = w;
      }
      cycles.push_back(std::move(cycle));
    }
  }

  auto cycleArea = [&](const std::vector<int>& c) {
    std::vector<Point2> pts;
    for (int k : c) pts.push_back(pos[k]);
    return SignedArea(pts);
  };
  std::vector<int> faces, outers;
  std::vector<double> areas(cycles.size());
  for (size_t c = 0; c < cycles.size(); ++c) {
    areas[c] = cycleArea(cycles[c]);
    (areas[c] > 0 ? faces : outers).push_back(static_cast<int>(c));
  }

  std::vector<SplitPolygon> polys(faces.size());
  for (size_t f = 0; f < faces.size(); ++f) {
    polys[f].parent_tri = parent_tri;
    for (int k : cycles[faces[f]]) polys[f].boundary.push_back(nodeId[k]);
  }
  // Each outer cycle other than the triangle's own boundary is a hole of
  // the smallest face containing it.
  const int corner = local[boundary[0]];
  for (int c : outers) {
    const std::vector<int>& cyc = cycles[c];
    if (std::find(cyc.begin(), cyc.end(), corner) != cyc.end()) continue;
    int best = -1;
    for (size_t f = 0; f < faces.size(); ++f) {
      const std::vector<int>& fc = cycles[faces[f]];
      if (std::find(fc.begin(), fc.end(), cyc[0]) != fc.end()) continue;
      std::vector<Point2> pts;
      for (int k : fc) pts.push_back(pos[k]);
      if (!PointInLoop(pos[cyc[0]], pts)) continue;
      if (best < 0 || areas[faces[f]] < areas[faces[best]])
        best = static_cast<int>(f);
    }
    if (best < 0) {
      std::ostringstream msg;
      msg << "unplaced loop inside triangle " << parent_tri;
      throw Error(ErrorKind::GeometryError, msg.str());
    }
    std::vector<int> hole;
    for (int k : cyc) hole.push_back(nodeId[k]);
    polys[best].holes.push_back(std::move(hole));
  }
  return polys;
}

std::vector<std::array<int, 3>> TriangulatePolygon(
    const SplitPolygon& poly, const std::vector<Point3>& verts, Vec3 normal) {
  std::vector<Point3> ring;
  for (int id : poly.boundary) ring.push_back(verts[id]);
  const LocalFrame frame = MakeFrame(ring, normal);

  std::vector<int> ids = poly.boundary;
  std::vector<Point2> pts;
  for (int id : ids) pts.push_back(frame.ToLocal(verts[id]));
  bool reversed = false;
  if (SignedArea(pts) < 0) {
    std::reverse(ids.begin(), ids.end());
    std::reverse(pts.begin(), pts.end());
    reversed = true;
  }

  // Bridge holes, rightmost first.
  std::vector<std::vector<int>> holes = poly.holes;
  std::vector<std::vector<Point2>> holePts;
  for (std::vector<int>& h : holes) {
    std::vector<Point2> hp;
    for (int id : h) hp.push_back(frame.ToLocal(verts[id]));
    if (SignedArea(hp) > 0) {
      std::reverse(h.begin(), h.end());
      std::reverse(hp.begin(), hp.end());
    }
    holePts.push_back(std::move(hp));
  }
  std::vector<int> order(holes.size());
  std::iota(order.begin(), order.end(), 0);
  auto maxX = [&](int h) {
    return std::max_element(holePts[h].begin(), holePts[h].end(),
                            [](Point2 a, Point2 b) { return a.x < b.x; }) -
           holePts[h].begin();
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return holePts[a][maxX(a)].x > holePts[b][maxX(b)].x;
  });
  for (size_t oi = 0; oi < order.size(); ++oi) {
    const int h = order[oi];
    const int hv = static_cast<int>(maxX(h));
    const Point2 hp = holePts[h][hv];
    auto blocked = [&](Point2 a, Point2 b) {
      const size_t m = pts.size();
      for (size_t k = 0; k < m; ++k)
        if (SegmentsCross(a, b, pts[k], pts[(k + 1) % m])) return true;
      for (size_t oj = oi; oj < order.size(); ++oj) {
        const std::vector<Point2>& q = holePts[order[oj]];
        for (size_t k = 0; k < q.size(); ++k)
          if (SegmentsCross(a, b, q[k], q[(k + 1) % q.size()])) return true;
      }
      return false;
    };
    std::vector<int> cand(pts.size());
    std::iota(cand.begin(), cand.end(), 0);
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
      const Point2 da = pts[a] - hp, db = pts[b] - hp;
      return da.x * da.x + da.y * da.y < db.x * db.x + db.y * db.y;
    });
    int target = -1;
    for (int c : cand) {
      const Point2 mid{0.5 * (pts[c].x + hp.x), 0.5 * (pts[c].y + hp.y)};
      if (!blocked(hp, pts[c]) && PointInLoop(mid, pts)) {
        target = c;
        break;
      }
    }
    if (target < 0) target = cand.front();
    std::vector<int> newIds(ids.begin(), ids.begin() + target + 1);
    std::vector<Point2> newPts(pts.begin(), pts.begin() + target + 1);
    const size_t hn = holes[h].size();
    for (size_t k = 0; k <= hn; ++k) {
      newIds.push_back(holes[h][(hv + k) % hn]);
      newPts.push_back(holePts[h][(hv + k) % hn]);
    }
    newIds.insert(newIds.end(), ids.begin() + target, ids.end());
    newPts.insert(newPts.end(), pts.begin() + target, pts.end());
    ids = std::move(newIds);
    pts = std::move(newPts);
  }

  std::vector<std::array<int, 3>> tris;
  for (const auto& t : EarClipImpl(pts, true)) {
    std::array<int, 3> tri{ids[t[0]], ids[t[1]], ids[t[2]]};
    if (reversed) std::swap(tri[1], tri[2]);
    tris.push_back(tri);
  }
  return tris;
}

}  // namespace meshbool
