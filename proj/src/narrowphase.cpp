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

#include "meshbool/narrowphase.h"

#include <algorithm>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace meshbool {

namespace {

struct Cut {
  int count = 0;
  std::array<Point3, 2> points;
};

// Points where triangle `t` meets the plane whose signed distances are `d`.
Cut CutByPlane(const TriangleRef& t, const std::array<double, 3>& d) {
  Cut cut;
  auto add = [&](Point3 p) {
    if (cut.count < 2) cut.points[cut.count++] = p;
  };
  for (int i = 0; i < 3; ++i)
    if (d[i] == 0) add(t.p[i]);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    if (!((d[i] < 0 && d[j] > 0) || (d[i] > 0 && d[j] < 0))) continue;
    const int from = t.ids[i] < t.ids[j] ? i : j;
    const int to = from == i ? j : i;
    const double s = d[from] / (d[from] - d[to]);
    add(t.p[from] + (t.p[to] - t.p[from]) * s);
  }
  return cut;
}

bool Separated(const std::array<Point3, 3>& p, const std::array<Point3, 3>& q,
               Vec3 n, double eps) {
  // 2D separating-axis test within the shared plane; touching counts as
  // separated.
  for (int i = 0; i < 3; ++i) {
    const Point3 a = p[i];
    const Point3 b = p[(i + 1) % 3];
    const Vec3 out = Normalized(Cross(b - a, n));
    bool allOut = true;
    for (const Point3& x : q) {
      if (Dot(x - a, out) < eps) {
        allOut = false;
        break;
      }
    }
    if (allOut) return true;
  }
  return false;
}

bool CoplanarOverlap(const TriangleRef& a, const TriangleRef& b, Vec3 n,
                     double eps) {
  if (Dot(TriangleNormal(a.p[0], a.p[1], a.p[2]), n) < 0) n = -n;
  Vec3 nb = n;
  if (Dot(TriangleNormal(b.p[0], b.p[1], b.p[2]), n) < 0) nb = -n;
  return !Separated(a.p, b.p, n, -eps) && !Separated(b.p, a.p, nb, -eps);
}

}  // namespace

TriTriResult IntersectTriangles(const TriangleRef& a, const TriangleRef& b,
                                double eps) {
  const Vec3 na = TriangleNormal(a.p[0], a.p[1], a.p[2]);
  const Vec3 nb = TriangleNormal(b.p[0], b.p[1], b.p[2]);
  auto degenerate = [](const TriangleRef& t, Vec3 n) {
    double longest = 0;
    for (int i = 0; i < 3; ++i)
      longest = std::max(longest, Distance(t.p[i], t.p[(i + 1) % 3]));
    return !(Norm(n) > 1e-14 * longest * longest);
  };
  if (degenerate(a, na) || degenerate(b, nb)) {
    throw Error(ErrorKind::DegenerateTriangle,
                "degenerate triangle in intersection test");
  }
  const Vec3 ua = Normalized(na);
  const Vec3 ub = Normalized(nb);

  std::array<double, 3> da, db;
  for (int i = 0; i < 3; ++i) {
    da[i] = Dot(ub, a.p[i] - b.p[0]);
    if (std::abs(da[i]) < eps) da[i] = 0;
    db[i] = Dot(ua, b.p[i] - a.p[0]);
    if (std::abs(db[i]) < eps) db[i] = 0;
  }
  auto oneSide = [](const std::array<double, 3>& d) {
    return (d[0] > 0 && d[1] > 0 && d[2] > 0) ||
           (d[0] < 0 && d[1] < 0 && d[2] < 0);
  };
  TriTriResult result;
  if (oneSide(da) || oneSide(db)) return result;

  if (da[0] == 0 && da[1] == 0 && da[2] == 0) {
    if (CoplanarOverlap(a, b, ua, eps)) result.kind = ContactKind::Coplanar;
    return result;
  }
  if (db[0] == 0 && db[1] == 0 && db[2] == 0) {
    if (CoplanarOverlap(a, b, ua, eps)) result.kind = ContactKind::Coplanar;
    return result;
  }

  const Vec3 dir = Cross(ua, ub);
  if (Norm(dir) == 0) return result;

  const Cut ca = CutByPlane(a, da);
  const Cut cb = CutByPlane(b, db);
  if (ca.count == 0 || cb.count == 0) return result;

  struct End {
    double t;
    Point3 p;
  };
  auto interval = [&](const Cut& c) {
    End lo{Dot(dir, c.points[0]), c.points[0]};
    End hi = lo;
    if (c.count == 2) {
      End other{Dot(dir, c.points[1]), c.points[1]};
      if (other.t < lo.t) lo = other;
      if (other.t > hi.t) hi = other;
    }
    return std::pair{lo, hi};
  };
  const auto [aLo, aHi] = interval(ca);
  const auto [bLo, bHi] = interval(cb);
  const End lo = aLo.t >= bLo.t ? aLo : bLo;
  const End hi = aHi.t <= bHi.t ? aHi : bHi;
  if (lo.t > hi.t) return result;

  result.kind = ContactKind::Segment;
  result.segment.p0 = lo.p;
  result.segment.p1 = hi.p;
  result.segment.degenerate = Distance(lo.p, hi.p) <= eps;
  return result;
}

TriangleRef MakeTriangleRef(const TriMesh& mesh, int tri) {
  TriangleRef ref;
  const Triangle& t = mesh.triangles[tri];
  for (int k = 0; k < 3; ++k) {
    ref.p[k] = mesh.vertices[t.v[k]];
    ref.ids[k] = t.v[k];
  }
  return ref;
}

int ResolveThreadCount(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

NarrowPhaseResult IntersectAll(const std::vector<CandidatePair>& pairs,
                               const TriMesh& a, const TriMesh& b,
                               const NarrowPhaseOptions& opts) {
  std::vector<TriTriResult> results(pairs.size());
  const int threads = std::max(
      1, std::min<int>(ResolveThreadCount(opts.threads),
                       static_cast<int>(pairs.size())));

  std::exception_ptr failure;
  std::mutex failureMutex;
  auto work = [&](size_t begin, size_t end) {
    try {
      for (size_t i = begin; i < end; ++i) {
        const CandidatePair& p = pairs[i];
        results[i] = IntersectTriangles(MakeTriangleRef(a, p.tri_a),
                                        MakeTriangleRef(b, p.tri_b), opts.eps);
      }
    } catch (...) {
      std::lock_guard lock(failureMutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads <= 1) {
    work(0, pairs.size());
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (pairs.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const size_t begin = t * chunk;
      const size_t end = std::min(pairs.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  NarrowPhaseResult out;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const TriTriResult& r = results[i];
    if (r.kind == ContactKind::Coplanar) {
      out.coplanar.push_back(pairs[i]);
    } else if (r.kind == ContactKind::Segment && !r.segment.degenerate) {
      IntersectionSegment seg = r.segment;
      seg.tri_a = pairs[i].tri_a;
      seg.tri_b = pairs[i].tri_b;
      out.segments.push_back(seg);
    }
  }
  if (opts.strict && !out.coplanar.empty()) {
    std::ostringstream msg;
    msg << out.coplanar.size() << " coplanar triangle pair(s), first (A"
        << out.coplanar.front().tri_a << ", B" << out.coplanar.front().tri_b
        << ")";
    throw Error(ErrorKind::CoplanarPair, msg.str());
  }
  return out;
}

}  // namespace meshbool
