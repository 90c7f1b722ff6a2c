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

#include "meshbool/pipeline.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "meshbool/retriangulate.h"

namespace meshbool {

namespace {

struct RawEdge {
  int head, tail, tri_a, tri_b;
};

// Parameter of p along h->t when p lies on the open segment within tol,
// else a negative value.
double OnSegment(Point3 p, Point3 h, Point3 t, double tol) {
  const Vec3 d = t - h;
  const double len2 = Dot(d, d);
  if (!(len2 > 0)) return -1;
  const double u = Dot(p - h, d) / len2;
  if (u <= 0 || u >= 1) return -1;
  return Distance(p, h + d * u) <= tol ? u : -1;
}

// Splits every welded segment at the welded points of segments sharing
// one of its triangles, and at those triangles' corners.
std::vector<RawEdge> SplitSegments(const std::vector<RawEdge>& segs,
                                   const std::vector<Point3>& verts,
                                   const std::vector<std::array<int, 3>>& triA,
                                   const std::vector<std::array<int, 3>>& triB,
                                   double tol) {
  std::unordered_map<int, std::vector<int>> byA, byB;
  for (size_t i = 0; i < segs.size(); ++i) {
    byA[segs[i].tri_a].push_back(static_cast<int>(i));
    byB[segs[i].tri_b].push_back(static_cast<int>(i));
  }
  std::vector<RawEdge> out;
  for (const RawEdge& s : segs) {
    std::set<int> cands;
    for (int j : byA[s.tri_a]) cands.insert({segs[j].head, segs[j].tail});
    for (int j : byB[s.tri_b]) cands.insert({segs[j].head, segs[j].tail});
    for (int v : triA[s.tri_a]) cands.insert(v);
    for (int v : triB[s.tri_b]) cands.insert(v);
    std::vector<std::pair<double, int>> cuts;
    for (int v : cands) {
      if (v == s.head || v == s.tail) continue;
      const double u = OnSegment(verts[v], verts[s.head], verts[s.tail], tol);
      if (u > 0) cuts.push_back({u, v});
    }
    std::sort(cuts.begin(), cuts.end());
    int prev = s.head;
    for (const auto& [u, v] : cuts) {
      out.push_back({prev, v, s.tri_a, s.tri_b});
      prev = v;
    }
    out.push_back({prev, s.tail, s.tri_a, s.tri_b});
  }
  return out;
}

// Re-triangulates the triangles of one surface given per-triangle chords
// and shared per-edge points.
void CutSurface(const std::vector<std::array<int, 3>>& tris, SurfaceTag tag,
                const std::map<int, std::vector<std::pair<int, int>>>& chords,
                const std::vector<Point3>& verts, double tol,
                MergedState& state) {
  std::unordered_map<uint64_t, std::set<int>> edgePoints;
  for (const auto& [tri, list] : chords) {
    const std::array<int, 3>& t = tris[tri];
    for (const auto& [h, tl] : list) {
      for (int p : {h, tl}) {
        for (int k = 0; k < 3; ++k) {
          const int u = t[k], w = t[(k + 1) % 3];
          if (p == u || p == w) continue;
          if (OnSegment(verts[p], verts[u], verts[w], tol) > 0)
            edgePoints[UndirectedKey(u, w)].insert(p);
        }
      }
    }
  }

  for (size_t i = 0; i < tris.size(); ++i) {
    const std::array<int, 3>& t = tris[i];
    const Vec3 normal = Normalized(
        TriangleNormal(verts[t[0]], verts[t[1]], verts[t[2]]));
    auto emit = [&](std::array<int, 3> v) {
      state.triangles.push_back({v, tag, -1});
      state.parent.push_back(static_cast<int>(i));
      state.parent_normal.push_back(normal);
    };
    const bool repeated = t[0] == t[1] || t[1] == t[2] || t[2] == t[0];
    std::vector<int> boundary;
    bool cut = false;
    for (int k = 0; k < 3 && !repeated; ++k) {
      const int u = t[k], w = t[(k + 1) % 3];
      boundary.push_back(u);
      auto it = edgePoints.find(UndirectedKey(u, w));
      if (it == edgePoints.end()) continue;
      std::vector<std::pair<double, int>> pts;
      for (int p : it->second)
        pts.push_back({OnSegment(verts[p], verts[u], verts[w], tol), p});
      std::sort(pts.begin(), pts.end());
      for (const auto& [param, p] : pts) boundary.push_back(p);
      cut = true;
    }
    auto ch = chords.find(static_cast<int>(i));
    if (repeated || (!cut && ch == chords.end())) {
      emit(t);
      continue;
    }
    static const std::vector<std::pair<int, int>> kNone;
    const auto& list = ch == chords.end() ? kNone : ch->second;
    for (const SplitPolygon& poly :
         SplitTriangle(boundary, list, verts, tol, static_cast<int>(i)))
      for (const std::array<int, 3>& tri : TriangulatePolygon(poly, verts, normal))
        emit(tri);
  }
}

}  // namespace

MergedState RetriangulateAndMerge(const TriMesh& a, const TriMesh& b,
                                  const std::vector<IntersectionSegment>& segs,
                                  double tol) {
  const int nA = static_cast<int>(a.vertices.size());
  const int nB = static_cast<int>(b.vertices.size());
  std::vector<Point3> raw = a.vertices;
  raw.insert(raw.end(), b.vertices.begin(), b.vertices.end());
  for (const IntersectionSegment& s : segs) {
    raw.push_back(s.p0);
    raw.push_back(s.p1);
  }
  MergeResult weld = MergeVertices(raw, tol);

  std::vector<std::array<int, 3>> triA, triB;
  for (const Triangle& t : a.triangles)
    triA.push_back({weld.remap[t.v[0]], weld.remap[t.v[1]], weld.remap[t.v[2]]});
  for (const Triangle& t : b.triangles)
    triB.push_back({weld.remap[nA + t.v[0]], weld.remap[nA + t.v[1]],
                    weld.remap[nA + t.v[2]]});

  std::vector<RawEdge> welded;
  for (size_t i = 0; i < segs.size(); ++i) {
    const int h = weld.remap[nA + nB + 2 * i];
    const int t = weld.remap[nA + nB + 2 * i + 1];
    if (h != t) welded.push_back({h, t, segs[i].tri_a, segs[i].tri_b});
  }
  const std::vector<RawEdge> pieces =
      SplitSegments(welded, weld.vertices, triA, triB, tol);

  MergedState state;
  state.vertices = std::move(weld.vertices);
  state.remap = std::move(weld.remap);
  std::unordered_map<uint64_t, int> edgeIndex;
  std::map<int, std::vector<std::pair<int, int>>> chordsA, chordsB;
  for (const RawEdge& e : pieces) {
    auto [it, inserted] = edgeIndex.try_emplace(
        UndirectedKey(e.head, e.tail), static_cast<int>(state.edges.size()));
    if (inserted) state.edges.push_back({e.head, e.tail, {}});
    DirectedEdge& de = state.edges[it->second];
    de.owners.push_back({e.tri_a, e.tri_b});
    auto addChord = [&](std::vector<std::pair<int, int>>& list) {
      const std::pair<int, int> c{de.head, de.tail};
      if (std::find(list.begin(), list.end(), c) == list.end())
        list.push_back(c);
    };
    addChord(chordsA[e.tri_a]);
    addChord(chordsB[e.tri_b]);
  }

  CutSurface(triA, SurfaceTag::A, chordsA, state.vertices, tol, state);
  CutSurface(triB, SurfaceTag::B, chordsB, state.vertices, tol, state);
  state = ClearTopology(std::move(state), tol);

  // Every intersection edge must be a triangle edge on both surfaces.
  std::unordered_set<uint64_t> onSurface[2];
  for (const Triangle& t : state.triangles)
    for (int k = 0; k < 3; ++k)
      onSurface[static_cast<int>(t.source)].insert(
          UndirectedKey(t.v[k], t.v[(k + 1) % 3]));
  for (size_t i = 0; i < state.edges.size(); ++i) {
    const DirectedEdge& e = state.edges[i];
    for (int s = 0; s < 2; ++s) {
      if (onSurface[s].contains(UndirectedKey(e.head, e.tail))) continue;
      std::ostringstream msg;
      msg << "intersection edge " << i << " (" << e.head << "->" << e.tail
          << ") is missing from surface " << (s == 0 ? 'A' : 'B');
      throw Error(ErrorKind::TopologyError, msg.str());
    }
  }
  return state;
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
void Stage(PipelineState& st, const char* name, F&& body) {
  const auto start = Clock::now();
  try {
    body();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(name) + ": " + e.what());
  }
  st.timings.push_back(
      {name, std::chrono::duration<double>(Clock::now() - start).count()});
}

double RootSide(const TriMesh& a, const TriMesh& b) {
  const Aabb boxA = MeshAabb(a), boxB = MeshAabb(b);
  const Aabb shared = AabbIntersection(boxA, boxB);
  if (!shared.IsEmpty() && shared.MaxExtent() > 0) return shared.MaxExtent();
  Aabb all = boxA;
  all.Include(boxB);
  return all.MaxExtent() > 0 ? all.MaxExtent() : 1.0;
}

}  // namespace

PipelineState RunPipeline(const TriMesh& a, const TriMesh& b,
                          const PipelineOptions& opts) {
  PipelineState st;
  st.a = a;
  st.b = b;
  st.root_side = RootSide(a, b);
  st.merge_tol = opts.merge_tol > 0 ? opts.merge_tol : 1e-9 * st.root_side;
  const double eps = opts.plane_eps > 0 ? opts.plane_eps : 1e-12 * st.root_side;
  const bool bothClosed = a.closed && b.closed;

  Stage(st, kStageNames[0], [&] {
    RejectCoincident(a, b, st.merge_tol);
    st.pairs = FindCandidatePairs(a, b, opts.octree);
  });
  Stage(st, kStageNames[1], [&] {
    NarrowPhaseResult np =
        IntersectAll(st.pairs, a, b, {eps, opts.threads, opts.strict});
    st.segments = std::move(np.segments);
    st.coplanar = std::move(np.coplanar);
    for (const CandidatePair& p : st.coplanar) {
      std::ostringstream msg;
      msg << "coplanar overlap between A triangle " << p.tri_a
          << " and B triangle " << p.tri_b << " ignored";
      st.warnings.push_back(msg.str());
    }
  });

  if (st.segments.empty()) {
    st.trivial = true;
    for (size_t i = 2; i < kStageNames.size(); ++i)
      Stage(st, kStageNames[i], [&] {
        if (i == 5 && bothClosed && !opts.stop_after_surfaces)
          st.result = TrivialResult(a, b, st.merge_tol);
      });
    return st;
  }

  Stage(st, kStageNames[2], [&] {
    st.merged = RetriangulateAndMerge(a, b, st.segments, st.merge_tol);
  });

  Stage(st, kStageNames[3], [&] {
    st.loops = BuildLoops(st.merged.edges);
    std::set<int> dangling;
    for (SurfaceTag tag : {SurfaceTag::A, SurfaceTag::B}) {
      if ((tag == SurfaceTag::A ? a : b).closed) continue;
      BoundaryClosure closure = CloseOpenLoopsOnBoundary(
          st.loops, SurfaceMesh(st.merged, tag),
          static_cast<int>(st.loops.size()));
      dangling.insert(closure.dangling.begin(), closure.dangling.end());
      for (OrientedLoop& loop : closure.loops) st.loops.push_back(std::move(loop));
    }
    for (const OrientedLoop& loop : st.loops)
      if (loop.kind == LoopKind::Open && bothClosed) dangling.insert(loop.id);
    st.dangling_loops.assign(dangling.begin(), dangling.end());
    for (int id : st.dangling_loops) {
      std::ostringstream msg;
      msg << "loop " << id << " is open and does not end on a boundary";
      if (opts.strict || bothClosed)
        throw Error(ErrorKind::DanglingLoop, msg.str());
      st.warnings.push_back(msg.str());
    }
  });

  Stage(st, kStageNames[4], [&] {
    for (SurfaceTag tag : {SurfaceTag::A, SurfaceTag::B}) {
      const SurfaceAdjacency adj =
          MakeAdjacency(st.merged, tag, st.merged.edges);
      for (SubSurface& sf : BuildSubSurfaces(
               st.loops, st.merged, adj, static_cast<int>(st.surfaces.size())))
        st.surfaces.push_back(std::move(sf));
    }
    for (std::string& issue : ClassifySubSurfaces(st.surfaces))
      st.warnings.push_back(std::move(issue));
  });
  if (opts.stop_after_surfaces) return st;

  Stage(st, kStageNames[5], [&] {
    st.blocks = AssembleBlocks(st.surfaces, st.loops, bothClosed);
    const std::vector<Pairing> verdicts =
        ClassifyNonSubtraction(st.blocks, st.surfaces);
    std::vector<int> candidates;
    for (size_t i = 0; i < st.blocks.size(); ++i) {
      st.blocks[i].pairing = verdicts[i];
      if (verdicts[i] == Pairing::Opposite)
        candidates.push_back(static_cast<int>(i));
    }
    if (!bothClosed) {
      // Without a union there is no outer/inner split; subtraction-style
      // blocks are checked with the B side flipped.
      for (SubBlock& block : st.blocks) {
        SubBlock probe = block;
        if (probe.pairing == Pairing::Same)
          for (int id : probe.surfaces)
            if (st.surfaces[id].source == SurfaceTag::B)
              probe.reversed.push_back(id);
        block.closed = IsClosedManifold(BlockMesh(probe, st.surfaces, st.merged));
      }
      return;
    }
    const UnionPick pick =
        PickUnion(st.blocks, candidates, st.surfaces, st.merged);
    if (pick.ambiguous)
      st.warnings.push_back(
          "union chosen by volume; extrema did not single out one block");
    ClassifySubtractions(st.blocks, pick, st.surfaces);
    st.result = CollectResult(st.blocks, st.surfaces, st.merged);
  });
  return st;
}

}  // namespace meshbool
