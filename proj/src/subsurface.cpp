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

#include "meshbool/subsurface.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace meshbool {

SurfaceAdjacency MakeAdjacency(const MergedState& state, SurfaceTag tag,
                               const std::vector<DirectedEdge>& edges) {
  SurfaceAdjacency adj;
  adj.tag = tag;
  for (size_t i = 0; i < state.triangles.size(); ++i) {
    const Triangle& t = state.triangles[i];
    if (t.source != tag) continue;
    for (int k = 0; k < 3; ++k)
      adj.edge_to_tri[EdgeKey(t.v[k], t.v[(k + 1) % 3])] = static_cast<int>(i);
  }
  for (const DirectedEdge& e : edges)
    adj.barriers.insert(UndirectedKey(e.head, e.tail));
  return adj;
}

namespace {

bool UsableOn(const OrientedLoop& loop, SurfaceTag tag) {
  if (loop.kind == LoopKind::Open) return false;
  if (loop.kind == LoopKind::BoundaryClosed) return loop.surface == tag;
  return true;
}

// Directed edges of the loop as traversed by a sub-surface using it with
// the given sign.
std::vector<uint64_t> SidedEdges(const OrientedLoop& loop, int sign) {
  std::vector<uint64_t> out;
  for (size_t i = 0; i + 1 < loop.verts.size(); ++i) {
    const int a = loop.verts[i], b = loop.verts[i + 1];
    out.push_back(sign > 0 ? EdgeKey(a, b) : EdgeKey(b, a));
  }
  return out;
}

uint64_t Reverse(uint64_t key) { return EdgeKey(KeyTo(key), KeyFrom(key)); }

}  // namespace

SubSurface GrowSubSurface(const OrientedLoop& loop, int sign,
                          const MergedState& state,
                          const SurfaceAdjacency& adj) {
  SubSurface sf;
  sf.source = adj.tag;
  std::unordered_set<int> inSurface;
  std::unordered_map<uint64_t, int> front;  // multiset of directed edges
  std::deque<uint64_t> work;
  std::unordered_set<uint64_t> seeds;

  auto push = [&](uint64_t e) {
    auto rev = front.find(Reverse(e));
    if (rev != front.end()) {
      if (--rev->second == 0) front.erase(rev);
      return;
    }
    ++front[e];
    work.push_back(e);
  };
  for (uint64_t e : SidedEdges(loop, sign)) {
    const uint64_t opposing = Reverse(e);
    seeds.insert(opposing);
    ++front[opposing];
    work.push_back(opposing);
  }

  while (!work.empty()) {
    const uint64_t e = work.front();
    work.pop_front();
    if (!front.contains(e)) continue;
    if (!seeds.contains(e) &&
        adj.barriers.contains(UndirectedKey(KeyFrom(e), KeyTo(e))))
      continue;
    auto it = adj.edge_to_tri.find(Reverse(e));
    if (it == adj.edge_to_tri.end()) continue;
    const int tri = it->second;
    if (!inSurface.insert(tri).second) continue;
    const Triangle& t = state.triangles[tri];
    for (int k = 0; k < 3; ++k) push(EdgeKey(t.v[k], t.v[(k + 1) % 3]));
  }

  // Whatever is left on the front must be a barrier or the open boundary.
  for (const auto& [e, count] : front) {
    if (seeds.contains(e)) continue;
    if (adj.barriers.contains(UndirectedKey(KeyFrom(e), KeyTo(e)))) continue;
    auto it = adj.edge_to_tri.find(Reverse(e));
    if (it != adj.edge_to_tri.end() && !inSurface.contains(it->second)) {
      std::ostringstream msg;
      msg << "growth from loop " << loop.id << " stalled at edge "
          << KeyFrom(e) << "->" << KeyTo(e);
      throw Error(ErrorKind::TopologyError, msg.str());
    }
  }
  sf.triangles.assign(inSurface.begin(), inSurface.end());
  std::sort(sf.triangles.begin(), sf.triangles.end());
  return sf;
}

std::vector<SubSurface> BuildSubSurfaces(const std::vector<OrientedLoop>& loops,
                                         const MergedState& state,
                                         const SurfaceAdjacency& adj,
                                         int first_id) {
  std::map<std::vector<int>, int> byTriangles;
  std::vector<SubSurface> surfs;
  for (const OrientedLoop& loop : loops) {
    if (!UsableOn(loop, adj.tag)) continue;
    for (int sign : {1, -1}) {
      // Boundary-closed loops follow the surface winding; their far side
      // is the union of the neighbouring regions, not a region itself.
      if (sign < 0 && loop.kind == LoopKind::BoundaryClosed) continue;
      bool seeded = false;
      for (uint64_t e : SidedEdges(loop, sign))
        seeded = seeded || adj.edge_to_tri.contains(e);
      if (!seeded) continue;
      SubSurface sf = GrowSubSurface(loop, sign, state, adj);
      if (sf.triangles.empty() || byTriangles.contains(sf.triangles)) continue;
      byTriangles[sf.triangles] = static_cast<int>(surfs.size());
      surfs.push_back(std::move(sf));
    }
  }

  for (size_t s = 0; s < surfs.size(); ++s) {
    SubSurface& sf = surfs[s];
    sf.id = first_id + static_cast<int>(s);
    const std::unordered_set<int> members(sf.triangles.begin(),
                                          sf.triangles.end());
    // Owners: loops whose every edge is carried, in one direction, by a
    // triangle of this sub-surface.
    for (const OrientedLoop& loop : loops) {
      if (!UsableOn(loop, adj.tag)) continue;
      for (int sign : {1, -1}) {
        bool all = true;
        for (uint64_t e : SidedEdges(loop, sign)) {
          auto it = adj.edge_to_tri.find(e);
          if (it == adj.edge_to_tri.end() || !members.contains(it->second)) {
            all = false;
            break;
          }
        }
        if (all) sf.owners.push_back({loop.id, sign});
      }
    }

    // Component count of owner loops plus leftover open-boundary edges.
    std::unordered_map<int, int> parent;
    auto find = [&](int x) {
      if (!parent.contains(x)) parent[x] = x;
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    std::unordered_set<uint64_t> ownerEdges;
    for (const LoopUse& use : sf.owners) {
      const OrientedLoop& loop = loops[use.loop];
      for (size_t i = 0; i + 1 < loop.verts.size(); ++i) {
        join(loop.verts[i], loop.verts[i + 1]);
        ownerEdges.insert(UndirectedKey(loop.verts[i], loop.verts[i + 1]));
      }
    }
    for (int tri : sf.triangles) {
      const Triangle& t = state.triangles[tri];
      for (int k = 0; k < 3; ++k) {
        const int a = t.v[k], b = t.v[(k + 1) % 3];
        if (adj.edge_to_tri.contains(EdgeKey(b, a))) continue;
        sf.has_boundary_loop = true;
        if (!ownerEdges.contains(UndirectedKey(a, b))) join(a, b);
      }
    }
    std::unordered_set<int> roots;
    for (const auto& [v, p] : parent) roots.insert(find(v));
    sf.is_public = roots.size() > 1;
  }
  return surfs;
}

std::vector<std::string> ClassifySubSurfaces(
    const std::vector<SubSurface>& surfs) {
  std::vector<std::string> issues;
  for (SurfaceTag tag : {SurfaceTag::A, SurfaceTag::B}) {
    int publics = 0, privates = 0, total = 0;
    for (const SubSurface& sf : surfs) {
      if (sf.source != tag) continue;
      ++total;
      (sf.is_public ? publics : privates)++;
    }
    if (total == 0) continue;
    const char name = tag == SurfaceTag::A ? 'A' : 'B';
    if (publics > 1) {
      std::ostringstream msg;
      msg << "surface " << name << " has " << publics
          << " public sub-surfaces";
      issues.push_back(msg.str());
    }
    if (privates == 0) {
      std::ostringstream msg;
      msg << "surface " << name << " has no private sub-surface";
      issues.push_back(msg.str());
    }
  }
  return issues;
}

}  // namespace meshbool
