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

#include "meshbool/loops.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace meshbool {

std::string_view LoopKindName(LoopKind kind) {
  switch (kind) {
    case LoopKind::Open: return "open";
    case LoopKind::HardClosed: return "hard_closed";
    case LoopKind::SoftClosed: return "soft_closed";
    case LoopKind::BoundaryClosed: return "boundary_closed";
  }
  return "unknown";
}

std::unordered_map<int, int> EdgeDegrees(
    const std::vector<DirectedEdge>& edges) {
  std::unordered_map<int, int> degree;
  for (const DirectedEdge& e : edges) {
    ++degree[e.head];
    ++degree[e.tail];
  }
  return degree;
}

LoopKind ClassifyLoop(const OrientedLoop& loop,
                      const std::unordered_map<int, int>& degree) {
  if (loop.verts.size() < 2)
    throw Error(ErrorKind::TopologyError, "loop with fewer than 2 vertices");
  auto deg = [&](int v) {
    auto it = degree.find(v);
    return it == degree.end() ? 0 : it->second;
  };
  for (size_t i = 1; i + 1 < loop.verts.size(); ++i) {
    if (deg(loop.verts[i]) != 2) {
      std::ostringstream msg;
      msg << "loop " << loop.id << " passes through vertex " << loop.verts[i]
          << " of degree " << deg(loop.verts[i]);
      throw Error(ErrorKind::TopologyError, msg.str());
    }
  }
  const int first = loop.verts.front();
  const int last = loop.verts.back();
  if (deg(first) == 1 || deg(last) == 1) return LoopKind::Open;
  if (deg(first) > 2 && deg(last) > 2) return LoopKind::SoftClosed;
  if (first == last && deg(first) == 2) return LoopKind::HardClosed;
  std::ostringstream msg;
  msg << "loop " << loop.id << " has inconsistent end degrees";
  throw Error(ErrorKind::TopologyError, msg.str());
}

std::vector<OrientedLoop> BuildLoops(const std::vector<DirectedEdge>& edges) {
  std::map<int, std::vector<int>> incident;  // ordered for determinism
  for (size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].head].push_back(static_cast<int>(i));
    incident[edges[i].tail].push_back(static_cast<int>(i));
  }
  const std::unordered_map<int, int> degree = EdgeDegrees(edges);
  std::vector<char> used(edges.size(), 0);
  auto other = [&](int e, int v) {
    return edges[e].head == v ? edges[e].tail : edges[e].head;
  };

  std::vector<OrientedLoop> loops;
  auto trace = [&](int start, int firstEdge) {
    OrientedLoop loop;
    loop.verts.push_back(start);
    int v = start;
    int e = firstEdge;
    while (true) {
      used[e] = 1;
      loop.edges.push_back(e);
      v = other(e, v);
      loop.verts.push_back(v);
      if (v == start || degree.at(v) != 2) break;
      int nextEdge = -1;
      for (int cand : incident[v])
        if (!used[cand]) nextEdge = cand;
      if (nextEdge < 0) break;
      e = nextEdge;
    }
    return loop;
  };

  for (const auto& [v, list] : incident) {
    if (degree.at(v) == 2) continue;
    for (int e : list)
      if (!used[e]) loops.push_back(trace(v, e));
  }
  for (const auto& [v, list] : incident) {
    for (int e : list) {
      if (used[e]) continue;
      // Remaining edges form pure cycles; v is the lowest vertex left.
      loops.push_back(trace(v, e));
    }
  }

  for (OrientedLoop& loop : loops) {
    int agree = 0;
    for (size_t i = 0; i < loop.edges.size(); ++i)
      agree += edges[loop.edges[i]].head == loop.verts[i] ? 1 : -1;
    if (agree < 0) {
      std::reverse(loop.verts.begin(), loop.verts.end());
      std::reverse(loop.edges.begin(), loop.edges.end());
    }
    if (loop.verts.front() == loop.verts.back() &&
        degree.at(loop.verts.front()) == 2) {
      // Cycle: rotate to start at its lowest vertex, keeping direction.
      loop.verts.pop_back();
      const auto it = std::min_element(loop.verts.begin(), loop.verts.end());
      const auto shift = it - loop.verts.begin();
      std::rotate(loop.verts.begin(), it, loop.verts.end());
      std::rotate(loop.edges.begin(), loop.edges.begin() + shift,
                  loop.edges.end());
      loop.verts.push_back(loop.verts.front());
    }
  }
  for (size_t i = 0; i < loops.size(); ++i) {
    loops[i].id = static_cast<int>(i);
    loops[i].kind = ClassifyLoop(loops[i], degree);
  }
  return loops;
}

BoundaryClosure CloseOpenLoopsOnBoundary(const std::vector<OrientedLoop>& loops,
                                         const TriMesh& surface, int first_id) {
  BoundaryClosure out;
  // Boundary vertex -> (boundary loop, position).
  std::map<int, std::pair<int, int>> where;
  for (size_t b = 0; b < surface.boundary_loops.size(); ++b) {
    const std::vector<int>& bl = surface.boundary_loops[b];
    for (size_t i = 0; i < bl.size(); ++i)
      where[bl[i]] = {static_cast<int>(b), static_cast<int>(i)};
  }

  // Chord endpoint -> (loop index, true if the loop starts there).
  std::map<int, std::pair<int, bool>> chordAt;
  for (size_t l = 0; l < loops.size(); ++l) {
    const OrientedLoop& loop = loops[l];
    if (loop.kind != LoopKind::Open) continue;
    const int s = loop.verts.front();
    const int e = loop.verts.back();
    if (!where.contains(s) || !where.contains(e) || chordAt.contains(s) ||
        chordAt.contains(e) || s == e) {
      out.dangling.push_back(loop.id);
      continue;
    }
    chordAt[s] = {static_cast<int>(l), true};
    chordAt[e] = {static_cast<int>(l), false};
  }
  if (chordAt.empty()) return out;

  // Arcs start at marked boundary vertices; each is walked once.
  std::set<int> arcDone;
  for (const auto& [startVertex, chord] : chordAt) {
    if (arcDone.contains(startVertex)) continue;
    OrientedLoop cycle;
    cycle.kind = LoopKind::BoundaryClosed;
    cycle.surface = surface.triangles.empty() ? SurfaceTag::A
                                              : surface.triangles[0].source;
    int v = startVertex;
    cycle.verts.push_back(v);
    while (!arcDone.contains(v)) {
      arcDone.insert(v);
      // Boundary arc from v to the next marked vertex.
      const auto [b, pos] = where.at(v);
      const std::vector<int>& bl = surface.boundary_loops[b];
      int i = pos;
      do {
        i = (i + 1) % static_cast<int>(bl.size());
        cycle.verts.push_back(bl[i]);
      } while (!chordAt.contains(bl[i]));
      // Then across the chord.
      const auto [l, forward] = chordAt.at(bl[i]);
      const OrientedLoop& chordLoop = loops[l];
      std::vector<int> verts = chordLoop.verts;
      std::vector<int> ids = chordLoop.edges;
      if (!forward) {
        std::reverse(verts.begin(), verts.end());
        std::reverse(ids.begin(), ids.end());
      }
      cycle.verts.insert(cycle.verts.end(), verts.begin() + 1, verts.end());
      cycle.edges.insert(cycle.edges.end(), ids.begin(), ids.end());
      v = verts.back();
    }
    if (cycle.verts.back() != cycle.verts.front()) {
      std::ostringstream msg;
      msg << "boundary closure starting at vertex " << startVertex
          << " did not close";
      throw Error(ErrorKind::TopologyError, msg.str());
    }
    cycle.id = first_id + static_cast<int>(out.loops.size());
    out.loops.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace meshbool
