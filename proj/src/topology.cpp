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

#include "meshbool/topology.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace meshbool {

namespace {

struct CellHash {
  size_t operator()(const std::array<int64_t, 3>& c) const {
    uint64_t h = 1469598103934665603ull;
    for (int64_t v : c) {
      h ^= static_cast<uint64_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

MergeResult MergeVertices(std::span<const Point3> raw, double tol) {
  if (!(tol > 0))
    throw Error(ErrorKind::GeometryError, "merge tolerance must be positive");
  MergeResult out;
  out.remap.resize(raw.size());
  std::unordered_map<std::array<int64_t, 3>, std::vector<int>, CellHash> grid;
  auto cellOf = [&](Point3 p) {
    return std::array<int64_t, 3>{static_cast<int64_t>(std::floor(p.x / tol)),
                                  static_cast<int64_t>(std::floor(p.y / tol)),
                                  static_cast<int64_t>(std::floor(p.z / tol))};
  };
  for (size_t i = 0; i < raw.size(); ++i) {
    const Point3 p = raw[i];
    const auto cell = cellOf(p);
    int found = -1;
    for (int dx = -1; dx <= 1 && found < 0; ++dx) {
      for (int dy = -1; dy <= 1 && found < 0; ++dy) {
        for (int dz = -1; dz <= 1 && found < 0; ++dz) {
          auto it = grid.find({cell[0] + dx, cell[1] + dy, cell[2] + dz});
          if (it == grid.end()) continue;
          for (int v : it->second) {
            if (Distance(out.vertices[v], p) <= tol) {
              found = v;
              break;
            }
          }
        }
      }
    }
    if (found < 0) {
      found = static_cast<int>(out.vertices.size());
      out.vertices.push_back(p);
      grid[cell].push_back(found);
    }
    out.remap[i] = found;
  }
  return out;
}

Extrema ComputeExtrema(std::span<const Point3> vertices) {
  Extrema e;
  for (int axis = 0; axis < 3; ++axis) {
    for (size_t i = 0; i < vertices.size(); ++i) {
      const int idx = static_cast<int>(i);
      const double c = vertices[i][axis];
      if (e.min_index[axis] < 0 || c < vertices[e.min_index[axis]][axis])
        e.min_index[axis] = idx;
      if (e.max_index[axis] < 0 || c > vertices[e.max_index[axis]][axis])
        e.max_index[axis] = idx;
    }
  }
  return e;
}

namespace {

bool Repeated(const Triangle& t) {
  return t.v[0] == t.v[1] || t.v[1] == t.v[2] || t.v[2] == t.v[0];
}

// Index (0..2) of the corner lying between the other two when the
// triangle's height is below tol, else -1.
int SliverMiddle(const MergedState& s, const Triangle& t, double tol) {
  const Point3 p[3] = {s.vertices[t.v[0]], s.vertices[t.v[1]],
                       s.vertices[t.v[2]]};
  int longest = 0;
  double best = -1;
  for (int k = 0; k < 3; ++k) {
    const double len = Distance(p[k], p[(k + 1) % 3]);
    if (len > best) {
      best = len;
      longest = k;
    }
  }
  if (!(best > 0)) return -1;
  const double height = 2 * TriangleArea(p[0], p[1], p[2]) / best;
  return height < tol ? (longest + 2) % 3 : -1;
}

}  // namespace

MergedState ClearTopology(MergedState state, double tol, ClearReport* report) {
  ClearReport local;
  for (int pass = 0; pass < 10; ++pass) {
    local.passes = pass + 1;
    bool changed = false;

    // Repeated indices.
    std::vector<char> keep(state.triangles.size(), 1);
    for (size_t i = 0; i < state.triangles.size(); ++i) {
      if (Repeated(state.triangles[i])) {
        keep[i] = 0;
        ++local.removed_repeated;
        changed = true;
      }
    }

    // Children facing against their parent are flipped.
    for (size_t i = 0; i < state.triangles.size(); ++i) {
      if (!keep[i]) continue;
      Triangle& t = state.triangles[i];
      const Vec3 n = TriangleNormal(state.vertices[t.v[0]],
                                    state.vertices[t.v[1]],
                                    state.vertices[t.v[2]]);
      if (Dot(n, state.parent_normal[i]) < 0 &&
          SliverMiddle(state, t, tol) < 0) {
        std::swap(t.v[1], t.v[2]);
        ++local.reversed;
        changed = true;
      }
    }

    // Slivers: split the neighbor across the long edge at the middle
    // vertex, then drop the sliver.
    std::unordered_map<uint64_t, int> owner[2];
    for (size_t i = 0; i < state.triangles.size(); ++i) {
      if (!keep[i]) continue;
      const Triangle& t = state.triangles[i];
      for (int k = 0; k < 3; ++k)
        owner[static_cast<int>(t.source)][EdgeKey(t.v[k], t.v[(k + 1) % 3])] =
            static_cast<int>(i);
    }
    std::vector<Triangle> added;
    std::vector<int> addedParent;
    for (size_t i = 0; i < state.triangles.size(); ++i) {
      if (!keep[i]) continue;
      const Triangle t = state.triangles[i];
      const int mid = SliverMiddle(state, t, tol);
      if (mid < 0) continue;
      const int m = t.v[mid];
      const int x = t.v[(mid + 1) % 3];
      const int y = t.v[(mid + 2) % 3];
      // The long edge is x->y; its neighbor carries y->x.
      auto& edgeOwner = owner[static_cast<int>(t.source)];
      auto it = edgeOwner.find(EdgeKey(y, x));
      if (it != edgeOwner.end() && !keep[it->second]) continue;  // next pass
      keep[i] = 0;
      ++local.removed_slivers;
      changed = true;
      if (it == edgeOwner.end()) continue;
      const int nb = it->second;
      Triangle n = state.triangles[nb];
      int k = 0;
      while (!(n.v[k] == y && n.v[(k + 1) % 3] == x)) ++k;
      const int z = n.v[(k + 2) % 3];
      keep[nb] = 0;
      Triangle t1 = n, t2 = n;
      t1.v = {y, m, z};
      t2.v = {m, x, z};
      added.push_back(t1);
      added.push_back(t2);
      addedParent.push_back(nb);
      addedParent.push_back(nb);
    }

    if (!changed) break;
    MergedState next;
    next.vertices = std::move(state.vertices);
    next.edges = std::move(state.edges);
    next.remap = std::move(state.remap);
    for (size_t i = 0; i < state.triangles.size(); ++i) {
      if (!keep[i]) continue;
      next.triangles.push_back(state.triangles[i]);
      next.parent.push_back(state.parent[i]);
      next.parent_normal.push_back(state.parent_normal[i]);
    }
    for (size_t i = 0; i < added.size(); ++i) {
      next.triangles.push_back(added[i]);
      next.parent.push_back(state.parent[addedParent[i]]);
      next.parent_normal.push_back(state.parent_normal[addedParent[i]]);
    }
    state = std::move(next);
    if (pass == 9) {
      std::ostringstream msg;
      msg << "topology clearing did not converge in 10 passes";
      throw Error(ErrorKind::TopologyError, msg.str());
    }
  }

  // Duplicate directed edges that survived sliver removal are fatal.
  std::unordered_map<uint64_t, int> seen[2];
  for (size_t i = 0; i < state.triangles.size(); ++i) {
    const Triangle& t = state.triangles[i];
    state.triangles[i].id = static_cast<int>(i);
    for (int k = 0; k < 3; ++k) {
      auto [it, inserted] = seen[static_cast<int>(t.source)].try_emplace(
          EdgeKey(t.v[k], t.v[(k + 1) % 3]), static_cast<int>(i));
      if (!inserted) {
        std::ostringstream msg;
        msg << "edge " << t.v[k] << "->" << t.v[(k + 1) % 3]
            << " used by triangles " << it->second << " and " << i;
        throw Error(ErrorKind::TopologyError, msg.str());
      }
    }
  }
  state.extrema = ComputeExtrema(state.vertices);
  if (report) *report = local;
  return state;
}

TriMesh SurfaceMesh(const MergedState& state, SurfaceTag tag) {
  TriMesh mesh;
  mesh.vertices = state.vertices;
  for (const Triangle& t : state.triangles)
    if (t.source == tag) mesh.triangles.push_back(t);
  // Finalize renumbers ids; keep global ids instead.
  std::vector<int> ids;
  for (const Triangle& t : mesh.triangles) ids.push_back(t.id);
  mesh.Finalize(tag);
  for (size_t i = 0; i < ids.size(); ++i) mesh.triangles[i].id = ids[i];
  return mesh;
}

}  // namespace meshbool
