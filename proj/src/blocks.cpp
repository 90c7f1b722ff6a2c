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

#include "meshbool/blocks.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace meshbool {

std::string_view BlockLabelName(BlockLabel label) {
  switch (label) {
    case BlockLabel::Union: return "union";
    case BlockLabel::Intersection: return "intersection";
    case BlockLabel::AMinusB: return "a_minus_b";
    case BlockLabel::BMinusA: return "b_minus_a";
    case BlockLabel::Unclassified: return "unclassified";
  }
  return "unknown";
}

namespace {

SurfaceTag Other(SurfaceTag t) {
  return t == SurfaceTag::A ? SurfaceTag::B : SurfaceTag::A;
}

}  // namespace

std::vector<SubBlock> AssembleBlocks(const std::vector<SubSurface>& surfs,
                                     const std::vector<OrientedLoop>& loops,
                                     bool both_closed) {
  // (surface, loop, sign) -> sub-surface index.
  std::map<std::tuple<int, int, int>, int> user;
  std::map<int, int> indexOf;
  for (size_t i = 0; i < surfs.size(); ++i) {
    indexOf[surfs[i].id] = static_cast<int>(i);
    for (const LoopUse& use : surfs[i].owners)
      user[{static_cast<int>(surfs[i].source), use.loop, use.sign}] =
          static_cast<int>(i);
  }

  std::vector<SubBlock> blocks;
  std::set<std::pair<int, std::vector<int>>> seen;
  for (Pairing pairing : {Pairing::Opposite, Pairing::Same}) {
    for (size_t start = 0; start < surfs.size(); ++start) {
      if (surfs[start].has_boundary_loop) continue;
      std::set<int> members{static_cast<int>(start)};
      std::deque<int> queue{static_cast<int>(start)};
      bool valid = true;
      while (!queue.empty() && valid) {
        const SubSurface& sf = surfs[queue.front()];
        queue.pop_front();
        for (const LoopUse& use : sf.owners) {
          if (loops[use.loop].kind == LoopKind::BoundaryClosed) {
            valid = false;
            break;
          }
          const int want = pairing == Pairing::Opposite ? -use.sign : use.sign;
          auto it = user.find(
              {static_cast<int>(Other(sf.source)), use.loop, want});
          if (it == user.end()) {
            if (both_closed) {
              std::ostringstream msg;
              msg << "no sub-surface on the other input uses loop "
                  << use.loop << " with sign " << want;
              throw Error(ErrorKind::AssemblyError, msg.str());
            }
            valid = false;
            break;
          }
          if (surfs[it->second].has_boundary_loop) {
            valid = false;
            break;
          }
          if (members.insert(it->second).second) queue.push_back(it->second);
        }
      }
      if (!valid) continue;
      std::vector<int> ids;
      for (int m : members) ids.push_back(surfs[m].id);
      if (!seen.insert({static_cast<int>(pairing), ids}).second) continue;
      SubBlock block;
      block.id = static_cast<int>(blocks.size());
      block.surfaces = std::move(ids);
      block.pairing = pairing;
      blocks.push_back(std::move(block));
    }
  }
  return blocks;
}

std::vector<Pairing> ClassifyNonSubtraction(
    const std::vector<SubBlock>& blocks, const std::vector<SubSurface>& surfs) {
  std::map<int, const SubSurface*> byId;
  for (const SubSurface& sf : surfs) byId[sf.id] = &sf;
  std::vector<Pairing> verdicts;
  for (const SubBlock& block : blocks) {
    std::set<std::tuple<int, int, int>> uses;  // (source, loop, sign)
    for (int id : block.surfaces)
      for (const LoopUse& use : byId.at(id)->owners)
        uses.insert({static_cast<int>(byId.at(id)->source), use.loop,
                     use.sign});
    int opposite = 0, same = 0;
    for (const auto& [src, loop, sign] : uses) {
      if (src != static_cast<int>(SurfaceTag::A)) continue;
      const int b = static_cast<int>(SurfaceTag::B);
      const bool hasOpp = uses.contains({b, loop, -sign});
      const bool hasSame = uses.contains({b, loop, sign});
      if (hasOpp && !hasSame) ++opposite;
      if (hasSame && !hasOpp) ++same;
    }
    if (opposite > 0 && same > 0) {
      std::ostringstream msg;
      msg << "block " << block.id << " mixes union/intersection and "
          << "subtraction loop pairings";
      throw Error(ErrorKind::TopologyError, msg.str());
    }
    if (opposite == 0 && same == 0)
      verdicts.push_back(block.pairing);
    else
      verdicts.push_back(opposite > 0 ? Pairing::Opposite : Pairing::Same);
  }
  return verdicts;
}

namespace {

std::unordered_set<int> BlockVertices(const SubBlock& block,
                                      const std::map<int, const SubSurface*>& byId,
                                      const MergedState& state) {
  std::unordered_set<int> verts;
  for (int id : block.surfaces)
    for (int tri : byId.at(id)->triangles)
      for (int v : state.triangles[tri].v) verts.insert(v);
  return verts;
}

}  // namespace

TriMesh BlockMesh(const SubBlock& block, const std::vector<SubSurface>& surfs,
                  const MergedState& state) {
  TriMesh mesh;
  mesh.vertices = state.vertices;
  const std::set<int> reversed(block.reversed.begin(), block.reversed.end());
  for (const SubSurface& sf : surfs) {
    if (!std::binary_search(block.surfaces.begin(), block.surfaces.end(),
                            sf.id))
      continue;
    for (int tri : sf.triangles) {
      Triangle t = state.triangles[tri];
      if (reversed.contains(sf.id)) std::swap(t.v[1], t.v[2]);
      mesh.triangles.push_back(t);
    }
  }
  return Compact(mesh);
}

UnionPick PickUnion(const std::vector<SubBlock>& blocks,
                    const std::vector<int>& candidates,
                    const std::vector<SubSurface>& surfs,
                    const MergedState& state) {
  if (candidates.empty())
    throw Error(ErrorKind::ClassificationError,
                "no union/intersection candidate block");
  std::map<int, const SubSurface*> byId;
  for (const SubSurface& sf : surfs) byId[sf.id] = &sf;
  const std::array<int, 6> extrema = state.extrema.All();

  std::vector<int> matching;
  for (int c : candidates) {
    const std::unordered_set<int> verts = BlockVertices(blocks[c], byId, state);
    if (std::all_of(extrema.begin(), extrema.end(),
                    [&](int v) { return verts.contains(v); }))
      matching.push_back(c);
  }
  UnionPick pick;
  if (matching.size() == 1) {
    pick.union_block = matching.front();
  } else {
    pick.ambiguous = true;
    double best = -INFINITY;
    for (int c : candidates) {
      TriMesh mesh = BlockMesh(blocks[c], surfs, state);
      const double vol = mesh.closed ? std::abs(SignedVolume(mesh)) : 0.0;
      if (vol > best) {
        best = vol;
        pick.union_block = c;
      }
    }
  }
  for (int c : candidates)
    if (c != pick.union_block) pick.intersection_blocks.push_back(c);
  return pick;
}

void ClassifySubtractions(std::vector<SubBlock>& blocks, const UnionPick& pick,
                          const std::vector<SubSurface>& surfs) {
  std::map<int, const SubSurface*> byId;
  for (const SubSurface& sf : surfs) byId[sf.id] = &sf;
  std::set<int> outer, inner;
  blocks[pick.union_block].label = BlockLabel::Union;
  for (int id : blocks[pick.union_block].surfaces) outer.insert(id);
  for (int b : pick.intersection_blocks) {
    blocks[b].label = BlockLabel::Intersection;
    for (int id : blocks[b].surfaces) inner.insert(id);
  }
  for (SubBlock& block : blocks) {
    if (block.label != BlockLabel::Unclassified) continue;
    if (block.pairing != Pairing::Same) continue;
    std::optional<BlockLabel> label;
    for (int id : block.surfaces) {
      const bool fromA = byId.at(id)->source == SurfaceTag::A;
      if (outer.contains(id)) {
        label = fromA ? BlockLabel::AMinusB : BlockLabel::BMinusA;
        break;
      }
    }
    if (!label) {
      for (int id : block.surfaces) {
        const bool fromA = byId.at(id)->source == SurfaceTag::A;
        if (inner.contains(id)) {
          label = fromA ? BlockLabel::BMinusA : BlockLabel::AMinusB;
          break;
        }
      }
    }
    if (!label) {
      std::ostringstream msg;
      msg << "block " << block.id << " has neither outer nor inner surface";
      throw Error(ErrorKind::ClassificationError, msg.str());
    }
    block.label = *label;
    for (int id : block.surfaces)
      if (inner.contains(id)) block.reversed.push_back(id);
  }
}

BooleanResult CollectResult(std::vector<SubBlock>& blocks,
                            const std::vector<SubSurface>& surfs,
                            const MergedState& state) {
  BooleanResult result;
  for (SubBlock& block : blocks) {
    TriMesh mesh = BlockMesh(block, surfs, state);
    block.closed = IsClosedManifold(mesh);
    switch (block.label) {
      case BlockLabel::Union: result.unions.push_back(std::move(mesh)); break;
      case BlockLabel::Intersection:
        result.intersections.push_back(std::move(mesh));
        break;
      case BlockLabel::AMinusB:
        result.a_minus_b.push_back(std::move(mesh));
        break;
      case BlockLabel::BMinusA:
        result.b_minus_a.push_back(std::move(mesh));
        break;
      case BlockLabel::Unclassified: break;
    }
  }
  return result;
}

void RejectCoincident(const TriMesh& a, const TriMesh& b, double tol) {
  if (a.vertices.size() != b.vertices.size() ||
      a.triangles.size() != b.triangles.size())
    return;
  std::vector<Point3> all = a.vertices;
  all.insert(all.end(), b.vertices.begin(), b.vertices.end());
  const MergeResult merged = MergeVertices(all, tol);
  if (merged.vertices.size() == a.vertices.size())
    throw Error(ErrorKind::CoincidentInput, "input meshes coincide");
}

namespace {

TriMesh Concat(const TriMesh& outer, const TriMesh& cavity) {
  TriMesh mesh = outer;
  const int offset = static_cast<int>(mesh.vertices.size());
  mesh.vertices.insert(mesh.vertices.end(), cavity.vertices.begin(),
                       cavity.vertices.end());
  for (Triangle t : cavity.triangles) {
    for (int& v : t.v) v += offset;
    std::swap(t.v[1], t.v[2]);
    mesh.triangles.push_back(t);
  }
  mesh.Finalize();
  return mesh;
}

// A vertex of `inner` clear of `outer`'s surface, tested by ray parity.
std::optional<bool> Inside(const TriMesh& inner, const TriMesh& outer,
                           double tol) {
  for (const Point3& p : inner.vertices)
    if (DistanceToMesh(outer, p) > tol) return PointInMesh(outer, p);
  return std::nullopt;
}

}  // namespace

BooleanResult TrivialResult(const TriMesh& a, const TriMesh& b, double tol) {
  BooleanResult r;
  if (Inside(a, b, tol).value_or(false)) {
    r.unions = {b};
    r.intersections = {a};
    r.b_minus_a = {Concat(b, a)};
    return r;
  }
  if (Inside(b, a, tol).value_or(false)) {
    r.unions = {a};
    r.intersections = {b};
    r.a_minus_b = {Concat(a, b)};
    return r;
  }
  r.unions = {a, b};
  r.a_minus_b = {a};
  r.b_minus_a = {b};
  return r;
}

}  // namespace meshbool
