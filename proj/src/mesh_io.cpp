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

#include "meshbool/mesh_io.h"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include "meshbool/pipeline.h"

namespace meshbool {

namespace {

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Error ParseFail(const std::string& path, const std::string& where,
                const std::string& what) {
  return Error(ErrorKind::ParseError, path + ":" + where + ": " + what);
}

// Indexes a triangle soup, welding bit-identical coordinates.
TriMesh WeldSoup(const std::vector<std::array<Point3, 3>>& soup) {
  TriMesh mesh;
  std::map<std::array<double, 3>, int> index;
  for (const auto& facet : soup) {
    Triangle t;
    for (int k = 0; k < 3; ++k) {
      const Point3 p = facet[k];
      auto [it, inserted] = index.try_emplace(
          {p.x, p.y, p.z}, static_cast<int>(mesh.vertices.size()));
      if (inserted) mesh.vertices.push_back(p);
      t.v[k] = it->second;
    }
    mesh.triangles.push_back(t);
  }
  return mesh;
}

TriMesh ParseStlBinary(const std::string& data, const std::string& path) {
  if (data.size() < 84) throw ParseFail(path, "0", "truncated STL header");
  uint32_t count;
  std::memcpy(&count, data.data() + 80, 4);
  if (data.size() < 84 + 50ull * count) {
    std::ostringstream where;
    where << data.size();
    throw ParseFail(path, where.str(), "facet count exceeds file size");
  }
  std::vector<std::array<Point3, 3>> soup;
  for (uint32_t f = 0; f < count; ++f) {
    const char* rec = data.data() + 84 + 50ull * f;
    float xyz[12];
    std::memcpy(xyz, rec, sizeof(xyz));
    std::array<Point3, 3> facet;
    for (int k = 0; k < 3; ++k)
      facet[k] = {xyz[3 + 3 * k], xyz[4 + 3 * k], xyz[5 + 3 * k]};
    soup.push_back(facet);
  }
  return WeldSoup(soup);
}

TriMesh ParseStlAscii(const std::string& data, const std::string& path) {
  std::istringstream in(data);
  std::string line;
  int lineNo = 0;
  std::vector<std::array<Point3, 3>> soup;
  std::vector<Point3> pending;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    word = Lower(word);
    if (word == "vertex") {
      Point3 p;
      if (!(ls >> p.x >> p.y >> p.z))
        throw ParseFail(path, std::to_string(lineNo), "bad vertex");
      pending.push_back(p);
    } else if (word == "endloop") {
      if (pending.size() != 3)
        throw ParseFail(path, std::to_string(lineNo),
                        "facet does not have 3 vertices");
      soup.push_back({pending[0], pending[1], pending[2]});
      pending.clear();
    } else if (word != "solid" && word != "facet" && word != "outer" &&
               word != "endfacet" && word != "endsolid") {
      throw ParseFail(path, std::to_string(lineNo), "unexpected '" + word + "'");
    }
  }
  return WeldSoup(soup);
}

TriMesh ParseObj(const std::string& data, const std::string& path,
                 std::vector<std::string>* warnings) {
  std::istringstream in(data);
  std::string line;
  int lineNo = 0;
  TriMesh mesh;
  bool warnedAttr = false, warnedPoly = false;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "v") {
      Point3 p;
      if (!(ls >> p.x >> p.y >> p.z))
        throw ParseFail(path, std::to_string(lineNo), "bad vertex");
      mesh.vertices.push_back(p);
    } else if (word == "f") {
      std::vector<int> face;
      std::string tok;
      while (ls >> tok) {
        int idx;
        try {
          idx = std::stoi(tok.substr(0, tok.find('/')));
        } catch (const std::exception&) {
          throw ParseFail(path, std::to_string(lineNo), "bad index '" + tok + "'");
        }
        const int n = static_cast<int>(mesh.vertices.size());
        const int resolved = idx < 0 ? n + idx : idx - 1;
        if (idx == 0 || resolved < 0 || resolved >= n)
          throw ParseFail(path, std::to_string(lineNo),
                          "index " + tok + " out of range");
        face.push_back(resolved);
      }
      if (face.size() < 3)
        throw ParseFail(path, std::to_string(lineNo), "face with < 3 vertices");
      if (face.size() > 3 && warnings && !warnedPoly) {
        warnings->push_back(path + ": non-triangular faces fan-triangulated");
        warnedPoly = true;
      }
      for (size_t k = 1; k + 1 < face.size(); ++k)
        mesh.triangles.push_back({{face[0], face[k], face[k + 1]}});
    } else if (word == "vt" || word == "vn") {
      if (warnings && !warnedAttr) {
        warnings->push_back(path + ": texture/normal attributes ignored");
        warnedAttr = true;
      }
    }
  }
  return mesh;
}

}  // namespace

MeshFile MeshFile::ForWrite(const std::string& path) {
  const std::string lower = Lower(path);
  if (EndsWith(lower, ".obj")) return {MeshFormat::Obj, path};
  if (EndsWith(lower, ".stl")) return {MeshFormat::StlBinary, path};
  throw Error(ErrorKind::IoError, "unknown mesh extension: " + path);
}

MeshFile MeshFile::ForRead(const std::string& path) {
  const std::string lower = Lower(path);
  if (EndsWith(lower, ".obj")) return {MeshFormat::Obj, path};
  if (!EndsWith(lower, ".stl"))
    throw Error(ErrorKind::IoError, "unknown mesh extension: " + path);
  const std::string data = ReadAll(path);
  bool binary = true;
  if (data.size() >= 5 && Lower(data.substr(0, 5)) == "solid") {
    binary = false;
    if (data.size() >= 84) {
      uint32_t count;
      std::memcpy(&count, data.data() + 80, 4);
      binary = data.size() == 84 + 50ull * count;
    }
  }
  return {binary ? MeshFormat::StlBinary : MeshFormat::StlAscii, path};
}

TriMesh LoadMesh(const MeshFile& file, std::vector<std::string>* warnings) {
  const std::string data = ReadAll(file.path);
  TriMesh mesh;
  switch (file.format) {
    case MeshFormat::StlBinary: mesh = ParseStlBinary(data, file.path); break;
    case MeshFormat::StlAscii: mesh = ParseStlAscii(data, file.path); break;
    case MeshFormat::Obj: mesh = ParseObj(data, file.path, warnings); break;
  }
  if (mesh.triangles.empty())
    throw Error(ErrorKind::EmptyInput, file.path + " has no triangles");
  for (const Point3& p : mesh.vertices)
    if (!IsFinite(p))
      throw Error(ErrorKind::ParseError, file.path + " has non-finite coordinates");
  mesh.Finalize(SurfaceTag::A);
  return mesh;
}

TriMesh LoadMesh(const std::string& path, std::vector<std::string>* warnings) {
  return LoadMesh(MeshFile::ForRead(path), warnings);
}

void SaveMesh(const TriMesh& mesh, const MeshFile& file,
              std::vector<std::string>* warnings) {
  if (file.format != MeshFormat::Obj && !mesh.closed && warnings)
    warnings->push_back(file.path + ": writing an open surface to STL");
  std::FILE* out = std::fopen(file.path.c_str(), "wb");
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + file.path);
  auto normalOf = [&](const Triangle& t) {
    return Normalized(TriangleNormal(mesh.vertices[t.v[0]],
                                     mesh.vertices[t.v[1]],
                                     mesh.vertices[t.v[2]]));
  };
  bool ok = true;
  switch (file.format) {
    case MeshFormat::Obj:
      for (const Point3& p : mesh.vertices)
        std::fprintf(out, "v %.17g %.17g %.17g\n", p.x, p.y, p.z);
      for (const Triangle& t : mesh.triangles)
        std::fprintf(out, "f %d %d %d\n", t.v[0] + 1, t.v[1] + 1, t.v[2] + 1);
      break;
    case MeshFormat::StlAscii:
      std::fprintf(out, "solid meshbool\n");
      for (const Triangle& t : mesh.triangles) {
        const Vec3 n = normalOf(t);
        std::fprintf(out, "facet normal %.17g %.17g %.17g\nouter loop\n", n.x,
                     n.y, n.z);
        for (int v : t.v)
          std::fprintf(out, "vertex %.17g %.17g %.17g\n", mesh.vertices[v].x,
                       mesh.vertices[v].y, mesh.vertices[v].z);
        std::fprintf(out, "endloop\nendfacet\n");
      }
      std::fprintf(out, "endsolid meshbool\n");
      break;
    case MeshFormat::StlBinary: {
      char header[80] = "meshbool binary STL";
      ok = std::fwrite(header, 1, 80, out) == 80;
      const uint32_t count = static_cast<uint32_t>(mesh.triangles.size());
      ok = ok && std::fwrite(&count, 4, 1, out) == 1;
      for (const Triangle& t : mesh.triangles) {
        const Vec3 n = normalOf(t);
        float rec[12] = {static_cast<float>(n.x), static_cast<float>(n.y),
                         static_cast<float>(n.z)};
        for (int k = 0; k < 3; ++k)
          for (int c = 0; c < 3; ++c)
            rec[3 + 3 * k + c] = static_cast<float>(mesh.vertices[t.v[k]][c]);
        const uint16_t attr = 0;
        ok = ok && std::fwrite(rec, sizeof(rec), 1, out) == 1 &&
             std::fwrite(&attr, 2, 1, out) == 1;
      }
      break;
    }
  }
  if (std::fclose(out) != 0 || !ok)
    throw Error(ErrorKind::IoError, "failed writing " + file.path);
}

void SaveMesh(const TriMesh& mesh, const std::string& path,
              std::vector<std::string>* warnings) {
  SaveMesh(mesh, MeshFile::ForWrite(path), warnings);
}

nlohmann::json DebugJson(const PipelineState& state) {
  using nlohmann::json;
  json doc;
  doc["version"] = kDebugSchemaVersion;
  json verts = json::array();
  for (const Point3& p : state.merged.vertices) verts.push_back({p.x, p.y, p.z});
  doc["vertices"] = verts;
  json edges = json::array();
  for (const DirectedEdge& e : state.merged.edges) {
    const auto owner = e.owners.empty() ? std::pair{-1, -1} : e.owners.front();
    edges.push_back({e.head, e.tail, owner.first, owner.second});
  }
  doc["edges"] = edges;
  json loops = json::array();
  for (const OrientedLoop& l : state.loops)
    loops.push_back({{"verts", l.verts},
                     {"kind", std::string(LoopKindName(l.kind))},
                     {"closed", l.IsClosed()}});
  doc["loops"] = loops;
  json surfs = json::array();
  for (const SubSurface& s : state.surfaces) {
    json owners = json::array();
    for (const LoopUse& u : s.owners)
      owners.push_back({{"loop", u.loop}, {"sign", u.sign}});
    surfs.push_back({{"tris", s.triangles},
                     {"owners", owners},
                     {"public", s.is_public},
                     {"source", s.source == SurfaceTag::A ? "A" : "B"}});
  }
  doc["surfaces"] = surfs;
  json blocks = json::array();
  for (const SubBlock& b : state.blocks)
    blocks.push_back({{"surfaces", b.surfaces},
                      {"label", std::string(BlockLabelName(b.label))}});
  doc["blocks"] = blocks;
  return doc;
}

void DumpDebug(const PipelineState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << DebugJson(state).dump(1) << '\n';
  if (!out) throw Error(ErrorKind::IoError, "failed writing " + path);
}

}  // namespace meshbool
