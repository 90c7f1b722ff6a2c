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

#pragma once

#include <functional>
#include <random>
#include <vector>

#include "meshbool/geometry.h"

namespace meshbool::fixtures {

/// Row-major 3x3 rotation.
struct Rotation {
  double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Point3 Apply(Point3 p) const;
  static Rotation AxisAngle(Vec3 axis, double angle);
};

TriMesh Transformed(TriMesh mesh, const Rotation& r, Vec3 t = {});

/// Axis-aligned box, outward winding, 12 triangles.
TriMesh Box(Point3 lo, Point3 hi, SurfaceTag tag = SurfaceTag::A);

/// Subdivided icosahedron on the unit sphere, each vertex then moved to
/// radius(direction) * direction.
TriMesh StarShaped(int levels, const std::function<double(Vec3)>& radius,
                   SurfaceTag tag = SurfaceTag::A);
TriMesh Sphere(double r, int levels, SurfaceTag tag = SurfaceTag::A);

/// Closed prism around the x axis over [-half, half] with `n` sides; one
/// cross-section vertex sits at angle pi/2 (the +z ridge).
TriMesh CylinderX(double radius, double half, int n,
                  SurfaceTag tag = SurfaceTag::A);

TriMesh Torus(double major, double minor, int nu, int nv,
              SurfaceTag tag = SurfaceTag::A);

/// Open sheet: an xy polyline extruded along z over [z0, z1] with
/// `layers` rows of quads.
TriMesh ExtrudedSheet(const std::vector<Point3>& polyline, double z0,
                      double z1, int layers, SurfaceTag tag = SurfaceTag::A);

/// Open square grid at height z over [-half, half]^2.
TriMesh Plane(double half, double z, int n, SurfaceTag tag = SurfaceTag::A);

/// Star-shaped body with three downward lobes.
TriMesh ThreeLobeBlob(int levels, SurfaceTag tag = SurfaceTag::A);

// Reference configurations.
struct Pair {
  TriMesh a, b;
};
Pair CubeCube();
Pair CubeSphere();
Pair CrossedCylinders();
Pair Tori();
Pair VeeWee();
Pair BlobPlane();

/// Random overlapping convex pair (ellipsoids or boxes, rotated).
Pair RandomConvexPair(std::mt19937_64& rng);

}  // namespace meshbool::fixtures
