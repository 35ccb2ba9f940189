#pragma once

// Quad-mesh sampling of surface patches and Wavefront OBJ export.

#include <array>
#include <string>
#include <vector>

#include "pi3geo/core.hpp"
#include "pi3geo/surface.hpp"

namespace pi3 {

/// Grid-sampled surface with quad connectivity and per-vertex curvatures.
struct Mesh {
  int nu = 0, nv = 0;                 // grid dimensions (vertices per side)
  std::vector<Vec3> vertices;         // row-major: index = iu * nv + iv
  std::vector<std::array<int, 4>> quads;  // zero-based vertex indices
  std::vector<double> gauss;          // K at each vertex
  std::vector<double> mean;           // H at each vertex
};

/// Samples the surface on an nu x nv parameter grid (endpoints included) and
/// builds quad connectivity. Curvatures are evaluated with the general
/// formulas at every vertex.
Mesh sample_surface_mesh(const SurfaceJet& sj, int nu, int nv);

/// Serializes the mesh as OBJ text: all "v" lines first, then quad "f" lines
/// with 1-based indices; shortest round-trip number formatting.
std::string to_obj(const Mesh& mesh);

}  // namespace pi3
