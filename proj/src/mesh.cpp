#include "pi3geo/mesh.hpp"

#include <array>

#include "pi3geo/format.hpp"
#include "pi3geo/jet.hpp"

namespace pi3 {

Mesh sample_surface_mesh(const SurfaceJet& sj, int nu, int nv) {
  if (nu < 2 || nv < 2)
    throw Error(Errc::invalid_params, "mesh grid must be at least 2x2");
  Mesh m;
  m.nu = nu;
  m.nv = nv;
  m.vertices.reserve(static_cast<std::size_t>(nu) * nv);
  m.gauss.reserve(m.vertices.capacity());
  m.mean.reserve(m.vertices.capacity());
  const std::vector<double> us = linspace(sj.param_domain().u, nu);
  const std::vector<double> vs = linspace(sj.param_domain().v, nv);
  for (double u : us) {
    for (double v : vs) {
      m.vertices.push_back(sj(u, v).r);
      m.gauss.push_back(gauss_curvature(sj, u, v));
      m.mean.push_back(mean_curvature(sj, u, v));
    }
  }
  m.quads.reserve(static_cast<std::size_t>(nu - 1) * (nv - 1));
  for (int iu = 0; iu + 1 < nu; ++iu)
    for (int iv = 0; iv + 1 < nv; ++iv) {
      const int a = iu * nv + iv;
      m.quads.push_back({a, a + nv, a + nv + 1, a + 1});
    }
  return m;
}

std::string to_obj(const Mesh& mesh) {
  std::string out;
  out.reserve(mesh.vertices.size() * 40 + mesh.quads.size() * 24);
  for (const Vec3& p : mesh.vertices) {
    out += "v ";
    out += fmt_shortest(p.x());
    out += ' ';
    out += fmt_shortest(p.y());
    out += ' ';
    out += fmt_shortest(p.z());
    out += '\n';
  }
  for (const auto& q : mesh.quads) {
    out += "f ";
    for (int i = 0; i < 4; ++i) {
      out += std::to_string(q[static_cast<std::size_t>(i)] + 1);
      out += i == 3 ? '\n' : ' ';
    }
  }
  return out;
}

}  // namespace pi3
