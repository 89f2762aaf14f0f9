#include "mlskel/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

namespace mlskel {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

void add_quad(TriangleMesh& m, Vertex a, Vertex b, Vertex c, Vertex d, bool flip = false) {
  if (flip) {
    m.triangles.push_back({a, b, d});
    m.triangles.push_back({b, c, d});
  } else {
    m.triangles.push_back({a, b, c});
    m.triangles.push_back({a, c, d});
  }
}

}  // namespace

TriangleMesh uv_sphere(int rings, int segments, double radius) {
  if (rings < 1 || segments < 3) throw ContractViolation("uv_sphere needs rings >= 1 and segments >= 3");
  TriangleMesh m;
  const double pi = std::numbers::pi;
  m.vertices.emplace_back(0, 0, radius);
  for (int i = 1; i <= rings; ++i) {
    const double theta = pi * i / (rings + 1);
    for (int j = 0; j < segments; ++j) {
      const double phi = 2 * pi * j / segments;
      m.vertices.emplace_back(radius * std::sin(theta) * std::cos(phi), radius * std::sin(theta) * std::sin(phi),
                              radius * std::cos(theta));
    }
  }
  m.vertices.emplace_back(0, 0, -radius);
  const auto south = static_cast<Vertex>(m.vertices.size() - 1);
  auto at = [&](int ring, int j) { return static_cast<Vertex>(1 + (ring - 1) * segments + (j % segments)); };
  for (int j = 0; j < segments; ++j) m.triangles.push_back({0, at(1, j), at(1, j + 1)});
  for (int i = 1; i < rings; ++i) {
    for (int j = 0; j < segments; ++j) add_quad(m, at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
  }
  for (int j = 0; j < segments; ++j) m.triangles.push_back({south, at(rings, j + 1), at(rings, j)});
  return m;
}

TriangleMesh torus(int major_segments, int minor_segments, double major_radius, double minor_radius) {
  if (major_segments < 3 || minor_segments < 3) throw ContractViolation("torus needs at least 3 segments per direction");
  TriangleMesh m;
  const double pi = std::numbers::pi;
  for (int i = 0; i < major_segments; ++i) {
    const double u = 2 * pi * i / major_segments;
    for (int j = 0; j < minor_segments; ++j) {
      const double v = 2 * pi * j / minor_segments;
      const double ring = major_radius + minor_radius * std::cos(v);
      m.vertices.emplace_back(ring * std::cos(u), ring * std::sin(u), minor_radius * std::sin(v));
    }
  }
  auto at = [&](int i, int j) {
    return static_cast<Vertex>((i % major_segments) * minor_segments + (j % minor_segments));
  };
  for (int i = 0; i < major_segments; ++i) {
    for (int j = 0; j < minor_segments; ++j) add_quad(m, at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
  }
  return m;
}

TriangleMesh holed_block(int genus, int scale) {
  if (genus < 0 || scale < 1) throw ContractViolation("holed_block needs genus >= 0 and scale >= 1");
  const int nx = (2 * genus + 1) * scale;
  const int ny = genus > 0 ? 3 * scale : scale;
  const int nz = scale;
  auto solid = [&](int x, int y, int z) {
    if (x < 0 || y < 0 || z < 0 || x >= nx || y >= ny || z >= nz) return false;
    const bool hole_column = (x / scale) % 2 == 1;
    const bool hole_row = genus > 0 && y / scale == 1;
    return !(hole_column && hole_row);
  };
  TriangleMesh m;
  std::map<std::array<int, 3>, Vertex> ids;
  auto corner = [&](int x, int y, int z) {
    auto [it, inserted] = ids.emplace(std::array<int, 3>{x, y, z}, static_cast<Vertex>(m.vertices.size()));
    if (inserted) m.vertices.emplace_back(x, y, z);
    return it->second;
  };
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      for (int z = 0; z < nz; ++z) {
        if (!solid(x, y, z)) continue;
        // outward-facing unit squares, counter-clockwise seen from outside
        if (!solid(x - 1, y, z))
          add_quad(m, corner(x, y, z), corner(x, y, z + 1), corner(x, y + 1, z + 1), corner(x, y + 1, z));
        if (!solid(x + 1, y, z))
          add_quad(m, corner(x + 1, y, z), corner(x + 1, y + 1, z), corner(x + 1, y + 1, z + 1),
                   corner(x + 1, y, z + 1));
        if (!solid(x, y - 1, z))
          add_quad(m, corner(x, y, z), corner(x + 1, y, z), corner(x + 1, y, z + 1), corner(x, y, z + 1));
        if (!solid(x, y + 1, z))
          add_quad(m, corner(x, y + 1, z), corner(x, y + 1, z + 1), corner(x + 1, y + 1, z + 1),
                   corner(x + 1, y + 1, z));
        if (!solid(x, y, z - 1))
          add_quad(m, corner(x, y, z), corner(x, y + 1, z), corner(x + 1, y + 1, z), corner(x + 1, y, z));
        if (!solid(x, y, z + 1))
          add_quad(m, corner(x, y, z + 1), corner(x + 1, y, z + 1), corner(x + 1, y + 1, z + 1),
                   corner(x, y + 1, z + 1));
      }
    }
  }
  return m;
}

TriangleMesh subdivide(const TriangleMesh& mesh) {
  TriangleMesh out;
  out.vertices = mesh.vertices;
  std::map<std::pair<Vertex, Vertex>, Vertex> midpoint;
  auto mid = [&](Vertex a, Vertex b) {
    const auto key = std::minmax(a, b);
    auto [it, inserted] = midpoint.emplace(key, static_cast<Vertex>(out.vertices.size()));
    if (inserted) out.vertices.push_back(0.5 * (mesh.vertices[a] + mesh.vertices[b]));
    return it->second;
  };
  out.triangles.reserve(mesh.triangles.size() * 4);
  for (const auto& t : mesh.triangles) {
    const Vertex ab = mid(t[0], t[1]);
    const Vertex bc = mid(t[1], t[2]);
    const Vertex ca = mid(t[2], t[0]);
    out.triangles.push_back({t[0], ab, ca});
    out.triangles.push_back({ab, t[1], bc});
    out.triangles.push_back({ca, bc, t[2]});
    out.triangles.push_back({ab, bc, ca});
  }
  return out;
}

TriangleMesh disjoint_union(const TriangleMesh& a, const TriangleMesh& b) {
  TriangleMesh out = a;
  const auto offset = static_cast<Vertex>(a.vertices.size());
  out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
  for (const auto& t : b.triangles) out.triangles.push_back({t[0] + offset, t[1] + offset, t[2] + offset});
  return out;
}

TriangleMesh jitter(const TriangleMesh& mesh, double amount, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TriangleMesh out = mesh;
  for (auto& p : out.vertices) {
    for (int k = 0; k < 3; ++k) p[k] += uniform(rng, -amount, amount);
  }
  return out;
}

TriangleMesh random_torus(std::uint64_t seed, int major_segments, int minor_segments) {
  std::mt19937_64 rng(seed);
  const double major = uniform(rng, 1.5, 3.0);
  const double minor = uniform(rng, 0.4, 0.9);
  TriangleMesh m;
  const double pi = std::numbers::pi;
  for (int i = 0; i < major_segments; ++i) {
    const double u = 2 * pi * i / major_segments;
    const double bulge = 1.0 + 0.3 * std::sin(3 * u + uniform(rng, 0, 0.5));
    for (int j = 0; j < minor_segments; ++j) {
      const double v = 2 * pi * j / minor_segments;
      const double r = minor * bulge * uniform(rng, 0.9, 1.1);
      const double ring = major + r * std::cos(v);
      m.vertices.emplace_back(ring * std::cos(u), ring * std::sin(u), r * std::sin(v));
    }
  }
  auto at = [&](int i, int j) {
    return static_cast<Vertex>((i % major_segments) * minor_segments + (j % minor_segments));
  };
  for (int i = 0; i < major_segments; ++i) {
    for (int j = 0; j < minor_segments; ++j) {
      add_quad(m, at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1), (rng() & 1) != 0);
    }
  }
  return m;
}

int euler_genus(const TriangleMesh& mesh) {
  const auto n = mesh.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<std::pair<Vertex, Vertex>> edges;
  std::vector<char> used(n, 0);
  for (const auto& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      edges.insert(std::minmax(t[k], t[(k + 1) % 3]));
      used[t[k]] = 1;
      parent[find(t[k])] = find(t[(k + 1) % 3]);
    }
  }
  long long vertices = 0;
  long long components = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!used[v]) continue;
    ++vertices;
    if (find(v) == v) ++components;
  }
  const long long chi = vertices - static_cast<long long>(edges.size()) + static_cast<long long>(mesh.triangles.size());
  return static_cast<int>((2 * components - chi) / 2);
}

std::vector<Cell> random_voxel_blob(int cells, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int radius = 1 + static_cast<int>(rng() % 2);
  std::set<Cell> occupied;
  Cell at{0, 0, 0};
  int axis = 0;
  int sign = 1;
  while (static_cast<int>(occupied.size()) < cells) {
    for (int dx = -radius; dx <= radius; ++dx) {
      for (int dy = -radius; dy <= radius; ++dy) {
        for (int dz = -radius; dz <= radius; ++dz) {
          if (dx * dx + dy * dy + dz * dz <= radius * radius) occupied.insert({at[0] + dx, at[1] + dy, at[2] + dz});
        }
      }
    }
    if (rng() % 4 == 0) {
      axis = static_cast<int>(rng() % 3);
      sign = (rng() & 1) ? 1 : -1;
    }
    at[axis] += sign;
  }
  return {occupied.begin(), occupied.end()};
}

}  // namespace mlskel
