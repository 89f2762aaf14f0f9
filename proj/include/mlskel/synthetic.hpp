#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mlskel/io.hpp"

namespace mlskel {

/// Closed UV sphere: two poles plus `rings` latitude rings of `segments` vertices.
TriangleMesh uv_sphere(int rings, int segments, double radius = 1.0);

/// Closed torus around the z axis.
TriangleMesh torus(int major_segments, int minor_segments, double major_radius = 2.0, double minor_radius = 0.6);

/**
 * Closed genus-`genus` surface: the boundary of a voxel slab with `genus`
 * square holes through it. Every voxel edge is `scale` cells long on the
 * unit lattice, so resolution grows with `scale`.
 */
TriangleMesh holed_block(int genus, int scale);

/// Splits every triangle into four at its edge midpoints.
TriangleMesh subdivide(const TriangleMesh& mesh);

/// Disjoint union; vertices of `b` are appended after those of `a`.
TriangleMesh disjoint_union(const TriangleMesh& a, const TriangleMesh& b);

/// Moves every vertex by a uniform random offset of at most `amount` per axis.
TriangleMesh jitter(const TriangleMesh& mesh, double amount, std::uint64_t seed);

/// Torus with randomly chosen quad diagonals, random radii and vertex noise.
TriangleMesh random_torus(std::uint64_t seed, int major_segments, int minor_segments);

/// Genus from the Euler characteristic of a closed orientable mesh, summed over components.
int euler_genus(const TriangleMesh& mesh);

using Cell = std::array<long long, 3>;

/// Connected voxel set swept by a ball of radius 1 or 2 along a random lattice walk.
std::vector<Cell> random_voxel_blob(int cells, std::uint64_t seed);

}  // namespace mlskel
