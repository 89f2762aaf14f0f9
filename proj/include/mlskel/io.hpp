#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "mlskel/graph.hpp"

namespace mlskel {

enum class MeshFormat { ply, obj };
enum class VoxelConnectivity { six = 6, twenty_six = 26 };

struct TriangleMesh {
  std::vector<Point> vertices;
  std::vector<std::array<Vertex, 3>> triangles;
};

/// Polygons with more than three corners are fan-triangulated from their first corner.
TriangleMesh read_mesh(const std::filesystem::path& path, MeshFormat format);
TriangleMesh read_ply_mesh(std::istream& in);
TriangleMesh read_obj_mesh(std::istream& in);

void write_ply_mesh(std::ostream& out, const TriangleMesh& mesh);
void write_obj_mesh(std::ostream& out, const TriangleMesh& mesh);

/// 1-skeleton of the mesh with unit capacities.
EmbeddedGraph mesh_graph(const TriangleMesh& mesh);

EmbeddedGraph load_mesh(const std::filesystem::path& path, MeshFormat format);

/// ASCII lines "x y z" of occupied integer cells. Blank lines and '#' comments are skipped.
EmbeddedGraph load_voxels(const std::filesystem::path& path,
                          VoxelConnectivity connectivity = VoxelConnectivity::twenty_six);
EmbeddedGraph read_voxels(std::istream& in, VoxelConnectivity connectivity = VoxelConnectivity::twenty_six);
/// One vertex per distinct cell at its integer coordinates, edges between neighbouring cells.
EmbeddedGraph voxel_graph(std::span<const std::array<long long, 3>> cells,
                          VoxelConnectivity connectivity = VoxelConnectivity::twenty_six);

// Native interchange format:
//   graph <n> <m>
//   x y z capacity      (n lines)
//   u v                 (m lines)
EmbeddedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const EmbeddedGraph& g);
EmbeddedGraph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const EmbeddedGraph& g);

/// Curve complexes: PLY with vertex and edge elements, or OBJ with `l` records.
void write_polyline_ply(std::ostream& out, const EmbeddedGraph& g);
void write_polyline_obj(std::ostream& out, const EmbeddedGraph& g);
EmbeddedGraph read_polyline_ply(std::istream& in);
EmbeddedGraph read_polyline_obj(std::istream& in);
EmbeddedGraph load_polyline(const std::filesystem::path& path);

enum class InputKind { ply, obj, voxels, graph, unknown };

/// Chosen by extension: .ply, .obj, .vox/.voxels, .graph.
InputKind input_kind(const std::filesystem::path& path);

/// Loads any supported input into a graph. Throws ParseError for unknown extensions.
EmbeddedGraph load_input(const std::filesystem::path& path,
                         VoxelConnectivity connectivity = VoxelConnectivity::twenty_six);

}  // namespace mlskel
