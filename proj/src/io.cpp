#include "mlskel/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace mlskel {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail_at_line(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

template <class T>
bool parse_number(std::string_view token, T& value) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

template <class T>
T number_at(std::string_view token, std::size_t line) {
  T value{};
  if (!parse_number(token, value)) fail_at_line(line, "expected a number, got '" + std::string(token) + "'");
  return value;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

// ---------------------------------------------------------------- PLY

struct PlyProperty {
  std::string name;
  std::string type;
  bool is_list = false;
  std::string count_type;
};

struct PlyElement {
  std::string name;
  std::size_t count = 0;
  std::vector<PlyProperty> properties;
};

struct PlyColumn {
  std::vector<double> scalars;
  std::vector<std::vector<double>> lists;
};

struct PlyData {
  std::vector<PlyElement> elements;
  std::vector<std::vector<PlyColumn>> columns;  // [element][property]

  int element_index(std::string_view name) const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i].name == name) return static_cast<int>(i);
    }
    return -1;
  }
  int property_index(int element, std::string_view name) const {
    const auto& props = elements[element].properties;
    for (std::size_t i = 0; i < props.size(); ++i) {
      if (props[i].name == name) return static_cast<int>(i);
    }
    return -1;
  }
};

int ply_type_size(const std::string& type) {
  if (type == "char" || type == "uchar" || type == "int8" || type == "uint8") return 1;
  if (type == "short" || type == "ushort" || type == "int16" || type == "uint16") return 2;
  if (type == "int" || type == "uint" || type == "int32" || type == "uint32" || type == "float" ||
      type == "float32")
    return 4;
  if (type == "double" || type == "float64") return 8;
  return 0;
}

template <class T>
double load_le(const unsigned char* bytes) {
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return static_cast<double>(value);
}

double decode_binary(const std::string& type, const unsigned char* bytes) {
  if (type == "char" || type == "int8") return load_le<std::int8_t>(bytes);
  if (type == "uchar" || type == "uint8") return load_le<std::uint8_t>(bytes);
  if (type == "short" || type == "int16") return load_le<std::int16_t>(bytes);
  if (type == "ushort" || type == "uint16") return load_le<std::uint16_t>(bytes);
  if (type == "int" || type == "int32") return load_le<std::int32_t>(bytes);
  if (type == "uint" || type == "uint32") return load_le<std::uint32_t>(bytes);
  if (type == "float" || type == "float32") return load_le<float>(bytes);
  return load_le<double>(bytes);
}

PlyData read_ply(std::istream& in) {
  PlyData data;
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!next_line() || line != "ply") fail_at_line(1, "missing 'ply' magic");
  bool binary = false;
  bool have_format = false;
  bool ended = false;
  while (next_line()) {
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "comment" || tokens[0] == "obj_info") continue;
    if (tokens[0] == "format") {
      if (tokens.size() < 2) fail_at_line(line_no, "incomplete format line");
      if (tokens[1] == "ascii") {
        binary = false;
      } else if (tokens[1] == "binary_little_endian") {
        binary = true;
      } else {
        fail_at_line(line_no, "unsupported PLY format '" + std::string(tokens[1]) + "'");
      }
      have_format = true;
    } else if (tokens[0] == "element") {
      if (tokens.size() != 3) fail_at_line(line_no, "malformed element line");
      PlyElement e;
      e.name = std::string(tokens[1]);
      e.count = number_at<std::size_t>(tokens[2], line_no);
      data.elements.push_back(std::move(e));
    } else if (tokens[0] == "property") {
      if (data.elements.empty()) fail_at_line(line_no, "property before any element");
      PlyProperty p;
      if (tokens.size() == 5 && tokens[1] == "list") {
        p.is_list = true;
        p.count_type = std::string(tokens[2]);
        p.type = std::string(tokens[3]);
        p.name = std::string(tokens[4]);
        if (ply_type_size(p.count_type) == 0) fail_at_line(line_no, "unknown PLY type " + p.count_type);
      } else if (tokens.size() == 3) {
        p.type = std::string(tokens[1]);
        p.name = std::string(tokens[2]);
      } else {
        fail_at_line(line_no, "malformed property line");
      }
      if (ply_type_size(p.type) == 0) fail_at_line(line_no, "unknown PLY type " + p.type);
      data.elements.back().properties.push_back(std::move(p));
    } else if (tokens[0] == "end_header") {
      ended = true;
      break;
    } else {
      fail_at_line(line_no, "unexpected header keyword '" + std::string(tokens[0]) + "'");
    }
  }
  if (!ended) fail_at_line(line_no, "missing end_header");
  if (!have_format) fail_at_line(line_no, "missing format line");

  data.columns.resize(data.elements.size());
  for (std::size_t e = 0; e < data.elements.size(); ++e) {
    const auto& element = data.elements[e];
    auto& cols = data.columns[e];
    cols.resize(element.properties.size());
    for (std::size_t p = 0; p < element.properties.size(); ++p) {
      if (element.properties[p].is_list) {
        cols[p].lists.reserve(element.count);
      } else {
        cols[p].scalars.reserve(element.count);
      }
    }
    for (std::size_t r = 0; r < element.count; ++r) {
      if (binary) {
        for (std::size_t p = 0; p < element.properties.size(); ++p) {
          const auto& prop = element.properties[p];
          unsigned char bytes[8];
          auto read_value = [&](const std::string& type) {
            const int size = ply_type_size(type);
            const auto offset = static_cast<long long>(in.tellg());
            if (!in.read(reinterpret_cast<char*>(bytes), size)) {
              throw ParseError("byte offset " + std::to_string(offset) + ": truncated binary PLY body in element '" +
                               element.name + "'");
            }
            return decode_binary(type, bytes);
          };
          if (prop.is_list) {
            const double n = read_value(prop.count_type);
            if (n < 0) throw ParseError("negative list length in element '" + element.name + "'");
            std::vector<double> values(static_cast<std::size_t>(n));
            for (auto& v : values) v = read_value(prop.type);
            cols[p].lists.push_back(std::move(values));
          } else {
            cols[p].scalars.push_back(read_value(prop.type));
          }
        }
      } else {
        if (!next_line()) fail_at_line(line_no + 1, "unexpected end of file in element '" + element.name + "'");
        const auto tokens = split_ws(line);
        std::size_t t = 0;
        auto take = [&]() {
          if (t >= tokens.size()) fail_at_line(line_no, "too few values in element '" + element.name + "'");
          return number_at<double>(tokens[t++], line_no);
        };
        for (std::size_t p = 0; p < element.properties.size(); ++p) {
          if (element.properties[p].is_list) {
            const double n = take();
            if (n < 0) fail_at_line(line_no, "negative list length");
            std::vector<double> values(static_cast<std::size_t>(n));
            for (auto& v : values) v = take();
            cols[p].lists.push_back(std::move(values));
          } else {
            cols[p].scalars.push_back(take());
          }
        }
      }
    }
  }
  return data;
}

std::vector<Point> ply_vertices(const PlyData& data) {
  const int e = data.element_index("vertex");
  if (e < 0) throw ParseError("PLY has no vertex element");
  const int px = data.property_index(e, "x");
  const int py = data.property_index(e, "y");
  const int pz = data.property_index(e, "z");
  if (px < 0 || py < 0 || pz < 0) throw ParseError("PLY vertex element lacks x/y/z");
  const auto& cols = data.columns[e];
  std::vector<Point> out(data.elements[e].count);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = Point(cols[px].scalars[i], cols[py].scalars[i], cols[pz].scalars[i]);
  }
  return out;
}

Vertex checked_index(double value, std::size_t n, const std::string& where) {
  if (value < 0 || value >= static_cast<double>(n) || value != static_cast<double>(static_cast<long long>(value))) {
    throw ParseError(where + ": vertex index " + format_double(value) + " out of range");
  }
  return static_cast<Vertex>(value);
}

void fan_triangulate(const std::vector<Vertex>& polygon, std::vector<std::array<Vertex, 3>>& out) {
  for (std::size_t k = 1; k + 1 < polygon.size(); ++k) {
    out.push_back({polygon[0], polygon[k], polygon[k + 1]});
  }
}

}  // namespace

TriangleMesh read_ply_mesh(std::istream& in) {
  const PlyData data = read_ply(in);
  TriangleMesh mesh;
  mesh.vertices = ply_vertices(data);
  const int e = data.element_index("face");
  if (e >= 0) {
    int p = data.property_index(e, "vertex_indices");
    if (p < 0) p = data.property_index(e, "vertex_index");
    if (p < 0 || !data.elements[e].properties[p].is_list) throw ParseError("PLY face element lacks vertex_indices");
    std::vector<Vertex> polygon;
    const auto& lists = data.columns[e][p].lists;
    for (std::size_t f = 0; f < lists.size(); ++f) {
      polygon.clear();
      for (double v : lists[f]) {
        polygon.push_back(checked_index(v, mesh.vertices.size(), "face " + std::to_string(f)));
      }
      fan_triangulate(polygon, mesh.triangles);
    }
  }
  return mesh;
}

TriangleMesh read_obj_mesh(std::istream& in) {
  TriangleMesh mesh;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::pair<std::vector<long long>, std::size_t>> faces;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "v") {
      if (tokens.size() < 4) fail_at_line(line_no, "vertex needs three coordinates");
      mesh.vertices.emplace_back(number_at<double>(tokens[1], line_no), number_at<double>(tokens[2], line_no),
                                 number_at<double>(tokens[3], line_no));
    } else if (tokens[0] == "f") {
      if (tokens.size() < 4) fail_at_line(line_no, "face needs at least three corners");
      std::vector<long long> corners;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        const auto slash = tokens[t].find('/');
        corners.push_back(number_at<long long>(tokens[t].substr(0, slash), line_no));
      }
      faces.emplace_back(std::move(corners), line_no);
    }
  }
  std::vector<Vertex> polygon;
  const auto n = static_cast<long long>(mesh.vertices.size());
  for (const auto& [corners, at] : faces) {
    polygon.clear();
    for (long long c : corners) {
      const long long idx = c < 0 ? n + c : c - 1;
      if (c == 0 || idx < 0 || idx >= n) fail_at_line(at, "face index " + std::to_string(c) + " out of range");
      polygon.push_back(static_cast<Vertex>(idx));
    }
    fan_triangulate(polygon, mesh.triangles);
  }
  return mesh;
}

TriangleMesh read_mesh(const std::filesystem::path& path, MeshFormat format) {
  auto in = open_or_throw(path);
  try {
    return format == MeshFormat::ply ? read_ply_mesh(in) : read_obj_mesh(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_ply_mesh(std::ostream& out, const TriangleMesh& mesh) {
  out << "ply\nformat ascii 1.0\nelement vertex " << mesh.vertices.size()
      << "\nproperty double x\nproperty double y\nproperty double z\nelement face " << mesh.triangles.size()
      << "\nproperty list uchar int vertex_indices\nend_header\n";
  for (const auto& p : mesh.vertices) {
    out << format_double(p.x()) << ' ' << format_double(p.y()) << ' ' << format_double(p.z()) << '\n';
  }
  for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void write_obj_mesh(std::ostream& out, const TriangleMesh& mesh) {
  for (const auto& p : mesh.vertices) {
    out << "v " << format_double(p.x()) << ' ' << format_double(p.y()) << ' ' << format_double(p.z()) << '\n';
  }
  for (const auto& t : mesh.triangles) out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

EmbeddedGraph mesh_graph(const TriangleMesh& mesh) {
  if (mesh.vertices.empty()) throw ParseError("empty mesh");
  std::vector<Edge> edges;
  edges.reserve(mesh.triangles.size() * 3);
  const auto n = static_cast<Vertex>(mesh.vertices.size());
  for (const auto& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      const Vertex a = t[k];
      const Vertex b = t[(k + 1) % 3];
      if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError("triangle references a missing vertex");
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  return EmbeddedGraph(mesh.vertices, edges);
}

EmbeddedGraph load_mesh(const std::filesystem::path& path, MeshFormat format) {
  try {
    return mesh_graph(read_mesh(path, format));
  } catch (const ParseError& e) {
    if (std::string_view(e.what()).starts_with(path.string())) throw;
    throw ParseError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------- voxels

namespace {

struct CellHash {
  std::size_t operator()(const std::array<long long, 3>& c) const {
    std::size_t h = std::hash<long long>{}(c[0]);
    h ^= std::hash<long long>{}(c[1]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<long long>{}(c[2]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

EmbeddedGraph voxel_graph(std::span<const std::array<long long, 3>> input, VoxelConnectivity connectivity) {
  std::unordered_map<std::array<long long, 3>, Vertex, CellHash> ids;
  std::vector<std::array<long long, 3>> cells;
  for (const auto& c : input) {
    if (ids.emplace(c, static_cast<Vertex>(cells.size())).second) cells.push_back(c);
  }
  std::vector<Point> positions;
  positions.reserve(cells.size());
  for (const auto& c : cells) {
    positions.emplace_back(static_cast<double>(c[0]), static_cast<double>(c[1]), static_cast<double>(c[2]));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          const int manhattan = std::abs(dx) + std::abs(dy) + std::abs(dz);
          if (manhattan == 0) continue;
          if (connectivity == VoxelConnectivity::six && manhattan != 1) continue;
          auto it = ids.find({c[0] + dx, c[1] + dy, c[2] + dz});
          if (it != ids.end() && static_cast<std::size_t>(it->second) > i) {
            edges.emplace_back(static_cast<Vertex>(i), it->second);
          }
        }
      }
    }
  }
  return EmbeddedGraph(std::move(positions), edges);
}

EmbeddedGraph read_voxels(std::istream& in, VoxelConnectivity connectivity) {
  std::vector<std::array<long long, 3>> cells;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const auto tokens = split_ws(std::string_view(line).substr(0, hash));
    if (tokens.empty()) continue;
    if (tokens.size() != 3) fail_at_line(line_no, "expected 'x y z'");
    cells.push_back({number_at<long long>(tokens[0], line_no), number_at<long long>(tokens[1], line_no),
                     number_at<long long>(tokens[2], line_no)});
  }
  return voxel_graph(cells, connectivity);
}

EmbeddedGraph load_voxels(const std::filesystem::path& path, VoxelConnectivity connectivity) {
  auto in = open_or_throw(path);
  try {
    return read_voxels(in, connectivity);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------- native graph

EmbeddedGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_tokens = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      auto tokens = split_ws(line);
      if (!tokens.empty()) return tokens;
    }
    fail_at_line(line_no + 1, "unexpected end of file");
  };
  auto header = next_tokens();
  if (header.size() != 3 || header[0] != "graph") fail_at_line(line_no, "expected 'graph <n> <m>'");
  const auto n = number_at<std::size_t>(header[1], line_no);
  const auto m = number_at<std::size_t>(header[2], line_no);
  std::vector<Point> positions(n);
  std::vector<std::int64_t> capacities(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto t = next_tokens();
    if (t.size() != 4) fail_at_line(line_no, "expected 'x y z capacity'");
    positions[i] = Point(number_at<double>(t[0], line_no), number_at<double>(t[1], line_no),
                         number_at<double>(t[2], line_no));
    capacities[i] = number_at<std::int64_t>(t[3], line_no);
    if (capacities[i] < 1) fail_at_line(line_no, "capacity must be >= 1");
  }
  std::vector<Edge> edges(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto t = next_tokens();
    if (t.size() != 2) fail_at_line(line_no, "expected 'u v'");
    const auto u = number_at<long long>(t[0], line_no);
    const auto v = number_at<long long>(t[1], line_no);
    if (u < 0 || v < 0 || u >= static_cast<long long>(n) || v >= static_cast<long long>(n) || u == v) {
      fail_at_line(line_no, "invalid edge");
    }
    edges[i] = {static_cast<Vertex>(u), static_cast<Vertex>(v)};
  }
  return EmbeddedGraph(std::move(positions), std::move(capacities), edges);
}

void write_graph(std::ostream& out, const EmbeddedGraph& g) {
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& p = g.position(v);
    out << format_double(p.x()) << ' ' << format_double(p.y()) << ' ' << format_double(p.z()) << ' '
        << g.capacity(v) << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

EmbeddedGraph load_graph(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  try {
    return read_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_graph(const std::filesystem::path& path, const EmbeddedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  write_graph(out, g);
}

// ---------------------------------------------------------------- polylines

void write_polyline_ply(std::ostream& out, const EmbeddedGraph& g) {
  out << "ply\nformat ascii 1.0\nelement vertex " << g.vertex_count()
      << "\nproperty double x\nproperty double y\nproperty double z\nelement edge " << g.edge_count()
      << "\nproperty int vertex1\nproperty int vertex2\nend_header\n";
  for (const auto& p : g.positions()) {
    out << format_double(p.x()) << ' ' << format_double(p.y()) << ' ' << format_double(p.z()) << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_polyline_obj(std::ostream& out, const EmbeddedGraph& g) {
  for (const auto& p : g.positions()) {
    out << "v " << format_double(p.x()) << ' ' << format_double(p.y()) << ' ' << format_double(p.z()) << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << "l " << u + 1 << ' ' << v + 1 << '\n';
}

EmbeddedGraph read_polyline_ply(std::istream& in) {
  const PlyData data = read_ply(in);
  auto positions = ply_vertices(data);
  std::vector<Edge> edges;
  const int e = data.element_index("edge");
  if (e >= 0) {
    const int a = data.property_index(e, "vertex1");
    const int b = data.property_index(e, "vertex2");
    if (a < 0 || b < 0) throw ParseError("PLY edge element lacks vertex1/vertex2");
    for (std::size_t i = 0; i < data.elements[e].count; ++i) {
      const auto where = "edge " + std::to_string(i);
      edges.emplace_back(checked_index(data.columns[e][a].scalars[i], positions.size(), where),
                         checked_index(data.columns[e][b].scalars[i], positions.size(), where));
    }
  }
  return EmbeddedGraph(std::move(positions), edges);
}

EmbeddedGraph read_polyline_obj(std::istream& in) {
  std::vector<Point> positions;
  std::vector<std::pair<std::vector<long long>, std::size_t>> lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "v") {
      if (tokens.size() < 4) fail_at_line(line_no, "vertex needs three coordinates");
      positions.emplace_back(number_at<double>(tokens[1], line_no), number_at<double>(tokens[2], line_no),
                             number_at<double>(tokens[3], line_no));
    } else if (tokens[0] == "l") {
      std::vector<long long> ids;
      for (std::size_t t = 1; t < tokens.size(); ++t) ids.push_back(number_at<long long>(tokens[t], line_no));
      lines.emplace_back(std::move(ids), line_no);
    }
  }
  std::vector<Edge> edges;
  const auto n = static_cast<long long>(positions.size());
  for (const auto& [ids, at] : lines) {
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
      const long long a = ids[k] < 0 ? n + ids[k] : ids[k] - 1;
      const long long b = ids[k + 1] < 0 ? n + ids[k + 1] : ids[k + 1] - 1;
      if (a < 0 || b < 0 || a >= n || b >= n) fail_at_line(at, "line index out of range");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return EmbeddedGraph(std::move(positions), edges);
}

EmbeddedGraph load_polyline(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  try {
    switch (input_kind(path)) {
      case InputKind::ply:
        return read_polyline_ply(in);
      case InputKind::obj:
        return read_polyline_obj(in);
      case InputKind::graph:
        return read_graph(in);
      default:
        throw ParseError("unsupported skeleton format");
    }
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------- dispatch

InputKind input_kind(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".ply") return InputKind::ply;
  if (ext == ".obj") return InputKind::obj;
  if (ext == ".vox" || ext == ".voxels") return InputKind::voxels;
  if (ext == ".graph") return InputKind::graph;
  return InputKind::unknown;
}

EmbeddedGraph load_input(const std::filesystem::path& path, VoxelConnectivity connectivity) {
  switch (input_kind(path)) {
    case InputKind::ply:
      return load_mesh(path, MeshFormat::ply);
    case InputKind::obj:
      return load_mesh(path, MeshFormat::obj);
    case InputKind::voxels:
      return load_voxels(path, connectivity);
    case InputKind::graph:
      return load_graph(path);
    case InputKind::unknown:
      break;
  }
  throw ParseError("unknown input format: " + path.string());
}

}  // namespace mlskel
