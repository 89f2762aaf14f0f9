#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlskel/synthetic.hpp"

namespace mlskel::cli {

namespace fs = std::filesystem;

namespace {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_seconds(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::ofstream open_for_writing(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  return out;
}

MeshFormat format_for(const fs::path& path, MeshFormat fallback) {
  const auto kind = input_kind(path);
  if (kind == InputKind::ply) return MeshFormat::ply;
  if (kind == InputKind::obj) return MeshFormat::obj;
  return fallback;
}

bool is_mesh(const fs::path& path) {
  const auto kind = input_kind(path);
  return kind == InputKind::ply || kind == InputKind::obj;
}

TriangleMesh load_triangle_mesh(const fs::path& path) {
  if (!is_mesh(path)) throw UsageError(path.string() + ": not a triangle mesh (.ply or .obj)");
  return read_mesh(path, input_kind(path) == InputKind::ply ? MeshFormat::ply : MeshFormat::obj);
}

void save_mesh(const fs::path& path, const TriangleMesh& mesh) {
  auto out = open_for_writing(path);
  if (format_for(path, MeshFormat::ply) == MeshFormat::obj) {
    write_obj_mesh(out, mesh);
  } else {
    write_ply_mesh(out, mesh);
  }
}

void save_voxels(const fs::path& path, const std::vector<Cell>& cells) {
  auto out = open_for_writing(path);
  for (const auto& c : cells) out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
}

std::string threshold_label(std::int64_t t) {
  return t == DynamicConnectivity::kSingleLevel ? "single" : std::to_string(t);
}

}  // namespace

SkeletonizeOutcome skeletonize_graph(const EmbeddedGraph& g, const RunConfig& config) {
  SkeletonizeOutcome outcome;
  outcome.result = multilevel_skeletonize(g, config.pipeline);
  const EmbeddedGraph& skel = outcome.result.skeleton.graph;
  outcome.metrics = skeleton_metrics(skel);
  outcome.components = connected_components(skel).count;

  auto report = nlohmann::ordered_json::parse(to_json(outcome.result.report));
  const auto& c = config.pipeline;
  report["config"] = {{"alpha", c.alpha},
                      {"seed", c.seed},
                      {"threads", c.threads},
                      {"refine", c.refine == RefineMode::shrink_only ? "lem" : "lemts"},
                      {"baseline", c.baseline},
                      {"dyncon_threshold", threshold_label(c.dyncon_threshold)}};
  report["input"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  report["skeleton"] = {{"vertices", outcome.metrics.vertices},
                        {"edges", skel.edge_count()},
                        {"leafs", outcome.metrics.leafs},
                        {"branches", outcome.metrics.branches},
                        {"genus_estimate", outcome.metrics.genus_estimate},
                        {"components", outcome.components},
                        {"separators", outcome.result.separators.size()}};
  outcome.report_json = report.dump(2);
  return outcome;
}

void write_skeleton(std::ostream& out, const EmbeddedGraph& skeleton, MeshFormat format) {
  if (format == MeshFormat::obj) {
    write_polyline_obj(out, skeleton);
  } else {
    write_polyline_ply(out, skeleton);
  }
}

void save_skeleton(const fs::path& path, const EmbeddedGraph& skeleton, MeshFormat format) {
  auto out = open_for_writing(path);
  write_skeleton(out, skeleton, format);
}

SkeletonizeOutcome cmd_skeletonize(const fs::path& input, const fs::path& output, const RunConfig& config,
                                   const std::optional<fs::path>& report) {
  if (input_kind(input) == InputKind::unknown) throw UsageError("unknown input format: " + input.string());
  const EmbeddedGraph g = load_input(input, config.voxel_connectivity);
  auto outcome = skeletonize_graph(g, config);
  save_skeleton(output, outcome.result.skeleton.graph, config.out_format);
  if (report) {
    auto out = open_for_writing(*report);
    out << outcome.report_json << '\n';
  }
  return outcome;
}

CompareRow compare_graphs(const EmbeddedGraph& a, const EmbeddedGraph& b, double normalizer, std::string input) {
  if (a.empty() || b.empty()) throw UsageError("empty skeleton");
  if (!(normalizer > 0)) throw UsageError("input bounding sphere has zero radius");
  const SkeletonMetrics ma = compare_skeletons(a, b, normalizer);
  const SkeletonMetrics mb = skeleton_metrics(b);
  CompareRow row;
  row.input = std::move(input);
  row.d_vertices = ma.vertices - mb.vertices;
  row.d_leafs = ma.leafs - mb.leafs;
  row.d_branches = ma.branches - mb.branches;
  row.d_genus = ma.genus_estimate - mb.genus_estimate;
  row.h_ab = ma.hausdorff_ab;
  row.h_ba = ma.hausdorff_ba;
  return row;
}

CompareRow cmd_compare(const fs::path& a, const fs::path& b, const fs::path& input, VoxelConnectivity connectivity) {
  const EmbeddedGraph ga = load_polyline(a);
  const EmbeddedGraph gb = load_polyline(b);
  if (ga.empty() || gb.empty()) throw UsageError("empty skeleton");
  const EmbeddedGraph g = load_input(input, connectivity);
  if (g.empty()) throw UsageError("empty input " + input.string());
  return compare_graphs(ga, gb, bounding_sphere(g.positions()).radius, input.filename().string());
}

std::string compare_csv_header() { return "input,dvertices,dleafs,dbranches,dgenus,h_ab,h_ba"; }

std::string to_csv(const CompareRow& row) {
  std::ostringstream out;
  out << csv_field(row.input) << ',' << row.d_vertices << ',' << row.d_leafs << ',' << row.d_branches << ','
      << row.d_genus << ',' << format_double(row.h_ab) << ',' << format_double(row.h_ba);
  return out.str();
}

std::string to_json(const CompareRow& row) {
  nlohmann::ordered_json j = {{"input", row.input},         {"dvertices", row.d_vertices},
                              {"dleafs", row.d_leafs},       {"dbranches", row.d_branches},
                              {"dgenus", row.d_genus},       {"h_ab", row.h_ab},
                              {"h_ba", row.h_ba}};
  return j.dump(2);
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<fs::path> corpus_files(const fs::path& corpus) {
  if (!fs::is_directory(corpus)) throw UsageError("not a directory: " + corpus.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus)) {
    if (entry.is_regular_file() && input_kind(entry.path()) != InputKind::unknown) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<BenchRow> bench_file(const fs::path& file, const BenchSpec& spec) {
  std::vector<BenchRow> rows;
  const std::string name = file.filename().string();
  auto failed = [&](int subdivision, const std::string& what) {
    BenchRow row;
    row.input = name;
    row.subdivision = subdivision;
    row.error = what;
    rows.push_back(row);
  };

  std::optional<TriangleMesh> mesh;
  std::optional<EmbeddedGraph> graph;
  try {
    if (is_mesh(file)) {
      mesh = load_triangle_mesh(file);
    } else {
      graph = load_input(file, spec.voxel_connectivity);
    }
  } catch (const std::exception& e) {
    failed(0, e.what());
    return rows;
  }

  for (int s = 0; s < spec.subdivisions; ++s) {
    if (!mesh && s > 0) {
      failed(s, "subdivision needs a triangle mesh");
      continue;
    }
    EmbeddedGraph g;
    try {
      g = mesh ? mesh_graph(*mesh) : *graph;
    } catch (const std::exception& e) {
      failed(s, e.what());
      break;
    }
    std::vector<std::int64_t> thresholds = spec.thresholds;
    if (spec.threshold_sweep) {
      for (std::int64_t t = 4; t <= g.vertex_count(); t *= 2) thresholds.push_back(t);
    }
    for (int alpha : spec.alphas) {
      for (std::int64_t t : thresholds) {
        BenchRow row;
        row.input = name;
        row.subdivision = s;
        row.alpha = alpha;
        row.dyncon_threshold = t;
        row.vertices = g.vertex_count();
        row.edges = g.edge_count();
        try {
          SkeletonizeConfig config;
          config.alpha = alpha;
          config.seed = spec.seed;
          config.threads = spec.threads;
          config.refine = spec.refine;
          config.baseline = spec.baseline;
          config.dyncon_threshold = t;
          std::vector<double> coarsen, search, project, pack, extract, total;
          for (int r = 0; r < std::max(1, spec.repeats); ++r) {
            const auto result = multilevel_skeletonize(g, config);
            const auto& sec = result.report.seconds;
            coarsen.push_back(sec.coarsen);
            search.push_back(sec.search);
            project.push_back(sec.project);
            pack.push_back(sec.pack);
            extract.push_back(sec.extract);
            total.push_back(sec.total);
            if (r == 0) {
              row.levels = static_cast<int>(result.report.levels.size());
              row.skeleton = skeleton_metrics(result.skeleton.graph);
            }
          }
          row.seconds = {median(coarsen), median(search),  median(project),
                         median(pack),    median(extract), median(total)};
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        rows.push_back(row);
      }
    }
    if (mesh && s + 1 < spec.subdivisions) mesh = subdivide(*mesh);
  }
  return rows;
}

std::vector<BenchRow> cmd_bench(const fs::path& corpus, const BenchSpec& spec) {
  std::vector<BenchRow> rows;
  for (const auto& file : corpus_files(corpus)) {
    auto file_rows = bench_file(file, spec);
    rows.insert(rows.end(), file_rows.begin(), file_rows.end());
  }
  return rows;
}

std::string bench_csv_header() {
  return "input,subdivision,alpha,dyncon_threshold,vertices,edges,levels,coarsen_s,search_s,project_s,pack_s,"
         "extract_s,total_s,skel_vertices,leafs,branches,genus,error";
}

std::string to_csv(const BenchRow& row) {
  std::ostringstream out;
  out << csv_field(row.input) << ',' << row.subdivision << ',' << row.alpha << ','
      << threshold_label(row.dyncon_threshold) << ',' << row.vertices << ',' << row.edges << ',' << row.levels;
  for (double t : {row.seconds.coarsen, row.seconds.search, row.seconds.project, row.seconds.pack,
                   row.seconds.extract, row.seconds.total}) {
    out << ',' << format_seconds(t);
  }
  out << ',' << row.skeleton.vertices << ',' << row.skeleton.leafs << ',' << row.skeleton.branches << ','
      << row.skeleton.genus_estimate << ',' << csv_field(row.error);
  return out.str();
}

int cmd_coarsen(const fs::path& input, const fs::path& out_dir, int alpha, std::uint64_t seed,
                VoxelConnectivity connectivity) {
  if (alpha < 1) throw UsageError("--alpha must be >= 1");
  const EmbeddedGraph g = load_input(input, connectivity);
  const LevelHierarchy h = build_hierarchy(g, alpha, seed);
  fs::create_directories(out_dir);
  for (int i = 0; i < h.level_count(); ++i) {
    save_graph(out_dir / ("level_" + std::to_string(i) + ".graph"), h.graphs[i]);
  }
  return h.level_count();
}

namespace {

void add_run_options(CLI::App& app, RunConfig& config, std::string& refine, int& connectivity) {
  auto& c = config.pipeline;
  app.add_option("--alpha", c.alpha, "Search size limit and coarsest level size")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--threads", c.threads, "Search worker count")->check(CLI::PositiveNumber);
  app.add_option("--refine", refine, "Refinement: lem (shrink) or lemts (thicken, then shrink)")
      ->check(CLI::IsMember({"lem", "lemts"}));
  app.add_flag("--baseline", c.baseline, "Single level with unrestricted searches");
  app.add_option("--dyncon-threshold", c.dyncon_threshold,
                 "Trees at most this size stay on one level (default: single-level structure)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--voxel-connectivity", connectivity, "Voxel neighbourhood, 6 or 26")->check(CLI::IsMember({6, 26}));
}

RefineMode refine_mode(const std::string& name) {
  return name == "lemts" ? RefineMode::thicken_then_shrink : RefineMode::shrink_only;
}

std::int64_t parse_integer(const std::string& s) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not an integer: '" + s + "'");
  return value;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multilevel local-separator curve skeletons"};
  app.require_subcommand(1);

  RunConfig run_config;
  std::string refine = "lem";
  int connectivity = 26;
  std::string out_format = "ply";
  std::string input, output, report;

  auto* sk = app.add_subcommand("skeletonize", "Compute a curve skeleton");
  sk->add_option("input", input, "Mesh (.ply/.obj), voxels (.vox/.voxels) or graph (.graph)")->required();
  sk->add_option("-o,--output", output, "Skeleton file")->required();
  sk->add_option("--out-format", out_format, "Skeleton format")->check(CLI::IsMember({"ply", "obj"}));
  sk->add_option("--report", report, "JSON run report path");
  add_run_options(*sk, run_config, refine, connectivity);

  std::string skel_a, skel_b, csv_name;
  bool as_json = false;
  auto* cmp = app.add_subcommand("compare", "Compare two skeletons of one input");
  cmp->add_option("a", skel_a, "Skeleton A")->required();
  cmp->add_option("b", skel_b, "Skeleton B")->required();
  cmp->add_option("--input", input, "Input the skeletons were computed from")->required();
  cmp->add_option("--name", csv_name, "Label for the input column");
  cmp->add_flag("--json", as_json, "Emit JSON instead of CSV");
  cmp->add_option("--voxel-connectivity", connectivity, "Voxel neighbourhood, 6 or 26")
      ->check(CLI::IsMember({6, 26}));

  BenchSpec spec;
  std::string corpus, alphas = "8,16,32,64,128", thresholds;
  auto* bench = app.add_subcommand("bench", "Benchmark sweep over a corpus directory");
  bench->add_option("corpus", corpus, "Directory of inputs")->required();
  bench->add_option("-o,--output", output, "CSV file (default: stdout)");
  bench->add_option("--alphas", alphas, "Comma-separated alpha values");
  bench->add_option("--dyncon-thresholds", thresholds, "Comma-separated thresholds ('single' for one level)");
  bench->add_flag("--threshold-sweep", spec.threshold_sweep, "Add powers of two from 4 up to |V|");
  bench->add_option("--subdivisions", spec.subdivisions, "Subdivision levels per mesh")->check(CLI::PositiveNumber);
  bench->add_option("--repeats", spec.repeats, "Timed runs per row (median reported)")->check(CLI::PositiveNumber);
  bench->add_option("--seed", spec.seed, "Random seed");
  bench->add_option("--threads", spec.threads, "Search worker count")->check(CLI::PositiveNumber);
  bench->add_option("--refine", refine, "lem or lemts")->check(CLI::IsMember({"lem", "lemts"}));
  bench->add_flag("--baseline", spec.baseline, "Single level with unrestricted searches");
  bench->add_option("--voxel-connectivity", connectivity, "Voxel neighbourhood, 6 or 26")
      ->check(CLI::IsMember({6, 26}));

  std::string out_dir;
  int coarsen_alpha = 64;
  std::uint64_t coarsen_seed = 1;
  auto* coarsen = app.add_subcommand("coarsen", "Write every level of the coarsening hierarchy");
  coarsen->add_option("input", input, "Input file")->required();
  coarsen->add_option("-o,--out-dir", out_dir, "Output directory")->required();
  coarsen->add_option("--alpha", coarsen_alpha, "Stop at this many vertices")->check(CLI::PositiveNumber);
  coarsen->add_option("--seed", coarsen_seed, "Random seed");
  coarsen->add_option("--voxel-connectivity", connectivity, "Voxel neighbourhood, 6 or 26")
      ->check(CLI::IsMember({6, 26}));

  std::string shape;
  int resolution = 0, genus = 2, times = 1;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("generate", "Write a synthetic input");
  gen->add_option("shape", shape, "sphere, torus, random-torus, double-torus, holed-block or blob")
      ->required()
      ->check(CLI::IsMember({"sphere", "torus", "random-torus", "double-torus", "holed-block", "blob"}));
  gen->add_option("-o,--output", output, "Output file (.ply/.obj, or .vox for blob)")->required();
  gen->add_option("--resolution", resolution, "Shape-specific size parameter")->check(CLI::PositiveNumber);
  gen->add_option("--genus", genus, "Hole count for holed-block")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_seed, "Seed for random shapes");

  auto* sub = app.add_subcommand("subdivide", "Midpoint 1-to-4 triangle subdivision");
  sub->add_option("input", input, "Triangle mesh")->required();
  sub->add_option("-o,--output", output, "Output mesh")->required();
  sub->add_option("--times", times, "Number of subdivision steps")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUser;
  }

  const auto voxel = static_cast<VoxelConnectivity>(connectivity);
  try {
    if (*sk) {
      run_config.pipeline.refine = refine_mode(refine);
      run_config.voxel_connectivity = voxel;
      run_config.out_format = out_format == "obj" ? MeshFormat::obj : MeshFormat::ply;
      std::optional<fs::path> report_path;
      if (!report.empty()) report_path = report;
      const auto outcome = cmd_skeletonize(input, output, run_config, report_path);
      out << "vertices=" << outcome.metrics.vertices << " leafs=" << outcome.metrics.leafs
          << " branches=" << outcome.metrics.branches << " genus=" << outcome.metrics.genus_estimate
          << " components=" << outcome.components << '\n';
    } else if (*cmp) {
      auto row = cmd_compare(skel_a, skel_b, input, voxel);
      if (!csv_name.empty()) row.input = csv_name;
      if (as_json) {
        out << to_json(row) << '\n';
      } else {
        out << compare_csv_header() << '\n' << to_csv(row) << '\n';
      }
    } else if (*bench) {
      spec.refine = refine_mode(refine);
      spec.voxel_connectivity = voxel;
      spec.alphas.clear();
      for (const auto& a : split_list(alphas)) {
        const std::int64_t value = parse_integer(a);
        if (value < 1 || value > std::numeric_limits<int>::max()) throw UsageError("alpha out of range: " + a);
        spec.alphas.push_back(static_cast<int>(value));
      }
      if (!thresholds.empty()) {
        spec.thresholds.clear();
        for (const auto& t : split_list(thresholds)) {
          const std::int64_t value = t == "single" ? DynamicConnectivity::kSingleLevel : parse_integer(t);
          if (value < 0) throw UsageError("threshold must be >= 0");
          spec.thresholds.push_back(value);
        }
      }
      const auto rows = cmd_bench(corpus, spec);
      std::ofstream file;
      std::ostream* sink = &out;
      if (!output.empty()) {
        file = open_for_writing(output);
        sink = &file;
      }
      *sink << bench_csv_header() << '\n';
      for (const auto& row : rows) *sink << to_csv(row) << '\n';
    } else if (*coarsen) {
      const int levels = cmd_coarsen(input, out_dir, coarsen_alpha, coarsen_seed, voxel);
      out << "levels=" << levels << '\n';
    } else if (*gen) {
      if (shape == "blob") {
        save_voxels(output, random_voxel_blob(resolution ? resolution : 3000, gen_seed));
      } else {
        TriangleMesh mesh;
        if (shape == "sphere") {
          const int r = resolution ? resolution : 30;
          mesh = uv_sphere(r, 2 * r);
        } else if (shape == "torus") {
          const int r = resolution ? resolution : 24;
          mesh = torus(3 * r, r);
        } else if (shape == "random-torus") {
          const int r = resolution ? resolution : 24;
          mesh = random_torus(gen_seed, 3 * r, r);
        } else if (shape == "double-torus") {
          mesh = holed_block(2, resolution ? resolution : 6);
        } else {
          mesh = holed_block(genus, resolution ? resolution : 6);
        }
        if (!is_mesh(output)) throw UsageError("mesh output must end in .ply or .obj");
        save_mesh(output, mesh);
      }
    } else if (*sub) {
      if (!is_mesh(output)) throw UsageError("mesh output must end in .ply or .obj");
      TriangleMesh mesh = load_triangle_mesh(input);
      for (int i = 0; i < times; ++i) mesh = subdivide(mesh);
      save_mesh(output, mesh);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace mlskel::cli
