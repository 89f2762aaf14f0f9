#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlskel/io.hpp"
#include "mlskel/multilevel.hpp"
#include "mlskel/skeleton.hpp"

namespace mlskel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUser = 2;
inline constexpr int kExitInternal = 3;

/// Bad arguments or unusable input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  SkeletonizeConfig pipeline;
  VoxelConnectivity voxel_connectivity = VoxelConnectivity::twenty_six;
  MeshFormat out_format = MeshFormat::ply;
};

struct SkeletonizeOutcome {
  SkeletonizeResult result;
  SkeletonMetrics metrics;
  int components = 0;
  std::string report_json;
};

SkeletonizeOutcome skeletonize_graph(const EmbeddedGraph& g, const RunConfig& config);

/// Loads `input`, runs the pipeline and writes the skeleton (and the report if a path is given).
SkeletonizeOutcome cmd_skeletonize(const std::filesystem::path& input, const std::filesystem::path& output,
                                   const RunConfig& config,
                                   const std::optional<std::filesystem::path>& report = std::nullopt);

void write_skeleton(std::ostream& out, const EmbeddedGraph& skeleton, MeshFormat format);
void save_skeleton(const std::filesystem::path& path, const EmbeddedGraph& skeleton, MeshFormat format);

struct CompareRow {
  std::string input;
  int d_vertices = 0;
  int d_leafs = 0;
  int d_branches = 0;
  int d_genus = 0;
  double h_ab = 0.0;
  double h_ba = 0.0;
};

/// A minus B; Hausdorff distances normalized by `normalizer`. Throws UsageError on an empty skeleton.
CompareRow compare_graphs(const EmbeddedGraph& a, const EmbeddedGraph& b, double normalizer, std::string input = {});

CompareRow cmd_compare(const std::filesystem::path& a, const std::filesystem::path& b,
                       const std::filesystem::path& input,
                       VoxelConnectivity connectivity = VoxelConnectivity::twenty_six);

std::string compare_csv_header();
std::string to_csv(const CompareRow& row);
std::string to_json(const CompareRow& row);

struct BenchSpec {
  std::vector<int> alphas{8, 16, 32, 64, 128};
  std::vector<std::int64_t> thresholds{DynamicConnectivity::kSingleLevel};
  bool threshold_sweep = false;  // adds powers of two from 4 up to |V|
  int subdivisions = 1;          // subdivision levels 0 .. subdivisions-1
  int repeats = 3;
  std::uint64_t seed = 1;
  int threads = 1;
  RefineMode refine = RefineMode::shrink_only;
  bool baseline = false;
  VoxelConnectivity voxel_connectivity = VoxelConnectivity::twenty_six;
};

struct BenchRow {
  std::string input;
  int subdivision = 0;
  int alpha = 0;
  std::int64_t dyncon_threshold = 0;
  int vertices = 0;
  std::size_t edges = 0;
  PhaseTimes seconds;  // medians over the repeats
  int levels = 0;
  SkeletonMetrics skeleton;
  std::string error;
};

/// Supported files of `corpus` in name order.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& corpus);

std::vector<BenchRow> bench_file(const std::filesystem::path& file, const BenchSpec& spec);
std::vector<BenchRow> cmd_bench(const std::filesystem::path& corpus, const BenchSpec& spec);

std::string bench_csv_header();
std::string to_csv(const BenchRow& row);

double median(std::vector<double> values);

/// Writes level_<i>.graph for every level of the hierarchy; returns the level count.
int cmd_coarsen(const std::filesystem::path& input, const std::filesystem::path& out_dir, int alpha,
                std::uint64_t seed, VoxelConnectivity connectivity = VoxelConnectivity::twenty_six);

/// Runs the command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mlskel::cli
