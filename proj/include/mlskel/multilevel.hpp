#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlskel/coarsening.hpp"
#include "mlskel/dyncon.hpp"
#include "mlskel/graph.hpp"
#include "mlskel/separators.hpp"
#include "mlskel/skeleton.hpp"

namespace mlskel {

enum class RefineMode { shrink_only, thicken_then_shrink };

struct SkeletonizeConfig {
  int alpha = 64;
  std::uint64_t seed = 1;
  int threads = 1;
  RefineMode refine = RefineMode::shrink_only;
  bool baseline = false;
  std::int64_t dyncon_threshold = DynamicConnectivity::kSingleLevel;
  // Start vertices are decided in batches of this many visits; searches in a
  // batch see the pool as it was when the batch began. Independent of `threads`.
  int sampling_batch = 64;
};

/// Separators of one level together with how many of them cover each vertex.
struct SeparatorPool {
  int level = 0;
  std::vector<Separator> separators;
  std::vector<std::int64_t> usage;
};

/// Replaces every member by the fine vertices contracted into it.
Separator project_separator(const ContractionRecord& record, const Separator& s, const EmbeddedGraph& fine);

/// Minimal separator from a projected set, or nullopt if the set no longer separates.
std::optional<Separator> refine_separator(const EmbeddedGraph& g, const Separator& projected, RefineMode mode);

/// Drops exact duplicates (same member set), keeping first occurrences in order.
std::vector<Separator> dedup_filter(std::vector<Separator> pool);

/// Greedy packing in ascending footprint order (ties: lexicographic member
/// list). A separator is accepted iff no member's usage would exceed its capacity.
SeparatorPool capacity_pack(const EmbeddedGraph& g, std::vector<Separator> pool);

/// Keeps separators in order, dropping any that shares a vertex with or is
/// adjacent to an already kept one. Touching separators leave pockets between
/// them that would otherwise appear as spurious skeleton cycles.
std::vector<Separator> drop_touching(const EmbeddedGraph& g, std::vector<Separator> pool);

/// Number of separators containing each vertex.
std::vector<int> membership_counts(Vertex n, std::span<const Separator> pool);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double unit_uniform(Rng& rng);

/// Inclusion rule for a start vertex covered by `x` separators.
inline bool accept_start(int x, double u) { return x < 1024 && u < std::ldexp(1.0, -x); }

/// Visits all vertices in random order and keeps each with probability 2^-x(v).
std::vector<Vertex> sample_start_vertices(const EmbeddedGraph& g, std::span<const Separator> pool, Rng& rng);

struct LevelReport {
  int level = 0;
  int vertices = 0;
  std::size_t edges = 0;
  int projected = 0;
  int refine_failures = 0;
  int searches = 0;
  int found = 0;
  int deduped = 0;
  int packed = 0;
  int touching_dropped = 0;  // level 0 only
};

struct PhaseTimes {
  double coarsen = 0;
  double search = 0;
  double project = 0;
  double pack = 0;
  double extract = 0;
  double total = 0;
};

struct RunReport {
  std::vector<LevelReport> levels;  // coarsest first, in processing order
  PhaseTimes seconds;
  bool coarsening_stalled = false;
  int refine_failures = 0;
};

std::string to_json(const RunReport& report, int indent = 2);

struct SkeletonizeResult {
  Skeleton skeleton;
  std::vector<Separator> separators;  // final disjoint separators on the input graph
  RunReport report;
};

/// Coarsen, then from the coarsest level down: project and refine the pool,
/// search from sampled starts, dedup and pack; finally extract on the input.
SkeletonizeResult multilevel_skeletonize(const EmbeddedGraph& g, const SkeletonizeConfig& config);

}  // namespace mlskel
