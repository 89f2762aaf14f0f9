#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace mlskel::detail {

// Generation-stamped membership set over a dense id range. reset() is O(1).
class Marker {
 public:
  void reset(std::size_t n) {
    if (stamps_.size() < n) stamps_.resize(n, 0);
    if (++current_ == 0) {
      std::fill(stamps_.begin(), stamps_.end(), 0);
      current_ = 1;
    }
  }
  void mark(std::int64_t v) { stamps_[v] = current_; }
  void unmark(std::int64_t v) { stamps_[v] = 0; }
  bool marked(std::int64_t v) const { return stamps_[v] == current_; }

 private:
  std::vector<std::uint32_t> stamps_;
  std::uint32_t current_ = 0;
};

}  // namespace mlskel::detail
