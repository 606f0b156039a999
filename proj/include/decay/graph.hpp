#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "decay/sparse_hermitian.hpp"

namespace decay {

// Shortest-path distance tables from a set of source rows, truncated at a
// radius. Distances beyond the radius (and disconnected pairs) carry the
// kUnreachable sentinel, which exceeds any radius.
class GraphDistance {
public:
  static constexpr std::int32_t kUnreachable =
      std::numeric_limits<std::int32_t>::max();

  int n() const { return n_; }
  int radius() const { return radius_; }
  int max_degree() const { return max_degree_; }
  bool all_sources() const { return static_cast<int>(sources_.size()) == n_; }

  bool has_source(int i) const {
    return i >= 0 && i < n_ && source_slot_[i] >= 0;
  }

  // d(i,j); requires i or j to be a source
  std::int32_t operator()(int i, int j) const {
    if (has_source(i)) return dist_[source_slot_[i]][j];
    if (has_source(j)) return dist_[source_slot_[j]][i];
    throw precondition_error("GraphDistance", "no distance row for this pair");
  }

  const std::vector<std::int32_t>& row(int source) const {
    if (!has_source(source))
      throw precondition_error("GraphDistance", "not a source row");
    return dist_[source_slot_[source]];
  }

private:
  friend GraphDistance graph_distances(const SparseHermitian&,
                                       const std::vector<int>&, int);
  int n_ = 0;
  int radius_ = 0;
  int max_degree_ = 0;
  std::vector<int> sources_;
  std::vector<int> source_slot_;  // -1 when not a source
  std::vector<std::vector<std::int32_t>> dist_;
};

// Breadth-first distances in the adjacency graph of H from each source,
// truncated at `radius`. An empty source list means all rows.
GraphDistance graph_distances(const SparseHermitian& h,
                              const std::vector<int>& sources = {},
                              int radius = std::numeric_limits<int>::max());

}  // namespace decay
