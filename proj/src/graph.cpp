#include "decay/graph.hpp"

#include <deque>

namespace decay {

GraphDistance graph_distances(const SparseHermitian& h,
                              const std::vector<int>& sources, int radius) {
  const int n = h.n();
  GraphDistance g;
  g.n_ = n;
  g.radius_ = radius;
  g.max_degree_ = h.max_degree();
  g.sources_ = sources.empty() ? [&] {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }() : sources;
  g.source_slot_.assign(n, -1);

  g.dist_.reserve(g.sources_.size());
  for (std::size_t s = 0; s < g.sources_.size(); ++s) {
    const int src = g.sources_[s];
    if (src < 0 || src >= n)
      throw precondition_error("graph_distances", "source index out of range");
    g.source_slot_[src] = static_cast<int>(s);
    std::vector<std::int32_t> d(n, GraphDistance::kUnreachable);
    d[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (d[u] >= radius) continue;
      h.for_each_in_row(u, [&](int v, cplx) {
        if (v != u && d[v] == GraphDistance::kUnreachable) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
      });
    }
    g.dist_.push_back(std::move(d));
  }
  return g;
}

}  // namespace decay
