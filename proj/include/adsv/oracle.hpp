#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "adsv/stream.hpp"

namespace adsv::oracle {

class SizeGuard : public std::length_error {
 public:
  using std::length_error::length_error;
};

// 1-indexed n x n matrix of final multiplicities or weights.
struct DenseGraph {
  std::uint32_t n = 0;
  bool directed = false;
  std::vector<std::vector<std::int64_t>> a;

  static DenseGraph from_instance(const GraphInstance& g);
  bool adjacent(Vertex u, Vertex v) const { return a[u][v] != 0; }
  std::int64_t edge_count() const;  // simple-graph edge count (distinct adjacent pairs)
};

std::int64_t triangles(const DenseGraph& g);
// Triangles counted by the update-accounting sum over the token history.
std::int64_t triangles_by_updates(const GraphInstance& g);

std::int64_t induced_edges(const DenseGraph& g, const std::vector<std::vector<Vertex>>& sets);
std::int64_t cross_edges(const DenseGraph& g,
                         const std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>>& pairs);

// Exact maximum matching size by subset DP; n <= 24.
int matching(const DenseGraph& g);
// min over U of (|U| + n - odd(G - U)) / 2 by enumerating every U; n <= 16.
int tutte_berge_bound(const DenseGraph& g);
int odd_components(const DenseGraph& g, const std::vector<bool>& removed);

bool mis_check(const DenseGraph& g, const std::vector<Vertex>& u);
int components(const DenseGraph& g);

std::optional<std::vector<Vertex>> toposort(const DenseGraph& g);
bool is_topological_order(const DenseGraph& g, const std::vector<Vertex>& order);
bool acyclic(const DenseGraph& g);

// -1 marks unreachable vertices. Index 0 unused.
std::vector<std::int64_t> bfs(const DenseGraph& g, Vertex src);

struct ShortestPaths {
  std::vector<std::int64_t> dist;
  std::vector<Vertex> prev;  // 0 for the source and unreachable vertices
};
ShortestPaths dijkstra(const DenseGraph& g, Vertex src);

}  // namespace adsv::oracle
