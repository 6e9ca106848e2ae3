#include "adsv/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace adsv::oracle {

DenseGraph DenseGraph::from_instance(const GraphInstance& g) {
  DenseGraph d;
  d.n = g.header.n;
  d.directed = g.header.directed;
  d.a = final_matrix(g);
  return d;
}

std::int64_t DenseGraph::edge_count() const {
  std::int64_t m = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = directed ? 1 : u + 1; v <= n; ++v) {
      if (u != v && a[u][v] != 0) ++m;
    }
  }
  return m;
}

std::int64_t triangles(const DenseGraph& g) {
  std::int64_t t = 0;
  for (Vertex a = 1; a <= g.n; ++a)
    for (Vertex b = a + 1; b <= g.n; ++b) {
      if (!g.a[a][b]) continue;
      for (Vertex c = b + 1; c <= g.n; ++c) t += g.a[a][b] * g.a[b][c] * g.a[a][c];
    }
  return t;
}

std::int64_t triangles_by_updates(const GraphInstance& g) {
  const auto n = g.header.n;
  std::vector<std::vector<std::int64_t>> a(n + 1, std::vector<std::int64_t>(n + 1, 0));
  std::int64_t t = 0;
  for (const auto& tok : g.tokens) {
    for (Vertex z = 1; z <= n; ++z) t += tok.value * a[tok.u][z] * a[tok.v][z];
    a[tok.u][tok.v] += tok.value;
    a[tok.v][tok.u] += tok.value;
  }
  return t;
}

std::int64_t induced_edges(const DenseGraph& g, const std::vector<std::vector<Vertex>>& sets) {
  std::int64_t m = 0;
  for (const auto& s : sets) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) m += g.a[s[i]][s[j]];
  }
  return m;
}

std::int64_t cross_edges(const DenseGraph& g,
                         const std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>>& pairs) {
  std::int64_t m = 0;
  for (const auto& [u, w] : pairs)
    for (Vertex a : u)
      for (Vertex b : w) m += g.a[a][b];
  return m;
}

int matching(const DenseGraph& g) {
  if (g.n > 24) throw SizeGuard("matching oracle limited to n <= 24");
  const std::uint32_t n = g.n;
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v)
      if (u != v && (g.a[u][v] || g.a[v][u])) adj[u - 1] |= 1u << (v - 1);
  // best[mask] = max matching using only vertices in mask; drop the lowest vertex or match it.
  std::vector<std::int8_t> best(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int low = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);
    int b = best[rest];
    for (std::uint32_t cand = adj[low] & rest; cand; cand &= cand - 1) {
      int v = std::countr_zero(cand);
      b = std::max(b, 1 + best[rest & ~(1u << v)]);
    }
    best[mask] = static_cast<std::int8_t>(b);
  }
  return best[(1u << n) - 1];
}

int odd_components(const DenseGraph& g, const std::vector<bool>& removed) {
  std::vector<bool> seen(g.n + 1, false);
  int odd = 0;
  for (Vertex s = 1; s <= g.n; ++s) {
    if (removed[s] || seen[s]) continue;
    int size = 0;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex v = 1; v <= g.n; ++v) {
        if (!removed[v] && !seen[v] && (g.a[u][v] || g.a[v][u])) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    odd += size % 2;
  }
  return odd;
}

int tutte_berge_bound(const DenseGraph& g) {
  if (g.n > 16) throw SizeGuard("Tutte-Berge enumeration limited to n <= 16");
  int best = static_cast<int>(g.n);
  std::vector<bool> removed(g.n + 1);
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    for (Vertex v = 1; v <= g.n; ++v) removed[v] = (mask >> (v - 1)) & 1;
    int val = std::popcount(mask) + static_cast<int>(g.n) - odd_components(g, removed);
    best = std::min(best, val / 2);
  }
  return best;
}

bool mis_check(const DenseGraph& g, const std::vector<Vertex>& u) {
  std::vector<bool> in(g.n + 1, false);
  for (Vertex v : u) {
    if (v < 1 || v > g.n || in[v]) return false;
    in[v] = true;
  }
  for (Vertex a = 1; a <= g.n; ++a) {
    bool has_in_nbr = false;
    for (Vertex b = 1; b <= g.n; ++b) {
      if (a == b || !(g.a[a][b] || g.a[b][a])) continue;
      if (in[a] && in[b]) return false;
      has_in_nbr |= in[b];
    }
    if (!in[a] && !has_in_nbr) return false;
  }
  return true;
}

int components(const DenseGraph& g) {
  std::vector<Vertex> parent(g.n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int c = static_cast<int>(g.n);
  for (Vertex u = 1; u <= g.n; ++u)
    for (Vertex v = 1; v <= g.n; ++v)
      if (u != v && g.a[u][v]) {
        Vertex a = find(u), b = find(v);
        if (a != b) {
          parent[a] = b;
          --c;
        }
      }
  return c;
}

std::optional<std::vector<Vertex>> toposort(const DenseGraph& g) {
  std::vector<int> indeg(g.n + 1, 0);
  for (Vertex u = 1; u <= g.n; ++u)
    for (Vertex v = 1; v <= g.n; ++v)
      if (g.a[u][v]) ++indeg[v];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 1; v <= g.n; ++v)
    if (!indeg[v]) ready.push(v);
  std::vector<Vertex> order;
  while (!ready.empty()) {
    Vertex u = ready.top();
    ready.pop();
    order.push_back(u);
    for (Vertex v = 1; v <= g.n; ++v)
      if (g.a[u][v] && --indeg[v] == 0) ready.push(v);
  }
  if (order.size() != g.n) return std::nullopt;
  return order;
}

bool is_topological_order(const DenseGraph& g, const std::vector<Vertex>& order) {
  if (order.size() != g.n) return false;
  std::vector<std::size_t> pos(g.n + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    if (v < 1 || v > g.n || pos[v]) return false;
    pos[v] = i + 1;
  }
  for (Vertex u = 1; u <= g.n; ++u)
    for (Vertex v = 1; v <= g.n; ++v)
      if (g.a[u][v] && pos[u] >= pos[v]) return false;
  return true;
}

bool acyclic(const DenseGraph& g) { return toposort(g).has_value(); }

std::vector<std::int64_t> bfs(const DenseGraph& g, Vertex src) {
  std::vector<std::int64_t> dist(g.n + 1, -1);
  std::queue<Vertex> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex v = 1; v <= g.n; ++v) {
      if (g.a[u][v] && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

ShortestPaths dijkstra(const DenseGraph& g, Vertex src) {
  ShortestPaths sp{std::vector<std::int64_t>(g.n + 1, -1), std::vector<Vertex>(g.n + 1, 0)};
  std::vector<bool> done(g.n + 1, false);
  sp.dist[src] = 0;
  for (;;) {
    Vertex u = 0;
    for (Vertex v = 1; v <= g.n; ++v)
      if (!done[v] && sp.dist[v] >= 0 && (u == 0 || sp.dist[v] < sp.dist[u])) u = v;
    if (u == 0) break;
    done[u] = true;
    for (Vertex v = 1; v <= g.n; ++v) {
      std::int64_t w = g.a[u][v];
      if (w <= 0 || done[v]) continue;
      if (sp.dist[v] < 0 || sp.dist[u] + w < sp.dist[v]) {
        sp.dist[v] = sp.dist[u] + w;
        sp.prev[v] = u;
      }
    }
  }
  return sp;
}

}  // namespace adsv::oracle
