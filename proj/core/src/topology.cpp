#include "dsgd/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <set>
#include <sstream>

#include "dsgd/errors.hpp"

namespace dsgd {

namespace {

CommGraph from_edge_set(int n, const std::set<std::pair<int, int>>& edges) {
  CommGraph g;
  g.n = n;
  g.out.assign(n, {});
  g.in.assign(n, {});
  for (const auto& [i, j] : edges) {
    g.out[i].push_back(j);
    g.in[j].push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    std::sort(g.out[i].begin(), g.out[i].end());
    std::sort(g.in[i].begin(), g.in[i].end());
  }
  return g;
}

void add_bidi(std::set<std::pair<int, int>>& edges, int a, int b) {
  edges.insert({a, b});
  edges.insert({b, a});
}

std::set<std::pair<int, int>> ring_edges(int n, int offset_base) {
  // Ring over nodes [offset_base, offset_base + n) with self-loops.
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    int a = offset_base + i;
    edges.insert({a, a});
    add_bidi(edges, a, offset_base + (i + 1) % n);
    add_bidi(edges, a, offset_base + (i + n - 1) % n);
  }
  return edges;
}

void add_chords(std::set<std::pair<int, int>>& edges, int n, int offset_base) {
  for (int i = 0; i < n; ++i)
    add_bidi(edges, offset_base + i, offset_base + (i + n / 2) % n);
}

}  // namespace

bool CommGraph::has_edge(int i, int j) const {
  const auto& v = out[i];
  return std::binary_search(v.begin(), v.end(), j);
}

CommGraph CommGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::pair<int, int>> e(edges.begin(), edges.end());
  for (int i = 0; i < n; ++i) e.insert({i, i});
  return from_edge_set(n, e);
}

CommGraph build_ring(int n) {
  if (n < 3) throw ConfigError("ring topology requires n >= 3, got n=" + std::to_string(n));
  return from_edge_set(n, ring_edges(n, 0));
}

CommGraph build_ring_based(int n) {
  if (n < 4 || n % 2 != 0)
    throw ConfigError("ring_based topology requires even n >= 4, got n=" + std::to_string(n));
  auto edges = ring_edges(n, 0);
  add_chords(edges, n, 0);
  return from_edge_set(n, edges);
}

CommGraph build_double_ring(int n) {
  if (n < 8 || n % 4 != 0)
    throw ConfigError("double_ring topology requires n divisible by 4 and n >= 8, got n=" +
                      std::to_string(n));
  int half = n / 2;
  auto edges = ring_edges(half, 0);
  add_chords(edges, half, 0);
  auto upper = ring_edges(half, half);
  edges.insert(upper.begin(), upper.end());
  add_chords(edges, half, half);
  for (int i = 0; i < half; ++i) add_bidi(edges, i, i + half);
  return from_edge_set(n, edges);
}

CommGraph build_clustered(const std::vector<int>& cluster_sizes) {
  if (cluster_sizes.size() < 2)
    throw ConfigError("clustered topology requires at least 2 clusters");
  for (int s : cluster_sizes)
    if (s < 1) throw ConfigError("cluster sizes must be positive");

  std::set<std::pair<int, int>> edges;
  std::vector<int> gateways;  // lowest-numbered node of each cluster
  int base = 0;
  for (int size : cluster_sizes) {
    gateways.push_back(base);
    for (int a = 0; a < size; ++a) {
      edges.insert({base + a, base + a});
      for (int b = a + 1; b < size; ++b) add_bidi(edges, base + a, base + b);
    }
    base += size;
  }
  int m = static_cast<int>(gateways.size());
  for (int c = 0; c < m; ++c) add_bidi(edges, gateways[c], gateways[(c + 1) % m]);
  return from_edge_set(base, edges);
}

CommGraph single_node_graph() {
  CommGraph g;
  g.n = 1;
  g.out = {{0}};
  g.in = {{0}};
  return g;
}

CommGraph reverse(const CommGraph& g) {
  CommGraph r;
  r.n = g.n;
  r.out = g.in;
  r.in = g.out;
  return r;
}

int shortest_path_len(const CommGraph& g, int from, int to) {
  if (from < 0 || from >= g.n || to < 0 || to >= g.n)
    throw ConfigError("shortest_path_len: node id out of range");
  if (from == to) return 0;
  std::vector<int> dist(g.n, -1);
  dist[from] = 0;
  std::deque<int> q{from};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.out[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        if (w == to) return dist[w];
        q.push_back(w);
      }
    }
  }
  throw NoPathError("no directed path from " + std::to_string(from) + " to " +
                    std::to_string(to));
}

std::vector<std::vector<int>> all_pairs_shortest(const CommGraph& g) {
  std::vector<std::vector<int>> dist(g.n, std::vector<int>(g.n, -1));
  for (int s = 0; s < g.n; ++s) {
    dist[s][s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : g.out[v]) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push_back(w);
        }
      }
    }
  }
  return dist;
}

bool strongly_connected(const CommGraph& g) {
  auto dist = all_pairs_shortest(g);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (dist[i][j] < 0) return false;
  return true;
}

WeightMatrix uniform_weights(const CommGraph& g) {
  WeightMatrix m;
  m.n = g.n;
  m.w.assign(static_cast<size_t>(g.n) * g.n, 0.0);
  for (int j = 0; j < g.n; ++j) {
    double wij = 1.0 / static_cast<double>(g.in[j].size());
    for (int i : g.in[j]) m.w[static_cast<size_t>(i) * g.n + j] = wij;
  }
  constexpr double kTol = 1e-9;
  m.doubly_stochastic = true;
  for (int i = 0; i < g.n && m.doubly_stochastic; ++i) {
    double row = 0.0;
    for (int j = 0; j < g.n; ++j) row += m.at(i, j);
    if (std::abs(row - 1.0) > kTol) m.doubly_stochastic = false;
  }
  return m;
}

static long bound_term(long b0, int len) { return b0 * static_cast<long>(len); }

GapBound gap_bound(const GapSetting& setting, int i, int j,
                   const std::vector<std::vector<int>>& dist) {
  if (i == j) return GapBound::of(0);
  int len_ji = dist[j][i];
  int len_ij = dist[i][j];
  if (len_ji < 0 || len_ij < 0)
    throw NoPathError("gap_bound requires a strongly connected graph");

  using K = GapSetting::Kind;
  switch (setting.kind) {
    case K::Standard:
      return GapBound::of(len_ji);
    case K::Staleness:
      return GapBound::of(bound_term(setting.staleness + 1, len_ji));
    case K::Backup:
    case K::Hybrid:
      return GapBound::inf();
    case K::NotifyAck:
      return GapBound::of(std::min<long>(len_ji, 2L * len_ij));
    case K::Token: {
      long token_term = bound_term(setting.max_ig, len_ij);
      switch (setting.base) {
        case K::Standard:
          return GapBound::of(std::min<long>(len_ji, token_term));
        case K::Staleness:
          return GapBound::of(
              std::min<long>(bound_term(setting.staleness + 1, len_ji), token_term));
        case K::Backup:
        case K::Hybrid:
          // Base bound is unbounded, so only the token term survives.
          return GapBound::of(token_term);
        default:
          throw ConfigError("token gap bound: unsupported base setting");
      }
    }
  }
  throw ConfigError("gap_bound: unknown setting");
}

GapBound gap_bound(const GapSetting& setting, int i, int j, const CommGraph& g) {
  return gap_bound(setting, i, j, all_pairs_shortest(g));
}

std::string adjacency_json(const CommGraph& g) {
  std::ostringstream os;
  os << "{\"n\": " << g.n << ", \"out_neighbors\": [";
  for (int i = 0; i < g.n; ++i) {
    if (i) os << ", ";
    os << "[";
    for (size_t k = 0; k < g.out[i].size(); ++k) {
      if (k) os << ", ";
      os << g.out[i][k];
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

std::string weights_csv(const WeightMatrix& w) {
  std::string s;
  char buf[64];
  for (int i = 0; i < w.n; ++i) {
    for (int j = 0; j < w.n; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", w.at(i, j));
      s += buf;
      s += (j + 1 < w.n) ? ',' : '\n';
    }
  }
  return s;
}

}  // namespace dsgd
