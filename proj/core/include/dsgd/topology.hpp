#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dsgd {

// Directed communication graph. Every node carries a self-loop; in/out
// neighbor lists are sorted and include the node itself. All builders
// produce strongly connected graphs.
struct CommGraph {
  int n = 0;
  std::vector<std::vector<int>> out;  // out[i] = sorted out-neighbors of i, incl. i
  std::vector<std::vector<int>> in;   // in[i]  = sorted in-neighbors of i, incl. i

  bool has_edge(int i, int j) const;
  int in_degree(int i) const { return static_cast<int>(in[i].size()); }
  int out_degree(int i) const { return static_cast<int>(out[i].size()); }

  // Builds a graph from an explicit edge list (self-loops added for all
  // nodes). Used by tests for hand-crafted directed graphs.
  static CommGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

// Benchmark topologies. Edges are bidirectional.
CommGraph build_ring(int n);                                  // n >= 3
CommGraph build_ring_based(int n);                            // even n >= 4; ring + antipodal chord
CommGraph build_double_ring(int n);                           // n % 4 == 0, n >= 8
CommGraph build_clustered(const std::vector<int>& cluster_sizes);  // >= 2 clusters
CommGraph single_node_graph();                                // n = 1, self-loop only

CommGraph reverse(const CommGraph& g);

// BFS over directed edges; 0 when from == to; throws NoPathError when
// unreachable (only possible on malformed graphs).
int shortest_path_len(const CommGraph& g, int from, int to);

// dist[i][j] = shortest_path_len(g, i, j), or -1 when unreachable.
std::vector<std::vector<int>> all_pairs_shortest(const CommGraph& g);

bool strongly_connected(const CommGraph& g);

// Influence weights: w[i][j] = 1 / |N_in(j)| for i in N_in(j), else 0.
// Column sums are always 1; the matrix is doubly stochastic only when the
// graph is in-degree-regular. Callers that need the doubly stochastic
// guarantee must check the flag.
struct WeightMatrix {
  int n = 0;
  std::vector<double> w;  // row-major n*n
  bool doubly_stochastic = false;

  double at(int i, int j) const { return w[static_cast<size_t>(i) * n + j]; }
};

WeightMatrix uniform_weights(const CommGraph& g);

// ||lambda_1|| - ||lambda_2|| with eigenvalue norms sorted descending,
// computed by an iterative solver to tolerance 1e-8. Requires a doubly
// stochastic input (then ||lambda_1|| = 1); throws ConfigError otherwise.
double spectral_gap(const WeightMatrix& w);

// Iteration-gap bound. UNBOUNDED is a distinct state, never a large integer.
struct GapBound {
  bool unbounded = false;
  long value = 0;

  static GapBound inf() { return GapBound{true, 0}; }
  static GapBound of(long v) { return GapBound{false, v}; }
  bool allows(long gap) const { return unbounded || gap <= value; }
};

// Synchronization setting for bound queries. Token settings wrap a base
// setting; b0 in the bound formula is derived from the base.
struct GapSetting {
  enum class Kind { Standard, Staleness, Backup, Hybrid, NotifyAck, Token };
  Kind kind = Kind::Standard;
  int staleness = 0;               // s, for Staleness (and Token over Staleness)
  int max_ig = 0;                  // for Token
  Kind base = Kind::Standard;      // for Token: the setting tokens are applied to

  static GapSetting standard() { return {}; }
  static GapSetting with_staleness(int s) { return {Kind::Staleness, s, 0, Kind::Standard}; }
  static GapSetting backup() { return {Kind::Backup, 0, 0, Kind::Standard}; }
  static GapSetting hybrid(int s) { return {Kind::Hybrid, s, 0, Kind::Standard}; }
  static GapSetting notify_ack() { return {Kind::NotifyAck, 0, 0, Kind::Standard}; }
  static GapSetting token(int max_ig, Kind base, int s = 0) {
    return {Kind::Token, s, max_ig, base};
  }
};

// Upper bound on Iter(i) - Iter(j) for the given setting. i == j yields 0.
GapBound gap_bound(const GapSetting& setting, int i, int j, const CommGraph& g);

// Same, but with precomputed all-pairs distances (dist[a][b] = len a->b).
GapBound gap_bound(const GapSetting& setting, int i, int j,
                   const std::vector<std::vector<int>>& dist);

// Serialized adjacency list: {"n": ..., "out_neighbors": [[...], ...]}.
std::string adjacency_json(const CommGraph& g);

// Row-major CSV, 17 significant digits per entry.
std::string weights_csv(const WeightMatrix& w);

}  // namespace dsgd
