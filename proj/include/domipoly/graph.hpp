#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domipoly {

// Vertex subsets as bitmasks; the order cap of 62 (graph6 short form) makes
// one 64-bit word enough everywhere.
using VertexSet = std::uint64_t;

constexpr int kMaxOrder = 62;

namespace vs {
inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }
inline int count(VertexSet s) { return std::popcount(s); }
inline VertexSet all(int n) { return n == 0 ? 0 : (~VertexSet{0} >> (64 - n)); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }
std::vector<int> members(VertexSet s);
VertexSet from(const std::vector<int>& vertices);
}  // namespace vs

// Simple undirected graph on densely labeled vertices 0..n-1, adjacency kept
// as one neighbor bitmask per vertex. No self-loops; symmetric by
// construction. Immutable in spirit: mutations happen while building, all
// graph operations return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    int order() const { return order_; }
    int edge_count() const;
    VertexSet vertices() const { return vs::all(order_); }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return vs::contains(adj_[u], v); }

    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighbors(int v) const { return adj_[v] | vs::bit(v); }
    int valency(int v) const { return vs::count(adj_[v]); }

    // N[W]: W together with everything adjacent to it.
    VertexSet closed_neighborhood(VertexSet w) const;
    // N(W) := N[W] - W. Not the union of the members' open neighborhoods.
    VertexSet open_neighborhood(VertexSet w) const { return closed_neighborhood(w) & ~w; }

    bool is_complete() const;
    bool is_connected() const;

    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    bool operator==(const Graph& rhs) const = default;

private:
    int order_ = 0;
    std::vector<VertexSet> adj_;
};

// Induced subgraph on V - drop, vertices relabeled densely in ascending
// order. old_to_new[v] is -1 for dropped vertices.
struct DeletionResult {
    Graph graph;
    std::vector<int> old_to_new;
};
DeletionResult delete_vertices(const Graph& g, VertexSet drop);

// G \ v: clique added on N(v), then v deleted (dense relabeling as above).
Graph contract_vertex(const Graph& g, int v);

// True iff u is a neighbor of v with N[v] subseteq N[u].
bool is_domination_covered(const Graph& g, int v, int u);

struct Subgraph {
    Graph graph;
    std::vector<int> orig;  // orig[new index] = original index
};
// Components ordered by smallest original vertex; vertices inside each
// component keep ascending original order.
std::vector<Subgraph> connected_components(const Graph& g);

VertexSet cut_vertices(const Graph& g);
std::vector<std::pair<int, int>> cut_edges(const Graph& g);

// One piece per component of G - v, each with its own copy of v.
// cut_copy is v's index inside the piece. Requires connected G; throws
// NotACutVertex when removing v does not disconnect it.
struct CutPiece {
    Graph graph;
    std::vector<int> orig;
    int cut_copy;
};
std::vector<CutPiece> split_at_cut_vertex(const Graph& g, int v);

// graph6 short form (n <= 62), bit-exact per the published encoding.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Plain text edge list: header "n m", then one "u v" pair per line, 0-based.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// Convenience for tests and family constructions.
Graph graph_from_edges(int order, const std::vector<std::pair<int, int>>& edges);

// Relabeled copy: vertex order[i] of g becomes vertex i.
Graph apply_labeling(const Graph& g, const std::vector<int>& order);

// Canonical form key: equal strings iff the graphs are isomorphic. Computed
// by valency/neighborhood colour refinement with exhaustive individualization
// over the first non-singleton cell, taking the minimal graph6 encoding over
// the resulting labelings. Practical for the small orders used here.
std::string canonical_key(const Graph& g);

// Labeling-sensitive key (isomorphism-blind): the graph6 encoding as-is.
std::string exact_key(const Graph& g);

}  // namespace domipoly
