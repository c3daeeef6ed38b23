#include "domipoly/graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

#include "domipoly/errors.hpp"

namespace domipoly {

namespace vs {

std::vector<int> members(VertexSet s) {
    std::vector<int> out;
    out.reserve(count(s));
    while (s) {
        const int v = lowest(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

VertexSet from(const std::vector<int>& vertices) {
    VertexSet s = 0;
    for (int v : vertices) s |= bit(v);
    return s;
}

}  // namespace vs

Graph::Graph(int order) : order_(order), adj_(order, 0) {
    if (order < 0 || order > kMaxOrder)
        throw GraphTooLarge("order " + std::to_string(order) + " outside [0, 62]");
}

int Graph::edge_count() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += vs::count(row);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    assert(u != v && u >= 0 && v >= 0 && u < order_ && v < order_);
    adj_[u] |= vs::bit(v);
    adj_[v] |= vs::bit(u);
}

VertexSet Graph::closed_neighborhood(VertexSet w) const {
    VertexSet out = w;
    VertexSet rest = w;
    while (rest) {
        const int v = vs::lowest(rest);
        rest &= rest - 1;
        out |= adj_[v];
    }
    return out;
}

bool Graph::is_complete() const {
    for (int v = 0; v < order_; ++v)
        if (adj_[v] != (vertices() & ~vs::bit(v))) return false;
    return true;
}

bool Graph::is_connected() const {
    if (order_ <= 1) return true;
    VertexSet seen = vs::bit(0), prev = 0;
    while (prev != seen) {
        prev = seen;
        seen = closed_neighborhood(seen);
    }
    return seen == vertices();
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order_; ++u) {
        VertexSet higher = adj_[u] & ~vs::all(u + 1);
        for (int v : vs::members(higher)) out.emplace_back(u, v);
    }
    return out;
}

DeletionResult delete_vertices(const Graph& g, VertexSet drop) {
    const int n = g.order();
    std::vector<int> old_to_new(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!vs::contains(drop, v)) old_to_new[v] = next++;
    Graph out(next);
    for (auto [u, v] : g.edges())
        if (old_to_new[u] >= 0 && old_to_new[v] >= 0) out.add_edge(old_to_new[u], old_to_new[v]);
    return {std::move(out), std::move(old_to_new)};
}

Graph contract_vertex(const Graph& g, int v) {
    Graph widened = g;
    const auto nbrs = vs::members(g.neighbors(v));
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            widened.add_edge(nbrs[i], nbrs[j]);
    return delete_vertices(widened, vs::bit(v)).graph;
}

bool is_domination_covered(const Graph& g, int v, int u) {
    if (u == v || !g.adjacent(u, v)) return false;
    return (g.closed_neighbors(v) & ~g.closed_neighbors(u)) == 0;
}

std::vector<Subgraph> connected_components(const Graph& g) {
    std::vector<Subgraph> out;
    VertexSet unseen = g.vertices();
    while (unseen) {
        VertexSet comp = vs::bit(vs::lowest(unseen));
        VertexSet prev = 0;
        while (prev != comp) {
            prev = comp;
            comp = g.closed_neighborhood(comp);
        }
        auto verts = vs::members(comp);
        auto [sub, old_to_new] = delete_vertices(g, ~comp & g.vertices());
        out.push_back({std::move(sub), std::move(verts)});
        unseen &= ~comp;
    }
    return out;
}

namespace {

// Lowpoint depth-first traversal collecting articulation points and bridges.
struct CutScan {
    const Graph& g;
    std::vector<int> depth, low, parent;
    VertexSet arts = 0;
    std::vector<std::pair<int, int>> bridges;

    explicit CutScan(const Graph& graph)
        : g(graph), depth(graph.order(), -1), low(graph.order(), 0), parent(graph.order(), -1) {
        for (int v = 0; v < g.order(); ++v)
            if (depth[v] < 0) root(v);
        std::sort(bridges.begin(), bridges.end());
    }

    void root(int r) {
        dfs(r, 0);
        int children = 0;
        for (int w : vs::members(g.neighbors(r)))
            if (parent[w] == r) ++children;
        if (children > 1)
            arts |= vs::bit(r);
        else
            arts &= ~vs::bit(r);
    }

    void dfs(int v, int d) {
        depth[v] = low[v] = d;
        for (int w : vs::members(g.neighbors(v))) {
            if (depth[w] < 0) {
                parent[w] = v;
                dfs(w, d + 1);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= depth[v]) arts |= vs::bit(v);
                if (low[w] > depth[v]) bridges.emplace_back(std::min(v, w), std::max(v, w));
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], depth[w]);
            }
        }
    }
};

}  // namespace

VertexSet cut_vertices(const Graph& g) { return CutScan(g).arts; }

std::vector<std::pair<int, int>> cut_edges(const Graph& g) { return CutScan(g).bridges; }

std::vector<CutPiece> split_at_cut_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw NotACutVertex("vertex out of range");
    auto remainder = delete_vertices(g, vs::bit(v));
    auto comps = connected_components(remainder.graph);
    if (!g.is_connected() || comps.size() < 2)
        throw NotACutVertex("vertex " + std::to_string(v) + " does not disconnect the graph");

    std::vector<int> back(remainder.graph.order());  // remainder index -> original
    for (int w = 0; w < g.order(); ++w)
        if (remainder.old_to_new[w] >= 0) back[remainder.old_to_new[w]] = w;

    std::vector<CutPiece> out;
    for (const auto& comp : comps) {
        // piece vertex set: the component's original vertices plus v, ascending
        std::vector<int> verts;
        verts.reserve(comp.orig.size() + 1);
        for (int w : comp.orig) verts.push_back(back[w]);
        verts.push_back(v);
        std::sort(verts.begin(), verts.end());

        auto piece = delete_vertices(g, g.vertices() & ~vs::from(verts));
        const int copy = piece.old_to_new[v];
        out.push_back({std::move(piece.graph), std::move(verts), copy});
    }
    return out;
}

Graph parse_graph6(std::string_view text) {
    // strip optional header and trailing whitespace
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw MalformedGraph6("empty graph6 string");

    const unsigned char first = static_cast<unsigned char>(text[0]);
    if (first < 63 || first > 125)
        throw MalformedGraph6(first == 126 ? "long-form graph6 not supported (n > 62)"
                                           : "byte out of range");
    const int n = first - 63;
    const int nbits = n * (n - 1) / 2;
    const size_t want = 1 + (nbits + 5) / 6;
    if (text.size() != want)
        throw MalformedGraph6("expected " + std::to_string(want) + " bytes, got " +
                              std::to_string(text.size()));

    Graph g(n);
    int bit = 0;
    for (size_t k = 1; k < text.size(); ++k) {
        const unsigned char raw = static_cast<unsigned char>(text[k]);
        if (raw < 63 || raw > 126) throw MalformedGraph6("byte out of range");
        const int group = raw - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (group >> b) & 1;
            if (bit >= nbits) {
                if (set) throw MalformedGraph6("nonzero padding bits");
                continue;
            }
            if (set) {
                // bit index -> (i, j) in the column-major upper triangle
                int j = 1;
                int acc = bit;
                while (acc >= j) acc -= j, ++j;
                g.add_edge(acc, j);
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
    if (n < 0 || n > kMaxOrder) throw ParseError("edge list: order out of range");
    if (m < 0) throw ParseError("edge list: negative edge count");
    Graph g(static_cast<int>(n));
    for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: vertex out of range");
        if (u == v) throw ParseError("edge list: self-loop");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra) throw ParseError("edge list: trailing tokens");
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    const auto es = g.edges();
    os << g.order() << " " << es.size() << "\n";
    for (auto [u, v] : es) os << u << " " << v << "\n";
    return os.str();
}

Graph graph_from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph apply_labeling(const Graph& g, const std::vector<int>& order) {
    Graph out(g.order());
    std::vector<int> pos(g.order());
    for (int i = 0; i < g.order(); ++i) pos[order[i]] = i;
    for (auto [u, v] : g.edges()) out.add_edge(pos[u], pos[v]);
    return out;
}

std::string exact_key(const Graph& g) { return emit_graph6(g); }

}  // namespace domipoly
