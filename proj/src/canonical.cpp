#include <algorithm>
#include <numeric>
#include <vector>

#include "domipoly/graph.hpp"

namespace domipoly {

namespace {

// Refine colors until stable: each round re-ranks vertices by
// (current color, sorted multiset of neighbor colors). Colors are ranks in
// [0, #classes), so equal color vectors mean equal ordered partitions.
void refine_colors(const Graph& g, std::vector<int>& color) {
    const int n = g.order();
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    while (true) {
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            nb.reserve(g.valency(v));
            for (int w : vs::members(g.neighbors(v))) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            nb.insert(nb.begin(), color[v]);
            sig[v] = {std::move(nb), v};
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a].first < sig[b].first; });
        std::vector<int> next(n);
        int rank = 0;
        for (int k = 0; k < n; ++k) {
            if (k > 0 && sig[order[k]].first != sig[order[k - 1]].first) ++rank;
            next[order[k]] = rank;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

struct KeySearch {
    const Graph& g;
    std::string best;
    bool have_best = false;

    void visit(std::vector<int> color) {
        refine_colors(g, color);
        const int n = g.order();

        // first non-singleton class, by color value
        int target = -1;
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v) ++count[color[v]];
        for (int c = 0; c < n; ++c)
            if (count[c] > 1) {
                target = c;
                break;
            }

        if (target < 0) {
            std::vector<int> order(n);
            for (int v = 0; v < n; ++v) order[color[v]] = v;
            std::string key = emit_graph6(apply_labeling(g, order));
            if (!have_best || key < best) {
                best = std::move(key);
                have_best = true;
            }
            return;
        }

        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            std::vector<int> branched(n);
            for (int w = 0; w < n; ++w)
                branched[w] = color[w] + (w != v && color[w] >= target ? 1 : 0);
            visit(std::move(branched));
        }
    }
};

}  // namespace

std::string canonical_key(const Graph& g) {
    if (g.order() == 0) return emit_graph6(g);
    KeySearch search{g};
    search.visit(std::vector<int>(g.order(), 0));
    return search.best;
}

}  // namespace domipoly
