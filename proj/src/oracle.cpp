#include "domipoly/oracle.hpp"

#include <cstdint>
#include <vector>

#include "domipoly/errors.hpp"

namespace domipoly::oracle {

namespace {

// Walks the include/exclude tree over the free vertices, carrying the
// current subset and its closed neighborhood. Counts land in a dense
// (|W|, |N(W)|) grid; single cells stay below C(30,15) so uint64 suffices.
void enumerate(const std::vector<VertexSet>& closed, size_t idx, VertexSet w, VertexSet nb,
               std::vector<std::vector<std::uint64_t>>& grid) {
    if (idx == closed.size()) {
        ++grid[vs::count(w)][vs::count(nb & ~w)];
        return;
    }
    enumerate(closed, idx + 1, w, nb, grid);
    enumerate(closed, idx + 1, w | closed[idx] /*unused bits*/, nb, grid);
}

}  // namespace

BivariatePolynomial j_conditional(const Graph& g, const ConstraintSet& c, int cap) {
    const int n = g.order();
    if (n > cap || n > kHardOracleCap)
        throw GraphTooLarge("oracle cap exceeded: order " + std::to_string(n) + " > " +
                            std::to_string(std::min<int>(cap, kHardOracleCap)));
    if ((c.forced_in & c.forced_out) != 0)
        throw PreconditionFailed("forced_in and forced_out overlap");
    if ((c.forced_in | c.forced_out) & ~g.vertices())
        throw PreconditionFailed("constraint vertices out of range");

    VertexSet w0 = c.forced_in;
    VertexSet nb0 = g.closed_neighborhood(w0);

    std::vector<int> free = vs::members(g.vertices() & ~c.forced_in & ~c.forced_out);
    std::vector<std::vector<std::uint64_t>> grid(n + 1, std::vector<std::uint64_t>(n + 1, 0));

    // iterative over the free list via recursion on (w, nb)
    struct Walker {
        const Graph& g;
        const std::vector<int>& free;
        std::vector<std::vector<std::uint64_t>>& grid;
        void walk(size_t idx, VertexSet w, VertexSet nb) {
            if (idx == free.size()) {
                ++grid[vs::count(w)][vs::count(nb & ~w)];
                return;
            }
            const int v = free[idx];
            walk(idx + 1, w, nb);
            walk(idx + 1, w | vs::bit(v), nb | g.closed_neighbors(v));
        }
    };
    Walker{g, free, grid}.walk(0, w0, nb0);

    BivariatePolynomial out;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            if (grid[a][b]) out.add_term(a, b, Coeff(grid[a][b]));
    return out;
}

BivariatePolynomial j(const Graph& g, int cap) { return j_conditional(g, ConstraintSet{}, cap); }

}  // namespace domipoly::oracle
