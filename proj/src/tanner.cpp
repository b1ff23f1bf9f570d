#include "pgq/tanner.hpp"

#include <queue>
#include <vector>

namespace pgq {

TannerStats analyze(const BitMatrix& h) {
    TannerStats st;
    const std::size_t rows = h.rows(), cols = h.cols();
    const auto& k = kernels::active();

    std::size_t ones = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t w = h.row_weight(r);
        ++st.row_degree_histogram[w];
        ones += w;
    }
    std::vector<std::size_t> col_deg(cols, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (h.get(r, c)) ++col_deg[c];
    for (std::size_t c = 0; c < cols; ++c) ++st.col_degree_histogram[col_deg[c]];

    for (std::size_t i = 0; i < rows; ++i) {
        auto ri = h.row_words(i);
        for (std::size_t j = i + 1; j < rows; ++j) {
            auto rj = h.row_words(j);
            std::size_t ov = k.and_popcount(ri.data(), rj.data(), ri.size());
            ++st.overlap_spectrum[ov];
            if (ov >= 2) st.four_cycle_count += static_cast<unsigned long long>(ov) * (ov - 1) / 2;
        }
    }

    st.girth = girth(h);
    st.density = rows && cols ? static_cast<double>(ones) / (static_cast<double>(rows) * cols) : 0.0;
    return st;
}

/*
 * Girth by BFS in the bipartite graph whose vertices are the rows and
 * columns of h. From each root, every non-tree edge (v,w) closes a walk of
 * length dist[v]+dist[w]+1 that contains a simple cycle no longer than
 * itself, so the closure length never undercounts; for a root on a shortest
 * cycle the closure is exact. Minimizing over closures and roots gives the
 * girth. Every cycle alternates rows and columns, so row roots suffice.
 */
std::optional<int> girth(const BitMatrix& h) {
    const std::size_t rows = h.rows(), cols = h.cols();
    std::vector<std::vector<std::uint32_t>> row_adj(rows), col_adj(cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (h.get(r, c)) {
                row_adj[r].push_back(static_cast<std::uint32_t>(c));
                col_adj[c].push_back(static_cast<std::uint32_t>(r));
            }

    const std::size_t total = rows + cols;  // vertex ids: rows first, then cols
    int best = -1;
    std::vector<int> dist(total);
    std::vector<std::int64_t> parent(total);

    for (std::size_t root = 0; root < rows; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<std::uint32_t> q;
        dist[root] = 0;
        q.push(static_cast<std::uint32_t>(root));
        int found = -1;
        while (!q.empty()) {
            std::uint32_t v = q.front();
            q.pop();
            // closures reachable from v have length >= 2*dist[v]
            int bound = found > 0 ? found : (best > 0 ? best : -1);
            if (bound > 0 && 2 * dist[v] >= bound) continue;
            bool is_row = v < rows;
            const auto& nbrs = is_row ? row_adj[v] : col_adj[v - rows];
            for (std::uint32_t u : nbrs) {
                std::uint32_t w = is_row ? u + static_cast<std::uint32_t>(rows) : u;
                if (static_cast<std::int64_t>(w) == parent[v]) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else {
                    // two paths from the root meet; cycle through root has
                    // length dist[v] + dist[w] + 1 (odd sums cannot occur in
                    // a bipartite graph except via shared edges, filtered by
                    // the parent check)
                    int len = dist[v] + dist[w] + 1;
                    if (len % 2 == 0 && (found < 0 || len < found)) found = len;
                }
            }
        }
        if (found > 0 && (best < 0 || found < best)) best = found;
        if (best == 4) break;  // girth cannot be smaller
    }
    if (best < 0) return std::nullopt;
    return best;
}

unsigned long long four_cycle_count_by_column_pairs(const BitMatrix& h) {
    BitMatrix t = h.transposed();
    const auto& k = kernels::active();
    unsigned long long count = 0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
        auto ri = t.row_words(i);
        for (std::size_t j = i + 1; j < t.rows(); ++j) {
            auto rj = t.row_words(j);
            std::size_t ov = k.and_popcount(ri.data(), rj.data(), ri.size());
            if (ov >= 2) count += static_cast<unsigned long long>(ov) * (ov - 1) / 2;
        }
    }
    return count;
}

}  // namespace pgq
