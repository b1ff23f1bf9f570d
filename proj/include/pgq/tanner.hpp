#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "pgq/bitmat.hpp"

// Sparsity and cycle structure of the bipartite check/bit (Tanner) graph of
// a parity-check matrix: degree profiles, the row-pair overlap spectrum,
// four-cycle counts, and girth.

namespace pgq {

struct TannerStats {
    std::map<std::size_t, std::size_t> row_degree_histogram;
    std::map<std::size_t, std::size_t> col_degree_histogram;
    // overlap value -> number of unordered row pairs with that overlap
    std::map<std::size_t, std::size_t> overlap_spectrum;
    unsigned long long four_cycle_count = 0;  // sum over row pairs of C(overlap, 2)
    std::optional<int> girth;                 // nullopt when the graph is acyclic
    double density = 0.0;                     // ones / (rows * cols)
};

TannerStats analyze(const BitMatrix& h);

// Shortest cycle length in the bipartite graph (always even, >= 4), by BFS
// from every check vertex. nullopt when acyclic.
std::optional<int> girth(const BitMatrix& h);

// Independent four-cycle count over column pairs; must agree with the
// row-pair route in TannerStats.
unsigned long long four_cycle_count_by_column_pairs(const BitMatrix& h);

}  // namespace pgq
