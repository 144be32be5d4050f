#pragma once

#include "ldgmsm/bitmatrix.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace ldgmsm {

/// Symbol-node degree multiset, kept nondecreasing.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<int> values);
    static DegreeSequence uniform(std::size_t count, int degree);

    const std::vector<int>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<int> values_;
};

/// Nonnegative-integer incidence matrix of a bipartite base graph;
/// entries above 1 are multi-edges.
struct Protograph {
    std::size_t n_checks = 0, n_symbols = 0;
    std::vector<std::vector<int>> b; // [n_checks][n_symbols]

    Protograph() = default;
    Protograph(std::size_t nc, std::size_t nv)
        : n_checks(nc), n_symbols(nv), b(nc, std::vector<int>(nv, 0)) {}

    int col_sum(std::size_t j) const;
    int row_sum(std::size_t i) const;
    std::vector<int> col_sums() const;
    std::vector<int> row_sums() const;

    bool operator==(const Protograph&) const = default;
};

/// Progressive edge growth: place column-j edges one at a time on the
/// check at maximal BFS distance from symbol j's current tree, preferring
/// low check degree; remaining ties are broken uniformly from the seed.
/// Multi-edges appear only once every check is adjacent.
Protograph peg_protograph(std::size_t n_checks, std::size_t n_symbols, const DegreeSequence& degrees,
                          std::uint64_t seed,
                          int max_multiplicity = std::numeric_limits<int>::max());

/// N x N permutation with row i's one at column (i + r) mod N.
BitMatrix circulant(std::size_t n, std::size_t r);

/// Protograph plus per-entry circulant shifts; expands to the
/// (n_checks*N) x (n_symbols*N) binary matrix of the N-fold graph cover.
struct QcLift {
    Protograph proto;
    std::size_t lift_factor = 0;
    // shifts[i][j]: the b_ij distinct shift values of entry (i, j), descending
    std::vector<std::vector<std::vector<int>>> shifts;

    BitMatrix expand() const;

    bool operator==(const QcLift&) const = default;
};

QcLift make_qc_lift(Protograph proto, std::size_t lift_factor,
                    std::vector<std::vector<std::vector<int>>> shifts);

/// Greedy shift assignment, edge by edge in column-major order: each new
/// circulant takes a shift maximizing the shortest lifted cycle through
/// it (BFS on the partially lifted Tanner graph); remaining ties are
/// broken uniformly from the seed.
QcLift qc_peg_shifts(const Protograph& proto, std::size_t lift_factor, std::uint64_t seed);

/// Text format: header "N=<lifting factor>", rows on lines, entries
/// separated by ';', each entry '0' | '1' | 'x' | 'x^k' terms joined by
/// '+'. Whitespace is ignored.
QcLift parse_poly_matrix(const std::string& text);
std::string format_poly_matrix(const QcLift& lift);

/// Shortest cycle length in the Tanner graph of a binary matrix
/// (rows = checks, columns = symbols); 0 when acyclic.
std::size_t tanner_girth(const BitMatrix& m);

} // namespace ldgmsm
