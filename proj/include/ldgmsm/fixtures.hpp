#pragma once

#include "ldgmsm/peg.hpp"

#include <string>
#include <vector>

namespace ldgmsm {

/// One of the stock [60,24,7] LDGM constructions, in polynomial-matrix text form.
struct Fixture {
    std::string id;
    std::size_t expected_n, expected_k, expected_d;
    std::string poly_text;

    QcLift lift() const { return parse_poly_matrix(poly_text); }
};

/// The six quasi-cyclic [60,24,7] generator matrices shipped with the
/// library: two 2x5 lifts (N=12), two 4x10 lifts (N=6), one 6x15 lift
/// (N=4), and one 8x20 lift (N=3).
const std::vector<Fixture>& builtin_fixtures();

/// Fixture by id; throws when unknown.
const Fixture& builtin_fixture(const std::string& id);

} // namespace ldgmsm
