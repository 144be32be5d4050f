#pragma once

#include "ldgmsm/bitmatrix.hpp"
#include "ldgmsm/pauli.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace ldgmsm {

/// An [[n, k]] stabilizer code given by its n-k generators and one
/// logical X/Z pair. Immutable after construction; group-membership
/// queries run against a row-reduced symplectic form cached up front.
class StabilizerCode {
public:
    StabilizerCode(std::size_t n, std::size_t k, std::vector<PauliVec> generators,
                   PauliVec logical_x, PauliVec logical_z);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t num_generators() const { return generators_.size(); }
    const std::vector<PauliVec>& generators() const { return generators_; }
    const PauliVec& logical_x() const { return logical_x_; }
    const PauliVec& logical_z() const { return logical_z_; }

    /// Bit i = trace inner product of generator i with e.
    BitVec syndrome(const PauliVec& e) const;

    /// True iff e lies in the row space of the generators (symplectic form).
    bool in_stabilizer_group(const PauliVec& e) const;

    /// A residual error is a logical failure unless it is a stabilizer.
    bool is_logical_failure(const PauliVec& residual) const { return !in_stabilizer_group(residual); }

private:
    std::size_t n_, k_;
    std::vector<PauliVec> generators_;
    PauliVec logical_x_, logical_z_;
    BitMatrix symp_rref_;
    std::vector<std::size_t> symp_pivots_;
};

/// Distance-d rotated surface code: n = d^2 data qubits indexed
/// (row-1)*d + col, logical Z along row 1 and logical X along column 1.
/// Bulk 2x2 plaquettes alternate X/Z by cell checkerboard parity;
/// weight-2 X checks sit on the top/bottom edges and weight-2 Z checks
/// on the left/right edges.
StabilizerCode build_rotated_surface_code(std::size_t d);

/// Syndrome -> minimum-weight correction table over all Paulis of weight
/// <= max_weight. Ties at equal weight resolve to the lexicographically
/// smallest PauliVec (I < X < Y < Z, lowest qubit first).
class QuantumLookupDecoder {
public:
    QuantumLookupDecoder(std::unordered_map<BitVec, PauliVec, BitVecHash> table, std::size_t max_weight)
        : table_(std::move(table)), max_weight_(max_weight) {}

    /// Null when the syndrome has no entry at this enumeration weight.
    const PauliVec* decode(const BitVec& syndrome) const {
        auto it = table_.find(syndrome);
        return it == table_.end() ? nullptr : &it->second;
    }

    std::size_t max_weight() const { return max_weight_; }
    std::size_t size() const { return table_.size(); }
    const std::unordered_map<BitVec, PauliVec, BitVecHash>& table() const { return table_; }

private:
    std::unordered_map<BitVec, PauliVec, BitVecHash> table_;
    std::size_t max_weight_;
};

QuantumLookupDecoder build_quantum_lookup_decoder(const StabilizerCode& code, std::size_t max_weight,
                                                  std::uint64_t entry_cap = 20'000'000);

} // namespace ldgmsm
