#pragma once

#include "ldgmsm/bitmatrix.hpp"
#include "ldgmsm/pauli.hpp"
#include "ldgmsm/stabilizer.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace ldgmsm {

/// An [n_sm, l, d] syndrome-measurement code held as its l x n_sm
/// generator matrix, with the parity-check matrix, exact distance,
/// column weights, and the pivot-based message-recovery map cached.
class SmCode {
public:
    static SmCode from_generator(BitMatrix gen);

    const BitMatrix& gen() const { return gen_; }
    const BitMatrix& parity() const { return parity_; }
    std::size_t dim() const { return gen_.rows(); }        // l
    std::size_t length() const { return gen_.cols(); }     // n_sm
    std::size_t distance() const { return distance_; }
    const std::vector<std::size_t>& column_weights() const { return column_weights_; }
    std::size_t max_column_weight() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    BitVec encode(const BitVec& message) const { return encode_message(message, gen_); }

    /// Message s with s * gen = codeword, read off the cached pivot columns.
    /// Applied to non-codewords this is the raw pivot estimate.
    BitVec recover_message(const BitVec& word) const;

    bool is_codeword(const BitVec& word) const { return !parity_.mult_vec(word).any(); }

private:
    SmCode() = default;
    BitMatrix gen_;
    BitMatrix parity_;
    std::size_t distance_ = 0;
    std::vector<std::size_t> column_weights_;
    std::vector<std::size_t> pivots_;
    BitMatrix recover_; // l x l transform: s = (word at pivots) * recover_
};

/// floor(C * w_C / R): the row-weight ceiling on achievable distance for
/// an R x C generator with uniform column weight w_C.
std::size_t d_max_bound(std::size_t rows, std::size_t cols, std::size_t col_weight);

struct Fraction {
    long num, den;
};

/// 1 / w_C: the smallest measurement-count ratio (relative to d*l
/// repetition) that can still reach distance d.
Fraction min_improvement_factor(std::size_t col_weight);

/// ceil(d * l / w_C): the fewest columns admitting distance d at column
/// weight w_C.
std::size_t min_sm_columns(std::size_t d, std::size_t l, std::size_t col_weight);

/// Block generator with row i covering columns [i*r, (i+1)*r): the
/// [r*l, l, r] code of r-fold repeated measurement.
SmCode repetition_sm_code(std::size_t l, std::size_t r);

/// The n_sm stabilizer-group elements selected column-by-column from the
/// SM generator: element k is the product (GF(4) sum) of the source
/// generators with a 1 in column k.
struct MeasuredStabilizerSet {
    StabilizerCode source;
    SmCode sm;
    std::vector<PauliVec> elements;
};

MeasuredStabilizerSet encode_stabilizers(const StabilizerCode& code, const SmCode& sm);

/// Bit k = trace inner product of measured element k with the qubit
/// error, XOR the measurement-error bit k.
BitVec measured_syndrome(const MeasuredStabilizerSet& ms, const PauliVec& qubit_error,
                         const BitVec& meas_error);

std::vector<std::size_t> stabilizer_weight_profile(const MeasuredStabilizerSet& ms);

/// Bounded-distance table: parity syndrome -> minimum-weight measurement
/// error pattern of weight <= max_weight, ties to the lexicographically
/// smallest pattern.
class SmLookupDecoder {
public:
    SmLookupDecoder(std::unordered_map<BitVec, BitVec, BitVecHash> table, std::size_t max_weight)
        : table_(std::move(table)), max_weight_(max_weight) {}

    const BitVec* lookup(const BitVec& parity_syndrome) const {
        auto it = table_.find(parity_syndrome);
        return it == table_.end() ? nullptr : &it->second;
    }

    std::size_t max_weight() const { return max_weight_; }
    std::size_t size() const { return table_.size(); }

private:
    std::unordered_map<BitVec, BitVec, BitVecHash> table_;
    std::size_t max_weight_;
};

SmLookupDecoder build_sm_lookup_decoder(const SmCode& sm, std::size_t max_weight,
                                        std::uint64_t entry_cap = 20'000'000);

struct SmDecodeResult {
    BitVec syndrome; // length l
    bool ok;         // parity syndrome was in the table and correction gave a codeword
};

/// Correct the measured word by table lookup, then solve for the length-l
/// syndrome via the pivot map. Out-of-table syndromes return the raw
/// pivot estimate of the uncorrected word with ok = false.
SmDecodeResult decode_measured(const SmCode& sm, const SmLookupDecoder& dec, const BitVec& measured);

} // namespace ldgmsm
