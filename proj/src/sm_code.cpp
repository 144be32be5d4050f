#include "ldgmsm/sm_code.hpp"

#include "ldgmsm/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldgmsm {

SmCode SmCode::from_generator(BitMatrix gen) {
    SmCode sm;
    auto res = rref(gen);
    if (res.pivots.size() != gen.rows())
        throw std::invalid_argument("SmCode: generator is rank-deficient");
    sm.distance_ = min_distance(gen);
    sm.column_weights_ = gen.col_weights();
    sm.pivots_ = std::move(res.pivots);
    sm.recover_ = std::move(res.transform);

    // parity rows from the rref free columns, as in parity_check_of
    const std::size_t n = gen.cols();
    const std::size_t l = gen.rows();
    std::vector<bool> is_pivot(n, false);
    for (auto p : sm.pivots_)
        is_pivot[p] = true;
    BitMatrix h(n - l, n);
    std::size_t hr = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        h.set(hr, f, true);
        for (std::size_t p = 0; p < l; ++p)
            if (res.rref.get(p, f))
                h.set(hr, sm.pivots_[p], true);
        ++hr;
    }
    sm.parity_ = std::move(h);
    sm.gen_ = std::move(gen);
    return sm;
}

std::size_t SmCode::max_column_weight() const {
    return column_weights_.empty() ? 0 : *std::max_element(column_weights_.begin(), column_weights_.end());
}

BitVec SmCode::recover_message(const BitVec& word) const {
    if (word.size() != length())
        throw std::invalid_argument("recover_message: length mismatch");
    BitVec u(dim());
    for (std::size_t p = 0; p < pivots_.size(); ++p)
        if (word.get(pivots_[p]))
            u.set(p, true);
    return encode_message(u, recover_);
}

std::size_t d_max_bound(std::size_t rows, std::size_t cols, std::size_t col_weight) {
    if (rows == 0 || cols == 0 || col_weight == 0)
        throw std::invalid_argument("d_max_bound: arguments must be positive");
    return cols * col_weight / rows;
}

Fraction min_improvement_factor(std::size_t col_weight) {
    if (col_weight < 1)
        throw std::invalid_argument("min_improvement_factor: column weight must be >= 1");
    return Fraction{1, static_cast<long>(col_weight)};
}

std::size_t min_sm_columns(std::size_t d, std::size_t l, std::size_t col_weight) {
    if (col_weight < 1)
        throw std::invalid_argument("min_sm_columns: column weight must be >= 1");
    return (d * l + col_weight - 1) / col_weight;
}

SmCode repetition_sm_code(std::size_t l, std::size_t r) {
    if (l < 1 || r < 1)
        throw std::invalid_argument("repetition_sm_code: l and r must be >= 1");
    BitMatrix gen(l, l * r);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < r; ++j)
            gen.set(i, i * r + j, true);
    return SmCode::from_generator(std::move(gen));
}

MeasuredStabilizerSet encode_stabilizers(const StabilizerCode& code, const SmCode& sm) {
    if (sm.dim() != code.num_generators())
        throw std::invalid_argument("encode_stabilizers: SM rows must match the generator count");
    MeasuredStabilizerSet ms{code, sm, {}};
    ms.elements.reserve(sm.length());
    for (std::size_t k = 0; k < sm.length(); ++k) {
        PauliVec elem(code.n());
        for (std::size_t i = 0; i < sm.dim(); ++i)
            if (sm.gen().get(i, k))
                elem += code.generators()[i];
        ms.elements.push_back(std::move(elem));
    }
    return ms;
}

BitVec measured_syndrome(const MeasuredStabilizerSet& ms, const PauliVec& qubit_error,
                         const BitVec& meas_error) {
    if (qubit_error.num_qubits() != ms.source.n())
        throw std::invalid_argument("measured_syndrome: qubit error length mismatch");
    if (meas_error.size() != ms.elements.size())
        throw std::invalid_argument("measured_syndrome: measurement error length mismatch");
    BitVec out = meas_error;
    for (std::size_t k = 0; k < ms.elements.size(); ++k)
        if (trace_inner_product(ms.elements[k], qubit_error))
            out.flip(k);
    return out;
}

std::vector<std::size_t> stabilizer_weight_profile(const MeasuredStabilizerSet& ms) {
    std::vector<std::size_t> w(ms.elements.size());
    for (std::size_t k = 0; k < ms.elements.size(); ++k)
        w[k] = ms.elements[k].weight();
    return w;
}

SmLookupDecoder build_sm_lookup_decoder(const SmCode& sm, std::size_t max_weight,
                                        std::uint64_t entry_cap) {
    const std::size_t n = sm.length();
    std::uint64_t total = 0;
    for (std::size_t w = 0; w <= max_weight; ++w) {
        const auto c = subset_count(n, w);
        if (c > entry_cap - total)
            throw std::invalid_argument("SM decoder enumeration exceeds the entry cap");
        total += c;
    }

    // Parity syndrome of a weight-w pattern is the XOR of the touched columns.
    const BitMatrix parity_cols = sm.parity().transpose();

    std::unordered_map<BitVec, BitVec, BitVecHash> table;
    table.reserve(static_cast<std::size_t>(total));
    for (std::size_t w = 0; w <= max_weight; ++w) {
        for_each_weight_subset(n, w, [&](const std::vector<std::size_t>& idx) {
            BitVec syn(sm.parity().rows());
            BitVec pattern(n);
            for (auto i : idx) {
                syn ^= parity_cols.row(i);
                pattern.set(i, true);
            }
            auto [it, inserted] = table.try_emplace(syn, pattern);
            if (!inserted && it->second.weight() == w && pattern.lex_less(it->second))
                it->second = pattern;
        });
    }
    return SmLookupDecoder(std::move(table), max_weight);
}

SmDecodeResult decode_measured(const SmCode& sm, const SmLookupDecoder& dec, const BitVec& measured) {
    if (measured.size() != sm.length())
        throw std::invalid_argument("decode_measured: length mismatch");
    const BitVec parity_syndrome = sm.parity().mult_vec(measured);
    const BitVec* pattern = dec.lookup(parity_syndrome);
    if (!pattern)
        return SmDecodeResult{sm.recover_message(measured), false};
    BitVec corrected = measured;
    corrected ^= *pattern;
    const bool ok = sm.is_codeword(corrected);
    return SmDecodeResult{sm.recover_message(corrected), ok};
}

} // namespace ldgmsm
