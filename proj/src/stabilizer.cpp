#include "ldgmsm/stabilizer.hpp"

#include "ldgmsm/enumeration.hpp"

#include <stdexcept>

namespace ldgmsm {

StabilizerCode::StabilizerCode(std::size_t n, std::size_t k, std::vector<PauliVec> generators,
                               PauliVec logical_x, PauliVec logical_z)
    : n_(n), k_(k), generators_(std::move(generators)), logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
    if (generators_.size() != n_ - k_)
        throw std::invalid_argument("StabilizerCode: expected n-k generators");
    for (const auto& g : generators_)
        if (g.num_qubits() != n_)
            throw std::invalid_argument("StabilizerCode: generator length mismatch");
    if (logical_x_.num_qubits() != n_ || logical_z_.num_qubits() != n_)
        throw std::invalid_argument("StabilizerCode: logical operator length mismatch");

    BitMatrix symp(generators_.size(), 2 * n_);
    for (std::size_t i = 0; i < generators_.size(); ++i)
        symp.set_row(i, generators_[i].symplectic());
    auto res = rref(symp);
    symp_rref_ = std::move(res.rref);
    symp_pivots_ = std::move(res.pivots);
}

BitVec StabilizerCode::syndrome(const PauliVec& e) const {
    if (e.num_qubits() != n_)
        throw std::invalid_argument("syndrome: error length mismatch");
    BitVec s(generators_.size());
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (trace_inner_product(generators_[i], e))
            s.set(i, true);
    return s;
}

bool StabilizerCode::in_stabilizer_group(const PauliVec& e) const {
    if (e.num_qubits() != n_)
        throw std::invalid_argument("in_stabilizer_group: error length mismatch");
    BitVec v = e.symplectic();
    for (std::size_t r = 0; r < symp_pivots_.size(); ++r) {
        if (v.get(symp_pivots_[r]))
            v ^= symp_rref_.row(r);
    }
    return !v.any();
}

StabilizerCode build_rotated_surface_code(std::size_t d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("rotated surface code needs odd d >= 3");

    const std::size_t n = d * d;
    const auto qubit = [d](std::size_t r, std::size_t c) { return r * d + c; };

    std::vector<PauliVec> gens;
    gens.reserve(n - 1);
    const auto add_gen = [&](char type, const std::vector<std::size_t>& support) {
        PauliVec g(n);
        for (auto q : support)
            g.set_pauli(q, type);
        gens.push_back(std::move(g));
    };

    // Bulk 2x2 plaquettes on cells (i, j); X-type on even i+j.
    for (std::size_t i = 0; i + 1 < d; ++i) {
        for (std::size_t j = 0; j + 1 < d; ++j) {
            const char type = ((i + j) % 2 == 0) ? 'X' : 'Z';
            add_gen(type, {qubit(i, j), qubit(i, j + 1), qubit(i + 1, j), qubit(i + 1, j + 1)});
        }
    }
    // Weight-2 X checks over the row-0/row-(d-1) edges of Z-type cells.
    for (std::size_t j = 0; j + 1 < d; ++j)
        if (j % 2 == 1)
            add_gen('X', {qubit(0, j), qubit(0, j + 1)});
    for (std::size_t j = 0; j + 1 < d; ++j)
        if ((d - 2 + j) % 2 == 1)
            add_gen('X', {qubit(d - 1, j), qubit(d - 1, j + 1)});
    // Weight-2 Z checks over the col-0/col-(d-1) edges of X-type cells.
    for (std::size_t i = 0; i + 1 < d; ++i)
        if (i % 2 == 0)
            add_gen('Z', {qubit(i, 0), qubit(i + 1, 0)});
    for (std::size_t i = 0; i + 1 < d; ++i)
        if ((i + d - 2) % 2 == 0)
            add_gen('Z', {qubit(i, d - 1), qubit(i + 1, d - 1)});

    PauliVec lz(n), lx(n);
    for (std::size_t c = 0; c < d; ++c)
        lz.set_pauli(qubit(0, c), 'Z');
    for (std::size_t r = 0; r < d; ++r)
        lx.set_pauli(qubit(r, 0), 'X');

    return StabilizerCode(n, 1, std::move(gens), std::move(lx), std::move(lz));
}

QuantumLookupDecoder build_quantum_lookup_decoder(const StabilizerCode& code, std::size_t max_weight,
                                                  std::uint64_t entry_cap) {
    const std::size_t n = code.n();
    if (max_weight >= n)
        throw std::invalid_argument("lookup decoder weight must be below the qubit count");
    std::uint64_t total = 0;
    for (std::size_t w = 0; w <= max_weight; ++w) {
        const auto c = pauli_count(n, w);
        if (c > entry_cap - total)
            throw std::invalid_argument("lookup decoder enumeration exceeds the entry cap");
        total += c;
    }

    std::unordered_map<BitVec, PauliVec, BitVecHash> table;
    table.reserve(static_cast<std::size_t>(total));
    for (std::size_t w = 0; w <= max_weight; ++w) {
        for_each_pauli_of_weight(n, w, [&](const PauliVec& p) {
            const BitVec s = code.syndrome(p);
            auto [it, inserted] = table.try_emplace(s, p);
            if (!inserted && it->second.weight() == w && p.lex_less(it->second))
                it->second = p;
        });
    }
    return QuantumLookupDecoder(std::move(table), max_weight);
}

} // namespace ldgmsm
