#pragma once

#include "ldgmsm/bitmatrix.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace ldgmsm {

/// GF(4) element encoded as (X-part, Z-part): 0 = 0, 1 = X-part,
/// omega = Z-part, omega_bar = both. Under the tau homomorphism this is
/// I -> zero, X -> one, Z -> omega, Y -> omega_bar.
enum class Gf4 : std::uint8_t {
    zero = 0,
    one = 1,
    omega = 2,
    omega_bar = 3,
};

inline Gf4 gf4_add(Gf4 a, Gf4 b) {
    return static_cast<Gf4>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

Gf4 gf4_mul(Gf4 a, Gf4 b);

/// Conjugation: the involution fixing 0 and 1 and swapping omega with omega_bar.
inline Gf4 gf4_conj(Gf4 a) {
    if (a == Gf4::omega)
        return Gf4::omega_bar;
    if (a == Gf4::omega_bar)
        return Gf4::omega;
    return a;
}

/// Single-symbol term of the trace inner product, x*conj(y) + conj(x)*y in GF(2).
int gf4_trace_term(Gf4 x, Gf4 y);

char gf4_to_pauli_char(Gf4 a);
Gf4 pauli_char_to_gf4(char c);

/// Length-n GF(4) vector representing an n-qubit Pauli operator, phase
/// ignored. Stored as separate packed X-part and Z-part bit vectors.
class PauliVec {
public:
    PauliVec() = default;
    explicit PauliVec(std::size_t n) : x_(n), z_(n) {}

    static PauliVec from_string(std::string_view ixyz);

    /// Identity except pauli p on the given qubit (0-based).
    static PauliVec single(std::size_t n, std::size_t qubit, char p);

    std::size_t num_qubits() const { return x_.size(); }

    Gf4 symbol(std::size_t i) const {
        return static_cast<Gf4>(static_cast<int>(x_.get(i)) | (static_cast<int>(z_.get(i)) << 1));
    }

    void set_symbol(std::size_t i, Gf4 s) {
        const auto v = static_cast<std::uint8_t>(s);
        x_.set(i, v & 1);
        z_.set(i, (v >> 1) & 1);
    }

    void set_pauli(std::size_t i, char p) { set_symbol(i, pauli_char_to_gf4(p)); }

    std::size_t weight() const;
    bool is_identity() const { return !x_.any() && !z_.any(); }

    /// Componentwise GF(4) addition; corresponds to operator product up to phase.
    PauliVec& operator+=(const PauliVec& o);
    friend PauliVec operator+(PauliVec a, const PauliVec& b) {
        a += b;
        return a;
    }

    bool operator==(const PauliVec&) const = default;

    /// Lexicographic order under I < X < Y < Z, lowest qubit index compared first.
    bool lex_less(const PauliVec& o) const;

    std::string to_string() const;

    /// Concatenated [X-part | Z-part] length-2n binary (symplectic) form.
    BitVec symplectic() const;

    const BitVec& x_bits() const { return x_; }
    const BitVec& z_bits() const { return z_; }

private:
    BitVec x_, z_;
};

struct PauliVecHash {
    std::size_t operator()(const PauliVec& p) const {
        BitVecHash h;
        return h(p.x_bits()) * 0x9e3779b97f4a7c15ull + h(p.z_bits());
    }
};

/// Trace inner product of two equal-length GF(4) vectors: 0 iff the
/// represented Pauli operators commute. Reduces to the symplectic form
/// parity(x1&z2 ^ z1&x2) in the packed representation.
int trace_inner_product(const PauliVec& a, const PauliVec& b);

} // namespace ldgmsm
