#include "ldgmsm/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace ldgmsm {

Gf4 gf4_mul(Gf4 a, Gf4 b) {
    // 0*a = 0, 1*a = a, w*w = w_bar, w*w_bar = 1, w_bar*w_bar = w
    static constexpr std::uint8_t table[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    return static_cast<Gf4>(table[static_cast<int>(a)][static_cast<int>(b)]);
}

int gf4_trace_term(Gf4 x, Gf4 y) {
    const auto a = gf4_mul(x, gf4_conj(y));
    const auto b = gf4_mul(gf4_conj(x), y);
    const auto s = gf4_add(a, b);
    // x*conj(y) + conj(x)*y lands in {0, 1} (it is fixed by conjugation)
    return s == Gf4::one ? 1 : 0;
}

char gf4_to_pauli_char(Gf4 a) {
    switch (a) {
    case Gf4::zero:
        return 'I';
    case Gf4::one:
        return 'X';
    case Gf4::omega:
        return 'Z';
    case Gf4::omega_bar:
        return 'Y';
    }
    throw std::logic_error("bad Gf4 value");
}

Gf4 pauli_char_to_gf4(char c) {
    switch (c) {
    case 'I':
        return Gf4::zero;
    case 'X':
        return Gf4::one;
    case 'Z':
        return Gf4::omega;
    case 'Y':
        return Gf4::omega_bar;
    default:
        throw std::invalid_argument("Pauli character must be one of I, X, Y, Z");
    }
}

PauliVec PauliVec::from_string(std::string_view ixyz) {
    PauliVec p(ixyz.size());
    for (std::size_t i = 0; i < ixyz.size(); ++i)
        p.set_pauli(i, ixyz[i]);
    return p;
}

PauliVec PauliVec::single(std::size_t n, std::size_t qubit, char p) {
    if (qubit >= n)
        throw std::invalid_argument("qubit index out of range");
    PauliVec v(n);
    v.set_pauli(qubit, p);
    return v;
}

std::size_t PauliVec::weight() const {
    std::size_t w = 0;
    auto xw = x_.words();
    auto zw = z_.words();
    for (std::size_t i = 0; i < xw.size(); ++i)
        w += std::popcount(xw[i] | zw[i]);
    return w;
}

PauliVec& PauliVec::operator+=(const PauliVec& o) {
    if (num_qubits() != o.num_qubits())
        throw std::invalid_argument("PauliVec addition: length mismatch");
    x_ ^= o.x_;
    z_ ^= o.z_;
    return *this;
}

bool PauliVec::lex_less(const PauliVec& o) const {
    if (num_qubits() != o.num_qubits())
        throw std::invalid_argument("PauliVec compare: length mismatch");
    // symbol rank under I < X < Y < Z, indexed by (x | z<<1)
    static constexpr int rank_of[4] = {0, 1, 3, 2};
    for (std::size_t i = 0; i < num_qubits(); ++i) {
        const int a = rank_of[static_cast<int>(symbol(i))];
        const int b = rank_of[static_cast<int>(o.symbol(i))];
        if (a != b)
            return a < b;
    }
    return false;
}

std::string PauliVec::to_string() const {
    std::string s(num_qubits(), 'I');
    for (std::size_t i = 0; i < num_qubits(); ++i)
        s[i] = gf4_to_pauli_char(symbol(i));
    return s;
}

BitVec PauliVec::symplectic() const {
    const std::size_t n = num_qubits();
    BitVec v(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x_.get(i))
            v.set(i, true);
        if (z_.get(i))
            v.set(n + i, true);
    }
    return v;
}

int trace_inner_product(const PauliVec& a, const PauliVec& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("trace_inner_product: length mismatch");
    auto ax = a.x_bits().words();
    auto az = a.z_bits().words();
    auto bx = b.x_bits().words();
    auto bz = b.z_bits().words();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < ax.size(); ++i)
        acc ^= (ax[i] & bz[i]) ^ (az[i] & bx[i]);
    return std::popcount(acc) & 1;
}

} // namespace ldgmsm
