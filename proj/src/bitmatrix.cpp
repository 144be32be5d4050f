#include "ldgmsm/bitmatrix.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ldgmsm {

namespace {

void check_bit_char(char c) {
    if (c != '0' && c != '1')
        throw std::invalid_argument("bit string may contain only '0' and '1'");
}

} // namespace

BitVec BitVec::from_string(std::string_view s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        check_bit_char(s[i]);
        if (s[i] == '1')
            v.set(i, true);
    }
    return v;
}

std::size_t BitVec::weight() const {
    std::size_t w = 0;
    for (auto word : w_)
        w += std::popcount(word);
    return w;
}

bool BitVec::any() const {
    for (auto word : w_)
        if (word)
            return true;
    return false;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (n_ != o.n_)
        throw std::invalid_argument("BitVec XOR: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::lex_less(const BitVec& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("BitVec compare: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) {
        const std::uint64_t d = w_[i] ^ o.w_[i];
        if (d) {
            const int j = std::countr_zero(d);
            return ((w_[i] >> j) & 1) == 0; // 0 bit sorts first
        }
    }
    return false;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

std::size_t BitVecHash::operator()(const BitVec& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : v.words()) {
        h ^= w;
        h *= 0x100000001b3ull;
    }
    h ^= v.size();
    h *= 0x100000001b3ull;
    return static_cast<std::size_t>(h);
}

BitMatrix BitMatrix::from_row_strings(const std::vector<std::string>& rows) {
    if (rows.empty())
        return BitMatrix(0, 0);
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("ragged row strings");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            check_bit_char(rows[r][c]);
            if (rows[r][c] == '1')
                m.set(r, c, true);
        }
    }
    return m;
}

BitMatrix BitMatrix::from_text(std::string_view text) {
    std::vector<std::string> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty())
            rows.push_back(line);
    }
    return from_row_strings(rows);
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BitVec BitMatrix::row(std::size_t r) const {
    BitVec v(cols_);
    auto src = row_words(r);
    auto dst = v.words();
    for (std::size_t i = 0; i < src.size(); ++i)
        dst[i] = src[i];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_)
        throw std::invalid_argument("set_row: length mismatch");
    auto src = v.words();
    auto dst = row_words(r);
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = src[i];
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    auto d = row_words(dst);
    auto s = row_words(src);
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    auto ra = row_words(a);
    auto rb = row_words(b);
    for (std::size_t i = 0; i < ra.size(); ++i)
        std::swap(ra[i], rb[i]);
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (auto word : row_words(r))
        w += std::popcount(word);
    return w;
}

std::size_t BitMatrix::col_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < rows_; ++r)
        w += get(r, c);
    return w;
}

std::vector<std::size_t> BitMatrix::col_weights() const {
    std::vector<std::size_t> w(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        w[c] = col_weight(c);
    return w;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r, true);
    return t;
}

BitVec BitMatrix::mult_vec(const BitVec& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("mult_vec: length mismatch");
    BitVec out(rows_);
    auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        auto rw = row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < rw.size(); ++i)
            acc ^= rw[i] & vw[i];
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

std::vector<std::string> BitMatrix::to_row_strings() const {
    std::vector<std::string> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = row(r).to_string();
    return out;
}

std::string BitMatrix::to_text() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        out += row(r).to_string();
        out += '\n';
    }
    return out;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res{m, {}, BitMatrix::identity(m.rows())};
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
        std::size_t pivot = next;
        while (pivot < m.rows() && !res.rref.get(pivot, c))
            ++pivot;
        if (pivot == m.rows())
            continue;
        res.rref.swap_rows(next, pivot);
        res.transform.swap_rows(next, pivot);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != next && res.rref.get(r, c)) {
                res.rref.xor_row(r, next);
                res.transform.xor_row(r, next);
            }
        }
        res.pivots.push_back(c);
        ++next;
    }
    return res;
}

std::size_t rank(const BitMatrix& m) {
    return rref(m).pivots.size();
}

BitVec encode_message(const BitVec& m, const BitMatrix& g) {
    if (m.size() != g.rows())
        throw std::invalid_argument("encode_message: dimension mismatch");
    BitVec out(g.cols());
    auto ow = out.words();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        if (!m.get(r))
            continue;
        auto rw = g.row_words(r);
        for (std::size_t i = 0; i < rw.size(); ++i)
            ow[i] ^= rw[i];
    }
    return out;
}

std::size_t min_distance(const BitMatrix& g) {
    const std::size_t l = g.rows();
    if (l == 0)
        throw std::invalid_argument("min_distance: empty generator");
    if (l > 28)
        throw std::invalid_argument("min_distance: too many rows for enumeration");
    if (rank(g) != l)
        throw std::invalid_argument("min_distance: generator is rank-deficient");

    const std::size_t wpr = (g.cols() + 63) / 64;
    std::vector<std::uint64_t> cw(wpr, 0);
    std::size_t best = g.cols() + 1;
    const std::uint64_t total = std::uint64_t{1} << l;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int r = std::countr_zero(k); // Gray step: toggle row r
        auto rw = g.row_words(static_cast<std::size_t>(r));
        std::size_t w = 0;
        for (std::size_t i = 0; i < wpr; ++i) {
            cw[i] ^= rw[i];
            w += std::popcount(cw[i]);
        }
        if (w < best)
            best = w;
    }
    return best;
}

BitMatrix parity_check_of(const BitMatrix& g) {
    const auto res = rref(g);
    if (res.pivots.size() != g.rows())
        throw std::invalid_argument("parity_check_of: generator is rank-deficient");

    const std::size_t n = g.cols();
    const std::size_t l = g.rows();
    std::vector<bool> is_pivot(n, false);
    for (auto p : res.pivots)
        is_pivot[p] = true;

    BitMatrix h(n - l, n);
    std::size_t hr = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        h.set(hr, f, true);
        for (std::size_t p = 0; p < l; ++p)
            if (res.rref.get(p, f))
                h.set(hr, res.pivots[p], true);
        ++hr;
    }
    return h;
}

} // namespace ldgmsm
