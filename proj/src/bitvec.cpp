#include "lwd/bitvec.hpp"

#include <algorithm>

namespace lwd {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set_bit(i, true);
        else if (bits[i] != '0')
            throw ParseError("bit string may contain only '0' and '1'");
    }
    return v;
}

std::size_t BitVector::first_set_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return len_;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

BitVector BitVector::with_appended_bit(bool value) const {
    BitVector r(len_ + 1);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w];
    r.set_bit(len_, value);
    return r;
}

BitVector BitVector::without_coordinate(std::size_t pos) const {
    if (pos >= len_) throw PreconditionError("coordinate index out of range");
    BitVector r(len_ - 1);
    for (std::size_t i = 0, j = 0; i < len_; ++i) {
        if (i == pos) continue;
        if (bit(i)) r.set_bit(j, true);
        ++j;
    }
    return r;
}

bool is_strict_subsupport(const BitVector& a, const BitVector& b) {
    if (a.length() != b.length())
        throw PreconditionError("is_strict_subsupport: length mismatch");
    bool equal = true;
    for (std::size_t i = 0; i < a.words().size(); ++i) {
        if (a.words()[i] & ~b.words()[i]) return false;
        if (a.words()[i] != b.words()[i]) equal = false;
    }
    return !equal;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw PreconditionError("from_rows: need at least one row");
    BinaryMatrix m(rows.front().size());
    for (const auto& r : rows) m.add_row(BitVector::from_string(r));
    return m;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.row(i).set_bit(i, true);
    return m;
}

unsigned rank(const BinaryMatrix& m) {
    detail::Echelon ech;
    for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
    return static_cast<unsigned>(ech.rank());
}

namespace detail {

unsigned support_dim_unchecked(const BinaryMatrix& g, const BitVector& s) {
    // rank of {row & ~S} equals the rank of G restricted to columns outside
    // supp(S); the masked-out columns are identically zero and do not count.
    thread_local std::vector<BitVector> scratch;
    thread_local std::vector<std::size_t> pivots;
    scratch.resize(g.rows());
    pivots.clear();
    unsigned r = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        BitVector& v = scratch[r];
        v.assign_and_not(g.row(i), s);
        for (std::size_t j = 0; j < r; ++j)
            if (v.bit(pivots[j])) v ^= scratch[j];
        if (!v.is_zero()) {
            pivots.push_back(v.first_set_bit());
            ++r;
        }
    }
    return static_cast<unsigned>(g.rows()) - r;
}

BinaryMatrix support_basis_unchecked(const BinaryMatrix& g, const BitVector& s) {
    // Eliminate on the masked rows while carrying the full rows along; rows
    // whose masked part cancels to zero are supported inside supp(S).
    std::vector<BitVector> masked;
    std::vector<BitVector> full;
    std::vector<std::size_t> pivots;
    BinaryMatrix basis(g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        BitVector mv = g.row(i).and_not(s);
        BitVector fv = g.row(i);
        for (std::size_t j = 0; j < masked.size(); ++j) {
            if (mv.bit(pivots[j])) {
                mv ^= masked[j];
                fv ^= full[j];
            }
        }
        if (mv.is_zero()) {
            basis.add_row(std::move(fv));
        } else {
            pivots.push_back(mv.first_set_bit());
            masked.push_back(std::move(mv));
            full.push_back(std::move(fv));
        }
    }
    return basis;
}

}  // namespace detail

static void check_support_args(const BinaryMatrix& g, const BitVector& s) {
    if (s.length() != g.cols())
        throw PreconditionError("support vector length does not match matrix columns");
    if (rank(g) != g.rows())
        throw PreconditionError("matrix rows are linearly dependent; pass a basis");
}

unsigned support_subcode_dim(const BinaryMatrix& g, const BitVector& s) {
    check_support_args(g, s);
    return detail::support_dim_unchecked(g, s);
}

BinaryMatrix support_subcode_basis(const BinaryMatrix& g, const BitVector& s) {
    check_support_args(g, s);
    return detail::support_basis_unchecked(g, s);
}

CodewordStream::CodewordStream(const BinaryMatrix& g)
    : CodewordStream(g, 0, std::uint64_t{1} << g.rows(), nullptr) {}

CodewordStream::CodewordStream(const BinaryMatrix& g, std::uint64_t begin,
                               std::uint64_t end, const BitVector* offset)
    : g_(&g), idx_(begin), end_(end), cur_(offset ? *offset : BitVector(g.cols())) {
    std::uint64_t gray = begin ^ (begin >> 1);
    for (std::size_t i = 0; i < g.rows(); ++i)
        if ((gray >> i) & 1u) cur_ ^= g.row(i);
}

std::vector<BitVector> enumerate_codewords(const BinaryMatrix& g, unsigned cap) {
    if (g.rows() > cap)
        throw CapError("refusing to enumerate 2^" + std::to_string(g.rows()) +
                       " codewords (cap is 2^" + std::to_string(cap) + ")");
    std::vector<BitVector> out;
    out.reserve(std::size_t{1} << g.rows());
    for (CodewordStream s(g); !s.done(); s.advance()) out.push_back(s.current());
    return out;
}

}  // namespace lwd
