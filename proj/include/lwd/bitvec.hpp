#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lwd/errors.hpp"

namespace lwd {

/// A length-n word over GF(2), bit-packed into 64-bit words.
/// Coordinate i lives at words()[i/64] bit (i%64); bits at positions >= length
/// are kept zero so that weight and comparisons work directly on the words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : len_(length), words_((length + 63) / 64, 0) {}

    static BitVector from_string(std::string_view bits);

    std::size_t length() const { return len_; }

    bool bit(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set_bit(std::size_t i, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::uint64_t word : words_) w += std::popcount(word);
        return w;
    }
    bool odd_weight() const {
        std::uint64_t x = 0;
        for (std::uint64_t word : words_) x ^= word;
        return std::popcount(x) & 1u;
    }
    bool is_zero() const {
        for (std::uint64_t word : words_)
            if (word) return false;
        return true;
    }
    /// Index of the lowest set bit; length() when zero.
    std::size_t first_set_bit() const;

    BitVector& operator^=(const BitVector& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    BitVector operator&(const BitVector& other) const {
        BitVector r(*this);
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= other.words_[i];
        return r;
    }
    /// this & ~other (support of this outside the support of other).
    BitVector and_not(const BitVector& other) const {
        BitVector r(*this);
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= ~other.words_[i];
        return r;
    }
    /// In-place *this = a & ~b, reusing storage.
    void assign_and_not(const BitVector& a, const BitVector& b) {
        len_ = a.len_;
        words_.resize(a.words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] = a.words_[i] & ~b.words_[i];
    }

    bool operator==(const BitVector& other) const = default;
    /// Total order (length, then packed words); used for canonical set keys.
    bool operator<(const BitVector& other) const {
        if (len_ != other.len_) return len_ < other.len_;
        return words_ < other.words_;
    }

    /// Coordinate 0 first.
    std::string to_string() const;

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull ^ len_;
        for (std::uint64_t word : words_) {
            h ^= word;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Returns a copy of length n+1 with `value` appended as the last coordinate.
    BitVector with_appended_bit(bool value) const;
    /// Returns a copy of length n-1 with coordinate `pos` removed.
    BitVector without_coordinate(std::size_t pos) const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

/// True iff support(a) is strictly contained in support(b).
bool is_strict_subsupport(const BitVector& a, const BitVector& b);

/// Row-major GF(2) matrix; every row has length cols().
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    explicit BinaryMatrix(std::size_t cols) : cols_(cols) {}
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BinaryMatrix from_rows(const std::vector<std::string>& rows);
    static BinaryMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }

    void add_row(BitVector v) {
        if (v.length() != cols_)
            throw PreconditionError("matrix row length does not match column count");
        rows_.push_back(std::move(v));
    }

    bool operator==(const BinaryMatrix& other) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// GF(2) row rank; the input is not modified.
unsigned rank(const BinaryMatrix& m);

/// dim{c in rowspace(G) : supp(c) subset of supp(S)}, computed as
/// k - rank(rows of G masked to the columns outside supp(S)).
/// G must be a basis (throws PreconditionError on dependent rows).
unsigned support_subcode_dim(const BinaryMatrix& g, const BitVector& s);

/// Basis of the support subcode {c in rowspace(G) : supp(c) subset of supp(S)}.
BinaryMatrix support_subcode_basis(const BinaryMatrix& g, const BitVector& s);

inline constexpr unsigned kDefaultEnumerationCap = 30;

/// Streams the 2^k codewords of a k-row basis in Gray-code order over message
/// vectors: the all-zero word comes first and consecutive words differ by one
/// row XOR. A stream may cover a sub-range [begin, end) of the global order
/// and may be offset by a fixed vector (coset enumeration).
class CodewordStream {
public:
    explicit CodewordStream(const BinaryMatrix& g);
    CodewordStream(const BinaryMatrix& g, std::uint64_t begin, std::uint64_t end,
                   const BitVector* offset = nullptr);

    bool done() const { return idx_ == end_; }
    const BitVector& current() const { return cur_; }
    void advance() {
        ++idx_;
        if (idx_ != end_) cur_ ^= g_->row(static_cast<std::size_t>(std::countr_zero(idx_)));
    }

private:
    const BinaryMatrix* g_;
    std::uint64_t idx_;
    std::uint64_t end_;
    BitVector cur_;
};

/// All 2^k codewords as a vector, Gray order, zero first.
/// Refuses k above the cap.
std::vector<BitVector> enumerate_codewords(const BinaryMatrix& g,
                                           unsigned cap = kDefaultEnumerationCap);

namespace detail {

/// Incremental echelon basis with pivot tracking; used for rank bookkeeping,
/// membership tests and basis extension.
struct Echelon {
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;

    /// Reduces v by the stored rows (smallest-pivot first).
    BitVector reduce(BitVector v) const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (v.bit(pivots[i])) v ^= rows[i];
        return v;
    }
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
    /// Inserts v if independent of the stored rows; returns true if inserted.
    bool insert(BitVector v) {
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        pivots.push_back(v.first_set_bit());
        rows.push_back(std::move(v));
        return true;
    }
    std::size_t rank() const { return rows.size(); }
};

/// Rank of the rows of G masked by ~S, assuming G is a basis. No validation.
unsigned support_dim_unchecked(const BinaryMatrix& g, const BitVector& s);

/// support_subcode_basis without argument validation.
BinaryMatrix support_basis_unchecked(const BinaryMatrix& g, const BitVector& s);

}  // namespace detail

}  // namespace lwd
