#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lwd/bitvec.hpp"

namespace lwd {

/// Structural facts about how a code was built. `transitive_invariant` is a
/// caller-supplied assertion, never detected automatically.
struct CodeTags {
    bool cyclic = false;
    std::optional<std::size_t> extended_of;  // parity bit position
    bool transitive_invariant = false;
};

/// A binary (n,k) linear code held as a full-row-rank generator matrix.
/// Immutable once constructed; an internal echelon form backs membership
/// tests.
class LinearCode {
public:
    explicit LinearCode(BinaryMatrix generator, CodeTags tags = {});

    std::size_t length() const { return g_.cols(); }
    std::size_t dimension() const { return g_.rows(); }
    const BinaryMatrix& generator() const { return g_; }
    const CodeTags& tags() const { return tags_; }

    bool contains(const BitVector& v) const {
        return v.length() == length() && ech_.contains(v);
    }
    /// True iff every generator row of `sub` is a codeword of this code.
    bool contains_code(const LinearCode& sub) const;

    /// Same code with different tags (used to assert transitive invariance).
    LinearCode retagged(CodeTags tags) const { return LinearCode(g_, tags); }

    const detail::Echelon& echelon() const { return ech_; }

private:
    BinaryMatrix g_;
    CodeTags tags_;
    detail::Echelon ech_;
};

/// Longest code any constructor will build.
inline constexpr std::size_t kMaxConstructionLength = 1u << 16;

/// (2^r-1, 2^r-1-r) Hamming code; parity checks are the nonzero r-bit columns
/// in ascending order, the generator completes them in standard form.
LinearCode hamming(unsigned r);

/// r-th order Reed-Muller code of length 2^m; rows evaluate the monomials of
/// degree <= r over all points in ascending (lexicographic) order.
LinearCode reed_muller(unsigned r, unsigned m);

/// Primitive BCH code of length 2^m-1 with the given designed distance, over
/// the default primitive polynomial for GF(2^m). Rows are the cyclic shifts
/// of the generator polynomial.
LinearCode bch(unsigned m, unsigned designed_distance);

/// Appends the overall parity bit as the last coordinate.
LinearCode extend(const LinearCode& c);

/// Deletes coordinate `pos`; throws PreconditionError if that drops the rank.
LinearCode puncture(const LinearCode& c, std::size_t pos);

/// The subcode of even-weight codewords; returns `c` unchanged when every
/// codeword already has even weight, otherwise the dimension drops by one.
LinearCode even_subcode(const LinearCode& c);

/// Deterministic full-rank random code for property tests.
LinearCode random_linear_code(std::size_t n, std::size_t k, std::uint64_t seed);

/// Generator-matrix text format: optional '#' comment lines, then k lines of
/// exactly n characters from {0,1}; surrounding whitespace is trimmed and the
/// rank is validated on load.
LinearCode load_generator_matrix(std::istream& in);
LinearCode load_generator_matrix_file(const std::string& path);
void save_generator_matrix(std::ostream& out, const LinearCode& c);
void save_generator_matrix_file(const std::string& path, const LinearCode& c);

}  // namespace lwd
