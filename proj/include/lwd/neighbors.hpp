#pragma once

#include "lwd/codes.hpp"
#include "lwd/tally.hpp"

namespace lwd {

/// Classification of a nonzero codeword per the zero-neighbor taxonomy.
/// OnlyOddDecomposable and EvenDecomposable apply only to even-weight
/// non-neighbors.
enum class DecompCategory {
    Indecomposable,
    DecomposableOddWeight,
    OnlyOddDecomposable,
    EvenDecomposable,
};

std::string to_string(DecompCategory c);

struct SweepOptions {
    /// Skip per-word neighbor tests where the weight alone decides
    /// (w < 2d and w > n-k+1); the result is identical either way.
    bool use_shortcuts = true;
    /// Contiguous blocks of the message range, merged by tally addition.
    unsigned threads = 1;
    /// Refuse sweeps over more than 2^cap codewords.
    unsigned enumeration_cap = kDefaultEnumerationCap;
    /// Refuse to classify a codeword whose support subcode has more than
    /// 2^cap elements.
    unsigned classify_cap_log2 = 20;
};

/// True iff v is a zero neighbor of C: no nonzero codeword's support is
/// strictly contained in supp(v); decided algebraically as
/// support_subcode_dim(G, v) == 1.
/// Throws PreconditionError when v is not a nonzero codeword of C.
bool is_zero_neighbor(const LinearCode& c, const BitVector& v);

/// Full decomposability category of a nonzero codeword.
DecompCategory classify(const LinearCode& c, const BitVector& v,
                        unsigned classify_cap_log2 = 20);

/// A_w: exact codeword count by weight (A_0 = 1).
WeightTally weight_distribution(const LinearCode& c, const SweepOptions& opts = {});

/// L_w: exact zero-neighbor count by weight (L_0 = 0 by convention).
WeightTally local_weight_distribution(const LinearCode& c, const SweepOptions& opts = {});

/// N_w: count of only-odd-decomposable codewords by (even) weight.
WeightTally only_odd_counts(const LinearCode& c, const SweepOptions& opts = {});

/// True minimum distance, read off the computed weight distribution.
unsigned minimum_distance(const LinearCode& c, const SweepOptions& opts = {});

/// One-pass A/L/N computation sharing the enumeration.
struct Spectra {
    WeightTally weights;    // A
    WeightTally local;      // L
    WeightTally only_odd;   // N
};
Spectra full_spectra(const LinearCode& c, const SweepOptions& opts = {});

}  // namespace lwd
