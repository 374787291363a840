#pragma once

#include <cstdint>
#include <vector>

#include "lwd/neighbors.hpp"
#include "lwd/perms.hpp"
#include "lwd/tally.hpp"

namespace lwd {

/// Orbit enumeration walks every coset label explicitly, so the coset count
/// 2^(k-k') is capped.
inline constexpr unsigned kMaxCosetLabelBits = 20;

/// The 2^(k-k') cosets of a subcode C' inside C. A basis of C' is extended to
/// a basis of C by complement rows u_1..u_r; the coset of v gets the label
/// whose bits are v's coefficients on the complement rows, which is a
/// syndrome map of C' restricted to C (linear, kernel C', injective across
/// cosets). Label 0 is C' itself.
class CosetDecomposition {
public:
    const LinearCode& code() const { return code_; }
    const LinearCode& subcode() const { return subcode_; }

    std::size_t complement_dim() const { return complement_.size(); }
    std::uint64_t coset_count() const { return std::uint64_t{1} << complement_.size(); }
    const std::vector<BitVector>& complement_rows() const { return complement_; }

    /// Coset label of a codeword; throws PreconditionError when v is not in C.
    std::uint64_t label_of(const BitVector& v) const;
    /// Canonical coset member: the sum of the complement rows named by label.
    BitVector representative(std::uint64_t label) const;

private:
    friend CosetDecomposition coset_decompose(const LinearCode& c,
                                              const LinearCode& c_prime);
    CosetDecomposition(LinearCode code, LinearCode subcode)
        : code_(std::move(code)), subcode_(std::move(subcode)) {}

    LinearCode code_;
    LinearCode subcode_;
    std::vector<BitVector> complement_;
    // Echelon of C whose rows are tagged with their complement coefficients.
    std::vector<BitVector> ech_rows_;
    std::vector<std::size_t> ech_pivots_;
    std::vector<std::uint64_t> ech_tags_;
};

/// Requires C' to be a proper subcode of C (same length, all rows contained,
/// k' < k).
CosetDecomposition coset_decompose(const LinearCode& c, const LinearCode& c_prime);

/// One orbit of cosets under the permutation group generated by the checked
/// generators; the representative label is the numerically smallest in the
/// orbit.
struct CosetClass {
    std::uint64_t label = 0;
    std::uint64_t orbit_size = 0;
};

/// Orbits of the coset set under the group generated by `gens`, via BFS
/// closure on labels. Every generator must lie in Aut(C) and Aut(C'); a
/// failing generator is reported by index.
std::vector<CosetClass> partition_cosets(const CosetDecomposition& dec,
                                         const std::vector<Permutation>& gens);

/// LS_w(D): weights of the zero neighbors *of the full code C* lying in the
/// labelled coset.
WeightTally coset_subdistribution(const CosetDecomposition& dec, std::uint64_t label,
                                  const SweepOptions& opts = {});

/// Symmetry-reduced LWD: sum over orbit classes of orbit size times the
/// representative subdistribution. Exactly equals local_weight_distribution.
WeightTally lwd_via_cosets(const LinearCode& c, const LinearCode& c_prime,
                           const std::vector<Permutation>& gens,
                           const SweepOptions& opts = {});

/// Filters `candidates` to the permutations that fix the coset family
/// (v+C')/C'': members of Aut(C), Aut(C') and Aut(C'') that keep v inside
/// v+C'. Requires C'' to be a subcode of C'.
std::vector<Permutation> second_level_perms(const CosetDecomposition& dec,
                                            const BitVector& v,
                                            const LinearCode& c_second,
                                            const std::vector<Permutation>& candidates);

}  // namespace lwd
