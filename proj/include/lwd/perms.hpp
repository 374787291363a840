#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lwd/codes.hpp"

namespace lwd {

/// Bijection on coordinate indices 0..n-1, stored as the image of each
/// coordinate.
class Permutation {
public:
    explicit Permutation(std::vector<std::uint32_t> image);
    static Permutation identity(std::size_t n);

    std::size_t size() const { return map_.size(); }
    std::uint32_t operator()(std::size_t i) const { return map_[i]; }
    const std::vector<std::uint32_t>& mapping() const { return map_; }

    Permutation inverse() const;
    /// Composition acting right-to-left: (this.after(g))(x) = this(g(x)),
    /// so apply(a.after(b), v) == apply(a, apply(b, v)).
    Permutation after(const Permutation& g) const;

    bool operator==(const Permutation& other) const = default;
    bool operator<(const Permutation& other) const { return map_ < other.map_; }

private:
    std::vector<std::uint32_t> map_;
};

/// Coordinate i of the result carries coordinate p^-1(i) of v; equivalently
/// result[p(j)] = v[j]. Weight is preserved.
BitVector apply(const Permutation& p, const BitVector& v);

/// True iff p maps every generator row back into the code.
bool is_automorphism(const Permutation& p, const LinearCode& c);

/// i -> i+1 (mod n); generates the cyclic group acting on cyclic codes.
Permutation cyclic_shift(std::size_t n);

/// Generators of the general affine group GA(m,2) acting on the 2^m points in
/// ascending order: a basis rotation and the adjacent transvections generate
/// GL(m,2), plus the translation by the first unit vector.
std::vector<Permutation> affine_group_generators(unsigned m);

/// Entire group generated by `gens` in BFS discovery order (identity first).
/// Throws CapError when the closure exceeds `cap` elements.
std::vector<Permutation> group_closure(const std::vector<Permutation>& gens,
                                       std::size_t cap);

/// First `count` elements of the closure in the same BFS order; the whole
/// group if it is smaller. Deterministic, so suitable as a candidate pool.
std::vector<Permutation> group_sample(const std::vector<Permutation>& gens,
                                      std::size_t count);

/// Text format: one permutation per line, whitespace-separated 0-indexed
/// images.
std::vector<Permutation> load_permutations(std::istream& in);
std::vector<Permutation> load_permutations_file(const std::string& path);
void save_permutations(std::ostream& out, const std::vector<Permutation>& perms);

}  // namespace lwd
