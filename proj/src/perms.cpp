#include "lwd/perms.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace lwd {

Permutation::Permutation(std::vector<std::uint32_t> image) : map_(std::move(image)) {
    std::vector<bool> seen(map_.size(), false);
    for (std::uint32_t v : map_) {
        if (v >= map_.size() || seen[v])
            throw PreconditionError("permutation image is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> image(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) image[map_[i]] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(image));
}

Permutation Permutation::after(const Permutation& g) const {
    if (g.size() != size()) throw PreconditionError("permutation size mismatch");
    std::vector<std::uint32_t> image(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) image[i] = map_[g.map_[i]];
    return Permutation(std::move(image));
}

BitVector apply(const Permutation& p, const BitVector& v) {
    if (p.size() != v.length())
        throw PreconditionError("permutation size does not match vector length");
    BitVector out(v.length());
    for (std::size_t i = 0; i < v.length(); ++i)
        if (v.bit(i)) out.set_bit(p(i), true);
    return out;
}

bool is_automorphism(const Permutation& p, const LinearCode& c) {
    if (p.size() != c.length()) return false;
    for (std::size_t i = 0; i < c.dimension(); ++i)
        if (!c.contains(apply(p, c.generator().row(i)))) return false;
    return true;
}

Permutation cyclic_shift(std::size_t n) {
    std::vector<std::uint32_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<std::uint32_t>((i + 1) % n);
    return Permutation(std::move(image));
}

std::vector<Permutation> affine_group_generators(unsigned m) {
    if (m == 0 || m > 20) throw PreconditionError("affine generators need 1 <= m <= 20");
    std::size_t n = std::size_t{1} << m;
    std::size_t mask = n - 1;
    std::vector<Permutation> gens;

    auto linear = [&](auto&& f) {
        std::vector<std::uint32_t> image(n);
        for (std::size_t x = 0; x < n; ++x) image[x] = static_cast<std::uint32_t>(f(x));
        gens.emplace_back(std::move(image));
    };

    if (m >= 2) {
        // basis rotation e_i -> e_{i+1 mod m}
        linear([&](std::size_t x) { return ((x << 1) | (x >> (m - 1))) & mask; });
        // transvections e_t feeding into e_{t+1}
        for (unsigned t = 0; t + 1 < m; ++t)
            linear([&](std::size_t x) {
                return ((x >> t) & 1u) ? (x ^ (std::size_t{1} << (t + 1))) : x;
            });
    }
    // translation x -> x + e_0
    linear([&](std::size_t x) { return x ^ 1u; });
    return gens;
}

namespace {

std::vector<Permutation> closure_impl(const std::vector<Permutation>& gens,
                                      std::size_t limit, bool cap_is_error) {
    if (gens.empty()) throw PreconditionError("need at least one generator");
    std::size_t n = gens.front().size();
    for (const auto& g : gens)
        if (g.size() != n) throw PreconditionError("generators act on different lengths");

    std::vector<Permutation> out{Permutation::identity(n)};
    std::set<std::vector<std::uint32_t>> seen{out.front().mapping()};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& g : gens) {
            Permutation next = g.after(out[head]);
            if (!seen.insert(next.mapping()).second) continue;
            if (out.size() >= limit) {
                if (cap_is_error)
                    throw CapError("group closure exceeds " + std::to_string(limit) +
                                   " elements");
                return out;
            }
            out.push_back(std::move(next));
        }
    }
    return out;
}

}  // namespace

std::vector<Permutation> group_closure(const std::vector<Permutation>& gens,
                                       std::size_t cap) {
    return closure_impl(gens, cap, true);
}

std::vector<Permutation> group_sample(const std::vector<Permutation>& gens,
                                      std::size_t count) {
    return closure_impl(gens, count, false);
}

std::vector<Permutation> load_permutations(std::istream& in) {
    std::vector<Permutation> perms;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::uint32_t> image;
        long long v;
        while (ls >> v) {
            if (v < 0) throw ParseError("permutation images must be nonnegative");
            image.push_back(static_cast<std::uint32_t>(v));
        }
        if (!ls.eof())
            throw ParseError("malformed permutation on line " + std::to_string(lineno));
        if (image.empty()) continue;
        try {
            perms.emplace_back(std::move(image));
        } catch (const PreconditionError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (perms.empty()) throw ParseError("permutation file contains no permutations");
    return perms;
}

std::vector<Permutation> load_permutations_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open permutation file: " + path);
    return load_permutations(in);
}

void save_permutations(std::ostream& out, const std::vector<Permutation>& perms) {
    for (const auto& p : perms) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p(i);
        out << "\n";
    }
}

}  // namespace lwd
