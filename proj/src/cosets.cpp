#include "lwd/cosets.hpp"

#include <string>
#include <thread>

namespace lwd {

std::uint64_t CosetDecomposition::label_of(const BitVector& v) const {
    if (v.length() != code_.length())
        throw PreconditionError("vector length does not match the code");
    BitVector r = v;
    std::uint64_t tag = 0;
    for (std::size_t i = 0; i < ech_rows_.size(); ++i) {
        if (r.bit(ech_pivots_[i])) {
            r ^= ech_rows_[i];
            tag ^= ech_tags_[i];
        }
    }
    if (!r.is_zero()) throw PreconditionError("vector is not a codeword of C");
    return tag;
}

BitVector CosetDecomposition::representative(std::uint64_t label) const {
    if (label >> complement_.size())
        throw PreconditionError("coset label out of range");
    BitVector v(code_.length());
    for (std::size_t j = 0; j < complement_.size(); ++j)
        if ((label >> j) & 1u) v ^= complement_[j];
    return v;
}

CosetDecomposition coset_decompose(const LinearCode& c, const LinearCode& c_prime) {
    if (c.length() != c_prime.length())
        throw PreconditionError("code and subcode lengths differ");
    if (!c.contains_code(c_prime))
        throw PreconditionError("C' is not a subcode of C");
    if (c_prime.dimension() >= c.dimension())
        throw PreconditionError("subcode must have strictly smaller dimension");

    CosetDecomposition dec(c, c_prime);
    auto reduce = [&dec](BitVector v) {
        for (std::size_t i = 0; i < dec.ech_rows_.size(); ++i)
            if (v.bit(dec.ech_pivots_[i])) v ^= dec.ech_rows_[i];
        return v;
    };
    // Echelon of C' first, tagged zero; each C row that extends the span
    // becomes a complement row whose reduced residual is its own tag bit.
    for (std::size_t i = 0; i < c_prime.dimension(); ++i) {
        BitVector residual = reduce(c_prime.generator().row(i));
        dec.ech_pivots_.push_back(residual.first_set_bit());
        dec.ech_rows_.push_back(std::move(residual));
        dec.ech_tags_.push_back(0);
    }
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        BitVector residual = reduce(c.generator().row(i));
        if (residual.is_zero()) continue;
        dec.ech_tags_.push_back(std::uint64_t{1} << dec.complement_.size());
        dec.complement_.push_back(residual);
        dec.ech_pivots_.push_back(residual.first_set_bit());
        dec.ech_rows_.push_back(std::move(residual));
    }
    return dec;
}

std::vector<CosetClass> partition_cosets(const CosetDecomposition& dec,
                                         const std::vector<Permutation>& gens) {
    if (dec.complement_dim() > kMaxCosetLabelBits)
        throw CapError("coset count 2^" + std::to_string(dec.complement_dim()) +
                       " exceeds the orbit enumeration cap");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != dec.code().length())
            throw PreconditionError("generator #" + std::to_string(i) +
                                    " acts on the wrong length");
        if (!is_automorphism(gens[i], dec.code()))
            throw PreconditionError("generator #" + std::to_string(i) +
                                    " is not an automorphism of C");
        if (!is_automorphism(gens[i], dec.subcode()))
            throw PreconditionError("generator #" + std::to_string(i) +
                                    " is not an automorphism of C'");
    }

    std::uint64_t count = dec.coset_count();
    std::vector<bool> visited(count, false);
    std::vector<CosetClass> classes;
    std::vector<std::uint64_t> frontier;
    for (std::uint64_t start = 0; start < count; ++start) {
        if (visited[start]) continue;
        visited[start] = true;
        frontier.assign(1, start);
        std::uint64_t orbit_size = 0;
        while (!frontier.empty()) {
            std::uint64_t label = frontier.back();
            frontier.pop_back();
            ++orbit_size;
            BitVector rep = dec.representative(label);
            for (const auto& g : gens) {
                std::uint64_t image = dec.label_of(apply(g, rep));
                if (!visited[image]) {
                    visited[image] = true;
                    frontier.push_back(image);
                }
            }
        }
        classes.push_back({start, orbit_size});
    }
    return classes;
}

namespace {

void subdistribution_block(const LinearCode& c, const BinaryMatrix& sub_g,
                           const BitVector& offset, std::uint64_t begin,
                           std::uint64_t end, std::vector<std::uint64_t>& out) {
    for (CodewordStream s(sub_g, begin, end, &offset); !s.done(); s.advance()) {
        const BitVector& v = s.current();
        if (v.is_zero()) continue;
        if (detail::support_dim_unchecked(c.generator(), v) == 1) out[v.weight()]++;
    }
}

}  // namespace

WeightTally coset_subdistribution(const CosetDecomposition& dec, std::uint64_t label,
                                  const SweepOptions& opts) {
    const LinearCode& c = dec.code();
    const LinearCode& sub = dec.subcode();
    if (sub.dimension() > opts.enumeration_cap)
        throw CapError("refusing to enumerate 2^" + std::to_string(sub.dimension()) +
                       " coset elements (cap is 2^" +
                       std::to_string(opts.enumeration_cap) + ")");
    BitVector offset = dec.representative(label);
    std::uint64_t total = std::uint64_t{1} << sub.dimension();
    unsigned t = std::max(1u, opts.threads);

    std::vector<std::vector<std::uint64_t>> parts;
    if (t == 1 || total < 2 * t) {
        parts.assign(1, std::vector<std::uint64_t>(c.length() + 1, 0));
        subdistribution_block(c, sub.generator(), offset, 0, total, parts[0]);
    } else {
        parts.assign(t, std::vector<std::uint64_t>(c.length() + 1, 0));
        std::vector<std::thread> workers;
        for (unsigned i = 0; i < t; ++i) {
            std::uint64_t b = total / t * i + std::min<std::uint64_t>(i, total % t);
            std::uint64_t e =
                total / t * (i + 1) + std::min<std::uint64_t>(i + 1, total % t);
            workers.emplace_back([&, b, e, i] {
                subdistribution_block(c, sub.generator(), offset, b, e, parts[i]);
            });
        }
        for (auto& w : workers) w.join();
    }

    WeightTally tally(c.length());
    for (const auto& part : parts)
        for (std::size_t w = 0; w < part.size(); ++w)
            if (part[w]) tally.add(static_cast<unsigned>(w), part[w]);
    return tally;
}

WeightTally lwd_via_cosets(const LinearCode& c, const LinearCode& c_prime,
                           const std::vector<Permutation>& gens,
                           const SweepOptions& opts) {
    CosetDecomposition dec = coset_decompose(c, c_prime);
    std::vector<CosetClass> classes = partition_cosets(dec, gens);
    WeightTally out(c.length());
    for (const auto& cls : classes)
        out.add_scaled(coset_subdistribution(dec, cls.label, opts), cls.orbit_size);
    return out;
}

std::vector<Permutation> second_level_perms(const CosetDecomposition& dec,
                                            const BitVector& v,
                                            const LinearCode& c_second,
                                            const std::vector<Permutation>& candidates) {
    const LinearCode& c = dec.code();
    const LinearCode& c_prime = dec.subcode();
    if (c_second.length() != c.length())
        throw PreconditionError("subset chain violated: lengths differ");
    if (!c_prime.contains_code(c_second))
        throw PreconditionError("subset chain violated: C'' must be a subcode of C'");
    dec.label_of(v);  // validates v in C

    std::vector<Permutation> accepted;
    for (const auto& rho : candidates) {
        if (rho.size() != c.length())
            throw PreconditionError("candidate permutation acts on the wrong length");
        if (!is_automorphism(rho, c) || !is_automorphism(rho, c_prime) ||
            !is_automorphism(rho, c_second))
            continue;
        if (!c_prime.contains(apply(rho, v) ^ v)) continue;
        // Spot-check the implied property: rho maps v+C' into itself.
        for (std::size_t i = 0; i < std::min<std::size_t>(2, c_prime.dimension()); ++i) {
            BitVector sample = v ^ c_prime.generator().row(i);
            if (!c_prime.contains(apply(rho, sample) ^ v))
                throw Error("internal invariant violated: accepted permutation moved "
                            "an element out of v+C'");
        }
        accepted.push_back(rho);
    }
    return accepted;
}

}  // namespace lwd
