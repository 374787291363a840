#include "lwd/neighbors.hpp"

#include <algorithm>
#include <thread>

namespace lwd {

std::string to_string(DecompCategory c) {
    switch (c) {
        case DecompCategory::Indecomposable: return "indecomposable";
        case DecompCategory::DecomposableOddWeight: return "decomposable-odd-weight";
        case DecompCategory::OnlyOddDecomposable: return "only-odd-decomposable";
        case DecompCategory::EvenDecomposable: return "even-decomposable";
    }
    return "?";
}

static void check_codeword(const LinearCode& c, const BitVector& v) {
    if (v.length() != c.length())
        throw PreconditionError("codeword length does not match code length");
    if (v.is_zero())
        throw PreconditionError("the all-zero word is excluded from neighborship");
    if (!c.contains(v)) throw PreconditionError("vector is not a codeword");
}

bool is_zero_neighbor(const LinearCode& c, const BitVector& v) {
    check_codeword(c, v);
    return detail::support_dim_unchecked(c.generator(), v) == 1;
}

namespace {

// Category of a nonzero codeword given its already-computed support subcode
// dimension. Decompositions of v biject with C_S \ {0, v} via c <-> (c, v+c),
// and for even v both halves share parity; so v is even-decomposable exactly
// when the even-weight part of C_S reaches beyond {0, v}. That happens iff
// some basis row other than v is even, or dim C_S >= 3 (the even part then
// has dimension >= 2 and cannot equal {0, v}).
DecompCategory classify_with_dim(const LinearCode& c, const BitVector& v,
                                 unsigned support_dim, unsigned cap_log2) {
    if (support_dim == 1) return DecompCategory::Indecomposable;
    if (v.odd_weight()) return DecompCategory::DecomposableOddWeight;
    if (support_dim > cap_log2)
        throw CapError("support subcode of dimension " + std::to_string(support_dim) +
                       " exceeds the classification cap 2^" + std::to_string(cap_log2));
    BinaryMatrix basis = detail::support_basis_unchecked(c.generator(), v);
    for (std::size_t i = 0; i < basis.rows(); ++i)
        if (!basis.row(i).odd_weight() && basis.row(i) != v)
            return DecompCategory::EvenDecomposable;
    return support_dim >= 3 ? DecompCategory::EvenDecomposable
                            : DecompCategory::OnlyOddDecomposable;
}

struct RawTallies {
    std::vector<std::uint64_t> a, l, n;

    explicit RawTallies(std::size_t length)
        : a(length + 1, 0), l(length + 1, 0), n(length + 1, 0) {}

    void merge(const RawTallies& o) {
        for (std::size_t w = 0; w < a.size(); ++w) {
            a[w] += o.a[w];
            l[w] += o.l[w];
            n[w] += o.n[w];
        }
    }
};

struct SweepPlan {
    bool want_a = false;
    bool want_l = false;
    bool want_n = false;
    // Lemma-2 window; only valid when use_window is set.
    bool use_window = false;
    std::size_t twice_min_distance = 0;
    std::size_t redundancy_bound = 0;  // n - k + 1
    unsigned classify_cap_log2 = 20;
};

void sweep_block(const LinearCode& c, std::uint64_t begin, std::uint64_t end,
                 const SweepPlan& plan, RawTallies& out) {
    const BinaryMatrix& g = c.generator();
    for (CodewordStream s(g, begin, end); !s.done(); s.advance()) {
        const BitVector& v = s.current();
        std::size_t w = v.weight();
        if (plan.want_a) out.a[w]++;
        if (w == 0 || (!plan.want_l && !plan.want_n)) continue;

        bool neighbor;
        unsigned support_dim = 0;
        bool have_dim = false;
        if (plan.use_window && w < plan.twice_min_distance) {
            neighbor = true;
        } else if (plan.use_window && w > plan.redundancy_bound) {
            neighbor = false;
        } else {
            support_dim = detail::support_dim_unchecked(g, v);
            have_dim = true;
            neighbor = support_dim == 1;
        }

        if (neighbor) {
            if (plan.want_l) out.l[w]++;
            continue;
        }
        if (plan.want_n && w % 2 == 0) {
            if (!have_dim) support_dim = detail::support_dim_unchecked(g, v);
            if (classify_with_dim(c, v, support_dim, plan.classify_cap_log2) ==
                DecompCategory::OnlyOddDecomposable)
                out.n[w]++;
        }
    }
}

RawTallies run_sweep(const LinearCode& c, const SweepPlan& plan, unsigned threads) {
    std::uint64_t total = std::uint64_t{1} << c.dimension();
    RawTallies merged(c.length());
    unsigned t = std::max(1u, threads);
    if (t == 1 || total < 2 * t) {
        sweep_block(c, 0, total, plan, merged);
        return merged;
    }
    std::vector<RawTallies> parts(t, RawTallies(c.length()));
    std::vector<std::thread> workers;
    workers.reserve(t);
    for (unsigned i = 0; i < t; ++i) {
        std::uint64_t b = total / t * i + std::min<std::uint64_t>(i, total % t);
        std::uint64_t e = total / t * (i + 1) + std::min<std::uint64_t>(i + 1, total % t);
        workers.emplace_back(
            [&c, &plan, b, e, &part = parts[i]] { sweep_block(c, b, e, plan, part); });
    }
    for (auto& w : workers) w.join();
    for (const auto& p : parts) merged.merge(p);
    return merged;
}

void check_enumeration_cap(const LinearCode& c, const SweepOptions& opts) {
    if (c.dimension() > opts.enumeration_cap)
        throw CapError("refusing to sweep 2^" + std::to_string(c.dimension()) +
                       " codewords (cap is 2^" + std::to_string(opts.enumeration_cap) +
                       "); raise the cap to force");
}

WeightTally to_tally(const std::vector<std::uint64_t>& raw, std::size_t length) {
    WeightTally t(length);
    for (std::size_t w = 0; w < raw.size(); ++w)
        if (raw[w]) t.set(static_cast<unsigned>(w), raw[w]);
    return t;
}

// Fills in the Lemma-2 window from a computed weight distribution. Weights
// strictly below 2d are all neighbors; weights strictly above n-k+1 none.
// Both boundary weights go through the per-word test.
void arm_window(SweepPlan& plan, const LinearCode& c, const WeightTally& a) {
    auto d = a.min_nonzero_weight();
    if (!d) return;  // zero code: nothing to sweep anyway
    plan.use_window = true;
    plan.twice_min_distance = 2 * *d;
    plan.redundancy_bound = c.length() - c.dimension() + 1;
}

}  // namespace

DecompCategory classify(const LinearCode& c, const BitVector& v,
                        unsigned classify_cap_log2) {
    check_codeword(c, v);
    unsigned dim = detail::support_dim_unchecked(c.generator(), v);
    return classify_with_dim(c, v, dim, classify_cap_log2);
}

WeightTally weight_distribution(const LinearCode& c, const SweepOptions& opts) {
    check_enumeration_cap(c, opts);
    SweepPlan plan;
    plan.want_a = true;
    return to_tally(run_sweep(c, plan, opts.threads).a, c.length());
}

WeightTally local_weight_distribution(const LinearCode& c, const SweepOptions& opts) {
    check_enumeration_cap(c, opts);
    SweepPlan plan;
    plan.want_l = true;
    // With shortcuts a first pass finds the true minimum distance; the L pass
    // then tests only the weights Lemma 2 leaves open.
    if (opts.use_shortcuts) arm_window(plan, c, weight_distribution(c, opts));
    return to_tally(run_sweep(c, plan, opts.threads).l, c.length());
}

WeightTally only_odd_counts(const LinearCode& c, const SweepOptions& opts) {
    check_enumeration_cap(c, opts);
    SweepPlan plan;
    plan.want_n = true;
    plan.classify_cap_log2 = opts.classify_cap_log2;
    if (opts.use_shortcuts) arm_window(plan, c, weight_distribution(c, opts));
    return to_tally(run_sweep(c, plan, opts.threads).n, c.length());
}

unsigned minimum_distance(const LinearCode& c, const SweepOptions& opts) {
    auto d = weight_distribution(c, opts).min_nonzero_weight();
    if (!d) throw PreconditionError("the zero code has no minimum distance");
    return *d;
}

Spectra full_spectra(const LinearCode& c, const SweepOptions& opts) {
    check_enumeration_cap(c, opts);
    SweepPlan plan;
    plan.want_l = true;
    plan.want_n = true;
    plan.classify_cap_log2 = opts.classify_cap_log2;
    if (opts.use_shortcuts) {
        WeightTally a = weight_distribution(c, opts);
        arm_window(plan, c, a);
        RawTallies raw = run_sweep(c, plan, opts.threads);
        return Spectra{std::move(a), to_tally(raw.l, c.length()),
                       to_tally(raw.n, c.length())};
    }
    plan.want_a = true;
    RawTallies raw = run_sweep(c, plan, opts.threads);
    return Spectra{to_tally(raw.a, c.length()), to_tally(raw.l, c.length()),
                   to_tally(raw.n, c.length())};
}

}  // namespace lwd
