// Acceptance suite: runs every exit criterion and prints one line per
// criterion. All comparisons are exact; a single mismatch fails the
// criterion. Returns nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lwd/cosets.hpp"
#include "lwd/relations.hpp"
#include "lwd/table2.hpp"
#include "oracle.hpp"

using lwd::BinaryMatrix;
using lwd::BitVector;
using lwd::Count;
using lwd::LinearCode;
using lwd::Permutation;
using lwd::WeightTally;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

struct NamedCode {
    std::string name;
    LinearCode code;
};

std::vector<NamedCode> structured_codes() {
    std::vector<NamedCode> out;
    out.push_back({"hamming(7,4)", lwd::hamming(3)});
    out.push_back({"hamming(15,11)", lwd::hamming(4)});
    out.push_back({"rm(1,3)", lwd::reed_muller(1, 3)});
    out.push_back({"rm(1,4)", lwd::reed_muller(1, 4)});
    out.push_back({"rm(2,4)", lwd::reed_muller(2, 4)});
    out.push_back({"rm(2,5)", lwd::reed_muller(2, 5)});
    out.push_back({"bch(15,7,d5)", lwd::bch(4, 5)});
    out.push_back({"bch(31,16,d7)", lwd::bch(5, 7)});
    out.push_back({"punc-rm(2,4)", lwd::puncture(lwd::reed_muller(2, 4), 15)});
    out.push_back({"span{1000,0111}", LinearCode(BinaryMatrix::from_rows({"1000", "0111"}))});
    return out;
}

LinearCode random_code(std::uint64_t seed) {
    std::size_t n = 6 + (seed * 7) % 9;       // 6..14
    std::size_t k = 1 + (seed * 5) % 8;       // 1..8
    if (k > n) k = n;
    return lwd::random_linear_code(n, k, seed);
}

// ---------------------------------------------------------------- criteria

Outcome criterion_oracle_equivalence() {
    Outcome out;
    auto check_code = [&out](const std::string& name, const LinearCode& c) {
        oracle::CodewordSet set(c);
        for (const auto& v : set.words()) {
            if (v.is_zero()) continue;
            if (lwd::is_zero_neighbor(c, v) != set.is_zero_neighbor(v)) {
                out.fail(name + ": disagreement at weight " + std::to_string(v.weight()));
                return;
            }
        }
    };
    for (std::uint64_t seed = 1; seed <= 200 && out.pass; ++seed)
        check_code("random#" + std::to_string(seed), random_code(seed));
    for (const auto& nc : structured_codes()) {
        if (!out.pass) break;
        if (nc.code.dimension() <= 16) check_code(nc.name, nc.code);
    }
    return out;
}

Outcome criterion_lemma2() {
    Outcome out;
    auto check_code = [&out](const std::string& name, const LinearCode& c) {
        WeightTally a = lwd::weight_distribution(c);
        WeightTally l = lwd::local_weight_distribution(c);
        auto d = a.min_nonzero_weight();
        if (!d) return;
        std::size_t bound = c.length() - c.dimension() + 1;
        for (unsigned w = 1; w <= c.length(); ++w) {
            if (w < 2 * *d && l.at(w) != a.at(w))
                out.fail(name + ": L_" + std::to_string(w) + " != A_" + std::to_string(w));
            if (w > bound && l.at(w) != 0)
                out.fail(name + ": L_" + std::to_string(w) + " != 0 above n-k+1");
        }
    };
    for (const auto& nc : structured_codes()) check_code(nc.name, nc.code);
    for (std::uint64_t seed = 1; seed <= 200 && out.pass; ++seed)
        check_code("random#" + std::to_string(seed), random_code(seed));
    return out;
}

std::vector<NamedCode> identity_codes() {
    std::vector<NamedCode> codes;
    codes.push_back({"hamming(7,4)", lwd::hamming(3)});
    codes.push_back({"span{1000,0111}", LinearCode(BinaryMatrix::from_rows({"1000", "0111"}))});
    codes.push_back({"bch(15,7,d5)", lwd::bch(4, 5)});
    codes.push_back({"rm(2,4)", lwd::reed_muller(2, 4)});
    for (std::uint64_t seed = 1; seed <= 100; ++seed)
        codes.push_back({"random#" + std::to_string(seed), random_code(seed)});
    return codes;
}

Outcome criterion_theorem2() {
    Outcome out;
    for (const auto& nc : identity_codes()) {
        lwd::Spectra s = lwd::full_spectra(nc.code);
        WeightTally predicted = lwd::extend_lwd(s.local, s.only_odd);
        WeightTally actual = lwd::local_weight_distribution(lwd::extend(nc.code));
        out.require(predicted == actual, nc.name + ": extend identity mismatch");
        if (!out.pass) break;
    }
    return out;
}

Outcome criterion_theorem5() {
    Outcome out;
    for (const auto& nc : identity_codes()) {
        lwd::Spectra s = lwd::full_spectra(nc.code);
        WeightTally predicted = lwd::even_subcode_lwd(s.local, s.only_odd);
        WeightTally actual = lwd::local_weight_distribution(lwd::even_subcode(nc.code));
        out.require(predicted == actual, nc.name + ": even-subcode identity mismatch");
        if (!out.pass) break;
    }
    return out;
}

Outcome criterion_theorem3() {
    Outcome out;
    std::vector<NamedCode> extended;
    extended.push_back({"rm(1,3)", lwd::reed_muller(1, 3)});
    extended.push_back({"rm(1,4)", lwd::reed_muller(1, 4)});
    extended.push_back({"rm(2,5)", lwd::reed_muller(2, 5)});
    extended.push_back({"extend(bch(31,16,d7))", lwd::extend(lwd::bch(5, 7))});
    for (const auto& nc : extended) {
        WeightTally a_ex = lwd::weight_distribution(nc.code);
        out.require(lwd::weights_multiple_of_four(a_ex),
                    nc.name + ": extended weights are not all multiples of four");
        LinearCode punctured = lwd::puncture(nc.code, nc.code.length() - 1);
        WeightTally n = lwd::only_odd_counts(punctured);
        out.require(n.empty(), nc.name + ": N of the punctured code is not zero");
        if (!out.pass) break;
    }
    return out;
}

Outcome criterion_theorem6() {
    Outcome out;
    std::vector<NamedCode> extended;
    extended.push_back({"rm(1,4)", lwd::reed_muller(1, 4)});
    extended.push_back({"rm(2,4)", lwd::reed_muller(2, 4)});
    for (const auto& nc : extended) {
        LinearCode punctured = lwd::puncture(nc.code, nc.code.length() - 1);
        WeightTally l_ex = lwd::local_weight_distribution(nc.code);
        WeightTally n = lwd::only_odd_counts(punctured);
        WeightTally predicted = lwd::puncture_lwd_transitive(l_ex, n);
        WeightTally actual = lwd::local_weight_distribution(punctured);
        out.require(predicted == actual, nc.name + ": puncture transfer mismatch");
    }

    // Hamming(7,4) against RM(1,3): equivalent codes, so the tally-level
    // transfer must reproduce the Hamming LWD, including Eq-style odd-weight
    // reconstruction L_3 = (4/8) * L_4.
    LinearCode h3 = lwd::hamming(3);
    WeightTally l_rm = lwd::local_weight_distribution(lwd::reed_muller(1, 3));
    out.require(l_rm.at(4) == 14, "L_4(RM(1,3)) != 14");
    WeightTally n_h = lwd::only_odd_counts(h3);
    out.require(n_h.empty(), "N(hamming(7,4)) should be zero");
    WeightTally predicted = lwd::puncture_lwd_transitive(l_rm, n_h);
    out.require(predicted.at(3) == 7, "odd-weight formula did not give L_3 = 7");
    out.require(predicted == lwd::local_weight_distribution(h3),
                "hamming(7,4) puncture transfer mismatch");
    return out;
}

Outcome criterion_table2() {
    Outcome out;
    out.require(lwd::table2_transcription_check().all_pass(),
                "transcription checksum failure");
    for (const auto& col : lwd::table2_columns()) {
        lwd::RelationReport r = lwd::table_ratio_check(col.lwd, col.n);
        out.require(!r.checks.empty(), col.id + ": no pairs checked");
        for (const auto& check : r.checks)
            out.require(check.pass, col.id + ": " + check.name + " " + check.detail);
    }
    const auto& b36 = lwd::table2_column("127_36").lwd;
    out.require(b36.at(31) == 2667 && b36.at(32) == 8001, "127_36 spot values");
    const auto& b50 = lwd::table2_column("127_50").lwd;
    out.require(b50.at(27) == 40894 && b50.at(28) == 146050, "127_50 spot values");
    const auto& rm = lwd::table2_column("127_64rm").lwd;
    out.require(rm.at(15) == 11811 && rm.at(16) == 82677, "127_64rm spot values");
    return out;
}

Outcome criterion_cosets() {
    Outcome out;

    // (a) RM(2,4) with C' = RM(1,4) under affine generators.
    LinearCode rm24 = lwd::reed_muller(2, 4);
    LinearCode rm14 = lwd::reed_muller(1, 4);
    auto affine = lwd::affine_group_generators(4);
    WeightTally brute24 = lwd::local_weight_distribution(rm24);
    out.require(lwd::lwd_via_cosets(rm24, rm14, affine) == brute24,
                "rm(2,4)/rm(1,4) coset LWD mismatch");

    // Theorem-7 invariance for every generator on configuration (a).
    lwd::CosetDecomposition dec = lwd::coset_decompose(rm24, rm14);
    std::vector<WeightTally> subdist;
    for (std::uint64_t label = 0; label < dec.coset_count(); ++label)
        subdist.push_back(lwd::coset_subdistribution(dec, label));
    for (const auto& g : affine) {
        for (std::uint64_t label = 0; label < dec.coset_count(); ++label) {
            std::uint64_t image = dec.label_of(lwd::apply(g, dec.representative(label)));
            if (!(subdist[label] == subdist[image])) {
                out.fail("theorem 7 invariance fails at coset " + std::to_string(label));
                break;
            }
        }
        if (!out.pass) break;
    }

    // (b) (31,16) BCH with C' = even subcode under the cyclic group.
    LinearCode b57 = lwd::bch(5, 7);
    out.require(lwd::lwd_via_cosets(b57, lwd::even_subcode(b57),
                                    {lwd::cyclic_shift(31)}) ==
                    lwd::local_weight_distribution(b57),
                "bch(31,16)/even coset LWD mismatch");
    return out;
}

// Direct left-hand-side computation for the coset-family filter: the
// permutations that map every C''-coset of v+C' to a C''-coset of v+C'.
std::vector<Permutation> family_preserving_perms(const LinearCode& c_prime,
                                                 const LinearCode& c_second,
                                                 const BitVector& v,
                                                 const std::vector<Permutation>& pool) {
    std::vector<BitVector> shell;  // all of v + C'
    for (const auto& u : oracle::codewords(c_prime)) shell.push_back(v ^ u);
    std::vector<BitVector> inner = oracle::codewords(c_second);

    // Partition the shell into C''-cosets.
    std::map<BitVector, std::size_t> coset_of;
    std::vector<std::set<BitVector>> families;
    for (const auto& e : shell) {
        if (coset_of.count(e)) continue;
        std::set<BitVector> coset;
        for (const auto& u : inner) coset.insert(e ^ u);
        std::size_t idx = families.size();
        for (const auto& x : coset) coset_of[x] = idx;
        families.push_back(std::move(coset));
    }

    std::vector<Permutation> accepted;
    for (const auto& rho : pool) {
        bool ok = true;
        for (const auto& fam : families) {
            std::set<BitVector> image;
            for (const auto& x : fam) image.insert(lwd::apply(rho, x));
            auto it = coset_of.find(*image.begin());
            if (it == coset_of.end() || families[it->second] != image) {
                ok = false;
                break;
            }
        }
        if (ok) accepted.push_back(rho);
    }
    return accepted;
}

Outcome criterion_lemma4() {
    Outcome out;
    LinearCode rm24 = lwd::reed_muller(2, 4);
    LinearCode rm14 = lwd::reed_muller(1, 4);
    LinearCode rm04 = lwd::reed_muller(0, 4);
    lwd::CosetDecomposition dec = lwd::coset_decompose(rm24, rm14);
    auto pool = lwd::group_sample(lwd::affine_group_generators(4), 512);
    out.require(pool.size() >= 500, "candidate pool too small");

    for (std::uint64_t label = 0; label < dec.coset_count(); ++label) {
        BitVector v = dec.representative(label);
        auto filtered = lwd::second_level_perms(dec, v, rm04, pool);
        auto direct = family_preserving_perms(rm14, rm04, v, pool);
        if (filtered.size() != direct.size()) {
            out.fail("coset " + std::to_string(label) + ": filter size " +
                     std::to_string(filtered.size()) + " vs direct " +
                     std::to_string(direct.size()));
            break;
        }
        for (std::size_t i = 0; i < filtered.size(); ++i) {
            if (!(filtered[i] == direct[i])) {
                out.fail("coset " + std::to_string(label) + ": set mismatch");
                break;
            }
        }
        if (!out.pass) break;
    }
    return out;
}

Outcome criterion_determinism() {
    Outcome out;
    for (const auto& nc : structured_codes()) {
        lwd::SweepOptions base;
        WeightTally reference = lwd::local_weight_distribution(nc.code, base);
        for (unsigned threads : {1u, 2u, 8u}) {
            for (bool shortcuts : {true, false}) {
                lwd::SweepOptions opts;
                opts.threads = threads;
                opts.use_shortcuts = shortcuts;
                if (!(lwd::local_weight_distribution(nc.code, opts) == reference)) {
                    out.fail(nc.name + ": tallies differ (threads=" +
                             std::to_string(threads) +
                             ", shortcuts=" + (shortcuts ? "on" : "off") + ")");
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "zero-neighbor oracle equivalence", criterion_oracle_equivalence},
        {2, "lemma 2 clauses", criterion_lemma2},
        {3, "theorem 2 extension identity", criterion_theorem2},
        {4, "theorem 5 even-subcode identity", criterion_theorem5},
        {5, "theorem 3 multiples-of-four", criterion_theorem3},
        {6, "theorem 6 puncture round trip", criterion_theorem6},
        {7, "table II internal consistency", criterion_table2},
        {8, "coset algorithm equivalence", criterion_cosets},
        {9, "lemma 4 second-level filter", criterion_lemma4},
        {10, "determinism and parallel merge", criterion_determinism},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome result;
        try {
            result = c.run();
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%s] criterion %2d: %s (%.1f s)%s%s\n",
                    result.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                    result.detail.empty() ? "" : " - ",
                    result.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && result.pass;
    }
    return all_pass ? 0 : 1;
}
