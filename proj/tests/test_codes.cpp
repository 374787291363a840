#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lwd/codes.hpp"
#include "lwd/gf2m.hpp"
#include "oracle.hpp"

using lwd::BinaryMatrix;
using lwd::BitVector;
using lwd::LinearCode;

namespace {

unsigned brute_min_distance(const LinearCode& c) {
    std::size_t best = c.length() + 1;
    for (const auto& v : oracle::codewords(c))
        if (!v.is_zero()) best = std::min(best, v.weight());
    return static_cast<unsigned>(best);
}

}  // namespace

TEST_CASE("hamming codes") {
    LinearCode h3 = lwd::hamming(3);
    CHECK(h3.length() == 7);
    CHECK(h3.dimension() == 4);
    CHECK(brute_min_distance(h3) == 3);

    LinearCode h2 = lwd::hamming(2);
    CHECK(h2.length() == 3);
    CHECK(h2.dimension() == 1);
    CHECK(h2.generator().row(0).weight() == 3);  // the (3,1) repetition code

    LinearCode h4 = lwd::hamming(4);
    CHECK(h4.length() == 15);
    CHECK(h4.dimension() == 11);
    CHECK(brute_min_distance(h4) == 3);

    CHECK_THROWS_AS(lwd::hamming(1), lwd::PreconditionError);
}

TEST_CASE("reed-muller codes") {
    LinearCode rm13 = lwd::reed_muller(1, 3);
    CHECK(rm13.length() == 8);
    CHECK(rm13.dimension() == 4);
    for (const auto& v : oracle::codewords(rm13)) {
        if (v.is_zero()) continue;
        CHECK((v.weight() == 4 || v.weight() == 8));
    }

    LinearCode universe = lwd::reed_muller(3, 3);
    CHECK(universe.dimension() == 8);
    CHECK(universe.length() == 8);

    CHECK(lwd::reed_muller(2, 5).dimension() == 16);  // 1 + 5 + 10
    CHECK(lwd::reed_muller(0, 4).dimension() == 1);
    CHECK(lwd::reed_muller(1, 4).tags().transitive_invariant);
    CHECK_THROWS_AS(lwd::reed_muller(4, 3), lwd::PreconditionError);
}

TEST_CASE("bch generator polynomials") {
    // Independent oracle: multiply the minimal polynomials directly.
    lwd::Gf2mField f4(4);
    lwd::Gf2Poly m1 = f4.minimal_polynomial(1);
    lwd::Gf2Poly m3 = f4.minimal_polynomial(3);
    CHECK(m1 == lwd::Gf2Poly(0b10011));  // x^4+x+1
    CHECK(m3 == lwd::Gf2Poly(0b11111));  // x^4+x^3+x^2+x+1
    lwd::Gf2Poly g = m1 * m3;
    CHECK(g == lwd::Gf2Poly(0b111010001));  // x^8+x^7+x^6+x^4+1

    LinearCode b45 = lwd::bch(4, 5);
    CHECK(b45.length() == 15);
    CHECK(b45.dimension() == 7);
    CHECK(b45.tags().cyclic);
    // Row 0 is g(x) itself.
    CHECK(b45.generator().row(0).to_string() == "100010111000000");

    LinearCode b42 = lwd::bch(4, 2);
    CHECK(b42.dimension() == 11);  // deg g = 4

    LinearCode b57 = lwd::bch(5, 7);
    CHECK(b57.length() == 31);
    CHECK(b57.dimension() == 16);  // deg g = 15

    CHECK_THROWS_AS(lwd::bch(4, 1), lwd::PreconditionError);
    CHECK_THROWS_AS(lwd::bch(4, 16), lwd::PreconditionError);
}

TEST_CASE("bch designed distance is a lower bound on true distance") {
    for (unsigned m = 3; m <= 5; ++m) {
        for (unsigned d = 2; d <= (1u << m) - 1; d += 2) {
            LinearCode c = lwd::bch(m, d);
            if (c.dimension() > 16) continue;
            CHECK(brute_min_distance(c) >= d);
        }
    }
}

TEST_CASE("extend") {
    LinearCode h3 = lwd::hamming(3);
    LinearCode ext = lwd::extend(h3);
    CHECK(ext.length() == 8);
    CHECK(ext.dimension() == 4);
    CHECK(ext.tags().extended_of == 7);
    // Weight distribution 1,14,1 at weights 0,4,8 matches RM(1,3).
    lwd::WeightTally a = oracle::brute_weight_distribution(ext);
    CHECK(a.at(0) == 1);
    CHECK(a.at(4) == 14);
    CHECK(a.at(8) == 1);
    CHECK(a == oracle::brute_weight_distribution(lwd::reed_muller(1, 3)));

    LinearCode rep = lwd::extend(lwd::hamming(2));
    auto words = oracle::codewords(rep);
    REQUIRE(words.size() == 2);
    CHECK(words[1].to_string() == "1111");

    // Extending an even code appends a zero column.
    LinearCode rm13 = lwd::reed_muller(1, 3);
    LinearCode ext_even = lwd::extend(rm13);
    for (std::size_t i = 0; i < ext_even.dimension(); ++i)
        CHECK_FALSE(ext_even.generator().row(i).bit(8));
}

TEST_CASE("every extended codeword has even weight") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        LinearCode c = lwd::random_linear_code(6 + seed % 7, 1 + seed % 5, seed);
        LinearCode ext = lwd::extend(c);
        auto base = oracle::codewords(c);
        auto extended = oracle::codewords(ext);
        REQUIRE(base.size() == extended.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK_FALSE(extended[i].odd_weight());
            std::size_t w = base[i].weight();
            CHECK(extended[i].weight() == w + (w % 2));
        }
    }
}

TEST_CASE("puncture") {
    LinearCode rm13 = lwd::reed_muller(1, 3);
    LinearCode punc = lwd::puncture(rm13, 7);
    CHECK(punc.length() == 7);
    CHECK(punc.dimension() == 4);
    lwd::WeightTally a = oracle::brute_weight_distribution(punc);
    CHECK(a.at(3) == 7);
    CHECK(a.at(4) == 7);
    CHECK(a.at(7) == 1);

    LinearCode rep4 = lwd::extend(lwd::hamming(2));
    LinearCode rep3 = lwd::puncture(rep4, 0);
    CHECK(rep3.length() == 3);
    CHECK(oracle::codewords(rep3)[1].weight() == 3);

    // The universe code contains weight-1 words at every position.
    CHECK_THROWS_AS(lwd::puncture(lwd::reed_muller(2, 2), 0), lwd::PreconditionError);
}

TEST_CASE("puncturing the parity position inverts extend") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        LinearCode c = lwd::random_linear_code(5 + seed % 9, 1 + seed % 6, seed ^ 0xbeef);
        LinearCode back = lwd::puncture(lwd::extend(c), c.length());
        // Same row space.
        CHECK(back.dimension() == c.dimension());
        CHECK(back.contains_code(c));
        CHECK(c.contains_code(back));
    }
}

TEST_CASE("even subcode") {
    LinearCode h3 = lwd::hamming(3);
    LinearCode even = lwd::even_subcode(h3);
    CHECK(even.dimension() == 3);
    for (const auto& v : oracle::codewords(even)) {
        CHECK_FALSE(v.odd_weight());
        CHECK((v.is_zero() || v.weight() == 4));
        CHECK(h3.contains(v));
    }

    LinearCode rm13 = lwd::reed_muller(1, 3);
    LinearCode same = lwd::even_subcode(rm13);
    CHECK(same.dimension() == rm13.dimension());
    CHECK(same.contains_code(rm13));

    LinearCode rep = lwd::hamming(2);
    LinearCode zero = lwd::even_subcode(rep);
    CHECK(zero.dimension() == 0);
    CHECK(zero.length() == 3);
}

TEST_CASE("even subcode has index 1 or 2") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        std::size_t n = 4 + seed % 10;
        std::size_t k = std::min<std::size_t>(1 + seed % 6, n);
        LinearCode c = lwd::random_linear_code(n, k, seed * 3);
        LinearCode even = lwd::even_subcode(c);
        std::size_t odd_words = 0;
        for (const auto& v : oracle::codewords(c))
            if (v.odd_weight()) ++odd_words;
        if (odd_words == 0) {
            CHECK(even.dimension() == c.dimension());
        } else {
            CHECK(even.dimension() == c.dimension() - 1);
            CHECK(odd_words == (std::size_t{1} << even.dimension()));
        }
        CHECK(c.contains_code(even));
    }
}

TEST_CASE("random codes are reproducible and full rank") {
    LinearCode a = lwd::random_linear_code(10, 5, 1);
    LinearCode b = lwd::random_linear_code(10, 5, 1);
    CHECK(a.generator() == b.generator());
    CHECK(lwd::rank(a.generator()) == 5);

    LinearCode u = lwd::random_linear_code(4, 4, 42);
    CHECK(u.dimension() == 4);  // forced to the universe code

    LinearCode single = lwd::random_linear_code(6, 1, 7);
    CHECK_FALSE(single.generator().row(0).is_zero());
}

TEST_CASE("matrix text format round trip") {
    LinearCode c = lwd::bch(4, 5);
    std::ostringstream out;
    lwd::save_generator_matrix(out, c);
    std::istringstream in(out.str());
    LinearCode back = lwd::load_generator_matrix(in);
    CHECK(back.generator() == c.generator());
}

TEST_CASE("matrix loader rejects malformed input") {
    auto load = [](const char* text) {
        std::istringstream in(text);
        return lwd::load_generator_matrix(in);
    };
    CHECK_THROWS_AS(load(""), lwd::ParseError);
    CHECK_THROWS_AS(load("# only a comment\n"), lwd::ParseError);
    CHECK_THROWS_AS(load("101\n10\n"), lwd::ParseError);
    CHECK_THROWS_AS(load("10a\n"), lwd::ParseError);
    CHECK_THROWS_AS(load("101\n101\n"), lwd::ParseError);  // dependent rows
    // Comments and whitespace are fine.
    LinearCode ok = load("# header\n  1010  \n0101\n");
    CHECK(ok.dimension() == 2);
}

TEST_CASE("gf2m field sanity") {
    lwd::Gf2mField f(4);
    CHECK(f.order() == 15);
    CHECK(f.alpha_power(0) == 1);
    CHECK(f.alpha_power(15) == 1);  // period 2^m - 1
    for (std::uint32_t x = 1; x <= 15; ++x) CHECK(f.alpha_power(f.log(x)) == x);
    CHECK(f.mul(0, 7) == 0);

    auto coset = f.cyclotomic_coset(3);
    CHECK(coset == std::vector<std::uint32_t>{3, 6, 9, 12});

    // x^4+x^3+x^2+x+1 divides x^5-1: not primitive for GF(16).
    CHECK_THROWS_AS(lwd::Gf2mField(4, 0b11111), lwd::PreconditionError);
    CHECK_THROWS_AS(lwd::Gf2mField(9), lwd::PreconditionError);
}
