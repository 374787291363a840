#pragma once

#include <cstdint>
#include <vector>

#include "lwd/errors.hpp"

namespace lwd {

/// Polynomial over GF(2), bit i = coefficient of x^i, arbitrary degree.
class Gf2Poly {
public:
    Gf2Poly() : words_(1, 0) {}
    explicit Gf2Poly(std::uint64_t mask) : words_(1, mask) {}

    bool coeff(std::size_t i) const {
        std::size_t w = i >> 6;
        return w < words_.size() && ((words_[w] >> (i & 63)) & 1u);
    }
    void set_coeff(std::size_t i, bool value);
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }

    Gf2Poly& operator^=(const Gf2Poly& other);
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
    bool operator==(const Gf2Poly& other) const;

private:
    std::vector<std::uint64_t> words_;  // may carry high zero words
};

/// GF(2^m) in polynomial basis with log/antilog tables over a fixed
/// primitive polynomial.
class Gf2mField {
public:
    /// Uses the library's default primitive polynomial for m (2 <= m <= 8).
    explicit Gf2mField(unsigned m);
    Gf2mField(unsigned m, std::uint32_t primitive_poly);

    unsigned m() const { return m_; }
    std::uint32_t primitive_poly() const { return poly_; }
    std::uint32_t order() const { return (std::uint32_t{1} << m_) - 1; }

    std::uint32_t alpha_power(std::uint32_t i) const { return antilog_[i % order()]; }
    std::uint32_t log(std::uint32_t x) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

    /// Exponents in the 2-cyclotomic coset of e mod (2^m - 1), ascending.
    std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t e) const;
    /// Minimal polynomial of alpha^e over GF(2); degree = coset size <= m.
    Gf2Poly minimal_polynomial(std::uint32_t e) const;

    static std::uint32_t default_primitive_poly(unsigned m);

private:
    unsigned m_;
    std::uint32_t poly_;
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> log_;
};

}  // namespace lwd
