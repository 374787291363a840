#include "lwd/gf2m.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace lwd {

void Gf2Poly::set_coeff(std::size_t i, bool value) {
    std::size_t w = i >> 6;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[w] |= mask;
    else
        words_[w] &= ~mask;
}

int Gf2Poly::degree() const {
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w])
            return static_cast<int>(w * 64 + 63 - std::countl_zero(words_[w]));
    return -1;
}

Gf2Poly& Gf2Poly::operator^=(const Gf2Poly& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly r;
    int da = a.degree();
    int db = b.degree();
    if (da < 0 || db < 0) return r;
    for (int i = 0; i <= da; ++i) {
        if (!a.coeff(static_cast<std::size_t>(i))) continue;
        for (int j = 0; j <= db; ++j)
            if (b.coeff(static_cast<std::size_t>(j)))
                r.set_coeff(static_cast<std::size_t>(i + j),
                            !r.coeff(static_cast<std::size_t>(i + j)));
    }
    return r;
}

bool Gf2Poly::operator==(const Gf2Poly& other) const {
    std::size_t n = std::max(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t a = i < words_.size() ? words_[i] : 0;
        std::uint64_t b = i < other.words_.size() ? other.words_[i] : 0;
        if (a != b) return false;
    }
    return true;
}

std::uint32_t Gf2mField::default_primitive_poly(unsigned m) {
    switch (m) {
        case 2: return 0b111;        // x^2 + x + 1
        case 3: return 0b1011;       // x^3 + x + 1
        case 4: return 0b10011;      // x^4 + x + 1
        case 5: return 0b100101;     // x^5 + x^2 + 1
        case 6: return 0b1000011;    // x^6 + x + 1
        case 7: return 0b10001001;   // x^7 + x^3 + 1
        case 8: return 0b100011101;  // x^8 + x^4 + x^3 + x^2 + 1
        default:
            throw PreconditionError("no default primitive polynomial for m=" +
                                    std::to_string(m));
    }
}

Gf2mField::Gf2mField(unsigned m) : Gf2mField(m, default_primitive_poly(m)) {}

Gf2mField::Gf2mField(unsigned m, std::uint32_t primitive_poly)
    : m_(m), poly_(primitive_poly) {
    if (m < 2 || m > 16) throw PreconditionError("field degree m must be in [2,16]");
    std::uint32_t n = order();
    antilog_.assign(n, 0);
    log_.assign(std::size_t{1} << m_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        antilog_[i] = x;
        if (log_[x] != 0 && x != 1)
            throw PreconditionError("polynomial is not primitive");
        log_[x] = i;
        x <<= 1;
        if (x >> m_) x ^= poly_;
    }
    if (x != 1) throw PreconditionError("polynomial is not primitive");
}

std::uint32_t Gf2mField::log(std::uint32_t x) const {
    if (x == 0 || x > order()) throw PreconditionError("log of zero or out-of-field element");
    return log_[x];
}

std::uint32_t Gf2mField::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[(log_[a] + log_[b]) % order()];
}

std::vector<std::uint32_t> Gf2mField::cyclotomic_coset(std::uint32_t e) const {
    std::uint32_t n = order();
    std::vector<std::uint32_t> coset;
    std::uint32_t j = e % n;
    do {
        coset.push_back(j);
        j = (2 * j) % n;
    } while (j != e % n);
    std::sort(coset.begin(), coset.end());
    return coset;
}

Gf2Poly Gf2mField::minimal_polynomial(std::uint32_t e) const {
    // Multiply out prod_{j in coset} (x - alpha^j) over GF(2^m); the result
    // must have coefficients in GF(2).
    std::vector<std::uint32_t> coset = cyclotomic_coset(e);
    std::vector<std::uint32_t> coeffs{1};  // p(x) = 1, coefficients ascending
    for (std::uint32_t j : coset) {
        std::uint32_t root = alpha_power(j);
        std::vector<std::uint32_t> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] ^= coeffs[i];             // x * p
            next[i] ^= mul(coeffs[i], root);      // root * p
        }
        coeffs = std::move(next);
    }
    Gf2Poly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1)
            throw PreconditionError("minimal polynomial has a coefficient outside GF(2)");
        if (coeffs[i]) p.set_coeff(i, true);
    }
    return p;
}

}  // namespace lwd
