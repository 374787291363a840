#include "lwd/codes.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "lwd/gf2m.hpp"

namespace lwd {

LinearCode::LinearCode(BinaryMatrix generator, CodeTags tags)
    : g_(std::move(generator)), tags_(tags) {
    if (g_.cols() == 0) throw PreconditionError("code length must be positive");
    for (std::size_t i = 0; i < g_.rows(); ++i)
        if (!ech_.insert(g_.row(i)))
            throw PreconditionError("generator rows are linearly dependent");
}

bool LinearCode::contains_code(const LinearCode& sub) const {
    if (sub.length() != length()) return false;
    for (std::size_t i = 0; i < sub.dimension(); ++i)
        if (!contains(sub.generator().row(i))) return false;
    return true;
}

static void check_length_cap(std::size_t n) {
    if (n > kMaxConstructionLength)
        throw CapError("code length " + std::to_string(n) + " exceeds construction cap");
}

LinearCode hamming(unsigned r) {
    if (r < 2) throw PreconditionError("hamming: r must be at least 2");
    std::size_t n = (std::size_t{1} << r) - 1;
    check_length_cap(n);
    // Column c-1 of the check matrix is the binary expansion of c. Power-of-two
    // columns are the parity positions; each data column c contributes a
    // generator row with a 1 at c-1 and at the parity positions in c's
    // expansion.
    BinaryMatrix g(n);
    for (std::size_t c = 1; c <= n; ++c) {
        if ((c & (c - 1)) == 0) continue;  // parity position
        BitVector row(n);
        row.set_bit(c - 1, true);
        for (unsigned j = 0; j < r; ++j)
            if ((c >> j) & 1u) row.set_bit((std::size_t{1} << j) - 1, true);
        g.add_row(std::move(row));
    }
    return LinearCode(std::move(g));
}

LinearCode reed_muller(unsigned r, unsigned m) {
    if (r > m) throw PreconditionError("reed_muller: need 0 <= r <= m");
    std::size_t n = std::size_t{1} << m;
    check_length_cap(n);
    // Monomial with variable mask t evaluates to 1 at point p iff t's
    // variables are all set in p. Points in ascending order; rows ordered by
    // (degree, mask).
    BinaryMatrix g(n);
    for (unsigned deg = 0; deg <= r; ++deg) {
        for (std::size_t t = 0; t < n; ++t) {
            if (static_cast<unsigned>(std::popcount(t)) != deg) continue;
            BitVector row(n);
            for (std::size_t p = 0; p < n; ++p)
                if ((p & t) == t) row.set_bit(p, true);
            g.add_row(std::move(row));
        }
    }
    CodeTags tags;
    tags.transitive_invariant = true;  // invariant under the affine group
    return LinearCode(std::move(g), tags);
}

LinearCode bch(unsigned m, unsigned designed_distance) {
    std::size_t n = (std::size_t{1} << m) - 1;
    check_length_cap(n);
    if (designed_distance < 2 || designed_distance > n)
        throw PreconditionError("bch: designed distance must be in [2, n]");
    Gf2mField field(m);
    // g(x) = lcm of the minimal polynomials of alpha^1 .. alpha^(d-1); the
    // lcm dedupes by cyclotomic coset representative.
    Gf2Poly g(1);
    std::vector<bool> seen(n, false);
    for (unsigned e = 1; e < designed_distance; ++e) {
        std::uint32_t rep = field.cyclotomic_coset(e).front();
        if (seen[rep]) continue;
        seen[rep] = true;
        g = g * field.minimal_polynomial(e);
    }
    std::size_t deg = static_cast<std::size_t>(g.degree());
    std::size_t k = n - deg;
    BinaryMatrix gen(n);
    for (std::size_t i = 0; i < k; ++i) {
        BitVector row(n);
        for (std::size_t j = 0; j <= deg; ++j)
            if (g.coeff(j)) row.set_bit(i + j, true);
        gen.add_row(std::move(row));
    }
    CodeTags tags;
    tags.cyclic = true;
    return LinearCode(std::move(gen), tags);
}

LinearCode extend(const LinearCode& c) {
    std::size_t n = c.length();
    check_length_cap(n + 1);
    BinaryMatrix g(n + 1);
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        const BitVector& row = c.generator().row(i);
        g.add_row(row.with_appended_bit(row.odd_weight()));
    }
    CodeTags tags;
    tags.extended_of = n;
    return LinearCode(std::move(g), tags);
}

LinearCode puncture(const LinearCode& c, std::size_t pos) {
    if (pos >= c.length()) throw PreconditionError("puncture: position out of range");
    if (c.length() < 2) throw PreconditionError("puncture: length would drop to zero");
    BinaryMatrix g(c.length() - 1);
    for (std::size_t i = 0; i < c.dimension(); ++i)
        g.add_row(c.generator().row(i).without_coordinate(pos));
    if (rank(g) != c.dimension())
        throw PreconditionError("puncture destroys dimension");
    return LinearCode(std::move(g));
}

LinearCode even_subcode(const LinearCode& c) {
    std::vector<std::size_t> odd_rows;
    for (std::size_t i = 0; i < c.dimension(); ++i)
        if (c.generator().row(i).odd_weight()) odd_rows.push_back(i);
    if (odd_rows.empty()) return c;  // weight parity is linear: all even
    // Pivot on one odd row: adding it to every other odd row leaves a basis
    // of the even-weight subcode of dimension k-1.
    BinaryMatrix g(c.length());
    const BitVector& pivot = c.generator().row(odd_rows.front());
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        if (i == odd_rows.front()) continue;
        BitVector row = c.generator().row(i);
        if (row.odd_weight()) row ^= pivot;
        g.add_row(std::move(row));
    }
    return LinearCode(std::move(g));
}

LinearCode random_linear_code(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k == 0 || k > n) throw PreconditionError("random_linear_code: need 1 <= k <= n");
    check_length_cap(n);
    std::mt19937_64 rng(seed);
    std::size_t words = (n + 63) / 64;
    detail::Echelon ech;
    BinaryMatrix g(n);
    while (g.rows() < k) {
        BitVector row(n);
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = rng();
            for (std::size_t b = 0; b < 64; ++b) {
                std::size_t i = w * 64 + b;
                if (i < n && ((bits >> b) & 1u)) row.set_bit(i, true);
            }
        }
        if (ech.insert(row)) g.add_row(std::move(row));
    }
    return LinearCode(std::move(g));
}

static std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

LinearCode load_generator_matrix(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trimmed(line);
        if (t.empty() || t.front() == '#') continue;
        rows.push_back(std::move(t));
    }
    if (rows.empty()) throw ParseError("matrix file contains no rows");
    std::size_t n = rows.front().size();
    BinaryMatrix g(n);
    for (const auto& r : rows) {
        if (r.size() != n) throw ParseError("matrix rows have differing lengths");
        for (char ch : r)
            if (ch != '0' && ch != '1')
                throw ParseError("matrix rows may contain only '0' and '1'");
        g.add_row(BitVector::from_string(r));
    }
    if (rank(g) != g.rows())
        throw ParseError("matrix rows are linearly dependent; expected a basis");
    return LinearCode(std::move(g));
}

LinearCode load_generator_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    return load_generator_matrix(in);
}

void save_generator_matrix(std::ostream& out, const LinearCode& c) {
    out << "# n=" << c.length() << " k=" << c.dimension() << "\n";
    for (std::size_t i = 0; i < c.dimension(); ++i)
        out << c.generator().row(i).to_string() << "\n";
}

void save_generator_matrix_file(const std::string& path, const LinearCode& c) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    save_generator_matrix(out, c);
}

}  // namespace lwd
