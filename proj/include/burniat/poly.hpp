#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "burniat/rational.hpp"

namespace burniat {

// Variables are interned names; ids are stable within a process.
int poly_var_id(const std::string &name);
const std::string &poly_var_name(int id);

// Sparse exponent vector, sorted by variable id.
struct Monomial {
    std::vector<std::pair<int, int>> factors; // (var id, exponent > 0)

    static Monomial one() { return {}; }
    static Monomial var(int id, int exp = 1);

    int degree() const;
    int exponent_of(int id) const;
    Monomial operator*(const Monomial &o) const;
    bool divisible_by(const Monomial &o) const;
    Monomial divide_by(const Monomial &o) const;

    bool operator==(const Monomial &o) const { return factors == o.factors; }
    std::string to_string() const;
};

// Graded-lexicographic order: higher total degree first, then lex on ids.
struct GrlexGreater {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

// Multivariate polynomial with exact rational coefficients in canonical
// graded-lex form; the zero polynomial has no terms.
class Poly {
public:
    using Terms = std::map<Monomial, BigRat, GrlexGreater>;

    Poly() = default;
    Poly(long long c) { set_term(Monomial::one(), BigRat(c)); }
    explicit Poly(const BigRat &c) { set_term(Monomial::one(), c); }

    static Poly variable(const std::string &name);
    static Poly term(const Monomial &m, const BigRat &c);

    bool is_zero() const { return terms_.empty(); }
    const Terms &terms() const { return terms_; }
    int total_degree() const;
    int degree_in(int var_id) const;

    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator-() const;
    Poly operator*(const Poly &o) const;
    Poly &operator+=(const Poly &o) { return *this = *this + o; }
    Poly &operator-=(const Poly &o) { return *this = *this - o; }
    Poly &operator*=(const Poly &o) { return *this = *this * o; }
    bool operator==(const Poly &o) const { return terms_ == o.terms_; }

    Poly pow(int e) const;

    // Simultaneous substitution of polynomials for variables; variables not
    // in the map are left alone.
    Poly substitute(const std::map<int, Poly> &images) const;

    // Remainder of multivariate division by the given divisors (graded-lex
    // leading terms); zero remainder certifies ideal membership.
    Poly reduce(const std::vector<Poly> &divisors) const;

    // Strips the greatest common monomial factor and makes the leading
    // coefficient positive; used for projective normalization.
    Poly strip_content() const;

    std::string to_string() const;

private:
    void set_term(const Monomial &m, const BigRat &c);
    Terms terms_;
};

} // namespace burniat
