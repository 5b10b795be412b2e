#pragma once

#include "richlines/geometry.hpp"
#include "richlines/scalar.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace richlines {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order: lower total degree first, then x1 > x2 > ...
/// within a degree (so x^2, xy, y^2 for d = 2).
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors of total degree in [min_degree, max_degree], in graded
/// lexicographic order.
std::vector<Exponent> monomials(std::size_t dim, unsigned min_degree, unsigned max_degree);

/// Value of the monomial x^e at p.
Rational monomial_value(const Exponent& e, const Point& p);

class UniPoly;

// Sparse multivariate polynomial over Q. The zero polynomial has no terms;
// zero coefficients are never stored.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational, GrlexLess>;

    explicit MultiPoly(std::size_t dim = 0) : dim_(dim) {}

    static MultiPoly constant(std::size_t dim, const Rational& c);
    static MultiPoly variable(std::size_t dim, std::size_t index);
    /// Affine form c + sum_i a_i x_i.
    static MultiPoly affine(const Vector& a, const Rational& c);

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    void add_term(const Exponent& e, const Rational& c);
    Rational coefficient(const Exponent& e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    Rational eval(const Point& p) const;
    MultiPoly partial(std::size_t var) const;
    std::vector<MultiPoly> gradient() const;

    /// f(base + t * direction) as a polynomial in t.
    UniPoly restrict_to_line(const Line& l) const;

    /// Positive rescaling to integer coefficients with content 1. Sign
    /// patterns and the zero set are unchanged.
    MultiPoly primitive() const;

    /// Human readable form in variables x, y, z (d <= 3) or x1..xd.
    std::string to_string() const;

private:
    std::size_t dim_;
    Terms terms_;
};

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Vector coeffs);
    UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(Vector(coeffs)) {}

    static UniPoly monomial(const Rational& c, std::size_t degree);

    const Vector& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& lead() const { return c_.back(); }

    Rational eval(const Rational& t) const;
    int sign_at(const Rational& t) const { return sign(eval(t)); }
    UniPoly derivative() const;
    /// Positive rescaling to integer coefficients with content 1.
    UniPoly primitive() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& s);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division over Q; throws ZeroPolynomial for a zero divisor.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    /// Monic gcd; gcd(0, 0) = 0.
    static UniPoly gcd(UniPoly a, UniPoly b);

    std::string to_string() const;

private:
    void trim();
    Vector c_;
};

/// Open interval (lo, hi) holding exactly one real root; lo and hi are not roots.
struct RootInterval {
    Rational lo;
    Rational hi;
};

/// u / gcd(u, u'), made primitive.
UniPoly squarefree_part(const UniPoly& u);

/// Sturm chain of the squarefree part of u: p0 = s, p1 = s', p(k+1) = -rem(p(k-1), p(k)),
/// every member rescaled by a positive constant to a primitive integer polynomial.
std::vector<UniPoly> sturm_sequence(const UniPoly& u);

/// Number of distinct real roots of u in the open interval (a, b).
int sturm_count(const UniPoly& u, const Rational& a, const Rational& b);

/// 1 + max |c_i| / |lead|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const UniPoly& u);

/// Disjoint isolating intervals, left to right, for all distinct roots in (lo, hi).
std::vector<RootInterval> isolate_roots(const UniPoly& u, const Rational& lo, const Rational& hi);

/// Signs of u on the open intervals between consecutive real roots in (-bound, bound).
std::vector<int> sample_sign_sequence(const UniPoly& u, const Rational& bound);

}  // namespace richlines
