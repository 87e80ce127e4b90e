// gf2.hpp
// Exact linear and polynomial algebra over GF(2): color vectors in
// Hom(G,Z2) ~= GF(2)^k, subspaces, multivariate polynomials in
// r1,...,rk, linear-form division and fraction arithmetic.
//
// Conventions (fixed for all serialization):
//   - a vector is a bitstring of length k with r1 leftmost; internally
//     bit i of `bits` is the coefficient of r_{i+1}
//   - "lexicographic" order on vectors is bitstring order (r1 first)
//   - monomials are ordered graded-lex with r1 > r2 > ... > rk,
//     polynomials are kept with the leading term first

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace z2skel {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int kMaxRank = 16;       // ambient ranks supported (k1+k2 of products)
constexpr int kMaxExponent = 255;  // per-variable exponent cap

struct GF2Vector {
    uint32_t bits = 0;
    int width = 0;

    GF2Vector() = default;
    GF2Vector(uint32_t b, int w);

    static GF2Vector zero(int w) { return GF2Vector(0, w); }
    static GF2Vector unit(int i, int w);               // r_{i+1}
    static GF2Vector parse(const std::string& s);      // "110" -> r1+r2

    bool is_zero() const { return bits == 0; }
    bool get(int i) const { return (bits >> i) & 1u; }
    int popcount() const;

    GF2Vector operator+(const GF2Vector& o) const;
    bool operator==(const GF2Vector& o) const { return bits == o.bits && width == o.width; }
    bool operator!=(const GF2Vector& o) const { return !(*this == o); }

    std::string str() const;
};

// parity of <a,b> under the standard pairing (identifies the dual space
// Hom(Z2,G) with GF(2)^k in the dual basis)
bool dot(const GF2Vector& a, const GF2Vector& b);

// bitstring order, r1 most significant
bool lex_less(const GF2Vector& a, const GF2Vector& b);

struct GF2Subspace {
    int width = 0;
    std::vector<uint32_t> rows;  // reduced row echelon, pivot columns increasing

    int rank() const { return static_cast<int>(rows.size()); }
    bool contains(const GF2Vector& v) const;
    std::vector<GF2Vector> basis() const;
    // all 2^rank member vectors, sorted lexicographically
    std::vector<GF2Vector> elements() const;

    bool operator==(const GF2Subspace& o) const { return width == o.width && rows == o.rows; }
    bool operator!=(const GF2Subspace& o) const { return !(*this == o); }
};

GF2Subspace span(const std::vector<GF2Vector>& vectors, int width);

// true iff every size-l sub-multiset is linearly independent; vacuously
// true when l exceeds the multiset size
bool is_l_independent(const std::vector<GF2Vector>& vectors, int l);

// canonical coset representative in Hom/<mod>: min(v, v+mod) lexicographically
GF2Vector quotient_rep(const GF2Vector& v, const GF2Vector& mod);

// {w : <w,v> = 0 for all v in s}; an order-reversing involution
GF2Subspace annihilator(const GF2Subspace& s);

struct Monomial {
    std::array<uint8_t, kMaxRank> exps{};
    int width = 0;

    int degree() const;
    Monomial operator*(const Monomial& o) const;  // exponent overflow -> Error
    bool operator==(const Monomial& o) const { return width == o.width && exps == o.exps; }
    std::string str() const;  // "r1^2 r3", "1" for the unit
};

// graded-lex, r1 most significant; true if a > b
bool monomial_greater(const Monomial& a, const Monomial& b);

class GF2Poly {
public:
    GF2Poly() = default;
    explicit GF2Poly(int width) : width_(width) {}

    static GF2Poly zero(int width) { return GF2Poly(width); }
    static GF2Poly one(int width);
    static GF2Poly variable(int i, int width);
    static GF2Poly from_form(const GF2Vector& form);
    // terms need not be sorted or distinct; duplicate pairs cancel
    static GF2Poly from_monomials(std::vector<Monomial> ms, int width);

    int width() const { return width_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int degree() const;  // -1 for the zero polynomial
    const std::vector<Monomial>& terms() const { return terms_; }

    GF2Poly operator+(const GF2Poly& o) const;
    GF2Poly operator*(const GF2Poly& o) const;
    GF2Poly& operator+=(const GF2Poly& o) { return *this = *this + o; }
    GF2Poly& operator*=(const GF2Poly& o) { return *this = *this * o; }
    bool operator==(const GF2Poly& o) const { return width_ == o.width_ && terms_ == o.terms_; }
    bool operator!=(const GF2Poly& o) const { return !(*this == o); }

    // substitute the variable r_{j+1} by a polynomial
    GF2Poly substitute(int j, const GF2Poly& value) const;

    std::string str() const;

private:
    int width_ = 0;
    std::vector<Monomial> terms_;  // descending graded-lex, pairwise distinct
};

// expanded product of degree-1 forms; empty product is 1
GF2Poly form_product(const std::vector<GF2Vector>& forms, int width);

struct FormDivision {
    std::optional<GF2Poly> quotient;
    GF2Poly remainder;  // the substituted polynomial; zero iff divisible
};

// exact division of p by a nonzero linear form, decided by substituting the
// pivot variable; quotient satisfies quotient * form = p when it exists
FormDivision divide_by_form(const GF2Poly& p, const GF2Vector& form);

struct GF2Fraction {
    GF2Poly numerator;
    // multiset of nonzero forms in ascending bit order (r1, r2, r1+r2, ...)
    std::vector<GF2Vector> denominator;

    bool is_polynomial() const { return denominator.empty(); }
    bool operator==(const GF2Fraction& o) const {
        return numerator == o.numerator && denominator == o.denominator;
    }
    std::string str() const;
};

// reduce num/denom by repeated linear-form division; zero numerator clears
// the denominator
GF2Fraction make_fraction(GF2Poly num, std::vector<GF2Vector> denom);

// sum over the common denominator (multiset max of multiplicities), reduced
GF2Fraction fraction_sum(
    const std::vector<std::pair<GF2Poly, std::vector<GF2Vector>>>& terms, int width);

}  // namespace z2skel
