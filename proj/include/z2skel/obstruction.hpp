// obstruction.hpp
// The fixed-point localization realizability test: formal symmetric functions
// over GF(2) in s1..sn (elementary symmetric polynomials), their evaluation
// on the color multiset of a vertex, the fixed-point localization sum
//   sum_p f(alpha(E_p)) / prod_{e in E_p} alpha(e),
// and the verdicts: the complete parity criterion for k = 1 and the
// bounded-degree obstruction scan for k >= 2.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "z2skel/skeleton.hpp"

namespace z2skel {

struct SymmetricExpr {
    int arity = 0;                                // number of underlying variables n
    std::vector<std::vector<uint8_t>> monomials;  // exponents of s1..sn, canonical order

    static SymmetricExpr zero(int arity) { return SymmetricExpr{arity, {}}; }
    static SymmetricExpr one(int arity);
    static SymmetricExpr sigma(int i, int arity);  // the single variable s_i
    // grammar: terms like "s2*s3", "s1^2 + s4", "1"; whitespace-insensitive,
    // integer coefficients reduced mod 2
    static SymmetricExpr parse(const std::string& text, int arity);

    bool is_zero() const { return monomials.empty(); }
    int degree() const;  // weighted: deg s_i = i; -1 for zero
    std::string str() const;
    bool operator==(const SymmetricExpr& o) const {
        return arity == o.arity && monomials == o.monomials;
    }
};

// sigma_i of the given degree-1 forms, expanded in GF(2)[r1..rk]
GF2Poly elementary_symmetric(const std::vector<GF2Vector>& forms, int i);

// substitute sigma_i(forms) for s_i and expand
GF2Poly eval_symmetric(const SymmetricExpr& f, const std::vector<GF2Vector>& forms);

// the reduced localization sum over all vertices
GF2Fraction localization_sum(const ColoredSkeleton& s, const SymmetricExpr& f);

struct RealizabilityVerdict {
    enum Kind { RealizableK1, NotRealizableK1, Obstructed, NoObstructionUpToDegree };
    Kind kind;
    int max_degree = 0;                    // for NoObstructionUpToDegree
    std::optional<SymmetricExpr> witness;  // for Obstructed
    std::optional<GF2Fraction> sum;        // for Obstructed and the k=1 f=1 sum
    std::string describe() const;
};

// k = 1: complete criterion by vertex parity.  k >= 2: scan all monomials in
// s1..sn of weighted degree <= max_degree in graded-lex order; the first
// non-polynomial sum is an obstruction certificate.  max_degree < 0 selects
// the default 2n.
RealizabilityVerdict realizability_check(const ColoredSkeleton& s, int max_degree = -1);

// all exponent vectors of s1..sn with weighted degree <= max_degree, in
// graded-lex order (degree first, then lexicographic on exponents)
std::vector<std::vector<uint8_t>> symmetric_monomials_up_to(int arity, int max_degree);

}  // namespace z2skel
