#pragma once

#include <folab/numfield.hpp>

#include <string>
#include <vector>

namespace folab {

// Univariate polynomial over a ground field (tower of quotient rings; height 0
// is the plain rationals). Coefficients are dense, index = exponent, trimmed.
// The degree of the zero polynomial is deliberately not a number: callers must
// test is_zero() first, degree() throws on the zero polynomial.
class UniPoly {
public:
    explicit UniPoly(FieldPtr field, std::string var = "z")
        : F_(std::move(field)), var_(std::move(var)) {}
    UniPoly(FieldPtr field, std::vector<FieldElement> coeffs, std::string var = "z");

    static UniPoly from_rationals(FieldPtr field, const std::vector<Rational>& coeffs,
                                  std::string var = "z");
    static UniPoly constant(FieldPtr field, const FieldElement& c, std::string var = "z");
    // c_hi * z^hi, convenience for sparse construction
    static UniPoly monomial(FieldPtr field, const FieldElement& c, int exp,
                            std::string var = "z");

    const FieldPtr& field() const { return F_; }
    const std::string& var() const { return var_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const;  // throws Error on the zero polynomial
    FieldElement coeff(int i) const;
    const FieldElement& leading() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly mul_elem(const FieldElement& c) const;
    UniPoly mul_rational(const Rational& r) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    FieldElement eval(const FieldElement& x) const;

    // Quotient and remainder; inverts the divisor's leading coefficient, so a
    // SplitRequest can escape over reducible quotient rings.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& b) const;
    UniPoly exact_div(const UniPoly& b) const;  // throws Error on nonzero remainder
    bool divides(const UniPoly& b) const;       // *this | b

    // Multiplicity of root x (0 when not a root). Throws on the zero polynomial.
    int valuation_at(const FieldElement& x) const;
    // Multiplicity of the factor z (trailing-zero count).
    int valuation_at_zero() const;

    UniPoly with_var(std::string var) const;
    std::string to_string() const;

private:
    FieldPtr F_;
    std::vector<FieldElement> c_;
    std::string var_;
};

// Monic greatest common divisor. Subresultant PRS over the rationals; monic
// Euclidean sequence over towers (zero-divisor leading coefficients surface as
// SplitRequest there). Not both inputs may be zero.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

struct SquarefreeDecomposition {
    // (multiplicity, monic squarefree factor), multiplicities increasing
    std::vector<std::pair<int, UniPoly>> parts;
};

// Yun decomposition; product of factor^multiplicity equals the input up to a
// nonzero scalar, factors pairwise coprime and squarefree. Input nonzero.
SquarefreeDecomposition squarefree_decompose(const UniPoly& f);

// The squarefree radical: product of the squarefree parts, monic.
UniPoly radical(const UniPoly& f);

// Sylvester resultant (f-rows first), computed by the Euclidean-PRS recurrence.
FieldElement resultant(const UniPoly& f, const UniPoly& g);

// Fraction-free (Bareiss) elimination; unique solution or SingularSystem.
std::vector<FieldElement> solve_linear_system(const FieldPtr& field,
                                              std::vector<std::vector<FieldElement>> matrix,
                                              std::vector<FieldElement> rhs);

// Determinant of a square matrix by the same elimination.
FieldElement determinant(const FieldPtr& field, std::vector<std::vector<FieldElement>> matrix);

// Extend a field by a generator with the given modulus (monicized on input,
// original leading coefficient recorded). NotSquarefree when gcd(m, m') != 1.
FieldPtr adjoin(FieldPtr base, const std::string& name, const UniPoly& modulus);

}  // namespace folab
