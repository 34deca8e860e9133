#pragma once

#include <folab/unipoly.hpp>

#include <array>
#include <utility>
#include <vector>

namespace folab {

// Direction convention, fixed once for every module and report:
// a point of P^1 is [x0 : y0]; the affine coordinate is z = y/x;
// [1:0] <-> z = 0 (the y = 0 direction); [0:1] <-> z = infinity and carries
// the x-valuation of a form. Divisors never store algebraic numbers as
// points: finite loci stay squarefree polynomials in z.

// Homogeneous binary form in (x, y): coefficients indexed by x-exponent,
// length degree+1. The zero form of a stated degree is representable.
class BinaryForm {
public:
    BinaryForm(FieldPtr field, int degree);
    BinaryForm(FieldPtr field, int degree, std::vector<FieldElement> coeffs);

    static BinaryForm from_rationals(FieldPtr field, int degree,
                                     const std::vector<Rational>& coeffs_by_xexp);
    // F(x,y) = sum g_i x^{d-i} y^i, i.e. coefficients by z-power of F(1,z).
    static BinaryForm from_dehomogenized(const UniPoly& g, int degree);

    const FieldPtr& field() const { return F_; }
    int degree() const { return deg_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    const FieldElement& coeff_xexp(int k) const { return c_[k]; }
    bool is_zero() const;

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.deg_ == b.deg_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    BinaryForm operator-() const;
    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    BinaryForm mul_elem(const FieldElement& c) const;
    BinaryForm mul_rational(const Rational& r) const;

    BinaryForm partial_x() const;
    BinaryForm partial_y() const;
    BinaryForm mul_x() const;  // multiply by x (degree + 1)
    BinaryForm mul_y() const;

    // g(z) = F(1,z) together with the multiplicity of x as a factor
    // (= degree - deg_z g). Throws ZeroForm on the zero form.
    std::pair<UniPoly, int> dehomogenize() const;
    int x_valuation() const;

    // F(ax+by, cx+dy) for a rational 2x2 matrix, used by conjugacy checks.
    BinaryForm compose_linear(const std::array<std::array<Rational, 2>, 2>& g) const;

    std::string to_string() const;  // human-readable, in x and y

private:
    FieldPtr F_;
    int deg_;
    std::vector<FieldElement> c_;
};

// Divisor on P^1: squarefree pairwise-coprime finite loci in z with positive
// multiplicities, plus the multiplicity of the direction [0:1] (z = infinity).
struct P1Divisor {
    struct Part {
        int multiplicity;
        UniPoly locus;  // squarefree, monic
    };
    std::vector<Part> parts;
    int infinity_multiplicity = 0;

    int total_degree() const;
    bool empty() const { return parts.empty() && infinity_multiplicity == 0; }
    std::string to_string() const;
};

// Squarefree decomposition of F's root divisor; total degree equals deg F.
P1Divisor form_divisor(const BinaryForm& F);

// Split D along membership of its loci in the root set of F: `inside` collects
// the points that are roots of F, `outside` the rest; multiplicities preserved.
std::pair<P1Divisor, P1Divisor> divisor_gcd_split(const P1Divisor& D, const BinaryForm& F);

// Re-reduce into a branch field (same tower shape, factored moduli).
UniPoly migrate(const FieldPtr& field, const UniPoly& p);
BinaryForm migrate(const FieldPtr& field, const BinaryForm& f);

}  // namespace folab
