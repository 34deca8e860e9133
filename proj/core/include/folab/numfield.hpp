#pragma once

#include <folab/rational.hpp>

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace folab {

class GroundField;
using FieldPtr = std::shared_ptr<const GroundField>;

// Element of a quotient-ring tower Q[t1]/(m1)[t2]/(m2)...
//
// A height-0 element is a plain rational leaf. A height-h element is the dense
// coefficient vector of a polynomial in the top generator with height-(h-1)
// coefficients, reduced below deg(m_h) and trimmed of trailing zeros; the zero
// element at positive height is the empty vector. Representations are canonical
// by construction, so equality is structural and the zero test is exact.
class FieldElement {
public:
    FieldElement() : leaf_(true), rat_(0) {}
    explicit FieldElement(Rational r) : leaf_(true), rat_(std::move(r)) {}

    static FieldElement node(std::vector<FieldElement> kids) {
        FieldElement e;
        e.leaf_ = false;
        e.kids_ = std::move(kids);
        return e;
    }

    bool is_leaf() const { return leaf_; }
    const Rational& leaf_value() const { return rat_; }
    const std::vector<FieldElement>& kids() const { return kids_; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.leaf_ == b.leaf_ && a.rat_ == b.rat_ && a.kids_ == b.kids_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    bool leaf_;
    Rational rat_;
    std::vector<FieldElement> kids_;
};

// Raised when arithmetic meets a zero divisor: the modulus of generator
// `generator_index` (0-based from the bottom of the tower) is reducible and
// `factor` is a discovered proper monic factor, expressed over the tower below
// that generator. The caller branches the computation over factor and cofactor.
struct SplitRequest {
    int generator_index;
    std::vector<FieldElement> factor;
};

class GroundField : public std::enable_shared_from_this<GroundField> {
public:
    // The shared height-0 field (plain rationals).
    static FieldPtr rationals();

    // Extend `base` by a generator with the given modulus (dense coefficients
    // over `base`, lowest power first). A non-monic modulus is rescaled monic
    // and the original leading coefficient is recorded as monic_unit().
    // Throws NotSquarefree if gcd(m, m') is nonconstant, UnsupportedSpec when
    // the tower would exceed `height_cap`.
    static FieldPtr adjoin_raw(FieldPtr base, std::string name,
                               std::vector<FieldElement> modulus, int height_cap = 2);

    int height() const;
    const FieldPtr& base() const { return base_; }
    const std::string& generator_name() const { return name_; }
    const std::vector<FieldElement>& modulus() const { return mod_; }
    int modulus_degree() const { return static_cast<int>(mod_.size()) - 1; }
    const Rational& monic_unit() const { return unit_; }
    int absolute_degree() const;
    const GroundField* level(int i) const;  // 0-based from the bottom; i < height()
    std::string describe() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement from_int(long n) const { return from_rational(Rational(n)); }
    FieldElement generator() const;
    FieldElement generator_at(int i) const;
    // Embed an element of base() into this field.
    FieldElement lift(const FieldElement& lower) const;

    bool is_zero(const FieldElement& a) const;
    bool is_one(const FieldElement& a) const;
    bool is_rational(const FieldElement& a) const;
    Rational to_rational(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul_rational(const FieldElement& a, const Rational& r) const;
    FieldElement pow(const FieldElement& a, long e) const;

    // DivisionByZero on zero input; SplitRequest when the representative is a
    // zero divisor against some modulus in the tower.
    FieldElement invert(const FieldElement& a) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;

    // Canonicalize an element expressed over a field this one is a quotient of
    // (same generator names, branch moduli dividing the originals).
    FieldElement migrate(const FieldElement& a) const;

    // Split generator `s.generator_index`: returns the factor field and the
    // cofactor field. Upper levels of the tower are re-reduced; squarefreeness
    // is inherited, so no recheck happens here.
    std::pair<FieldPtr, FieldPtr> branch(const SplitRequest& s) const;

    std::string to_string(const FieldElement& a) const;

private:
    GroundField() = default;
    static FieldPtr make_unchecked(FieldPtr base, std::string name,
                                   std::vector<FieldElement> monic_modulus, Rational unit);

    FieldPtr base_;  // null ⇔ height 0
    std::string name_;
    std::vector<FieldElement> mod_;  // monic, lowest power first; empty at height 0
    Rational unit_ = Rational(1);
};

// Run `fn(field)` over every branch of a computation, splitting the field
// whenever a SplitRequest escapes. `fn` receives the branch field and must
// migrate any captured elements into it. Results come back in a deterministic
// depth-first, factor-before-cofactor order.
template <class Fn>
auto for_each_branch(FieldPtr field, Fn&& fn)
    -> std::vector<std::pair<FieldPtr, decltype(fn(field))>> {
    std::vector<std::pair<FieldPtr, decltype(fn(field))>> out;
    std::vector<FieldPtr> work{std::move(field)};
    while (!work.empty()) {
        FieldPtr f = work.back();
        work.pop_back();
        try {
            out.emplace_back(f, fn(f));
        } catch (const SplitRequest& s) {
            auto [fac, cof] = f->branch(s);
            work.push_back(cof);
            work.push_back(fac);
        }
    }
    return out;
}

namespace detail {

// Dense polynomial vectors over a ground field (lowest power first).
// Internal helpers shared by numfield and unipoly; -1 encodes the zero degree.
using PV = std::vector<FieldElement>;

int pv_deg(const PV& p);
void pv_trim(const GroundField& F, PV& p);
PV pv_add(const GroundField& F, const PV& a, const PV& b);
PV pv_sub(const GroundField& F, const PV& a, const PV& b);
PV pv_neg(const GroundField& F, const PV& a);
PV pv_mul(const GroundField& F, const PV& a, const PV& b);
PV pv_mul_elem(const GroundField& F, const PV& a, const FieldElement& c);
PV pv_rem_monic(const GroundField& F, PV a, const PV& m);
// General division: inverts lc(b); may raise SplitRequest from the field.
std::pair<PV, PV> pv_divmod(const GroundField& F, const PV& a, const PV& b);
PV pv_monic(const GroundField& F, const PV& a);
PV pv_gcd_monic(const GroundField& F, PV a, PV b);
PV pv_derivative(const GroundField& F, const PV& a);
FieldElement pv_eval(const GroundField& F, const PV& a, const FieldElement& x);

}  // namespace detail

}  // namespace folab
