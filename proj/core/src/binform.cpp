#include <folab/binform.hpp>
#include <folab/errors.hpp>

#include <cassert>

namespace folab {

BinaryForm::BinaryForm(FieldPtr field, int degree)
    : F_(std::move(field)), deg_(degree), c_(degree + 1, F_->zero()) {
    if (degree < 0) throw Error("binary form degree must be >= 0");
}

BinaryForm::BinaryForm(FieldPtr field, int degree, std::vector<FieldElement> coeffs)
    : F_(std::move(field)), deg_(degree), c_(std::move(coeffs)) {
    if (degree < 0) throw Error("binary form degree must be >= 0");
    if (c_.size() != static_cast<size_t>(degree) + 1)
        throw Error("binary form coefficient count must be degree + 1");
}

BinaryForm BinaryForm::from_rationals(FieldPtr field, int degree,
                                      const std::vector<Rational>& coeffs_by_xexp) {
    std::vector<FieldElement> c;
    c.reserve(coeffs_by_xexp.size());
    for (const auto& r : coeffs_by_xexp) c.push_back(field->from_rational(r));
    return BinaryForm(std::move(field), degree, std::move(c));
}

BinaryForm BinaryForm::from_dehomogenized(const UniPoly& g, int degree) {
    const FieldPtr& F = g.field();
    BinaryForm out(F, degree);
    if (g.is_zero()) return out;
    if (g.degree() > degree) throw Error("dehomogenized degree exceeds form degree");
    for (int i = 0; i <= g.degree(); ++i) out.c_[degree - i] = g.coeff(i);
    return out;
}

bool BinaryForm::is_zero() const {
    for (const auto& c : c_)
        if (!F_->is_zero(c)) return false;
    return true;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm r(*this);
    for (auto& c : r.c_) c = F_->neg(c);
    return r;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.deg_ != b.deg_) throw Error("binary form degree mismatch in +");
    BinaryForm r(a);
    for (int i = 0; i <= a.deg_; ++i) r.c_[i] = a.F_->add(a.c_[i], b.c_[i]);
    return r;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    if (a.deg_ != b.deg_) throw Error("binary form degree mismatch in -");
    BinaryForm r(a);
    for (int i = 0; i <= a.deg_; ++i) r.c_[i] = a.F_->sub(a.c_[i], b.c_[i]);
    return r;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    const GroundField& F = *a.F_;
    BinaryForm r(a.F_, a.deg_ + b.deg_);
    for (int i = 0; i <= a.deg_; ++i) {
        if (F.is_zero(a.c_[i])) continue;
        for (int j = 0; j <= b.deg_; ++j)
            r.c_[i + j] = F.add(r.c_[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    return r;
}

BinaryForm BinaryForm::mul_elem(const FieldElement& c) const {
    BinaryForm r(*this);
    for (auto& x : r.c_) x = F_->mul(x, c);
    return r;
}

BinaryForm BinaryForm::mul_rational(const Rational& q) const {
    BinaryForm r(*this);
    for (auto& x : r.c_) x = F_->mul_rational(x, q);
    return r;
}

BinaryForm BinaryForm::partial_x() const {
    if (deg_ == 0) throw Error("partial derivative of a constant form");
    BinaryForm r(F_, deg_ - 1);
    // d/dx of c_k x^k y^{d-k} = k c_k x^{k-1} y^{d-k}
    for (int k = 1; k <= deg_; ++k) r.c_[k - 1] = F_->mul_rational(c_[k], Rational(k));
    return r;
}

BinaryForm BinaryForm::partial_y() const {
    if (deg_ == 0) throw Error("partial derivative of a constant form");
    BinaryForm r(F_, deg_ - 1);
    // d/dy of c_k x^k y^{d-k} = (d-k) c_k x^k y^{d-k-1}
    for (int k = 0; k < deg_; ++k) r.c_[k] = F_->mul_rational(c_[k], Rational(deg_ - k));
    return r;
}

BinaryForm BinaryForm::mul_x() const {
    BinaryForm r(F_, deg_ + 1);
    for (int k = 0; k <= deg_; ++k) r.c_[k + 1] = c_[k];
    return r;
}

BinaryForm BinaryForm::mul_y() const {
    BinaryForm r(F_, deg_ + 1);
    for (int k = 0; k <= deg_; ++k) r.c_[k] = c_[k];
    return r;
}

std::pair<UniPoly, int> BinaryForm::dehomogenize() const {
    if (is_zero()) throw ZeroForm();
    std::vector<FieldElement> g(deg_ + 1, F_->zero());
    for (int k = 0; k <= deg_; ++k) g[deg_ - k] = c_[k];
    UniPoly gz(F_, std::move(g), "z");
    return {gz, deg_ - gz.degree()};
}

int BinaryForm::x_valuation() const { return dehomogenize().second; }

BinaryForm BinaryForm::compose_linear(const std::array<std::array<Rational, 2>, 2>& g) const {
    // x -> g[0][0] x + g[0][1] y, y -> g[1][0] x + g[1][1] y
    // (degree-1 coefficients stored by x-exponent: {y-part, x-part})
    BinaryForm gx(F_, 1, {F_->from_rational(g[0][1]), F_->from_rational(g[0][0])});
    BinaryForm gy(F_, 1, {F_->from_rational(g[1][1]), F_->from_rational(g[1][0])});
    // powers of gx and gy
    std::vector<BinaryForm> px, py;
    px.emplace_back(F_, 0, std::vector<FieldElement>{F_->one()});
    py.emplace_back(F_, 0, std::vector<FieldElement>{F_->one()});
    for (int i = 1; i <= deg_; ++i) {
        px.push_back(px.back() * gx);
        py.push_back(py.back() * gy);
    }
    BinaryForm out(F_, deg_);
    for (int k = 0; k <= deg_; ++k) {
        if (F_->is_zero(c_[k])) continue;
        out = out + (px[k] * py[deg_ - k]).mul_elem(c_[k]);
    }
    return out;
}

std::string BinaryForm::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int k = deg_; k >= 0; --k) {
        if (F_->is_zero(c_[k])) continue;
        const int j = deg_ - k;
        std::string mono;
        if (k > 0) mono += k == 1 ? "x" : "x^" + std::to_string(k);
        if (j > 0) {
            if (!mono.empty()) mono += "*";
            mono += j == 1 ? "y" : "y^" + std::to_string(j);
        }
        const FieldElement& c = c_[k];
        if (F_->is_rational(c)) {
            Rational r = F_->to_rational(c);
            std::string cs = r.abs().to_string();
            std::string term;
            if (mono.empty())
                term = cs;
            else
                term = r.abs().is_one() ? mono : cs + "*" + mono;
            s += first ? (r.sign() < 0 ? "-" : "") : (r.sign() < 0 ? " - " : " + ");
            s += term;
        } else {
            std::string cs = "(" + F_->to_string(c) + ")";
            s += first ? "" : " + ";
            s += mono.empty() ? cs : cs + "*" + mono;
        }
        first = false;
    }
    return s;
}

int P1Divisor::total_degree() const {
    int t = infinity_multiplicity;
    for (const auto& p : parts) t += p.multiplicity * p.locus.degree();
    return t;
}

std::string P1Divisor::to_string() const {
    if (empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& p : parts) {
        if (!first) s += " + ";
        s += std::to_string(p.multiplicity) + "*(" + p.locus.to_string() + ")";
        first = false;
    }
    if (infinity_multiplicity > 0) {
        if (!first) s += " + ";
        s += std::to_string(infinity_multiplicity) + "*[0:1]";
    }
    return s;
}

P1Divisor form_divisor(const BinaryForm& F) {
    if (F.is_zero()) throw ZeroForm();
    auto [g, xval] = F.dehomogenize();
    P1Divisor d;
    d.infinity_multiplicity = xval;
    if (!g.is_constant()) {
        auto dec = squarefree_decompose(g);
        for (auto& [m, part] : dec.parts) d.parts.push_back({m, part});
    }
    assert(d.total_degree() == F.degree());
    return d;
}

std::pair<P1Divisor, P1Divisor> divisor_gcd_split(const P1Divisor& D, const BinaryForm& F) {
    if (F.is_zero()) throw ZeroForm();
    auto [fz, fval] = F.dehomogenize();
    P1Divisor inside, outside;
    for (const auto& part : D.parts) {
        UniPoly g = poly_gcd(part.locus, fz);
        if (!g.is_constant()) inside.parts.push_back({part.multiplicity, g});
        UniPoly rest = part.locus.exact_div(g);
        if (!rest.is_constant()) outside.parts.push_back({part.multiplicity, rest.monic()});
    }
    if (D.infinity_multiplicity > 0) {
        (fval >= 1 ? inside : outside).infinity_multiplicity = D.infinity_multiplicity;
    }
    return {inside, outside};
}

UniPoly migrate(const FieldPtr& field, const UniPoly& p) {
    std::vector<FieldElement> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(field->migrate(x));
    return UniPoly(field, std::move(c), p.var());
}

BinaryForm migrate(const FieldPtr& field, const BinaryForm& f) {
    std::vector<FieldElement> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(field->migrate(x));
    return BinaryForm(field, f.degree(), std::move(c));
}

}  // namespace folab
