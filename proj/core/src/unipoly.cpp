#include <folab/errors.hpp>
#include <folab/unipoly.hpp>

#include <cassert>

namespace folab {

using detail::PV;

UniPoly::UniPoly(FieldPtr field, std::vector<FieldElement> coeffs, std::string var)
    : F_(std::move(field)), c_(std::move(coeffs)), var_(std::move(var)) {
    detail::pv_trim(*F_, c_);
}

UniPoly UniPoly::from_rationals(FieldPtr field, const std::vector<Rational>& coeffs,
                                std::string var) {
    PV c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.push_back(field->from_rational(r));
    return UniPoly(std::move(field), std::move(c), std::move(var));
}

UniPoly UniPoly::constant(FieldPtr field, const FieldElement& c, std::string var) {
    return UniPoly(std::move(field), PV{c}, std::move(var));
}

UniPoly UniPoly::monomial(FieldPtr field, const FieldElement& c, int exp, std::string var) {
    if (field->is_zero(c)) return UniPoly(std::move(field), std::move(var));
    PV v(exp + 1, field->zero());
    v[exp] = c;
    return UniPoly(std::move(field), std::move(v), std::move(var));
}

int UniPoly::degree() const {
    if (c_.empty()) throw Error("degree of the zero polynomial is undefined");
    return static_cast<int>(c_.size()) - 1;
}

FieldElement UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F_->zero();
    return c_[i];
}

const FieldElement& UniPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const { return UniPoly(F_, detail::pv_neg(*F_, c_), var_); }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    return UniPoly(a.F_, detail::pv_add(*a.F_, a.c_, b.c_), a.var_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return UniPoly(a.F_, detail::pv_sub(*a.F_, a.c_, b.c_), a.var_);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    return UniPoly(a.F_, detail::pv_mul(*a.F_, a.c_, b.c_), a.var_);
}

UniPoly UniPoly::mul_elem(const FieldElement& c) const {
    return UniPoly(F_, detail::pv_mul_elem(*F_, c_, c), var_);
}

UniPoly UniPoly::mul_rational(const Rational& r) const {
    if (r.is_zero()) return UniPoly(F_, var_);
    PV c(c_);
    for (auto& x : c) x = F_->mul_rational(x, r);
    return UniPoly(F_, std::move(c), var_);
}

UniPoly UniPoly::derivative() const { return UniPoly(F_, detail::pv_derivative(*F_, c_), var_); }

UniPoly UniPoly::monic() const { return UniPoly(F_, detail::pv_monic(*F_, c_), var_); }

FieldElement UniPoly::eval(const FieldElement& x) const { return detail::pv_eval(*F_, c_, x); }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& b) const {
    auto [q, r] = detail::pv_divmod(*F_, c_, b.c_);
    return {UniPoly(F_, std::move(q), var_), UniPoly(F_, std::move(r), var_)};
}

UniPoly UniPoly::exact_div(const UniPoly& b) const {
    auto [q, r] = divmod(b);
    if (!r.is_zero()) throw Error("exact_div: nonzero remainder");
    return q;
}

bool UniPoly::divides(const UniPoly& b) const {
    if (is_zero()) return b.is_zero();
    auto [q, r] = b.divmod(*this);
    (void)q;
    return r.is_zero();
}

int UniPoly::valuation_at(const FieldElement& x) const {
    if (is_zero()) throw Error("valuation of the zero polynomial");
    UniPoly lin(F_, PV{F_->neg(x), F_->one()}, var_);
    UniPoly p = *this;
    int val = 0;
    while (!p.is_zero() && F_->is_zero(p.eval(x))) {
        p = p.exact_div(lin);
        ++val;
    }
    return val;
}

int UniPoly::valuation_at_zero() const {
    if (is_zero()) throw Error("valuation of the zero polynomial");
    int v = 0;
    while (v < static_cast<int>(c_.size()) && F_->is_zero(c_[v])) ++v;
    return v;
}

UniPoly UniPoly::with_var(std::string var) const { return UniPoly(F_, c_, std::move(var)); }

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    const GroundField& F = *F_;
    std::string s;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const FieldElement& c = c_[i];
        if (F.is_zero(c)) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? var_ : var_ + "^" + std::to_string(i));
        if (F.is_rational(c)) {
            Rational r = F.to_rational(c);
            std::string cs = r.abs().to_string();
            std::string term = i == 0 ? cs : (r.abs().is_one() ? mono : cs + "*" + mono);
            s += first ? (r.sign() < 0 ? "-" : "") : (r.sign() < 0 ? " - " : " + ");
            s += term;
        } else {
            std::string cs = "(" + F.to_string(c) + ")";
            s += first ? "" : " + ";
            s += i == 0 ? cs : cs + "*" + mono;
        }
        first = false;
    }
    return s;
}

namespace {

// --- subresultant PRS over the rationals -------------------------------------

// Scale to a primitive integer-coefficient vector (content removed).
std::vector<Rational> primitive_int(const UniPoly& f) {
    mpz_class den_lcm(1);
    for (const auto& c : f.coeffs()) {
        Rational r = f.field()->to_rational(c);
        mpz_class d = r.denominator();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    std::vector<mpz_class> ints;
    ints.reserve(f.coeffs().size());
    mpz_class content(0);
    for (const auto& c : f.coeffs()) {
        Rational r = f.field()->to_rational(c);
        mpz_class v = r.numerator() * (den_lcm / r.denominator());
        content = gcd(content, v);
        ints.push_back(v);
    }
    if (content == 0) content = 1;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(mpz_class(v / content));
    return out;
}

int vdeg(const std::vector<Rational>& v) { return static_cast<int>(v.size()) - 1; }

void vtrim(std::vector<Rational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Pseudo-remainder prem(f, g) = lc(g)^(deg f - deg g + 1) * f mod g, integer-exact.
std::vector<Rational> prem(std::vector<Rational> r, const std::vector<Rational>& g) {
    const int dg = vdeg(g);
    const Rational d = g.back();
    int e = vdeg(r) - dg + 1;
    while (!r.empty() && vdeg(r) >= dg) {
        const Rational lr = r.back();
        const int k = vdeg(r) - dg;
        for (auto& c : r) c = c * d;
        for (int i = 0; i <= dg; ++i) r[k + i] = r[k + i] - lr * g[i];
        vtrim(r);
        --e;
    }
    const Rational de = d.pow(e);
    for (auto& c : r) c = c * de;
    return r;
}

UniPoly gcd_subresultant_rationals(const UniPoly& f, const UniPoly& g) {
    std::vector<Rational> a = primitive_int(f), b = primitive_int(g);
    if (vdeg(a) < vdeg(b)) std::swap(a, b);
    if (vdeg(b) == 0) return UniPoly::from_rationals(f.field(), {Rational(1)}, f.var());
    Rational gg(1), h(1);
    while (true) {
        const int delta = vdeg(a) - vdeg(b);
        std::vector<Rational> r = prem(a, b);
        if (r.empty()) break;
        if (vdeg(r) == 0) return UniPoly::from_rationals(f.field(), {Rational(1)}, f.var());
        const Rational divisor = gg * h.pow(delta);
        a = std::move(b);
        b = std::move(r);
        for (auto& c : b) c = c / divisor;
        gg = a.back();
        h = delta == 0 ? h : gg.pow(delta) / h.pow(delta - 1);
    }
    UniPoly out = UniPoly::from_rationals(f.field(), b, f.var());
    return UniPoly::from_rationals(f.field(), primitive_int(out), f.var()).monic();
}

}  // namespace

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero()) throw Error("gcd(0, 0) is undefined");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant())
        return UniPoly::constant(f.field(), f.field()->one(), f.var());
    if (f.field()->height() == 0) return gcd_subresultant_rationals(f, g);
    PV r = detail::pv_gcd_monic(*f.field(), f.coeffs(), g.coeffs());
    return UniPoly(f.field(), std::move(r), f.var());
}

SquarefreeDecomposition squarefree_decompose(const UniPoly& f) {
    if (f.is_zero()) throw Error("squarefree decomposition of the zero polynomial");
    SquarefreeDecomposition out;
    if (f.is_constant()) return out;
    UniPoly p = f.monic();
    UniPoly dp = p.derivative();
    UniPoly a0 = poly_gcd(p, dp);
    if (a0.is_constant()) {
        out.parts.emplace_back(1, p);
        return out;
    }
    UniPoly b = p.exact_div(a0);
    UniPoly c = dp.exact_div(a0);
    UniPoly d = c - b.derivative();
    int i = 1;
    while (!b.is_constant()) {
        UniPoly a = poly_gcd(b, d);
        if (!a.is_constant()) out.parts.emplace_back(i, a);
        b = b.exact_div(a);
        c = d.exact_div(a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

UniPoly radical(const UniPoly& f) {
    auto dec = squarefree_decompose(f);
    UniPoly r = UniPoly::constant(f.field(), f.field()->one(), f.var());
    for (const auto& [m, part] : dec.parts) {
        (void)m;
        r = r * part;
    }
    return r;
}

FieldElement resultant(const UniPoly& f, const UniPoly& g) {
    const FieldPtr& F = f.field();
    if (f.is_zero() || g.is_zero()) throw Error("resultant of the zero polynomial");
    const int m = f.degree(), n = g.degree();
    if (n == 0) return F->pow(g.leading(), m);
    if (m == 0) return F->pow(f.leading(), n);
    if (m < n) {
        FieldElement r = resultant(g, f);
        return (m & 1) && (n & 1) ? F->neg(r) : r;
    }
    auto [q, rem] = f.divmod(g);
    (void)q;
    if (rem.is_zero()) return F->zero();
    const int k = rem.degree();
    FieldElement r = resultant(g, rem);
    r = F->mul(r, F->pow(g.leading(), m - k));
    return (m & 1) && (n & 1) ? F->neg(r) : r;
}

namespace {

// Bareiss elimination on an augmented matrix; returns raw echelon rows plus the
// permutation sign, or signals a zero pivot column via `singular`.
struct Echelon {
    std::vector<std::vector<FieldElement>> a;
    bool singular = false;
    int sign = 1;
};

Echelon bareiss(const GroundField& F, std::vector<std::vector<FieldElement>> a, size_t ncols_pivot) {
    Echelon e;
    const size_t rows = a.size();
    FieldElement prev = F.one();
    for (size_t col = 0; col < ncols_pivot; ++col) {
        size_t piv = col;
        while (piv < rows && F.is_zero(a[piv][col])) ++piv;
        if (piv >= rows) {
            e.singular = true;
            e.a = std::move(a);
            return e;
        }
        if (piv != col) {
            std::swap(a[piv], a[col]);
            e.sign = -e.sign;
        }
        for (size_t r = col + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < a[r].size(); ++c) {
                FieldElement num =
                    F.sub(F.mul(a[r][c], a[col][col]), F.mul(a[r][col], a[col][c]));
                a[r][c] = F.div(num, prev);
            }
            a[r][col] = F.zero();
        }
        prev = a[col][col];
    }
    e.a = std::move(a);
    return e;
}

}  // namespace

std::vector<FieldElement> solve_linear_system(const FieldPtr& field,
                                              std::vector<std::vector<FieldElement>> matrix,
                                              std::vector<FieldElement> rhs) {
    const size_t n = matrix.size();
    if (rhs.size() != n) throw Error("solve_linear_system: shape mismatch");
    for (size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) throw Error("solve_linear_system: matrix not square");
        matrix[i].push_back(rhs[i]);
    }
    Echelon e = bareiss(*field, std::move(matrix), n);
    if (e.singular) throw SingularSystem();
    const GroundField& F = *field;
    std::vector<FieldElement> x(n, F.zero());
    for (size_t ii = n; ii-- > 0;) {
        FieldElement acc = e.a[ii][n];
        for (size_t j = ii + 1; j < n; ++j) acc = F.sub(acc, F.mul(e.a[ii][j], x[j]));
        x[ii] = F.div(acc, e.a[ii][ii]);
    }
    return x;
}

FieldElement determinant(const FieldPtr& field, std::vector<std::vector<FieldElement>> matrix) {
    const size_t n = matrix.size();
    for (auto& row : matrix)
        if (row.size() != n) throw Error("determinant: matrix not square");
    if (n == 0) return field->one();
    Echelon e = bareiss(*field, std::move(matrix), n);
    if (e.singular) return field->zero();
    FieldElement d = e.a[n - 1][n - 1];
    return e.sign < 0 ? field->neg(d) : d;
}

FieldPtr adjoin(FieldPtr base, const std::string& name, const UniPoly& modulus) {
    return GroundField::adjoin_raw(std::move(base), name, modulus.coeffs());
}

}  // namespace folab
