#include <folab/errors.hpp>
#include <folab/numfield.hpp>

#include <cassert>

namespace folab {

using detail::PV;

namespace detail {

int pv_deg(const PV& p) { return static_cast<int>(p.size()) - 1; }

void pv_trim(const GroundField& F, PV& p) {
    while (!p.empty() && F.is_zero(p.back())) p.pop_back();
}

PV pv_add(const GroundField& F, const PV& a, const PV& b) {
    PV r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    pv_trim(F, r);
    return r;
}

PV pv_sub(const GroundField& F, const PV& a, const PV& b) {
    PV r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    pv_trim(F, r);
    return r;
}

PV pv_neg(const GroundField& F, const PV& a) {
    PV r(a);
    for (auto& c : r) c = F.neg(c);
    return r;
}

PV pv_mul(const GroundField& F, const PV& a, const PV& b) {
    if (a.empty() || b.empty()) return {};
    PV r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    pv_trim(F, r);
    return r;
}

PV pv_mul_elem(const GroundField& F, const PV& a, const FieldElement& c) {
    if (F.is_zero(c)) return {};
    PV r(a);
    for (auto& x : r) x = F.mul(x, c);
    pv_trim(F, r);
    return r;
}

PV pv_rem_monic(const GroundField& F, PV a, const PV& m) {
    const int dm = pv_deg(m);
    assert(dm >= 1);
    pv_trim(F, a);
    while (pv_deg(a) >= dm) {
        FieldElement c = a.back();
        int k = pv_deg(a) - dm;
        if (!F.is_zero(c))
            for (int i = 0; i < dm; ++i) a[k + i] = F.sub(a[k + i], F.mul(c, m[i]));
        a.pop_back();
        pv_trim(F, a);
    }
    return a;
}

std::pair<PV, PV> pv_divmod(const GroundField& F, const PV& a, const PV& b) {
    const int db = pv_deg(b);
    if (db < 0) throw DivisionByZero();
    PV r(a);
    pv_trim(F, r);
    if (pv_deg(r) < db) return {{}, std::move(r)};
    FieldElement lci = F.invert(b.back());
    PV q(pv_deg(r) - db + 1, F.zero());
    while (pv_deg(r) >= db) {
        int k = pv_deg(r) - db;
        FieldElement c = F.mul(r.back(), lci);
        q[k] = c;
        for (int i = 0; i < db; ++i) r[k + i] = F.sub(r[k + i], F.mul(c, b[i]));
        r.pop_back();
        pv_trim(F, r);
    }
    pv_trim(F, q);
    return {std::move(q), std::move(r)};
}

PV pv_monic(const GroundField& F, const PV& a) {
    PV r(a);
    pv_trim(F, r);
    if (r.empty()) throw Error("monic of zero polynomial");
    if (F.is_one(r.back())) return r;
    FieldElement inv = F.invert(r.back());
    for (auto& c : r) c = F.mul(c, inv);
    return r;
}

PV pv_gcd_monic(const GroundField& F, PV a, PV b) {
    pv_trim(F, a);
    pv_trim(F, b);
    if (a.empty() && b.empty()) throw Error("gcd(0, 0) is undefined");
    while (!b.empty()) {
        auto [q, r] = pv_divmod(F, a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return pv_monic(F, a);
}

PV pv_derivative(const GroundField& F, const PV& a) {
    if (a.size() <= 1) return {};
    PV r(a.size() - 1, F.zero());
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = F.mul_rational(a[i], Rational(static_cast<long>(i)));
    pv_trim(F, r);
    return r;
}

FieldElement pv_eval(const GroundField& F, const PV& a, const FieldElement& x) {
    FieldElement acc = F.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

}  // namespace detail

FieldPtr GroundField::rationals() {
    static FieldPtr q = std::shared_ptr<GroundField>(new GroundField());
    return q;
}

FieldPtr GroundField::make_unchecked(FieldPtr base, std::string name,
                                     std::vector<FieldElement> monic_modulus, Rational unit) {
    auto f = std::shared_ptr<GroundField>(new GroundField());
    f->base_ = std::move(base);
    f->name_ = std::move(name);
    f->mod_ = std::move(monic_modulus);
    f->unit_ = std::move(unit);
    return f;
}

FieldPtr GroundField::adjoin_raw(FieldPtr base, std::string name,
                                 std::vector<FieldElement> modulus, int height_cap) {
    if (!base) throw Error("adjoin: null base field");
    if (base->height() >= height_cap)
        throw UnsupportedSpec("tower height capped at " + std::to_string(height_cap));
    for (int i = 0; i < base->height(); ++i)
        if (base->level(i)->generator_name() == name)
            throw ValidationError("adjoin: generator name '" + name + "' already in tower");
    detail::pv_trim(*base, modulus);
    if (detail::pv_deg(modulus) < 1)
        throw ValidationError("adjoin: modulus must have degree >= 1");

    Rational unit(1);
    const FieldElement lc = modulus.back();
    if (!base->is_one(lc)) {
        if (base->is_rational(lc)) unit = base->to_rational(lc);
        FieldElement inv = base->invert(lc);
        for (auto& c : modulus) c = base->mul(c, inv);
    }

    PV dm = detail::pv_derivative(*base, modulus);
    PV g = detail::pv_gcd_monic(*base, modulus, dm);
    if (detail::pv_deg(g) >= 1)
        throw NotSquarefree("adjoin(" + name + "): modulus is not squarefree over " +
                            base->describe());
    return make_unchecked(std::move(base), std::move(name), std::move(modulus), unit);
}

int GroundField::height() const { return base_ ? base_->height() + 1 : 0; }

int GroundField::absolute_degree() const {
    return base_ ? base_->absolute_degree() * modulus_degree() : 1;
}

const GroundField* GroundField::level(int i) const {
    const GroundField* f = this;
    for (int k = height() - 1; k > i; --k) f = f->base_.get();
    return f;
}

std::string GroundField::describe() const {
    if (!base_) return "Q";
    std::string s = base_->describe();
    std::string m = base_->height() == 0 && base_ ? "" : "";
    (void)m;
    s += "[" + name_ + "]/(";
    // modulus as a polynomial string in the generator over the base
    bool first = true;
    for (int i = modulus_degree(); i >= 0; --i) {
        const FieldElement& c = mod_[i];
        if (base_->is_zero(c)) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? name_ : name_ + "^" + std::to_string(i));
        if (base_->is_rational(c)) {
            Rational r = base_->to_rational(c);
            std::string cs = r.abs().to_string();
            std::string term = i == 0 ? cs : (r.abs().is_one() ? mono : cs + "*" + mono);
            s += first ? (r.sign() < 0 ? "-" : "") : (r.sign() < 0 ? " - " : " + ");
            s += term;
        } else {
            std::string cs = "(" + base_->to_string(c) + ")";
            s += first ? "" : " + ";
            s += i == 0 ? cs : cs + "*" + mono;
        }
        first = false;
    }
    s += ")";
    return s;
}

FieldElement GroundField::zero() const {
    return base_ ? FieldElement::node({}) : FieldElement(Rational(0));
}

FieldElement GroundField::one() const { return from_rational(Rational(1)); }

FieldElement GroundField::from_rational(const Rational& r) const {
    if (!base_) return FieldElement(r);
    if (r.is_zero()) return FieldElement::node({});
    return FieldElement::node({base_->from_rational(r)});
}

FieldElement GroundField::generator() const {
    if (!base_) throw Error("rationals have no generator");
    PV rep = {base_->zero(), base_->one()};
    rep = detail::pv_rem_monic(*base_, std::move(rep), mod_);
    return FieldElement::node(std::move(rep));
}

FieldElement GroundField::generator_at(int i) const {
    if (i < 0 || i >= height()) throw Error("generator index out of range");
    if (i == height() - 1) return generator();
    return lift(base_->generator_at(i));
}

FieldElement GroundField::lift(const FieldElement& lower) const {
    if (!base_) throw Error("cannot lift into the rationals");
    if (base_->is_zero(lower)) return FieldElement::node({});
    return FieldElement::node({lower});
}

bool GroundField::is_zero(const FieldElement& a) const {
    return a.is_leaf() ? a.leaf_value().is_zero() : a.kids().empty();
}

bool GroundField::is_one(const FieldElement& a) const {
    if (a.is_leaf()) return a.leaf_value().is_one();
    return a.kids().size() == 1 && base_->is_one(a.kids()[0]);
}

bool GroundField::is_rational(const FieldElement& a) const {
    if (a.is_leaf()) return true;
    if (a.kids().empty()) return true;
    return a.kids().size() == 1 && base_->is_rational(a.kids()[0]);
}

Rational GroundField::to_rational(const FieldElement& a) const {
    if (a.is_leaf()) return a.leaf_value();
    if (a.kids().empty()) return Rational(0);
    if (a.kids().size() == 1) return base_->to_rational(a.kids()[0]);
    throw Error("element is not rational");
}

FieldElement GroundField::add(const FieldElement& a, const FieldElement& b) const {
    if (!base_) return FieldElement(a.leaf_value() + b.leaf_value());
    return FieldElement::node(detail::pv_add(*base_, a.kids(), b.kids()));
}

FieldElement GroundField::sub(const FieldElement& a, const FieldElement& b) const {
    if (!base_) return FieldElement(a.leaf_value() - b.leaf_value());
    return FieldElement::node(detail::pv_sub(*base_, a.kids(), b.kids()));
}

FieldElement GroundField::neg(const FieldElement& a) const {
    if (!base_) return FieldElement(-a.leaf_value());
    return FieldElement::node(detail::pv_neg(*base_, a.kids()));
}

FieldElement GroundField::mul(const FieldElement& a, const FieldElement& b) const {
    if (!base_) return FieldElement(a.leaf_value() * b.leaf_value());
    PV prod = detail::pv_mul(*base_, a.kids(), b.kids());
    prod = detail::pv_rem_monic(*base_, std::move(prod), mod_);
    return FieldElement::node(std::move(prod));
}

FieldElement GroundField::mul_rational(const FieldElement& a, const Rational& r) const {
    if (!base_) return FieldElement(a.leaf_value() * r);
    if (r.is_zero()) return zero();
    PV rep(a.kids());
    for (auto& c : rep) c = base_->mul_rational(c, r);
    return FieldElement::node(std::move(rep));
}

FieldElement GroundField::pow(const FieldElement& a, long e) const {
    if (e < 0) return pow(invert(a), -e);
    FieldElement acc = one(), base = a;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = mul(acc, base);
        n >>= 1;
        if (n) base = mul(base, base);
    }
    return acc;
}

FieldElement GroundField::invert(const FieldElement& a) const {
    if (is_zero(a)) throw DivisionByZero();
    if (!base_) return FieldElement(a.leaf_value().inverse());
    const GroundField& B = *base_;
    // extended Euclid of the representative against the top modulus
    PV r0 = mod_, r1 = a.kids();
    PV s0 = {}, s1 = {B.one()};
    while (detail::pv_deg(r1) >= 0) {
        auto [q, r2] = detail::pv_divmod(B, r0, r1);
        PV s2 = detail::pv_sub(B, s0, detail::pv_mul(B, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (detail::pv_deg(r0) >= 1)
        throw SplitRequest{height() - 1, detail::pv_monic(B, r0)};
    FieldElement c = B.invert(r0[0]);
    PV inv = detail::pv_mul_elem(B, s0, c);
    inv = detail::pv_rem_monic(B, std::move(inv), mod_);
    return FieldElement::node(std::move(inv));
}

FieldElement GroundField::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, invert(b));
}

FieldElement GroundField::migrate(const FieldElement& a) const {
    if (!base_) {
        if (a.is_leaf()) return a;
        return FieldElement(to_rational(a));  // throws unless the node is rational
    }
    if (a.is_leaf()) return from_rational(a.leaf_value());
    PV rep;
    rep.reserve(a.kids().size());
    for (const auto& c : a.kids()) rep.push_back(base_->migrate(c));
    rep = detail::pv_rem_monic(*base_, std::move(rep), mod_);
    return FieldElement::node(std::move(rep));
}

std::pair<FieldPtr, FieldPtr> GroundField::branch(const SplitRequest& s) const {
    const int H = height();
    if (s.generator_index < 0 || s.generator_index >= H)
        throw Error("branch: generator index out of range");
    const GroundField* Lg = level(s.generator_index);
    const FieldPtr& below = Lg->base_;

    PV factor = s.factor;
    detail::pv_trim(*below, factor);
    const int fd = detail::pv_deg(factor);
    if (fd < 1 || fd >= Lg->modulus_degree())
        throw Error("branch: factor must be a proper divisor of the modulus");
    factor = detail::pv_monic(*below, factor);
    auto [cof, rem] = detail::pv_divmod(*below, Lg->mod_, factor);
    if (detail::pv_deg(rem) != -1)
        throw Error("branch: factor does not divide the modulus");

    FieldPtr fa = make_unchecked(below, Lg->name_, std::move(factor), Rational(1));
    FieldPtr fb = make_unchecked(below, Lg->name_, std::move(cof), Rational(1));

    // re-reduce upper levels; squarefreeness is inherited (Bezout identity reduces)
    for (int i = s.generator_index + 1; i < H; ++i) {
        const GroundField* Li = level(i);
        PV ma, mb;
        ma.reserve(Li->mod_.size());
        mb.reserve(Li->mod_.size());
        for (const auto& c : Li->mod_) {
            ma.push_back(fa->migrate(c));
            mb.push_back(fb->migrate(c));
        }
        detail::pv_trim(*fa, ma);
        detail::pv_trim(*fb, mb);
        fa = make_unchecked(fa, Li->name_, std::move(ma), Li->unit_);
        fb = make_unchecked(fb, Li->name_, std::move(mb), Li->unit_);
    }
    return {fa, fb};
}

std::string GroundField::to_string(const FieldElement& a) const {
    if (!base_) return a.leaf_value().to_string();
    if (is_zero(a)) return "0";
    const PV& p = a.kids();
    std::string s;
    bool first = true;
    for (int i = detail::pv_deg(p); i >= 0; --i) {
        const FieldElement& c = p[i];
        if (base_->is_zero(c)) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? name_ : name_ + "^" + std::to_string(i));
        if (base_->is_rational(c)) {
            Rational r = base_->to_rational(c);
            std::string cs = r.abs().to_string();
            std::string term = i == 0 ? cs : (r.abs().is_one() ? mono : cs + "*" + mono);
            s += first ? (r.sign() < 0 ? "-" : "") : (r.sign() < 0 ? " - " : " + ");
            s += term;
        } else {
            std::string cs = "(" + base_->to_string(c) + ")";
            s += first ? "" : " + ";
            s += i == 0 ? cs : cs + "*" + mono;
        }
        first = false;
    }
    return s;
}

}  // namespace folab
