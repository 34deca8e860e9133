#include <folab/rational.hpp>

#include <cctype>

namespace folab {

Rational::Rational(long n, long d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw DivisionByZero();
    v_ = mpq_class(n) / mpq_class(d);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw ValidationError("malformed rational literal: '" + std::string(s) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (sgn(d) == 0) throw ValidationError("zero denominator in rational literal: '" + std::string(s) + "'");
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    mpq_class r(v_.get_den(), v_.get_num());
    r.canonicalize();
    return Rational(r);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), n);
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational falling_factorial(long n, long k) {
    mpz_class r(1);
    for (long i = 0; i < k; ++i) r *= (n - i);
    return Rational(r);
}

}  // namespace folab
