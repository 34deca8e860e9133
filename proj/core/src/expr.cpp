#include <folab/errors.hpp>
#include <folab/expr.hpp>

#include <cctype>

namespace folab {

namespace {

struct Parser {
    const FieldPtr& F;
    std::string_view s;
    size_t pos = 0;
    const std::string& var;
    const ExprEnv& env;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ValidationError("expression parse error at offset " + std::to_string(pos) + ": " +
                              msg + " in '" + std::string(s) + "'");
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    bool atom_ahead() {
        skip_ws();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    std::string read_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::string(s.substr(start, pos - start));
    }

    std::string read_name() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
            fail("expected name");
        ++pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_'))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }

    long read_exponent() {
        std::string e = read_int();
        if (e.size() > 6) fail("exponent too large");
        return std::stol(e);
    }

    UniPoly parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        UniPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    UniPoly parse_term() {
        UniPoly acc = parse_factor();
        while (true) {
            if (eat('*')) {
                acc = acc * parse_factor();
            } else if (atom_ahead()) {
                acc = acc * parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    UniPoly parse_factor() {
        UniPoly base = parse_atom();
        if (eat('^')) {
            long e = read_exponent();
            UniPoly acc = UniPoly::constant(F, F->one(), var.empty() ? "z" : var);
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    UniPoly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        const std::string v = var.empty() ? "z" : var;
        char c = s[pos];
        if (c == '(') {
            ++pos;
            UniPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_int();
            if (peek('/')) {
                ++pos;
                std::string den = read_int();
                return UniPoly::constant(F, F->from_rational(Rational::from_string(num + "/" + den)), v);
            }
            return UniPoly::constant(F, F->from_rational(Rational::from_string(num)), v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = read_name();
            if (!var.empty() && name == var)
                return UniPoly::monomial(F, F->one(), 1, v);
            if (auto it = env.find(name); it != env.end())
                return UniPoly::constant(F, it->second, v);
            for (int i = 0; i < F->height(); ++i)
                if (F->level(i)->generator_name() == name)
                    return UniPoly::constant(F, F->generator_at(i), v);
            fail("unknown name '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

UniPoly parse_unipoly(const FieldPtr& field, std::string_view text, const std::string& var,
                      const ExprEnv& env) {
    Parser p{field, text, 0, var, env};
    UniPoly out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

FieldElement parse_element(const FieldPtr& field, std::string_view text, const ExprEnv& env) {
    static const std::string no_var;
    UniPoly p = parse_unipoly(field, text, no_var, env);
    if (p.is_zero()) return field->zero();
    if (!p.is_constant()) throw ValidationError("expected a constant expression");
    return p.coeff(0);
}

}  // namespace folab
