#include "ratdec/expr.hpp"

#include <cctype>
#include <sstream>

#include "ratdec/errors.hpp"

namespace ratdec {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    // 1-based position of the next token, for error messages.
    std::size_t here() {
        skip_ws();
        return pos + 1;
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            std::ostringstream os;
            os << "expected '" << c << "'";
            throw ParseError(os.str(), here());
        }
    }
    std::string integer_token() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an integer", start + 1);
        return text.substr(start, pos - start);
    }
    std::string ident_token() {
        skip_ws();
        std::size_t start = pos;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos < text.size() && head(text[pos])) {
            ++pos;
            while (pos < text.size() && tail(text[pos])) ++pos;
        }
        return text.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lex;
    const std::vector<std::string>& vars;

    MultiPoly run() {
        MultiPoly p = expr();
        if (!lex.eof()) throw ParseError("unexpected trailing input", lex.here());
        return p;
    }

    MultiPoly expr() {
        MultiPoly p = term();
        while (true) {
            if (lex.accept('+'))
                p += term();
            else if (lex.accept('-'))
                p -= term();
            else
                return p;
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (lex.accept('*')) p = p * factor();
        return p;
    }

    MultiPoly factor() {
        // unary minus binds looser than '^': -X^2 is -(X^2)
        if (lex.accept('-')) return -factor();
        MultiPoly p = base();
        if (lex.accept('^')) {
            std::size_t at = lex.here();
            std::string digits = lex.integer_token();
            if (digits.size() > 5) throw ParseError("exponent too large", at);
            p = pow(p, static_cast<unsigned>(std::stoul(digits)));
        }
        return p;
    }

    MultiPoly base() {
        int n = static_cast<int>(vars.size());
        std::size_t at = lex.here();
        if (lex.eof()) throw ParseError("unexpected end of input", at);
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            MultiPoly p = expr();
            lex.expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex.integer_token();
            std::string den = "1";
            if (lex.accept('/')) den = lex.integer_token();
            return MultiPoly::constant(n, make_rational(Integer(num), Integer(den)));
        }
        std::string name = lex.ident_token();
        if (name.empty()) throw ParseError("expected a number, variable, or '('", at);
        for (int i = 0; i < n; ++i)
            if (vars[i] == name) return MultiPoly::variable(n, i);
        throw ParseError("unknown variable '" + name + "'", at);
    }
};

void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& mono) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first)
        os << (c < 0 ? "-" : "");
    else
        os << (c < 0 ? " - " : " + ");
    if (mono.empty()) {
        os << to_string(a);
    } else {
        if (a != 1) os << to_string(a) << "*";
        os << mono;
    }
}

std::string power_string(const std::string& name, unsigned e) {
    if (e == 1) return name;
    return name + "^" + std::to_string(e);
}

}  // namespace

MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    Parser parser{Lexer{text}, vars};
    return parser.run();
}

std::string to_string(const MultiPoly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string mono;
        for (std::size_t v = 0; v < it->first.size(); ++v) {
            if (it->first[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += power_string(vars[v], it->first[v]);
        }
        append_term(os, first, it->second, mono);
        first = false;
    }
    return os.str();
}

std::string to_string(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(static_cast<unsigned>(k));
        if (c == 0) continue;
        append_term(os, first, c, k == 0 ? "" : power_string(var, static_cast<unsigned>(k)));
        first = false;
    }
    return os.str();
}

}  // namespace ratdec
