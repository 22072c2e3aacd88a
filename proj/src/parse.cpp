#include <cctype>

#include "rigidcalc/poly.hpp"
#include "rigidcalc/ring.hpp"

namespace rigidcalc {

namespace {

struct PolyLexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }
};

struct PolyParser {
    PolyLexer lx;
    RingP ring;

    Poly parse_expr() {
        Poly acc = parse_term();
        while (true) {
            char c = lx.peek();
            if (c == '+') {
                ++lx.pos;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++lx.pos;
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (lx.peek() == '*') {
            ++lx.pos;
            acc = acc * parse_factor();
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        while (lx.peek() == '^') {
            ++lx.pos;
            long e = parse_uint();
            Poly acc = Poly::one(ring);
            for (long i = 0; i < e; ++i) acc = acc * base;
            base = acc;
        }
        return base;
    }

    Poly parse_base() {
        char c = lx.peek();
        if (c == '(') {
            ++lx.pos;
            Poly inner = parse_expr();
            if (lx.peek() != ')') lx.fail("expected ')'");
            ++lx.pos;
            return inner;
        }
        if (c == '-') {
            ++lx.pos;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_var();
        lx.fail("expected number, variable, or '('");
    }

    long parse_uint() {
        lx.skip_ws();
        size_t start = lx.pos;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
        if (start == lx.pos) lx.fail("expected integer");
        return std::stol(lx.s.substr(start, lx.pos - start));
    }

    Poly parse_number() {
        lx.skip_ws();
        size_t start = lx.pos;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
        std::string num = lx.s.substr(start, lx.pos - start);
        // fraction only if '/' is followed by a digit (so "1/x" is rejected cleanly)
        size_t save = lx.pos;
        lx.skip_ws();
        if (lx.pos < lx.s.size() && lx.s[lx.pos] == '/') {
            size_t slash = lx.pos++;
            lx.skip_ws();
            size_t dstart = lx.pos;
            while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
            if (dstart == lx.pos) {
                lx.pos = slash;
                lx.fail("expected denominator digits");
            }
            num += "/" + lx.s.substr(dstart, lx.pos - dstart);
        } else {
            lx.pos = save;
        }
        return Poly::constant(ring, Scalar::parse(ring_field(ring), num));
    }

    Poly parse_var() {
        lx.skip_ws();
        size_t start = lx.pos;
        while (lx.pos < lx.s.size() &&
               (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
            ++lx.pos;
        std::string name = lx.s.substr(start, lx.pos - start);
        for (int i = 0; i < ring_nvars(ring); ++i) {
            if (ring_var_name(ring, i) == name) return Poly::var(ring, i);
        }
        lx.pos = start;
        lx.fail("unknown variable '" + name + "'");
    }
};

} // namespace

Poly parse_poly(const RingP& r, const std::string& text) {
    PolyParser p{PolyLexer{text}, r};
    Poly result = p.parse_expr();
    if (!p.lx.eof()) p.lx.fail("trailing input");
    return result;
}

} // namespace rigidcalc
