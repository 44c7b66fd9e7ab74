#include "setcalc/parser.hpp"

#include "setcalc/errors.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace setcalc {

namespace {

constexpr unsigned kMaxNumeralLiteral = 12;
constexpr unsigned kMaxOperatorExponent = 64;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SetTerm parse() {
        SetTerm t = parse_expr();
        skip_ws();
        if (!at_end())
            fail("trailing input");
        return t;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at " + std::to_string(line_) + ":" +
                             std::to_string(col_),
                         line_, col_);
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    bool try_consume(char c) {
        skip_ws();
        if (at_end() || peek() != c)
            return false;
        advance();
        return true;
    }

    unsigned parse_uint(unsigned cap, const char* what) {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        unsigned long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + unsigned(peek() - '0');
            if (v > cap)
                fail(std::string(what) + " exceeds limit " +
                     std::to_string(cap));
            advance();
        }
        return static_cast<unsigned>(v);
    }

    SetTerm parse_expr() {
        std::vector<SetTerm> parts;
        parts.push_back(parse_single());
        while (true) {
            skip_ws();
            if (!at_end() && peek() == 'u') {
                advance();
                parts.push_back(parse_single());
            } else {
                break;
            }
        }
        return parts.size() == 1 ? parts.front()
                                 : SetTerm::union_of(std::move(parts));
    }

    SetTerm parse_single() {
        skip_ws();
        if (at_end())
            fail("unexpected end of input");
        const char c = peek();
        if (c == 'P')
            return parse_operator();
        if (c == '{')
            return parse_literal();
        if (c == 'N') {
            advance();
            return SetTerm::nat();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const unsigned n = parse_uint(kMaxNumeralLiteral, "numeral");
            return SetTerm::zermelo(numeral(n));
        }
        fail("unexpected character");
    }

    SetTerm parse_operator() {
        advance(); // 'P'
        if (!at_end() && peek() == 'i') {
            for (char expected : {'i', 'n', 'v'}) {
                if (at_end() || peek() != expected)
                    fail("expected 'Pinv'");
                advance();
            }
            expect('(');
            SetTerm inner = parse_expr();
            expect(')');
            return SetTerm::inv_pow(std::move(inner));
        }
        bool inverse = false;
        unsigned count = 1;
        if (!at_end() && peek() == '^') {
            advance();
            if (!at_end() && peek() == '-') {
                advance();
                inverse = true;
                count = parse_uint(kMaxOperatorExponent, "operator exponent");
                if (count == 0)
                    fail("operator exponent must be positive");
            } else {
                count = parse_uint(kMaxOperatorExponent, "operator exponent");
            }
        }
        expect('(');
        SetTerm inner = parse_expr();
        expect(')');
        for (unsigned i = 0; i < count; ++i)
            inner = inverse ? SetTerm::inv_pow(std::move(inner))
                            : SetTerm::pow(std::move(inner));
        return inner;
    }

    // Set literals are concrete: elements must be Zermelo subexpressions and
    // are evaluated to HF sets on the spot.
    SetTerm parse_literal() {
        advance(); // '{'
        std::vector<HfSet> elems;
        skip_ws();
        if (!at_end() && peek() == '}') {
            advance();
            return SetTerm::zermelo(HfSet{});
        }
        while (true) {
            skip_ws();
            const int elem_line = line_;
            const int elem_col = col_;
            SetTerm elem = parse_expr();
            if (!is_zermelo_syntax(elem))
                throw StructuralError(
                    "set literal element is not a Zermelo expression at " +
                        std::to_string(elem_line) + ":" +
                        std::to_string(elem_col),
                    elem_line, elem_col);
            elems.push_back(normalize(elem).zermelo.finite_value());
            if (try_consume(','))
                continue;
            expect('}');
            break;
        }
        return SetTerm::zermelo(make_set(std::move(elems)));
    }

    static bool is_zermelo_syntax(const SetTerm& t) {
        switch (t.kind()) {
        case SetTerm::Kind::Zermelo:
            return true;
        case SetTerm::Kind::Nat:
        case SetTerm::Kind::InvPow:
            return false;
        case SetTerm::Kind::Pow:
            return is_zermelo_syntax(t.child());
        case SetTerm::Kind::Union:
            for (const SetTerm& p : t.parts())
                if (!is_zermelo_syntax(p))
                    return false;
            return true;
        }
        return false;
    }
};

void print_into(const SetTerm& t, std::string& out) {
    switch (t.kind()) {
    case SetTerm::Kind::Zermelo:
        out += t.literal().str();
        return;
    case SetTerm::Kind::Nat:
        out += 'N';
        return;
    case SetTerm::Kind::Pow:
    case SetTerm::Kind::InvPow: {
        const SetTerm::Kind kind = t.kind();
        unsigned count = 0;
        const SetTerm* inner = &t;
        while (inner->kind() == kind) {
            ++count;
            inner = &inner->child();
        }
        if (kind == SetTerm::Kind::InvPow)
            out += "P^-" + std::to_string(count);
        else if (count > 1)
            out += "P^" + std::to_string(count);
        else
            out += 'P';
        out += '(';
        print_into(*inner, out);
        out += ')';
        return;
    }
    case SetTerm::Kind::Union: {
        bool first = true;
        for (const SetTerm& p : t.parts()) {
            if (!first)
                out += " u ";
            first = false;
            print_into(p, out);
        }
        return;
    }
    }
}

} // namespace

SetTerm parse_term(std::string_view text) { return Parser(text).parse(); }

std::string print_term(const SetTerm& t) {
    std::string out;
    print_into(t, out);
    return out;
}

std::string print_normal_form(const NormalForm& nf) {
    return print_term(to_term(nf));
}

} // namespace setcalc
