#include "setcalc/errors.hpp"
#include "setcalc/parser.hpp"

#include <doctest.h>

using namespace setcalc;

namespace {

SetTerm litn(unsigned n) { return SetTerm::zermelo(numeral(n)); }

} // namespace

TEST_CASE("parse basic shapes") {
    CHECK(parse_term("{}") == SetTerm::zermelo(HfSet{}));
    CHECK(parse_term("3") == litn(3));
    CHECK(parse_term("{0,1,2}") == litn(3));
    CHECK(parse_term("N") == SetTerm::nat());
    CHECK(parse_term("P^-1(P({0,1,2}))") ==
          SetTerm::inv_pow(SetTerm::pow(litn(3))));
    CHECK(parse_term("Pinv(3)") == SetTerm::inv_pow(litn(3)));
    CHECK(parse_term("3 u P^-2({1})") ==
          SetTerm::union_of(
              {litn(3), SetTerm::inv_pow(SetTerm::inv_pow(
                            SetTerm::zermelo(make_set({numeral(1)}))))}));
}

TEST_CASE("parse operator exponents") {
    CHECK(parse_term("P^2(N)") == SetTerm::pow(SetTerm::pow(SetTerm::nat())));
    CHECK(parse_term("P^0(3)") == litn(3));
    CHECK(parse_term("P^1(3)") == SetTerm::pow(litn(3)));
    CHECK_THROWS_AS(parse_term("P^-0(3)"), ParseError);
}

TEST_CASE("parse is whitespace insensitive") {
    CHECK(parse_term(" P^-1( P ( {0,1} ) ) ") ==
          SetTerm::inv_pow(SetTerm::pow(litn(2))));
    CHECK(parse_term("{ 0 , 1 }") == litn(2));
    CHECK(parse_term("3u2") == SetTerm::union_of({litn(3), litn(2)}));
}

TEST_CASE("literals evaluate their Zermelo elements") {
    CHECK(parse_term("{P(1), {}}") ==
          SetTerm::zermelo(make_set({powerset(numeral(1)), HfSet{}})));
    CHECK(parse_term("{0 u 1}") == SetTerm::zermelo(make_set({numeral(1)})));
}

TEST_CASE("structural errors inside literals") {
    CHECK_THROWS_AS(parse_term("{P^-1(2)}"), StructuralError);
    CHECK_THROWS_AS(parse_term("{Pinv(2)}"), StructuralError);
    CHECK_THROWS_AS(parse_term("{N}"), StructuralError);
    CHECK_THROWS_AS(parse_term("{1, {P^-1(3)}}"), StructuralError);
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_term("P^-1(");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 6);
    }
    try {
        parse_term("{0,\n 1");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_term(""), ParseError);
    CHECK_THROWS_AS(parse_term("3 )"), ParseError);
    CHECK_THROWS_AS(parse_term("13"), ParseError); // numeral cap
    CHECK_THROWS_AS(parse_term("Pfoo(3)"), ParseError);
}

TEST_CASE("printer canonical forms") {
    CHECK(print_term(SetTerm::zermelo(HfSet{})) == "{}");
    CHECK(print_term(parse_term("P^-1( P ( {0,1} ) )")) ==
          "P^-1(P({{},{{}}}))");
    CHECK(print_term(parse_term("P(P(N))")) == "P^2(N)");
    CHECK(print_term(parse_term("Pinv(Pinv(3))")) ==
          "P^-2({{},{{}},{{},{{}}}})");
    CHECK(print_term(parse_term("P(P^-1(2))")) == "P(P^-1({{},{{}}}))");
}

TEST_CASE("normalized forms print Zermelo part first") {
    const NormalForm nf = normalize(parse_term("P^-1({1}) u 3"));
    CHECK(print_normal_form(nf) == "{{},{{}},{{},{{}}}} u P^-1({{{}}})");
    // an empty Zermelo part is omitted when components exist
    CHECK(print_normal_form(normalize(parse_term("P^-1(3)"))) ==
          "P^-1({{},{{}},{{},{{}}}})");
    CHECK(print_normal_form(normalize(parse_term("{}"))) == "{}");
}

TEST_CASE("print then parse is identity on worked forms") {
    for (const char* text :
         {"P^-1(P({0,1,2}))", "3 u P^-2({1})", "N u P^-1(3)",
          "P^3(N) u P^-1({1}) u P^-1(3)", "{}", "P({0,1})"}) {
        const SetTerm t = parse_term(text);
        CHECK(parse_term(print_term(t)) == t);
    }
}
