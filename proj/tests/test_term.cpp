#include "setcalc/errors.hpp"
#include "setcalc/term.hpp"

#include <doctest.h>

using namespace setcalc;

namespace {

SetTerm lit(const HfSet& x) { return SetTerm::zermelo(x); }
SetTerm litn(unsigned n) { return lit(numeral(n)); }

SetTerm inv_n(SetTerm t, unsigned m) {
    for (unsigned i = 0; i < m; ++i)
        t = SetTerm::inv_pow(std::move(t));
    return t;
}

const HfSet kSet1 = make_set({numeral(1)}); // {1}, non-powered

} // namespace

TEST_CASE("apply_pow") {
    CHECK(apply_pow(SetTerm::inv_pow(litn(3))) == litn(3));
    CHECK(apply_pow(litn(2)) == lit(powerset(numeral(2))));
    CHECK(apply_pow(SetTerm::nat()) == SetTerm::pow(SetTerm::nat()));
    CHECK_THROWS_AS(apply_pow(SetTerm::union_of({litn(1), litn(3)})),
                    UnsupportedOperandError);
}

TEST_CASE("apply_inv_pow") {
    CHECK(apply_inv_pow(lit(powerset(numeral(3)))) == litn(3));
    CHECK(apply_inv_pow(lit(powerset(numeral(2)))) == litn(2));
    CHECK_THROWS_AS(apply_inv_pow(lit(HfSet{})), DomainError);
    CHECK(apply_inv_pow(SetTerm::inv_pow(litn(3))) ==
          inv_n(litn(3), 2));
    // P^-1(1) = {} since 1 = P({})
    CHECK(apply_inv_pow(litn(1)) == lit(HfSet{}));
    CHECK_THROWS_AS(apply_inv_pow(SetTerm::union_of({litn(1), litn(3)})),
                    UnsupportedOperandError);
}

TEST_CASE("normalize strips and cancels") {
    // P^-2(P(P(3))) -> 3
    const SetTerm t = inv_n(SetTerm::pow(SetTerm::pow(litn(3))), 2);
    const NormalForm nf = normalize(t);
    CHECK(nf.zermelo == ZermeloPart::finite(numeral(3)));
    CHECK(nf.components.empty());
}

TEST_CASE("normalize sorts components well-represented") {
    // 3 u P^-1({1}) u P^-2(3): rho -1 before rho -2
    const SetTerm t = SetTerm::union_of(
        {litn(3), inv_n(lit(kSet1), 1), inv_n(litn(3), 2)});
    const NormalForm nf = normalize(t);
    CHECK(nf.zermelo == ZermeloPart::finite(numeral(3)));
    REQUIRE(nf.components.size() == 2);
    CHECK(nf.components[0] == Component(1, ZermeloPart::finite(kSet1)));
    CHECK(nf.components[1] == Component(2, ZermeloPart::finite(numeral(3))));

    // equal rho: tau descending, so payload 3 before payload {1}
    const SetTerm u =
        SetTerm::union_of({inv_n(lit(kSet1), 1), inv_n(litn(3), 1)});
    const NormalForm nfu = normalize(u);
    CHECK(nfu.zermelo == ZermeloPart::finite(HfSet{}));
    REQUIRE(nfu.components.size() == 2);
    CHECK(nfu.components[0] == Component(1, ZermeloPart::finite(numeral(3))));
    CHECK(nfu.components[1] == Component(1, ZermeloPart::finite(kSet1)));
}

TEST_CASE("normalize rejects towers over the empty set") {
    // P^-2(1): 1 = P({}), strips to P^-1({})
    CHECK_THROWS_AS(normalize(inv_n(litn(1), 2)), DomainError);
}

TEST_CASE("normalize merges Zermelo parts and keeps duplicates") {
    const SetTerm t = SetTerm::union_of(
        {litn(1), litn(2), inv_n(litn(3), 1), inv_n(litn(3), 1)});
    const NormalForm nf = normalize(t);
    CHECK(nf.zermelo == ZermeloPart::finite(numeral(2))); // 1 u 2 = 2
    REQUIRE(nf.components.size() == 2);
    CHECK(nf.components[0] == nf.components[1]);
}

TEST_CASE("normalize nat tower unions") {
    const SetTerm nn =
        SetTerm::union_of({SetTerm::nat(), SetTerm::nat()});
    CHECK(normalize(nn).zermelo == ZermeloPart::nat_tower(0));

    CHECK_THROWS_AS(normalize(SetTerm::union_of({SetTerm::nat(), litn(3)})),
                    UnsupportedOperandError);
    CHECK_THROWS_AS(
        normalize(SetTerm::union_of(
            {SetTerm::nat(), SetTerm::pow(SetTerm::nat())})),
        UnsupportedOperandError);
    // an N-tower Zermelo part alongside components is fine
    const NormalForm nf = normalize(
        SetTerm::union_of({SetTerm::nat(), inv_n(litn(3), 1)}));
    CHECK(nf.zermelo == ZermeloPart::nat_tower(0));
    CHECK(nf.components.size() == 1);
}

TEST_CASE("normalize is idempotent through to_term") {
    const SetTerm t = SetTerm::union_of(
        {litn(3), inv_n(lit(kSet1), 2), inv_n(litn(3), 1)});
    const NormalForm nf = normalize(t);
    CHECK(normalize(to_term(nf)) == nf);
}

TEST_CASE("subset_member") {
    CHECK(subset_member(litn(1), litn(2), 1));
    CHECK(subset_member(lit(HfSet{}), litn(3), 1));
    // against P^-1(X): membership in X
    const SetTerm inv3 = SetTerm::inv_pow(litn(3));
    CHECK(subset_member(litn(1), inv3, 1));  // 1 in 3
    CHECK_FALSE(subset_member(litn(3), inv3, 1));
    // depth 2 over a level-1 set: subsets of the payload
    CHECK(subset_member(lit(make_set({numeral(2)})), inv3, 2)); // {2} subset 3
    // level mismatch
    CHECK_THROWS_AS(subset_member(litn(1), inv3, 0), RelationUndefinedError);
    CHECK_THROWS_AS(subset_member(inv3, litn(3), 1), RelationUndefinedError);
    CHECK_THROWS_AS(subset_member(litn(1), SetTerm::nat(), 1),
                    UnsupportedOperandError);
}

TEST_CASE("is_zermelo") {
    CHECK(is_zermelo(SetTerm::inv_pow(SetTerm::pow(litn(3)))));
    CHECK_FALSE(is_zermelo(SetTerm::inv_pow(litn(3))));
    CHECK(is_zermelo(lit(HfSet{})));
    CHECK(is_zermelo(SetTerm::nat()));
    // P^-1 of a powered set is Zermelo
    CHECK(is_zermelo(SetTerm::inv_pow(litn(2))));
}

TEST_CASE("ext_subset") {
    CHECK(ext_subset(SetTerm::inv_pow(lit(kSet1)),
                     SetTerm::inv_pow(litn(3))));
    CHECK_FALSE(ext_subset(SetTerm::inv_pow(litn(3)),
                           SetTerm::inv_pow(lit(kSet1))));
    CHECK(ext_subset(litn(2), litn(3)));
    CHECK_FALSE(ext_subset(litn(3), litn(2)));
    // reflexive on every shape
    CHECK(ext_subset(litn(3), litn(3)));
    CHECK(ext_subset(SetTerm::inv_pow(litn(3)), SetTerm::inv_pow(litn(3))));
    // mixed levels refuse
    CHECK_THROWS_AS(ext_subset(litn(3), SetTerm::inv_pow(litn(3))),
                    RelationUndefinedError);
    CHECK_THROWS_AS(
        ext_subset(SetTerm::inv_pow(litn(3)), inv_n(litn(3), 2)),
        RelationUndefinedError);
    // union forms refuse
    CHECK_THROWS_AS(
        ext_subset(SetTerm::union_of({litn(3), SetTerm::inv_pow(litn(3))}),
                   litn(3)),
        RelationUndefinedError);
}

TEST_CASE("ext_subset against the N tower") {
    CHECK(ext_subset(litn(3), SetTerm::nat())); // numerals sit inside N
    CHECK_FALSE(ext_subset(lit(make_set({kSet1})), SetTerm::nat()));
    CHECK(ext_subset(SetTerm::nat(), SetTerm::pow(SetTerm::nat())));
    CHECK_FALSE(ext_subset(SetTerm::nat(), litn(3)));
    CHECK(ext_subset(lit(make_set({kSet1})),
                     SetTerm::pow(SetTerm::nat()))); // {1} subset of N
}

TEST_CASE("ext_equal") {
    for (const HfSet& x : enumerate_universe(3)) {
        if (x.empty())
            continue;
        CHECK(ext_equal(SetTerm::inv_pow(SetTerm::pow(lit(x))), lit(x)));
    }
    CHECK(ext_equal(SetTerm::inv_pow(litn(3)), SetTerm::inv_pow(litn(3))));
    CHECK_FALSE(ext_equal(SetTerm::inv_pow(litn(3)),
                          SetTerm::inv_pow(lit(kSet1))));
    // unions compare as normal forms: commutative
    const SetTerm a = SetTerm::union_of({litn(3), inv_n(lit(kSet1), 1)});
    const SetTerm b = SetTerm::union_of({inv_n(lit(kSet1), 1), litn(3)});
    CHECK(ext_equal(a, b));
}

TEST_CASE("level_of") {
    CHECK(level_of(litn(3)) == 0);
    CHECK(level_of(SetTerm::inv_pow(litn(3))) == 1);
    // P^-3(P(3)): one cancellation leaves level 2
    CHECK(level_of(inv_n(SetTerm::pow(litn(3)), 3)) == 2);
    CHECK_THROWS_AS(
        level_of(SetTerm::union_of({litn(3), SetTerm::inv_pow(litn(3))})),
        UndefinedLevelError);
}

TEST_CASE("is_powered_part three-valued answer") {
    CHECK(is_powered_part(ZermeloPart::nat_tower(0)) == TriBool::Unknown);
    CHECK(is_powered_part(ZermeloPart::nat_tower(2)) == TriBool::True);
    CHECK(is_powered_part(ZermeloPart::finite(numeral(2))) == TriBool::True);
    CHECK(is_powered_part(ZermeloPart::finite(numeral(3))) == TriBool::False);
}
