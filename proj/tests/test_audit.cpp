#include "setcalc/audit.hpp"
#include "setcalc/errors.hpp"
#include "setcalc/parser.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace setcalc;

namespace {

// the audit manifest: every invariant named by the calculus modules must
// have a registered check
const std::vector<std::string> kManifest = {
    "extensionality",
    "powerset-size",
    "union-powerset",
    "powerset-monotone",
    "equiv",
    "subset-assignment",
    "inverse-powerset-axiom",
    "powered-oracle",
    "strip-roundtrip",
    "inverse",
    "inverse2",
    "uniqueness",
    "suppesinverse",
    "suppes",
    "inversesuppecor",
    "suppescor",
    "subsetequals0",
    "subsetequals",
    "transitivity",
    "zermelo-prop",
    "normalize-idempotent",
    "parser-roundtrip",
    "printer-determinism",
    "ch-card-subsumption",
    "ch-minimality",
    "ch-bernstein",
    "ch-transitivity",
    "order-consistency",
    "neg-ch-theorem",
    "neg-ch-bernstein",
    "neg-ch-union-invariance",
    "neg-chs-laws",
    "density",
    "generate-forms-regression",
};

} // namespace

TEST_CASE("registry matches the manifest") {
    CHECK(registered_checks() == kManifest);
}

TEST_CASE("unknown check name") {
    CHECK_THROWS_AS(run_check("no-such-check"), Error);
}

TEST_CASE("exhaustive checks refuse rank 4") {
    AuditConfig config;
    config.rank = 4;
    CHECK_THROWS_AS(run_check("inverse2", config), ResourceError);
}

TEST_CASE("brute force powered oracle") {
    CHECK(brute_force_powered(numeral(2), 2));
    CHECK_FALSE(brute_force_powered(numeral(3), 3));
    CHECK_FALSE(brute_force_powered(HfSet{}, 1));
}

TEST_CASE("inverse check counts the nonempty universe") {
    const AuditReport report = run_check("inverse");
    CHECK(report.passed());
    CHECK(report.tested == 15);
}

TEST_CASE("transitivity check covers Zermelo and same-level triples") {
    const AuditReport report = run_check("transitivity");
    CHECK(report.passed());
    CHECK(report.tested == 4096 + 2 * 11 * 11 * 11);
}

TEST_CASE("reports are deterministic under a fixed seed") {
    AuditConfig config;
    config.samples = 200;
    const AuditReport a = run_check("ch-bernstein", config);
    const AuditReport b = run_check("ch-bernstein", config);
    CHECK(a.tested == b.tested);
    CHECK(a.failures == b.failures);
    CHECK(a.seed == b.seed);
}

TEST_CASE("form generator is reproducible and seed-sensitive") {
    const std::vector<HfSet> pool{numeral(3), make_set({numeral(1)})};
    FormGenerator g1({pool, 2, 3, 7});
    FormGenerator g2({pool, 2, 3, 7});
    FormGenerator g3({pool, 2, 3, 8});
    bool differs = false;
    for (int i = 0; i < 50; ++i) {
        const NormalForm a = g1.next();
        CHECK(a == g2.next());
        differs = differs || !(a == g3.next());
    }
    CHECK(differs);
}

TEST_CASE("zero max components gives Zermelo-only forms") {
    FormGenerator gen({enumerate_universe(3), 0, 3, 42});
    for (int i = 0; i < 50; ++i)
        CHECK(gen.next().components.empty());
}

TEST_CASE("generated forms stay in the configured family") {
    const std::vector<HfSet> pool{numeral(3), make_set({numeral(1)})};
    FormGenerator gen({pool, 2, 3, 42});
    bool saw_empty_zermelo = false;
    for (int i = 0; i < 200; ++i) {
        const NormalForm nf = gen.next();
        CHECK(nf.components.size() <= 2);
        for (const Component& c : nf.components) {
            CHECK(c.level >= 1);
            CHECK(c.level <= 3);
        }
        saw_empty_zermelo = saw_empty_zermelo || nf.zermelo.empty();
        // forms round-trip through the printer and parser
        CHECK(normalize(parse_term(print_normal_form(nf))) == nf);
    }
    CHECK(saw_empty_zermelo);
}

TEST_CASE("counterexample strings round-trip through the grammar") {
    // the audit reports join printed terms with " ; "; each part must parse
    const std::string cex =
        "{{},{{}}} ; P^-1({{{}}}) ; {} u P^-2({{},{{}},{{},{{}}}})";
    std::size_t start = 0;
    int parts = 0;
    while (start <= cex.size()) {
        const std::size_t split = cex.find(" ; ", start);
        const std::string piece =
            cex.substr(start, split == std::string::npos ? std::string::npos
                                                         : split - start);
        CHECK_NOTHROW(parse_term(piece));
        ++parts;
        if (split == std::string::npos)
            break;
        start = split + 3;
    }
    CHECK(parts == 3);
}
