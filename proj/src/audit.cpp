#include "setcalc/audit.hpp"

#include "setcalc/errors.hpp"
#include "setcalc/parser.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <utility>

namespace setcalc {

namespace {

SetTerm lit(const HfSet& x) { return SetTerm::zermelo(x); }

SetTerm inv_pow_n(SetTerm t, unsigned n) {
    for (unsigned i = 0; i < n; ++i)
        t = SetTerm::inv_pow(std::move(t));
    return t;
}

std::vector<HfSet> nonempty_of(const std::vector<HfSet>& xs) {
    std::vector<HfSet> out;
    for (const HfSet& x : xs)
        if (!x.empty())
            out.push_back(x);
    return out;
}

std::vector<HfSet> nonpowered_nonempty_of(const std::vector<HfSet>& xs) {
    std::vector<HfSet> out;
    for (const HfSet& x : xs)
        if (!x.empty() && !is_powered(x))
            out.push_back(x);
    return out;
}

struct Ctx {
    AuditReport report;
    std::mt19937_64 rng;

    explicit Ctx(std::uint64_t seed) : rng(seed) {}

    std::uint64_t bounded(std::uint64_t n) { return n ? rng() % n : 0; }

    template <class F>
    void require(bool ok, F&& counterexample) {
        ++report.tested;
        if (!ok)
            report.failures.push_back(counterexample());
    }
};

std::string join_cex(std::initializer_list<std::string> parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty())
            out += " ; ";
        out += p;
    }
    return out;
}

// Pool for sampled checks: V_3 exhaustively; rank 4 joins by seeded random
// subsets of V_3 (V_4 is never materialized for sampling).
std::vector<HfSet> sampled_pool(Ctx& ctx, unsigned rank) {
    std::vector<HfSet> pool = enumerate_universe(std::min(rank, 3u));
    if (rank >= 4) {
        const std::vector<HfSet> v3 = pool;
        for (int i = 0; i < 16; ++i) {
            std::vector<HfSet> elems;
            for (const HfSet& e : v3)
                if (ctx.bounded(2) == 0)
                    elems.push_back(e);
            pool.push_back(make_set(std::move(elems)));
        }
    }
    return pool;
}

// ---------------------------------------------------------------------------
// hf_core checks
// ---------------------------------------------------------------------------

void check_extensionality(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> pool = sampled_pool(ctx, cfg.rank);
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        std::vector<HfSet> a;
        const std::size_t len = 1 + ctx.bounded(6);
        for (std::size_t i = 0; i < len; ++i)
            a.push_back(pool[ctx.bounded(pool.size())]);
        // same elements, different presentation: shuffled plus duplicates
        std::vector<HfSet> b = a;
        for (std::size_t i = b.size(); i > 1; --i)
            std::swap(b[i - 1], b[ctx.bounded(i)]);
        b.push_back(a[ctx.bounded(a.size())]);
        const HfSet sa = make_set(a);
        const HfSet sb = make_set(b);
        // different elements: drop one distinct element
        std::vector<HfSet> c(sa.elements().begin(), sa.elements().end());
        bool ok = sa == sb;
        if (!c.empty()) {
            c.erase(c.begin() + static_cast<std::ptrdiff_t>(
                                    ctx.bounded(c.size())));
            ok = ok && make_set(c) != sa;
        }
        ctx.require(ok, [&] { return join_cex({sa.str(), sb.str()}); });
    }
}

void check_powerset_size(Ctx& ctx, const AuditConfig& cfg) {
    for (const HfSet& x : enumerate_universe(cfg.rank)) {
        ctx.require(powerset(x).size() == (std::size_t{1} << x.size()),
                    [&] { return x.str(); });
    }
}

void check_union_powerset(Ctx& ctx, const AuditConfig& cfg) {
    for (const HfSet& x : enumerate_universe(cfg.rank)) {
        ctx.require(union_hf(powerset(x).elements()) == x,
                    [&] { return x.str(); });
    }
}

void check_powerset_monotone(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    for (const HfSet& x : u)
        for (const HfSet& y : u)
            ctx.require(is_subset_hf(x, y) ==
                            is_subset_hf(powerset(x), powerset(y)),
                        [&] { return join_cex({x.str(), y.str()}); });
}

void check_equiv(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    for (const HfSet& a : u)
        for (const HfSet& b : u) {
            // left side quantifies over subsets, right side over elements
            bool all_subsets = true;
            const HfSet pa = powerset(a);
            for (const HfSet& s : pa.elements())
                all_subsets = all_subsets && is_subset_hf(s, b);
            bool all_elements = true;
            for (const HfSet& x : a.elements())
                all_elements = all_elements && is_member(x, b);
            ctx.require(all_subsets == all_elements,
                        [&] { return join_cex({a.str(), b.str()}); });
        }
}

void check_subset_assignment(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    for (const HfSet& a : u)
        for (const HfSet& x : u)
            ctx.require(subset_member(lit(a), lit(x), 1) == is_subset_hf(a, x),
                        [&] { return join_cex({a.str(), x.str()}); });
}

void check_inverse_powerset_axiom(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    for (const HfSet& x : u)
        for (const HfSet& big : nonempty_of(u))
            ctx.require(subset_member(lit(x), SetTerm::inv_pow(lit(big)), 1) ==
                            is_member(x, big),
                        [&] { return join_cex({x.str(), big.str()}); });
}

void check_powered_oracle(Ctx& ctx, const AuditConfig& cfg) {
    std::vector<HfSet> domain = enumerate_universe(cfg.rank);
    for (const HfSet& x : enumerate_universe(cfg.rank))
        domain.push_back(powerset(x));
    for (const HfSet& x : domain) {
        const unsigned search_rank =
            x.rank() > 0 ? static_cast<unsigned>(x.rank() - 1) : 0;
        ctx.require(is_powered(x) == brute_force_powered(x, search_rank),
                    [&] { return x.str(); });
    }
}

void check_strip_roundtrip(Ctx& ctx, const AuditConfig& cfg) {
    std::vector<HfSet> domain = enumerate_universe(cfg.rank);
    for (const HfSet& x : enumerate_universe(cfg.rank))
        domain.push_back(powerset(x));
    for (const HfSet& x : domain) {
        const PowerDecomposition d = strip_power(x);
        HfSet rebuilt = d.core;
        for (unsigned i = 0; i < d.height; ++i)
            rebuilt = powerset(rebuilt);
        ctx.require(!is_powered(d.core) && rebuilt == x,
                    [&] { return x.str(); });
    }
}

// ---------------------------------------------------------------------------
// term_calculus checks
// ---------------------------------------------------------------------------

void check_inverse(Ctx& ctx, const AuditConfig& cfg) {
    for (const HfSet& x : nonempty_of(enumerate_universe(cfg.rank))) {
        const NormalForm nf =
            normalize(SetTerm::pow(SetTerm::inv_pow(lit(x))));
        ctx.require(nf == normalize(lit(x)), [&] { return x.str(); });
    }
}

void check_inverse2(Ctx& ctx, const AuditConfig& cfg) {
    for (const HfSet& x : nonempty_of(enumerate_universe(cfg.rank))) {
        const NormalForm nf =
            normalize(SetTerm::inv_pow(SetTerm::pow(lit(x))));
        ctx.require(nf == normalize(lit(x)), [&] { return x.str(); });
    }
}

void check_uniqueness(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    // candidate solutions Y, deduplicated as normal forms
    std::vector<NormalForm> candidates;
    auto add = [&](const NormalForm& nf) {
        if (std::find(candidates.begin(), candidates.end(), nf) ==
            candidates.end())
            candidates.push_back(nf);
    };
    for (const HfSet& w : u)
        add(normalize(lit(w)));
    for (const HfSet& w : nonempty_of(u))
        add(normalize(SetTerm::inv_pow(lit(w))));
    for (const HfSet& x : nonempty_of(u)) {
        const NormalForm target = normalize(lit(x));
        const NormalForm expected = normalize(apply_inv_pow(lit(x)));
        std::size_t solutions = 0;
        bool expected_solves = false;
        for (const NormalForm& y : candidates) {
            if (normalize(SetTerm::pow(to_term(y))) == target) {
                ++solutions;
                if (y == expected)
                    expected_solves = true;
            }
        }
        ctx.require(solutions == 1 && expected_solves,
                    [&] { return x.str(); });
    }
}

void check_suppesinverse(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = nonempty_of(enumerate_universe(cfg.rank));
    for (const HfSet& x : u)
        for (const HfSet& y : u) {
            // the extended subset is defined only at equal levels, so
            // P^-1(X) and P^-1(Y) must land on the same side of poweredness
            if (is_powered(x) != is_powered(y))
                continue;
            const bool lhs = is_subset_hf(x, y);
            const bool rhs = ext_subset(SetTerm::inv_pow(lit(x)),
                                        SetTerm::inv_pow(lit(y)));
            ctx.require(lhs == rhs,
                        [&] { return join_cex({x.str(), y.str()}); });
        }
}

void check_suppes(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    for (const HfSet& x : u)
        for (const HfSet& y : u)
            ctx.require(is_subset_hf(x, y) ==
                            is_subset_hf(powerset(x), powerset(y)),
                        [&] { return join_cex({x.str(), y.str()}); });
    // level-1 route: P applied to components brings the relation back to P(.)
    for (const HfSet& x : nonpowered_nonempty_of(u))
        for (const HfSet& y : nonpowered_nonempty_of(u)) {
            const SetTerm tx = SetTerm::inv_pow(lit(x));
            const SetTerm ty = SetTerm::inv_pow(lit(y));
            ctx.require(ext_subset(tx, ty) ==
                            ext_subset(apply_pow(tx), apply_pow(ty)),
                        [&] {
                            return join_cex({print_term(tx), print_term(ty)});
                        });
        }
}

void check_inversesuppecor(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = nonempty_of(enumerate_universe(cfg.rank));
    for (const HfSet& x : u)
        for (const HfSet& y : u)
            ctx.require((x == y) == ext_equal(SetTerm::inv_pow(lit(x)),
                                              SetTerm::inv_pow(lit(y))),
                        [&] { return join_cex({x.str(), y.str()}); });
}

void check_suppescor(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    for (const HfSet& x : u)
        for (const HfSet& y : u) {
            const bool ok =
                ((x == y) == (powerset(x) == powerset(y))) &&
                ((x == y) == ext_equal(SetTerm::pow(lit(x)),
                                       SetTerm::pow(lit(y))));
            ctx.require(ok, [&] { return join_cex({x.str(), y.str()}); });
        }
}

std::vector<SetTerm> reflexivity_domain(const std::vector<HfSet>& u) {
    std::vector<SetTerm> terms;
    for (const HfSet& x : u)
        terms.push_back(lit(x));
    for (unsigned m = 1; m <= 2; ++m)
        for (const HfSet& z : nonpowered_nonempty_of(u))
            terms.push_back(inv_pow_n(lit(z), m));
    terms.push_back(SetTerm::nat());
    terms.push_back(SetTerm::inv_pow(SetTerm::nat()));
    return terms;
}

void check_subsetequals0(Ctx& ctx, const AuditConfig& cfg) {
    for (const SetTerm& t : reflexivity_domain(enumerate_universe(cfg.rank)))
        ctx.require(ext_subset(t, t), [&] { return print_term(t); });
}

void check_subsetequals(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    const std::vector<HfSet> payloads = nonpowered_nonempty_of(u);
    for (unsigned m = 0; m <= 2; ++m) {
        const std::vector<HfSet>& pool = m == 0 ? u : payloads;
        for (const HfSet& x : pool)
            for (const HfSet& y : pool) {
                const SetTerm tx = inv_pow_n(lit(x), m);
                const SetTerm ty = inv_pow_n(lit(y), m);
                const bool anti = ext_subset(tx, ty) && ext_subset(ty, tx);
                ctx.require(anti == ext_equal(tx, ty), [&] {
                    return join_cex({print_term(tx), print_term(ty)});
                });
            }
    }
}

void check_transitivity(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    const std::vector<HfSet> payloads = nonpowered_nonempty_of(u);
    for (unsigned m = 0; m <= 2; ++m) {
        const std::vector<HfSet>& pool = m == 0 ? u : payloads;
        for (const HfSet& a : pool)
            for (const HfSet& b : pool)
                for (const HfSet& c : pool) {
                    const SetTerm ta = inv_pow_n(lit(a), m);
                    const SetTerm tb = inv_pow_n(lit(b), m);
                    const SetTerm tc = inv_pow_n(lit(c), m);
                    const bool ok = !(ext_subset(ta, tb) &&
                                      ext_subset(tb, tc)) ||
                                    ext_subset(ta, tc);
                    ctx.require(ok, [&] {
                        return join_cex({print_term(ta), print_term(tb),
                                         print_term(tc)});
                    });
                }
    }
}

void check_zermelo_prop(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    for (const HfSet& z : nonempty_of(u)) {
        const SetTerm t = SetTerm::inv_pow(lit(z));
        // collect the subset-member collection of P^-1(Z) through the
        // relation itself, then test closure under taking subsets
        std::vector<HfSet> members;
        for (const HfSet& a : u)
            if (subset_member(lit(a), t, 1))
                members.push_back(a);
        const HfSet member_set = make_set(members);
        bool closed = true;
        for (const HfSet& a : member_set.elements()) {
            const HfSet pa = powerset(a);
            for (const HfSet& s : pa.elements())
                closed = closed && is_member(s, member_set);
        }
        ctx.require(is_zermelo(t) == (closed && is_powered(z)),
                    [&] { return print_term(t); });
    }
}

SetTerm random_syntax_term(Ctx& ctx, const std::vector<HfSet>& leaves,
                           unsigned depth) {
    const std::uint64_t pick = ctx.bounded(depth == 0 ? 2 : 6);
    switch (pick) {
    case 0:
        return lit(leaves[ctx.bounded(leaves.size())]);
    case 1:
        return SetTerm::nat();
    case 2:
        return SetTerm::pow(random_syntax_term(ctx, leaves, depth - 1));
    case 3:
        return SetTerm::inv_pow(random_syntax_term(ctx, leaves, depth - 1));
    default: {
        std::vector<SetTerm> parts;
        const std::size_t n = 2 + ctx.bounded(2);
        for (std::size_t i = 0; i < n; ++i)
            parts.push_back(random_syntax_term(ctx, leaves, 0));
        return SetTerm::union_of(std::move(parts));
    }
    }
}

void check_normalize_idempotent(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = sampled_pool(ctx, cfg.rank);
    FormGenerator gen({u, 3, 3, cfg.seed});
    for (std::uint64_t s = 0; s < cfg.samples / 2; ++s) {
        const NormalForm nf = gen.next();
        SetTerm t = to_term(nf);
        bool ok = normalize(t) == nf;
        if (t.kind() == SetTerm::Kind::Union) {
            std::vector<SetTerm> parts = t.parts();
            for (std::size_t i = parts.size(); i > 1; --i)
                std::swap(parts[i - 1], parts[ctx.bounded(i)]);
            ok = ok && normalize(SetTerm::union_of(parts)) == nf;
        }
        ctx.require(ok, [&] { return print_normal_form(nf); });
    }
    for (std::uint64_t s = 0; s < cfg.samples - cfg.samples / 2; ++s) {
        const SetTerm t = random_syntax_term(ctx, u, 3);
        try {
            const NormalForm nf = normalize(t);
            ctx.require(normalize(to_term(nf)) == nf,
                        [&] { return print_term(t); });
        } catch (const Error&) {
            // invalid by construction (P^-1 of {} or P on a union); skipped
        }
    }
}

// ---------------------------------------------------------------------------
// expr_lang checks
// ---------------------------------------------------------------------------

void check_parser_roundtrip(Ctx& ctx, const AuditConfig& cfg) {
    std::vector<HfSet> leaves = enumerate_universe(2);
    for (unsigned n = 3; n <= 5; ++n)
        leaves.push_back(numeral(n));
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        const SetTerm t = random_syntax_term(ctx, leaves, 3);
        const std::string text = print_term(t);
        bool ok = false;
        try {
            ok = parse_term(text) == t;
        } catch (const Error&) {
            ok = false;
        }
        ctx.require(ok, [&] { return text; });
    }
}

void check_printer_determinism(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = sampled_pool(ctx, cfg.rank);
    FormGenerator gen({u, 2, 3, cfg.seed});
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        const NormalForm a = gen.next();
        const NormalForm b = gen.next();
        const bool ok =
            (print_normal_form(a) == print_normal_form(b)) == (a == b);
        ctx.require(ok, [&] {
            return join_cex({print_normal_form(a), print_normal_form(b)});
        });
    }
}

// ---------------------------------------------------------------------------
// cardinality checks
// ---------------------------------------------------------------------------

void check_ch_card_subsumption(Ctx& ctx, const AuditConfig& cfg) {
    for (const HfSet& x : enumerate_universe(cfg.rank))
        ctx.require(ch_card(lit(x)) == SymCardinal::fin(x.size()),
                    [&] { return x.str(); });
}

void check_ch_minimality(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    for (const HfSet& a : nonpowered_nonempty_of(u))
        ctx.require(ch_card(SetTerm::inv_pow(lit(a))) == SymCardinal::beth(0),
                    [&] { return "P^-1(" + a.str() + ")"; });
    ctx.require(ch_card(SetTerm::inv_pow(SetTerm::pow(SetTerm::nat()))) ==
                    SymCardinal::beth(0),
                [&] { return std::string("P^-1(P(N))"); });
    for (const HfSet& x : u) {
        const SetTerm t = SetTerm::inv_pow(SetTerm::pow(lit(x)));
        ctx.require(ch_card(t) == SymCardinal::fin(x.size()),
                    [&] { return print_term(t); });
    }
}

SetTerm random_ch_term(Ctx& ctx, const std::vector<HfSet>& u,
                       const std::vector<HfSet>& payloads) {
    switch (ctx.bounded(5)) {
    case 0:
        return lit(u[ctx.bounded(u.size())]);
    case 1:
        return SetTerm::inv_pow(lit(payloads[ctx.bounded(payloads.size())]));
    case 2: {
        SetTerm t = SetTerm::nat();
        const unsigned k = static_cast<unsigned>(ctx.bounded(4));
        for (unsigned i = 0; i < k; ++i)
            t = SetTerm::pow(t);
        return t;
    }
    case 3: {
        SetTerm t = SetTerm::nat();
        const unsigned k = static_cast<unsigned>(ctx.bounded(3));
        for (unsigned i = 0; i < k; ++i)
            t = SetTerm::pow(t);
        return SetTerm::inv_pow(t);
    }
    default:
        return SetTerm::inv_pow(
            SetTerm::pow(lit(u[ctx.bounded(u.size())])));
    }
}

void check_ch_bernstein(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = sampled_pool(ctx, cfg.rank);
    const std::vector<HfSet> payloads = nonpowered_nonempty_of(u);
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        const SetTerm a = random_ch_term(ctx, u, payloads);
        const SetTerm b = random_ch_term(ctx, u, payloads);
        const bool ok = !(ch_leq(a, b) && ch_leq(b, a)) ||
                        ch_card(a) == ch_card(b);
        ctx.require(ok,
                    [&] { return join_cex({print_term(a), print_term(b)}); });
    }
}

void check_ch_transitivity(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = sampled_pool(ctx, cfg.rank);
    const std::vector<HfSet> payloads = nonpowered_nonempty_of(u);
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        const SetTerm a = random_ch_term(ctx, u, payloads);
        const SetTerm b = random_ch_term(ctx, u, payloads);
        const SetTerm c = random_ch_term(ctx, u, payloads);
        const bool ok = !(ch_leq(a, b) && ch_leq(b, c)) || ch_leq(a, c);
        ctx.require(ok, [&] {
            return join_cex({print_term(a), print_term(b), print_term(c)});
        });
    }
}

void check_order_consistency(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    for (const HfSet& x : u)
        for (const HfSet& y : u) {
            const NormalForm fx{ZermeloPart::finite(x), {}};
            const NormalForm fy{ZermeloPart::finite(y), {}};
            const Verdict classical = x.size() < y.size() ? Verdict::Less
                                      : x.size() > y.size()
                                          ? Verdict::Greater
                                          : Verdict::Equal;
            const bool ok = neg_ch_cmp(fx, fy) == classical &&
                            neg_chs_cmp(fx, fy) == classical;
            ctx.require(ok, [&] { return join_cex({x.str(), y.str()}); });
        }
}

// the exhaustively checked family: zermelo part over the universe, up to two
// components of level <= 3 with non-powered nonempty payloads
std::vector<NormalForm> bounded_family(const std::vector<HfSet>& zpool,
                                       const std::vector<HfSet>& payloads,
                                       unsigned max_level) {
    std::vector<Component> options;
    for (unsigned m = 1; m <= max_level; ++m)
        for (const HfSet& p : payloads)
            options.emplace_back(m, ZermeloPart::finite(p));
    std::vector<std::vector<Component>> combos;
    combos.push_back({});
    for (std::size_t i = 0; i < options.size(); ++i)
        combos.push_back({options[i]});
    for (std::size_t i = 0; i < options.size(); ++i)
        for (std::size_t j = i; j < options.size(); ++j)
            combos.push_back({options[i], options[j]});
    std::vector<NormalForm> forms;
    forms.reserve(zpool.size() * combos.size());
    for (const HfSet& z : zpool)
        for (const std::vector<Component>& combo : combos) {
            NormalForm nf{ZermeloPart::finite(z), combo};
            sort_well_represented(nf.components);
            forms.push_back(std::move(nf));
        }
    return forms;
}

// index-wise (rho, tau) profile equality, recomputed independently of the
// comparison routines
bool profiles_equal(const NormalForm& x, const NormalForm& y) {
    if (tau(x.zermelo) != tau(y.zermelo))
        return false;
    if (x.components.size() != y.components.size())
        return false;
    for (std::size_t i = 0; i < x.components.size(); ++i) {
        const std::optional<Component> a(x.components[i]);
        const std::optional<Component> b(y.components[i]);
        if (rho(a) != rho(b) || tau(a) != tau(b))
            return false;
    }
    return true;
}

void check_neg_ch_bernstein(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    const std::vector<NormalForm> forms =
        bounded_family(u, nonpowered_nonempty_of(u), 3);
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i; j < forms.size(); ++j) {
            const Verdict v = neg_ch_cmp(forms[i], forms[j]);
            const Verdict w = neg_ch_cmp(forms[j], forms[i]);
            const bool ok = w == flip(v) &&
                            (v == Verdict::Equal) ==
                                profiles_equal(forms[i], forms[j]);
            ctx.require(ok, [&] {
                return join_cex({print_normal_form(forms[i]),
                                 print_normal_form(forms[j])});
            });
        }
}

void check_neg_ch_theorem(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    for (const HfSet& z : nonempty_of(u))
        for (const HfSet& zp : nonpowered_nonempty_of(u))
            for (unsigned n = 1; n <= 5; ++n) {
                const NormalForm base{ZermeloPart::finite(z), {}};
                NormalForm mid{ZermeloPart::finite(z),
                               {Component(n, ZermeloPart::finite(zp))}};
                const NormalForm top{ZermeloPart::finite(powerset(z)), {}};
                const bool ok = neg_ch_cmp(base, mid) == Verdict::Less &&
                                neg_ch_cmp(mid, top) == Verdict::Less;
                ctx.require(ok, [&] {
                    return join_cex({print_normal_form(base),
                                     print_normal_form(mid),
                                     print_normal_form(top)});
                });
            }
}

void check_neg_ch_union_invariance(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = sampled_pool(ctx, cfg.rank);
    FormGenerator gen({u, 3, 3, cfg.seed});
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        const NormalForm nf = gen.next();
        const NormalForm ref = gen.next();
        SetTerm t = to_term(nf);
        NormalForm permuted = nf;
        if (t.kind() == SetTerm::Kind::Union) {
            std::vector<SetTerm> parts = t.parts();
            for (std::size_t i = parts.size(); i > 1; --i)
                std::swap(parts[i - 1], parts[ctx.bounded(i)]);
            permuted = normalize(SetTerm::union_of(parts));
        }
        const bool ok = permuted == nf &&
                        neg_ch_cmp(permuted, ref) == neg_ch_cmp(nf, ref) &&
                        neg_chs_cmp(permuted, ref) == neg_chs_cmp(nf, ref);
        ctx.require(ok, [&] { return print_normal_form(nf); });
    }
}

void check_neg_chs_laws(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = enumerate_universe(cfg.rank);
    const std::vector<NormalForm> forms =
        bounded_family(u, nonpowered_nonempty_of(u), 3);
    // irreflexivity of the strict part
    for (const NormalForm& f : forms)
        ctx.require(neg_chs_cmp(f, f) == Verdict::Equal,
                    [&] { return print_normal_form(f); });
    // totality and antisymmetric reporting
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            const Verdict v = neg_chs_cmp(forms[i], forms[j]);
            const bool ok = v != Verdict::Incomparable &&
                            neg_chs_cmp(forms[j], forms[i]) == flip(v);
            ctx.require(ok, [&] {
                return join_cex({print_normal_form(forms[i]),
                                 print_normal_form(forms[j])});
            });
        }
    // transitivity, exhaustive over the two-payload subfamily via a verdict
    // matrix (the full family has too many triples to enumerate)
    const std::vector<HfSet> small_pool{numeral(3),
                                        make_set({numeral(1)})};
    const std::vector<NormalForm> small =
        bounded_family(u, small_pool, 3);
    const std::size_t n = small.size();
    std::vector<signed char> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i * n + j] =
                static_cast<signed char>(neg_chs_cmp(small[i], small[j]));
    const auto less = static_cast<signed char>(Verdict::Less);
    const auto equal = static_cast<signed char>(Verdict::Equal);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const signed char vab = m[a * n + b];
            if (vab != less && vab != equal)
                continue;
            for (std::size_t c = 0; c < n; ++c) {
                const signed char vbc = m[b * n + c];
                if (vbc != less && vbc != equal)
                    continue;
                const signed char expect =
                    (vab == less || vbc == less) ? less : equal;
                ctx.require(m[a * n + c] == expect, [&] {
                    return join_cex({print_normal_form(small[a]),
                                     print_normal_form(small[b]),
                                     print_normal_form(small[c])});
                });
            }
        }
}

// zermelo pool without the pure power towers over {}, so a witness core is
// always available
std::vector<HfSet> density_zermelo_pool(const std::vector<HfSet>& u) {
    std::vector<HfSet> out;
    for (const HfSet& x : u) {
        const PowerDecomposition d = strip_power(x);
        if (x.empty() || !d.core.empty())
            out.push_back(x);
    }
    return out;
}

void check_density(Ctx& ctx, const AuditConfig& cfg) {
    const std::vector<HfSet> u = sampled_pool(ctx, cfg.rank);
    FormGenerator gen({density_zermelo_pool(u), 2, 3, cfg.seed});
    std::uint64_t produced = 0;
    std::uint64_t attempts = 0;
    while (produced < cfg.samples && attempts < cfg.samples * 20) {
        ++attempts;
        NormalForm x = gen.next();
        NormalForm y = gen.next();
        const Verdict v = neg_chs_cmp(x, y);
        if (v == Verdict::Equal)
            continue;
        if (v == Verdict::Greater)
            std::swap(x, y);
        ++produced;
        bool ok = false;
        std::string note;
        try {
            const NormalForm w = between_witness(x, y);
            ok = neg_chs_cmp(x, w) == Verdict::Less &&
                 neg_chs_cmp(w, y) == Verdict::Less;
            note = print_normal_form(w);
        } catch (const Error& e) {
            note = e.what();
        }
        ctx.require(ok, [&] {
            return join_cex(
                {print_normal_form(x), print_normal_form(y), note});
        });
    }
}

void check_generate_forms_regression(Ctx& ctx, const AuditConfig&) {
    const std::vector<HfSet> pool{numeral(3), make_set({numeral(1)})};
    FormGenerator gen({pool, 2, 3, 42});
    // fixture recorded at first build; the stream must never drift
    const std::vector<std::string> expected = {
        "{{},{{}},{{},{{}}}} u P^-1({{{}}})",
        "P^-1({{},{{}},{{},{{}}}})",
        "{{{}}}",
        "P^-1({{},{{}},{{},{{}}}})",
        "{{},{{}},{{},{{}}}} u P^-3({{{}}})",
    };
    for (const std::string& want : expected) {
        const NormalForm nf = gen.next();
        ctx.require(print_normal_form(nf) == want,
                    [&] { return print_normal_form(nf) + " ; " + want; });
    }
    // a duplicated component must occur somewhere early in the stream
    bool found_duplicate = false;
    for (int i = 0; i < 200 && !found_duplicate; ++i) {
        const NormalForm nf = gen.next();
        for (std::size_t a = 0; a + 1 < nf.components.size(); ++a)
            found_duplicate =
                found_duplicate || nf.components[a] == nf.components[a + 1];
    }
    ctx.require(found_duplicate,
                [] { return std::string("no duplicated component in 200 forms"); });
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

struct CheckDef {
    const char* name;
    const char* domain;
    bool exhaustive; // exhaustive checks refuse ranks above 3
    void (*run)(Ctx&, const AuditConfig&);
};

const std::vector<CheckDef>& check_table() {
    static const std::vector<CheckDef> table = {
        {"extensionality",
         "seeded element lists over V_rank: equal contents iff equal sets",
         false, check_extensionality},
        {"powerset-size", "|P(x)| = 2^|x| over V_rank", true,
         check_powerset_size},
        {"union-powerset", "union of P(x)'s elements = x over V_rank", true,
         check_union_powerset},
        {"powerset-monotone",
         "x subset y iff P(x) subset P(y), exhaustive over V_rank pairs", true,
         check_powerset_monotone},
        {"equiv",
         "subset-quantified and element-quantified inclusion agree over "
         "V_rank pairs",
         true, check_equiv},
        {"subset-assignment",
         "subset_member(a,x,1) = subset relation over V_rank pairs", true,
         check_subset_assignment},
        {"inverse-powerset-axiom",
         "subset_member(x,P^-1(X),1) = membership over V_rank pairs", true,
         check_inverse_powerset_axiom},
        {"powered-oracle",
         "is_powered vs brute-force search over V_rank and P(V_rank)", true,
         check_powered_oracle},
        {"strip-roundtrip",
         "strip_power recomposes and cores are non-powered over V_rank and "
         "P(V_rank)",
         true, check_strip_roundtrip},
        {"inverse", "P(P^-1(X)) = X over nonempty V_rank", true,
         check_inverse},
        {"inverse2", "P^-1(P(X)) = X over V_rank", true, check_inverse2},
        {"uniqueness",
         "exactly one Y in the term model with P(Y) = X, over nonempty "
         "V_rank",
         true, check_uniqueness},
        {"suppesinverse",
         "X subset Y iff P^-1(X) subset P^-1(Y) over same-poweredness "
         "nonempty V_rank pairs",
         true, check_suppesinverse},
        {"suppes",
         "X subset Y iff P(X) subset P(Y), Zermelo and level-1 routes", true,
         check_suppes},
        {"inversesuppecor",
         "X = Y iff P^-1(X) = P^-1(Y) over nonempty V_rank pairs", true,
         check_inversesuppecor},
        {"suppescor", "X = Y iff P(X) = P(Y) over V_rank pairs", true,
         check_suppescor},
        {"subsetequals0", "reflexivity over Zermelo and component terms",
         true, check_subsetequals0},
        {"subsetequals",
         "mutual extended subset coincides with extended equality, levels "
         "0-2",
         true, check_subsetequals},
        {"transitivity",
         "extended subset transitivity over level-0..2 same-level triples",
         true, check_transitivity},
        {"zermelo-prop",
         "is_zermelo(P^-1(Z)) = downward closure + poweredness over nonempty "
         "V_rank",
         true, check_zermelo_prop},
        {"normalize-idempotent",
         "normalize is idempotent and union-order-invariant, seeded", false,
         check_normalize_idempotent},
        {"parser-roundtrip", "parse(print(t)) = t over seeded random terms",
         false, check_parser_roundtrip},
        {"printer-determinism",
         "printed normal forms equal iff forms equal, seeded", false,
         check_printer_determinism},
        {"ch-card-subsumption",
         "classical cardinalities are attained by ch_card over V_rank", true,
         check_ch_card_subsumption},
        {"ch-minimality",
         "ch_card(P^-1(A)) = beth:0 for non-powered A; P^-1(P(X)) keeps "
         "fin:|X|",
         true, check_ch_minimality},
        {"ch-bernstein", "ch_leq antisymmetry over seeded term pairs", false,
         check_ch_bernstein},
        {"ch-transitivity", "ch_leq transitivity over seeded term triples",
         false, check_ch_transitivity},
        {"order-consistency",
         "neg-ch, neg-chs and classical comparison agree on Zermelo forms",
         true, check_order_consistency},
        {"neg-ch-theorem",
         "Z < Z u P^-n(Z') < P(Z) for nonempty Z, non-powered Z', n in 1..5",
         true, check_neg_ch_theorem},
        {"neg-ch-bernstein",
         "antisymmetric reporting and equality over the bounded family, "
         "exhaustive pairs",
         true, check_neg_ch_bernstein},
        {"neg-ch-union-invariance",
         "verdicts invariant under reordering of union components, seeded",
         false, check_neg_ch_union_invariance},
        {"neg-chs-laws",
         "irreflexivity and totality over the bounded family; transitivity "
         "over the two-payload subfamily",
         true, check_neg_chs_laws},
        {"density",
         "seeded pairs x < y from the empty-core-free family admit a strict "
         "between witness",
         false, check_density},
        {"generate-forms-regression",
         "fixed-seed form stream matches the recorded fixture", false,
         check_generate_forms_regression},
    };
    return table;
}

} // namespace

std::vector<std::string> registered_checks() {
    std::vector<std::string> names;
    for (const CheckDef& def : check_table())
        names.push_back(def.name);
    return names;
}

AuditReport run_check(const std::string& name, const AuditConfig& config) {
    for (const CheckDef& def : check_table()) {
        if (name != def.name)
            continue;
        if (def.exhaustive && config.rank > 3)
            throw ResourceError("check '" + name +
                                "' is exhaustive and limited to rank 3");
        Ctx ctx(config.seed);
        ctx.report.name = def.name;
        ctx.report.domain = def.domain;
        ctx.report.seed = config.seed;
        const auto start = std::chrono::steady_clock::now();
        def.run(ctx, config);
        const auto stop = std::chrono::steady_clock::now();
        ctx.report.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                .count();
        return std::move(ctx.report);
    }
    throw Error("unknown check name: " + name);
}

std::vector<AuditReport> run_all_checks(const AuditConfig& config) {
    std::vector<AuditReport> reports;
    for (const CheckDef& def : check_table())
        reports.push_back(run_check(def.name, config));
    return reports;
}

bool brute_force_powered(const HfSet& x, unsigned rank) {
    for (const HfSet& candidate : enumerate_universe(rank))
        if (powerset(candidate) == x)
            return true;
    return false;
}

FormGenerator::FormGenerator(FormGenConfig config)
    : config_(std::move(config)), rng_(config_.seed) {
    if (config_.pool.empty())
        throw Error("form generator needs a nonempty pool");
    for (const HfSet& x : config_.pool)
        if (!x.empty() && !is_powered(x))
            payload_pool_.push_back(x);
}

std::uint64_t FormGenerator::bounded(std::uint64_t n) {
    return n ? rng_() % n : 0;
}

NormalForm FormGenerator::next() {
    NormalForm nf;
    if (bounded(4) == 0)
        nf.zermelo = ZermeloPart::finite(HfSet{});
    else
        nf.zermelo =
            ZermeloPart::finite(config_.pool[bounded(config_.pool.size())]);
    if (!payload_pool_.empty()) {
        const unsigned n =
            static_cast<unsigned>(bounded(config_.max_components + 1));
        for (unsigned i = 0; i < n; ++i) {
            const unsigned level =
                1 + static_cast<unsigned>(bounded(config_.max_level));
            const HfSet& payload = payload_pool_[bounded(payload_pool_.size())];
            nf.components.emplace_back(level, ZermeloPart::finite(payload));
        }
    }
    sort_well_represented(nf.components);
    return nf;
}

} // namespace setcalc
