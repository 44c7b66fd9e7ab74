#include "setcalc/cardinality.hpp"

#include "setcalc/errors.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace setcalc {

std::string SymCardinal::str() const {
    return (beth_ ? "beth:" : "fin:") + std::to_string(value_);
}

std::string LevelRank::str() const {
    if (neg_inf_)
        return "-inf";
    return std::to_string(value_);
}

std::string verdict_str(Verdict v) {
    switch (v) {
    case Verdict::Less:
        return "lt";
    case Verdict::Equal:
        return "eq";
    case Verdict::Greater:
        return "gt";
    case Verdict::Incomparable:
        return "incomparable";
    }
    return "incomparable";
}

Verdict flip(Verdict v) {
    switch (v) {
    case Verdict::Less:
        return Verdict::Greater;
    case Verdict::Greater:
        return Verdict::Less;
    default:
        return v;
    }
}

unsigned degree(const ZermeloPart& z) {
    return z.is_nat_tower() ? z.tower_height() : 0;
}

SymCardinal card_of(const ZermeloPart& z) {
    if (z.is_nat_tower())
        return SymCardinal::beth(z.tower_height());
    return SymCardinal::fin(z.finite_value().size());
}

SymCardinal ch_card(const SetTerm& t) {
    NormalForm nf = normalize(t);
    if (nf.components.empty())
        return card_of(nf.zermelo);
    const bool single_component =
        nf.components.size() == 1 && nf.zermelo.is_finite() &&
        nf.zermelo.finite_value().empty();
    if (!single_component || nf.components.front().level != 1)
        throw OutsideEzfError(
            "CH-cardinality is only defined up to level-1 sets");
    const unsigned k = degree(nf.components.front().payload);
    return k >= 1 ? SymCardinal::beth(k - 1) : SymCardinal::beth(0);
}

bool ch_leq(const SetTerm& a, const SetTerm& b) {
    return ch_card(a) <= ch_card(b);
}

LevelRank rho(const ZermeloPart&) { return LevelRank::zero(); }

LevelRank rho(const std::optional<Component>& c) {
    return c ? LevelRank::neg(c->level) : LevelRank::neg_infinity();
}

SymCardinal tau(const ZermeloPart& z) { return card_of(z); }

SymCardinal tau(const std::optional<Component>& c) {
    return c ? card_of(c->payload) : SymCardinal::fin(0);
}

namespace {

// The componentwise <= of the dominance order: |X1| < |Y1|, or equal Zermelo
// cardinalities with n <= m and every component of x dominated by the
// component of y at the same index. rho(X_i) <= rho(Y_i) is level_x >= level_y.
bool neg_ch_leq(const NormalForm& x, const NormalForm& y) {
    const SymCardinal cx = card_of(x.zermelo);
    const SymCardinal cy = card_of(y.zermelo);
    if (cx < cy)
        return true;
    if (cx != cy)
        return false;
    if (x.components.size() > y.components.size())
        return false;
    for (std::size_t i = 0; i < x.components.size(); ++i) {
        const Component& cxi = x.components[i];
        const Component& cyi = y.components[i];
        if (cxi.level < cyi.level)
            return false;
        if (card_of(cxi.payload) > card_of(cyi.payload))
            return false;
    }
    return true;
}

} // namespace

Verdict neg_ch_cmp(const NormalForm& x, const NormalForm& y) {
    const bool fwd = neg_ch_leq(x, y);
    const bool bwd = neg_ch_leq(y, x);
    if (fwd && bwd)
        return Verdict::Equal;
    if (fwd)
        return Verdict::Less;
    if (bwd)
        return Verdict::Greater;
    return Verdict::Incomparable;
}

Verdict neg_chs_cmp(const NormalForm& x, const NormalForm& y) {
    // Zermelo slots both have rho = 0; compare their weights first.
    const SymCardinal zx = card_of(x.zermelo);
    const SymCardinal zy = card_of(y.zermelo);
    if (zx != zy)
        return zx < zy ? Verdict::Less : Verdict::Greater;
    const std::size_t width =
        std::max(x.components.size(), y.components.size());
    for (std::size_t k = 0; k < width; ++k) {
        // padding slots carry rho = -infinity and tau = 0
        const LevelRank rx = k < x.components.size()
                                 ? LevelRank::neg(x.components[k].level)
                                 : LevelRank::neg_infinity();
        const LevelRank ry = k < y.components.size()
                                 ? LevelRank::neg(y.components[k].level)
                                 : LevelRank::neg_infinity();
        if (rx != ry)
            return rx < ry ? Verdict::Less : Verdict::Greater;
        const SymCardinal tx = k < x.components.size()
                                   ? card_of(x.components[k].payload)
                                   : SymCardinal::fin(0);
        const SymCardinal ty = k < y.components.size()
                                   ? card_of(y.components[k].payload)
                                   : SymCardinal::fin(0);
        if (tx != ty)
            return tx < ty ? Verdict::Less : Verdict::Greater;
    }
    return Verdict::Equal;
}

namespace {

// Non-powered core of a slot's payload, or nullopt when the slot cannot
// provide one (its core strips to the empty set).
std::optional<ZermeloPart> witness_core(const ZermeloPart& z) {
    if (z.is_nat_tower())
        return ZermeloPart::nat_tower(0);
    const PowerDecomposition d = strip_power(z.finite_value());
    if (d.core.empty())
        return std::nullopt;
    return ZermeloPart::finite(d.core);
}

void collect_candidates(const NormalForm& f,
                        std::vector<std::pair<SymCardinal, ZermeloPart>>& out) {
    if (tau(f.zermelo) > SymCardinal::fin(0))
        out.emplace_back(tau(f.zermelo), f.zermelo);
    for (const Component& c : f.components)
        out.emplace_back(tau(std::optional<Component>(c)), c.payload);
}

} // namespace

NormalForm between_witness(const NormalForm& x, const NormalForm& y) {
    if (neg_chs_cmp(x, y) != Verdict::Less)
        throw OrderingError("between_witness needs a strictly ordered pair");

    // r: the least finite rho over all slots of both forms. The Zermelo
    // slots contribute 0, so r <= 0 always.
    int r = 0;
    for (const Component& c : x.components)
        r = std::min(r, -static_cast<int>(c.level));
    for (const Component& c : y.components)
        r = std::min(r, -static_cast<int>(c.level));

    // K: core of the smallest nonzero-tau payload with a nonempty core;
    // ties resolved by scan order (x's slots before y's).
    std::vector<std::pair<SymCardinal, ZermeloPart>> candidates;
    collect_candidates(x, candidates);
    collect_candidates(y, candidates);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) {
                         return a.first < b.first;
                     });
    std::optional<ZermeloPart> core;
    for (const auto& [weight, payload] : candidates) {
        core = witness_core(payload);
        if (core)
            break;
    }
    if (!core)
        throw WitnessUnavailableError(
            "no eligible witness payload: every candidate core is empty");

    NormalForm u = x;
    u.components.emplace_back(static_cast<unsigned>(1 - r), std::move(*core));
    sort_well_represented(u.components);
    return u;
}

} // namespace setcalc
