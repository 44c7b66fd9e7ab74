#include "setcalc/term.hpp"

#include "setcalc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace setcalc {

TriBool is_powered_part(const ZermeloPart& z) {
    if (z.is_nat_tower())
        return z.tower_height() >= 1 ? TriBool::True : TriBool::Unknown;
    return is_powered(z.finite_value()) ? TriBool::True : TriBool::False;
}

Component::Component(unsigned level, ZermeloPart payload_in)
    : level(level), payload(std::move(payload_in)) {
    if (level < 1)
        throw Error("component level must be positive");
    if (payload.empty())
        throw DomainError("component payload cannot be the empty set");
    if (is_powered_part(payload) == TriBool::True)
        throw Error("component payload must be non-powered");
}

namespace {

// tau order on payloads without the cardinality module: any N-tower payload
// is infinite and outranks every finite one.
bool payload_tau_greater(const ZermeloPart& a, const ZermeloPart& b) {
    if (a.is_nat_tower() != b.is_nat_tower())
        return a.is_nat_tower();
    if (a.is_nat_tower())
        return a.tower_height() > b.tower_height();
    return a.finite_value().size() > b.finite_value().size();
}

bool payload_tau_equal(const ZermeloPart& a, const ZermeloPart& b) {
    return !payload_tau_greater(a, b) && !payload_tau_greater(b, a);
}

bool component_before(const Component& a, const Component& b) {
    if (a.level != b.level)
        return a.level < b.level; // rho descending
    if (!payload_tau_equal(a.payload, b.payload))
        return payload_tau_greater(a.payload, b.payload); // tau descending
    // deterministic tie-break so multiset equality is vector equality
    if (a.payload.is_finite() && b.payload.is_finite())
        return a.payload.finite_value() < b.payload.finite_value();
    return false;
}

} // namespace

void sort_well_represented(std::vector<Component>& components) {
    std::stable_sort(components.begin(), components.end(), component_before);
}

struct SetTerm::Node {
    Kind kind;
    HfSet lit;                 // Kind::Zermelo
    std::vector<SetTerm> kids; // child for Pow/InvPow, parts for Union
};

SetTerm SetTerm::zermelo(HfSet x) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Zermelo;
    node->lit = std::move(x);
    return SetTerm{std::move(node)};
}

SetTerm SetTerm::nat() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Nat;
    return SetTerm{std::move(node)};
}

SetTerm SetTerm::pow(SetTerm t) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Pow;
    node->kids.push_back(std::move(t));
    return SetTerm{std::move(node)};
}

SetTerm SetTerm::inv_pow(SetTerm t) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::InvPow;
    node->kids.push_back(std::move(t));
    return SetTerm{std::move(node)};
}

SetTerm SetTerm::union_of(std::vector<SetTerm> parts) {
    std::vector<SetTerm> flat;
    for (SetTerm& p : parts) {
        if (p.kind() == Kind::Union) {
            const auto& inner = p.parts();
            flat.insert(flat.end(), inner.begin(), inner.end());
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.empty())
        return zermelo(HfSet{});
    if (flat.size() == 1)
        return flat.front();
    auto node = std::make_shared<Node>();
    node->kind = Kind::Union;
    node->kids = std::move(flat);
    return SetTerm{std::move(node)};
}

SetTerm::Kind SetTerm::kind() const { return node_->kind; }

const HfSet& SetTerm::literal() const {
    assert(kind() == Kind::Zermelo);
    return node_->lit;
}

const SetTerm& SetTerm::child() const {
    assert(kind() == Kind::Pow || kind() == Kind::InvPow);
    return node_->kids.front();
}

const std::vector<SetTerm>& SetTerm::parts() const {
    assert(kind() == Kind::Union);
    return node_->kids;
}

bool SetTerm::operator==(const SetTerm& other) const {
    if (node_ == other.node_)
        return true;
    if (kind() != other.kind())
        return false;
    switch (kind()) {
    case Kind::Zermelo:
        return literal() == other.literal();
    case Kind::Nat:
        return true;
    case Kind::Pow:
    case Kind::InvPow:
        return child() == other.child();
    case Kind::Union: {
        const auto& a = parts();
        const auto& b = other.parts();
        if (a.size() != b.size())
            return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == b[i]))
                return false;
        return true;
    }
    }
    return false;
}

SetTerm apply_pow(const SetTerm& t) {
    switch (t.kind()) {
    case SetTerm::Kind::Union:
        throw UnsupportedOperandError("P is not defined on union forms");
    case SetTerm::Kind::InvPow:
        return t.child(); // P(P^-1(X)) = X
    case SetTerm::Kind::Zermelo:
        return SetTerm::zermelo(powerset(t.literal()));
    default:
        return SetTerm::pow(t); // tower increment for N-shaped terms
    }
}

SetTerm apply_inv_pow(const SetTerm& t) {
    switch (t.kind()) {
    case SetTerm::Kind::Union:
        throw UnsupportedOperandError("P^-1 is not defined on union forms");
    case SetTerm::Kind::Pow:
        return t.child(); // P^-1(P(X)) = X
    case SetTerm::Kind::Zermelo: {
        const HfSet& x = t.literal();
        if (x.empty())
            throw DomainError("P^-1 is not defined on the empty set");
        if (is_powered(x))
            return SetTerm::zermelo(union_hf(x.elements()));
        return SetTerm::inv_pow(t);
    }
    default:
        return SetTerm::inv_pow(t); // level m -> m+1, or N -> P^-1(N)
    }
}

namespace {

// A single evaluated term P^-level(payload); whenever level >= 1 the payload
// is already non-powered and nonempty.
struct Single {
    unsigned level = 0;
    ZermeloPart payload;
};

Single eval_single(const SetTerm& t) {
    switch (t.kind()) {
    case SetTerm::Kind::Zermelo:
        return {0, ZermeloPart::finite(t.literal())};
    case SetTerm::Kind::Nat:
        return {0, ZermeloPart::nat_tower(0)};
    case SetTerm::Kind::Pow: {
        Single s = eval_single(t.child());
        if (s.level >= 1)
            return {s.level - 1, std::move(s.payload)};
        if (s.payload.is_nat_tower())
            return {0, ZermeloPart::nat_tower(s.payload.tower_height() + 1)};
        return {0, ZermeloPart::finite(powerset(s.payload.finite_value()))};
    }
    case SetTerm::Kind::InvPow: {
        Single s = eval_single(t.child());
        if (s.level >= 1)
            return {s.level + 1, std::move(s.payload)};
        if (s.payload.is_nat_tower()) {
            unsigned k = s.payload.tower_height();
            if (k >= 1)
                return {0, ZermeloPart::nat_tower(k - 1)};
            return {1, ZermeloPart::nat_tower(0)}; // N treated as non-powered
        }
        const HfSet& x = s.payload.finite_value();
        if (x.empty())
            throw DomainError("P^-1 is not defined on the empty set");
        if (is_powered(x))
            return {0, ZermeloPart::finite(union_hf(x.elements()))};
        return {1, std::move(s.payload)};
    }
    case SetTerm::Kind::Union:
        throw UnsupportedOperandError("P/P^-1 is not defined on union forms");
    }
    throw Error("unreachable term kind");
}

ZermeloPart merge_zermelo(const std::vector<ZermeloPart>& parts) {
    std::vector<HfSet> finites;
    std::optional<unsigned> tower;
    bool tower_conflict = false;
    bool nonempty_finite = false;
    for (const ZermeloPart& p : parts) {
        if (p.is_nat_tower()) {
            if (tower && *tower != p.tower_height())
                tower_conflict = true;
            tower = p.tower_height();
        } else {
            if (!p.finite_value().empty())
                nonempty_finite = true;
            finites.push_back(p.finite_value());
        }
    }
    if (tower) {
        if (tower_conflict || nonempty_finite)
            throw UnsupportedOperandError(
                "union of an N-tower with another Zermelo part is not supported");
        return ZermeloPart::nat_tower(*tower);
    }
    return ZermeloPart::finite(union_hf(finites));
}

} // namespace

NormalForm normalize(const SetTerm& t) {
    std::vector<Single> singles;
    if (t.kind() == SetTerm::Kind::Union) {
        for (const SetTerm& p : t.parts())
            singles.push_back(eval_single(p));
    } else {
        singles.push_back(eval_single(t));
    }

    NormalForm nf;
    std::vector<ZermeloPart> zparts;
    for (Single& s : singles) {
        if (s.level == 0)
            zparts.push_back(std::move(s.payload));
        else
            nf.components.emplace_back(s.level, std::move(s.payload));
    }
    nf.zermelo = merge_zermelo(zparts);
    sort_well_represented(nf.components);
    return nf;
}

SetTerm to_term(const NormalForm& nf) {
    std::vector<SetTerm> parts;
    const bool zermelo_shown = !nf.zermelo.empty() || nf.components.empty();
    if (zermelo_shown) {
        if (nf.zermelo.is_nat_tower()) {
            SetTerm t = SetTerm::nat();
            for (unsigned i = 0; i < nf.zermelo.tower_height(); ++i)
                t = SetTerm::pow(t);
            parts.push_back(t);
        } else {
            parts.push_back(SetTerm::zermelo(nf.zermelo.finite_value()));
        }
    }
    for (const Component& c : nf.components) {
        SetTerm t = c.payload.is_nat_tower()
                        ? SetTerm::nat()
                        : SetTerm::zermelo(c.payload.finite_value());
        for (unsigned i = 0; i < c.level; ++i)
            t = SetTerm::inv_pow(t);
        parts.push_back(t);
    }
    return SetTerm::union_of(std::move(parts));
}

namespace {

bool is_empty_finite(const ZermeloPart& z) {
    return z.is_finite() && z.finite_value().empty();
}

// Normal form of a single term: level + payload, or an error for union forms.
struct SingleView {
    unsigned level;
    ZermeloPart payload;
};

SingleView single_view(const NormalForm& nf, const char* what) {
    if (nf.components.empty())
        return {0, nf.zermelo};
    if (nf.components.size() == 1 && is_empty_finite(nf.zermelo))
        return {nf.components.front().level, nf.components.front().payload};
    throw RelationUndefinedError(std::string(what) +
                                 " is not defined on union forms");
}

bool is_numeral(const HfSet& x) { return x == numeral(unsigned(x.size())); }

// e in P^k(N): for k = 0 membership in N, otherwise e subset of P^(k-1)(N).
bool hf_in_nat_tower(const HfSet& e, unsigned k) {
    if (k == 0)
        return is_numeral(e);
    for (const HfSet& f : e.elements())
        if (!hf_in_nat_tower(f, k - 1))
            return false;
    return true;
}

bool payload_subset(const ZermeloPart& p, const ZermeloPart& q) {
    if (p.is_finite() && q.is_finite())
        return is_subset_hf(p.finite_value(), q.finite_value());
    if (p.is_finite()) {
        for (const HfSet& e : p.finite_value().elements())
            if (!hf_in_nat_tower(e, q.tower_height()))
                return false;
        return true;
    }
    if (q.is_finite())
        return false; // an N-tower is infinite
    return p.tower_height() <= q.tower_height();
}

} // namespace

bool subset_member(const SetTerm& a, const SetTerm& x, unsigned n) {
    const SingleView xv = single_view(normalize(x), "subset-membership");
    if (xv.level > n)
        throw RelationUndefinedError("level mismatch: relation at depth " +
                                     std::to_string(n) +
                                     " is undefined on a level-" +
                                     std::to_string(xv.level) + " set");
    const SingleView av = single_view(normalize(a), "subset-membership");
    if (av.level != 0)
        throw RelationUndefinedError(
            "level mismatch: left operand is non-Zermelo");
    if (av.payload.is_nat_tower() || xv.payload.is_nat_tower())
        throw UnsupportedOperandError(
            "subset-membership needs finite denotations");
    return in_iterated_powerset(av.payload.finite_value(),
                                xv.payload.finite_value(), n - xv.level);
}

bool is_zermelo(const SetTerm& t) { return normalize(t).components.empty(); }

bool ext_subset(const SetTerm& x, const SetTerm& y) {
    const SingleView xv = single_view(normalize(x), "extended subset");
    const SingleView yv = single_view(normalize(y), "extended subset");
    if (xv.level != yv.level)
        throw RelationUndefinedError(
            "extended subset is undefined across levels " +
            std::to_string(xv.level) + " and " + std::to_string(yv.level));
    return payload_subset(xv.payload, yv.payload);
}

bool ext_equal(const SetTerm& x, const SetTerm& y) {
    return normalize(x) == normalize(y);
}

unsigned level_of(const SetTerm& t) {
    NormalForm nf = normalize(t);
    if (nf.components.empty())
        return 0;
    if (nf.components.size() == 1 && is_empty_finite(nf.zermelo))
        return nf.components.front().level;
    throw UndefinedLevelError("union forms have no single level");
}

} // namespace setcalc
