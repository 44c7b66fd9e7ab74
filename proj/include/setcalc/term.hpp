#pragma once

#include "setcalc/hf_set.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace setcalc {

/// A Zermelo set in the model: either a concrete hereditarily finite set or
/// a member of the symbolic tower P^k(N) over the naturals.
class ZermeloPart {
public:
    ZermeloPart() : value_(HfSet{}) {}
    static ZermeloPart finite(HfSet x) { return ZermeloPart{std::move(x)}; }
    static ZermeloPart nat_tower(unsigned k) { return ZermeloPart{k}; }

    bool is_finite() const { return std::holds_alternative<HfSet>(value_); }
    bool is_nat_tower() const { return !is_finite(); }

    const HfSet& finite_value() const { return std::get<HfSet>(value_); }
    unsigned tower_height() const { return std::get<unsigned>(value_); }

    bool empty() const { return is_finite() && finite_value().empty(); }

    bool operator==(const ZermeloPart& other) const = default;

private:
    explicit ZermeloPart(HfSet x) : value_(std::move(x)) {}
    explicit ZermeloPart(unsigned k) : value_(k) {}

    std::variant<HfSet, unsigned> value_;
};

enum class TriBool { False, True, Unknown };

/// Poweredness of a Zermelo part. Whether N itself is powered is left open,
/// so nat_tower(0) answers Unknown; normalization treats it as non-powered.
TriBool is_powered_part(const ZermeloPart& z);

/// One residual inverse-powerset component P^-level(payload) of a union form.
/// The payload is a nonempty non-powered Zermelo part (finite, or N itself).
struct Component {
    unsigned level; // >= 1
    ZermeloPart payload;

    Component(unsigned level, ZermeloPart payload);

    bool operator==(const Component& other) const = default;
};

/// Well-represented union form: one Zermelo part plus components sorted by
/// rho descending (level ascending), ties by tau descending. Components are a
/// multiset; exact duplicates are retained.
struct NormalForm {
    ZermeloPart zermelo;               // Finite({}) when absent
    std::vector<Component> components; // sorted well-represented

    bool operator==(const NormalForm& other) const = default;
};

/// Orders and deduplicates nothing: sorts `components` well-represented.
void sort_well_represented(std::vector<Component>& components);

/// Expression over Zermelo literals and the symbolic N tower using the
/// powerset operator, its inverse, and finite unions. Trees are immutable;
/// unions are flattened on construction and never nest directly.
class SetTerm {
public:
    enum class Kind { Zermelo, Nat, Pow, InvPow, Union };

    static SetTerm zermelo(HfSet x);
    static SetTerm nat();
    static SetTerm pow(SetTerm t);
    static SetTerm inv_pow(SetTerm t);
    static SetTerm union_of(std::vector<SetTerm> parts);

    Kind kind() const;
    const HfSet& literal() const;          // Kind::Zermelo
    const SetTerm& child() const;          // Kind::Pow / Kind::InvPow
    const std::vector<SetTerm>& parts() const; // Kind::Union

    /// Structural equality (literal HF sets compare extensionally).
    bool operator==(const SetTerm& other) const;

private:
    struct Node;
    explicit SetTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// One application of P. Peels P^-1, takes the concrete powerset of a literal
/// and wraps anything else; a union operand is unsupported.
SetTerm apply_pow(const SetTerm& t);

/// One application of P^-1. Peels P, strips one power off a powered literal,
/// wraps a non-powered operand; the empty set is outside the domain.
SetTerm apply_inv_pow(const SetTerm& t);

/// Rewrites to the well-represented union normal form: cancels P/P^-1 pairs,
/// strips powered payloads, merges the Zermelo parts, sorts components.
NormalForm normalize(const SetTerm& t);

/// The normal form as a term: zermelo literal unioned with P^-level(payload)
/// components, in well-represented order.
SetTerm to_term(const NormalForm& nf);

/// The subset-membership relation at depth n. For Zermelo x and n = 1 this is
/// the subset relation; for x = P^-1(X) it is membership in X. Defined when a
/// is Zermelo and x's level does not exceed n; both need finite denotations.
bool subset_member(const SetTerm& a, const SetTerm& x, unsigned n);

/// True iff t normalizes to a plain Zermelo set (no residual components).
bool is_zermelo(const SetTerm& t);

/// Extended subset: both Zermelo, or single components of equal level (then
/// decided on the payloads). Mixed levels and union forms are undefined.
bool ext_subset(const SetTerm& x, const SetTerm& y);

/// Extended equality: equality of normal forms.
bool ext_equal(const SetTerm& x, const SetTerm& y);

/// 0 for Zermelo terms, m for a single component P^-m(Y); union forms have
/// no level.
unsigned level_of(const SetTerm& t);

} // namespace setcalc
