#pragma once

#include "setcalc/term.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace setcalc {

/// Symbolic cardinal: a finite count, or Beth(k) = |P^k(N)| with
/// Beth(0) = aleph_0 and Beth(1) the continuum. Totally ordered: every
/// finite value sits below every Beth, and the tower is strictly increasing.
class SymCardinal {
public:
    static SymCardinal fin(std::uint64_t n) { return SymCardinal{false, n}; }
    static SymCardinal beth(std::uint64_t k) { return SymCardinal{true, k}; }

    bool is_finite() const { return !beth_; }
    std::uint64_t value() const { return value_; }

    std::strong_ordering operator<=>(const SymCardinal& other) const = default;

    /// "fin:<n>" or "beth:<k>".
    std::string str() const;

private:
    SymCardinal(bool beth, std::uint64_t value) : beth_(beth), value_(value) {}

    bool beth_;
    std::uint64_t value_;
};

/// Value of rho: 0 for a Zermelo part, -m for a level-m component, and
/// -infinity for an empty padding slot.
class LevelRank {
public:
    static LevelRank zero() { return LevelRank{0, false} ; }
    static LevelRank neg(unsigned m) { return LevelRank{-static_cast<int>(m), false}; }
    static LevelRank neg_infinity() { return LevelRank{0, true}; }

    bool is_neg_infinity() const { return neg_inf_; }
    int value() const { return value_; } // meaningful when finite

    std::strong_ordering operator<=>(const LevelRank& other) const {
        if (neg_inf_ != other.neg_inf_)
            return neg_inf_ ? std::strong_ordering::less
                            : std::strong_ordering::greater;
        return value_ <=> other.value_;
    }
    bool operator==(const LevelRank& other) const {
        return (*this <=> other) == 0;
    }

    /// "0", "-m", or "-inf".
    std::string str() const;

private:
    LevelRank(int value, bool neg_inf) : value_(value), neg_inf_(neg_inf) {}

    int value_;
    bool neg_inf_;
};

enum class Verdict { Less, Equal, Greater, Incomparable };

/// "lt", "eq", "gt", "incomparable".
std::string verdict_str(Verdict v);

Verdict flip(Verdict v);

/// Degree of a Zermelo part: the k with |P^(k-1)(N)| < |X| <= |P^k(N)|,
/// and 0 whenever |X| <= |N|.
unsigned degree(const ZermeloPart& z);

/// Classical cardinality of a Zermelo part as a symbolic cardinal.
SymCardinal card_of(const ZermeloPart& z);

/// CH-cardinality. Defined on Zermelo terms and single level-1 components;
/// anything deeper is outside the level-(<=1) fragment.
SymCardinal ch_card(const SetTerm& t);

bool ch_leq(const SetTerm& a, const SetTerm& b);

LevelRank rho(const ZermeloPart& z);
LevelRank rho(const std::optional<Component>& c); // nullopt = padding slot

SymCardinal tau(const ZermeloPart& z);
SymCardinal tau(const std::optional<Component>& c); // nullopt = padding slot

/// Componentwise dominance order on well-represented forms; partial, so the
/// verdict may be Incomparable.
Verdict neg_ch_cmp(const NormalForm& x, const NormalForm& y);

/// Lexicographic order on the (rho, tau) slot sequences, the shorter form
/// padded with empty slots. A total preorder: never Incomparable.
Verdict neg_chs_cmp(const NormalForm& x, const NormalForm& y);

/// For x strictly below y, a form strictly between them: x joined with
/// P^(r-1)(K), where r is the least finite rho across both forms and K the
/// non-powered core of the smallest nonzero-tau payload whose core is
/// nonempty. Throws OrderingError when x is not strictly below y and
/// WitnessUnavailableError when every candidate core is empty.
NormalForm between_witness(const NormalForm& x, const NormalForm& y);

} // namespace setcalc
