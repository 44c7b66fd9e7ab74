#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace setcalc {

/// Canonical hereditarily finite set.
///
/// Elements are stored duplicate-free in a fixed total order (rank, then
/// cardinality, then lexicographic on the ordered elements), so structural
/// equality coincides with extensional equality and two equal sets always
/// print the same text. Values are immutable and cheap to copy.
class HfSet {
public:
    /// The empty set.
    HfSet();

    const std::vector<HfSet>& elements() const;
    std::size_t size() const;
    bool empty() const { return size() == 0; }

    /// Von Neumann rank: 0 for {}, else 1 + max rank of elements.
    int rank() const;

    bool contains(const HfSet& a) const;
    bool subset_of(const HfSet& b) const;

    /// Canonical total order; equality iff extensionally equal.
    std::strong_ordering operator<=>(const HfSet& other) const;
    bool operator==(const HfSet& other) const;

    std::size_t hash() const;

    /// Canonical text: "{e1,e2,...}" with elements in canonical order,
    /// no whitespace; the empty set prints as "{}".
    std::string str() const;

private:
    struct Node;
    explicit HfSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;

    friend HfSet make_set(std::vector<HfSet> elems);
};

struct HfSetHash {
    std::size_t operator()(const HfSet& x) const { return x.hash(); }
};

/// Canonical constructor: sorts and deduplicates.
HfSet make_set(std::vector<HfSet> elems);

/// Von Neumann numeral: numeral(0) = {}, numeral(n+1) = numeral(n) ∪ {numeral(n)}.
HfSet numeral(unsigned n);

bool is_member(const HfSet& a, const HfSet& x);
bool is_subset_hf(const HfSet& a, const HfSet& b);

std::size_t cardinality_hf(const HfSet& x);

/// All subsets of x. Throws ResourceError when |x| exceeds the materialization
/// limit (2^|x| elements would be built).
HfSet powerset(const HfSet& x);

/// Membership in the k-fold powerset of `base`, decided without materializing
/// P^k(base): a ∈ P^k(X) iff every element of a is in P^(k-1)(X).
bool in_iterated_powerset(const HfSet& a, const HfSet& base, unsigned k);

HfSet union_hf(const std::vector<HfSet>& xs);

/// Whether x = P(x') for some x'. Uses the closed-form test x == P(∪x).
bool is_powered(const HfSet& x);

/// Maximal power-stripping: input = P^height(core) with core non-powered.
struct PowerDecomposition {
    HfSet core;
    unsigned height = 0;
};

PowerDecomposition strip_power(const HfSet& x);

/// All sets of rank <= rank: sizes 1, 2, 4, 16, 65536 for ranks 0..4.
/// Throws ResourceError when rank exceeds `limit`.
std::vector<HfSet> enumerate_universe(unsigned rank, unsigned limit = 4);

} // namespace setcalc
