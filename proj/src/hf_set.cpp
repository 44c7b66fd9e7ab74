#include "setcalc/hf_set.hpp"

#include "setcalc/errors.hpp"

#include <algorithm>
#include <utility>

namespace setcalc {

namespace {

// Widest set we are willing to take a powerset of: 2^16 elements.
constexpr std::size_t kMaxPowersetWidth = 16;

std::size_t mix_hash(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

} // namespace

struct HfSet::Node {
    std::vector<HfSet> elems; // sorted canonically, duplicate-free
    int rank = 0;
    std::size_t hash = 0;
};

HfSet::HfSet() {
    static const std::shared_ptr<const Node> empty = std::make_shared<Node>();
    node_ = empty;
}

const std::vector<HfSet>& HfSet::elements() const { return node_->elems; }

std::size_t HfSet::size() const { return node_->elems.size(); }

int HfSet::rank() const { return node_->rank; }

std::size_t HfSet::hash() const { return node_->hash; }

std::strong_ordering HfSet::operator<=>(const HfSet& other) const {
    if (node_ == other.node_)
        return std::strong_ordering::equal;
    if (auto c = node_->rank <=> other.node_->rank; c != 0)
        return c;
    if (auto c = size() <=> other.size(); c != 0)
        return c;
    for (std::size_t i = 0; i < size(); ++i) {
        if (auto c = node_->elems[i] <=> other.node_->elems[i]; c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

bool HfSet::operator==(const HfSet& other) const {
    if (node_ == other.node_)
        return true;
    if (node_->rank != other.node_->rank || size() != other.size() ||
        node_->hash != other.node_->hash)
        return false;
    return node_->elems == other.node_->elems;
}

bool HfSet::contains(const HfSet& a) const {
    return std::binary_search(node_->elems.begin(), node_->elems.end(), a);
}

bool HfSet::subset_of(const HfSet& b) const {
    if (size() > b.size())
        return false;
    for (const HfSet& e : node_->elems)
        if (!b.contains(e))
            return false;
    return true;
}

std::string HfSet::str() const {
    std::string out = "{";
    bool first = true;
    for (const HfSet& e : node_->elems) {
        if (!first)
            out += ',';
        first = false;
        out += e.str();
    }
    out += '}';
    return out;
}

HfSet make_set(std::vector<HfSet> elems) {
    if (elems.empty())
        return HfSet{};
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    auto node = std::make_shared<HfSet::Node>();
    int rank = 0;
    std::size_t h = 0x517cc1b727220a95ULL;
    for (const HfSet& e : elems) {
        rank = std::max(rank, e.rank() + 1);
        h = mix_hash(h, e.hash());
    }
    node->elems = std::move(elems);
    node->rank = rank;
    node->hash = mix_hash(h, node->elems.size());
    return HfSet{std::move(node)};
}

HfSet numeral(unsigned n) {
    HfSet cur; // 0 = {}
    std::vector<HfSet> elems;
    for (unsigned i = 0; i < n; ++i) {
        elems.push_back(cur);
        cur = make_set(elems);
    }
    return cur;
}

bool is_member(const HfSet& a, const HfSet& x) { return x.contains(a); }

bool is_subset_hf(const HfSet& a, const HfSet& b) { return a.subset_of(b); }

std::size_t cardinality_hf(const HfSet& x) { return x.size(); }

HfSet powerset(const HfSet& x) {
    const auto& elems = x.elements();
    if (elems.size() > kMaxPowersetWidth)
        throw ResourceError("powerset of a set with " +
                            std::to_string(elems.size()) +
                            " elements exceeds the materialization limit");
    std::vector<HfSet> subsets;
    subsets.reserve(std::size_t{1} << elems.size());
    for (std::uint32_t mask = 0; mask < (1u << elems.size()); ++mask) {
        std::vector<HfSet> picked;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (mask & (1u << i))
                picked.push_back(elems[i]);
        subsets.push_back(make_set(std::move(picked)));
    }
    return make_set(std::move(subsets));
}

bool in_iterated_powerset(const HfSet& a, const HfSet& base, unsigned k) {
    if (k == 0)
        return is_member(a, base);
    for (const HfSet& e : a.elements())
        if (!in_iterated_powerset(e, base, k - 1))
            return false;
    return true;
}

HfSet union_hf(const std::vector<HfSet>& xs) {
    std::vector<HfSet> elems;
    for (const HfSet& x : xs)
        elems.insert(elems.end(), x.elements().begin(), x.elements().end());
    return make_set(std::move(elems));
}

bool is_powered(const HfSet& x) {
    if (x.empty())
        return false; // every powerset contains {} and is nonempty
    const HfSet u = union_hf(x.elements());
    if (u.size() > kMaxPowersetWidth)
        return false; // |x| <= 2^16 < 2^|u|, cannot be P(u)
    if ((std::size_t{1} << u.size()) != x.size())
        return false;
    return powerset(u) == x;
}

PowerDecomposition strip_power(const HfSet& x) {
    PowerDecomposition d{x, 0};
    while (is_powered(d.core)) {
        d.core = union_hf(d.core.elements());
        ++d.height;
    }
    return d;
}

std::vector<HfSet> enumerate_universe(unsigned rank, unsigned limit) {
    if (rank > limit)
        throw ResourceError("universe rank " + std::to_string(rank) +
                            " exceeds limit " + std::to_string(limit));
    std::vector<HfSet> universe{HfSet{}};
    for (unsigned r = 1; r <= rank; ++r) {
        if (universe.size() > kMaxPowersetWidth)
            throw ResourceError("universe of rank " + std::to_string(r) +
                                " is too large to enumerate");
        std::vector<HfSet> next;
        next.reserve(std::size_t{1} << universe.size());
        for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask) {
            std::vector<HfSet> picked;
            for (std::size_t i = 0; i < universe.size(); ++i)
                if (mask & (1u << i))
                    picked.push_back(universe[i]);
            next.push_back(make_set(std::move(picked)));
        }
        std::sort(next.begin(), next.end());
        universe = std::move(next);
    }
    return universe;
}

} // namespace setcalc
