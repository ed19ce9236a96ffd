#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "addspan/gset.hpp"

namespace addspan {

/// sigma in {-1, 0, 1}^L, aligned with `support` (canonical order of L).
struct SignVector {
    std::vector<Element> support;
    std::vector<std::int8_t> signs;

    Element evaluate(const GroupSpec& spec) const;
    bool is_zero() const noexcept;
};

/// A nonzero sign vector summing to the identity.
struct DissociationWitness {
    SignVector sv;
};

enum class DissociationStrategy { Auto, Brute, Mitm };

/// How span membership is decided when more than one route applies.
enum class SpanRoute { Auto, Mitm, BitsetDp };

struct DissociationLimits {
    std::size_t brute_cap = 13;
    std::size_t mitm_cap = 30;
    std::size_t exact_cap = 24;
    std::size_t enumerate_cap = 16;
    /// Total bit budget for the one-dimensional signed-subset-sum tables.
    std::size_t bitset_bits_cap = std::size_t{1} << 28;
};

struct DissociationVerdict {
    bool dissociated = true;
    std::optional<DissociationWitness> witness;
};

/// Witness convention: among all nonzero sign vectors summing to 0 we take
/// the lexicographically least one under -1 < 0 < +1 and report its negation,
/// so the first nonzero sign of a reported witness is always +1. A set
/// containing 0 reports +1 on the zero element alone.
DissociationVerdict is_dissociated(const GSet& l, DissociationStrategy strategy = DissociationStrategy::Auto,
                                   const DissociationLimits& limits = {});

/// Scan A in canonical order keeping each element that preserves
/// dissociativity. The result spans A.
GSet max_dissociated_greedy(const GSet& a, const DissociationLimits& limits = {});

enum class SearchMode { Greedy, Exact };

/// Greedy: prefix of the greedy maximal subset (NONE is inconclusive).
/// Exact: first dissociated l-subset in index-lexicographic order, found by
/// branch and bound; NONE proves nonexistence. Throws PreconditionError on l = 0.
std::optional<GSet> find_dissociated_of_size(const GSet& a, std::size_t l, SearchMode mode,
                                             const DissociationLimits& limits = {});

/// All signed sums of L.
GSet span_enumerate(const GSet& l, const DissociationLimits& limits = {});

/// A sign vector over L evaluating to x, or nullopt. x = 0 always yields the
/// zero vector; any other x yields the lexicographically least witness
/// (-1 < 0 < +1).
std::optional<SignVector> span_contains(const GSet& l, const Element& x, const DissociationLimits& limits = {},
                                        SpanRoute route = SpanRoute::Auto);

/// {a in A : a in Span(L)}.
GSet span_intersect(const GSet& l, const GSet& a, const DissociationLimits& limits = {});

}  // namespace addspan
