#pragma once

#include <cstdint>
#include <vector>

#include "addspan/gset.hpp"

namespace addspan {

/// Record of an integer-lattice set placed into a finite torus.
///
/// Every unbounded coordinate i is shifted by -offset[i] (making the source
/// set nonnegative) and read modulo a power of two N_i chosen so that any
/// signed sum of at most `sum_budget` elements of the source set is
/// represented without wraparound. Finite coordinates are copied unchanged.
struct TorusEmbedding {
    GroupSpec source_spec;
    GroupSpec torus_spec;
    std::vector<std::int64_t> offset;  // 0 on finite coordinates
    std::vector<std::int64_t> width;   // W_i after shifting (clamped to >= 1); 0 on finite coordinates
    std::int64_t headroom = 1;
    std::int64_t sum_budget = 0;       // headroom * (|A| + 2)
    GSet image;

    /// Image of any element of the source group. Translation by -offset
    /// leaves |f^| unchanged, so sums and differences of source elements can
    /// be mapped here as long as they stay within the budget.
    Element map(const Element& x) const;
    GSet map(const GSet& s) const;

    /// Inverse of map on elements of the image of the source set.
    Element unmap(const Element& y) const;
};

/// Embed A into a fully finite spec. Throws EmptyInputError for empty A and
/// PreconditionError for headroom < 1. A fully finite A is returned with a
/// trivial (identity) record.
TorusEmbedding embed_to_torus(const GSet& a, std::int64_t headroom = 1);

/// Smallest power of two strictly greater than x (x >= 0).
std::int64_t next_pow2_above(std::int64_t x);

}  // namespace addspan
