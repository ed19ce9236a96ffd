#pragma once

#include <cstddef>
#include <vector>

#include "addspan/dissociation.hpp"
#include "addspan/embedding.hpp"
#include "addspan/fourier.hpp"

namespace addspan {

/// Disjoint dissociated layers of size l stripped from `source`, and the
/// residual A' left when no further layer could be found.
struct PeelingTrace {
    GSet source;
    std::size_t l = 0;
    SearchMode mode = SearchMode::Greedy;
    std::vector<GSet> layers;
    GSet residual;

    std::size_t s() const noexcept { return layers.size(); }
};

/// Repeatedly take a dissociated l-subset (the greedy prefix in Greedy mode)
/// and remove it. Greedy mode stops once the greedy maximal dissociated subset
/// of the remainder has fewer than l elements; Exact mode stops only when no
/// dissociated l-subset exists at all.
PeelingTrace bourgain_peel(const GSet& a, std::size_t l, SearchMode mode = SearchMode::Greedy,
                           const DissociationLimits& limits = {});

/// Push every set of a trace through a torus embedding of its source.
PeelingTrace embed_trace(const PeelingTrace& trace, const TorusEmbedding& embedding);

struct PeelErrorNorm {
    double lhs = 0;          // ‖1_A^ - 1_A'^‖_p
    double layer_bound = 0;  // sum_i ‖1_{L_i}^‖_p
    MarginReport margin;
};

/// Needs a fully finite spec; run embed_trace first for integer sets.
PeelErrorNorm peel_error_norm(const PeelingTrace& trace, double p, const FourierLimits& limits = {});

}  // namespace addspan
