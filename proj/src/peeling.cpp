#include "addspan/peeling.hpp"

#include "addspan/error.hpp"

namespace addspan {

PeelingTrace bourgain_peel(const GSet& a, std::size_t l, SearchMode mode, const DissociationLimits& limits) {
    if (l == 0) throw PreconditionError("bourgain_peel: l must be >= 1");
    if (mode == SearchMode::Exact && a.size() > limits.exact_cap)
        throw ResourceError("exact peeling is capped at |A| <= " + std::to_string(limits.exact_cap));

    PeelingTrace trace{a, l, mode, {}, a};
    while (auto layer = find_dissociated_of_size(trace.residual, l, mode, limits)) {
        trace.residual = trace.residual.minus(*layer);
        trace.layers.push_back(std::move(*layer));
    }
    return trace;
}

PeelingTrace embed_trace(const PeelingTrace& trace, const TorusEmbedding& embedding) {
    PeelingTrace out{embedding.map(trace.source), trace.l, trace.mode, {}, embedding.map(trace.residual)};
    out.layers.reserve(trace.layers.size());
    for (const auto& layer : trace.layers) out.layers.push_back(embedding.map(layer));
    return out;
}

PeelErrorNorm peel_error_norm(const PeelingTrace& trace, double p, const FourierLimits& limits) {
    if (!(p >= 2.0)) throw PreconditionError("peel_error_norm needs p >= 2");
    PeelErrorNorm out;
    out.lhs = lp_dual_norm(dft_indicator(trace.source, limits) - dft_indicator(trace.residual, limits), p);
    for (const auto& layer : trace.layers) out.layer_bound += lp_dual_norm(dft_indicator(layer, limits), p);
    out.margin = make_margin(out.lhs, out.layer_bound);
    return out;
}

}  // namespace addspan
