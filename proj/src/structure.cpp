#include "addspan/structure.hpp"

#include <algorithm>
#include <cmath>

#include "addspan/embedding.hpp"
#include "addspan/error.hpp"

namespace addspan {

namespace {

// The finite group on which Fourier-side quantities are evaluated: the spec
// itself when it is finite, otherwise a torus embedding of A.
struct FourierModel {
    std::optional<TorusEmbedding> embedding;
    GroupSpec spec;

    GSet map(const GSet& s) const { return embedding ? embedding->map(s) : s; }

    CountMap map(const CountMap& f) const {
        if (!embedding) return f;
        CountMap out;
        for (const auto& [x, v] : f) out[embedding->map(x)] += v;
        return out;
    }
};

std::optional<FourierModel> fourier_model(const GSet& a, std::int64_t headroom, const FourierLimits& limits,
                                          std::string& note) {
    try {
        if (a.spec().fully_finite()) {
            require_transformable(a.spec(), limits);
            return FourierModel{std::nullopt, a.spec()};
        }
        TorusEmbedding emb = embed_to_torus(a, headroom);
        require_transformable(emb.torus_spec, limits);
        GroupSpec spec = emb.torus_spec;
        return FourierModel{std::move(emb), std::move(spec)};
    } catch (const ResourceError& e) {
        note = e.what();
        return std::nullopt;
    }
}

void require_pair(const GSet& a, const char* what) {
    if (a.empty()) throw EmptyInputError(std::string(what) + ": empty set");
    if (a.size() < 2) throw PreconditionError(std::string(what) + ": needs |A| >= 2");
}

}  // namespace

Thm1Thresholds thm1_thresholds(double c, double p, std::int64_t n) {
    if (!(c > 0.0 && c <= 1.0)) throw PreconditionError("thm1_thresholds: c must lie in (0, 1]");
    if (!(p > 2.0) || std::isinf(p)) throw PreconditionError("thm1_thresholds: p must be a finite real > 2");
    if (n < 1) throw PreconditionError("thm1_thresholds: n must be positive");
    const auto size = static_cast<double>(n);
    Thm1Thresholds t;
    t.lower_1A = std::pow(c, (p - 2.0) / (2.0 * p)) * std::pow(size, (p - 1.0) / p);
    t.rhs_lemma_error = t.lower_1A / 2.0;
    t.residual_lb = std::pow(c, (p - 2.0) / (2.0 * (p - 1.0))) * std::pow(2.0, -p / (p - 1.0)) * size;
    t.floor_bound = std::sqrt(c) * size / 4.0;
    return t;
}

StructureReport energy_structure(const GSet& a, const EnergyStructureOptions& opts) {
    require_pair(a, "energy_structure");
    if (!(opts.l_const > 0.0)) throw PreconditionError("energy_structure: l constant must be positive");

    StructureReport rep{.input = a, .trace = {a, 1, opts.mode, {}, a}, .span_set = GSet(a.spec())};
    rep.cert = additive_energy(a);
    rep.c_used = rep.cert.c;
    if (opts.c_override) {
        if (*opts.c_override <= Rational(0) || *opts.c_override > rep.cert.c)
            throw PreconditionError("energy_structure: c override must lie in (0, E(A)/|A|^3]");
        rep.c_used = *opts.c_override;
    }
    const double c = to_double(rep.c_used);
    const auto n = static_cast<std::int64_t>(a.size());
    const double log_n = std::log(static_cast<double>(n));
    rep.p = 2.0 + log_n;
    rep.l_scale = log_n / c;
    rep.thresholds = thm1_thresholds(c, rep.p, n);
    rep.error_rhs = rep.thresholds.rhs_lemma_error;
    rep.residual_lb = rep.thresholds.residual_lb;
    rep.implications_guaranteed = rep.p >= 4.0;

    std::size_t l = opts.initial_l.value_or(
        static_cast<std::size_t>(std::max(1.0, std::ceil(opts.l_const * log_n / c))));
    if (l == 0) throw PreconditionError("energy_structure: l must be >= 1");

    const auto model = fourier_model(a, opts.headroom, opts.fourier, rep.certification_note);
    if (model) rep.torus = model->spec.to_string();

    for (;;) {
        rep.trace = bourgain_peel(a, l, opts.mode, opts.dissociation);
        rep.l_trajectory.push_back(l);
        if (!model) break;

        const PeelingTrace on_torus = model->embedding ? embed_trace(rep.trace, *model->embedding) : rep.trace;
        const double lhs = peel_error_norm(on_torus, rep.p, opts.fourier).lhs;
        rep.lhs_trajectory.push_back(lhs);
        rep.error_lhs = lhs;
        if (lhs <= rep.error_rhs) {
            rep.certified = true;
            break;
        }
        // Once l exceeds every dissociated subset nothing is peeled and lhs = 0.
        if (!opts.adaptive || rep.trace.layers.empty()) break;
        l *= 2;
    }
    if (!model && rep.certification_note.empty()) rep.certification_note = "no finite model for Fourier evaluation";
    if (model && !rep.certified) rep.certification_note = "peeling error exceeds the certification threshold";

    const GSet& residual = rep.trace.residual;
    rep.span_set = max_dissociated_greedy(residual, opts.dissociation);
    rep.intersect_size = span_intersect(rep.span_set, a, opts.dissociation).size();

    if (model) {
        Thm1Chain chain;
        const GSet a_torus = model->map(a);
        const DualFunction f = dft_indicator(a_torus, opts.fourier);
        chain.norm_a_p = lp_dual_norm(f, rep.p);
        chain.lower_bound = make_margin(rep.thresholds.lower_1A, chain.norm_a_p);
        chain.energy_via_l4 = std::pow(lp_dual_norm(f, 4.0), 4.0);
        if (rep.p > 4.0) chain.l4_step = logconvexity_check(f, 2.0, rep.p, rep.p / (2.0 * (rep.p - 2.0)));
        chain.residual_hy = hausdorff_young_check(model->map(residual), rep.p, opts.fourier);
        rep.chain = std::move(chain);
    }

    if (rep.certified) {
        const auto residual_size = static_cast<double>(residual.size());
        rep.implications_hold = rep.intersect_size >= residual.size() && residual_size >= rep.residual_lb &&
                                rep.residual_lb >= rep.thresholds.floor_bound;
        if (rep.implications_guaranteed && !rep.implications_hold)
            throw InvariantViolation("certified energy report violates |A ∩ Span(L)| >= |A'| >= residual bound");
    }
    return rep;
}

CountMap sumset_witness_function(const GSet& a) {
    return convolve(indicator(sumset(a, a)), indicator(a.negated()), a.spec());
}

CoverReport cover_structure(const GSet& a, const FourierLimits& fourier, const DissociationLimits& dissociation) {
    require_pair(a, "cover_structure");
    CoverReport rep{.input = a, .span_set = GSet(a.spec())};
    rep.k = doubling(a);
    rep.span_set = max_dissociated_greedy(a, dissociation);

    rep.covered = true;
    for (const auto& x : a) {
        auto sv = span_contains(rep.span_set, x, dissociation);
        if (!sv || sv->evaluate(a.spec()) != x) {
            rep.covered = false;
            break;
        }
    }
    if (!rep.covered) throw InvariantViolation("greedy maximal dissociated subset fails to span A");

    const auto n = static_cast<double>(a.size());
    rep.bound_ratio = static_cast<double>(rep.span_set.size()) / (to_double(rep.k) * std::log(n));

    const CountMap f = sumset_witness_function(a);
    auto& d = rep.f_diag;
    d.min_over_a = std::numeric_limits<std::int64_t>::max();
    for (const auto& x : a) {
        auto it = f.find(x);
        d.min_over_a = std::min(d.min_over_a, it == f.end() ? std::int64_t{0} : it->second);
    }
    for (const auto& [_, v] : f) {
        d.sup = std::max(d.sup, std::abs(v));
        d.mass += std::abs(v);
        d.l2_squared += v * v;
    }
    d.dual_l1_bound = std::sqrt(to_double(rep.k)) * n;

    std::string note;
    if (const auto model = fourier_model(a, 1, fourier, note)) {
        rep.torus = model->spec.to_string();
        d.dual_l1 = lp_dual_norm(dft(model->map(f), model->spec, fourier), 1.0);
        d.dual_l1_margin = make_margin(*d.dual_l1, d.dual_l1_bound, kChainTolerance);
    }
    return rep;
}

Thm2Chain thm2_chain_check(const GSet& a, double p_prime, const FourierLimits& fourier,
                           const DissociationLimits& dissociation) {
    require_pair(a, "thm2_chain_check");
    if (!(p_prime > 1.0 && p_prime <= 2.0)) throw PreconditionError("thm2_chain_check: p' must lie in (1, 2]");

    std::string note;
    const auto model = fourier_model(a, 1, fourier, note);
    if (!model) throw ResourceError("thm2_chain_check: " + note);

    Thm2Chain out;
    out.p_prime = p_prime;
    out.p = p_prime / (p_prime - 1.0);
    out.k = doubling(a);
    const auto n = static_cast<double>(a.size());
    const double sqrt_k = std::sqrt(to_double(out.k));

    const CountMap f = sumset_witness_function(a);
    const DualFunction f_hat = dft(model->map(f), model->spec, fourier);

    out.l1 = make_margin(lp_dual_norm(f_hat, 1.0), sqrt_k * n, kChainTolerance);

    const std::int64_t sumset_size = static_cast<std::int64_t>(sumset(a, a).size());
    for (const auto& [_, v] : f) out.l2_squared += v * v;
    out.l2_bound = static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(a.size()) * sumset_size;
    out.l2_holds = out.l2_squared <= out.l2_bound;
    out.parseval_residual = std::abs(std::pow(lp_dual_norm(f_hat, 2.0), 2.0) - static_cast<double>(out.l2_squared)) /
                            std::max(1.0, static_cast<double>(out.l2_squared));

    const double norm_pp = lp_dual_norm(f_hat, p_prime);
    out.lp_prime = make_margin(norm_pp, sqrt_k * std::pow(n, (p_prime + 1.0) / 2.0), kChainTolerance);
    out.lp_prime_interpolated = make_margin(norm_pp, sqrt_k * std::pow(n, 2.0 - 1.0 / p_prime), kChainTolerance);

    const GSet span = max_dissociated_greedy(a, dissociation);
    out.span_size = span.size();
    double on_span = 0;
    for (const auto& x : span) {
        auto it = f.find(x);
        const double v = it == f.end() ? 0.0 : static_cast<double>(it->second);
        on_span += v * v;
    }
    out.f_l2_on_span = std::sqrt(on_span);
    out.effective_constant = norm_pp > 0 ? out.f_l2_on_span / (std::sqrt(out.p) * norm_pp) : 0.0;
    out.holds = out.l1.holds && out.l2_holds && out.lp_prime.holds;
    return out;
}

}  // namespace addspan
