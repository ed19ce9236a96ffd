#include "addspan/report.hpp"

namespace addspan {

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

const char* to_string(SearchMode mode) { return mode == SearchMode::Greedy ? "greedy" : "exact"; }

json to_json(const Element& e) { return e.coords; }

json to_json(const GSet& a) {
    json elems = json::array();
    for (const auto& e : a) elems.push_back(to_json(e));
    return {{"group", a.spec().to_string()}, {"size", a.size()}, {"elements", std::move(elems)}};
}

json to_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

json to_json(const SignVector& sv) {
    json support = json::array();
    for (const auto& e : sv.support) support.push_back(to_json(e));
    json signs = json::array();
    for (auto s : sv.signs) signs.push_back(static_cast<int>(s));
    return {{"support", std::move(support)}, {"signs", std::move(signs)}};
}

json to_json(const EnergyCertificate& cert) {
    return {{"energy", cert.energy}, {"size", cert.size}, {"c", to_json(cert.c)}};
}

json to_json(const DissociationVerdict& v) {
    json out = {{"verdict", v.dissociated ? "DISSOCIATED" : "NOT"}};
    out["witness"] = v.witness ? to_json(v.witness->sv) : json(nullptr);
    return out;
}

json to_json(const MarginReport& m) {
    return {{"lhs", m.lhs}, {"rhs", m.rhs}, {"slack", m.slack}, {"tolerance", m.tolerance}, {"holds", m.holds}};
}

json to_json(const LogConvexityReport& r) { return {{"p", r.p}, {"margin", to_json(r.margin)}}; }

json to_json(const HausdorffYoungReport& r) {
    return {{"lp_norm", r.lp_norm},
            {"interpolated", r.interpolated},
            {"bound", r.bound},
            {"holder", to_json(r.holder)},
            {"size", to_json(r.size)},
            {"holds", r.holds}};
}

json to_json(const RudinStats& s) {
    return {{"max_ratio", s.max_ratio},
            {"mean_ratio", s.mean_ratio},
            {"max_rademacher", s.max_rademacher},
            {"max_gaussian", s.max_gaussian},
            {"trials", s.trials}};
}

json to_json(const PeelingTrace& t) {
    json layers = json::array();
    for (const auto& layer : t.layers) layers.push_back(to_json(layer));
    return {{"l", t.l},
            {"mode", to_string(t.mode)},
            {"s", t.s()},
            {"layer_selection", "greedy-prefix"},
            {"layers", std::move(layers)},
            {"residual", to_json(t.residual)}};
}

json to_json(const PeelErrorNorm& e) {
    return {{"lhs", e.lhs}, {"layer_bound", e.layer_bound}, {"margin", to_json(e.margin)}};
}

json to_json(const TorusEmbedding& e) {
    return {{"torus", e.torus_spec.to_string()},
            {"offset", e.offset},
            {"width", e.width},
            {"headroom", e.headroom},
            {"sum_budget", e.sum_budget}};
}

json to_json(const Thm1Thresholds& t) {
    return {{"rhs_lemma_error", t.rhs_lemma_error},
            {"lower_1A", t.lower_1A},
            {"residual_lb", t.residual_lb},
            {"floor_bound", t.floor_bound}};
}

json to_json(const StructureReport& r) {
    json out = {{"energy", to_json(r.cert)},
                {"c_used", to_json(r.c_used)},
                {"p", r.p},
                {"log_base", r.log_base},
                {"l_scale", r.l_scale},
                {"l_trajectory", r.l_trajectory},
                {"lhs_trajectory", r.lhs_trajectory},
                {"final_l", r.trace.l},
                {"trace", to_json(r.trace)},
                {"span_set", to_json(r.span_set)},
                {"span_size", r.span_set.size()},
                {"intersect_size", r.intersect_size},
                {"residual_size", r.trace.residual.size()},
                {"error_lhs", optional_number(r.error_lhs)},
                {"error_rhs", r.error_rhs},
                {"thresholds", to_json(r.thresholds)},
                {"residual_lb", r.residual_lb},
                {"certified", r.certified},
                {"certification_note", r.certification_note},
                {"implications_guaranteed", r.implications_guaranteed},
                {"implications_hold", r.implications_hold},
                {"tolerance", kInequalityTolerance}};
    out["torus"] = r.torus ? json(*r.torus) : json(nullptr);
    if (r.chain) {
        json chain = {{"norm_a_p", r.chain->norm_a_p},
                      {"lower_bound", to_json(r.chain->lower_bound)},
                      {"energy_via_l4", r.chain->energy_via_l4},
                      {"residual_hausdorff_young", to_json(r.chain->residual_hy)}};
        chain["l4_step"] = r.chain->l4_step ? to_json(*r.chain->l4_step) : json(nullptr);
        out["chain"] = std::move(chain);
    } else {
        out["chain"] = nullptr;
    }
    return out;
}

json to_json(const CoverReport& r) {
    const auto& d = r.f_diag;
    json diag = {{"min_over_a", d.min_over_a},
                 {"sup", d.sup},
                 {"mass", d.mass},
                 {"l2_squared", d.l2_squared},
                 {"dual_l1", optional_number(d.dual_l1)},
                 {"dual_l1_bound", d.dual_l1_bound},
                 {"tolerance", kChainTolerance}};
    diag["dual_l1_margin"] = d.dual_l1_margin ? to_json(*d.dual_l1_margin) : json(nullptr);
    json out = {{"K", to_json(r.k)},
                {"span_set", to_json(r.span_set)},
                {"span_size", r.span_set.size()},
                {"covered", r.covered},
                {"bound_ratio", r.bound_ratio},
                {"f_diag", std::move(diag)}};
    out["torus"] = r.torus ? json(*r.torus) : json(nullptr);
    return out;
}

json to_json(const Thm2Chain& c) {
    return {{"p_prime", c.p_prime},
            {"p", c.p},
            {"K", to_json(c.k)},
            {"l1", to_json(c.l1)},
            {"l2_squared", c.l2_squared},
            {"l2_bound", c.l2_bound},
            {"l2_holds", c.l2_holds},
            {"parseval_residual", c.parseval_residual},
            {"lp_prime", to_json(c.lp_prime)},
            {"lp_prime_interpolated", to_json(c.lp_prime_interpolated)},
            {"f_l2_on_span", c.f_l2_on_span},
            {"effective_constant", c.effective_constant},
            {"span_size", c.span_size},
            {"holds", c.holds}};
}

}  // namespace addspan
