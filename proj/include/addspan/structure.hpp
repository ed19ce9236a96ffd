#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "addspan/dissociation.hpp"
#include "addspan/fourier.hpp"
#include "addspan/peeling.hpp"
#include "addspan/setops.hpp"

namespace addspan {

/// Thresholds of the energy argument for given c, p and n = |A|.
struct Thm1Thresholds {
    double rhs_lemma_error = 0;  // c^((p-2)/2p) n^((p-1)/p) / 2
    double lower_1A = 0;         // c^((p-2)/2p) n^((p-1)/p)
    double residual_lb = 0;      // c^((p-2)/(2(p-1))) 2^(-p/(p-1)) n
    double floor_bound = 0;      // c^(1/2) n / 4
};

/// Throws PreconditionError unless 0 < c <= 1, p > 2 and n >= 1.
Thm1Thresholds thm1_thresholds(double c, double p, std::int64_t n);

struct EnergyStructureOptions {
    std::optional<Rational> c_override;
    double l_const = 1.0;
    bool adaptive = true;
    SearchMode mode = SearchMode::Greedy;
    /// Replaces ceil(l_const * ln|A| / c) as the first l when set.
    std::optional<std::size_t> initial_l;
    std::int64_t headroom = 1;
    FourierLimits fourier;
    DissociationLimits dissociation;
};

/// Numerical checks of each analytic step, on the torus model.
struct Thm1Chain {
    double norm_a_p = 0;        // ‖1_A^‖_p
    MarginReport lower_bound;   // lower_1A <= ‖1_A^‖_p
    double energy_via_l4 = 0;
    std::optional<LogConvexityReport> l4_step;  // only when p > 4
    HausdorffYoungReport residual_hy;           // chain for A'
};

struct StructureReport {
    GSet input;
    EnergyCertificate cert;
    Rational c_used{0};
    double p = 0;
    std::string log_base = "natural";
    double l_scale = 0;  // ln|A| / c
    std::vector<std::size_t> l_trajectory;
    std::vector<double> lhs_trajectory;
    PeelingTrace trace;
    GSet span_set;
    std::size_t intersect_size = 0;
    std::optional<double> error_lhs;
    double error_rhs = 0;
    Thm1Thresholds thresholds;
    double residual_lb = 0;
    bool certified = false;
    std::string certification_note;
    std::optional<std::string> torus;
    std::optional<Thm1Chain> chain;
    /// p >= 4: the implications below are theorem-guaranteed once certified.
    bool implications_guaranteed = false;
    bool implications_hold = false;
};

StructureReport energy_structure(const GSet& a, const EnergyStructureOptions& opts = {});

/// Diagnostics for f = 1_{A+A} * 1_{-A}.
struct SumsetDiagnostics {
    std::int64_t min_over_a = 0;
    std::int64_t sup = 0;
    std::int64_t mass = 0;        // ℓ¹ norm
    std::int64_t l2_squared = 0;  // ‖f‖_2^2
    std::optional<double> dual_l1;
    double dual_l1_bound = 0;     // sqrt(K) |A|
    std::optional<MarginReport> dual_l1_margin;
};

struct CoverReport {
    GSet input;
    Rational k{0};
    GSet span_set;
    bool covered = false;
    double bound_ratio = 0;  // |L| / (K ln|A|)
    SumsetDiagnostics f_diag;
    std::optional<std::string> torus;
};

CoverReport cover_structure(const GSet& a, const FourierLimits& fourier = {},
                            const DissociationLimits& dissociation = {});

inline constexpr double kChainTolerance = 1e-6;

struct Thm2Chain {
    double p_prime = 0;
    double p = 0;  // conjugate exponent
    Rational k{0};
    MarginReport l1;              // ‖f^‖_1 <= sqrt(K)|A|
    std::int64_t l2_squared = 0;  // ‖f‖_2^2
    std::int64_t l2_bound = 0;    // |A|^2 |A+A| = K|A|^3
    bool l2_holds = false;
    double parseval_residual = 0;
    MarginReport lp_prime;               // ‖f^‖_p' <= sqrt(K)|A|^((p'+1)/2)
    MarginReport lp_prime_interpolated;  // ‖f^‖_p' <= sqrt(K)|A|^(2-1/p')
    double f_l2_on_span = 0;             // ‖f‖_{ℓ²(L)}
    double effective_constant = 0;       // ‖f‖_{ℓ²(L)} / (sqrt(p) ‖f^‖_p')
    std::size_t span_size = 0;
    bool holds = false;  // l1, l2 and lp_prime
};

Thm2Chain thm2_chain_check(const GSet& a, double p_prime, const FourierLimits& fourier = {},
                           const DissociationLimits& dissociation = {});

/// f = 1_{A+A} * 1_{-A} over the spec of A.
CountMap sumset_witness_function(const GSet& a);

}  // namespace addspan
