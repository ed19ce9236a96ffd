#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "addspan/gset.hpp"
#include "addspan/setops.hpp"

namespace addspan {

using Complex = std::complex<double>;
using ComplexMap = std::map<Element, Complex>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct FourierLimits {
    std::int64_t max_group = std::int64_t{1} << 20;
    /// Largest factor transformed by the O(m^2) fallback (non power of two).
    std::int64_t max_naive_factor = 4096;
};

/// A function on the dual of a fully finite group. values[t] is the value at
/// the character x -> exp(2 pi i sum_k t_k x_k / m_k), with t laid out
/// row-major (last coordinate fastest), matching canonical element order.
/// The dual carries the Haar probability measure (mass 1/|G| per character).
struct DualFunction {
    GroupSpec spec;
    std::vector<Complex> values;

    DualFunction operator-(const DualFunction& other) const;
    DualFunction operator+(const DualFunction& other) const;
    DualFunction operator*(const DualFunction& other) const;
    DualFunction scaled(Complex k) const;
};

/// Throws RequiresEmbeddingError / ResourceError if `spec` cannot be transformed
/// under `limits`.
void require_transformable(const GroupSpec& spec, const FourierLimits& limits = {});

/// f^(t) = sum_x f(x) conj(gamma_t(x)).
DualFunction dft(const ComplexMap& f, const GroupSpec& spec, const FourierLimits& limits = {});
DualFunction dft(const CountMap& f, const GroupSpec& spec, const FourierLimits& limits = {});
DualFunction dft_indicator(const GSet& a, const FourierLimits& limits = {});

/// Direct O(|G| * |supp f|) evaluation; test oracle and small-group path.
DualFunction dft_naive(const ComplexMap& f, const GroupSpec& spec);

/// ((1/|G|) sum_t |F(t)|^p)^(1/p); p = kInfinity gives the max.
double lp_dual_norm(const DualFunction& f, double p);

/// |‖f^‖_2^2 - ‖f‖_2^2| / max(1, ‖f‖_2^2).
double parseval_residual(const ComplexMap& f, const GroupSpec& spec, const FourierLimits& limits = {});

/// ‖1_A^‖_4^4, which equals E(A).
double energy_via_l4(const GSet& a, const FourierLimits& limits = {});

inline constexpr double kInequalityTolerance = 1e-9;

/// lhs <= rhs up to relative tolerance.
struct MarginReport {
    double lhs = 0;
    double rhs = 0;
    double slack = 0;  // rhs - lhs
    double tolerance = kInequalityTolerance;
    bool holds = false;
};

MarginReport make_margin(double lhs, double rhs, double tolerance = kInequalityTolerance);

/// ‖F‖_p <= ‖F‖_{p0}^(1-theta) ‖F‖_{p1}^theta where 1/p = (1-theta)/p0 + theta/p1.
/// p1 may be kInfinity.
struct LogConvexityReport {
    double p = 0;
    MarginReport margin;
};

LogConvexityReport logconvexity_check(const DualFunction& f, double p0, double p1, double theta);

/// ‖1_A'^‖_p <= ‖1_A'^‖_2^(2/p) ‖1_A'^‖_inf^((p-2)/p) <= |A'|^((p-1)/p).
struct HausdorffYoungReport {
    double lp_norm = 0;
    double interpolated = 0;
    double bound = 0;
    MarginReport holder;  // lp_norm vs interpolated
    MarginReport size;    // interpolated vs bound
    bool holds = false;
};

HausdorffYoungReport hausdorff_young_check(const GSet& a, double p, const FourierLimits& limits = {});

/// Empirical ratio ‖f^‖_p / (sqrt(p) ‖f‖_2) over random f supported on a
/// dissociated L. Even trials draw Rademacher signs, odd trials complex
/// Gaussians (Box-Muller on SplitMix64).
struct RudinStats {
    double max_ratio = 0;
    double mean_ratio = 0;
    double max_rademacher = 0;
    double max_gaussian = 0;
    std::int64_t trials = 0;
};

RudinStats rudin_probe(const GSet& l, double p, std::int64_t trials, std::uint64_t seed,
                       const FourierLimits& limits = {});

}  // namespace addspan
