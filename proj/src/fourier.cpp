#include "addspan/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "addspan/dissociation.hpp"
#include "addspan/error.hpp"
#include "addspan/random.hpp"

namespace addspan {

namespace {

bool is_pow2(std::int64_t m) { return m > 0 && (m & (m - 1)) == 0; }

std::vector<Complex> twiddles(std::size_t m) {
    std::vector<Complex> w(m);
    for (std::size_t j = 0; j < m; ++j)
        w[j] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
    return w;
}

// In-place iterative radix-2 transform with the e^{-2 pi i jk/m} kernel.
void fft_pow2(std::vector<Complex>& a, const std::vector<Complex>& w) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w[k * step];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

void dft_line_naive(std::vector<Complex>& a, const std::vector<Complex>& w) {
    const std::size_t m = a.size();
    std::vector<Complex> out(m);
    for (std::size_t t = 0; t < m; ++t) {
        Complex acc = 0;
        for (std::size_t x = 0; x < m; ++x) acc += a[x] * w[(t * x) % m];
        out[t] = acc;
    }
    a.swap(out);
}

}  // namespace

void require_transformable(const GroupSpec& spec, const FourierLimits& limits) {
    if (!spec.fully_finite())
        throw RequiresEmbeddingError("Fourier transform needs a fully finite group; embed " + spec.to_string() +
                                     " into a torus first");
    const std::int64_t order = spec.order();
    if (order > limits.max_group)
        throw ResourceError("group order " + std::to_string(order) + " exceeds the DFT cap of " +
                            std::to_string(limits.max_group));
    for (auto m : spec.moduli()) {
        if (!is_pow2(m) && m > limits.max_naive_factor)
            throw ResourceError("factor Z_" + std::to_string(m) + " is not a power of two and exceeds the naive DFT cap of " +
                                std::to_string(limits.max_naive_factor));
    }
}

namespace {

std::size_t flat_index(const Element& x, const GroupSpec& spec) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < spec.dim(); ++i)
        idx = idx * static_cast<std::size_t>(spec.modulus(i)) + static_cast<std::size_t>(x.coords[i]);
    return idx;
}

void transform_in_place(std::vector<Complex>& data, const GroupSpec& spec) {
    const std::size_t d = spec.dim();
    std::size_t stride = data.size();
    for (std::size_t axis = 0; axis < d; ++axis) {
        const auto m = static_cast<std::size_t>(spec.modulus(axis));
        stride /= m;
        const auto w = twiddles(m);
        const bool fast = is_pow2(spec.modulus(axis));
        std::vector<Complex> line(m);
        const std::size_t block = stride * m;
        for (std::size_t base = 0; base < data.size(); base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t k = 0; k < m; ++k) line[k] = data[base + off + k * stride];
                if (fast) {
                    fft_pow2(line, w);
                } else {
                    dft_line_naive(line, w);
                }
                for (std::size_t k = 0; k < m; ++k) data[base + off + k * stride] = line[k];
            }
        }
    }
}

DualFunction zip(const DualFunction& a, const DualFunction& b, auto op) {
    if (a.spec != b.spec || a.values.size() != b.values.size())
        throw DimensionError("dual functions live on different groups");
    DualFunction out{a.spec, std::vector<Complex>(a.values.size())};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = op(a.values[i], b.values[i]);
    return out;
}

}  // namespace

DualFunction DualFunction::operator-(const DualFunction& other) const {
    return zip(*this, other, [](Complex x, Complex y) { return x - y; });
}

DualFunction DualFunction::operator+(const DualFunction& other) const {
    return zip(*this, other, [](Complex x, Complex y) { return x + y; });
}

DualFunction DualFunction::operator*(const DualFunction& other) const {
    return zip(*this, other, [](Complex x, Complex y) { return x * y; });
}

DualFunction DualFunction::scaled(Complex k) const {
    DualFunction out = *this;
    for (auto& v : out.values) v *= k;
    return out;
}

DualFunction dft(const ComplexMap& f, const GroupSpec& spec, const FourierLimits& limits) {
    require_transformable(spec, limits);
    DualFunction out{spec, std::vector<Complex>(static_cast<std::size_t>(spec.order()))};
    for (const auto& [x, v] : f) {
        check_arity(x, spec);
        out.values[flat_index(canon(x, spec), spec)] += v;
    }
    transform_in_place(out.values, spec);
    return out;
}

DualFunction dft(const CountMap& f, const GroupSpec& spec, const FourierLimits& limits) {
    ComplexMap g;
    for (const auto& [x, v] : f) g.emplace_hint(g.end(), x, Complex(static_cast<double>(v), 0.0));
    return dft(g, spec, limits);
}

DualFunction dft_indicator(const GSet& a, const FourierLimits& limits) { return dft(indicator(a), a.spec(), limits); }

DualFunction dft_naive(const ComplexMap& f, const GroupSpec& spec) {
    if (!spec.fully_finite()) throw RequiresEmbeddingError("dft_naive needs a fully finite group");
    const auto n = static_cast<std::size_t>(spec.order());
    DualFunction out{spec, std::vector<Complex>(n)};
    std::vector<std::int64_t> t(spec.dim(), 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        Complex acc = 0;
        for (const auto& [x, v] : f) {
            double phase = 0;
            for (std::size_t i = 0; i < spec.dim(); ++i) {
                const std::int64_t m = spec.modulus(i);
                const std::int64_t xi = ((x.coords[i] % m) + m) % m;
                phase += static_cast<double>((t[i] * xi) % m) / static_cast<double>(m);
            }
            acc += v * std::polar(1.0, -2.0 * std::numbers::pi * phase);
        }
        out.values[idx] = acc;
        for (std::size_t i = spec.dim(); i-- > 0;) {
            if (++t[i] < spec.modulus(i)) break;
            t[i] = 0;
        }
    }
    return out;
}

double lp_dual_norm(const DualFunction& f, double p) {
    if (std::isnan(p) || p < 1.0) throw PreconditionError("L^p norm needs p >= 1");
    if (f.values.empty()) return 0.0;
    double peak = 0;
    for (const auto& v : f.values) peak = std::max(peak, std::abs(v));
    if (std::isinf(p) || peak == 0.0) return peak;
    double acc = 0;
    for (const auto& v : f.values) acc += std::pow(std::abs(v) / peak, p);
    return peak * std::pow(acc / static_cast<double>(f.values.size()), 1.0 / p);
}

double parseval_residual(const ComplexMap& f, const GroupSpec& spec, const FourierLimits& limits) {
    double direct = 0;
    for (const auto& [_, v] : f) direct += std::norm(v);
    const double dual = std::pow(lp_dual_norm(dft(f, spec, limits), 2.0), 2.0);
    return std::abs(dual - direct) / std::max(1.0, direct);
}

double energy_via_l4(const GSet& a, const FourierLimits& limits) {
    return std::pow(lp_dual_norm(dft_indicator(a, limits), 4.0), 4.0);
}

MarginReport make_margin(double lhs, double rhs, double tolerance) {
    MarginReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.tolerance = tolerance;
    r.holds = lhs <= rhs + tolerance * std::max(std::abs(lhs), std::abs(rhs));
    return r;
}

LogConvexityReport logconvexity_check(const DualFunction& f, double p0, double p1, double theta) {
    if (!(p0 >= 1.0) || !(p1 > p0)) throw PreconditionError("log-convexity needs 1 <= p0 < p1");
    if (!(theta > 0.0 && theta < 1.0)) throw PreconditionError("log-convexity needs theta in (0, 1)");
    const double inv_p = (1.0 - theta) / p0 + (std::isinf(p1) ? 0.0 : theta / p1);
    LogConvexityReport r;
    r.p = 1.0 / inv_p;
    const double lhs = lp_dual_norm(f, r.p);
    const double rhs = std::pow(lp_dual_norm(f, p0), 1.0 - theta) * std::pow(lp_dual_norm(f, p1), theta);
    r.margin = make_margin(lhs, rhs);
    return r;
}

HausdorffYoungReport hausdorff_young_check(const GSet& a, double p, const FourierLimits& limits) {
    if (!(p >= 2.0)) throw PreconditionError("Hausdorff-Young chain needs p >= 2");
    const DualFunction f = dft_indicator(a, limits);
    HausdorffYoungReport r;
    r.lp_norm = lp_dual_norm(f, p);
    r.interpolated = std::pow(lp_dual_norm(f, 2.0), 2.0 / p) * std::pow(lp_dual_norm(f, kInfinity), (p - 2.0) / p);
    r.bound = std::pow(static_cast<double>(a.size()), (p - 1.0) / p);
    r.holder = make_margin(r.lp_norm, r.interpolated);
    r.size = make_margin(r.interpolated, r.bound);
    r.holds = r.holder.holds && r.size.holds;
    return r;
}

RudinStats rudin_probe(const GSet& l, double p, std::int64_t trials, std::uint64_t seed, const FourierLimits& limits) {
    if (!(p >= 2.0)) throw PreconditionError("Rudin probe needs p >= 2");
    if (trials < 1) throw PreconditionError("Rudin probe needs at least one trial");
    if (l.empty()) throw EmptyInputError("Rudin probe needs a nonempty set");
    require_transformable(l.spec(), limits);
    if (!is_dissociated(l).dissociated) throw PreconditionError("Rudin probe needs a dissociated set");

    SplitMix64 rng(seed);
    RudinStats stats;
    stats.trials = trials;
    double total = 0;
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        const bool gaussian = trial % 2 == 1;
        ComplexMap f;
        double l2 = 0;
        for (const auto& x : l) {
            Complex v;
            if (gaussian) {
                const double u1 = 1.0 - rng.unit();
                const double u2 = rng.unit();
                v = std::polar(std::sqrt(-2.0 * std::log(u1)), 2.0 * std::numbers::pi * u2);
            } else {
                v = (rng.next() & 1) ? 1.0 : -1.0;
            }
            f.emplace(x, v);
            l2 += std::norm(v);
        }
        const double ratio = lp_dual_norm(dft(f, l.spec(), limits), p) / (std::sqrt(p) * std::sqrt(l2));
        total += ratio;
        stats.max_ratio = std::max(stats.max_ratio, ratio);
        auto& bucket = gaussian ? stats.max_gaussian : stats.max_rademacher;
        bucket = std::max(bucket, ratio);
    }
    stats.mean_ratio = total / static_cast<double>(trials);
    return stats;
}

}  // namespace addspan
