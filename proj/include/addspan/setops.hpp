#pragma once

#include <cstdint>
#include <map>

#include <boost/rational.hpp>

#include "addspan/gset.hpp"

namespace addspan {

using Rational = boost::rational<std::int64_t>;

/// Representation counts x -> #{(a, b) : a + b = x}; only nonzero entries.
using CountMap = std::map<Element, std::int64_t>;

/// E(A) together with the normalized energy c = E(A) / |A|^3.
struct EnergyCertificate {
    std::int64_t energy = 0;
    std::int64_t size = 0;
    Rational c{0};
};

/// {a + b : a in A, b in B}.
GSet sumset(const GSet& a, const GSet& b);

/// 1_A * 1_B as a sparse map.
CountMap convolve_indicators(const GSet& a, const GSet& b);

/// Same as above but over arbitrary integer weights (used for f = 1_{A+A} * 1_{-A}).
CountMap convolve(const CountMap& f, const CountMap& g, const GroupSpec& spec);

CountMap indicator(const GSet& a);

/// Sum of squared representation counts, O(|A|^2) via hashing.
EnergyCertificate additive_energy(const GSet& a);

/// |A + A| / |A|.
Rational doubling(const GSet& a);

double to_double(const Rational& r);

}  // namespace addspan
