#include "addspan/setops.hpp"

#include <unordered_map>
#include <unordered_set>

#include "addspan/error.hpp"

namespace addspan {

GSet sumset(const GSet& a, const GSet& b) {
    require_same_spec(a, b, "sumset");
    std::unordered_set<Element, ElementHash> seen;
    seen.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) seen.insert(add(x, y, a.spec()));
    return GSet(a.spec(), std::vector<Element>(seen.begin(), seen.end()));
}

CountMap convolve_indicators(const GSet& a, const GSet& b) {
    require_same_spec(a, b, "convolve_indicators");
    std::unordered_map<Element, std::int64_t, ElementHash> r;
    r.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) ++r[add(x, y, a.spec())];
    return CountMap(r.begin(), r.end());
}

CountMap convolve(const CountMap& f, const CountMap& g, const GroupSpec& spec) {
    std::unordered_map<Element, std::int64_t, ElementHash> r;
    for (const auto& [x, fx] : f)
        for (const auto& [y, gy] : g) r[add(x, y, spec)] += fx * gy;
    CountMap out;
    for (const auto& [x, v] : r)
        if (v != 0) out.emplace(x, v);
    return out;
}

CountMap indicator(const GSet& a) {
    CountMap out;
    for (const auto& e : a) out.emplace_hint(out.end(), e, 1);
    return out;
}

EnergyCertificate additive_energy(const GSet& a) {
    if (a.empty()) throw EmptyInputError("additive_energy: empty set");
    std::unordered_map<Element, std::int64_t, ElementHash> r;
    r.reserve(a.size() * a.size());
    for (const auto& x : a)
        for (const auto& y : a) ++r[add(x, y, a.spec())];
    EnergyCertificate cert;
    for (const auto& [_, count] : r) cert.energy += count * count;
    cert.size = static_cast<std::int64_t>(a.size());
    cert.c = Rational(cert.energy, cert.size * cert.size * cert.size);
    return cert;
}

Rational doubling(const GSet& a) {
    if (a.empty()) throw EmptyInputError("doubling: empty set");
    return Rational(static_cast<std::int64_t>(sumset(a, a).size()), static_cast<std::int64_t>(a.size()));
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace addspan
