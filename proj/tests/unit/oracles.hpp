#pragma once

// Independent brute-force oracles shared by the unit and acceptance suites.
// Nothing here calls into the library's algorithms; only the value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "addspan/gset.hpp"

namespace oracle {

using addspan::Element;
using addspan::GroupSpec;
using addspan::GSet;

inline std::vector<std::int64_t> reduce(std::vector<std::int64_t> v, const GroupSpec& spec) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto m = spec.modulus(i);
        if (m != addspan::kUnbounded) v[i] = ((v[i] % m) + m) % m;
    }
    return v;
}

inline std::vector<std::int64_t> combine(const Element& a, const Element& b, int sign_b, const GroupSpec& spec) {
    std::vector<std::int64_t> v(a.coords.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coords[i] + sign_b * b.coords[i];
    return reduce(v, spec);
}

/// #{(a,b,c,d) in A^4 : a + b = c + d}, O(|A|^4).
inline std::int64_t energy_quadruples(const GSet& a) {
    const auto& e = a.elements();
    std::int64_t count = 0;
    for (const auto& x : e)
        for (const auto& y : e)
            for (const auto& z : e)
                for (const auto& w : e)
                    if (combine(x, y, 1, a.spec()) == combine(z, w, 1, a.spec())) ++count;
    return count;
}

/// Value of sum_j signs[j] * elems[j], reduced.
inline std::vector<std::int64_t> signed_sum(const std::vector<Element>& elems, const std::vector<int>& signs,
                                            const GroupSpec& spec) {
    std::vector<std::int64_t> v(spec.dim(), 0);
    for (std::size_t j = 0; j < elems.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += signs[j] * elems[j].coords[i];
    return reduce(v, spec);
}

/// Calls fn(signs) for every sign vector in lexicographic order (-1 < 0 < 1)
/// until fn returns true. Returns whether it stopped early.
template <class Fn>
bool for_each_sign_vector(std::size_t n, Fn fn) {
    std::vector<int> s(n, -1);
    for (;;) {
        if (fn(s)) return true;
        std::size_t j = n;
        while (j > 0 && s[j - 1] == 1) s[--j] = -1;
        if (j == 0) return false;
        ++s[j - 1];
    }
}

/// Lexicographically least nonzero zero-sum sign vector, if any.
inline std::optional<std::vector<int>> least_relation(const GSet& l) {
    std::optional<std::vector<int>> found;
    const std::vector<std::int64_t> origin(l.spec().dim(), 0);
    for_each_sign_vector(l.size(), [&](const std::vector<int>& s) {
        if (std::all_of(s.begin(), s.end(), [](int v) { return v == 0; })) return false;
        if (signed_sum(l.elements(), s, l.spec()) == origin) {
            found = s;
            return true;
        }
        return false;
    });
    return found;
}

inline bool dissociated(const GSet& l) { return !least_relation(l).has_value(); }

/// Lexicographically least sign vector hitting x.
inline std::optional<std::vector<int>> least_representation(const GSet& l, const Element& x) {
    std::optional<std::vector<int>> found;
    const auto target = reduce(x.coords, l.spec());
    for_each_sign_vector(l.size(), [&](const std::vector<int>& s) {
        if (signed_sum(l.elements(), s, l.spec()) == target) {
            found = s;
            return true;
        }
        return false;
    });
    return found;
}

inline std::set<std::vector<std::int64_t>> span_values(const GSet& l) {
    std::set<std::vector<std::int64_t>> out;
    for_each_sign_vector(l.size(), [&](const std::vector<int>& s) {
        out.insert(signed_sum(l.elements(), s, l.spec()));
        return false;
    });
    return out;
}

/// Whether A has a dissociated subset of size l, by enumerating l-subsets.
inline bool has_dissociated_subset(const GSet& a, std::size_t l) {
    const std::size_t n = a.size();
    if (l > n) return false;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(l), true);
    do {
        std::vector<Element> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) sub.push_back(a[i]);
        if (dissociated(GSet(a.spec(), sub))) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

inline GSet random_integers(std::mt19937_64& rng, std::size_t max_size, std::int64_t lo, std::int64_t hi,
                            const GroupSpec& spec = GroupSpec::integers()) {
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::uniform_int_distribution<std::int64_t> coord(lo, hi);
    const std::size_t n = size(rng);
    std::vector<Element> raw;
    for (std::size_t i = 0; i < n; ++i) {
        Element e;
        for (std::size_t k = 0; k < spec.dim(); ++k) e.coords.push_back(coord(rng));
        raw.push_back(std::move(e));
    }
    return GSet(spec, std::move(raw));
}

inline GSet interval(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v;
    for (std::int64_t x = lo; x <= hi; ++x) v.push_back(x);
    return GSet::of_integers(GroupSpec::integers(), v);
}

}  // namespace oracle
