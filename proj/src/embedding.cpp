#include "addspan/embedding.hpp"

#include <algorithm>
#include <limits>

#include "addspan/error.hpp"

namespace addspan {

std::int64_t next_pow2_above(std::int64_t x) {
    if (x < 0) throw PreconditionError("next_pow2_above: negative argument");
    std::int64_t n = 1;
    while (n <= x) {
        if (n > std::numeric_limits<std::int64_t>::max() / 2)
            throw ResourceError("torus modulus overflows 63 bits");
        n *= 2;
    }
    return n;
}

Element TorusEmbedding::map(const Element& x) const {
    check_arity(x, source_spec);
    Element shifted = x;
    for (std::size_t i = 0; i < shifted.dim(); ++i) shifted.coords[i] -= offset[i];
    return canon(shifted, torus_spec);
}

GSet TorusEmbedding::map(const GSet& s) const {
    if (s.spec() != source_spec) throw DimensionError("embedding applied to a set from another group");
    std::vector<Element> out;
    out.reserve(s.size());
    for (const auto& e : s) out.push_back(map(e));
    return GSet(torus_spec, std::move(out));
}

Element TorusEmbedding::unmap(const Element& y) const {
    check_arity(y, torus_spec);
    Element x = y;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (source_spec.is_unbounded(i)) x.coords[i] += offset[i];
    }
    return x;
}

TorusEmbedding embed_to_torus(const GSet& a, std::int64_t headroom) {
    if (a.empty()) throw EmptyInputError("embed_to_torus: empty set");
    if (headroom < 1) throw PreconditionError("embed_to_torus: headroom must be >= 1");

    const auto& spec = a.spec();
    const std::size_t d = spec.dim();
    const auto n = static_cast<std::int64_t>(a.size());

    TorusEmbedding emb{spec, spec, std::vector<std::int64_t>(d, 0), std::vector<std::int64_t>(d, 0),
                       headroom, headroom * (n + 2), GSet(spec)};

    std::vector<std::int64_t> moduli = spec.moduli();
    for (std::size_t i = 0; i < d; ++i) {
        if (!spec.is_unbounded(i)) continue;
        std::int64_t lo = std::numeric_limits<std::int64_t>::max();
        std::int64_t hi = std::numeric_limits<std::int64_t>::min();
        for (const auto& e : a) {
            lo = std::min(lo, e.coords[i]);
            hi = std::max(hi, e.coords[i]);
        }
        const std::int64_t w = std::max<std::int64_t>(hi - lo, 1);
        if (w > std::numeric_limits<std::int64_t>::max() / (2 * emb.sum_budget))
            throw ResourceError("embed_to_torus: coordinate range too wide");
        emb.offset[i] = lo;
        emb.width[i] = w;
        moduli[i] = next_pow2_above(2 * emb.sum_budget * w);
    }
    emb.torus_spec = GroupSpec(std::move(moduli));
    emb.image = emb.map(a);
    return emb;
}

}  // namespace addspan
