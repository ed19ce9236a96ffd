#include "addspan/group.hpp"

#include <functional>
#include <limits>

#include "addspan/error.hpp"

namespace addspan {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t m) {
    if (m == kUnbounded) return x;
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw DimensionError("group spec needs at least one factor");
    for (auto m : moduli_) {
        if (m != kUnbounded && m < 2)
            throw PreconditionError("finite modulus must be >= 2, got " + std::to_string(m));
    }
}

GroupSpec GroupSpec::integers(std::size_t dim) {
    return GroupSpec(std::vector<std::int64_t>(dim, kUnbounded));
}

GroupSpec GroupSpec::cyclic(std::int64_t modulus) { return GroupSpec({modulus}); }

bool GroupSpec::fully_finite() const noexcept {
    for (auto m : moduli_)
        if (m == kUnbounded) return false;
    return true;
}

std::int64_t GroupSpec::order() const {
    if (!fully_finite()) throw RequiresEmbeddingError("group " + to_string() + " is infinite");
    std::int64_t n = 1;
    for (auto m : moduli_) {
        if (n > std::numeric_limits<std::int64_t>::max() / m)
            throw ResourceError("order of " + to_string() + " overflows 63 bits");
        n *= m;
    }
    return n;
}

std::string GroupSpec::to_string() const {
    bool all_unbounded = true;
    for (auto m : moduli_) all_unbounded = all_unbounded && m == kUnbounded;
    if (all_unbounded) return dim() == 1 ? "Z" : "Z^" + std::to_string(dim());
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) out += " x ";
        out += moduli_[i] == kUnbounded ? std::string("Z") : "Z_" + std::to_string(moduli_[i]);
    }
    return out;
}

bool Element::is_zero() const noexcept {
    for (auto c : coords)
        if (c != 0) return false;
    return true;
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
    // splitmix-style mixing per coordinate
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ e.coords.size();
    for (auto c : e.coords) {
        std::uint64_t z = h + static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        h = z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
}

void check_arity(const Element& e, const GroupSpec& spec) {
    if (e.dim() != spec.dim())
        throw DimensionError("element has " + std::to_string(e.dim()) + " coordinates, group " +
                             spec.to_string() + " has " + std::to_string(spec.dim()));
}

Element canon(std::span<const std::int64_t> raw, const GroupSpec& spec) {
    if (raw.size() != spec.dim())
        throw DimensionError("raw vector has " + std::to_string(raw.size()) + " coordinates, group " +
                             spec.to_string() + " has " + std::to_string(spec.dim()));
    Element out;
    out.coords.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out.coords[i] = reduce(raw[i], spec.modulus(i));
    return out;
}

Element canon(const Element& raw, const GroupSpec& spec) { return canon(std::span(raw.coords), spec); }

Element zero(const GroupSpec& spec) { return Element(std::vector<std::int64_t>(spec.dim(), 0)); }

Element group_arith(const Element& a, const Element& b, GroupOp op, const GroupSpec& spec) {
    check_arity(a, spec);
    if (op != GroupOp::Neg) check_arity(b, spec);
    Element out;
    out.coords.resize(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        std::int64_t v = 0;
        switch (op) {
            case GroupOp::Add: v = a.coords[i] + b.coords[i]; break;
            case GroupOp::Sub: v = a.coords[i] - b.coords[i]; break;
            case GroupOp::Neg: v = -a.coords[i]; break;
        }
        out.coords[i] = reduce(v, spec.modulus(i));
    }
    return out;
}

Element add(const Element& a, const Element& b, const GroupSpec& spec) {
    return group_arith(a, b, GroupOp::Add, spec);
}

Element sub(const Element& a, const Element& b, const GroupSpec& spec) {
    return group_arith(a, b, GroupOp::Sub, spec);
}

Element neg(const Element& a, const GroupSpec& spec) { return group_arith(a, a, GroupOp::Neg, spec); }

Element scale(const Element& a, std::int64_t k, const GroupSpec& spec) {
    check_arity(a, spec);
    Element out;
    out.coords.resize(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i) out.coords[i] = reduce(k * a.coords[i], spec.modulus(i));
    return out;
}

std::string to_string(const Element& e) {
    std::string out;
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e.coords[i]);
    }
    return out;
}

}  // namespace addspan
