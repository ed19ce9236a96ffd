#include "addspan/gset.hpp"

#include <algorithm>
#include <iterator>

#include "addspan/error.hpp"

namespace addspan {

void require_same_spec(const GSet& a, const GSet& b, const char* what) {
    if (a.spec() != b.spec())
        throw DimensionError(std::string(what) + ": sets live in different groups (" + a.spec().to_string() +
                             " vs " + b.spec().to_string() + ")");
}

GSet::GSet(GroupSpec spec, std::vector<Element> raw) : spec_(std::move(spec)) {
    elems_.reserve(raw.size());
    for (auto& e : raw) elems_.push_back(canon(e, spec_));
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

GSet GSet::of_integers(GroupSpec spec, std::span<const std::int64_t> values) {
    if (spec.dim() != 1) throw DimensionError("of_integers needs a one-dimensional group");
    std::vector<Element> raw;
    raw.reserve(values.size());
    for (auto v : values) raw.push_back(Element{v});
    return GSet(std::move(spec), std::move(raw));
}

GSet GSet::of_integers(GroupSpec spec, std::initializer_list<std::int64_t> values) {
    return of_integers(std::move(spec), std::span<const std::int64_t>(values.begin(), values.size()));
}

bool GSet::contains(const Element& e) const { return std::binary_search(elems_.begin(), elems_.end(), e); }

GSet GSet::negated() const {
    std::vector<Element> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(neg(e, spec_));
    return GSet(spec_, std::move(out));
}

GSet GSet::translated(const Element& t) const {
    std::vector<Element> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(add(e, t, spec_));
    return GSet(spec_, std::move(out));
}

GSet GSet::minus(const GSet& other) const {
    require_same_spec(*this, other, "set difference");
    GSet out(spec_);
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out.elems_));
    return out;
}

GSet GSet::united(const GSet& other) const {
    require_same_spec(*this, other, "set union");
    GSet out(spec_);
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                   std::back_inserter(out.elems_));
    return out;
}

bool GSet::is_subset_of(const GSet& other) const {
    require_same_spec(*this, other, "subset test");
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

GSet GSet::prefix(std::size_t n) const {
    GSet out(spec_);
    out.elems_.assign(elems_.begin(), elems_.begin() + static_cast<std::ptrdiff_t>(std::min(n, elems_.size())));
    return out;
}

}  // namespace addspan
