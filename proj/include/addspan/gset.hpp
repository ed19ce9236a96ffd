#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "addspan/group.hpp"

namespace addspan {

/// Finite set of canonical elements of one group, kept sorted
/// lexicographically with duplicates removed.
class GSet {
public:
    explicit GSet(GroupSpec spec) : spec_(std::move(spec)) {}

    /// Canonicalizes, sorts and deduplicates.
    GSet(GroupSpec spec, std::vector<Element> raw);

    /// Convenience for one-dimensional groups.
    static GSet of_integers(GroupSpec spec, std::span<const std::int64_t> values);
    static GSet of_integers(GroupSpec spec, std::initializer_list<std::int64_t> values);

    const GroupSpec& spec() const noexcept { return spec_; }
    const std::vector<Element>& elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    const Element& operator[](std::size_t i) const { return elems_[i]; }

    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    bool contains(const Element& e) const;

    /// -A.
    GSet negated() const;
    /// t + A.
    GSet translated(const Element& t) const;

    /// Set algebra within one spec; a different spec is a DimensionError.
    GSet minus(const GSet& other) const;
    GSet united(const GSet& other) const;
    bool is_subset_of(const GSet& other) const;

    /// First n elements in canonical order.
    GSet prefix(std::size_t n) const;

    friend bool operator==(const GSet&, const GSet&) = default;

private:
    GroupSpec spec_;
    std::vector<Element> elems_;
};

void require_same_spec(const GSet& a, const GSet& b, const char* what);

}  // namespace addspan
