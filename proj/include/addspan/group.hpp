#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace addspan {

/// Modulus value marking an infinite cyclic factor (a copy of Z).
inline constexpr std::int64_t kUnbounded = 0;

/// Ambient group Z_{m_1} x ... x Z_{m_d}, where any factor may be Z.
class GroupSpec {
public:
    /// Each entry is a modulus >= 2 or kUnbounded. Throws DimensionError on
    /// an empty list and PreconditionError on a modulus of 1 or below.
    explicit GroupSpec(std::vector<std::int64_t> moduli);

    static GroupSpec integers(std::size_t dim = 1);
    static GroupSpec cyclic(std::int64_t modulus);

    std::size_t dim() const noexcept { return moduli_.size(); }
    std::int64_t modulus(std::size_t i) const { return moduli_.at(i); }
    const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
    bool is_unbounded(std::size_t i) const { return moduli_.at(i) == kUnbounded; }
    bool fully_finite() const noexcept;

    /// |G| for a fully finite spec. Throws RequiresEmbeddingError otherwise and
    /// ResourceError if the order does not fit in 63 bits.
    std::int64_t order() const;

    /// "Z", "Z^3", "Z_5 x Z_4", "Z x Z_4".
    std::string to_string() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

private:
    std::vector<std::int64_t> moduli_;
};

/// A group element in canonical coordinates: finite coordinates lie in [0, m).
/// Elements carry no spec; the containing GSet or the caller supplies it.
struct Element {
    std::vector<std::int64_t> coords;

    Element() = default;
    explicit Element(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    Element(std::initializer_list<std::int64_t> c) : coords(c) {}

    std::size_t dim() const noexcept { return coords.size(); }
    bool is_zero() const noexcept;

    friend auto operator<=>(const Element&, const Element&) = default;
    friend bool operator==(const Element&, const Element&) = default;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const noexcept;
};

enum class GroupOp { Add, Sub, Neg };

/// Reduce finite coordinates into [0, m); unbounded coordinates pass through.
Element canon(std::span<const std::int64_t> raw, const GroupSpec& spec);
Element canon(const Element& raw, const GroupSpec& spec);

Element zero(const GroupSpec& spec);

/// Componentwise op followed by canon. Neg ignores b.
Element group_arith(const Element& a, const Element& b, GroupOp op, const GroupSpec& spec);

Element add(const Element& a, const Element& b, const GroupSpec& spec);
Element sub(const Element& a, const Element& b, const GroupSpec& spec);
Element neg(const Element& a, const GroupSpec& spec);

/// k·a for an integer k (used for sign-vector evaluation).
Element scale(const Element& a, std::int64_t k, const GroupSpec& spec);

void check_arity(const Element& e, const GroupSpec& spec);

std::string to_string(const Element& e);

}  // namespace addspan
