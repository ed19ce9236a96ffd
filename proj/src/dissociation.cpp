#include "addspan/dissociation.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "addspan/error.hpp"

namespace addspan {

namespace {

using Signs = std::vector<std::int8_t>;

std::int64_t reduce(std::int64_t x, std::int64_t m) {
    if (m == kUnbounded) return x;
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::uint64_t pow3(std::size_t n) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= 3;
    return r;
}

// Walks {-1,0,1}^n in lexicographic order (-1 < 0 < +1, position 0 most
// significant) while maintaining the canonical value of the signed sum.
class SignOdometer {
public:
    SignOdometer(std::span<const Element> elems, const GroupSpec& spec)
        : elems_(elems), spec_(spec), digits_(elems.size(), 0), sum_(zero(spec)) {
        for (std::size_t j = 0; j < elems_.size(); ++j) bump(j, -1);
    }

    // false once every vector has been visited
    bool next() {
        for (std::size_t j = digits_.size(); j-- > 0;) {
            if (digits_[j] < 2) {
                ++digits_[j];
                bump(j, 1);
                ++rank_;
                return true;
            }
            digits_[j] = 0;
            bump(j, -2);
        }
        return false;
    }

    const Element& sum() const noexcept { return sum_; }
    std::uint64_t rank() const noexcept { return rank_; }

    bool at_zero_vector() const noexcept {
        return std::all_of(digits_.begin(), digits_.end(), [](std::uint8_t d) { return d == 1; });
    }

    Signs signs() const {
        Signs s(digits_.size());
        for (std::size_t j = 0; j < s.size(); ++j) s[j] = static_cast<std::int8_t>(digits_[j]) - 1;
        return s;
    }

private:
    void bump(std::size_t j, std::int64_t k) {
        for (std::size_t i = 0; i < sum_.coords.size(); ++i)
            sum_.coords[i] = reduce(sum_.coords[i] + k * elems_[j].coords[i], spec_.modulus(i));
    }

    std::span<const Element> elems_;
    const GroupSpec& spec_;
    std::vector<std::uint8_t> digits_;
    Element sum_;
    std::uint64_t rank_ = 0;
};

Signs signs_of_rank(std::uint64_t rank, std::size_t n) {
    Signs s(n);
    for (std::size_t j = n; j-- > 0;) {
        s[j] = static_cast<std::int8_t>(rank % 3) - 1;
        rank /= 3;
    }
    return s;
}

Element evaluate(std::span<const Element> elems, const Signs& signs, const GroupSpec& spec) {
    Element acc = zero(spec);
    for (std::size_t j = 0; j < elems.size(); ++j) {
        if (signs[j] == 0) continue;
        for (std::size_t i = 0; i < acc.coords.size(); ++i)
            acc.coords[i] = reduce(acc.coords[i] + signs[j] * elems[j].coords[i], spec.modulus(i));
    }
    return acc;
}

// Lexicographically least sign vector hitting `target`; optionally nonzero.
std::optional<Signs> brute_least(std::span<const Element> elems, const GroupSpec& spec, const Element& target,
                                 bool require_nonzero) {
    SignOdometer odo(elems, spec);
    do {
        if (odo.sum() == target && !(require_nonzero && odo.at_zero_vector())) return odo.signs();
    } while (odo.next());
    return std::nullopt;
}

// Meet in the middle: the right half (the larger one, ceil(n/2) elements) is
// tabulated by hash of its sums; the left half is walked in lexicographic
// order, so the first verified match is the overall least vector.
std::optional<Signs> mitm_least(std::span<const Element> elems, const GroupSpec& spec, const Element& target,
                                bool require_nonzero) {
    const std::size_t n = elems.size();
    const std::size_t n_left = n / 2;
    const auto left = elems.subspan(0, n_left);
    const auto right = elems.subspan(n_left);
    const ElementHash hasher;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> table;  // (hash of sum, rank)
    table.reserve(pow3(right.size()));
    {
        SignOdometer odo(right, spec);
        do {
            table.emplace_back(hasher(odo.sum()), odo.rank());
        } while (odo.next());
    }
    std::sort(table.begin(), table.end());
    const std::uint64_t right_zero_rank = (pow3(right.size()) - 1) / 2;

    SignOdometer odo(left, spec);
    do {
        const Element need = sub(target, odo.sum(), spec);
        const bool left_zero = odo.at_zero_vector();
        const std::uint64_t h = hasher(need);
        auto it = std::lower_bound(table.begin(), table.end(), std::make_pair(h, std::uint64_t{0}));
        for (; it != table.end() && it->first == h; ++it) {
            if (require_nonzero && left_zero && it->second == right_zero_rank) continue;
            Signs rs = signs_of_rank(it->second, right.size());
            if (evaluate(right, rs, spec) != need) continue;  // hash collision
            Signs out = odo.signs();
            out.insert(out.end(), rs.begin(), rs.end());
            return out;
        }
    } while (odo.next());
    return std::nullopt;
}

// Reachable signed sums of every suffix of a one-dimensional list, as bitsets.
// layers_[j] holds Span(elems[j..]).
class SuffixSpanTable {
public:
    SuffixSpanTable(std::span<const Element> elems, const GroupSpec& spec, std::size_t bits_cap)
        : elems_(elems), modulus_(spec.modulus(0)) {
        if (spec.dim() != 1) throw DimensionError("bitset span table needs a one-dimensional group");
        if (modulus_ == kUnbounded) {
            for (const auto& e : elems_) radius_ += std::abs(e.coords[0]);
            width_ = static_cast<std::size_t>(2 * radius_ + 1);
        } else {
            width_ = static_cast<std::size_t>(modulus_);
        }
        if (width_ > bits_cap / (elems_.size() + 1))
            throw ResourceError("bitset span table exceeds the bit budget of " + std::to_string(bits_cap));

        layers_.assign(elems_.size() + 1, boost::dynamic_bitset<>(width_));
        layers_.back().set(index_of(0));
        for (std::size_t j = elems_.size(); j-- > 0;) {
            const auto& next = layers_[j + 1];
            layers_[j] = next | shift_up(next, elems_[j].coords[0]) | shift_up(next, -elems_[j].coords[0]);
        }
    }

    bool contains(std::int64_t x) const { return in_layer(0, x); }

    std::optional<Signs> least(std::int64_t x, bool require_nonzero) const {
        if (!require_nonzero) {
            if (!in_layer(0, x)) return std::nullopt;
            return reconstruct(0, x, Signs(elems_.size(), 0));
        }
        // Least nonzero vector with sum x == 0: zeros up to the first index i
        // whose element lies in the span of its suffix, then -1 there.
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (in_layer(i + 1, elems_[i].coords[0])) {
                Signs s(elems_.size(), 0);
                s[i] = -1;
                return reconstruct(i + 1, elems_[i].coords[0], std::move(s));
            }
        }
        return std::nullopt;
    }

private:
    Signs reconstruct(std::size_t from, std::int64_t t, Signs s) const {
        for (std::size_t j = from; j < elems_.size(); ++j) {
            for (std::int8_t sign : {-1, 0, 1}) {
                const std::int64_t rest = t - sign * elems_[j].coords[0];
                if (in_layer(j + 1, rest)) {
                    s[j] = sign;
                    t = rest;
                    break;
                }
            }
        }
        return s;
    }

    bool in_layer(std::size_t j, std::int64_t x) const {
        if (modulus_ == kUnbounded) {
            if (x < -radius_ || x > radius_) return false;
        } else {
            x = reduce(x, modulus_);
        }
        return layers_[j].test(index_of(x));
    }

    std::size_t index_of(std::int64_t x) const {
        return static_cast<std::size_t>(modulus_ == kUnbounded ? x + radius_ : reduce(x, modulus_));
    }

    boost::dynamic_bitset<> shift_up(const boost::dynamic_bitset<>& b, std::int64_t by) const {
        if (modulus_ == kUnbounded) {
            return by >= 0 ? b << static_cast<std::size_t>(by) : b >> static_cast<std::size_t>(-by);
        }
        const auto s = static_cast<std::size_t>(reduce(by, modulus_));
        if (s == 0) return b;
        return (b << s) | (b >> (width_ - s));
    }

    std::span<const Element> elems_;
    std::int64_t modulus_;
    std::int64_t radius_ = 0;
    std::size_t width_ = 0;
    std::vector<boost::dynamic_bitset<>> layers_;
};

// Incremental membership oracle for Span(L) as L grows one element at a time.
class SpanTracker {
public:
    // abs_hint bounds sum |x| over every element that will ever be added
    // (only consulted for Z).
    SpanTracker(const GroupSpec& spec, std::int64_t abs_hint, const DissociationLimits& limits)
        : spec_(spec), limits_(limits) {
        if (spec.dim() == 1) {
            const std::int64_t m = spec.modulus(0);
            const std::size_t width =
                m == kUnbounded ? static_cast<std::size_t>(2 * abs_hint + 1) : static_cast<std::size_t>(m);
            if (width <= kBitsCap) {
                mode_ = Mode::Bits;
                radius_ = m == kUnbounded ? abs_hint : 0;
                bits_.resize(width);
                bits_.set(index_of(0));
                return;
            }
        }
        mode_ = Mode::Set;
        set_.insert(zero(spec));
    }

    bool contains(const Element& x) const {
        switch (mode_) {
            case Mode::Bits: {
                const std::int64_t v = x.coords[0];
                if (spec_.is_unbounded(0) && (v < -radius_ || v > radius_)) return false;
                return bits_.test(index_of(v));
            }
            case Mode::Set:
                return set_.contains(x);
            case Mode::Mitm:
                if (members_.size() > limits_.mitm_cap)
                    throw ResourceError("span membership needs more than the MITM cap of " +
                                        std::to_string(limits_.mitm_cap) + " generators");
                return mitm_least(members_, spec_, x, false).has_value();
        }
        return false;
    }

    void add(const Element& x) {
        members_.push_back(x);
        switch (mode_) {
            case Mode::Bits: {
                const std::int64_t m = spec_.modulus(0);
                const std::int64_t v = x.coords[0];
                if (m == kUnbounded) {
                    const auto s = static_cast<std::size_t>(std::abs(v));
                    bits_ = bits_ | (bits_ << s) | (bits_ >> s);
                } else {
                    const auto s = static_cast<std::size_t>(reduce(v, m));
                    if (s != 0) {
                        const std::size_t w = bits_.size();
                        auto up = (bits_ << s) | (bits_ >> (w - s));
                        auto down = (bits_ >> s) | (bits_ << (w - s));
                        bits_ = bits_ | up | down;
                    }
                }
                break;
            }
            case Mode::Set: {
                std::vector<Element> fresh;
                fresh.reserve(2 * set_.size());
                const Element minus_x = neg(x, spec_);
                for (const auto& s : set_) {
                    fresh.push_back(addspan::add(s, x, spec_));
                    fresh.push_back(addspan::add(s, minus_x, spec_));
                }
                set_.insert(fresh.begin(), fresh.end());
                if (set_.size() > kSetCap) {
                    set_.clear();
                    mode_ = Mode::Mitm;
                }
                break;
            }
            case Mode::Mitm:
                break;
        }
    }

private:
    static constexpr std::size_t kBitsCap = std::size_t{1} << 26;
    static constexpr std::size_t kSetCap = std::size_t{1} << 21;

    enum class Mode { Bits, Set, Mitm };

    std::size_t index_of(std::int64_t v) const {
        return static_cast<std::size_t>(spec_.is_unbounded(0) ? v + radius_ : reduce(v, spec_.modulus(0)));
    }

    GroupSpec spec_;
    DissociationLimits limits_;
    Mode mode_ = Mode::Set;
    std::int64_t radius_ = 0;
    boost::dynamic_bitset<> bits_;
    std::unordered_set<Element, ElementHash> set_;
    std::vector<Element> members_;
};

std::int64_t abs_sum_hint(const GSet& a) {
    std::int64_t s = 0;
    if (a.spec().dim() == 1 && a.spec().is_unbounded(0))
        for (const auto& e : a) s += std::abs(e.coords[0]);
    return s;
}

SignVector make_sign_vector(const GSet& l, Signs signs) {
    return SignVector{l.elements(), std::move(signs)};
}

}  // namespace

Element SignVector::evaluate(const GroupSpec& spec) const {
    if (support.size() != signs.size()) throw DimensionError("sign vector and support lengths differ");
    for (const auto& e : support) check_arity(e, spec);
    return addspan::evaluate(support, signs, spec);
}

bool SignVector::is_zero() const noexcept {
    return std::all_of(signs.begin(), signs.end(), [](std::int8_t s) { return s == 0; });
}

DissociationVerdict is_dissociated(const GSet& l, DissociationStrategy strategy, const DissociationLimits& limits) {
    const auto& spec = l.spec();
    const auto& elems = l.elements();

    for (std::size_t j = 0; j < elems.size(); ++j) {
        if (elems[j].is_zero()) {
            Signs s(elems.size(), 0);
            s[j] = 1;
            return {false, DissociationWitness{make_sign_vector(l, std::move(s))}};
        }
    }

    std::optional<Signs> least;
    const Element origin = zero(spec);
    switch (strategy) {
        case DissociationStrategy::Brute:
            if (elems.size() > limits.brute_cap)
                throw ResourceError("brute-force dissociativity check is capped at " +
                                    std::to_string(limits.brute_cap) + " elements");
            least = brute_least(elems, spec, origin, true);
            break;
        case DissociationStrategy::Mitm:
            if (elems.size() > limits.mitm_cap)
                throw ResourceError("meet-in-the-middle dissociativity check is capped at " +
                                    std::to_string(limits.mitm_cap) + " elements");
            least = mitm_least(elems, spec, origin, true);
            break;
        case DissociationStrategy::Auto:
            if (elems.size() <= limits.mitm_cap) {
                least = mitm_least(elems, spec, origin, true);
            } else if (spec.dim() == 1) {
                least = SuffixSpanTable(elems, spec, limits.bitset_bits_cap).least(0, true);
            } else {
                throw ResourceError("dissociativity check is capped at " + std::to_string(limits.mitm_cap) +
                                    " elements outside one-dimensional groups");
            }
            break;
    }

    if (!least) return {true, std::nullopt};
    for (auto& s : *least) s = static_cast<std::int8_t>(-s);
    return {false, DissociationWitness{make_sign_vector(l, std::move(*least))}};
}

GSet max_dissociated_greedy(const GSet& a, const DissociationLimits& limits) {
    SpanTracker span(a.spec(), abs_sum_hint(a), limits);
    std::vector<Element> kept;
    for (const auto& x : a) {
        if (span.contains(x)) continue;
        span.add(x);
        kept.push_back(x);
    }
    return GSet(a.spec(), std::move(kept));
}

std::optional<GSet> find_dissociated_of_size(const GSet& a, std::size_t l, SearchMode mode,
                                             const DissociationLimits& limits) {
    if (l == 0) throw PreconditionError("find_dissociated_of_size: l must be >= 1");
    if (a.size() < l) {
        if (mode == SearchMode::Exact && a.size() > limits.exact_cap)
            throw ResourceError("exact dissociated-subset search is capped at |A| <= " +
                                std::to_string(limits.exact_cap));
        return std::nullopt;
    }

    if (mode == SearchMode::Greedy) {
        GSet greedy = max_dissociated_greedy(a, limits);
        if (greedy.size() < l) return std::nullopt;
        return greedy.prefix(l);
    }

    if (a.size() > limits.exact_cap)
        throw ResourceError("exact dissociated-subset search is capped at |A| <= " + std::to_string(limits.exact_cap));

    const auto& elems = a.elements();
    std::vector<Element> chosen;
    std::function<bool(std::size_t, const SpanTracker&)> dfs = [&](std::size_t start, const SpanTracker& span) {
        for (std::size_t i = start; i < elems.size(); ++i) {
            if (chosen.size() + (elems.size() - i) < l) return false;
            if (span.contains(elems[i])) continue;
            chosen.push_back(elems[i]);
            if (chosen.size() == l) return true;
            SpanTracker child = span;
            child.add(elems[i]);
            if (dfs(i + 1, child)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(0, SpanTracker(a.spec(), abs_sum_hint(a), limits))) return std::nullopt;
    return GSet(a.spec(), std::move(chosen));
}

GSet span_enumerate(const GSet& l, const DissociationLimits& limits) {
    if (l.size() > limits.enumerate_cap)
        throw ResourceError("span_enumerate is capped at " + std::to_string(limits.enumerate_cap) +
                            " generators; use span_contains for membership queries");
    const auto& spec = l.spec();
    std::unordered_set<Element, ElementHash> span{zero(spec)};
    for (const auto& x : l) {
        const Element minus_x = neg(x, spec);
        std::vector<Element> fresh;
        fresh.reserve(2 * span.size());
        for (const auto& s : span) {
            fresh.push_back(add(s, x, spec));
            fresh.push_back(add(s, minus_x, spec));
        }
        span.insert(fresh.begin(), fresh.end());
    }
    return GSet(spec, std::vector<Element>(span.begin(), span.end()));
}

std::optional<SignVector> span_contains(const GSet& l, const Element& x, const DissociationLimits& limits,
                                        SpanRoute route) {
    const auto& spec = l.spec();
    check_arity(x, spec);
    const Element target = canon(x, spec);
    if (target.is_zero()) return make_sign_vector(l, Signs(l.size(), 0));

    if (route == SpanRoute::Auto) {
        if (l.size() <= limits.mitm_cap) {
            route = SpanRoute::Mitm;
        } else if (spec.dim() == 1) {
            route = SpanRoute::BitsetDp;
        } else {
            throw ResourceError("span_contains is capped at " + std::to_string(limits.mitm_cap) +
                                " generators outside one-dimensional groups");
        }
    }

    std::optional<Signs> least;
    if (route == SpanRoute::Mitm) {
        if (l.size() > limits.mitm_cap)
            throw ResourceError("span_contains is capped at " + std::to_string(limits.mitm_cap) + " generators");
        least = mitm_least(l.elements(), spec, target, false);
    } else {
        least = SuffixSpanTable(l.elements(), spec, limits.bitset_bits_cap).least(target.coords[0], false);
    }
    if (!least) return std::nullopt;
    return make_sign_vector(l, std::move(*least));
}

GSet span_intersect(const GSet& l, const GSet& a, const DissociationLimits& limits) {
    require_same_spec(l, a, "span_intersect");
    std::int64_t hint = 0;
    if (l.spec().dim() == 1 && l.spec().is_unbounded(0))
        for (const auto& e : l) hint += std::abs(e.coords[0]);
    SpanTracker span(l.spec(), hint, limits);
    for (const auto& e : l) span.add(e);
    std::vector<Element> hit;
    for (const auto& e : a)
        if (span.contains(e)) hit.push_back(e);
    return GSet(a.spec(), std::move(hit));
}

}  // namespace addspan
