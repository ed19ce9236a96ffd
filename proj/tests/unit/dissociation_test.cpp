#include <gtest/gtest.h>

#include <random>

#include "addspan/dissociation.hpp"
#include "addspan/error.hpp"
#include "addspan/io.hpp"
#include "oracles.hpp"

using namespace addspan;

namespace {

GSet ints(std::initializer_list<std::int64_t> v, GroupSpec spec = GroupSpec::integers()) {
    return GSet::of_integers(std::move(spec), v);
}

std::vector<int> as_ints(const SignVector& sv) { return {sv.signs.begin(), sv.signs.end()}; }

// Expected reported witness: +1 on the zero element if present, otherwise the
// negated least relation.
std::vector<int> expected_witness(const GSet& l, std::vector<int> s) {
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i].is_zero()) {
            std::vector<int> unit(l.size(), 0);
            unit[i] = 1;
            return unit;
        }
    for (auto& v : s) v = -v;
    return s;
}

void expect_sound_witness(const GSet& l, const DissociationVerdict& v) {
    ASSERT_FALSE(v.dissociated);
    ASSERT_TRUE(v.witness.has_value());
    const auto& sv = v.witness->sv;
    EXPECT_FALSE(sv.is_zero());
    EXPECT_TRUE(sv.evaluate(l.spec()).is_zero());
    const std::vector<int> s = as_ints(sv);
    EXPECT_EQ(oracle::signed_sum(sv.support, s, l.spec()), std::vector<std::int64_t>(l.spec().dim(), 0));
}

}  // namespace

TEST(IsDissociated, Examples) {
    auto v = is_dissociated(ints({1, 2, 3}));
    expect_sound_witness(ints({1, 2, 3}), v);
    EXPECT_EQ(as_ints(v.witness->sv), (std::vector<int>{1, 1, -1}));

    EXPECT_TRUE(is_dissociated(ints({1, 2, 4, 8})).dissociated);

    for (const auto& spec : {GroupSpec::integers(), GroupSpec::cyclic(7), GroupSpec::integers(2)}) {
        GSet z(spec, {zero(spec)});
        auto vz = is_dissociated(z);
        ASSERT_FALSE(vz.dissociated);
        EXPECT_EQ(as_ints(vz.witness->sv), (std::vector<int>{1}));
    }

    const GroupSpec z2({2, 2, 2});
    GSet torsion(z2, {Element{1, 0, 0}, Element{0, 1, 0}, Element{1, 1, 0}});
    expect_sound_witness(torsion, is_dissociated(torsion));
    GSet single(z2, {Element{1, 0, 0}});
    EXPECT_TRUE(is_dissociated(single).dissociated);  // x = -x, but 2x = 0 needs coefficient 2
}

TEST(IsDissociated, EmptySetIsDissociated) {
    EXPECT_TRUE(is_dissociated(GSet(GroupSpec::integers())).dissociated);
}

TEST(IsDissociated, MitmMatchesBruteAndOracle) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        auto l = oracle::random_integers(rng, 12, -100, 100);
        auto brute = is_dissociated(l, DissociationStrategy::Brute);
        auto mitm = is_dissociated(l, DissociationStrategy::Mitm);
        const auto least = oracle::least_relation(l);
        EXPECT_EQ(brute.dissociated, !least.has_value());
        EXPECT_EQ(mitm.dissociated, !least.has_value());
        if (least) {
            expect_sound_witness(l, brute);
            expect_sound_witness(l, mitm);
            EXPECT_EQ(as_ints(brute.witness->sv), expected_witness(l, *least));
            EXPECT_EQ(as_ints(mitm.witness->sv), expected_witness(l, *least));
        }
    }
}

TEST(IsDissociated, FiniteAndMultiDimensionalGroups) {
    std::mt19937_64 rng(103);
    const std::vector<GroupSpec> specs = {GroupSpec::cyclic(64), GroupSpec({3, 5}), GroupSpec::integers(2)};
    for (const auto& spec : specs) {
        for (int trial = 0; trial < 40; ++trial) {
            auto l = oracle::random_integers(rng, 9, -20, 20, spec);
            auto mitm = is_dissociated(l, DissociationStrategy::Mitm);
            const auto least = oracle::least_relation(l);
            EXPECT_EQ(mitm.dissociated, !least.has_value());
            if (least) EXPECT_EQ(as_ints(mitm.witness->sv), expected_witness(l, *least));
        }
    }
}

TEST(IsDissociated, SubsetsOfDissociatedSets) {
    std::mt19937_64 rng(107);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 60; ++trial) {
        auto l = oracle::random_integers(rng, 10, -500, 500);
        if (!is_dissociated(l).dissociated) continue;
        ++checked;
        std::vector<Element> sub;
        for (const auto& x : l)
            if (rng() & 1) sub.push_back(x);
        EXPECT_TRUE(is_dissociated(GSet(l.spec(), sub)).dissociated);
    }
    EXPECT_GT(checked, 10);
}

TEST(IsDissociated, FullSpanSizeImpliesDissociated) {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 100; ++trial) {
        auto l = oracle::random_integers(rng, 7, -60, 60);
        std::size_t full = 1;
        for (std::size_t i = 0; i < l.size(); ++i) full *= 3;
        if (span_enumerate(l).size() == full) EXPECT_TRUE(is_dissociated(l).dissociated);
    }
}

TEST(IsDissociated, Caps) {
    std::vector<std::int64_t> powers;
    for (int i = 0; i < 14; ++i) powers.push_back(std::int64_t{1} << i);
    auto l = GSet::of_integers(GroupSpec::integers(), powers);
    EXPECT_THROW(is_dissociated(l, DissociationStrategy::Brute), ResourceError);
    EXPECT_TRUE(is_dissociated(l, DissociationStrategy::Mitm).dissociated);

    std::vector<Element> wide;
    for (int i = 0; i < 31; ++i) wide.push_back(Element{i + 1, 0});
    EXPECT_THROW(is_dissociated(GSet(GroupSpec::integers(2), wide), DissociationStrategy::Mitm), ResourceError);
    EXPECT_THROW(is_dissociated(GSet(GroupSpec::integers(2), wide)), ResourceError);
}

TEST(IsDissociated, OneDimensionalFallbackBeyondMitmCap) {
    std::vector<std::int64_t> values;
    for (int i = 0; i < 32; ++i) values.push_back(i + 1);
    auto l = GSet::of_integers(GroupSpec::integers(), values);
    auto v = is_dissociated(l);
    expect_sound_witness(l, v);
    // Reported witnesses lead with +1.
    EXPECT_EQ(as_ints(v.witness->sv)[0], 1);
}

TEST(MaxDissociatedGreedy, Examples) {
    EXPECT_EQ(max_dissociated_greedy(ints({1, 2, 3})), ints({1, 2}));
    EXPECT_TRUE(max_dissociated_greedy(ints({0})).empty());
    EXPECT_EQ(max_dissociated_greedy(oracle::interval(1, 16)), ints({1, 2, 4, 8, 16}));
    EXPECT_TRUE(max_dissociated_greedy(GSet(GroupSpec::integers())).empty());
}

TEST(MaxDissociatedGreedy, MaximalAndSpanning) {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = oracle::random_integers(rng, 14, -40, 40);
        auto l = max_dissociated_greedy(a);
        EXPECT_TRUE(l.is_subset_of(a));
        EXPECT_TRUE(oracle::dissociated(l));
        for (const auto& x : a) {
            if (l.contains(x)) continue;
            EXPECT_FALSE(oracle::dissociated(l.united(GSet(a.spec(), {x}))));
            EXPECT_TRUE(oracle::least_representation(l, x).has_value());
        }
    }
}

TEST(MaxDissociatedGreedy, SpansGeneratedSets) {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 100; ++trial) {
        GSet a(GroupSpec::integers());
        switch (trial % 4) {
            case 0: a = gen_ap(1 + trial % 60, 1 + trial % 7, -(trial % 11)); break;
            case 1: a = gen_box_random(1 + trial % 60, 1000, 1, rng()); break;
            case 2: a = gen_sidon_greedy(1 + trial % 20); break;
            default: a = gen_box_random(1 + trial % 40, 12, 2, rng()); break;
        }
        auto l = max_dissociated_greedy(a);
        for (const auto& x : a) EXPECT_TRUE(span_contains(l, x).has_value());
    }
}

TEST(FindDissociatedOfSize, Examples) {
    EXPECT_EQ(find_dissociated_of_size(oracle::interval(1, 16), 3, SearchMode::Greedy), ints({1, 2, 4}));
    EXPECT_FALSE(find_dissociated_of_size(ints({1, 2, 3}), 3, SearchMode::Exact).has_value());
    for (auto mode : {SearchMode::Greedy, SearchMode::Exact})
        EXPECT_FALSE(find_dissociated_of_size(GSet(GroupSpec::integers()), 2, mode).has_value());
    EXPECT_THROW(find_dissociated_of_size(ints({1}), 0, SearchMode::Greedy), PreconditionError);
    EXPECT_THROW(find_dissociated_of_size(oracle::interval(1, 25), 3, SearchMode::Exact), ResourceError);
}

TEST(FindDissociatedOfSize, ExactMatchesSubsetEnumeration) {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = oracle::random_integers(rng, 10, -12, 12);
        for (std::size_t l = 1; l <= a.size(); ++l) {
            auto found = find_dissociated_of_size(a, l, SearchMode::Exact);
            EXPECT_EQ(found.has_value(), oracle::has_dissociated_subset(a, l));
            if (found) {
                EXPECT_EQ(found->size(), l);
                EXPECT_TRUE(found->is_subset_of(a));
                EXPECT_TRUE(oracle::dissociated(*found));
            }
            auto greedy = find_dissociated_of_size(a, l, SearchMode::Greedy);
            if (greedy) EXPECT_TRUE(found.has_value());
        }
    }
}

TEST(SpanEnumerate, Examples) {
    EXPECT_EQ(span_enumerate(GSet(GroupSpec::integers())), ints({0}));
    EXPECT_EQ(span_enumerate(ints({1, 3})), oracle::interval(-4, 4));
    EXPECT_EQ(span_enumerate(ints({1, 2})), oracle::interval(-3, 3));
    EXPECT_THROW(span_enumerate(oracle::interval(1, 17)), ResourceError);
}

TEST(SpanEnumerate, MatchesOracleAndIsSymmetric) {
    std::mt19937_64 rng(137);
    const std::vector<GroupSpec> specs = {GroupSpec::integers(), GroupSpec::cyclic(50), GroupSpec::integers(2)};
    for (const auto& spec : specs) {
        for (int trial = 0; trial < 30; ++trial) {
            auto l = oracle::random_integers(rng, 7, -30, 30, spec);
            auto span = span_enumerate(l);
            std::vector<Element> expected;
            for (const auto& v : oracle::span_values(l)) expected.push_back(Element(v));
            EXPECT_EQ(span, GSet(spec, expected));
            EXPECT_TRUE(span.contains(zero(spec)));
            EXPECT_EQ(span.negated(), span);
        }
    }
}

TEST(SpanContains, Examples) {
    auto w = span_contains(ints({1, 3}), Element{-2});
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(as_ints(*w), (std::vector<int>{1, -1}));

    auto z = span_contains(ints({5, 9, 11}), Element{0});
    ASSERT_TRUE(z.has_value());
    EXPECT_TRUE(z->is_zero());

    EXPECT_FALSE(span_contains(ints({1, 2, 4}), Element{8}).has_value());
    EXPECT_THROW(span_contains(ints({1}), Element{1, 1}), DimensionError);
}

TEST(SpanContains, LexLeastAgainstOracle) {
    std::mt19937_64 rng(139);
    for (int trial = 0; trial < 150; ++trial) {
        auto l = oracle::random_integers(rng, 8, -20, 20);
        std::uniform_int_distribution<std::int64_t> q(-60, 60);
        const Element x{q(rng)};
        if (x.is_zero()) continue;
        const auto expected = oracle::least_representation(l, x);
        for (auto route : {SpanRoute::Mitm, SpanRoute::BitsetDp}) {
            auto got = span_contains(l, x, {}, route);
            ASSERT_EQ(got.has_value(), expected.has_value());
            if (got) {
                EXPECT_EQ(as_ints(*got), *expected);
                EXPECT_EQ(got->evaluate(l.spec()), x);
            }
            // Symmetry: -x is reachable exactly when x is.
            EXPECT_EQ(span_contains(l, neg(x, l.spec()), {}, route).has_value(), expected.has_value());
        }
    }
}

TEST(SpanContains, DpAndMitmAgreeOnLargerSets) {
    std::mt19937_64 rng(149);
    for (int trial = 0; trial < 20; ++trial) {
        auto l = oracle::random_integers(rng, 24, -2000, 2000);
        std::uniform_int_distribution<std::int64_t> q(-5000, 5000);
        for (int k = 0; k < 5; ++k) {
            const Element x{q(rng)};
            auto mitm = span_contains(l, x, {}, SpanRoute::Mitm);
            auto dp = span_contains(l, x, {}, SpanRoute::BitsetDp);
            ASSERT_EQ(mitm.has_value(), dp.has_value());
            if (mitm) {
                EXPECT_EQ(as_ints(*mitm), as_ints(*dp));
                EXPECT_EQ(mitm->evaluate(l.spec()), x);
            }
        }
    }
}

TEST(SpanIntersect, Examples) {
    EXPECT_EQ(span_intersect(ints({1, 2}), ints({1, 2, 3})), ints({1, 2, 3}));
    EXPECT_TRUE(span_intersect(GSet(GroupSpec::integers()), ints({1, 5})).empty());
    EXPECT_EQ(span_intersect(ints({1, 2, 4}), oracle::interval(1, 16)), oracle::interval(1, 7));
    EXPECT_THROW(span_intersect(ints({1}), ints({1}, GroupSpec::cyclic(3))), DimensionError);
}
