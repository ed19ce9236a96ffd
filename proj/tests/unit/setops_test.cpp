#include <gtest/gtest.h>

#include <random>

#include "addspan/error.hpp"
#include "addspan/setops.hpp"
#include "oracles.hpp"

using namespace addspan;

namespace {

GSet ints(std::initializer_list<std::int64_t> v, GroupSpec spec = GroupSpec::integers()) {
    return GSet::of_integers(std::move(spec), v);
}

// r(x) for an interval counted in a flat array, independent of the hash path.
std::int64_t interval_energy_by_counts(std::int64_t n) {
    std::vector<std::int64_t> r(2 * n, 0);
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) ++r[a + b];
    std::int64_t e = 0;
    for (auto v : r) e += v * v;
    return e;
}

}  // namespace

TEST(Sumset, Examples) {
    EXPECT_EQ(sumset(ints({0, 1}), ints({0, 2})), ints({0, 1, 2, 3}));
    EXPECT_EQ(sumset(ints({0, 1, 2}), ints({0, 1, 2})), ints({0, 1, 2, 3, 4}));
    const auto z5 = GroupSpec::cyclic(5);
    EXPECT_EQ(sumset(ints({0, 1, 3}, z5), ints({0, 1, 3}, z5)), ints({0, 1, 2, 3, 4}, z5));
    EXPECT_THROW(sumset(ints({0}), ints({0}, z5)), DimensionError);
}

TEST(Convolve, Examples) {
    EXPECT_EQ(convolve_indicators(ints({0, 1}), ints({0, 1})),
              (CountMap{{Element{0}, 1}, {Element{1}, 2}, {Element{2}, 1}}));
    EXPECT_EQ(convolve_indicators(ints({0, 1, 2}), ints({0, 1, 2})),
              (CountMap{{Element{0}, 1}, {Element{1}, 2}, {Element{2}, 3}, {Element{3}, 2}, {Element{4}, 1}}));
    const auto b = ints({-4, 7, 9});
    EXPECT_EQ(convolve_indicators(ints({0}), b), indicator(b));
}

TEST(Convolve, MassAndSupport) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = oracle::random_integers(rng, 20, -40, 40);
        auto b = oracle::random_integers(rng, 20, -40, 40);
        const auto r = convolve_indicators(a, b);
        std::int64_t mass = 0;
        std::vector<Element> support;
        for (const auto& [x, v] : r) {
            EXPECT_GT(v, 0);
            mass += v;
            support.push_back(x);
        }
        EXPECT_EQ(mass, static_cast<std::int64_t>(a.size() * b.size()));
        EXPECT_EQ(GSet(a.spec(), support), sumset(a, b));
    }
}

TEST(Energy, Examples) {
    auto single = additive_energy(ints({0}));
    EXPECT_EQ(single.energy, 1);
    EXPECT_EQ(single.c, Rational(1));
    EXPECT_EQ(additive_energy(ints({0, 1, 2})).energy, 19);
    auto sidon = additive_energy(ints({0, 1, 3}));
    EXPECT_EQ(sidon.energy, 15);
    EXPECT_EQ(sidon.c, Rational(15, 27));
    EXPECT_THROW(additive_energy(GSet(GroupSpec::integers())), EmptyInputError);
}

TEST(Energy, MatchesQuadrupleCountOnRandomSets) {
    std::mt19937_64 rng(5);
    const std::vector<GroupSpec> specs = {GroupSpec::integers(), GroupSpec::cyclic(17), GroupSpec({4, 6}),
                                          GroupSpec::integers(2)};
    for (const auto& spec : specs) {
        for (int trial = 0; trial < 15; ++trial) {
            auto a = oracle::random_integers(rng, 14, -30, 30, spec);
            EXPECT_EQ(additive_energy(a).energy, oracle::energy_quadruples(a));
        }
    }
}

TEST(Energy, IntervalClosedForm) {
    for (std::int64_t n = 1; n <= 64; ++n) {
        const std::int64_t closed = n * n + n * (n - 1) * (2 * n - 1) / 3;
        EXPECT_EQ(interval_energy_by_counts(n), closed);
        EXPECT_EQ(additive_energy(oracle::interval(0, n - 1)).energy, closed) << n;
    }
}

TEST(Energy, BoundsAndInvariances) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = oracle::random_integers(rng, 30, -100, 100);
        const auto e = additive_energy(a).energy;
        const auto n = static_cast<std::int64_t>(a.size());
        EXPECT_LE(n * n, e);
        EXPECT_LE(e, n * n * n);
        EXPECT_EQ(additive_energy(a.translated(Element{37})).energy, e);
        EXPECT_EQ(additive_energy(a.negated()).energy, e);
        // Cauchy-Schwarz: E |A+A| >= |A|^4, i.e. c >= 1/K.
        EXPECT_GE(e * static_cast<std::int64_t>(sumset(a, a).size()), n * n * n * n);
        EXPECT_GE(additive_energy(a).c, Rational(1) / doubling(a));
    }
}

TEST(Energy, SubgroupAttainsUpperBound) {
    GSet h(GroupSpec({2, 2, 2}), {Element{0, 0, 0}, Element{1, 0, 0}, Element{0, 1, 0}, Element{1, 1, 0}});
    EXPECT_EQ(additive_energy(h).energy, 64);
}

TEST(Doubling, Examples) {
    EXPECT_EQ(doubling(ints({0})), Rational(1));
    for (std::int64_t n : {2, 5, 16}) EXPECT_EQ(doubling(oracle::interval(0, n - 1)), Rational(2 * n - 1, n));
    EXPECT_EQ(doubling(ints({0, 1, 3}, GroupSpec::cyclic(5))), Rational(5, 3));
    EXPECT_THROW(doubling(GSet(GroupSpec::integers())), EmptyInputError);
}
