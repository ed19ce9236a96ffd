#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "addspan/embedding.hpp"
#include "addspan/error.hpp"
#include "addspan/io.hpp"
#include "addspan/peeling.hpp"
#include "oracles.hpp"

using namespace addspan;

namespace {

GSet ints(std::initializer_list<std::int64_t> v) { return GSet::of_integers(GroupSpec::integers(), v); }

// Partition, layer sizes, independent dissociativity and the layer count bound.
void expect_trace_invariants(const PeelingTrace& t) {
    std::vector<Element> all(t.residual.begin(), t.residual.end());
    for (const auto& layer : t.layers) {
        EXPECT_EQ(layer.size(), t.l);
        EXPECT_TRUE(oracle::dissociated(layer));
        all.insert(all.end(), layer.begin(), layer.end());
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end()) << "layers overlap";
    EXPECT_EQ(GSet(t.source.spec(), all), t.source);
    EXPECT_EQ(t.source.size(), t.s() * t.l + t.residual.size());
    EXPECT_LE(t.s(), t.source.size() / t.l);
}

}  // namespace

TEST(BourgainPeel, Examples) {
    auto zero = bourgain_peel(ints({0}), 1);
    EXPECT_EQ(zero.s(), 0u);
    EXPECT_EQ(zero.residual, ints({0}));

    auto geo = bourgain_peel(ints({1, 2, 4, 8}), 4);
    ASSERT_EQ(geo.s(), 1u);
    EXPECT_EQ(geo.layers[0], ints({1, 2, 4, 8}));
    EXPECT_TRUE(geo.residual.empty());

    auto interval = bourgain_peel(oracle::interval(1, 16), 5);
    ASSERT_GE(interval.s(), 1u);
    EXPECT_EQ(interval.layers[0], ints({1, 2, 4, 8, 16}));
    expect_trace_invariants(interval);
    EXPECT_LT(max_dissociated_greedy(interval.residual).size(), 5u);

    EXPECT_THROW(bourgain_peel(ints({1}), 0), PreconditionError);
    EXPECT_THROW(bourgain_peel(oracle::interval(1, 25), 2, SearchMode::Exact), ResourceError);
}

TEST(BourgainPeel, InvariantsOnRandomSets) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = oracle::random_integers(rng, 40, -60, 60);
        for (std::size_t l : {1u, 2u, 3u, 5u}) {
            auto t = bourgain_peel(a, l);
            expect_trace_invariants(t);
            EXPECT_LT(max_dissociated_greedy(t.residual).size(), l);
        }
    }
}

TEST(BourgainPeel, ExactResidualHasNoDissociatedSubsetOfSizeL) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = oracle::random_integers(rng, 20, -15, 15);
        for (std::size_t l : {2u, 3u}) {
            auto t = bourgain_peel(a, l, SearchMode::Exact);
            expect_trace_invariants(t);
            EXPECT_FALSE(oracle::has_dissociated_subset(t.residual, l));
        }
    }
}

TEST(PeelErrorNorm, Examples) {
    const auto z64 = GroupSpec::cyclic(64);
    auto empty = bourgain_peel(GSet::of_integers(z64, {0}), 1);
    auto e = peel_error_norm(empty, 4);
    EXPECT_EQ(e.lhs, 0);
    EXPECT_EQ(e.layer_bound, 0);
    EXPECT_TRUE(e.margin.holds);

    auto single = bourgain_peel(GSet::of_integers(z64, {1, 2, 4, 8}), 4);
    ASSERT_EQ(single.s(), 1u);
    auto one = peel_error_norm(single, 4);
    EXPECT_NEAR(one.lhs, one.layer_bound, 1e-12 * one.layer_bound);

    auto a = oracle::interval(1, 16);
    auto emb = embed_to_torus(a, 1);
    EXPECT_EQ(emb.torus_spec, GroupSpec::cyclic(1024));
    auto err = peel_error_norm(embed_trace(bourgain_peel(a, 5), emb), 4);
    EXPECT_GT(err.lhs, 0);
    EXPECT_TRUE(err.margin.holds);
    EXPECT_LE(err.lhs, err.layer_bound * (1 + 1e-9));

    EXPECT_THROW(peel_error_norm(bourgain_peel(a, 5), 4), RequiresEmbeddingError);
    EXPECT_THROW(peel_error_norm(empty, 1.5), PreconditionError);
}

TEST(PeelErrorNorm, TriangleInequalityOnGeneratedSets) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = gen_box_random(10 + trial * 2, 200, 1, rng());
        auto emb = embed_to_torus(a, 1);
        for (std::size_t l : {2u, 3u, 5u}) {
            // The shift into the torus does not preserve dissociativity, so
            // the invariants are checked before embedding.
            auto raw = bourgain_peel(a, l);
            expect_trace_invariants(raw);
            auto t = embed_trace(raw, emb);
            for (double p : {4.0, 2 + std::log(static_cast<double>(a.size())), kInfinity})
                EXPECT_TRUE(peel_error_norm(t, p).margin.holds);
        }
    }
}
