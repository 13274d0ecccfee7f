#include <doctest.h>

#include <vector>

#include "fixlab/chain_metric.hpp"
#include "fixlab/theorem_lab.hpp"
#include "test_util.hpp"

using namespace fixlab;

TEST_CASE("comparability graph") {
    SUBCASE("discrete order has no edges") {
        const auto g = comparability_graph(test::line_space({0.0, 1.0, 2.0}, {}));
        CHECK(g.edges.empty());
    }
    SUBCASE("total order gives the complete graph") {
        const auto g = comparability_graph(test::line_space({0.0, 1.0, 2.0}, {{0, 1}, {1, 2}}));
        CHECK(g.edges.size() == 3);
    }
    SUBCASE("vee order carries the metric weights") {
        const auto g = comparability_graph(test::vee_space());
        REQUIRE(g.edges.size() == 2);
        CHECK(g.edges[0].a == 0);
        CHECK(g.edges[0].b == 1);
        CHECK(g.edges[0].weight == 5.0);
        CHECK(g.edges[1].a == 1);
        CHECK(g.edges[1].b == 2);
        CHECK(g.edges[1].weight == 4.0);
    }
}

TEST_CASE("chain components report (b03)") {
    CHECK(chain_components(test::line_space({0.0, 1.0, 2.0}, {{0, 1}, {1, 2}})).chain_connected());
    const auto two = chain_components(test::line_space({0.0, 1.0, 10.0, 11.0}, {{0, 1}, {2, 3}}));
    CHECK(two.count == 2);
    CHECK(!two.chain_connected());
    CHECK(two.component[0] == two.component[1]);
    CHECK(two.component[2] == two.component[3]);
    CHECK(two.component[0] != two.component[2]);
}

TEST_CASE("bounded posets are chain-connected through the bounds") {
    GenConfig config;
    config.order_model = OrderModel::lattice;
    for (std::size_t n = 2; n <= 7; ++n) {
        config.n = n;
        const Instance inst = generate_instance(config, 400 + n);
        CHECK(chain_components(inst.space).chain_connected());
    }
}

TEST_CASE("chain metric on the vee: strict subordination") {
    const OrderedMetricSpace s = test::vee_space();
    const ChainMetric e = chain_metric(s);
    CHECK(e(0, 2).value() == 9.0);  // 5 + 4 through b, while d(a,c) = 1
    CHECK(s.d(0, 2) == 1.0);
    CHECK(e(0, 1).value() == 5.0);  // comparable pairs collapse to d
    CHECK(e(1, 2).value() == 4.0);
    CHECK(e(2, 0).value() == 9.0);
    CHECK(brute_force_chain_metric(s)(0, 2).value() == 9.0);  // the oracle agrees
}

TEST_CASE("chain metric is +inf exactly across components") {
    const OrderedMetricSpace s = test::line_space({0.0, 1.0, 10.0, 11.0}, {{0, 1}, {2, 3}});
    const ChainMetric e = chain_metric(s);
    CHECK(!e.all_finite());
    CHECK(e(0, 2).is_infinite());
    CHECK(e(1, 3).is_infinite());
    CHECK(e(0, 1).value() == 1.0);
    CHECK(e(2, 3).value() == 1.0);
    CHECK(ExtDist::infinity() + ExtDist::of(3.0) == ExtDist::infinity());  // saturating
}

TEST_CASE("degenerate chain metrics") {
    const ChainMetric single = chain_metric(test::line_space({0.0}, {}));
    CHECK(single.size() == 1);
    CHECK(single(0, 0).value() == 0.0);

    const ChainMetric isolated = chain_metric(test::line_space({0.0, 1.0}, {}));
    CHECK(isolated(0, 1).is_infinite());
    CHECK(isolated(0, 0).value() == 0.0);
}

TEST_CASE("brute force degenerate cases") {
    const ChainMetric single = brute_force_chain_metric(test::line_space({0.0}, {}));
    CHECK(single.size() == 1);
    CHECK(single(0, 0).value() == 0.0);

    const ChainMetric no_edges = brute_force_chain_metric(test::line_space({0.0, 1.0}, {}));
    CHECK(no_edges(0, 1).is_infinite());  // no chains at all
    CHECK(no_edges(1, 1).value() == 0.0);
}

TEST_CASE("brute force rejects oversized spaces") {
    GenConfig config;
    config.n = 11;
    config.order_model = OrderModel::total;
    const Instance inst = generate_instance(config, 1);
    try {
        brute_force_chain_metric(inst.space);
        FAIL("expected SpaceTooLarge");
    } catch (const Error& e) {
        CHECK(e.code == errc::space_too_large);
        CHECK(e.index[0] == 11);
        CHECK(e.index[1] == kBruteForceCap);
    }
}

namespace {

GenConfig mixed_config(std::size_t trial) {
    GenConfig config;
    config.n = 2 + trial % 6;  // 2..7
    switch (trial % 5) {
        case 0: config.order_model = OrderModel::total; break;
        case 1:
            config.order_model = OrderModel::random_dag;
            config.dag_edge_prob = 0.35;
            break;
        case 2: config.order_model = OrderModel::lattice; break;
        case 3: config.order_model = OrderModel::antichain; break;
        case 4:
            config.order_model = OrderModel::random_dag;
            config.dag_edge_prob = 0.15;
            break;
    }
    switch (trial % 3) {
        case 0: config.metric_model = MetricModel::line; break;
        case 1:
            config.metric_model = MetricModel::embedding;
            config.embed_dim = 2;
            break;
        case 2: config.metric_model = MetricModel::random_repaired; break;
    }
    config.map_model = MapModel::random_map;
    return config;
}

}  // namespace

TEST_CASE("oracle equivalence, bit for bit, on mixed instances") {
    for (std::size_t trial = 0; trial < 80; ++trial) {
        const Instance inst = generate_instance(mixed_config(trial), trial);
        const ChainMetric fast = chain_metric(inst.space);
        const ChainMetric slow = brute_force_chain_metric(inst.space);
        const std::size_t n = inst.size();
        for (PointId i = 0; i < n; ++i) {
            for (PointId j = 0; j < n; ++j) {
                CHECK(fast(i, j).is_infinite() == slow(i, j).is_infinite());
                if (!fast(i, j).is_infinite()) CHECK(fast(i, j).value() == slow(i, j).value());
            }
        }
    }
}

TEST_CASE("oracle equivalence at the enumeration cap (n = 9)") {
    GenConfig config;
    config.n = 9;
    for (std::size_t trial = 0; trial < 4; ++trial) {
        config.order_model = trial % 2 ? OrderModel::total : OrderModel::random_dag;
        config.metric_model = trial < 2 ? MetricModel::line : MetricModel::random_repaired;
        const Instance inst = generate_instance(config, 4000 + trial);
        const ChainMetric fast = chain_metric(inst.space);
        const ChainMetric slow = brute_force_chain_metric(inst.space, 9);
        for (PointId i = 0; i < 9; ++i)
            for (PointId j = 0; j < 9; ++j) {
                CHECK(fast(i, j).is_infinite() == slow(i, j).is_infinite());
                if (!fast(i, j).is_infinite()) CHECK(fast(i, j).value() == slow(i, j).value());
            }
    }
}

TEST_CASE("oracle equivalence survives pervasive ties") {
    // decimal line coordinates make every multi-hop chain mathematically tie
    // the direct edge while rounding differently under naive summation; the
    // exact accumulator must keep both implementations identical anyway
    std::vector<std::vector<double>> coords;
    std::vector<std::pair<PointId, PointId>> pairs;
    for (std::size_t i = 0; i < 8; ++i) {
        coords.push_back({0.1 * static_cast<double>(i + 1)});
        if (i) pairs.emplace_back(i - 1, i);
    }
    const OrderedMetricSpace s(metric_from_embedding(coords),
                               close_order(pairs, 8, OrderKind::partial));
    const ChainMetric fast = chain_metric(s);
    const ChainMetric slow = brute_force_chain_metric(s);
    for (PointId i = 0; i < 8; ++i)
        for (PointId j = 0; j < 8; ++j) CHECK(fast(i, j).value() == slow(i, j).value());
}

TEST_CASE("e dominates d and collapses on comparable pairs") {
    for (std::size_t trial = 0; trial < 60; ++trial) {
        const Instance inst = generate_instance(mixed_config(trial), 1000 + trial);
        const ChainMetric e = chain_metric(inst.space);
        const std::size_t n = inst.size();
        for (PointId i = 0; i < n; ++i) {
            for (PointId j = 0; j < n; ++j) {
                const ExtDist eij = e(i, j);
                if (!eij.is_infinite())
                    CHECK(eij.value() >= inst.space.d(i, j) - kDefaultTolerance);
                if (comparable(inst.space, i, j)) {
                    REQUIRE(!eij.is_infinite());
                    CHECK(eij.value() == doctest::Approx(inst.space.d(i, j)).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("e restricted to a chain component is a genuine metric") {
    for (std::size_t trial = 0; trial < 40; ++trial) {
        const Instance inst = generate_instance(mixed_config(trial), 2000 + trial);
        const ChainMetric e = chain_metric(inst.space);
        const ChainComponents cc = chain_components(inst.space);
        const std::size_t n = inst.size();
        for (PointId i = 0; i < n; ++i) {
            CHECK(e(i, i).value() == 0.0);
            for (PointId j = 0; j < n; ++j) {
                CHECK(e(i, j) == e(j, i));
                CHECK((cc.component[i] == cc.component[j]) == !e(i, j).is_infinite());
                if (i != j && !e(i, j).is_infinite()) CHECK(e(i, j).value() > 0.0);
                for (PointId k = 0; k < n; ++k) {
                    // +inf absorbs: the check is trivial unless all three are finite
                    if (!e(i, j).is_infinite() && !e(j, k).is_infinite() &&
                        !e(i, k).is_infinite())
                        CHECK(e(i, k).value() <=
                              e(i, j).value() + e(j, k).value() + kDefaultTolerance);
                }
            }
        }
    }
}

TEST_CASE("order enrichment never increases e") {
    for (std::size_t trial = 0; trial < 25; ++trial) {
        GenConfig config = mixed_config(trial);
        config.order_model = OrderModel::random_dag;
        config.dag_edge_prob = 0.25;
        const Instance inst = generate_instance(config, 3000 + trial);
        const ChainMetric before = chain_metric(inst.space);

        auto pairs = inst.space.order.strict_pairs();
        const std::size_t n = inst.size();
        // enrich: add every (i, j) with i < j missing from the order, keeping acyclicity
        bool added = false;
        for (PointId i = 0; i < n && !added; ++i)
            for (PointId j = i + 1; j < n && !added; ++j)
                if (!inst.space.leq(i, j) && !inst.space.leq(j, i)) {
                    pairs.emplace_back(i, j);
                    added = true;
                }
        if (!added) continue;
        const OrderedMetricSpace enriched(
            validate_metric(n, inst.space.metric.row_major()),
            close_order(pairs, n, OrderKind::quasi));
        const ChainMetric after = chain_metric(enriched);
        for (PointId i = 0; i < n; ++i)
            for (PointId j = 0; j < n; ++j) CHECK(after(i, j) <= before(i, j));
    }
}
