#include <doctest.h>

#include <cmath>
#include <vector>

#include "fixlab/contraction.hpp"
#include "fixlab/theorem_lab.hpp"
#include "test_util.hpp"

using namespace fixlab;

TEST_CASE("ordered contraction factor") {
    SUBCASE("the canonical instance has factor 1/2") {
        const Instance inst = test::instance_013();
        const ContractionReport r = ordered_contraction_factor(inst.space, inst.map);
        CHECK(r.alpha_star.value() == 0.5);
        CHECK(r.eligible_pairs == 3);
        CHECK(r.verdict);
        REQUIRE(r.extremal);
        CHECK(r.extremal->x == 1);  // the pair (1, 3): ratio 1/2
        CHECK(r.extremal->y == 2);
    }
    SUBCASE("identity is never contractive on a nontrivial order") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0}, {{0, 1}});
        const ContractionReport r = ordered_contraction_factor(s, SelfMap(2, {0, 1}));
        CHECK(r.alpha_star.value() == 1.0);
        CHECK(!r.verdict);
        REQUIRE(r.witness);  // false verdicts must carry a witness
        CHECK(r.witness->lhs == r.witness->rhs);
    }
    SUBCASE("constant maps have factor 0") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0, 2.0}, {{0, 1}, {1, 2}});
        const ContractionReport r = ordered_contraction_factor(s, SelfMap(3, {1, 1, 1}));
        CHECK(r.alpha_star.value() == 0.0);
        CHECK(r.verdict);
    }
    SUBCASE("discrete orders have no eligible pairs") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0}, {});
        const ContractionReport r = ordered_contraction_factor(s, SelfMap(2, {1, 0}));
        CHECK(r.eligible_pairs == 0);
        CHECK(r.alpha_star.value() == 0.0);
    }
}

TEST_CASE("global contraction factor") {
    const Instance inst = test::instance_013();
    SUBCASE("under d with a total order it matches the ordered factor") {
        const ContractionReport r = global_contraction_factor(inst.space.metric, inst.map);
        CHECK(r.alpha_star.value() == 0.5);
        CHECK(r.verdict);
    }
    SUBCASE("under e with a total order, e = d so the factor carries over") {
        const ContractionReport r = global_contraction_factor(chain_metric(inst.space), inst.map);
        CHECK(r.alpha_star.value() == 0.5);
    }
    SUBCASE("identity and constant extremes") {
        CHECK(global_contraction_factor(inst.space.metric, SelfMap(3, {0, 1, 2}))
                  .alpha_star.value() == 1.0);
        CHECK(global_contraction_factor(inst.space.metric, SelfMap(3, {0, 0, 0}))
                  .alpha_star.value() == 0.0);
    }
    SUBCASE("infinite e pairs impose no constraint but flag the regime") {
        // two components; map sends one across, so some finite pair maps to inf
        const OrderedMetricSpace s = test::line_space({0.0, 1.0, 10.0, 11.0}, {{0, 1}, {2, 3}});
        const ChainMetric e = chain_metric(s);
        const ContractionReport within =
            global_contraction_factor(e, SelfMap(4, {0, 0, 2, 2}));
        CHECK(within.extended_regime);
        CHECK(!within.verdict);  // (b04) is stated for a genuine metric
        CHECK(within.alpha_star.value() == 0.0);

        const ContractionReport across =
            global_contraction_factor(e, SelfMap(4, {0, 2, 2, 2}));
        CHECK(across.alpha_star.is_infinite());  // e(0,1) finite, e(T0,T1) = inf
    }
}

TEST_CASE("monotonicity classification") {
    const OrderedMetricSpace chain = test::line_space({0.0, 1.0, 2.0}, {{0, 1}, {1, 2}});
    CHECK(is_monotone(chain, SelfMap(3, {0, 1, 2})) == Monotonicity::increasing);
    CHECK(is_monotone(chain, SelfMap(3, {2, 1, 0})) == Monotonicity::decreasing);
    CHECK(is_monotone(chain, SelfMap(3, {1, 1, 1})) == Monotonicity::both);
    CHECK(is_monotone(chain, SelfMap(3, {0, 2, 1})) == Monotonicity::neither);
    const OrderedMetricSpace discrete = test::line_space({0.0, 1.0}, {});
    CHECK(is_monotone(discrete, SelfMap(2, {1, 0})) == Monotonicity::both);
}

TEST_CASE("comparability-increasing (b02)") {
    SUBCASE("monotone maps are <>-increasing") {
        const OrderedMetricSpace chain = test::line_space({0.0, 1.0, 2.0}, {{0, 1}, {1, 2}});
        CHECK(is_comparability_increasing(chain, SelfMap(3, {2, 1, 0})));
        CHECK(is_comparability_increasing(chain, SelfMap(3, {0, 1, 2})));
    }
    SUBCASE("two chains with a cross map break it") {
        // order {a<=b, c<=d}; T: a->a, b->c, c->c, d->d maps comparable (a,b)
        // to incomparable (a,c)
        const OrderedMetricSpace s = test::line_space({0.0, 1.0, 10.0, 11.0}, {{0, 1}, {2, 3}});
        CHECK(!is_comparability_increasing(s, SelfMap(4, {0, 2, 2, 3})));
    }
    SUBCASE("random monotone maps are always <>-increasing: (a04) => (b02)") {
        GenConfig config;
        config.map_model = MapModel::monotone_rejection;
        config.alpha_target = 0.95;
        for (std::size_t trial = 0; trial < 30; ++trial) {
            config.n = 3 + trial % 4;
            config.order_model = trial % 2 ? OrderModel::random_dag : OrderModel::total;
            const Instance inst = generate_instance(config, 5000 + trial);
            const Monotonicity mono = is_monotone(inst.space, inst.map);
            REQUIRE((mono == Monotonicity::increasing || mono == Monotonicity::both));
            CHECK(is_comparability_increasing(inst.space, inst.map));
        }
    }
}

TEST_CASE("suzuki threshold functions") {
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    CHECK(suzuki_F(0.0) == 1.0);
    CHECK(suzuki_F(golden) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(suzuki_F(golden) == doctest::Approx((1 - golden) / (golden * golden)).epsilon(1e-12));
    CHECK(suzuki_F(inv_sqrt2) == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
    CHECK(suzuki_F(inv_sqrt2) == doctest::Approx(1.0 / (1.0 + inv_sqrt2)).epsilon(1e-15));
    CHECK(suzuki_F(100.0) == doctest::Approx(1.0 / 101.0));
    CHECK_THROWS_AS(suzuki_F(-0.1), Error);

    CHECK(suzuki_G(1.0) == 0.5);
    CHECK(suzuki_G(3.0) == 0.25);
    CHECK(suzuki_G(1e-12) > 1.0 - 1e-11);
    CHECK_THROWS_AS(suzuki_G(0.0), Error);
    CHECK_THROWS_AS(suzuki_G(-1.0), Error);

    SUBCASE("nonincreasing and continuous across both breakpoints") {
        double prev = suzuki_F(0.0);
        for (int i = 1; i <= 4000; ++i) {
            const double t = 4.0 * i / 4000.0;
            const double cur = suzuki_F(t);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
        for (double b : {golden, inv_sqrt2})
            CHECK(std::abs(suzuki_F(b - 1e-12) - suzuki_F(b + 1e-12)) <= 1e-9);
    }
}

TEST_CASE("conditional F-contractivity (c02)") {
    SUBCASE("constant maps pass at any alpha") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0, 2.0}, {{0, 1}});
        CHECK(check_conditional_F_contractive(s, SelfMap(3, {1, 1, 1}), 0.0).verdict);
        CHECK(check_conditional_F_contractive(s, SelfMap(3, {1, 1, 1}), 0.9).verdict);
    }
    SUBCASE("identity on two points fails with a reproducible witness") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0}, {{0, 1}});
        const ContractionReport r =
            check_conditional_F_contractive(s, SelfMap(2, {0, 1}), 0.5);
        CHECK(!r.verdict);
        REQUIRE(r.witness);
        CHECK(r.witness->lhs == 1.0);        // d(Tx,Ty) = d(x,y)
        CHECK(r.witness->rhs == 0.5);        // alpha * d(x,y)
    }
    SUBCASE("the canonical instance passes at alpha = 1/2") {
        const Instance inst = test::instance_013();
        const ContractionReport r =
            check_conditional_F_contractive(inst.space, inst.map, 0.5);
        CHECK(r.verdict);
        CHECK(r.eligible_pairs == 6);  // every directed pair satisfies the premise
    }
    CHECK_THROWS_AS(check_conditional_F_contractive(test::instance_013().space,
                                                    test::instance_013().map, 1.0),
                    Error);
}

TEST_CASE("weak conditional (G,<>)-contractivity (c03)") {
    SUBCASE("two comparable fixed points kill every alpha") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0}, {{0, 1}});
        const SelfMap identity(2, {0, 1});
        for (double alpha : theorem5_alpha_grid()) {
            const ContractionReport r =
                check_weak_conditional_G_contractive(s, identity, alpha);
            CHECK(!r.verdict);
            REQUIRE(r.witness);
            // the witness reproduces: d(Tx,Ty) = d(x,y) > alpha*d(x,y)
            CHECK(r.witness->lhs > r.witness->rhs);
        }
    }
    SUBCASE("constant maps pass") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0, 2.0}, {{0, 1}, {1, 2}});
        CHECK(check_weak_conditional_G_contractive(s, SelfMap(3, {2, 2, 2}), 0.3).verdict);
    }
    SUBCASE("discrete orders pass vacuously") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0, 2.0}, {});
        const ContractionReport r =
            check_weak_conditional_G_contractive(s, SelfMap(3, {1, 2, 0}), 0.5);
        CHECK(r.verdict);
        CHECK(r.eligible_pairs == 0);
    }
    SUBCASE("the dual-y premise variant is evaluated side by side") {
        const Instance inst = test::instance_013();
        const ContractionReport verbatim = check_weak_conditional_G_contractive(
            inst.space, inst.map, 0.5, kDefaultTolerance, WeakGPremise::verbatim);
        const ContractionReport dual = check_weak_conditional_G_contractive(
            inst.space, inst.map, 0.5, kDefaultTolerance, WeakGPremise::dual_y);
        CHECK(verbatim.verdict);
        CHECK(dual.verdict);  // this instance passes under either reading
    }
    CHECK_THROWS_AS(check_weak_conditional_G_contractive(test::instance_013().space,
                                                         test::instance_013().map, 0.0),
                    Error);
}

TEST_CASE("minimal_alpha grid search") {
    const Instance inst = test::instance_013();
    SUBCASE("factor 1/2 is found within a grid step") {
        const auto a = minimal_alpha(inst.space, inst.map, ContractionKind::ordered_d);
        REQUIRE(a);
        CHECK(*a == doctest::Approx(0.5).epsilon(2e-3));
    }
    SUBCASE("constant maps pass at the smallest grid point") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0}, {{0, 1}});
        const auto a = minimal_alpha(s, SelfMap(2, {0, 0}), ContractionKind::weak_G);
        REQUIRE(a);
        CHECK(*a <= 1e-3 + 1e-12);
    }
    SUBCASE("identity on comparable points needs alpha >= 1: NotFound") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0}, {{0, 1}});
        CHECK(!minimal_alpha(s, SelfMap(2, {0, 1}), ContractionKind::ordered_d));
    }
    CHECK_THROWS_AS(minimal_alpha(inst.space, inst.map, ContractionKind::comparison_profile),
                    Error);
}

TEST_CASE("comparison profile") {
    SUBCASE("canonical instance: breakpoints 1, 2, 3 with values 0, 1, 1") {
        const Instance inst = test::instance_013();
        const StepFunction f = comparison_profile(inst.space, inst.map);
        CHECK(f.breakpoints() == std::vector<double>{1.0, 2.0, 3.0});
        CHECK(f.values() == std::vector<double>{0.0, 1.0, 1.0});
        CHECK(f.eval(0.5) == 0.0);
        CHECK(f.eval(1.0) == 0.0);
        CHECK(f.eval(2.5) == 1.0);
        CHECK(f.eval(100.0) == 1.0);
    }
    SUBCASE("identity profile sits on the diagonal at breakpoints") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0, 3.0}, {{0, 1}, {1, 2}});
        const StepFunction f = comparison_profile(s, SelfMap(3, {0, 1, 2}));
        for (double b : f.breakpoints()) CHECK(f.eval(b) == b);
        for (double t : {0.5, 1.7, 2.9, 5.0}) CHECK(f.eval(t) <= t);
    }
    SUBCASE("constant maps give the zero profile") {
        const OrderedMetricSpace s = test::line_space({0.0, 1.0, 3.0}, {{0, 1}, {1, 2}});
        const StepFunction f = comparison_profile(s, SelfMap(3, {1, 1, 1}));
        for (double v : f.values()) CHECK(v == 0.0);
    }
}

TEST_CASE("property (P) iteration") {
    SUBCASE("canonical profile reaches 0 in two steps") {
        const Instance inst = test::instance_013();
        const StepFunction f = comparison_profile(inst.space, inst.map);
        const PropertyPResult r = check_property_P(f, {1.0, 2.5, 3.0});
        CHECK(r.verdict);
        CHECK(r.matkowski_ok);
        CHECK(r.iterations[0] == 1);  // f(1) = 0
        CHECK(r.iterations[1] == 2);  // f(2.5) = 1, f(1) = 0
        CHECK(r.iterations[2] == 2);
    }
    SUBCASE("an identity-like profile stalls") {
        const StepFunction f({1.0}, {1.0});  // f(t) = 1 for t >= 1
        const PropertyPResult r = check_property_P(f, {1.0}, 50);
        CHECK(!r.verdict);
        CHECK(r.iterations[0] == 50);
    }
    SUBCASE("the zero profile finishes in one application") {
        const StepFunction f({1.0}, {0.0});
        const PropertyPResult r = check_property_P(f, {5.0});
        CHECK(r.verdict);
        CHECK(r.iterations[0] == 1);
    }
    SUBCASE("non-monotone profiles are rejected") {
        CHECK_THROWS_AS(check_property_P(StepFunction({1.0, 2.0}, {1.0, 0.5}), {1.0}), Error);
    }
    SUBCASE("samples must be positive") {
        CHECK_THROWS_AS(check_property_P(StepFunction({1.0}, {0.0}), {0.0}), Error);
    }
}

TEST_CASE("contractive profiles decay geometrically") {
    GenConfig config;
    config.map_model = MapModel::monotone_rejection;
    config.alpha_target = 0.8;
    config.order_model = OrderModel::total;
    for (std::size_t trial = 0; trial < 20; ++trial) {
        config.n = 3 + trial % 4;
        config.metric_model = trial % 2 ? MetricModel::line : MetricModel::random_repaired;
        const Instance inst = generate_instance(config, 7000 + trial);
        const double alpha_star =
            ordered_contraction_factor(inst.space, inst.map).alpha_star.value();
        REQUIRE(alpha_star < 1.0);
        const StepFunction f = comparison_profile(inst.space, inst.map);
        for (std::size_t i = 0; i < f.breakpoints().size(); ++i)
            CHECK(f.values()[i] <= alpha_star * f.breakpoints()[i] + kDefaultTolerance);
        std::vector<double> samples;
        for (double b : f.breakpoints())
            if (b > 0) samples.push_back(b);
        CHECK(check_property_P(f, samples).verdict);
    }
}

TEST_CASE("ordered factor never exceeds the global factor under d") {
    GenConfig config;
    config.map_model = MapModel::random_map;
    for (std::size_t trial = 0; trial < 50; ++trial) {
        config.n = 2 + trial % 6;
        config.order_model = static_cast<OrderModel>(trial % 4);
        config.metric_model = static_cast<MetricModel>(trial % 3);
        const Instance inst = generate_instance(config, 15000 + trial);
        const ContractionReport ordered = ordered_contraction_factor(inst.space, inst.map);
        const ContractionReport global = global_contraction_factor(inst.space.metric, inst.map);
        CHECK(ordered.alpha_star.value() <= global.alpha_star.value());
        if (config.order_model == OrderModel::total)
            CHECK(ordered.alpha_star.value() == global.alpha_star.value());
    }
}

TEST_CASE("failing witnesses re-evaluate to the same violation") {
    GenConfig config;
    config.map_model = MapModel::random_map;
    for (std::size_t trial = 0; trial < 40; ++trial) {
        config.n = 3 + trial % 4;
        config.order_model = trial % 2 ? OrderModel::total : OrderModel::random_dag;
        const Instance inst = generate_instance(config, 8000 + trial);
        const ContractionReport r = ordered_contraction_factor(inst.space, inst.map);
        if (r.verdict) continue;
        REQUIRE(r.witness);
        const double lhs = inst.space.d(inst.map(r.witness->x), inst.map(r.witness->y));
        const double rhs = inst.space.d(r.witness->x, r.witness->y);
        CHECK(std::abs(lhs - r.witness->lhs) <= 1e-12);
        CHECK(std::abs(rhs - r.witness->rhs) <= 1e-12);

        for (double alpha : {0.3, 0.7}) {
            const ContractionReport g =
                check_weak_conditional_G_contractive(inst.space, inst.map, alpha);
            if (g.verdict) continue;
            REQUIRE(g.witness);
            const double glhs = inst.space.d(inst.map(g.witness->x), inst.map(g.witness->y));
            const double grhs = alpha * inst.space.d(g.witness->x, g.witness->y);
            CHECK(std::abs(glhs - g.witness->lhs) <= 1e-12);
            CHECK(std::abs(grhs - g.witness->rhs) <= 1e-12);
            CHECK(glhs > grhs + g.tolerance - 1e-12);  // it really is a violation
        }
    }
}
