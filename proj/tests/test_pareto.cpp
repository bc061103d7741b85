#include <doctest.h>

#include <algorithm>
#include <random>

#include "roadalign/pareto.hpp"
#include "support/oracles.hpp"

using namespace roadalign;

namespace {

std::vector<FrontPoint> random_points(std::mt19937_64& rng, std::size_t count,
                                      int duplicates_every = 0) {
    std::uniform_real_distribution<double> dist(0.0, 100.0);
    std::vector<FrontPoint> points;
    for (std::size_t i = 0; i < count; ++i) {
        FrontPoint p;
        if (duplicates_every > 0 && i > 0 && i % duplicates_every == 0)
            p.objectives = points[i / 2].objectives;
        else
            p.objectives = {dist(rng), dist(rng)};
        p.evaluation_index = i + 1;
        points.push_back(p);
    }
    return points;
}

}  // namespace

TEST_CASE("dominance truth table") {
    CHECK(dominates({1, 1}, {2, 2}));
    CHECK(!dominates({1, 2}, {2, 1}));
    CHECK(!dominates({2, 1}, {1, 2}));
    CHECK(!dominates({1, 1}, {1, 1}));
    CHECK(dominates({1, 1}, {1, 2}));
    CHECK(dominates({1, 1}, {2, 1}));
}

TEST_CASE("filter keeps exactly the non-dominated points") {
    std::vector<FrontPoint> pts;
    pts.push_back({{1, 2}, {}, 1});
    pts.push_back({{2, 1}, {}, 2});
    pts.push_back({{2, 2}, {}, 3});
    const ParetoFront front = pareto_filter(pts);
    REQUIRE(front.size() == 2);
    CHECK(front.points()[0].objectives == ObjectivePair{1, 2});
    CHECK(front.points()[1].objectives == ObjectivePair{2, 1});
}

TEST_CASE("identical points collapse to the earliest evaluation") {
    std::vector<FrontPoint> pts;
    pts.push_back({{3, 3}, {}, 9});
    pts.push_back({{3, 3}, {}, 4});
    pts.push_back({{3, 3}, {}, 7});
    const ParetoFront front = pareto_filter(pts);
    REQUIRE(front.size() == 1);
    CHECK(front.points()[0].evaluation_index == 4);
}

TEST_CASE("filter matches the brute-force oracle on random points") {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 10; ++trial) {
        const std::vector<FrontPoint> pts = random_points(rng, 1000, trial % 2 ? 7 : 0);
        const ParetoFront front = pareto_filter(pts);
        const std::vector<FrontPoint> expected = oracles::brute_force_front(pts);
        REQUIRE(front.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(front.points()[i].objectives == expected[i].objectives);
            CHECK(front.points()[i].evaluation_index == expected[i].evaluation_index);
        }
    }
}

TEST_CASE("filter is idempotent and permutation-invariant") {
    std::mt19937_64 rng(307);
    const std::vector<FrontPoint> pts = random_points(rng, 500, 5);
    const ParetoFront front = pareto_filter(pts);

    std::vector<FrontPoint> again(front.points().begin(), front.points().end());
    const ParetoFront refiltered = pareto_filter(again);
    REQUIRE(refiltered.size() == front.size());
    for (std::size_t i = 0; i < front.size(); ++i)
        CHECK(refiltered.points()[i].objectives == front.points()[i].objectives);

    std::vector<FrontPoint> shuffled = pts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const ParetoFront from_shuffled = pareto_filter(shuffled);
    REQUIRE(from_shuffled.size() == front.size());
    for (std::size_t i = 0; i < front.size(); ++i) {
        CHECK(from_shuffled.points()[i].objectives == front.points()[i].objectives);
        CHECK(from_shuffled.points()[i].evaluation_index == front.points()[i].evaluation_index);
    }
}

TEST_CASE("front ordering: earthwork ascending, utility strictly descending") {
    std::mt19937_64 rng(311);
    const ParetoFront front = pareto_filter(random_points(rng, 800));
    for (std::size_t i = 1; i < front.size(); ++i) {
        CHECK(front.points()[i].objectives.earthwork >= front.points()[i - 1].objectives.earthwork);
        CHECK(front.points()[i].objectives.utility < front.points()[i - 1].objectives.utility);
    }
}

TEST_CASE("nadir and utopia bracket the front") {
    const NadirUtopia ref = NadirUtopia::from_points({{10, 20}, {5, 30}, {8, 25}});
    CHECK(ref.nadir.earthwork == 10);
    CHECK(ref.nadir.utility == 30);
    CHECK(ref.utopia.earthwork == 5);
    CHECK(ref.utopia.utility == 20);
    CHECK(ref.norm_earthwork() == doctest::Approx(1.0 / 5.0));
    CHECK(ref.norm_utility() == doctest::Approx(1.0 / 10.0));
}

TEST_CASE("normalization factors from the worked example") {
    const NadirUtopia ref = NadirUtopia::from_points({{10, 20}, {5, 10}});
    CHECK(ref.norm_earthwork() == doctest::Approx(0.2));
    CHECK(ref.norm_utility() == doctest::Approx(0.1));

    // v_e = 1: only earthwork matters
    CHECK(weighted_sum_scalarize({7, 1000}, 1.0, ref) ==
          doctest::Approx(weighted_sum_scalarize({7, -1000}, 1.0, ref)));

    // the scalarized Nadir exceeds the scalarized Utopia for interior weights
    CHECK(weighted_sum_scalarize(ref.nadir, 0.5, ref) >
          weighted_sum_scalarize(ref.utopia, 0.5, ref));
}

TEST_CASE("scalarization argmin is invariant to rescaling both objectives") {
    std::mt19937_64 rng(313);
    std::uniform_real_distribution<double> dist(1.0, 50.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ObjectivePair> pairs;
        for (int i = 0; i < 20; ++i) pairs.push_back({dist(rng), dist(rng)});
        const NadirUtopia ref = NadirUtopia::from_points(pairs);

        const double scale = 37.5;
        std::vector<ObjectivePair> scaled;
        for (const auto& p : pairs) scaled.push_back({p.earthwork * scale, p.utility * scale});
        const NadirUtopia scaled_ref = NadirUtopia::from_points(scaled);

        for (double v_e : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            std::size_t argmin = 0, scaled_argmin = 0;
            for (std::size_t i = 1; i < pairs.size(); ++i) {
                if (weighted_sum_scalarize(pairs[i], v_e, ref) <
                    weighted_sum_scalarize(pairs[argmin], v_e, ref))
                    argmin = i;
                if (weighted_sum_scalarize(scaled[i], v_e, scaled_ref) <
                    weighted_sum_scalarize(scaled[scaled_argmin], v_e, scaled_ref))
                    scaled_argmin = i;
            }
            CHECK(argmin == scaled_argmin);
        }
    }
}
