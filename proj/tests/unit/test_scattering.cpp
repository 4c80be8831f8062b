#include "doctest.h"

#include "../support.hpp"
#include "wallcross/errors.hpp"

using namespace wallcross;
using namespace testsupport;

namespace
{

Series u_series(int n, std::vector<int> t, LatticeVector w)
{
    return Series::monomial(2, 2, n, MultiIndex(std::move(t)), std::move(w));
}

Wall ray_wall(const LatticeVector &a, const Series &f, int n_sign = 1)
{
    return Wall{a, Support{SupportKind::ray, a}, lie_from_function(f, static_cast<std::int64_t>(n_sign) * rotate90(a)),
                -rotate90(a)};
}

} // namespace

TEST_CASE("wall validation")
{
    const int n = 3;
    const auto f = log_one_plus(u_series(n, {1, 0}, {-1, 0}));
    CHECK_NOTHROW(validate_wall(seed_wall({1, 0}, f)));
    // Monomial must be a negative multiple of the mode.
    Wall bad = seed_wall({1, 0}, f);
    bad.mode = LatticeVector{-1, 0};
    CHECK_THROWS_AS(validate_wall(bad), InputError);
    Wall bad_nu = seed_wall({1, 0}, f);
    bad_nu.coorientation = DualVector{1, 1};
    CHECK_THROWS_AS(validate_wall(bad_nu), InputError);
    Wall bad_dir = seed_wall({1, 0}, f);
    bad_dir.support.direction = LatticeVector{2, 0};
    CHECK_THROWS_AS(validate_wall(bad_dir), InputError);
}

TEST_CASE("crossing sequence of the standard seed")
{
    const auto d = log_seed(1, 3);
    const auto seq = crossing_sequence(d, Loop{{-1, -1}});
    REQUIRE(seq.size() == 4);
    // Theta_1^{-1} Theta_2 ( ... ) Theta_1 Theta_2^{-1}, read right to left.
    CHECK(seq[0].wall == 1);
    CHECK(seq[0].sign == -1);
    CHECK(seq[1].wall == 0);
    CHECK(seq[1].sign == 1);
    CHECK(seq[2].wall == 1);
    CHECK(seq[2].sign == 1);
    CHECK(seq[3].wall == 0);
    CHECK(seq[3].sign == -1);
    CHECK(seq[0].ray == LatticeVector{0, -1});
    CHECK(seq[3].ray == LatticeVector{-1, 0});
}

TEST_CASE("rotating the start ray rotates the sequence")
{
    const auto d = complete(log_seed(2, 4));
    const auto base = crossing_sequence(d, Loop{{-1, -1}});
    const auto dirs = free_directions(d);
    for (const auto &s : dirs) {
        const auto seq = crossing_sequence(d, Loop{s});
        REQUIRE(seq.size() == base.size());
        std::size_t offset = 0;
        while (offset < base.size() && base[offset].ray != seq[0].ray) {
            ++offset;
        }
        REQUIRE(offset < base.size());
        for (std::size_t i = 0; i < seq.size(); ++i) {
            CHECK(seq[i].wall == base[(i + offset) % base.size()].wall);
            CHECK(seq[i].sign == base[(i + offset) % base.size()].sign);
        }
    }
}

TEST_CASE("start ray on a support is rejected")
{
    const auto d = log_seed(1, 2);
    CHECK_THROWS_AS(crossing_sequence(d, Loop{{0, 1}}), InputError);
    CHECK_THROWS_AS(crossing_sequence(d, Loop{{-3, 0}}), InputError);
    CHECK_THROWS_AS(crossing_sequence(d, Loop{{0, 0}}), InputError);
}

TEST_CASE("path products: trivial cases")
{
    CHECK(path_ordered_product(Diagram{2, 3, {}}, Loop{{1, 1}}).is_zero());
    auto d = log_seed(2, 3);
    d.walls.pop_back();
    // One line crossed twice with opposite signs.
    CHECK(path_ordered_product(d, Loop{{1, 1}}).is_zero());
    Diagram one_ray{2, 3, {ray_wall({1, 1}, u_series(3, {1, 1}, {-1, -1}))}};
    CHECK(crossing_sequence(one_ray, Loop{{1, 0}}).size() == 1);
    CHECK(path_ordered_product(one_ray, Loop{{1, 0}}) == one_ray.walls[0].log_factor);
}

TEST_CASE("uncompleted example has the commutator defect")
{
    const auto d = log_seed(2, 2);
    const auto defect = path_ordered_product(d, Loop{{-1, -1}});
    CHECK(defect.str() == "-4 t1 t2 w^(-1,-1) d(-1,1)");
    // Independent of the start ray (the defect is central at this order).
    for (const auto &s : free_directions(d)) {
        CHECK(path_ordered_product(d, Loop{s}) == defect);
    }
}

TEST_CASE("minimalize merges and drops walls")
{
    const int n = 3;
    const auto f = u_series(n, {1, 1}, {-1, -1});
    Diagram d{2, n, {ray_wall({1, 1}, f), ray_wall({1, 1}, f), ray_wall({1, 2}, Series::zero(2, 2, n))}};
    const auto m = minimalize(d);
    REQUIRE(m.walls.size() == 1);
    CHECK(m.walls[0].log_factor == lie_from_function(f * Rational(2), rotate90(LatticeVector{1, 1})));
    // Opposite coorientation subtracts.
    Wall flipped = ray_wall({1, 1}, f);
    flipped.coorientation = rotate90(LatticeVector{1, 1});
    Diagram e{2, n, {ray_wall({1, 1}, f), flipped}};
    CHECK(minimalize(e).walls.empty());
    // Different modes on the same ray stay apart.
    Diagram g{2, n, {ray_wall({1, 1}, f), Wall{LatticeVector{1, 1}, Support{SupportKind::ray, {1, 1}},
                                                 LieElement(2, 2, n), -rotate90(LatticeVector{1, 1})}}};
    CHECK(minimalize(g).walls.size() == 1);
}

TEST_CASE("consistency checks")
{
    CHECK_FALSE(is_consistent(log_seed(2, 3)));
    CHECK(is_consistent(complete(log_seed(2, 3))));
    CHECK(is_consistent(Diagram{2, 3, {}}));
    auto single = log_seed(2, 3);
    single.walls.pop_back();
    CHECK(is_consistent(single));
}

TEST_CASE("completion: pentagon")
{
    const auto c = complete(log_seed(1, 6));
    REQUIRE(c.walls.size() == 3);
    const auto &w = c.walls[2];
    CHECK(w.mode == LatticeVector{1, 1});
    CHECK(w.support == Support{SupportKind::ray, {1, 1}});
    const auto u = u_series(6, {1, 1}, {-1, -1});
    CHECK(w.log_factor == lie_from_function(log_one_plus(u), DualVector{-1, 1}));
}

TEST_CASE("completion is base-point independent and idempotent")
{
    for (int e = 1; e <= 3; ++e) {
        const auto c = complete(log_seed(e, 4));
        for (const auto &s : free_directions(c)) {
            CHECK(path_ordered_product(c, Loop{s}).is_zero());
        }
        CHECK(complete(c) == c);
        CHECK(minimalize(c) == c);
    }
}

TEST_CASE("defects are central at their order")
{
    std::vector<CompletionStage> stages;
    const auto c = complete(log_seed(2, 5), CompletionOptions{&stages});
    REQUIRE(stages.size() == 5);
    const auto seed = log_seed(2, 5);
    for (const auto &st : stages) {
        if (st.defect.is_zero()) {
            continue;
        }
        CHECK(st.defect.min_order() == st.order);
        // Brackets with any wall factor land beyond order k.
        for (const auto &w : c.walls) {
            const auto b = bracket(st.defect, w.log_factor.reduce(st.order));
            CHECK((b.is_zero() || *b.min_order() > st.order));
        }
    }
    CHECK(stages[1].added == std::vector<LatticeVector>{{1, 1}});
}

TEST_CASE("completion rejects non-standard seeds")
{
    auto d = log_seed(1, 3);
    d.walls.push_back(seed_wall({1, 0}, log_one_plus(u_series(3, {1, 0}, {-1, 0}))));
    CHECK_THROWS(complete(d));
    // Extra rays outside the cone are not allowed.
    auto e = log_seed(1, 3);
    e.walls.push_back(ray_wall({-1, 1}, u_series(3, {1, 1}, {1, -1})));
    CHECK_THROWS(complete(e));
}

TEST_CASE("single wall passes through")
{
    auto d = log_seed(2, 4);
    d.walls.pop_back();
    CHECK(complete(d) == d);
}

TEST_CASE("other mode pairs stay in their cone")
{
    const int n = 4;
    const std::vector<std::pair<LatticeVector, LatticeVector>> pairs{
        {{1, 0}, {1, 1}}, {{0, 1}, {1, 0}}, {{1, 2}, {-1, 1}}, {{2, 1}, {1, 3}}};
    for (const auto &[m1, m2] : pairs) {
        const auto f1 = log_one_plus(Series::monomial(2, 2, n, MultiIndex{1, 0}, -m1));
        const auto f2 = log_one_plus(Series::monomial(2, 2, n, MultiIndex{0, 1}, -m2));
        std::vector<CompletionStage> stages;
        const auto c = complete(standard_seed(m1, f1, m2, f2), CompletionOptions{&stages});
        for (const auto &st : stages) {
            for (const auto &a : st.added) {
                CHECK(in_open_cone_oracle(a, m1, m2));
            }
        }
        CHECK(is_consistent(c));
    }
}

TEST_CASE("in_open_cone")
{
    CHECK(in_open_cone({1, 1}, {1, 0}, {0, 1}));
    CHECK_FALSE(in_open_cone({1, 0}, {1, 0}, {0, 1}));
    CHECK_FALSE(in_open_cone({-1, 1}, {1, 0}, {0, 1}));
    CHECK(in_open_cone({1, 1}, {0, 1}, {1, 0}));
}
