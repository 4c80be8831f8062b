#include "doctest.h"

#include "../support.hpp"
#include "wallcross/errors.hpp"

using namespace wallcross;
using namespace testsupport;

namespace
{

Series mono(int n, std::vector<int> t, LatticeVector w, Rational c = Rational(1))
{
    return Series::monomial(2, 2, n, MultiIndex(std::move(t)), std::move(w), std::move(c));
}

} // namespace

TEST_CASE("rationals print in lowest terms")
{
    CHECK(to_fraction_string(frac(6, 4)) == "3/2");
    CHECK(to_fraction_string(Rational(-2)) == "-2/1");
    CHECK(to_fraction_string(parse_rational("-10/4")) == "-5/2");
    CHECK_THROWS_AS(parse_rational("10/-4"), InputError);
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
}

TEST_CASE("lattice helpers")
{
    const LatticeVector v{4, -6};
    CHECK(v.content() == 2);
    CHECK(v.primitive() == LatticeVector{2, -3});
    CHECK(pairing(LatticeVector{1, 2}, DualVector{-2, 1}) == 0);
    CHECK(rotate90(LatticeVector{1, 0}) == DualVector{0, 1});
    CHECK(cross(LatticeVector{1, 0}, LatticeVector{0, 1}) == 1);
    CHECK((MultiIndex{1, 2} + MultiIndex{0, 1}).total() == 4);
}

TEST_CASE("series multiplication truncates and cancels")
{
    const int n = 3;
    const auto a = mono(n, {1, 0}, {-1, 0}) + mono(n, {0, 1}, {0, -1});
    const auto sq = a * a;
    CHECK(sq.coefficient(MultiIndex{1, 1}, LatticeVector{-1, -1}) == Rational(2));
    CHECK(sq.coefficient(MultiIndex{2, 0}, LatticeVector{-2, 0}) == Rational(1));
    CHECK(sq.size() == 3);
    // Degree 4 drops out at N = 3.
    CHECK((sq * sq).is_zero());
    CHECK((a - a).is_zero());
    CHECK(power(a, 0) == Series::one(2, 2, n));
}

TEST_CASE("exp and log of a single monomial")
{
    const int n = 4;
    const auto u = mono(n, {1, 1}, {-1, -1});
    const auto l = log_one_plus(u);
    CHECK(l.coefficient(MultiIndex{2, 2}, LatticeVector{-2, -2}) == frac(-1, 2));
    CHECK(l.size() == 2);
    const auto e = exp_positive(mono(n, {1, 0}, {0, 0}));
    CHECK(e.coefficient(MultiIndex{4, 0}, LatticeVector{0, 0}) == frac(1, 24));
    CHECK((2 * log_one_plus(u)).homogeneous_part(2).str() == "2 t1 t2 w^(-1,-1)");
    CHECK_THROWS_AS(log_one_plus(Series::one(2, 2, n)), InputError);
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = uniform(rng, 1, 5);
        const auto a = random_series(rng, 2, 2, n, 4);
        const auto b = random_series(rng, 2, 2, n, 4);
        const auto c = random_series(rng, 2, 2, n, 3);
        CHECK(a * b == naive_product(a, b));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Series::one(2, 2, n) == a);
        CHECK(a + (-a) == Series::zero(2, 2, n));
    }
}

TEST_CASE("truncation is a ring map")
{
    std::mt19937 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = uniform(rng, 2, 6);
        const int k = uniform(rng, 0, n);
        const auto a = random_series(rng, 3, 2, n, 4);
        const auto b = random_series(rng, 3, 2, n, 4);
        CHECK((a * b).reduce(k) == a.reduce(k) * b.reduce(k));
        CHECK((a + b).reduce(k) == a.reduce(k) + b.reduce(k));
    }
}

TEST_CASE("exp(log(1 + a)) = 1 + a up to order 8")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = uniform(rng, 1, 8);
        const auto a = random_series(rng, 2, 2, n, 2, 1);
        CHECK(exp_positive(log_one_plus(a)) == Series::one(2, 2, n) + a);
        CHECK(log_one_plus(exp_positive(a) - Series::one(2, 2, n)) == a);
    }
}

TEST_CASE("euler derivation is a derivation")
{
    std::mt19937 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(rng, 2, 2, 4, 4);
        const auto b = random_series(rng, 2, 2, 4, 4);
        const DualVector nvec = as_dual(random_vector(rng, 2, 3, true));
        CHECK((a * b).euler(nvec) == a.euler(nvec) * b + a * b.euler(nvec));
    }
}

TEST_CASE("incompatible series are rejected")
{
    CHECK_THROWS_AS(Series::one(2, 2, 3) + Series::one(2, 2, 4), InputError);
    CHECK_THROWS_AS(Series::one(2, 2, 3) * Series::one(3, 2, 3), InputError);
}
