#ifndef WALLCROSS_SERIES_HPP
#define WALLCROSS_SERIES_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "lattice.hpp"

namespace wallcross
{

// Monomial key t^j w^m. Ordered by (|j|, j, m).
struct SeriesKey {
    MultiIndex t;
    LatticeVector w;

    friend bool operator==(const SeriesKey &, const SeriesKey &) = default;
    friend std::strong_ordering operator<=>(const SeriesKey &a, const SeriesKey &b)
    {
        if (auto c = a.t <=> b.t; c != 0) {
            return c;
        }
        return a.w <=> b.w;
    }
};

// Element of (Q[t_1..t_l] / m^{N+1}) (x) Q[M]: a truncated power series in the
// deformation parameters whose coefficients are Laurent polynomials in w.
//
// Every stored key has |j| <= max_order and a nonzero coefficient; equality is
// structural. Values are immutable from the outside; all arithmetic returns new
// series.
class Series
{
public:
    using term_map = std::map<SeriesKey, Rational>;

    Series(std::size_t params, std::size_t rank, int max_order);

    static Series zero(std::size_t params, std::size_t rank, int max_order)
    {
        return Series(params, rank, max_order);
    }
    static Series one(std::size_t params, std::size_t rank, int max_order);
    static Series monomial(std::size_t params, std::size_t rank, int max_order, MultiIndex t,
                           LatticeVector w, Rational coeff = Rational(1));

    [[nodiscard]] std::size_t params() const noexcept { return params_; }
    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] int max_order() const noexcept { return max_order_; }
    [[nodiscard]] const term_map &terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    // Smallest |j| among stored terms; empty for the zero series.
    [[nodiscard]] std::optional<int> min_order() const;
    // True iff every term has no lattice part (a pure t-series).
    [[nodiscard]] bool is_pure_t() const;
    [[nodiscard]] Rational coefficient(const MultiIndex &t, const LatticeVector &w) const;

    // Same terms re-homed at truncation order n (terms with |j| > n are dropped).
    [[nodiscard]] Series reduce(int n) const;
    // Terms of total t-degree exactly k.
    [[nodiscard]] Series homogeneous_part(int k) const;

    // Adds c * t^j w^m in place; zero results are erased.
    void add_term(const MultiIndex &t, const LatticeVector &w, const Rational &c);

    Series &operator+=(const Series &o);
    Series &operator-=(const Series &o);
    Series &operator*=(const Rational &c);

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator-(Series a) { return a *= Rational(-1); }
    friend Series operator*(Series a, const Rational &c) { return a *= c; }
    friend Series operator*(const Rational &c, Series a) { return a *= c; }
    friend Series operator*(const Series &a, const Series &b);

    friend bool operator==(const Series &a, const Series &b)
    {
        return a.params_ == b.params_ && a.rank_ == b.rank_ && a.max_order_ == b.max_order_
               && a.terms_ == b.terms_;
    }

    // Multiplies every term t^j w^m by <m, n>: the derivation d_n.
    [[nodiscard]] Series euler(const DualVector &n) const;
    // Multiplies every term by its i-th lattice coordinate (d_{e_i}).
    [[nodiscard]] Series euler_coordinate(std::size_t i) const;
    // Multiplies by w^m.
    [[nodiscard]] Series shift(const LatticeVector &m) const;

    // e.g. "2 t1 w^(-1,0) + 1/3 t1^2 t2"; "0" for the zero series.
    [[nodiscard]] std::string str() const;

    void check_compatible(const Series &o) const;

private:
    std::size_t params_;
    std::size_t rank_;
    int max_order_;
    term_map terms_;
};

Series add(const Series &a, const Series &b);
Series mul(const Series &a, const Series &b);
Series power(const Series &a, unsigned k);

// sum_{k=0}^{N} a^k / k!; requires every term of a to have |j| >= 1.
Series exp_positive(const Series &a);
// sum_{k=1}^{N} (-1)^{k+1} a^k / k; requires every term of a to have |j| >= 1.
Series log_one_plus(const Series &a);

} // namespace wallcross

#endif
