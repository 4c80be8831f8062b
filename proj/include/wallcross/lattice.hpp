#ifndef WALLCROSS_LATTICE_HPP
#define WALLCROSS_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace wallcross
{

using Rational = mpq_class;

// Canonical "p/q" text (always with a denominator, q > 0, lowest terms).
std::string to_fraction_string(const Rational &q);
// Human form: "p" for integers, "p/q" otherwise.
std::string to_display_string(const Rational &q);
// Accepts "p", "p/q" with optional sign; the result is canonicalized.
Rational parse_rational(const std::string &text);

// p/q in lowest terms (the two-argument mpq constructor does not canonicalize).
inline Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

namespace detail
{

template <typename Tag>
class IntVector
{
public:
    using value_type = std::int64_t;

    IntVector() = default;
    explicit IntVector(std::size_t rank) : coords_(rank, 0) {}
    explicit IntVector(std::vector<value_type> coords) : coords_(std::move(coords)) {}
    IntVector(std::initializer_list<value_type> coords) : coords_(coords) {}

    [[nodiscard]] std::size_t rank() const noexcept { return coords_.size(); }
    [[nodiscard]] const std::vector<value_type> &coords() const noexcept { return coords_; }
    value_type operator[](std::size_t i) const { return coords_[i]; }
    value_type &operator[](std::size_t i) { return coords_[i]; }

    [[nodiscard]] bool is_zero() const noexcept
    {
        for (auto c : coords_) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    // gcd of the coordinates (0 for the zero vector).
    [[nodiscard]] value_type content() const noexcept
    {
        value_type g = 0;
        for (auto c : coords_) {
            g = std::gcd(g, c);
        }
        return g;
    }

    [[nodiscard]] bool is_primitive() const noexcept { return content() == 1; }

    [[nodiscard]] IntVector primitive() const
    {
        const auto g = content();
        if (g == 0) {
            throw InputError("primitive(): zero vector has no primitive direction");
        }
        IntVector out(*this);
        for (auto &c : out.coords_) {
            c /= g;
        }
        return out;
    }

    IntVector &operator+=(const IntVector &o)
    {
        check_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] += o.coords_[i];
        }
        return *this;
    }
    IntVector &operator-=(const IntVector &o)
    {
        check_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] -= o.coords_[i];
        }
        return *this;
    }
    friend IntVector operator+(IntVector a, const IntVector &b) { return a += b; }
    friend IntVector operator-(IntVector a, const IntVector &b) { return a -= b; }
    friend IntVector operator-(IntVector a)
    {
        for (auto &c : a.coords_) {
            c = -c;
        }
        return a;
    }
    friend IntVector operator*(value_type k, IntVector a)
    {
        for (auto &c : a.coords_) {
            c *= k;
        }
        return a;
    }

    friend bool operator==(const IntVector &, const IntVector &) = default;
    friend auto operator<=>(const IntVector &a, const IntVector &b) { return a.coords_ <=> b.coords_; }

    [[nodiscard]] std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i != 0) {
                s += ',';
            }
            s += std::to_string(coords_[i]);
        }
        return s + ")";
    }

private:
    void check_rank(const IntVector &o) const
    {
        if (o.rank() != rank()) {
            throw InputError("lattice rank mismatch: " + std::to_string(rank()) + " vs "
                             + std::to_string(o.rank()));
        }
    }

    std::vector<value_type> coords_;
};

struct MTag {
};
struct NTag {
};

} // namespace detail

// Element of the character lattice M (exponents of w^m).
using LatticeVector = detail::IntVector<detail::MTag>;
// Element of the dual lattice N (directions of the derivations d_n).
using DualVector = detail::IntVector<detail::NTag>;

// Exponent of t^j = t_1^{j_1} ... t_l^{j_l}.
class MultiIndex
{
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t params) : degrees_(params, 0) {}
    explicit MultiIndex(std::vector<int> degrees);
    MultiIndex(std::initializer_list<int> degrees) : MultiIndex(std::vector<int>(degrees)) {}

    [[nodiscard]] std::size_t size() const noexcept { return degrees_.size(); }
    [[nodiscard]] const std::vector<int> &degrees() const noexcept { return degrees_; }
    int operator[](std::size_t i) const { return degrees_[i]; }
    [[nodiscard]] int total() const noexcept { return total_; }

    friend MultiIndex operator+(const MultiIndex &a, const MultiIndex &b);

    friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
    // Graded order: total degree first, then lexicographic.
    friend std::strong_ordering operator<=>(const MultiIndex &a, const MultiIndex &b)
    {
        if (auto c = a.total_ <=> b.total_; c != 0) {
            return c;
        }
        return a.degrees_ <=> b.degrees_;
    }

private:
    std::vector<int> degrees_;
    int total_ = 0;
};

std::int64_t pairing(const LatticeVector &m, const DualVector &n);

// Planar helpers (rank 2 only).
std::int64_t cross(const LatticeVector &a, const LatticeVector &b);
// Anticlockwise quarter turn (a, b) -> (-b, a), re-typed into N via the standard metric.
DualVector rotate90(const LatticeVector &v);
// Same turn, staying in M.
LatticeVector rotate90_m(const LatticeVector &v);
// Identify N with M through the standard metric.
LatticeVector as_lattice(const DualVector &n);
DualVector as_dual(const LatticeVector &m);

} // namespace wallcross

#endif
