#ifndef WALLCROSS_TROPICAL_VERTEX_HPP
#define WALLCROSS_TROPICAL_VERTEX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "series.hpp"

namespace wallcross
{

// One summand coeff(t) * w^monomial (x) d_direction of a tropical vertex Lie element.
// The coefficient is a pure t-series; <monomial, direction> = 0.
struct LieTerm {
    LatticeVector monomial;
    DualVector direction;
    Series coeff;
};

// Element of the Lie algebra h (x) R of monomial-weighted derivations
//     X = sum_m w^m (x) v_m,   v_m in (m^perp) (x) R.
//
// Stored in coordinate form: X = sum_i F_i d_{e_i} with F_i a Series whose lattice
// exponents are the monomials. Coordinates make the representation canonical in any
// rank; terms() reads it back as LieTerms over a fixed integral basis of m^perp (in
// rank 2 that basis is the single vector rotate90(-m) / gcd).
class LieElement
{
public:
    LieElement(std::size_t params, std::size_t rank, int max_order);

    // Validates <m, n> = 0, m != 0, n != 0 and that the coefficient is a pure t-series.
    static LieElement from_term(const LatticeVector &monomial, const DualVector &direction,
                                const Series &coeff);
    static LieElement from_terms(std::size_t params, std::size_t rank, int max_order,
                                 std::span<const LieTerm> terms);
    // Wraps raw coordinate series; throws MathError if the result is not in h.
    static LieElement from_components(std::vector<Series> components);

    [[nodiscard]] std::size_t params() const noexcept { return params_; }
    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] int max_order() const noexcept { return max_order_; }
    [[nodiscard]] const std::vector<Series> &components() const noexcept { return components_; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::optional<int> min_order() const;
    [[nodiscard]] LieElement reduce(int n) const;
    [[nodiscard]] LieElement homogeneous_part(int k) const;

    // Canonical term list, sorted by (monomial, direction).
    [[nodiscard]] std::vector<LieTerm> terms() const;
    // Distinct monomials carrying a nonzero derivation.
    [[nodiscard]] std::vector<LatticeVector> monomials() const;
    // The part of X supported on the given monomials.
    [[nodiscard]] LieElement restrict_to(std::span<const LatticeVector> monomials) const;

    // True iff every monomial's derivation vector is perpendicular to it and nonzero
    // monomials only: the closure property of h.
    [[nodiscard]] bool satisfies_invariants() const;

    LieElement &operator+=(const LieElement &o);
    LieElement &operator-=(const LieElement &o);
    LieElement &operator*=(const Rational &c);
    friend LieElement operator+(LieElement a, const LieElement &b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement &b) { return a -= b; }
    friend LieElement operator-(LieElement a) { return a *= Rational(-1); }
    friend LieElement operator*(const Rational &c, LieElement a) { return a *= c; }
    friend LieElement operator*(LieElement a, const Rational &c) { return a *= c; }

    friend bool operator==(const LieElement &, const LieElement &) = default;

    // "4 t1 t2 w^(-1,-1) d(-1,1) + ..."; "0" for zero.
    [[nodiscard]] std::string str() const;

    void check_compatible(const LieElement &o) const;

private:
    std::size_t params_;
    std::size_t rank_;
    int max_order_;
    std::vector<Series> components_;
};

// f (x) d_n for a series f whose monomials are all perpendicular to n.
LieElement lie_from_function(const Series &f, const DualVector &n);

// Integral basis of m^perp used by LieElement::terms(); m != 0.
std::vector<DualVector> perpendicular_basis(const LatticeVector &m);

// [c w^a d_n, c' w^b d_n'] = c c' w^{a+b} (<b,n> d_n' - <a,n'> d_n), extended bilinearly.
LieElement bracket(const LieElement &x, const LieElement &y);

// Infinitesimal action: d_n(w^m') = <m', n> w^m'.
Series derivation_apply(const LieElement &x, const Series &s);

// exp(D_x)(s) = sum_k D_x^k(s) / k!. Coefficients of x must lie in the maximal ideal.
Series group_act(const LieElement &x, const Series &s);

// Log(exp(x) exp(y)): group_act(bch(x, y), s) == group_act(x, group_act(y, s)).
LieElement bch(const LieElement &x, const LieElement &y);

} // namespace wallcross

#endif
