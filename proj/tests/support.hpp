// Shared generators and independent reference implementations for the tests.
#ifndef WALLCROSS_TESTS_SUPPORT_HPP
#define WALLCROSS_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "wallcross/polyform.hpp"
#include "wallcross/scattering.hpp"
#include "wallcross/seeds.hpp"
#include "wallcross/series.hpp"
#include "wallcross/tropical_vertex.hpp"

namespace testsupport
{

using namespace wallcross;

inline int uniform(std::mt19937 &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational small_rational(std::mt19937 &rng)
{
    int p = uniform(rng, -5, 5);
    if (p == 0) {
        p = 1;
    }
    return frac(p, uniform(rng, 1, 4));
}

inline MultiIndex random_index(std::mt19937 &rng, std::size_t params, int lo, int hi)
{
    const int total = uniform(rng, lo, hi);
    std::vector<int> j(params, 0);
    for (int k = 0; k < total; ++k) {
        ++j[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(params) - 1))];
    }
    return MultiIndex(j);
}

inline LatticeVector random_vector(std::mt19937 &rng, std::size_t rank, int bound, bool nonzero)
{
    for (;;) {
        LatticeVector v(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            v[i] = uniform(rng, -bound, bound);
        }
        if (!nonzero || !v.is_zero()) {
            return v;
        }
    }
}

inline Series random_series(std::mt19937 &rng, std::size_t params, std::size_t rank, int n, int terms,
                            int min_degree = 0)
{
    Series s(params, rank, n);
    for (int k = 0; k < terms; ++k) {
        s.add_term(random_index(rng, params, min_degree, n), random_vector(rng, rank, 2, false),
                   small_rational(rng));
    }
    return s;
}

inline Series random_pure_t(std::mt19937 &rng, std::size_t params, std::size_t rank, int n, int terms,
                            int min_degree = 1)
{
    Series s(params, rank, n);
    for (int k = 0; k < terms; ++k) {
        s.add_term(random_index(rng, params, min_degree, n), LatticeVector(rank), small_rational(rng));
    }
    return s;
}

// Random direction perpendicular to m: an integer combination of a basis of m^perp.
inline DualVector random_perpendicular(std::mt19937 &rng, const LatticeVector &m)
{
    for (;;) {
        DualVector n(m.rank());
        for (const auto &b : perpendicular_basis(m)) {
            n = n + static_cast<std::int64_t>(uniform(rng, -2, 2)) * b;
        }
        if (!n.is_zero()) {
            return n;
        }
    }
}

inline std::vector<LieTerm> random_terms(std::mt19937 &rng, std::size_t params, std::size_t rank, int n,
                                         int count, int min_degree = 1)
{
    std::vector<LieTerm> out;
    for (int k = 0; k < count; ++k) {
        const LatticeVector m = random_vector(rng, rank, 2, true);
        out.push_back(LieTerm{m, random_perpendicular(rng, m),
                              random_pure_t(rng, params, rank, n, uniform(rng, 1, 2), min_degree)});
    }
    return out;
}

inline LieElement random_lie(std::mt19937 &rng, std::size_t params, std::size_t rank, int n, int count,
                             int min_degree = 1)
{
    const auto terms = random_terms(rng, params, rank, n, count, min_degree);
    return LieElement::from_terms(params, rank, n, terms);
}

// Schoolbook product over plain maps, truncated at |j| <= n.
inline Series naive_product(const Series &a, const Series &b)
{
    std::map<std::pair<std::vector<int>, std::vector<std::int64_t>>, Rational> acc;
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            std::vector<int> t(a.params());
            int total = 0;
            for (std::size_t i = 0; i < t.size(); ++i) {
                t[i] = ka.t[i] + kb.t[i];
                total += t[i];
            }
            if (total > a.max_order()) {
                continue;
            }
            std::vector<std::int64_t> w(a.rank());
            for (std::size_t i = 0; i < w.size(); ++i) {
                w[i] = ka.w[i] + kb.w[i];
            }
            acc[{t, w}] += ca * cb;
        }
    }
    Series out(a.params(), a.rank(), a.max_order());
    for (const auto &[k, c] : acc) {
        out.add_term(MultiIndex(k.first), LatticeVector(k.second), c);
    }
    return out;
}

// Bracket from the term formula
//   [c w^a d_n, c' w^b d_n'] = c c' w^{a+b} (<b, n> d_n' - <a, n'> d_n).
inline LieElement term_formula_bracket(const LieElement &x, const LieElement &y)
{
    LieElement out(x.params(), x.rank(), x.max_order());
    for (const auto &s : x.terms()) {
        for (const auto &t : y.terms()) {
            const Series c = s.coeff * t.coeff;
            if (c.is_zero()) {
                continue;
            }
            const LatticeVector m = s.monomial + t.monomial;
            const Rational p = Rational(pairing(t.monomial, s.direction));
            const Rational q = Rational(pairing(s.monomial, t.direction));
            // Each piece alone may leave h when m = 0; add coordinates directly.
            std::vector<Series> comps;
            for (std::size_t i = 0; i < x.rank(); ++i) {
                comps.push_back(c.shift(m) * (p * Rational(t.direction[i]) - q * Rational(s.direction[i])));
            }
            out += LieElement::from_components(std::move(comps));
        }
    }
    return out;
}

// Inverse of 1 + x in the truncated ring (x in the maximal ideal).
inline Series inverse_one_plus(const Series &x)
{
    Series out = Series::one(x.params(), x.rank(), x.max_order());
    Series p = out;
    for (int k = 1; k <= x.max_order(); ++k) {
        p = naive_product(p, -x);
        out += p;
    }
    return out;
}

inline Series naive_power(const Series &base, const Series &inverse, std::int64_t k)
{
    Series out = Series::one(base.params(), base.rank(), base.max_order());
    const Series &f = k >= 0 ? base : inverse;
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) {
        out = naive_product(out, f);
    }
    return out;
}

// Ring automorphism w^m' -> w^m' f^{<m', n>} with f = 1 + x.
struct Substitution {
    Series x;
    DualVector n;
    int power = 1; // +1 or -1 (the inverse automorphism)
};

inline Series substitute(const Substitution &sub, const Series &s)
{
    const Series one = Series::one(s.params(), s.rank(), s.max_order());
    const Series f = one + sub.x;
    const Series finv = inverse_one_plus(sub.x);
    Series out(s.params(), s.rank(), s.max_order());
    for (const auto &[k, c] : s.terms()) {
        const Series mono = Series::monomial(s.params(), s.rank(), s.max_order(), k.t, k.w, c);
        out += naive_product(mono, naive_power(f, finv, sub.power * pairing(k.w, sub.n)));
    }
    return out;
}

// Direct substitution of every monomial of s: the exact closed form of exp(D_X) for one term
// X = f w^m d_n, f pure t, acting on w^m' as w^m' exp(<m', n> f w^m).
inline Series single_term_action(const LieTerm &t, const Series &s)
{
    Series out(s.params(), s.rank(), s.max_order());
    const Series g = t.coeff.shift(t.monomial);
    for (const auto &[k, c] : s.terms()) {
        const Series mono = Series::monomial(s.params(), s.rank(), s.max_order(), k.t, k.w, c);
        out += naive_product(mono, exp_positive(g * Rational(pairing(k.w, t.direction))));
    }
    return out;
}

inline bool in_open_cone_oracle(const LatticeVector &a, const LatticeVector &m1, const LatticeVector &m2)
{
    // a = x m1 + y m2 by Cramer's rule; x, y > 0 iff both numerators share the sign of det.
    const std::int64_t det = m1[0] * m2[1] - m1[1] * m2[0];
    const std::int64_t xn = a[0] * m2[1] - a[1] * m2[0];
    const std::int64_t yn = m1[0] * a[1] - m1[1] * a[0];
    if (det == 0) {
        return false;
    }
    return det > 0 ? (xn > 0 && yn > 0) : (xn < 0 && yn < 0);
}

inline PolyForm random_polyform(std::mt19937 &rng, int max_order, int max_poly_degree, int terms,
                                int form_degree_filter = -1, int min_order = 0)
{
    PolyForm p;
    static constexpr MatrixBasis bases[] = {MatrixBasis::E12, MatrixBasis::E13, MatrixBasis::E23};
    static constexpr FormBasis forms[] = {FormBasis::one, FormBasis::dx1, FormBasis::dx2, FormBasis::dx12};
    for (int k = 0; k < terms; ++k) {
        FormBasis f;
        do {
            f = forms[uniform(rng, 0, 3)];
        } while (form_degree_filter >= 0 && form_degree(f) != form_degree_filter);
        const int deg = uniform(rng, 0, max_poly_degree);
        const int a = uniform(rng, 0, deg);
        p += PolyForm::term(uniform(rng, min_order, max_order), bases[uniform(rng, 0, 2)], f, a, deg - a,
                            small_rational(rng));
    }
    return p;
}

} // namespace testsupport

#endif
