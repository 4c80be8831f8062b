#include "wallcross/tropical_vertex.hpp"

#include <algorithm>
#include <map>

namespace wallcross
{

namespace
{

using Bucket = std::map<LatticeVector, std::vector<Series>>;

// Groups the coordinate series by monomial: monomial -> (pure t-series per coordinate).
Bucket bucket_by_monomial(const LieElement &x)
{
    Bucket out;
    const LatticeVector origin(x.rank());
    for (std::size_t i = 0; i < x.rank(); ++i) {
        for (const auto &[key, c] : x.components()[i].terms()) {
            auto [it, fresh] = out.try_emplace(key.w);
            if (fresh) {
                it->second.assign(x.rank(), Series(x.params(), x.rank(), x.max_order()));
            }
            it->second[i].add_term(key.t, origin, c);
        }
    }
    return out;
}

bool perpendicular(const LatticeVector &m, const std::vector<Series> &v)
{
    Series dot(v.front().params(), v.front().rank(), v.front().max_order());
    for (std::size_t i = 0; i < m.rank(); ++i) {
        if (m[i] != 0) {
            dot += v[i] * Rational(m[i]);
        }
    }
    return dot.is_zero();
}

void require_maximal_ideal(const LieElement &x, const char *op)
{
    if (const auto lo = x.min_order(); lo && *lo == 0) {
        throw InputError(std::string(op) + ": Lie element has a coefficient of t-degree 0");
    }
}

} // namespace

LieElement::LieElement(std::size_t params, std::size_t rank, int max_order)
    : params_(params), rank_(rank), max_order_(max_order),
      components_(rank, Series(params, rank, max_order))
{
}

LieElement LieElement::from_term(const LatticeVector &monomial, const DualVector &direction,
                                 const Series &coeff)
{
    if (monomial.rank() != coeff.rank() || direction.rank() != coeff.rank()) {
        throw InputError("Lie term rank mismatch");
    }
    if (monomial.is_zero() || direction.is_zero()) {
        throw InputError("Lie term needs a nonzero monomial and a nonzero direction");
    }
    if (pairing(monomial, direction) != 0) {
        throw InputError("Lie term violates <m, n> = 0: m = " + monomial.str()
                         + ", n = " + direction.str());
    }
    if (!coeff.is_pure_t()) {
        throw InputError("Lie term coefficient must be a pure t-series");
    }
    LieElement out(coeff.params(), coeff.rank(), coeff.max_order());
    const Series shifted = coeff.shift(monomial);
    for (std::size_t i = 0; i < out.rank_; ++i) {
        if (direction[i] != 0) {
            out.components_[i] += shifted * Rational(direction[i]);
        }
    }
    return out;
}

LieElement LieElement::from_terms(std::size_t params, std::size_t rank, int max_order,
                                  std::span<const LieTerm> terms)
{
    LieElement out(params, rank, max_order);
    for (const auto &t : terms) {
        out += from_term(t.monomial, t.direction, t.coeff);
    }
    return out;
}

LieElement LieElement::from_components(std::vector<Series> components)
{
    if (components.empty()) {
        throw InputError("Lie element needs at least one coordinate");
    }
    const auto &f = components.front();
    if (components.size() != f.rank()) {
        throw InputError("Lie element coordinate count must equal the lattice rank");
    }
    LieElement out(f.params(), f.rank(), f.max_order());
    for (std::size_t i = 0; i < components.size(); ++i) {
        f.check_compatible(components[i]);
    }
    out.components_ = std::move(components);
    if (!out.satisfies_invariants()) {
        throw MathError("coordinate series do not define an element of h (perpendicularity violated)");
    }
    return out;
}

bool LieElement::is_zero() const
{
    return std::all_of(components_.begin(), components_.end(),
                       [](const Series &s) { return s.is_zero(); });
}

std::optional<int> LieElement::min_order() const
{
    std::optional<int> lo;
    for (const auto &c : components_) {
        if (auto m = c.min_order(); m && (!lo || *m < *lo)) {
            lo = m;
        }
    }
    return lo;
}

LieElement LieElement::reduce(int n) const
{
    LieElement out(params_, rank_, n);
    for (std::size_t i = 0; i < rank_; ++i) {
        out.components_[i] = components_[i].reduce(n);
    }
    return out;
}

LieElement LieElement::homogeneous_part(int k) const
{
    LieElement out(params_, rank_, max_order_);
    for (std::size_t i = 0; i < rank_; ++i) {
        out.components_[i] = components_[i].homogeneous_part(k);
    }
    return out;
}

LieElement lie_from_function(const Series &f, const DualVector &n)
{
    if (n.rank() != f.rank()) {
        throw InputError("lie_from_function: rank mismatch");
    }
    std::vector<Series> comps;
    for (std::size_t i = 0; i < f.rank(); ++i) {
        comps.push_back(f * Rational(n[i]));
    }
    return LieElement::from_components(std::move(comps));
}

std::vector<DualVector> perpendicular_basis(const LatticeVector &m)
{
    if (m.is_zero()) {
        throw InputError("perpendicular_basis: zero monomial");
    }
    std::size_t p = 0;
    while (m[p] == 0) {
        ++p;
    }
    std::vector<DualVector> basis;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        if (i == p) {
            continue;
        }
        DualVector b(m.rank());
        const std::int64_t s = i > p ? 1 : -1;
        b[p] = s * m[i];
        b[i] = -s * m[p];
        basis.push_back(b.primitive());
    }
    return basis;
}

std::vector<LieTerm> LieElement::terms() const
{
    std::vector<LieTerm> out;
    for (const auto &[m, v] : bucket_by_monomial(*this)) {
        if (m.is_zero() || !perpendicular(m, v)) {
            throw MathError("Lie element outside h at monomial " + m.str());
        }
        std::size_t p = 0;
        while (m[p] == 0) {
            ++p;
        }
        const auto basis = perpendicular_basis(m);
        std::size_t b = 0;
        for (std::size_t i = 0; i < rank_; ++i) {
            if (i == p) {
                continue;
            }
            // The i-th coordinate of basis[b] is the only nonzero i-th coordinate in the basis.
            const Rational scale = Rational(1) / Rational(basis[b][i]);
            Series coeff = v[i] * scale;
            if (!coeff.is_zero()) {
                out.push_back(LieTerm{m, basis[b], std::move(coeff)});
            }
            ++b;
        }
    }
    return out;
}

std::vector<LatticeVector> LieElement::monomials() const
{
    std::vector<LatticeVector> out;
    for (const auto &[m, v] : bucket_by_monomial(*this)) {
        out.push_back(m);
    }
    return out;
}

LieElement LieElement::restrict_to(std::span<const LatticeVector> monomials) const
{
    LieElement out(params_, rank_, max_order_);
    for (std::size_t i = 0; i < rank_; ++i) {
        for (const auto &[key, c] : components_[i].terms()) {
            if (std::find(monomials.begin(), monomials.end(), key.w) != monomials.end()) {
                out.components_[i].add_term(key.t, key.w, c);
            }
        }
    }
    return out;
}

bool LieElement::satisfies_invariants() const
{
    for (const auto &[m, v] : bucket_by_monomial(*this)) {
        if (m.is_zero() || !perpendicular(m, v)) {
            return false;
        }
    }
    return true;
}

void LieElement::check_compatible(const LieElement &o) const
{
    if (params_ != o.params_ || rank_ != o.rank_ || max_order_ != o.max_order_) {
        throw InputError("Lie element shape mismatch (params/rank/truncation order)");
    }
}

LieElement &LieElement::operator+=(const LieElement &o)
{
    check_compatible(o);
    for (std::size_t i = 0; i < rank_; ++i) {
        components_[i] += o.components_[i];
    }
    return *this;
}

LieElement &LieElement::operator-=(const LieElement &o)
{
    check_compatible(o);
    for (std::size_t i = 0; i < rank_; ++i) {
        components_[i] -= o.components_[i];
    }
    return *this;
}

LieElement &LieElement::operator*=(const Rational &c)
{
    for (auto &s : components_) {
        s *= c;
    }
    return *this;
}

std::string LieElement::str() const
{
    const auto ts = terms();
    if (ts.empty()) {
        return "0";
    }
    std::string s;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        if (k != 0) {
            s += " + ";
        }
        const auto &t = ts[k];
        const std::string c = t.coeff.str();
        s += (t.coeff.size() == 1 ? c : "(" + c + ")") + " w^" + t.monomial.str() + " d"
             + t.direction.str();
    }
    return s;
}

Series derivation_apply(const LieElement &x, const Series &s)
{
    if (x.params() != s.params() || x.rank() != s.rank() || x.max_order() != s.max_order()) {
        throw InputError("derivation_apply: shape mismatch between Lie element and series");
    }
    Series out(s.params(), s.rank(), s.max_order());
    for (std::size_t i = 0; i < x.rank(); ++i) {
        const auto &f = x.components()[i];
        if (f.is_zero()) {
            continue;
        }
        out += f * s.euler_coordinate(i);
    }
    return out;
}

LieElement bracket(const LieElement &x, const LieElement &y)
{
    x.check_compatible(y);
    // Commutator of the vector fields: [X, Y]_i = X(G_i) - Y(F_i).
    std::vector<Series> comps;
    comps.reserve(x.rank());
    for (std::size_t i = 0; i < x.rank(); ++i) {
        comps.push_back(derivation_apply(x, y.components()[i]) - derivation_apply(y, x.components()[i]));
    }
    LieElement out(x.params(), x.rank(), x.max_order());
    out += LieElement::from_components(std::move(comps));
    return out;
}

Series group_act(const LieElement &x, const Series &s)
{
    require_maximal_ideal(x, "group_act");
    Series out = s;
    Series term = s;
    for (int k = 1; k <= s.max_order(); ++k) {
        term = derivation_apply(x, term) * frac(1, k);
        if (term.is_zero()) {
            break;
        }
        out += term;
    }
    return out;
}

namespace
{

// B_0 .. B_n.
std::vector<Rational> bernoulli_numbers(int n)
{
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        mpz_class binom = 1; // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            acc += Rational(binom) * b[static_cast<std::size_t>(k)];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    return b;
}

Rational factorial(int n)
{
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return Rational(f);
}

} // namespace

LieElement bch(const LieElement &x, const LieElement &y)
{
    x.check_compatible(y);
    require_maximal_ideal(x, "bch");
    require_maximal_ideal(y, "bch");
    const int n_max = x.max_order();
    const LieElement sum = x + y;
    const LieElement diff = x - y;
    const auto bern = bernoulli_numbers(std::max(n_max, 2));

    // Homogeneous pieces Z_n (degree n in x, y); Z_n has t-order >= n, so n <= N suffices.
    std::vector<LieElement> z;
    z.push_back(LieElement(x.params(), x.rank(), n_max)); // unused Z_0
    z.push_back(sum);

    // nested[{q, r}] = sum over compositions k_1 + ... + k_q = r of
    //                  [Z_{k_1}, [Z_{k_2}, ... [Z_{k_q}, x + y] ... ]]
    std::map<std::pair<int, int>, LieElement> nested;
    const auto nest = [&](auto &&self, int q, int r) -> const LieElement & {
        if (auto it = nested.find({q, r}); it != nested.end()) {
            return it->second;
        }
        LieElement acc(x.params(), x.rank(), n_max);
        if (q == 0) {
            if (r == 0) {
                acc = sum;
            }
        } else {
            for (int k = 1; k <= r - (q - 1); ++k) {
                const LieElement &inner = self(self, q - 1, r - k);
                if (!inner.is_zero() && !z[static_cast<std::size_t>(k)].is_zero()) {
                    acc += bracket(z[static_cast<std::size_t>(k)], inner);
                }
            }
        }
        return nested.emplace(std::pair{q, r}, std::move(acc)).first->second;
    };

    LieElement total = sum;
    for (int n = 1; n < n_max; ++n) {
        LieElement next = bracket(diff, z[static_cast<std::size_t>(n)]) * frac(1, 2);
        for (int p = 1; 2 * p <= n; ++p) {
            const Rational k2p = bern[static_cast<std::size_t>(2 * p)] / factorial(2 * p);
            const LieElement &w = nest(nest, 2 * p, n);
            if (!w.is_zero()) {
                next += w * k2p;
            }
        }
        next *= frac(1, n + 1);
        total += next;
        z.push_back(std::move(next));
    }
    return total;
}

} // namespace wallcross
