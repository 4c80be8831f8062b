#include "wallcross/series.hpp"

namespace wallcross
{

Series::Series(std::size_t params, std::size_t rank, int max_order)
    : params_(params), rank_(rank), max_order_(max_order)
{
    if (rank == 0) {
        throw InputError("series lattice rank must be >= 1");
    }
    if (max_order < 0) {
        throw InputError("series truncation order must be non-negative");
    }
}

Series Series::one(std::size_t params, std::size_t rank, int max_order)
{
    return monomial(params, rank, max_order, MultiIndex(params), LatticeVector(rank));
}

Series Series::monomial(std::size_t params, std::size_t rank, int max_order, MultiIndex t,
                        LatticeVector w, Rational coeff)
{
    Series s(params, rank, max_order);
    s.add_term(t, w, coeff);
    return s;
}

std::optional<int> Series::min_order() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first.t.total();
}

bool Series::is_pure_t() const
{
    for (const auto &[k, c] : terms_) {
        if (!k.w.is_zero()) {
            return false;
        }
    }
    return true;
}

Rational Series::coefficient(const MultiIndex &t, const LatticeVector &w) const
{
    const auto it = terms_.find(SeriesKey{t, w});
    return it == terms_.end() ? Rational(0) : it->second;
}

Series Series::reduce(int n) const
{
    Series out(params_, rank_, n);
    for (const auto &[k, c] : terms_) {
        if (k.t.total() > n) {
            break;
        }
        out.terms_.emplace_hint(out.terms_.end(), k, c);
    }
    return out;
}

Series Series::homogeneous_part(int k) const
{
    Series out(params_, rank_, max_order_);
    for (const auto &[key, c] : terms_) {
        if (key.t.total() == k) {
            out.terms_.emplace_hint(out.terms_.end(), key, c);
        }
    }
    return out;
}

void Series::add_term(const MultiIndex &t, const LatticeVector &w, const Rational &c)
{
    if (t.size() != params_ || w.rank() != rank_) {
        throw InputError("series term shape mismatch: expected " + std::to_string(params_)
                         + " parameters and rank " + std::to_string(rank_));
    }
    if (t.total() > max_order_ || c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(SeriesKey{t, w}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void Series::check_compatible(const Series &o) const
{
    if (params_ != o.params_ || rank_ != o.rank_) {
        throw InputError("series shape mismatch: (" + std::to_string(params_) + " params, rank "
                         + std::to_string(rank_) + ") vs (" + std::to_string(o.params_)
                         + " params, rank " + std::to_string(o.rank_) + ")");
    }
    if (max_order_ != o.max_order_) {
        throw InputError("series truncation order mismatch: " + std::to_string(max_order_) + " vs "
                         + std::to_string(o.max_order_));
    }
}

Series &Series::operator+=(const Series &o)
{
    check_compatible(o);
    for (const auto &[k, c] : o.terms_) {
        add_term(k.t, k.w, c);
    }
    return *this;
}

Series &Series::operator-=(const Series &o)
{
    check_compatible(o);
    for (const auto &[k, c] : o.terms_) {
        add_term(k.t, k.w, -c);
    }
    return *this;
}

Series &Series::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_) {
        v *= c;
    }
    return *this;
}

Series operator*(const Series &a, const Series &b)
{
    a.check_compatible(b);
    Series out(a.params_, a.rank_, a.max_order_);
    for (const auto &[ka, ca] : a.terms_) {
        const int room = a.max_order_ - ka.t.total();
        if (room < 0) {
            break;
        }
        for (const auto &[kb, cb] : b.terms_) {
            // Keys are ordered by |j| first, so nothing further fits.
            if (kb.t.total() > room) {
                break;
            }
            out.add_term(ka.t + kb.t, ka.w + kb.w, ca * cb);
        }
    }
    return out;
}

Series Series::euler(const DualVector &n) const
{
    Series out(params_, rank_, max_order_);
    for (const auto &[k, c] : terms_) {
        const auto p = pairing(k.w, n);
        if (p != 0) {
            out.terms_.emplace_hint(out.terms_.end(), k, c * Rational(p));
        }
    }
    return out;
}

Series Series::euler_coordinate(std::size_t i) const
{
    Series out(params_, rank_, max_order_);
    for (const auto &[k, c] : terms_) {
        const auto p = k.w[i];
        if (p != 0) {
            out.terms_.emplace_hint(out.terms_.end(), k, c * Rational(p));
        }
    }
    return out;
}

Series Series::shift(const LatticeVector &m) const
{
    Series out(params_, rank_, max_order_);
    for (const auto &[k, c] : terms_) {
        out.terms_.emplace(SeriesKey{k.t, k.w + m}, c);
    }
    return out;
}

std::string Series::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        Rational mag = c;
        if (first) {
            if (c < 0) {
                s += "-";
                mag = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) {
                mag = -c;
            }
        }
        first = false;
        std::string body;
        for (std::size_t i = 0; i < k.t.size(); ++i) {
            if (k.t[i] == 0) {
                continue;
            }
            if (!body.empty()) {
                body += " ";
            }
            body += "t" + std::to_string(i + 1);
            if (k.t[i] != 1) {
                body += "^" + std::to_string(k.t[i]);
            }
        }
        if (!k.w.is_zero()) {
            if (!body.empty()) {
                body += " ";
            }
            body += "w^" + k.w.str();
        }
        if (body.empty()) {
            s += to_display_string(mag);
        } else if (mag == 1) {
            s += body;
        } else {
            s += to_display_string(mag) + " " + body;
        }
    }
    return s;
}

Series add(const Series &a, const Series &b)
{
    return a + b;
}

Series mul(const Series &a, const Series &b)
{
    return a * b;
}

Series power(const Series &a, unsigned k)
{
    Series out = Series::one(a.params(), a.rank(), a.max_order());
    for (unsigned i = 0; i < k; ++i) {
        out = out * a;
    }
    return out;
}

namespace
{

void require_in_maximal_ideal(const Series &a, const char *op)
{
    if (const auto lo = a.min_order(); lo && *lo == 0) {
        throw InputError(std::string(op) + ": argument has a term of t-degree 0 (not in the maximal ideal)");
    }
}

} // namespace

Series exp_positive(const Series &a)
{
    require_in_maximal_ideal(a, "exp_positive");
    Series out = Series::one(a.params(), a.rank(), a.max_order());
    Series term = out;
    for (int k = 1; k <= a.max_order(); ++k) {
        term = term * a;
        term *= frac(1, k);
        if (term.is_zero()) {
            break;
        }
        out += term;
    }
    return out;
}

Series log_one_plus(const Series &a)
{
    require_in_maximal_ideal(a, "log_one_plus");
    Series out = Series::zero(a.params(), a.rank(), a.max_order());
    Series pw = Series::one(a.params(), a.rank(), a.max_order());
    for (int k = 1; k <= a.max_order(); ++k) {
        pw = pw * a;
        if (pw.is_zero()) {
            break;
        }
        out += pw * frac(k % 2 == 1 ? 1 : -1, k);
    }
    return out;
}

} // namespace wallcross
