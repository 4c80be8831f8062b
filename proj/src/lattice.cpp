#include "wallcross/lattice.hpp"

#include <cctype>

namespace wallcross
{

std::string to_fraction_string(const Rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display_string(const Rational &q)
{
    return q.get_str();
}

Rational parse_rational(const std::string &text)
{
    const auto bad = [&] { return InputError("malformed rational: \"" + text + "\""); };
    if (text.empty()) {
        throw bad();
    }
    const auto slash = text.find('/');
    const auto valid_int = [](const std::string &s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
            i = 1;
        }
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                return false;
            }
        }
        return true;
    };
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw bad();
    }
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    mpz_class n(num), d(den);
    if (d == 0) {
        throw InputError("zero denominator in rational: \"" + text + "\"");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

MultiIndex::MultiIndex(std::vector<int> degrees) : degrees_(std::move(degrees))
{
    for (auto d : degrees_) {
        if (d < 0) {
            throw InputError("multi-index entries must be non-negative");
        }
        total_ += d;
    }
}

MultiIndex operator+(const MultiIndex &a, const MultiIndex &b)
{
    if (a.size() != b.size()) {
        throw InputError("multi-index length mismatch");
    }
    MultiIndex out(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.degrees_[i] += b.degrees_[i];
    }
    out.total_ = a.total_ + b.total_;
    return out;
}

std::int64_t pairing(const LatticeVector &m, const DualVector &n)
{
    if (m.rank() != n.rank()) {
        throw InputError("pairing: rank mismatch " + std::to_string(m.rank()) + " vs "
                         + std::to_string(n.rank()));
    }
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        s += m[i] * n[i];
    }
    return s;
}

namespace
{

void require_planar(const LatticeVector &v)
{
    if (v.rank() != 2) {
        throw InputError("planar operation on a rank " + std::to_string(v.rank()) + " vector");
    }
}

} // namespace

std::int64_t cross(const LatticeVector &a, const LatticeVector &b)
{
    require_planar(a);
    require_planar(b);
    return a[0] * b[1] - a[1] * b[0];
}

DualVector rotate90(const LatticeVector &v)
{
    require_planar(v);
    return DualVector{-v[1], v[0]};
}

LatticeVector rotate90_m(const LatticeVector &v)
{
    require_planar(v);
    return LatticeVector{-v[1], v[0]};
}

LatticeVector as_lattice(const DualVector &n)
{
    return LatticeVector(n.coords());
}

DualVector as_dual(const LatticeVector &m)
{
    return DualVector(m.coords());
}

} // namespace wallcross
