#include "wallcross/seeds.hpp"

namespace wallcross
{

Wall seed_wall(const LatticeVector &mode, const Series &f)
{
    Wall w{mode, Support{SupportKind::line, mode}, lie_from_function(f, rotate90(mode)), -rotate90(mode)};
    validate_wall(w);
    return w;
}

Diagram standard_seed(const LatticeVector &m1, const Series &f1, const LatticeVector &m2, const Series &f2)
{
    f1.check_compatible(f2);
    Diagram d{f1.params(), f1.max_order(), {seed_wall(m1, f1), seed_wall(m2, f2)}};
    validate_diagram(d);
    return d;
}

Diagram log_seed(int exponent, int max_order)
{
    const LatticeVector e1{1, 0};
    const LatticeVector e2{0, 1};
    const auto f = [&](std::size_t i, const LatticeVector &e) {
        MultiIndex t(std::vector<int>{i == 0 ? 1 : 0, i == 1 ? 1 : 0});
        return log_one_plus(Series::monomial(2, 2, max_order, t, -e)) * Rational(exponent);
    };
    return standard_seed(e1, f(0, e1), e2, f(1, e2));
}

} // namespace wallcross
