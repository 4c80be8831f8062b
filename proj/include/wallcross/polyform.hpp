#ifndef WALLCROSS_POLYFORM_HPP
#define WALLCROSS_POLYFORM_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "lattice.hpp"

namespace wallcross
{

// Strictly upper-triangular 3x3 basis; the only nonzero bracket is [E12, E23] = E13.
enum class MatrixBasis { E12 = 0, E13 = 1, E23 = 2 };

// Constant-coefficient forms on the plane: 1, dx1, dx2, dx1^dx2.
enum class FormBasis { one = 0, dx1 = 1, dx2 = 2, dx12 = 3 };

int form_degree(FormBasis f);
std::string to_string(MatrixBasis b);
std::string to_string(FormBasis f);
MatrixBasis parse_matrix_basis(const std::string &s);
FormBasis parse_form_basis(const std::string &s);

// s^order * E (x) x1^a x2^b dx_I
struct PolyFormKey {
    int order = 0;
    MatrixBasis basis = MatrixBasis::E12;
    FormBasis form = FormBasis::one;
    int x1 = 0;
    int x2 = 0;

    friend auto operator<=>(const PolyFormKey &, const PolyFormKey &) = default;
};

// A g-valued polynomial differential form on the plane with coefficients in Q[s]
// (s is the formal order parameter).
class PolyForm
{
public:
    using term_map = std::map<PolyFormKey, Rational>;

    PolyForm() = default;
    static PolyForm term(int order, MatrixBasis b, FormBasis f, int x1, int x2, Rational c = Rational(1));

    [[nodiscard]] const term_map &terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::optional<int> min_order() const;
    [[nodiscard]] PolyForm truncate(int n) const;
    [[nodiscard]] PolyForm degree_part(int p) const;

    void add_term(const PolyFormKey &k, const Rational &c);

    PolyForm &operator+=(const PolyForm &o);
    PolyForm &operator-=(const PolyForm &o);
    PolyForm &operator*=(const Rational &c);
    friend PolyForm operator+(PolyForm a, const PolyForm &b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm &b) { return a -= b; }
    friend PolyForm operator-(PolyForm a) { return a *= Rational(-1); }
    friend PolyForm operator*(const Rational &c, PolyForm a) { return a *= c; }
    friend PolyForm operator*(PolyForm a, const Rational &c) { return a *= c; }
    friend bool operator==(const PolyForm &, const PolyForm &) = default;

    // "-1/2 s^2 E13 x1 dx2 + ..."; "0" for zero.
    [[nodiscard]] std::string str() const;

private:
    term_map terms_;
};

// g (x) Omega_poly(R^2) with exterior derivative, wedge-commutator bracket, the radial
// homotopy H(x^a dx_I) = x^a (i_E dx_I) / (|a| + |I|), P = value of the 0-form part at the
// origin, and i = constant extension. dH + Hd = I - iP holds exactly.
//
// All operations reduce modulo s^{max_order + 1}.
class PolyFormDgLa
{
public:
    using Element = PolyForm;

    explicit PolyFormDgLa(int max_order) : max_order_(max_order) {}

    [[nodiscard]] int max_order() const noexcept { return max_order_; }
    [[nodiscard]] Element zero() const { return {}; }
    [[nodiscard]] Element truncate(const Element &x, int n) const { return x.truncate(n); }
    [[nodiscard]] std::optional<int> min_order(const Element &x) const { return x.min_order(); }

    [[nodiscard]] Element differential(const Element &x) const;
    [[nodiscard]] Element bracket(const Element &x, const Element &y) const;
    [[nodiscard]] Element homotopy(const Element &x) const;
    [[nodiscard]] Element project(const Element &x) const;
    [[nodiscard]] Element include(const Element &h) const { return h; }

private:
    int max_order_;
};

} // namespace wallcross

#endif
