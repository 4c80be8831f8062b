#include "wallcross/polyform.hpp"

#include <array>

namespace wallcross
{

int form_degree(FormBasis f)
{
    switch (f) {
    case FormBasis::one:
        return 0;
    case FormBasis::dx1:
    case FormBasis::dx2:
        return 1;
    case FormBasis::dx12:
        return 2;
    }
    return 0;
}

std::string to_string(MatrixBasis b)
{
    static const std::array<const char *, 3> names{"E12", "E13", "E23"};
    return names[static_cast<std::size_t>(b)];
}

std::string to_string(FormBasis f)
{
    static const std::array<const char *, 4> names{"1", "dx1", "dx2", "dx1^dx2"};
    return names[static_cast<std::size_t>(f)];
}

MatrixBasis parse_matrix_basis(const std::string &s)
{
    if (s == "E12") {
        return MatrixBasis::E12;
    }
    if (s == "E13") {
        return MatrixBasis::E13;
    }
    if (s == "E23") {
        return MatrixBasis::E23;
    }
    throw InputError("unknown matrix basis element \"" + s + "\" (expected E12, E13 or E23)");
}

FormBasis parse_form_basis(const std::string &s)
{
    if (s == "1") {
        return FormBasis::one;
    }
    if (s == "dx1") {
        return FormBasis::dx1;
    }
    if (s == "dx2") {
        return FormBasis::dx2;
    }
    if (s == "dx1^dx2" || s == "dx12") {
        return FormBasis::dx12;
    }
    throw InputError("unknown form basis element \"" + s + "\" (expected 1, dx1, dx2 or dx1^dx2)");
}

PolyForm PolyForm::term(int order, MatrixBasis b, FormBasis f, int x1, int x2, Rational c)
{
    if (order < 0 || x1 < 0 || x2 < 0) {
        throw InputError("polynomial form exponents and orders must be non-negative");
    }
    PolyForm p;
    p.add_term(PolyFormKey{order, b, f, x1, x2}, c);
    return p;
}

std::optional<int> PolyForm::min_order() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first.order;
}

PolyForm PolyForm::truncate(int n) const
{
    PolyForm out;
    for (const auto &[k, c] : terms_) {
        if (k.order > n) {
            break;
        }
        out.terms_.emplace_hint(out.terms_.end(), k, c);
    }
    return out;
}

PolyForm PolyForm::degree_part(int p) const
{
    PolyForm out;
    for (const auto &[k, c] : terms_) {
        if (form_degree(k.form) == p) {
            out.terms_.emplace_hint(out.terms_.end(), k, c);
        }
    }
    return out;
}

void PolyForm::add_term(const PolyFormKey &k, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

PolyForm &PolyForm::operator+=(const PolyForm &o)
{
    for (const auto &[k, c] : o.terms_) {
        add_term(k, c);
    }
    return *this;
}

PolyForm &PolyForm::operator-=(const PolyForm &o)
{
    for (const auto &[k, c] : o.terms_) {
        add_term(k, -c);
    }
    return *this;
}

PolyForm &PolyForm::operator*=(const Rational &c)
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

std::string PolyForm::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        if (!first) {
            s += c < 0 ? " - " : " + ";
        } else if (c < 0) {
            s += "-";
        }
        first = false;
        const Rational mag = c < 0 ? Rational(-c) : c;
        std::string body;
        if (k.order > 0) {
            body += k.order == 1 ? "s" : "s^" + std::to_string(k.order);
        }
        body += (body.empty() ? "" : " ") + to_string(k.basis);
        const auto var = [&](int e, const char *name) {
            if (e > 0) {
                body += std::string(" ") + name + (e == 1 ? "" : "^" + std::to_string(e));
            }
        };
        var(k.x1, "x1");
        var(k.x2, "x2");
        if (k.form != FormBasis::one) {
            body += " " + to_string(k.form);
        }
        s += mag == 1 ? body : to_display_string(mag) + " " + body;
    }
    return s;
}

namespace
{

// [E_a, E_b] in the nilpotent algebra: (basis, sign) or nothing.
std::optional<std::pair<MatrixBasis, int>> matrix_bracket(MatrixBasis a, MatrixBasis b)
{
    if (a == MatrixBasis::E12 && b == MatrixBasis::E23) {
        return std::pair{MatrixBasis::E13, 1};
    }
    if (a == MatrixBasis::E23 && b == MatrixBasis::E12) {
        return std::pair{MatrixBasis::E13, -1};
    }
    return std::nullopt;
}

// dx_I ^ dx_J: (basis, sign) or nothing.
std::optional<std::pair<FormBasis, int>> wedge(FormBasis a, FormBasis b)
{
    if (a == FormBasis::one) {
        return std::pair{b, 1};
    }
    if (b == FormBasis::one) {
        return std::pair{a, 1};
    }
    if (a == FormBasis::dx1 && b == FormBasis::dx2) {
        return std::pair{FormBasis::dx12, 1};
    }
    if (a == FormBasis::dx2 && b == FormBasis::dx1) {
        return std::pair{FormBasis::dx12, -1};
    }
    return std::nullopt;
}

} // namespace

PolyForm PolyFormDgLa::differential(const Element &x) const
{
    PolyForm out;
    for (const auto &[k, c] : x.terms()) {
        switch (k.form) {
        case FormBasis::one:
            if (k.x1 > 0) {
                out.add_term({k.order, k.basis, FormBasis::dx1, k.x1 - 1, k.x2}, c * k.x1);
            }
            if (k.x2 > 0) {
                out.add_term({k.order, k.basis, FormBasis::dx2, k.x1, k.x2 - 1}, c * k.x2);
            }
            break;
        case FormBasis::dx1: // d(p dx1) = -(dp/dx2) dx1^dx2
            if (k.x2 > 0) {
                out.add_term({k.order, k.basis, FormBasis::dx12, k.x1, k.x2 - 1}, -c * k.x2);
            }
            break;
        case FormBasis::dx2: // d(p dx2) = (dp/dx1) dx1^dx2
            if (k.x1 > 0) {
                out.add_term({k.order, k.basis, FormBasis::dx12, k.x1 - 1, k.x2}, c * k.x1);
            }
            break;
        case FormBasis::dx12:
            break;
        }
    }
    return out;
}

PolyForm PolyFormDgLa::bracket(const Element &x, const Element &y) const
{
    PolyForm out;
    for (const auto &[ka, ca] : x.terms()) {
        if (ka.order > max_order_) {
            break;
        }
        for (const auto &[kb, cb] : y.terms()) {
            if (ka.order + kb.order > max_order_) {
                break;
            }
            const auto m = matrix_bracket(ka.basis, kb.basis);
            if (!m) {
                continue;
            }
            const auto f = wedge(ka.form, kb.form);
            if (!f) {
                continue;
            }
            out.add_term({ka.order + kb.order, m->first, f->first, ka.x1 + kb.x1, ka.x2 + kb.x2},
                         ca * cb * (m->second * f->second));
        }
    }
    return out;
}

PolyForm PolyFormDgLa::homotopy(const Element &x) const
{
    PolyForm out;
    for (const auto &[k, c] : x.terms()) {
        const int weight = k.x1 + k.x2 + form_degree(k.form);
        if (k.form == FormBasis::one) {
            continue;
        }
        const Rational scale = c / weight;
        switch (k.form) {
        case FormBasis::dx1: // i_E dx1 = x1
            out.add_term({k.order, k.basis, FormBasis::one, k.x1 + 1, k.x2}, scale);
            break;
        case FormBasis::dx2: // i_E dx2 = x2
            out.add_term({k.order, k.basis, FormBasis::one, k.x1, k.x2 + 1}, scale);
            break;
        case FormBasis::dx12: // i_E (dx1^dx2) = x1 dx2 - x2 dx1
            out.add_term({k.order, k.basis, FormBasis::dx2, k.x1 + 1, k.x2}, scale);
            out.add_term({k.order, k.basis, FormBasis::dx1, k.x1, k.x2 + 1}, -scale);
            break;
        case FormBasis::one:
            break;
        }
    }
    return out;
}

PolyForm PolyFormDgLa::project(const Element &x) const
{
    PolyForm out;
    for (const auto &[k, c] : x.terms()) {
        if (k.form == FormBasis::one && k.x1 == 0 && k.x2 == 0) {
            out.add_term(k, c);
        }
    }
    return out;
}

} // namespace wallcross
