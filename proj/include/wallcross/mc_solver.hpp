#ifndef WALLCROSS_MC_SOLVER_HPP
#define WALLCROSS_MC_SOLVER_HPP

#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "trees.hpp"

namespace wallcross
{

// A filtered differential graded Lie algebra together with a homotopy retract
// (H, P, i) satisfying dH + Hd = I - iP. The filtration is by powers of a formal
// parameter; truncate(x, n) drops everything of order > n.
template <typename L>
concept DgLaContract = requires(const L &l, const typename L::Element &x, int n) {
    typename L::Element;
    { l.zero() } -> std::same_as<typename L::Element>;
    { l.max_order() } -> std::convertible_to<int>;
    { l.differential(x) } -> std::same_as<typename L::Element>;
    { l.bracket(x, x) } -> std::same_as<typename L::Element>;
    { l.homotopy(x) } -> std::same_as<typename L::Element>;
    { l.project(x) } -> std::same_as<typename L::Element>;
    { l.include(x) } -> std::same_as<typename L::Element>;
    { l.truncate(x, n) } -> std::same_as<typename L::Element>;
    { l.min_order(x) } -> std::same_as<std::optional<int>>;
    { x + x } -> std::convertible_to<typename L::Element>;
    { x - x } -> std::convertible_to<typename L::Element>;
    { x * Rational(1) } -> std::convertible_to<typename L::Element>;
    { x == x } -> std::convertible_to<bool>;
    { x.is_zero() } -> std::convertible_to<bool>;
};

namespace detail
{

template <DgLaContract L>
void require_positive_order(const L &l, const typename L::Element &pi, int n)
{
    if (const auto lo = l.min_order(pi); lo && *lo < 1) {
        throw InputError("Maurer-Cartan input has a part of filtration order 0");
    }
    if (n < 1 || n > l.max_order()) {
        throw InputError("Maurer-Cartan order " + std::to_string(n) + " outside [1, "
                         + std::to_string(l.max_order()) + "]");
    }
}

template <DgLaContract L>
typename L::Element minus_half_h(const L &l, const typename L::Element &x)
{
    return l.homotopy(x) * frac(-1, 2);
}

} // namespace detail

// Fixed-point iteration Phi <- Pi - 1/2 H[Phi, Phi] mod order n + 1. Each pass fixes one more
// order, so the iterate is stable after at most n passes.
template <DgLaContract L>
typename L::Element solve_fixed_point(const L &l, const typename L::Element &pi, int n)
{
    detail::require_positive_order(l, pi, n);
    const auto base = l.truncate(pi, n);
    auto phi = base;
    for (int pass = 0; pass <= n; ++pass) {
        auto next = l.truncate(base + detail::minus_half_h(l, l.bracket(phi, phi)), n);
        if (next == phi) {
            return phi;
        }
        phi = std::move(next);
    }
    throw MathError("fixed-point iteration did not stabilize within " + std::to_string(n) + " passes");
}

// Sum over k <= n and all planar trivalent k-trees of l_{k,T}(Pi, ..., Pi): bracket at
// every vertex, -1/2 H on every internal edge and on the outgoing edge; l_1 = identity.
template <DgLaContract L>
typename L::Element solve_tree_sum(const L &l, const typename L::Element &pi, int n)
{
    using E = typename L::Element;
    detail::require_positive_order(l, pi, n);
    const E input = l.truncate(pi, n);
    E phi = input;
    const std::function<E(const E &, const E &)> vertex = [&](const E &a, const E &b) {
        return l.truncate(l.bracket(a, b), n);
    };
    const std::function<E(const E &)> edge = [&](const E &a) { return detail::minus_half_h(l, a); };
    const std::function<E(const E &)> root = [](const E &a) { return a; };
    for (int k = 2; k <= n; ++k) {
        const std::vector<E> leaves(static_cast<std::size_t>(k), input);
        for (const auto &tree : enumerate_trees(static_cast<std::size_t>(k))) {
            phi = phi + evaluate_tree<E>(tree, leaves, vertex, edge, root, EdgePlacement::internal_and_root);
        }
    }
    return l.truncate(phi, n);
}

// d Phi + 1/2 [Phi, Phi] mod order n + 1 (default: the algebra's own order).
template <DgLaContract L>
typename L::Element mc_residual(const L &l, const typename L::Element &phi, std::optional<int> n = {})
{
    const int order = n.value_or(l.max_order());
    return l.truncate(l.differential(phi) + l.bracket(phi, phi) * frac(1, 2), order);
}

// i P [Phi, Phi]: vanishes iff a fixed-point solution (with closed input) solves MC.
template <DgLaContract L>
typename L::Element obstruction(const L &l, const typename L::Element &phi, std::optional<int> n = {})
{
    const int order = n.value_or(l.max_order());
    return l.truncate(l.include(l.project(l.bracket(phi, phi))), order);
}

} // namespace wallcross

#endif
