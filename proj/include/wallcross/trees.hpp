#ifndef WALLCROSS_TREES_HPP
#define WALLCROSS_TREES_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace wallcross
{

// Directed trivalent planar tree up to planar topological type: a leaf, or a vertex
// with an ordered (left, right) pair of incoming subtrees and one outgoing edge.
class PlanarTree
{
public:
    // The 1-leaf tree.
    PlanarTree();
    static PlanarTree graft(const PlanarTree &left, const PlanarTree &right);

    [[nodiscard]] bool is_leaf() const noexcept { return node_ == nullptr; }
    [[nodiscard]] const PlanarTree &left() const;
    [[nodiscard]] const PlanarTree &right() const;

    [[nodiscard]] std::size_t leaves() const noexcept { return leaves_; }
    [[nodiscard]] std::size_t internal_vertices() const noexcept { return leaves_ - 1; }
    [[nodiscard]] std::size_t internal_edges() const noexcept { return leaves_ < 2 ? 0 : leaves_ - 2; }

    // Plain shape, e.g. "((..).)".
    [[nodiscard]] std::string shape() const;

    friend bool operator==(const PlanarTree &a, const PlanarTree &b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    std::size_t leaves_ = 1;
};

struct PlanarTree::Node {
    PlanarTree left;
    PlanarTree right;
};

// Every planar topological type with d leaves (Catalan(d - 1) of them), in a fixed order:
// trees are grouped by the leaf count of the left subtree, ascending.
std::vector<PlanarTree> enumerate_trees(std::size_t d);

std::size_t catalan(std::size_t n);

// Edge label ij, 0 <= i < j <= d.
struct EdgeLabel {
    std::size_t i;
    std::size_t j;

    friend bool operator==(const EdgeLabel &, const EdgeLabel &) = default;
};

// Labels of a tree in post-order: a leaf holds one label, an internal vertex holds the
// label of its outgoing edge after both subtrees.
class LabeledTree
{
public:
    struct Vertex {
        EdgeLabel in_left;
        EdgeLabel in_right;
        EdgeLabel out;
    };

    LabeledTree(PlanarTree tree, std::vector<EdgeLabel> leaf_labels, std::vector<Vertex> vertices,
                EdgeLabel root);

    [[nodiscard]] const PlanarTree &tree() const noexcept { return tree_; }
    [[nodiscard]] const std::vector<EdgeLabel> &leaf_labels() const noexcept { return leaf_labels_; }
    // Internal vertices in post-order.
    [[nodiscard]] const std::vector<Vertex> &vertices() const noexcept { return vertices_; }
    [[nodiscard]] EdgeLabel root() const noexcept { return root_; }
    // Labels of the internal (finite) edges.
    [[nodiscard]] std::vector<EdgeLabel> internal_edges() const;

    // Bracketed form with edge labels, e.g. "((01 12)->02 23)->03".
    [[nodiscard]] std::string str() const;

private:
    PlanarTree tree_;
    std::vector<EdgeLabel> leaf_labels_;
    std::vector<Vertex> vertices_;
    EdgeLabel root_;
};

LabeledTree label_edges(const PlanarTree &t);

std::string label_string(const EdgeLabel &e);

// Where the unary edge operation is applied.
enum class EdgePlacement {
    internal_only,     // A-infinity style products: root handled by root_op alone
    internal_and_root, // Maurer-Cartan tree sum: -1/2 H also on the outgoing edge
};

// Folds vertex_op over the tree in planar order with the leaves as inputs. edge_op is
// applied to the value carried by every internal edge; root_op is applied at the root
// (after edge_op when the placement includes the root). A 1-leaf tree yields
// root_op(leaf).
template <typename T>
T evaluate_tree(const PlanarTree &t, std::span<const T> leaves,
                const std::function<T(const T &, const T &)> &vertex_op,
                const std::function<T(const T &)> &edge_op, const std::function<T(const T &)> &root_op,
                EdgePlacement placement = EdgePlacement::internal_only)
{
    if (leaves.size() != t.leaves()) {
        throw InputError("evaluate_tree: tree has " + std::to_string(t.leaves()) + " leaves, got "
                         + std::to_string(leaves.size()) + " inputs");
    }
    std::size_t next = 0;
    const auto walk = [&](auto &&self, const PlanarTree &node) -> T {
        if (node.is_leaf()) {
            return leaves[next++];
        }
        T l = self(self, node.left());
        T r = self(self, node.right());
        return vertex_op(node.left().is_leaf() ? l : edge_op(l), node.right().is_leaf() ? r : edge_op(r));
    };
    T value = walk(walk, t);
    if (placement == EdgePlacement::internal_and_root && !t.is_leaf()) {
        value = edge_op(value);
    }
    return root_op(value);
}

// Same fold, but the edge operation sees the ij label of the edge it acts on
// (H_ij depends on the pair of functions f_i, f_j).
template <typename T>
T evaluate_labeled_tree(const LabeledTree &lt, std::span<const T> leaves,
                        const std::function<T(const T &, const T &, EdgeLabel)> &vertex_op,
                        const std::function<T(const T &, EdgeLabel)> &edge_op,
                        const std::function<T(const T &, EdgeLabel)> &root_op)
{
    const PlanarTree &t = lt.tree();
    if (leaves.size() != t.leaves()) {
        throw InputError("evaluate_labeled_tree: arity mismatch");
    }
    std::size_t next_leaf = 0;
    std::size_t next_vertex = 0;
    const auto walk = [&](auto &&self, const PlanarTree &node) -> T {
        if (node.is_leaf()) {
            return leaves[next_leaf++];
        }
        T l = self(self, node.left());
        T r = self(self, node.right());
        const auto &v = lt.vertices()[next_vertex++];
        if (!node.left().is_leaf()) {
            l = edge_op(l, v.in_left);
        }
        if (!node.right().is_leaf()) {
            r = edge_op(r, v.in_right);
        }
        return vertex_op(l, r, v.out);
    };
    return root_op(walk(walk, t), lt.root());
}

// Real dimension deg(q_0k) - sum_i deg(q_i(i+1)) + k - 2 of the gradient flow tree moduli.
long moduli_dimension(std::span<const long> degrees, long out_degree, long k);

// A = f_0k(q_0k) - sum_i f_i(i+1)(q_i(i+1)); the first entry is the output value.
Rational area_constant(std::span<const Rational> critical_values);

} // namespace wallcross

#endif
