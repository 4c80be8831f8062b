#include "wallcross/trees.hpp"

namespace wallcross
{

PlanarTree::PlanarTree() = default;

PlanarTree PlanarTree::graft(const PlanarTree &left, const PlanarTree &right)
{
    PlanarTree t;
    t.node_ = std::make_shared<const Node>(Node{left, right});
    t.leaves_ = left.leaves_ + right.leaves_;
    return t;
}

const PlanarTree &PlanarTree::left() const
{
    if (!node_) {
        throw InputError("leaf has no subtrees");
    }
    return node_->left;
}

const PlanarTree &PlanarTree::right() const
{
    if (!node_) {
        throw InputError("leaf has no subtrees");
    }
    return node_->right;
}

std::string PlanarTree::shape() const
{
    if (is_leaf()) {
        return ".";
    }
    return "(" + node_->left.shape() + node_->right.shape() + ")";
}

bool operator==(const PlanarTree &a, const PlanarTree &b)
{
    if (a.leaves_ != b.leaves_ || a.is_leaf() != b.is_leaf()) {
        return false;
    }
    if (a.is_leaf() || a.node_ == b.node_) {
        return true;
    }
    return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

std::vector<PlanarTree> enumerate_trees(std::size_t d)
{
    if (d == 0) {
        throw InputError("enumerate_trees: need at least one leaf");
    }
    std::vector<std::vector<PlanarTree>> by_size(d + 1);
    by_size[1] = {PlanarTree()};
    for (std::size_t n = 2; n <= d; ++n) {
        for (std::size_t l = 1; l < n; ++l) {
            for (const auto &left : by_size[l]) {
                for (const auto &right : by_size[n - l]) {
                    by_size[n].push_back(PlanarTree::graft(left, right));
                }
            }
        }
    }
    return by_size[d];
}

std::size_t catalan(std::size_t n)
{
    std::vector<std::size_t> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t i = 0; i < m; ++i) {
            c[m] += c[i] * c[m - 1 - i];
        }
    }
    return c[n];
}

LabeledTree::LabeledTree(PlanarTree tree, std::vector<EdgeLabel> leaf_labels, std::vector<Vertex> vertices,
                         EdgeLabel root)
    : tree_(std::move(tree)), leaf_labels_(std::move(leaf_labels)), vertices_(std::move(vertices)), root_(root)
{
}

std::vector<EdgeLabel> LabeledTree::internal_edges() const
{
    std::vector<EdgeLabel> out;
    for (const auto &v : vertices_) {
        if (!(v.out == root_)) {
            out.push_back(v.out);
        }
    }
    return out;
}

std::string label_string(const EdgeLabel &e)
{
    return std::to_string(e.i) + std::to_string(e.j);
}

std::string LabeledTree::str() const
{
    std::size_t leaf = 0;
    std::size_t vertex = 0;
    const auto walk = [&](auto &&self, const PlanarTree &node) -> std::string {
        if (node.is_leaf()) {
            return label_string(leaf_labels_[leaf++]);
        }
        std::string l = self(self, node.left());
        std::string r = self(self, node.right());
        return "(" + l + " " + r + ")->" + label_string(vertices_[vertex++].out);
    };
    return walk(walk, tree_);
}

LabeledTree label_edges(const PlanarTree &t)
{
    std::vector<EdgeLabel> leaf_labels;
    std::vector<LabeledTree::Vertex> vertices;
    std::size_t next = 0;
    // Returns the label of the edge leaving `node`.
    const auto walk = [&](auto &&self, const PlanarTree &node) -> EdgeLabel {
        if (node.is_leaf()) {
            EdgeLabel e{next, next + 1};
            ++next;
            leaf_labels.push_back(e);
            return e;
        }
        const EdgeLabel l = self(self, node.left());
        const EdgeLabel r = self(self, node.right());
        // Incoming ij and jk leave as ik.
        const EdgeLabel out{l.i, r.j};
        vertices.push_back({l, r, out});
        return out;
    };
    const EdgeLabel root = walk(walk, t);
    return LabeledTree(t, std::move(leaf_labels), std::move(vertices), root);
}

long moduli_dimension(std::span<const long> degrees, long out_degree, long k)
{
    if (k < 1 || static_cast<std::size_t>(k) != degrees.size()) {
        throw InputError("moduli_dimension: need k >= 1 input degrees");
    }
    long s = 0;
    for (auto d : degrees) {
        s += d;
    }
    return out_degree - s + k - 2;
}

Rational area_constant(std::span<const Rational> critical_values)
{
    if (critical_values.empty()) {
        throw InputError("area_constant: empty list of critical values");
    }
    Rational a = critical_values.front();
    for (std::size_t i = 1; i < critical_values.size(); ++i) {
        a -= critical_values[i];
    }
    return a;
}

} // namespace wallcross
