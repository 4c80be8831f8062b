#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wallcross/errors.hpp"
#include "wallcross/io.hpp"
#include "wallcross/mc_solver.hpp"
#include "wallcross/polyform.hpp"
#include "wallcross/scattering.hpp"
#include "wallcross/seeds.hpp"
#include "wallcross/svg.hpp"
#include "wallcross/trees.hpp"

namespace py = pybind11;
using namespace wallcross;

namespace
{

using Pair = std::pair<std::int64_t, std::int64_t>;

Diagram load(const std::string &text, std::optional<int> order)
{
    Diagram d = io::parse_diagram(text);
    if (order) {
        if (*order < 1 || *order > d.max_order) {
            throw InputError("order must lie in [1, " + std::to_string(d.max_order) + "]");
        }
        d = reduce(d, *order);
    }
    return d;
}

Loop loop_for(const Diagram &d, std::optional<Pair> start)
{
    return Loop{start ? LatticeVector{start->first, start->second} : free_directions(d).front()};
}

} // namespace

PYBIND11_MODULE(_wallcross, m)
{
    m.doc() = "Scattering diagrams, tropical vertex group and Maurer-Cartan solving (exact rationals)";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);

    m.def("log_seed", [](int exponent, int max_order) { return io::serialize_diagram(log_seed(exponent, max_order)); },
          py::arg("exponent"), py::arg("max_order"),
          "Two-line seed with factors exponent * log(1 + t_i w^{-e_i}), as diagram JSON.");

    m.def("complete",
          [](const std::string &diagram, std::optional<int> order) {
              return io::serialize_diagram(complete(load(diagram, order)));
          },
          py::arg("diagram"), py::arg("order") = py::none(), "Complete a standard seed; returns diagram JSON.");

    m.def("path_ordered_product",
          [](const std::string &diagram, std::optional<Pair> start_ray, std::optional<int> order) {
              const Diagram d = load(diagram, order);
              return path_ordered_product(d, loop_for(d, start_ray)).str();
          },
          py::arg("diagram"), py::arg("start_ray") = py::none(), py::arg("order") = py::none(),
          "Log of the anticlockwise loop product, printed; \"0\" when consistent.");

    m.def("crossing_sequence",
          [](const std::string &diagram, std::optional<Pair> start_ray) {
              const Diagram d = load(diagram, std::nullopt);
              std::vector<std::pair<std::size_t, int>> out;
              for (const auto &c : crossing_sequence(d, loop_for(d, start_ray))) {
                  out.emplace_back(c.wall, c.sign);
              }
              return out;
          },
          py::arg("diagram"), py::arg("start_ray") = py::none(), "List of (wall index, sign).");

    m.def("is_consistent", [](const std::string &diagram) { return is_consistent(load(diagram, std::nullopt)); },
          py::arg("diagram"));

    m.def("act",
          [](const std::string &diagram, Pair monomial, std::optional<std::size_t> wall, bool inverse,
             std::optional<int> order) {
              const Diagram d = load(diagram, order);
              const Series s = Series::monomial(d.params, Diagram::rank, d.max_order, MultiIndex(d.params),
                                                LatticeVector{monomial.first, monomial.second});
              if (!wall) {
                  return group_act(path_ordered_product(d, loop_for(d, std::nullopt)), s).str();
              }
              if (*wall >= d.walls.size()) {
                  throw InputError("wall index out of range");
              }
              const auto &x = d.walls[*wall].log_factor;
              return group_act(inverse ? -x : x, s).str();
          },
          py::arg("diagram"), py::arg("monomial"), py::arg("wall") = py::none(), py::arg("inverse") = false,
          py::arg("order") = py::none(), "Apply a wall automorphism (or the loop product) to w^monomial.");

    m.def("render_svg", [](const std::string &diagram) { return render_svg(load(diagram, std::nullopt)); },
          py::arg("diagram"));

    m.def("trees",
          [](std::size_t leaves) {
              std::vector<std::string> out;
              for (const auto &t : enumerate_trees(leaves)) {
                  out.push_back(label_edges(t).str());
              }
              return out;
          },
          py::arg("leaves"), "Labeled planar trivalent trees with the given number of leaves.");

    m.def("catalan", &catalan, py::arg("n"));

    m.def("mc_solve",
          [](const std::string &problem) {
              io::json j;
              try {
                  j = io::json::parse(problem);
              } catch (const io::json::parse_error &e) {
                  throw InputError(std::string("problem is not valid JSON: ") + e.what());
              }
              const auto prob = io::mc_problem_from_json(j);
              const PolyFormDgLa l(prob.order);
              const PolyForm phi = solve_fixed_point(l, prob.pi, prob.order);
              if (!(solve_tree_sum(l, prob.pi, prob.order) == phi)) {
                  throw MathError("tree-sum solution differs from the fixed-point solution");
              }
              const io::json out{{"order", prob.order},
                                 {"phi", io::polyform_to_json(phi)},
                                 {"mc_residual", io::polyform_to_json(mc_residual(l, phi))},
                                 {"obstruction", io::polyform_to_json(obstruction(l, phi))}};
              return out.dump(2);
          },
          py::arg("problem"), "Solve {order, pi} by fixed point and tree sum; returns JSON.");
}
