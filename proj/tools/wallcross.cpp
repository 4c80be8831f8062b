// wallcross command-line tool.
//
//   wallcross complete <diagram.json> [--order N] [--output out.json] [--trace]
//   wallcross product  <diagram.json> [--start-ray a,b] [--order N]
//   wallcross act      <diagram.json> --monomial a,b [--wall I [--inverse]] [--start-ray a,b] [--order N]
//   wallcross trees    --leaves d
//   wallcross mc-solve <problem.json> [--order N] [--output out.json]
//   wallcross render   <diagram.json> --svg out.svg [--order N]
//
// Exit codes: 0 success, 2 input error, 3 mathematical assertion failure.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wallcross/errors.hpp"
#include "wallcross/io.hpp"
#include "wallcross/mc_solver.hpp"
#include "wallcross/polyform.hpp"
#include "wallcross/scattering.hpp"
#include "wallcross/svg.hpp"
#include "wallcross/trees.hpp"

namespace
{

using namespace wallcross;

constexpr int exit_input = 2;
constexpr int exit_math = 3;

LatticeVector parse_vector(const std::string &text, const char *what)
{
    std::vector<std::int64_t> coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::int64_t v = 0;
        const auto *first = part.data();
        const auto *last = part.data() + part.size();
        while (first != last && *first == ' ') {
            ++first;
        }
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) {
            throw InputError(std::string(what) + ": expected \"a,b\" with integers, got \"" + text + "\"");
        }
        coords.push_back(v);
    }
    if (coords.size() != Diagram::rank) {
        throw InputError(std::string(what) + ": expected two coordinates, got \"" + text + "\"");
    }
    return LatticeVector(coords);
}

Diagram load(const std::string &path, std::optional<int> order)
{
    Diagram d = io::read_diagram_file(path);
    if (order) {
        if (*order < 1) {
            throw InputError("--order must be >= 1");
        }
        if (*order > d.max_order) {
            throw InputError("--order " + std::to_string(*order) + " exceeds the file's max_order "
                             + std::to_string(d.max_order));
        }
        d = reduce(d, *order);
    }
    return d;
}

Loop loop_for(const Diagram &d, const std::optional<std::string> &start)
{
    return Loop{start ? parse_vector(*start, "--start-ray") : free_directions(d).front()};
}

void emit(const std::optional<std::string> &path, const std::string &text)
{
    if (path) {
        io::write_text_file(*path, text);
    } else {
        std::cout << text;
    }
}

struct Options {
    std::string input;
    std::optional<int> order;
    std::optional<std::string> output;
    std::optional<std::string> start_ray;
    std::optional<std::string> monomial;
    std::optional<std::size_t> wall;
    std::optional<std::string> svg;
    std::size_t leaves = 0;
    bool inverse = false;
    bool trace = false;
};

int cmd_complete(const Options &o)
{
    const Diagram d = load(o.input, o.order);
    std::vector<CompletionStage> stages;
    CompletionOptions opts;
    if (o.trace) {
        opts.trace = &stages;
    }
    const Diagram c = complete(d, opts);
    for (const auto &s : stages) {
        std::cerr << "order " << s.order << ": defect " << s.defect.str();
        for (const auto &a : s.added) {
            std::cerr << "  +wall " << a.str();
        }
        std::cerr << '\n';
    }
    emit(o.output, io::serialize_diagram(c));
    return 0;
}

int cmd_product(const Options &o)
{
    const Diagram d = load(o.input, o.order);
    std::cout << path_ordered_product(d, loop_for(d, o.start_ray)).str() << '\n';
    return 0;
}

int cmd_act(const Options &o)
{
    const Diagram d = load(o.input, o.order);
    const LatticeVector m = parse_vector(*o.monomial, "--monomial");
    const Series s = Series::monomial(d.params, Diagram::rank, d.max_order, MultiIndex(d.params), m);
    LieElement x(d.params, Diagram::rank, d.max_order);
    if (o.wall) {
        if (*o.wall >= d.walls.size()) {
            throw InputError("--wall " + std::to_string(*o.wall) + " out of range (diagram has "
                             + std::to_string(d.walls.size()) + " walls)");
        }
        x = d.walls[*o.wall].log_factor;
        if (o.inverse) {
            x = -x;
        }
    } else {
        x = path_ordered_product(d, loop_for(d, o.start_ray));
    }
    std::cout << group_act(x, s).str() << '\n';
    return 0;
}

int cmd_trees(const Options &o)
{
    if (o.leaves < 1) {
        throw InputError("--leaves must be >= 1");
    }
    for (const auto &t : enumerate_trees(o.leaves)) {
        std::cout << label_edges(t).str() << '\n';
    }
    return 0;
}

int cmd_mc_solve(const Options &o)
{
    std::ifstream in(o.input);
    if (!in) {
        throw InputError("cannot open " + o.input);
    }
    io::json j;
    try {
        j = io::json::parse(in);
    } catch (const io::json::parse_error &e) {
        throw InputError(std::string("problem is not valid JSON: ") + e.what());
    }
    const auto prob = io::mc_problem_from_json(j);
    int n = prob.order;
    if (o.order) {
        if (*o.order < 1) {
            throw InputError("--order must be >= 1");
        }
        n = *o.order;
    }
    const PolyFormDgLa l(n);
    const PolyForm fixed = solve_fixed_point(l, prob.pi, n);
    const PolyForm trees = solve_tree_sum(l, prob.pi, n);
    if (!(fixed == trees)) {
        throw MathError("tree-sum solution differs from the fixed-point solution");
    }
    const io::json out{{"order", n},
                       {"phi", io::polyform_to_json(fixed)},
                       {"mc_residual", io::polyform_to_json(mc_residual(l, fixed))},
                       {"obstruction", io::polyform_to_json(obstruction(l, fixed))}};
    emit(o.output, out.dump(2) + "\n");
    return 0;
}

int cmd_render(const Options &o)
{
    const Diagram d = load(o.input, o.order);
    emit(o.svg, render_svg(d));
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Scattering diagrams, wall crossing and Maurer-Cartan solving"};
    app.require_subcommand(1);
    Options o;

    auto order_flag = [&](CLI::App *sub) {
        sub->add_option("--order", o.order, "Truncation order N (reduce mod m^{N+1})");
    };

    auto *complete_cmd = app.add_subcommand("complete", "Complete a standard two-wall seed");
    complete_cmd->add_option("input", o.input, "Diagram JSON file")->required();
    order_flag(complete_cmd);
    complete_cmd->add_option("--output,-o", o.output, "Write the completed diagram here (default stdout)");
    complete_cmd->add_flag("--trace", o.trace, "Print per-order defects to stderr");

    auto *product_cmd = app.add_subcommand("product", "Log of the path-ordered product around the origin");
    product_cmd->add_option("input", o.input, "Diagram JSON file")->required();
    product_cmd->add_option("--start-ray", o.start_ray, "Loop start direction \"a,b\"");
    order_flag(product_cmd);

    auto *act_cmd = app.add_subcommand("act", "Apply a wall automorphism (or the loop product) to w^m");
    act_cmd->add_option("input", o.input, "Diagram JSON file")->required();
    act_cmd->add_option("--monomial", o.monomial, "Exponent m as \"a,b\"")->required();
    auto *wall_opt = act_cmd->add_option("--wall", o.wall, "Index of the wall to apply");
    act_cmd->add_flag("--inverse", o.inverse, "Apply the inverse automorphism")->needs(wall_opt);
    act_cmd->add_option("--start-ray", o.start_ray, "Loop start direction when --wall is absent")
        ->excludes(wall_opt);
    order_flag(act_cmd);

    auto *trees_cmd = app.add_subcommand("trees", "List planar trivalent trees with edge labels");
    trees_cmd->add_option("--leaves,-d", o.leaves, "Number of leaves")->required();

    auto *mc_cmd = app.add_subcommand("mc-solve", "Solve the Maurer-Cartan equation by both solvers");
    mc_cmd->add_option("input", o.input, "Problem JSON file {order, pi:[records]}")->required();
    order_flag(mc_cmd);
    mc_cmd->add_option("--output,-o", o.output, "Write the result here (default stdout)");

    auto *render_cmd = app.add_subcommand("render", "Render a diagram as SVG");
    render_cmd->add_option("input", o.input, "Diagram JSON file")->required();
    render_cmd->add_option("--svg", o.svg, "Output SVG path (default stdout)");
    order_flag(render_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*complete_cmd) {
            return cmd_complete(o);
        }
        if (*product_cmd) {
            return cmd_product(o);
        }
        if (*act_cmd) {
            return cmd_act(o);
        }
        if (*trees_cmd) {
            return cmd_trees(o);
        }
        if (*mc_cmd) {
            return cmd_mc_solve(o);
        }
        return cmd_render(o);
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const MathError &e) {
        std::cerr << "assertion failed: " << e.what() << '\n';
        return exit_math;
    }
}
