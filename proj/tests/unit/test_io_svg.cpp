#include "doctest.h"

#include <regex>

#include "../support.hpp"
#include "wallcross/errors.hpp"
#include "wallcross/io.hpp"
#include "wallcross/svg.hpp"

using namespace wallcross;
using namespace testsupport;

namespace
{

Diagram random_diagram(std::mt19937 &rng)
{
    const int n = uniform(rng, 1, 5);
    const std::size_t params = static_cast<std::size_t>(uniform(rng, 1, 3));
    Diagram d{params, n, {}};
    const int walls = uniform(rng, 0, 4);
    for (int w = 0; w < walls; ++w) {
        const LatticeVector mode = random_vector(rng, 2, 3, true).primitive();
        const bool line = uniform(rng, 0, 1) == 1;
        Series f(params, 2, n);
        for (int k = 0; k < 3; ++k) {
            const int mult = uniform(rng, 1, 3);
            f.add_term(random_index(rng, params, 1, n), static_cast<std::int64_t>(-mult) * mode,
                       small_rational(rng));
        }
        const DualVector nu = uniform(rng, 0, 1) == 1 ? rotate90(mode) : -rotate90(mode);
        d.walls.push_back(Wall{mode,
                               Support{line ? SupportKind::line : SupportKind::ray,
                                       line && uniform(rng, 0, 1) == 1 ? -mode : mode},
                               lie_from_function(f, rotate90(mode)), nu});
    }
    validate_diagram(d);
    return d;
}

std::size_t count(const std::string &text, const std::string &needle)
{
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

} // namespace

TEST_CASE("diagram round trip is exact")
{
    std::mt19937 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        const auto d = random_diagram(rng);
        const auto text = io::serialize_diagram(d);
        const auto back = io::parse_diagram(text);
        CHECK(back == d);
        CHECK(io::serialize_diagram(back) == text);
    }
    const auto c = complete(log_seed(2, 6));
    CHECK(io::parse_diagram(io::serialize_diagram(c)) == c);
}

TEST_CASE("schema shape")
{
    const auto j = io::diagram_to_json(log_seed(1, 2));
    CHECK(j["rank"] == 2);
    CHECK(j["params"] == 2);
    CHECK(j["max_order"] == 2);
    const auto &w = j["walls"][0];
    CHECK(w["mode"] == io::json::array({1, 0}));
    CHECK(w["support"]["kind"] == "line");
    CHECK(w["coorientation"] == io::json::array({0, -1}));
    CHECK(w["log"][0]["coeff"]["2,0"] == "-1/2");
    CHECK(w["log"][1]["coeff"]["1,0"] == "1/1");
}

TEST_CASE("malformed diagrams are input errors")
{
    CHECK_THROWS_AS(io::parse_diagram("{"), InputError);
    CHECK_THROWS_AS(io::parse_diagram(R"({"rank":3,"params":2,"max_order":2,"walls":[]})"), InputError);
    CHECK_THROWS_AS(io::parse_diagram(R"({"rank":2,"params":2,"walls":[]})"), InputError);
    // Monomial not a negative multiple of the mode.
    const char *bad = R"({"rank":2,"params":2,"max_order":2,"walls":[{"mode":[1,0],
        "support":{"kind":"line","direction":[1,0]},"coorientation":[0,-1],
        "log":[{"monomial":[1,0],"direction":[0,1],"coeff":{"1,0":"1/1"}}]}]})";
    CHECK_THROWS_AS(io::parse_diagram(bad), InputError);
    const char *bad_coeff = R"({"rank":2,"params":2,"max_order":2,"walls":[{"mode":[1,0],
        "support":{"kind":"line","direction":[1,0]},"coorientation":[0,-1],
        "log":[{"monomial":[-1,0],"direction":[0,1],"coeff":{"1,0":"1/x"}}]}]})";
    CHECK_THROWS_AS(io::parse_diagram(bad_coeff), InputError);
    const char *too_deep = R"({"rank":2,"params":2,"max_order":2,"walls":[{"mode":[1,0],
        "support":{"kind":"ray","direction":[1,0]},"coorientation":[0,-1],
        "log":[{"monomial":[-1,0],"direction":[0,1],"coeff":{"3,0":"1/1"}}]}]})";
    CHECK_THROWS_AS(io::parse_diagram(too_deep), InputError);
}

TEST_CASE("mc problem parsing")
{
    const auto j = io::json::parse(R"({"order":3,"pi":[
        {"basis":"E12","form":"dx1","monomial":[0,0],"coeff":"1/1","order":1}]})");
    const auto prob = io::mc_problem_from_json(j);
    CHECK(prob.order == 3);
    CHECK(prob.pi == PolyForm::term(1, MatrixBasis::E12, FormBasis::dx1, 0, 0));
    CHECK(io::polyform_from_json(io::polyform_to_json(prob.pi)) == prob.pi);
    CHECK_THROWS_AS(io::mc_problem_from_json(io::json::parse(
                        R"({"order":3,"pi":[{"basis":"E12","form":"dx12","monomial":[0,0],"coeff":"1/1","order":1}]})")),
                    InputError);
    CHECK_THROWS_AS(io::mc_problem_from_json(io::json::parse(
                        R"({"order":3,"pi":[{"basis":"E99","form":"dx1","monomial":[0,0],"coeff":"1/1","order":1}]})")),
                    InputError);
}

TEST_CASE("svg output")
{
    const auto empty = render_svg(Diagram{2, 3, {}});
    CHECK(count(empty, "<line") == 2);
    CHECK(count(empty, "<text") == 0);

    const auto seed = render_svg(log_seed(2, 3));
    CHECK(count(seed, "class=\"line-wall\"") == 4);
    CHECK(count(seed, "<text") == 2);
    CHECK(seed.find("m=(1,0)  2 t1 w^(-1,0) d(0,1)") != std::string::npos);

    const auto c = complete(log_seed(2, 6));
    const auto svg = render_svg(c);
    CHECK(count(svg, "class=\"line-wall\"") == 4);
    CHECK(count(svg, "class=\"ray-wall\"") == 5);
    CHECK(svg == render_svg(io::parse_diagram(io::serialize_diagram(c))));
    CHECK(std::regex_search(svg, std::regex("m=\\(1,1\\)  4 t1 t2 w\\^\\(-1,-1\\) d\\(-1,1\\)")));
}
