#ifndef WALLCROSS_IO_HPP
#define WALLCROSS_IO_HPP

#include <string>

#include "json.hpp"

#include "polyform.hpp"
#include "scattering.hpp"

namespace wallcross::io
{

using json = nlohmann::json;

// Pure t-series as {"j1,j2,...": "p/q"}.
json series_to_json(const Series &s);
Series series_from_json(const json &j, std::size_t params, std::size_t rank, int max_order);

// [{monomial, direction, coeff}, ...] in canonical term order.
json lie_to_json(const LieElement &x);
LieElement lie_from_json(const json &j, std::size_t params, std::size_t rank, int max_order);

// {rank, params, max_order, walls: [{mode, support: {kind, direction}, coorientation, log}]}
json diagram_to_json(const Diagram &d);
Diagram diagram_from_json(const json &j);

// Deterministic text form; parse_diagram(serialize_diagram(d)) == d.
std::string serialize_diagram(const Diagram &d);
Diagram parse_diagram(const std::string &text);
Diagram read_diagram_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

// Maurer-Cartan records: [{basis, form, monomial: [a, b], coeff: "p/q", order}, ...]
json polyform_to_json(const PolyForm &p);
PolyForm polyform_from_json(const json &j);

struct McProblem {
    int order = 1;
    PolyForm pi;
};
// {"order": N, "pi": [records]}
McProblem mc_problem_from_json(const json &j);

} // namespace wallcross::io

#endif
