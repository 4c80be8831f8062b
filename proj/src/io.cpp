#include "wallcross/io.hpp"

#include <fstream>
#include <sstream>

namespace wallcross::io
{

namespace
{

const json &field(const json &obj, const char *key, const std::string &where)
{
    if (!obj.is_object()) {
        throw InputError(where + ": expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw InputError(where + ": missing field \"" + key + "\"");
    }
    return *it;
}

long long as_int(const json &v, const std::string &where)
{
    if (!v.is_number_integer()) {
        throw InputError(where + ": expected an integer");
    }
    return v.get<long long>();
}

std::vector<std::int64_t> as_int_array(const json &v, std::size_t len, const std::string &where)
{
    if (!v.is_array() || v.size() != len) {
        throw InputError(where + ": expected an array of " + std::to_string(len) + " integers");
    }
    std::vector<std::int64_t> out;
    for (const auto &e : v) {
        out.push_back(as_int(e, where));
    }
    return out;
}

std::string multi_index_key(const MultiIndex &t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i != 0) {
            s += ',';
        }
        s += std::to_string(t[i]);
    }
    return s;
}

MultiIndex parse_multi_index_key(const std::string &key, std::size_t params)
{
    std::vector<int> degrees;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
            throw InputError("malformed multi-index key \"" + key + "\"");
        }
        degrees.push_back(std::stoi(part));
    }
    if (degrees.size() != params) {
        throw InputError("multi-index key \"" + key + "\" does not have " + std::to_string(params) + " entries");
    }
    return MultiIndex(std::move(degrees));
}

} // namespace

json series_to_json(const Series &s)
{
    json out = json::object();
    for (const auto &[k, c] : s.terms()) {
        if (!k.w.is_zero()) {
            throw InputError("series_to_json: only pure t-series are serialized");
        }
        out[multi_index_key(k.t)] = to_fraction_string(c);
    }
    return out;
}

Series series_from_json(const json &j, std::size_t params, std::size_t rank, int max_order)
{
    if (!j.is_object()) {
        throw InputError("coeff: expected an object of \"j1,j2\": \"p/q\" entries");
    }
    Series s(params, rank, max_order);
    const LatticeVector origin(rank);
    for (const auto &[key, value] : j.items()) {
        if (!value.is_string()) {
            throw InputError("coeff[\"" + key + "\"]: expected a \"p/q\" string");
        }
        const auto t = parse_multi_index_key(key, params);
        if (t.total() > max_order) {
            throw InputError("coeff[\"" + key + "\"]: exceeds max_order " + std::to_string(max_order));
        }
        s.add_term(t, origin, parse_rational(value.get<std::string>()));
    }
    return s;
}

json lie_to_json(const LieElement &x)
{
    json out = json::array();
    for (const auto &t : x.terms()) {
        out.push_back(json{{"monomial", t.monomial.coords()},
                           {"direction", t.direction.coords()},
                           {"coeff", series_to_json(t.coeff)}});
    }
    return out;
}

LieElement lie_from_json(const json &j, std::size_t params, std::size_t rank, int max_order)
{
    if (!j.is_array()) {
        throw InputError("log: expected an array of terms");
    }
    LieElement x(params, rank, max_order);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "log[" + std::to_string(i) + "]";
        const auto &t = j[i];
        const LatticeVector m(as_int_array(field(t, "monomial", where), rank, where + ".monomial"));
        const DualVector n(as_int_array(field(t, "direction", where), rank, where + ".direction"));
        const Series c = series_from_json(field(t, "coeff", where), params, rank, max_order);
        x += LieElement::from_term(m, n, c);
    }
    return x;
}

json diagram_to_json(const Diagram &d)
{
    json walls = json::array();
    for (const auto &w : d.walls) {
        walls.push_back(json{
            {"mode", w.mode.coords()},
            {"support",
             json{{"kind", w.support.kind == SupportKind::ray ? "ray" : "line"},
                  {"direction", w.support.direction.coords()}}},
            {"coorientation", w.coorientation.coords()},
            {"log", lie_to_json(w.log_factor)},
        });
    }
    return json{{"rank", Diagram::rank}, {"params", d.params}, {"max_order", d.max_order}, {"walls", walls}};
}

Diagram diagram_from_json(const json &j)
{
    const std::string top = "diagram";
    if (as_int(field(j, "rank", top), top + ".rank") != static_cast<long long>(Diagram::rank)) {
        throw InputError("diagram.rank: only rank 2 is supported");
    }
    const auto params = as_int(field(j, "params", top), top + ".params");
    const auto order = as_int(field(j, "max_order", top), top + ".max_order");
    if (params < 1) {
        throw InputError("diagram.params must be >= 1");
    }
    if (order < 1) {
        throw InputError("diagram.max_order must be >= 1");
    }
    Diagram d{static_cast<std::size_t>(params), static_cast<int>(order), {}};
    const auto &walls = field(j, "walls", top);
    if (!walls.is_array()) {
        throw InputError("diagram.walls: expected an array");
    }
    for (std::size_t i = 0; i < walls.size(); ++i) {
        const std::string where = "walls[" + std::to_string(i) + "]";
        const auto &w = walls[i];
        const auto &support = field(w, "support", where);
        const auto &kind = field(support, "kind", where + ".support");
        if (!kind.is_string() || (kind != "ray" && kind != "line")) {
            throw InputError(where + ".support.kind: expected \"ray\" or \"line\"");
        }
        Wall wall{
            LatticeVector(as_int_array(field(w, "mode", where), Diagram::rank, where + ".mode")),
            Support{kind == "ray" ? SupportKind::ray : SupportKind::line,
                    LatticeVector(as_int_array(field(support, "direction", where + ".support"), Diagram::rank,
                                               where + ".support.direction"))},
            lie_from_json(field(w, "log", where), d.params, Diagram::rank, d.max_order),
            DualVector(as_int_array(field(w, "coorientation", where), Diagram::rank, where + ".coorientation")),
        };
        try {
            validate_wall(wall);
        } catch (const InputError &e) {
            throw InputError(where + ": " + e.what());
        }
        d.walls.push_back(std::move(wall));
    }
    return d;
}

std::string serialize_diagram(const Diagram &d)
{
    return diagram_to_json(d).dump(2) + "\n";
}

Diagram parse_diagram(const std::string &text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("diagram is not valid JSON: ") + e.what());
    }
    return diagram_from_json(j);
}

Diagram read_diagram_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_diagram(buf.str());
}

void write_text_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out << text;
}

json polyform_to_json(const PolyForm &p)
{
    json out = json::array();
    for (const auto &[k, c] : p.terms()) {
        out.push_back(json{{"basis", to_string(k.basis)},
                           {"form", to_string(k.form)},
                           {"monomial", {k.x1, k.x2}},
                           {"coeff", to_fraction_string(c)},
                           {"order", k.order}});
    }
    return out;
}

PolyForm polyform_from_json(const json &j)
{
    if (!j.is_array()) {
        throw InputError("expected an array of form records");
    }
    PolyForm p;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "record[" + std::to_string(i) + "]";
        const auto &r = j[i];
        const auto &basis = field(r, "basis", where);
        const auto &form = field(r, "form", where);
        const auto &coeff = field(r, "coeff", where);
        if (!basis.is_string() || !form.is_string() || !coeff.is_string()) {
            throw InputError(where + ": basis, form and coeff must be strings");
        }
        const auto mono = as_int_array(field(r, "monomial", where), 2, where + ".monomial");
        const auto order = as_int(field(r, "order", where), where + ".order");
        p += PolyForm::term(static_cast<int>(order), parse_matrix_basis(basis.get<std::string>()),
                            parse_form_basis(form.get<std::string>()), static_cast<int>(mono[0]),
                            static_cast<int>(mono[1]), parse_rational(coeff.get<std::string>()));
    }
    return p;
}

McProblem mc_problem_from_json(const json &j)
{
    McProblem prob;
    const auto order = as_int(field(j, "order", "problem"), "problem.order");
    if (order < 1) {
        throw InputError("problem.order must be >= 1");
    }
    prob.order = static_cast<int>(order);
    prob.pi = polyform_from_json(field(j, "pi", "problem"));
    for (const auto &[k, c] : prob.pi.terms()) {
        if (form_degree(k.form) != 1) {
            throw InputError("problem.pi must be a degree-1 element (forms dx1, dx2 only)");
        }
        if (k.order < 1) {
            throw InputError("problem.pi must have filtration order >= 1");
        }
    }
    return prob;
}

} // namespace wallcross::io
