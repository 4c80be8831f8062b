#include "wallcross/scattering.hpp"

#include <algorithm>
#include <map>

namespace wallcross
{

namespace
{

std::int64_t dot(const LatticeVector &a, const LatticeVector &b)
{
    return a[0] * b[0] + a[1] * b[1];
}

// 0 for angles in [0, pi) measured anticlockwise from `from`, 1 for [pi, 2 pi).
int half_plane(const LatticeVector &from, const LatticeVector &d)
{
    const auto c = cross(from, d);
    return (c > 0 || (c == 0 && dot(from, d) > 0)) ? 0 : 1;
}

// Exact anticlockwise angular order starting at `from`.
bool angle_less(const LatticeVector &from, const LatticeVector &a, const LatticeVector &b)
{
    const int ha = half_plane(from, a);
    const int hb = half_plane(from, b);
    if (ha != hb) {
        return ha < hb;
    }
    return cross(a, b) > 0;
}

bool same_ray(const LatticeVector &a, const LatticeVector &b)
{
    return cross(a, b) == 0 && dot(a, b) > 0;
}

// The anticlockwise loop passes the ray d with tangent rotate90(d).
int crossing_sign(const LatticeVector &ray, const DualVector &coorientation)
{
    return pairing(rotate90_m(ray), coorientation) < 0 ? 1 : -1;
}

struct HalfRay {
    std::size_t wall;
    LatticeVector dir;
};

std::vector<HalfRay> half_rays(const Diagram &d)
{
    std::vector<HalfRay> out;
    for (std::size_t i = 0; i < d.walls.size(); ++i) {
        const auto dir = d.walls[i].support.direction.primitive();
        out.push_back({i, dir});
        if (d.walls[i].support.kind == SupportKind::line) {
            out.push_back({i, -dir});
        }
    }
    return out;
}

void require_base_vector(const LatticeVector &v, const char *what)
{
    if (v.rank() != Diagram::rank || v.is_zero()) {
        throw InputError(std::string(what) + " must be a nonzero rank-2 vector");
    }
}

} // namespace

void validate_wall(const Wall &w)
{
    require_base_vector(w.mode, "wall mode");
    require_base_vector(w.support.direction, "wall support direction");
    if (!w.mode.is_primitive()) {
        throw InputError("wall mode " + w.mode.str() + " is not primitive");
    }
    if (!w.support.direction.is_primitive()) {
        throw InputError("wall support direction " + w.support.direction.str() + " is not primitive");
    }
    if (cross(w.mode, w.support.direction) != 0) {
        throw InputError("wall support " + w.support.direction.str() + " is not parallel to its mode "
                         + w.mode.str());
    }
    if (w.coorientation.rank() != Diagram::rank || !w.coorientation.is_primitive()) {
        throw InputError("wall coorientation must be a primitive rank-2 covector");
    }
    if (pairing(w.support.direction, w.coorientation) != 0) {
        throw InputError("wall coorientation " + w.coorientation.str() + " does not annihilate the support");
    }
    if (w.log_factor.rank() != Diagram::rank) {
        throw InputError("wall log factor must live in rank 2");
    }
    if (!w.log_factor.satisfies_invariants()) {
        throw InputError("wall log factor is not an element of h");
    }
    if (const auto lo = w.log_factor.min_order(); lo && *lo == 0) {
        throw InputError("wall log factor has a coefficient outside the maximal ideal");
    }
    for (const auto &m : w.log_factor.monomials()) {
        // m must equal -k * mode with k > 0
        if (cross(m, w.mode) != 0 || dot(m, w.mode) >= 0) {
            throw InputError("wall monomial " + m.str() + " is not a negative multiple of the mode "
                             + w.mode.str());
        }
    }
}

void validate_diagram(const Diagram &d)
{
    if (d.max_order < 1) {
        throw InputError("diagram max_order must be >= 1");
    }
    if (d.params < 1) {
        throw InputError("diagram needs at least one formal parameter");
    }
    for (const auto &w : d.walls) {
        if (w.log_factor.params() != d.params || w.log_factor.max_order() != d.max_order) {
            throw InputError("wall log factor does not match the diagram's params/max_order");
        }
        validate_wall(w);
    }
}

Diagram reduce(const Diagram &d, int n)
{
    Diagram out{d.params, n, {}};
    out.walls.reserve(d.walls.size());
    for (const auto &w : d.walls) {
        out.walls.push_back(Wall{w.mode, w.support, w.log_factor.reduce(n), w.coorientation});
    }
    return out;
}

std::vector<Crossing> crossing_sequence(const Diagram &d, const Loop &loop)
{
    require_base_vector(loop.start_ray, "loop start ray");
    const auto s = loop.start_ray;
    auto rays = half_rays(d);
    for (const auto &r : rays) {
        if (same_ray(r.dir, s)) {
            throw InputError("loop start ray " + s.str() + " lies on the support of wall "
                             + std::to_string(r.wall));
        }
    }
    std::stable_sort(rays.begin(), rays.end(), [&](const HalfRay &a, const HalfRay &b) {
        if (!same_ray(a.dir, b.dir)) {
            return angle_less(s, a.dir, b.dir);
        }
        // Same support: canonical order by mode, then insertion index. These factors commute.
        const auto &ma = d.walls[a.wall].mode;
        const auto &mb = d.walls[b.wall].mode;
        if (ma != mb) {
            return ma < mb;
        }
        return a.wall < b.wall;
    });
    std::vector<Crossing> out;
    out.reserve(rays.size());
    for (const auto &r : rays) {
        out.push_back(Crossing{r.wall, crossing_sign(r.dir, d.walls[r.wall].coorientation), r.dir});
    }
    return out;
}

LieElement path_ordered_product(const Diagram &d, const Loop &loop)
{
    LieElement acc(d.params, Diagram::rank, d.max_order);
    for (const auto &c : crossing_sequence(d, loop)) {
        const auto &f = d.walls[c.wall].log_factor;
        if (f.is_zero()) {
            continue;
        }
        const LieElement step = c.sign > 0 ? f : -f;
        acc = acc.is_zero() ? step : bch(acc, step);
    }
    return acc;
}

std::vector<LatticeVector> free_directions(const Diagram &d)
{
    const LatticeVector x_axis{1, 0};
    std::vector<LatticeVector> dirs;
    for (const auto &r : half_rays(d)) {
        if (std::none_of(dirs.begin(), dirs.end(), [&](const auto &v) { return same_ray(v, r.dir); })) {
            dirs.push_back(r.dir);
        }
    }
    if (dirs.empty()) {
        return {x_axis};
    }
    std::sort(dirs.begin(), dirs.end(),
              [&](const auto &a, const auto &b) { return angle_less(x_axis, a, b); });
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const auto &a = dirs[i];
        const auto &b = dirs[(i + 1) % dirs.size()];
        const auto c = cross(a, b);
        LatticeVector mid = c > 0 ? a + b : (c < 0 ? -(a + b) : rotate90_m(a));
        out.push_back(mid.primitive());
    }
    return out;
}

Diagram minimalize(const Diagram &d)
{
    Diagram out{d.params, d.max_order, {}};
    for (const auto &w : d.walls) {
        const bool line = w.support.kind == SupportKind::line;
        auto it = std::find_if(out.walls.begin(), out.walls.end(), [&](const Wall &o) {
            if (o.support.kind != w.support.kind || o.mode != w.mode) {
                return false;
            }
            return line ? cross(o.support.direction, w.support.direction) == 0
                        : o.support.direction == w.support.direction;
        });
        if (it == out.walls.end()) {
            out.walls.push_back(w);
        } else if (it->coorientation == w.coorientation) {
            it->log_factor += w.log_factor;
        } else {
            it->log_factor -= w.log_factor;
        }
    }
    std::erase_if(out.walls, [](const Wall &w) { return w.log_factor.is_zero(); });
    return out;
}

bool is_consistent(const Diagram &d)
{
    if (d.walls.empty()) {
        return true;
    }
    const auto starts = free_directions(d);
    const bool first = path_ordered_product(d, Loop{starts.front()}).is_zero();
    if (starts.size() > 1) {
        const bool other = path_ordered_product(d, Loop{starts[starts.size() / 2]}).is_zero();
        if (first != other) {
            throw MathError("monodromy depends on the loop's base point; crossing conventions are inconsistent");
        }
    }
    return first;
}

bool in_open_cone(const LatticeVector &a, const LatticeVector &m1, const LatticeVector &m2)
{
    const auto c = cross(m1, m2);
    if (c == 0) {
        throw InputError("cone generators " + m1.str() + ", " + m2.str() + " are parallel");
    }
    const auto sgn = [](std::int64_t v) { return (v > 0) - (v < 0); };
    const auto s = sgn(c);
    return sgn(cross(a, m2)) == s && sgn(cross(m1, a)) == s;
}

namespace
{

struct Seed {
    LatticeVector m1;
    LatticeVector m2;
};

// The single formal parameter a seed wall uses, or -1 when it uses several.
int seed_parameter(const Wall &w)
{
    int param = -2;
    for (const auto &comp : w.log_factor.components()) {
        for (const auto &[key, c] : comp.terms()) {
            for (std::size_t i = 0; i < key.t.size(); ++i) {
                if (key.t[i] == 0) {
                    continue;
                }
                const int p = static_cast<int>(i);
                if (param == -2) {
                    param = p;
                } else if (param != p) {
                    return -1;
                }
            }
        }
    }
    return param;
}

std::optional<Seed> check_standard(const Diagram &d)
{
    std::vector<const Wall *> lines;
    std::vector<const Wall *> rays;
    for (const auto &w : d.walls) {
        (w.support.kind == SupportKind::line ? lines : rays).push_back(&w);
    }
    if (lines.size() > 2) {
        throw InputError("complete(): a standard seed has at most two line walls, got "
                         + std::to_string(lines.size()));
    }
    if (lines.size() < 2) {
        if (!rays.empty()) {
            throw InputError("complete(): ray walls require a two-line standard seed");
        }
        return std::nullopt;
    }
    const Seed seed{lines[0]->mode, lines[1]->mode};
    if (cross(seed.m1, seed.m2) == 0) {
        throw InputError("complete(): seed modes " + seed.m1.str() + " and " + seed.m2.str() + " are parallel");
    }
    const int p1 = seed_parameter(*lines[0]);
    const int p2 = seed_parameter(*lines[1]);
    if (p1 == -1 || p2 == -1 || (p1 >= 0 && p1 == p2)) {
        throw InputError("complete(): each seed wall must use its own single formal parameter");
    }
    for (const auto *r : rays) {
        if (!in_open_cone(r->support.direction, seed.m1, seed.m2) || r->mode != r->support.direction) {
            throw InputError("complete(): ray wall " + r->support.direction.str()
                             + " is not a cone wall of the seed");
        }
    }
    return seed;
}

void insert_cone_wall(Diagram &d, const LatticeVector &a, const LieElement &defect_part,
                      const LatticeVector &start)
{
    // Same rule as the seed lines: the coorientation is the clockwise normal of the mode.
    const DualVector nu = -rotate90(a);
    // The loop crosses this ray with sign eps; the inserted factor must cancel the defect.
    Diagram probe{d.params, d.max_order, {Wall{a, Support{SupportKind::ray, a}, defect_part, nu}}};
    const int eps = crossing_sequence(probe, Loop{start}).front().sign;
    const LieElement log = (eps > 0 ? -defect_part : defect_part).reduce(d.max_order);
    for (auto &w : d.walls) {
        if (w.support.kind == SupportKind::ray && w.support.direction == a && w.mode == a) {
            if (w.coorientation == nu) {
                w.log_factor += log;
            } else {
                w.log_factor -= log;
            }
            return;
        }
    }
    d.walls.push_back(Wall{a, Support{SupportKind::ray, a}, log, nu});
}

} // namespace

Diagram complete(const Diagram &d, const CompletionOptions &opts)
{
    validate_diagram(d);
    const auto seed = check_standard(d);
    if (!seed) {
        // Zero or one line wall: nothing scatters.
        return minimalize(d);
    }
    const LatticeVector start = (-(seed->m1 + seed->m2)).primitive();
    Diagram work = d;
    for (int k = 1; k <= d.max_order; ++k) {
        const LieElement defect = path_ordered_product(reduce(work, k), Loop{start});
        CompletionStage stage{k, defect, {}};
        if (const auto lo = defect.min_order(); lo && *lo < k) {
            throw MathError("completion stage " + std::to_string(k) + ": monodromy survives at order "
                            + std::to_string(*lo));
        }
        std::map<LatticeVector, std::vector<LatticeVector>> groups;
        for (const auto &m : defect.monomials()) {
            groups[(-m).primitive()].push_back(m);
        }
        for (const auto &[a, monos] : groups) {
            if (!in_open_cone(a, seed->m1, seed->m2)) {
                throw MathError("completion stage " + std::to_string(k) + ": defect direction " + a.str()
                                + " lies outside the open cone of " + seed->m1.str() + " and "
                                + seed->m2.str());
            }
            insert_cone_wall(work, a, defect.restrict_to(monos), start);
            stage.added.push_back(a);
        }
        if (!stage.added.empty()
            && !path_ordered_product(reduce(work, k), Loop{start}).is_zero()) {
            throw MathError("completion stage " + std::to_string(k)
                            + ": monodromy not cancelled after inserting walls");
        }
        if (opts.trace != nullptr) {
            opts.trace->push_back(std::move(stage));
        }
    }
    Diagram out = minimalize(work);
    std::stable_partition(out.walls.begin(), out.walls.end(),
                          [](const Wall &w) { return w.support.kind == SupportKind::line; });
    const auto first_ray = std::find_if(out.walls.begin(), out.walls.end(),
                                        [](const Wall &w) { return w.support.kind == SupportKind::ray; });
    std::stable_sort(first_ray, out.walls.end(), [&](const Wall &a, const Wall &b) {
        if (a.support.direction != b.support.direction) {
            return angle_less(start, a.support.direction, b.support.direction);
        }
        return a.mode < b.mode;
    });
    return out;
}

} // namespace wallcross
