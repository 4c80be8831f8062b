#ifndef WALLCROSS_SCATTERING_HPP
#define WALLCROSS_SCATTERING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tropical_vertex.hpp"

namespace wallcross
{

enum class SupportKind { ray, line };

// A ray R_{>=0} d or a line R d through the origin of the (rank 2) base.
struct Support {
    SupportKind kind = SupportKind::ray;
    LatticeVector direction;

    friend bool operator==(const Support &, const Support &) = default;
};

// (mode m, support P, Log Theta) plus the normal covector fixing which side is "positive".
//
// Every monomial of log_factor is a negative multiple of mode and every direction is
// perpendicular to it; the coorientation is primitive and kills the support direction.
struct Wall {
    LatticeVector mode;
    Support support;
    LieElement log_factor;
    DualVector coorientation;

    friend bool operator==(const Wall &, const Wall &) = default;
};

// Throws InputError describing the first violated wall invariant.
void validate_wall(const Wall &w);

struct Diagram {
    std::size_t params = 2;
    int max_order = 1;
    std::vector<Wall> walls;

    static constexpr std::size_t rank = 2;

    friend bool operator==(const Diagram &, const Diagram &) = default;
};

void validate_diagram(const Diagram &d);
// Same walls, every log reduced mod m^{n+1}.
Diagram reduce(const Diagram &d, int n);

// Anticlockwise loop around the origin, starting (and ending) on start_ray.
struct Loop {
    LatticeVector start_ray;
};

struct Crossing {
    std::size_t wall; // index into Diagram::walls
    int sign;         // +1: crossing against the coorientation, -1: along it
    LatticeVector ray; // direction of the crossed (half) support
};

// Walls in the order the loop meets them, lines split into two rays.
std::vector<Crossing> crossing_sequence(const Diagram &d, const Loop &loop);

// Log(Theta_r^{e_r} ... Theta_1^{e_1}) folded with bch, reduced mod m^{N+1}.
LieElement path_ordered_product(const Diagram &d, const Loop &loop);

// One start ray inside each open sector cut out by the wall supports, anticlockwise
// from the positive x-axis. An empty diagram yields a single ray.
std::vector<LatticeVector> free_directions(const Diagram &d);

// Removes trivial walls and merges walls sharing support and mode (their factors commute).
Diagram minimalize(const Diagram &d);

// Monodromy-free check around the origin; asserts base-point independence on two sectors.
bool is_consistent(const Diagram &d);

// Hooks for observing the completion stages (used by tests and diagnostics).
struct CompletionStage {
    int order;                        // k
    LieElement defect;                // D_k before insertion
    std::vector<LatticeVector> added; // primitive directions that received a wall
};

struct CompletionOptions {
    // Fills in one record per stage when set.
    std::vector<CompletionStage> *trace = nullptr;
};

// Consistent completion of a standard seed, order by order, followed by
// minimalization. The seed is up to two line walls through the origin with primitive,
// non-parallel modes, wall i using only t_i; extra ray walls are allowed when they lie
// strictly inside the cone of the two modes (so a completed diagram may be re-completed).
Diagram complete(const Diagram &d, const CompletionOptions &opts = {});

// Strict open-cone test a in R_{>0} m1 + R_{>0} m2.
bool in_open_cone(const LatticeVector &a, const LatticeVector &m1, const LatticeVector &m2);

} // namespace wallcross

#endif
