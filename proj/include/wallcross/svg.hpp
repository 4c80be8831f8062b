#ifndef WALLCROSS_SVG_HPP
#define WALLCROSS_SVG_HPP

#include <string>

#include "scattering.hpp"

namespace wallcross
{

struct SvgStyle {
    int size = 640;   // square canvas, pixels
    int margin = 70;  // room for labels
};

// Static figure of the diagram: axes, line walls through the origin, rays from it, each
// labeled with its mode and the leading term of its log. Byte-identical for equal input.
std::string render_svg(const Diagram &d, const SvgStyle &style = {});

} // namespace wallcross

#endif
