#ifndef EPGLAB_RENDER_HPP
#define EPGLAB_RENDER_HPP

#include <string>

#include "epglab/rep.hpp"

namespace epglab {

// ASCII picture of the grid with every path's edges drawn.  An edge carried
// by a single path shows that path's letter, shared edges show the count;
// a legend line per path follows the picture.
std::string render_rep(const Rep& rep);

// The same picture as a standalone SVG document.  Paths are drawn as crisp
// polylines, nudged sideways a little per id so overlapping runs stay
// readable, with a color legend.
std::string render_svg(const Rep& rep);

}  // namespace epglab

#endif
