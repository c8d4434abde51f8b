#ifndef EPGLAB_HELLIFY_HPP
#define EPGLAB_HELLIFY_HPP

#include <array>
#include <optional>

#include "epglab/rep.hpp"

namespace epglab {

// Outcome of straightening a model until every maximal clique sits on a
// common edge.  On success `rep` is the transformed model (same intersection
// graph).  Otherwise `diamond` holds four vertices inducing a K4 minus one
// edge, the obstruction that makes some claw unremovable; the missing edge
// joins diamond[0] and diamond[3].
struct HellifyResult {
    bool success = false;
    Rep rep;
    std::optional<std::array<int, 4>> diamond;
    int rounds = 0;
};

HellifyResult hellify(const Rep& rep);

}  // namespace epglab

#endif
