#ifndef EPGLAB_CONSTRUCT_HPP
#define EPGLAB_CONSTRUCT_HPP

#include <stdexcept>

#include "epglab/rep.hpp"

namespace epglab {

struct WrongClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Model for a block graph (every biconnected component a clique): each block
// becomes an edge clique on an anchor edge of its cut vertex's private line,
// so the result satisfies the helly property.  Throws WrongClass otherwise.
Rep construct_block_rep(const Graph& g);

// Model for a connected cactus (every block an edge or a cycle) built from
// monotone paths: every arm points right or up.  Cycle blocks become chains
// of anchor stations; the result is helly.  Throws WrongClass otherwise.
Rep construct_cactus_rep(const Graph& g);

// every path, traversed from its lexicographically smaller endpoint, moves
// only toward larger x and y
bool is_monotone(const Rep& rep);

}  // namespace epglab

#endif
