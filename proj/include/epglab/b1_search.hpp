#ifndef EPGLAB_B1_SEARCH_HPP
#define EPGLAB_B1_SEARCH_HPP

#include <functional>

#include "epglab/rep.hpp"

namespace epglab {

struct SearchOptions {
    int width = 0, height = 0;  // grid points per side; 0 picks 3n x 3n
    bool require_helly = false; // only accept models whose cliques sit on edges
    uint64_t max_nodes = 0;     // placement attempts; 0 = unlimited
    bool parallel = false;      // split the first level across OpenMP threads
};

enum class SearchStatus {
    found,      // a model (or, for enumeration, an early stop by the visitor)
    exhausted,  // the whole grid-bounded space was covered, nothing accepted
    budget      // max_nodes hit first; the verdict is open
};

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    Rep rep;  // meaningful when status == found (search only)
    uint64_t nodes = 0;
};

// Branch-and-filter search for a single-bend grid model of g.  Vertices are
// placed by descending degree; each placement filters the candidate paths of
// every unplaced vertex down to those matching adjacency.  The first placed
// vertex only tries paths minimal in their grid-symmetry orbit, so verdicts
// are unaffected but the space shrinks up to 8x.
SearchResult search_b1(const Graph& g, const SearchOptions& opt = {});

// Plain recursion over the same universe and placement order, kept as the
// reference the fast engine is tested against.  Same found/exhausted verdicts
// and same first model; node counts are engine specific.
SearchResult search_b1_reference(const Graph& g, const SearchOptions& opt = {});

// Visits every grid-bounded model of g exactly once per symmetry orbit.  The
// visitor returns false to stop early (the walk then reports found).  With
// opt.parallel the visitor is called from worker threads one at a time but in
// no particular order.
SearchResult enumerate_reps(const Graph& g, const SearchOptions& opt,
                            const std::function<bool(const Rep&)>& visit);

}  // namespace epglab

#endif
