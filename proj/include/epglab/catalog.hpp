#ifndef EPGLAB_CATALOG_HPP
#define EPGLAB_CATALOG_HPP

#include <string>
#include <vector>

#include "epglab/graph.hpp"

namespace epglab {

struct CatalogEntry {
    std::string name;  // display name, e.g. "F5(8)", "S3p", "E12"
    Graph graph;
    std::string note;
    std::string rule;  // parameter range for family entries, e.g. "n >= 8"
};

// Minimal chordal graphs with no vertex-intersection path-in-tree model.
// Fixed members F1..F4 and F6..F9 take no parameter; the families take the
// total vertex count: F5(n) n>=7, F10(n) n>=8, F11/F12(4k), F13/F14(4k+1),
// F15(4k+2), F16(4k+3), k>=2.  param -1 picks the smallest member.
Graph forbidden_vpt(const std::string& name, int param = -1);
std::vector<CatalogEntry> forbidden_vpt_minimal();  // F1..F16 at smallest sizes
std::vector<CatalogEntry> forbidden_vpt_up_to(int n);  // every member with <= n vertices

// Minimal obstructions beside the named sixteen, found by exhaustive search
// over chordal graphs of order <= 11.  Names "X<order><letter>".
std::vector<CatalogEntry> forbidden_vpt_extras();

// Obstructions to the Helly property for single-bend grid path models:
// "S3", "S3p", "S3pp" (prime marks written as p), "C4".
Graph helly_obstruction(const std::string& name);
std::vector<CatalogEntry> helly_obstructions();

// Worked examples for the nonempty regions of the class map, "E1".."E17"
// except "E6" (that region is empty).
std::vector<CatalogEntry> venn_examples();

// lookup by display name: "F6", "F5(9)", "S3p", "E4", ...
Graph catalog_graph(const std::string& name);

// Multi-graph catalog file: entries introduced by '# name:' comment lines,
// optional '# note:' and '# param:' lines, then ordinary graph text.  An
// entry with a param rule may omit the graph body (the named family member
// is generated, range-checked) and when a body is present it must be
// isomorphic to that member.  Every entry named F1..F16 must pass
// validate_forbidden_vpt_entry or the whole load is rejected.
std::vector<CatalogEntry> load_catalog_file(const std::string& path);
void write_catalog_files(const std::string& dir);  // the four files under dir

// Checks that a forbidden_vpt member wears the expected evidence: F1..F5 an
// asteroidal triple inside some neighborhood, F11..F16 a branch graph
// violation, F6..F9 neither (their exclusion needs a search), and every
// member chordal.  Entries whose names are not F1..F16 pass untouched.
// Throws std::runtime_error when an entry fails its gate.
void validate_forbidden_vpt_entry(const std::string& display, const Graph& g);
// Runs the gate over the smallest and second member of every family.
void validate_forbidden_vpt();

}  // namespace epglab

#endif
