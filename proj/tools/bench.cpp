// Compares the forward-checking search engine (optionally OpenMP-parallel
// across first-level branches) against the plain reference recursion on a
// small fixed workload.  Verdicts must agree; times and node counts differ.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "epglab/b1_search.hpp"
#include "epglab/families.hpp"

using namespace epglab;

namespace {

double run_ms(const std::function<SearchResult()>& fn, SearchResult& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = fn();
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

const char* status_word(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted: return "exhausted";
        default: return "budget";
    }
}

}  // namespace

int main(int argc, char** argv) {
    int repeats = argc > 1 ? std::stoi(argv[1]) : 3;

    struct Case {
        std::string name;
        Graph g;
        int grid;
        bool helly;
    };
    std::vector<Case> cases = {
        {"cycle6 find 8x8", cycle_graph(6), 8, false},
        {"sun3 find 8x8", sun_graph(3), 8, false},
        {"gem helly find 8x8", gem_graph(), 8, true},
        {"K33 exhaust 5x5", complete_bipartite(3, 3), 5, false},
        {"sun4 exhaust 5x5", sun_graph(4), 5, false},
        {"wheel6 find 8x8", wheel_graph(6), 8, false},
    };

    std::cout << "case | engine(par) ms | engine(ser) ms | reference ms | "
                 "status | speedup(ref/par)\n";
    for (const Case& c : cases) {
        SearchOptions opt;
        opt.width = opt.height = c.grid;
        opt.require_helly = c.helly;

        double par = 1e100, ser = 1e100, ref = 1e100;
        SearchResult rp, rs, rr;
        for (int i = 0; i < repeats; ++i) {
            SearchOptions o = opt;
            o.parallel = true;
            par = std::min(par, run_ms([&] { return search_b1(c.g, o); }, rp));
            o.parallel = false;
            ser = std::min(ser, run_ms([&] { return search_b1(c.g, o); }, rs));
            ref = std::min(ref, run_ms([&] { return search_b1_reference(c.g, o); }, rr));
        }
        bool agree = rp.status == rr.status && rs.status == rr.status;
        std::cout << c.name << " | " << par << " | " << ser << " | " << ref
                  << " | " << status_word(rr.status) << (agree ? "" : " MISMATCH")
                  << " | " << (par > 0 ? ref / par : 0) << "x\n";
        if (!agree) return 1;
    }
    return 0;
}
