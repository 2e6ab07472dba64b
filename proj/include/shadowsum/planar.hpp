#pragma once

#include <vector>

#include "shadowsum/diagram.hpp"
#include "shadowsum/tl_oracle.hpp"

namespace shadowsum {

// Builders for link diagrams drawn in a disk, given as crossing-only oracle
// graphs. Crossing slots run counterclockwise; region j lies between slots j
// and j+1.

struct OuterRegion {
    int vertex = 0;
    int region = 0;
};

// Face structure of a connected crossing graph (plus unnested free loops).
// genus 0 gives a disk whose outer face is pinned; genus g >= 1 glues the disk
// into a closed surface of genus g through the outer face.
Shadow shadow_of(const OracleGraph& g, int genus = 0, OuterRegion outer = {});

// Closure of a braid on `strands` strands; letter +i / -i is sigma_i^{+1/-1}.
// Every strand carries `color`.
OracleGraph braid_closure(const std::vector<int>& word, int strands, int color);

// Standard two-crossing Hopf link with component colors a and b.
OracleGraph hopf_graph(int a, int b);

// Replaces edge `edge` by a path through a new kink crossing. The two variants
// have equal writhe with the loop on opposite sides of the strand.
OracleGraph with_kink(const OracleGraph& g, int edge, bool left_loop);

}  // namespace shadowsum
