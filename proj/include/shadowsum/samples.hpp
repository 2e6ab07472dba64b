#pragma once

#include <string>
#include <vector>

#include "shadowsum/diagram.hpp"
#include "shadowsum/tl_oracle.hpp"

namespace shadowsum {

// Sample diagrams used by the checks, the acceptance run and the CLI.

// Closed surface of the given genus with no diagram.
Shadow empty_surface(int genus);

// Adds a curve colored `color` inside `face` that cuts off a subsurface of
// genus `handle_genus` with one boundary circle. handle_genus 0 gives a
// contractible circle bounding a disk.
Shadow add_curve(Shadow s, int face, int handle_genus, int color);

// Inserts a kink on `edge`. The loop lies in faces[side] of the edge; `twist`
// picks the writhe. A kink multiplies the value by (-1)^c t^{-c(c+2)} without
// twist and by (-1)^c t^{c(c+2)} with it, c the edge color.
Shadow add_kink(Shadow s, int edge, int side, bool twist);

// Genus 2 split by a separating curve beta into two genus-1 halves; a
// contractible curve gamma crosses beta twice, passing over it when
// `gamma_over` is set and under it otherwise.
Shadow crossing_pair(int beta_color, int gamma_color, bool gamma_over);

// The same curves after the R-II move pulling gamma off beta into the second half.
Shadow crossing_pair_resolved(int beta_color, int gamma_color);

// Planar diagram placed in a disk inside the second half of a genus-2
// surface cut by a separating curve of color `beta_color`.
Shadow planar_beside_separating(const OracleGraph& g, int beta_color);

// Non-separating simple closed curve of the given color.
Shadow nonseparating_curve(int genus, int color);
// Two non-separating curves meeting once.
Shadow one_point_pair(int genus, int alpha_color, int beta_color);
// Diagrams whose Z/2 homology class is nonzero, on genus 2 and 3.
std::vector<Shadow> nonseparating_samples();

// Annulus with `copies` parallel copies of its core, each of color `color`.
Shadow annulus_cores(int copies, int color);

struct MovePair {
    std::string name;
    Shadow before;
    Shadow after;
};
// R-II, R-III and kink exchange pairs on three genus-2 diagrams.
std::vector<MovePair> reidemeister_pairs();

}  // namespace shadowsum
