#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "shadowsum/errors.hpp"

namespace shadowsum {

struct Surface {
    int genus = 0;
    int boundary = 0;
    int euler_characteristic() const { return 2 - 2 * genus - boundary; }
};

enum class DiagramKind { LinkDiagram, PureShadow };

struct Face {
    std::string id;
    int euler_char = 1;
    bool boundary = false;  // pinned to color 0
    int twice_gleam = 0;
};

struct Edge {
    std::string id;
    int color = 0;
    std::array<int, 2> faces{0, 0};
    bool circle = false;  // a closed curve with no vertex on it
    bool adjacent_to_vertex() const { return !circle; }
};

// Corners run clockwise. The edge between corners 0 and 1 (and 2 and 3) has
// color `under`; the edge between corners 1 and 2 (and 3 and 0) has color `over`.
// For pure shadows `over` is k_v and `under` is l_v.
struct Vertex {
    std::string id;
    std::array<int, 4> corners{0, 0, 0, 0};
    int over = 0;
    int under = 0;
};

struct Shadow {
    Surface surface;
    DiagramKind kind = DiagramKind::LinkDiagram;
    std::vector<Face> faces;
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;

    bool closed() const { return surface.boundary == 0; }
    int face_index(const std::string& id) const;
    long total_twice_gleam() const;
    bool has_odd_twice_gleam() const;
    int max_edge_color() const;
    bool has_pinned_faces() const;
};

using Coloring = std::vector<int>;  // indexed like Shadow::faces

// Parses the JSON document format and validates the result. Link diagrams get
// their gleams computed from the crossing data.
Shadow parse_shadow(std::string_view text);
Shadow load_shadow(const std::string& path);
std::string to_json(const Shadow& s);

// Throws ValidationError naming the failed check.
void validate(const Shadow& s);

// Twice-gleams from crossing corners: corners 0 and 2 get -1, corners 1 and 3 get +1.
Shadow compute_gleams(Shadow s);

// Upper bound on |u_f - u_g| over admissible colorings (weighted face distances).
int breadth(const Shadow& s);
// For each face, the largest color it can carry when boundary faces are pinned
// to 0; -1 if no face is pinned in its component.
std::vector<int> pinned_color_bounds(const Shadow& s);

// Mod-2 obstruction to coloring parities: one bit per independent cycle of the
// face-adjacency graph. All bits zero iff the diagram is null in H_1(F; Z/2).
struct Z2Class {
    std::vector<int> bits;
    bool is_zero() const;
};
Z2Class z2_class(const Shadow& s);

bool coloring_admissible(const Shadow& s, const Coloring& c, int r = 0);

// Admissible colorings grouped by their maximal color U. Boundary faces are
// pinned to 0 and r > 0 restricts to r-admissible colorings. Each shell is in
// lexicographic order.
class ColoringEnumerator {
public:
    explicit ColoringEnumerator(const Shadow& s, int r = 0);

    std::vector<Coloring> shell(int u) const;
    // Beyond this shell, shell(U) = {U - d : d in offsets()} for closed unpinned shadows.
    int stable_from() const { return stable_from_; }
    const std::vector<std::vector<int>>& offsets() const { return offsets_; }
    bool has_stable_pattern() const { return stable_from_ >= 0; }
    // Largest U with a nonempty shell, or -1 if unbounded.
    int max_shell() const { return max_shell_; }

private:
    void search(int u, std::size_t pos, Coloring& c, bool hit, std::vector<Coloring>& out) const;

    const Shadow* s_;
    int r_;
    std::vector<int> order_;
    std::vector<std::vector<std::pair<int, int>>> checks_;  // per position: (other face, color)
    std::vector<int> same_face_colors_;                     // per face: colors of edges with that face on both sides
    int stable_from_ = -1;
    int max_shell_ = -1;
    std::vector<std::vector<int>> offsets_;
};

std::vector<Coloring> enumerate_colorings(const Shadow& s, int max_color, int r = 0);

}  // namespace shadowsum
