#include "shadowsum/planar.hpp"

#include <numeric>
#include <string>

namespace shadowsum {

namespace {

int degree(const OracleGraph::Vertex& v) { return v.kind == OracleGraph::Kind::Triad ? 3 : 4; }

}  // namespace

Shadow shadow_of(const OracleGraph& g, int genus, OuterRegion outer) {
    const int nv = static_cast<int>(g.vertices.size());
    for (const auto& v : g.vertices)
        if (v.kind != OracleGraph::Kind::Crossing) throw PreconditionViolated("shadow_of needs a crossing-only graph");

    std::vector<std::vector<int>> dart_edge(nv, std::vector<int>(4, -1));
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        for (auto d : {g.edges[e].from, g.edges[e].to}) {
            if (d.vertex < 0 || d.vertex >= nv || d.slot < 0 || d.slot > 3 || dart_edge[d.vertex][d.slot] >= 0)
                throw PreconditionViolated("shadow_of: bad or repeated slot");
            dart_edge[d.vertex][d.slot] = e;
        }
    for (const auto& row : dart_edge)
        for (int e : row)
            if (e < 0) throw OpenEndpoints("shadow_of: empty slot");

    // region[v][j] = face containing the corner between slots j and j+1
    std::vector<std::vector<int>> region(nv, std::vector<int>(4, -1));
    int nfaces = 0;
    for (int v = 0; v < nv; ++v)
        for (int s = 0; s < 4; ++s) {
            if (region[v][s] >= 0) continue;
            int cv = v, cs = s;
            while (region[cv][cs] < 0) {
                region[cv][cs] = nfaces;
                const auto& ed = g.edges[dart_edge[cv][cs]];
                OracleGraph::Dart other = (ed.from.vertex == cv && ed.from.slot == cs) ? ed.to : ed.from;
                cv = other.vertex;
                cs = (other.slot + degree(g.vertices[cv]) - 1) % degree(g.vertices[cv]);
            }
            ++nfaces;
        }
    if (nv > 0) {
        std::vector<int> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& ed : g.edges) parent[find(ed.from.vertex)] = find(ed.to.vertex);
        for (int v = 0; v < nv; ++v)
            if (find(v) != find(0)) throw PreconditionViolated("shadow_of needs a connected crossing graph");
        if (nv - static_cast<int>(g.edges.size()) + nfaces != 2) throw PreconditionViolated("shadow_of: not planar");
    }

    Shadow s;
    s.kind = DiagramKind::LinkDiagram;
    s.surface = genus == 0 ? Surface{0, 1} : Surface{genus, 0};
    int outer_face = 0;
    if (nv > 0) {
        if (outer.vertex < 0 || outer.vertex >= nv || outer.region < 0 || outer.region > 3)
            throw PreconditionViolated("shadow_of: outer region out of range");
        outer_face = region[outer.vertex][outer.region];
    } else {
        nfaces = 1;  // only free loops: the complement of the loops
    }
    // With crossings the outer face is the surface minus a disk; without, the whole surface.
    const int outer_chi = s.surface.euler_characteristic() - (nv > 0 ? 1 : 0);
    for (int f = 0; f < nfaces; ++f) {
        Face face;
        face.id = "f" + std::to_string(f);
        face.euler_char = f == outer_face ? outer_chi : 1;
        face.boundary = genus == 0 && f == outer_face;
        s.faces.push_back(face);
    }
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const auto& ed = g.edges[e];
        Edge edge;
        edge.id = "e" + std::to_string(e);
        edge.color = ed.color;
        edge.faces = {region[ed.from.vertex][ed.from.slot], region[ed.to.vertex][ed.to.slot]};
        s.edges.push_back(edge);
    }
    for (int v = 0; v < nv; ++v) {
        const bool over_even = g.vertices[v].over_even;
        const int j = over_even ? 1 : 0;  // an under slot
        Vertex vert;
        vert.id = "v" + std::to_string(v);
        for (int c = 0; c < 4; ++c) vert.corners[c] = region[v][(j - c + 4) % 4];
        vert.under = g.edges[dart_edge[v][j]].color;
        vert.over = g.edges[dart_edge[v][(j + 1) % 4]].color;
        s.vertices.push_back(vert);
    }
    for (std::size_t i = 0; i < g.free_loops.size(); ++i) {
        Face inside;
        inside.id = "d" + std::to_string(i);
        inside.euler_char = 1;
        s.faces.push_back(inside);
        s.faces[outer_face].euler_char -= 1;
        Edge edge;
        edge.id = "c" + std::to_string(i);
        edge.color = g.free_loops[i];
        edge.faces = {outer_face, static_cast<int>(s.faces.size()) - 1};
        edge.circle = true;
        s.edges.push_back(edge);
    }
    s = compute_gleams(std::move(s));
    validate(s);
    return s;
}

OracleGraph braid_closure(const std::vector<int>& word, int strands, int color) {
    if (strands < 1) throw PreconditionViolated("braid needs a strand");
    OracleGraph g;
    const OracleGraph::Dart none{-1, -1};
    std::vector<OracleGraph::Dart> bottom(strands, none), top(strands, none);
    auto feed = [&](int pos, OracleGraph::Dart d) {
        if (top[pos].vertex < 0)
            bottom[pos] = d;
        else
            g.add_edge(top[pos].vertex, top[pos].slot, d.vertex, d.slot, color);
    };
    for (int letter : word) {
        int i = std::abs(letter) - 1;
        if (letter == 0 || i + 1 >= strands) throw PreconditionViolated("braid letter out of range");
        // slots: 0 lower left, 1 lower right, 2 upper right, 3 upper left
        int v = g.add_crossing(letter > 0);
        feed(i, {v, 0});
        feed(i + 1, {v, 1});
        top[i] = {v, 3};
        top[i + 1] = {v, 2};
    }
    for (int p = 0; p < strands; ++p) {
        if (top[p].vertex < 0) throw PreconditionViolated("braid closure with an untouched strand");
        g.add_edge(top[p].vertex, top[p].slot, bottom[p].vertex, bottom[p].slot, color);
    }
    return g;
}

OracleGraph hopf_graph(int a, int b) {
    OracleGraph g;
    int v1 = g.add_crossing(false), v2 = g.add_crossing(false);
    g.add_edge(v1, 1, v2, 2, a);
    g.add_edge(v1, 3, v2, 0, a);
    g.add_edge(v1, 0, v2, 3, b);
    g.add_edge(v1, 2, v2, 1, b);
    return g;
}

OracleGraph with_kink(const OracleGraph& g, int edge, bool left_loop) {
    if (edge < 0 || edge >= static_cast<int>(g.edges.size())) throw PreconditionViolated("with_kink: no such edge");
    OracleGraph out = g;
    auto ed = out.edges[edge];
    int k = out.add_crossing(left_loop);
    out.edges[edge] = {ed.from, {k, 0}, ed.color};
    if (left_loop) {
        out.add_edge(k, 2, k, 1, ed.color);
        out.add_edge(k, 3, ed.to.vertex, ed.to.slot, ed.color);
    } else {
        out.add_edge(k, 2, k, 3, ed.color);
        out.add_edge(k, 1, ed.to.vertex, ed.to.slot, ed.color);
    }
    return out;
}

}  // namespace shadowsum
