#include "shadowsum/samples.hpp"

#include <algorithm>

#include "shadowsum/planar.hpp"

namespace shadowsum {

Shadow empty_surface(int genus) {
    Shadow s;
    s.surface = {genus, 0};
    s.faces = {Face{"f", 2 - 2 * genus, false, 0}};
    validate(s);
    return s;
}

Shadow add_curve(Shadow s, int face, int handle_genus, int color) {
    if (face < 0 || face >= static_cast<int>(s.faces.size())) throw PreconditionViolated("add_curve: no such face");
    const int chi = 1 - 2 * handle_genus;
    Face inner;
    inner.id = "h" + std::to_string(s.faces.size());
    inner.euler_char = chi;
    s.faces[face].euler_char -= chi;
    s.faces.push_back(inner);
    Edge e;
    e.id = "c" + std::to_string(s.edges.size());
    e.color = color;
    e.faces = {face, static_cast<int>(s.faces.size()) - 1};
    e.circle = true;
    s.edges.push_back(e);
    validate(s);
    return s;
}

Shadow add_kink(Shadow s, int edge, int side, bool twist) {
    if (edge < 0 || edge >= static_cast<int>(s.edges.size())) throw PreconditionViolated("add_kink: no such edge");
    if (side != 0 && side != 1) throw PreconditionViolated("add_kink: side is 0 or 1");
    if (s.kind != DiagramKind::LinkDiagram) throw PreconditionViolated("add_kink needs a link diagram");
    Edge& e = s.edges[edge];
    const int a = e.faces[side], b = e.faces[1 - side], c = e.color;
    Face loop_face;
    loop_face.id = "k" + std::to_string(s.faces.size());
    s.faces.push_back(loop_face);
    const int m = static_cast<int>(s.faces.size()) - 1;
    if (e.circle) {
        e.circle = false;
    } else {
        Edge rest = e;
        rest.id = e.id + "'";
        s.edges.push_back(rest);
    }
    Edge loop;
    loop.id = "k" + std::to_string(s.edges.size());
    loop.color = c;
    loop.faces = {m, a};
    s.edges.push_back(loop);
    Vertex v;
    v.id = "k" + std::to_string(s.vertices.size());
    v.corners = twist ? std::array<int, 4>{a, m, a, b} : std::array<int, 4>{m, a, b, a};
    v.over = c;
    v.under = c;
    s.vertices.push_back(v);
    for (auto& f : s.faces) f.twice_gleam = 0;
    s = compute_gleams(std::move(s));
    validate(s);
    return s;
}

namespace {

Shadow finish(Shadow s) {
    s = compute_gleams(std::move(s));
    validate(s);
    return s;
}

int lowest_euler_face(const Shadow& s) {
    int best = 0;
    for (int f = 1; f < static_cast<int>(s.faces.size()); ++f)
        if (s.faces[f].euler_char < s.faces[best].euler_char) best = f;
    return best;
}

}  // namespace

Shadow crossing_pair(int beta_color, int gamma_color, bool gamma_over) {
    // faces: 0 = first half, 1 = second half, 2 and 3 = the two halves of gamma's disk
    Shadow s;
    s.surface = {2, 0};
    s.faces = {Face{"F1", -1, false, 0}, Face{"F2", -1, false, 0}, Face{"D1", 1, false, 0}, Face{"D2", 1, false, 0}};
    auto edge = [](const char* id, int color, int f, int g) {
        Edge e;
        e.id = id;
        e.color = color;
        e.faces = {f, g};
        return e;
    };
    s.edges = {edge("beta_out", beta_color, 0, 1), edge("beta_in", beta_color, 2, 3),
               edge("gamma_1", gamma_color, 0, 2), edge("gamma_2", gamma_color, 1, 3)};
    Vertex q{"q", {0, 1, 3, 2}, gamma_color, beta_color};
    Vertex p{"p", {1, 0, 2, 3}, gamma_color, beta_color};
    if (!gamma_over) {
        q = Vertex{"q", {1, 3, 2, 0}, beta_color, gamma_color};
        p = Vertex{"p", {0, 2, 3, 1}, beta_color, gamma_color};
    }
    s.vertices = {q, p};
    return finish(std::move(s));
}

Shadow crossing_pair_resolved(int beta_color, int gamma_color) {
    Shadow s;
    s.surface = {2, 0};
    s.faces = {Face{"F1", -1, false, 0}, Face{"F2", -1, false, 0}};
    Edge beta;
    beta.id = "beta";
    beta.color = beta_color;
    beta.faces = {0, 1};
    beta.circle = true;
    s.edges = {beta};
    return add_curve(std::move(s), 1, 0, gamma_color);
}

Shadow planar_beside_separating(const OracleGraph& g, int beta_color) {
    Shadow s = shadow_of(g, 2);
    return add_curve(std::move(s), lowest_euler_face(s), 1, beta_color);
}

Shadow nonseparating_curve(int genus, int color) {
    Shadow s;
    s.surface = {genus, 0};
    s.faces = {Face{"f", 2 - 2 * genus, false, 0}};
    Edge e;
    e.id = "alpha";
    e.color = color;
    e.faces = {0, 0};
    e.circle = true;
    s.edges = {e};
    validate(s);
    return s;
}

Shadow one_point_pair(int genus, int alpha_color, int beta_color) {
    Shadow s;
    s.surface = {genus, 0};
    s.faces = {Face{"f", 3 - 2 * genus, false, 0}};
    Edge a;
    a.id = "alpha";
    a.color = alpha_color;
    a.faces = {0, 0};
    Edge b = a;
    b.id = "beta";
    b.color = beta_color;
    s.edges = {a, b};
    s.vertices = {Vertex{"x", {0, 0, 0, 0}, alpha_color, beta_color}};
    return finish(std::move(s));
}

std::vector<Shadow> nonseparating_samples() {
    std::vector<Shadow> out;
    for (int genus : {2, 3}) {
        for (int color : {1, 3}) out.push_back(nonseparating_curve(genus, color));
        out.push_back(add_curve(nonseparating_curve(genus, 1), 0, 0, 2));
        out.push_back(add_curve(nonseparating_curve(genus, 5), 0, 0, 1));
        out.push_back(add_curve(nonseparating_curve(genus, 1), 0, 1, 1));
        out.push_back(one_point_pair(genus, 1, 2));
        out.push_back(one_point_pair(genus, 1, 1));
        out.push_back(one_point_pair(genus, 3, 2));
    }
    return out;
}

Shadow annulus_cores(int copies, int color) {
    if (copies < 1) throw PreconditionViolated("annulus_cores needs a copy");
    Shadow s;
    s.surface = {0, 2};
    for (int i = 0; i <= copies; ++i) {
        Face f;
        f.id = "a" + std::to_string(i);
        f.euler_char = 0;
        f.boundary = i == 0 || i == copies;
        s.faces.push_back(f);
    }
    for (int i = 0; i < copies; ++i) {
        Edge e;
        e.id = "core" + std::to_string(i);
        e.color = color;
        e.faces = {i, i + 1};
        e.circle = true;
        s.edges.push_back(e);
    }
    validate(s);
    return s;
}

std::vector<MovePair> reidemeister_pairs() {
    std::vector<MovePair> out;
    // Curves crossing a separating curve twice.
    Shadow resolved = crossing_pair_resolved(1, 2);
    out.push_back({"crossing pair R-II", crossing_pair(1, 2, true), resolved});
    out.push_back({"crossing pair R-II under", crossing_pair(1, 2, false), resolved});
    const int gamma = static_cast<int>(resolved.edges.size()) - 1;
    out.push_back({"crossing pair kink", add_kink(resolved, gamma, 0, false), add_kink(resolved, gamma, 1, false)});

    // Braid closures beside a separating curve.
    auto braid = [](std::vector<int> w, int strands, int color) {
        return planar_beside_separating(braid_closure(w, strands, color), 1);
    };
    out.push_back({"braid R-II", braid({1, 2, 1}, 3, 1), braid({1, 2, -1, 1, 1}, 3, 1)});
    out.push_back({"braid R-III", braid({1, 2, 1}, 3, 1), braid({2, 1, 2}, 3, 1)});
    {
        OracleGraph g = braid_closure({1, 2, 1}, 3, 1);
        out.push_back({"braid kink", planar_beside_separating(with_kink(g, 0, true), 1),
                       planar_beside_separating(with_kink(g, 0, false), 1)});
    }
    out.push_back({"mixed braid R-II", braid({1, -2, 1, -2}, 3, 2), braid({1, -2, 2, -2, 1, -2}, 3, 2)});
    out.push_back({"mixed braid R-III", braid({-2, 1, 2, 1}, 3, 2), braid({-2, 2, 1, 2}, 3, 2)});
    {
        OracleGraph g = braid_closure({1, -2, 1, -2}, 3, 2);
        out.push_back({"mixed braid kink", planar_beside_separating(with_kink(g, 1, true), 1),
                       planar_beside_separating(with_kink(g, 1, false), 1)});
    }
    return out;
}

}  // namespace shadowsum
