#include "shadowsum/tl_oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "shadowsum/errors.hpp"

namespace shadowsum {

TLDiagram::TLDiagram(int n) : n_(n), match_(2 * n) {
    for (int i = 0; i < n; ++i) {
        match_[i] = n + i;
        match_[n + i] = i;
    }
}

TLDiagram::TLDiagram(int n, std::vector<int> match) : n_(n), match_(std::move(match)) {
    if (static_cast<int>(match_.size()) != 2 * n) throw std::invalid_argument("TL matching has wrong size");
    for (int p = 0; p < 2 * n; ++p)
        if (match_[p] < 0 || match_[p] >= 2 * n || match_[match_[p]] != p || match_[p] == p)
            throw std::invalid_argument("TL matching is not an involution without fixed points");
}

bool TLDiagram::is_planar() const {
    auto pos = [this](int p) { return p < n_ ? p : 3 * n_ - 1 - p; };
    for (int p = 0; p < 2 * n_; ++p) {
        int a = std::min(pos(p), pos(match_[p])), b = std::max(pos(p), pos(match_[p]));
        for (int q = 0; q < 2 * n_; ++q) {
            int c = std::min(pos(q), pos(match_[q])), d = std::max(pos(q), pos(match_[q]));
            if (a < c && c < b && b < d) return false;
        }
    }
    return true;
}

TLDiagram TLDiagram::generator(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("TL generator index out of range");
    TLDiagram d(n);
    d.match_[i - 1] = i;
    d.match_[i] = i - 1;
    d.match_[n + i - 1] = n + i;
    d.match_[n + i] = n + i - 1;
    return d;
}

TLDiagram TLDiagram::compose_over(const TLDiagram& below, int* loops) const {
    if (below.n_ != n_) throw std::invalid_argument("TL composition of mismatched strand counts");
    const int n = n_;
    std::vector<int> out(2 * n, -1);
    std::vector<char> seen(n, 0);  // interface points
    // Walk from a boundary point of the composite until the next boundary point.
    auto walk = [&](bool start_in_below, int p) {
        bool in_below = start_in_below;
        int cur = p;
        while (true) {
            if (in_below) {
                int q = below.match_[cur];
                if (q < n) return q;  // bottom of composite
                seen[q - n] = 1;
                in_below = false;
                cur = q - n;  // bottom point of the upper diagram
            } else {
                int q = match_[cur];
                if (q >= n) return q;  // top of composite
                seen[q] = 1;
                in_below = true;
                cur = n + q;
            }
        }
    };
    for (int i = 0; i < n; ++i)
        if (out[i] < 0) {
            int q = walk(true, i);
            out[i] = q;
            out[q] = i;
        }
    for (int i = n; i < 2 * n; ++i)
        if (out[i] < 0) {
            int q = walk(false, i);
            out[i] = q;
            out[q] = i;
        }
    int closed = 0;
    for (int k = 0; k < n; ++k) {
        if (seen[k]) continue;
        ++closed;
        int cur = k;  // interface point k: top n+k of below, bottom k of this
        do {
            seen[cur] = 1;
            int q = match_[cur];  // stays on the interface for closed loops
            seen[q] = 1;
            cur = below.match_[n + q] - n;
        } while (cur != k);
    }
    if (loops) *loops += closed;
    return TLDiagram(n, std::move(out));
}

TLDiagram TLDiagram::tensor_strand() const {
    const int n = n_;
    std::vector<int> m(2 * (n + 1));
    auto remap = [n](int p) { return p < n ? p : p + 1; };
    for (int p = 0; p < 2 * n; ++p) m[remap(p)] = remap(match_[p]);
    m[n] = 2 * n + 1;
    m[2 * n + 1] = n;
    return TLDiagram(n + 1, std::move(m));
}

LaurentZ loop_value() { return LaurentZ::monomial(Integer(-1), 4) + LaurentZ::monomial(Integer(-1), -4); }

namespace {

LaurentZ loop_power(int k) {
    LaurentZ r(Integer(1));
    LaurentZ d = loop_value();
    for (int i = 0; i < k; ++i) r *= d;
    return r;
}

LaurentZ quantum_factorial_poly(int n) {
    LaurentZ r(Integer(1));
    for (int k = 2; k <= n; ++k) r *= quantum_integer_poly(k);
    return r;
}

void accumulate(TLElement& into, const TLDiagram& d, const LaurentZ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = into.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

}  // namespace

TLElement tl_multiply(const TLElement& a, const TLElement& b) {
    TLElement out;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) {
            int loops = 0;
            TLDiagram d = da.compose_over(db, &loops);
            accumulate(out, d, ca * cb * loop_power(loops));
        }
    return out;
}

JWExpansion expand_jw(int n, int bound) {
    if (n < 0) throw std::invalid_argument("negative projector index");
    if (n > bound) throw BoundExceeded("projector index " + std::to_string(n) + " above oracle bound");
    static std::mutex mu;
    static std::vector<JWExpansion> cache;
    std::lock_guard lock(mu);
    if (cache.empty()) {
        JWExpansion p0;
        p0.n = 0;
        p0.scale = LaurentZ(Integer(1));
        p0.terms.emplace(TLDiagram(0), LaurentZ(Integer(1)));
        cache.push_back(p0);
        JWExpansion p1;
        p1.n = 1;
        p1.scale = LaurentZ(Integer(1));
        p1.terms.emplace(TLDiagram(1), LaurentZ(Integer(1)));
        cache.push_back(p1);
    }
    while (static_cast<int>(cache.size()) <= n) {
        const JWExpansion& prev = cache.back();
        const int k = prev.n;  // build k+1 from k
        TLElement lifted;
        for (const auto& [d, c] : prev.terms) lifted.emplace(d.tensor_strand(), c);
        TLElement cup;
        cup.emplace(TLDiagram::generator(k + 1, k), LaurentZ(Integer(1)));
        TLElement sandwich = tl_multiply(tl_multiply(lifted, cup), lifted);
        LaurentZ divisor = quantum_factorial_poly(k - 1);
        LaurentZ qk1 = quantum_integer_poly(k + 1);
        JWExpansion next;
        next.n = k + 1;
        next.scale = quantum_factorial_poly(k + 1);
        for (const auto& [d, c] : lifted) accumulate(next.terms, d, c * qk1);
        for (const auto& [d, c] : sandwich) {
            auto q = c.exact_div(divisor);
            if (!q) throw std::logic_error("scaled projector lost integrality");
            accumulate(next.terms, d, *q);
        }
        cache.push_back(std::move(next));
    }
    return cache[n];
}

int TLNetwork::add_endpoints(int count) {
    int first = count_;
    count_ += count;
    wire_.resize(count_, -1);
    return first;
}

void TLNetwork::wire(int p, int q) {
    if (p == q || wire_.at(p) >= 0 || wire_.at(q) >= 0) throw std::invalid_argument("endpoint wired twice");
    wire_[p] = q;
    wire_[q] = p;
}

void TLNetwork::add_piece(std::vector<int> endpoints, std::vector<std::pair<std::vector<int>, LaurentZ>> terms) {
    Piece piece;
    piece.endpoints = std::move(endpoints);
    for (auto& [pairing, coeff] : terms) piece.terms.emplace_back(std::move(pairing), std::move(coeff));
    pieces_.push_back(std::move(piece));
}

LaurentZ TLNetwork::evaluate() const {
    for (int p = 0; p < count_; ++p)
        if (wire_[p] < 0) throw OpenEndpoints("network endpoint " + std::to_string(p) + " is not wired");
    // Transfer over pieces: a state records how the still-open endpoints are
    // joined through the pieces already resolved.
    std::map<std::vector<int>, LaurentZ> states;
    states.emplace(wire_, LaurentZ(Integer(1)));
    const LaurentZ delta = loop_value();
    for (const Piece& piece : pieces_) {
        std::map<std::vector<int>, LaurentZ> next;
        for (const auto& [state, poly] : states) {
            for (const auto& [pairing, coeff] : piece.terms) {
                std::vector<int> st = state;
                int loops = 0;
                for (std::size_t i = 0; i < pairing.size(); ++i) {
                    int j = pairing[i];
                    if (j < static_cast<int>(i)) continue;
                    int x = piece.endpoints[i], y = piece.endpoints[j];
                    int px = st[x], py = st[y];
                    if (px == y) {
                        ++loops;
                    } else {
                        st[px] = py;
                        st[py] = px;
                    }
                    st[x] = st[y] = -1;
                }
                LaurentZ w = poly * coeff;
                for (int k = 0; k < loops; ++k) w *= delta;
                auto [it, inserted] = next.emplace(std::move(st), w);
                if (!inserted) it->second += w;
            }
        }
        states = std::move(next);
    }
    LaurentZ total;
    for (const auto& [state, poly] : states) {
        for (int v : state)
            if (v >= 0) throw OpenEndpoints("network has endpoints outside every piece");
        total += poly;
    }
    return total;
}

int OracleGraph::add_triad() {
    vertices.push_back({Kind::Triad, true});
    return static_cast<int>(vertices.size()) - 1;
}

int OracleGraph::add_crossing(bool over_even) {
    vertices.push_back({Kind::Crossing, over_even});
    return static_cast<int>(vertices.size()) - 1;
}

void OracleGraph::add_edge(int v, int sv, int w, int sw, int color) { edges.push_back({{v, sv}, {w, sw}, color}); }

namespace {

bool triad_admissible(int a, int b, int c) {
    return a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
}

int degree(const OracleGraph::Vertex& v) { return v.kind == OracleGraph::Kind::Triad ? 3 : 4; }

// Nodes are either piece endpoints (one link) or pass-through ports (two links).
struct Wiring {
    std::vector<std::vector<int>> links;
    std::vector<char> endpoint;

    int node(bool is_endpoint) {
        links.emplace_back();
        endpoint.push_back(is_endpoint ? 1 : 0);
        return static_cast<int>(links.size()) - 1;
    }
    void link(int a, int b) {
        links[a].push_back(b);
        links[b].push_back(a);
    }
};

struct PieceSpec {
    std::vector<int> nodes;
    std::vector<std::pair<std::vector<int>, LaurentZ>> terms;
};

void check_rotation_planar(const OracleGraph& g) {
    const int nv = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> dart_edge(nv);
    for (int v = 0; v < nv; ++v) dart_edge[v].assign(degree(g.vertices[v]), -1);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const auto& ed = g.edges[e];
        for (auto d : {ed.from, ed.to}) {
            if (d.vertex < 0 || d.vertex >= nv || d.slot < 0 || d.slot >= degree(g.vertices[d.vertex]))
                throw PreconditionViolated("oracle edge refers to a missing slot");
            if (dart_edge[d.vertex][d.slot] >= 0) throw PreconditionViolated("oracle slot used twice");
            dart_edge[d.vertex][d.slot] = e;
        }
    }
    for (int v = 0; v < nv; ++v)
        for (int e : dart_edge[v])
            if (e < 0) throw OpenEndpoints("oracle vertex with an empty slot");
    // Faces of the rotation system; Euler's formula per component certifies planarity.
    std::vector<std::vector<char>> used(nv);
    for (int v = 0; v < nv; ++v) used[v].assign(degree(g.vertices[v]), 0);
    int faces = 0;
    for (int v = 0; v < nv; ++v)
        for (int s = 0; s < degree(g.vertices[v]); ++s) {
            if (used[v][s]) continue;
            ++faces;
            int cv = v, cs = s;
            while (!used[cv][cs]) {
                used[cv][cs] = 1;
                const auto& ed = g.edges[dart_edge[cv][cs]];
                OracleGraph::Dart other = (ed.from.vertex == cv && ed.from.slot == cs) ? ed.to : ed.from;
                int deg = degree(g.vertices[other.vertex]);
                cv = other.vertex;
                cs = (other.slot + deg - 1) % deg;
            }
        }
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& ed : g.edges) parent[find(ed.from.vertex)] = find(ed.to.vertex);
    int components = 0;
    for (int v = 0; v < nv; ++v)
        if (find(v) == v) ++components;
    if (nv - static_cast<int>(g.edges.size()) + faces != 2 * components)
        throw PreconditionViolated("oracle rotation system is not planar");
}

}  // namespace

RatFunc oracle_bracket(const OracleGraph& g, int bound) {
    check_rotation_planar(g);
    const int nv = static_cast<int>(g.vertices.size());
    for (const auto& e : g.edges)
        if (e.color < 0 || e.color > bound) throw BoundExceeded("oracle color above bound");
    for (int c : g.free_loops)
        if (c < 0 || c > bound) throw BoundExceeded("oracle color above bound");

    std::vector<std::vector<int>> slot_color(nv);
    for (int v = 0; v < nv; ++v) slot_color[v].assign(degree(g.vertices[v]), 0);
    for (const auto& e : g.edges) {
        slot_color[e.from.vertex][e.from.slot] = e.color;
        slot_color[e.to.vertex][e.to.slot] = e.color;
    }

    Wiring w;
    std::vector<PieceSpec> pieces;
    LaurentZ scale(Integer(1));
    LaurentZ factor(Integer(1));

    std::vector<std::vector<std::vector<int>>> port(nv);
    for (int v = 0; v < nv; ++v) {
        port[v].resize(degree(g.vertices[v]));
        for (int s = 0; s < degree(g.vertices[v]); ++s)
            for (int j = 0; j < slot_color[v][s]; ++j) port[v][s].push_back(w.node(false));
    }

    auto add_jw = [&](int n) {
        JWExpansion jw = expand_jw(n, bound);
        PieceSpec piece;
        for (int p = 0; p < 2 * n; ++p) piece.nodes.push_back(w.node(true));
        for (const auto& [d, c] : jw.terms) piece.terms.emplace_back(d.match(), c);
        scale *= jw.scale;
        pieces.push_back(std::move(piece));
        return pieces.back().nodes;
    };

    for (int v = 0; v < nv; ++v) {
        const auto& vert = g.vertices[v];
        const auto& col = slot_color[v];
        if (vert.kind == OracleGraph::Kind::Triad) {
            if (!triad_admissible(col[0], col[1], col[2]))
                throw NonAdmissible("oracle triad colors are not admissible");
            for (int i = 0; i < 3; ++i) {
                int a = i, b = (i + 1) % 3, c = (i + 2) % 3;
                int x = (col[a] + col[b] - col[c]) / 2;
                for (int k = 0; k < x; ++k) w.link(port[v][a][col[a] - 1 - k], port[v][b][k]);
            }
            continue;
        }
        if (col[0] != col[2] || col[1] != col[3]) throw PreconditionViolated("crossing strand changes color");
        const int n = col[0], m = col[1];
        if (n == 0) {
            for (int y = 0; y < m; ++y) w.link(port[v][1][y], port[v][3][m - 1 - y]);
            continue;
        }
        if (m == 0) {
            for (int x = 0; x < n; ++x) w.link(port[v][0][x], port[v][2][n - 1 - x]);
            continue;
        }
        enum { S = 0, E = 1, N = 2, W = 3 };
        const LaurentZ tpos = LaurentZ::monomial(Integer(1), 2);
        const LaurentZ tneg = LaurentZ::monomial(Integer(1), -2);
        std::vector<std::vector<std::array<int, 4>>> grid(n, std::vector<std::array<int, 4>>(m));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < m; ++y) {
                PieceSpec piece;
                for (int k = 0; k < 4; ++k) piece.nodes.push_back(w.node(true));
                for (int k = 0; k < 4; ++k) grid[x][y][k] = piece.nodes[k];
                std::vector<int> smooth_t(4), smooth_inv(4);
                auto pair = [](std::vector<int>& p, int a, int b) {
                    p[a] = b;
                    p[b] = a;
                };
                if (vert.over_even) {  // vertical strand over
                    pair(smooth_t, E, S);
                    pair(smooth_t, W, N);
                    pair(smooth_inv, E, N);
                    pair(smooth_inv, W, S);
                } else {
                    pair(smooth_t, S, W);
                    pair(smooth_t, N, E);
                    pair(smooth_inv, S, E);
                    pair(smooth_inv, N, W);
                }
                piece.terms.emplace_back(smooth_t, tpos);
                piece.terms.emplace_back(smooth_inv, tneg);
                pieces.push_back(std::move(piece));
            }
        for (int x = 0; x < n; ++x) {
            w.link(grid[x][0][S], port[v][0][x]);
            for (int y = 0; y + 1 < m; ++y) w.link(grid[x][y][N], grid[x][y + 1][S]);
            w.link(grid[x][m - 1][N], port[v][2][n - 1 - x]);
        }
        for (int y = 0; y < m; ++y) {
            w.link(grid[n - 1][y][E], port[v][1][y]);
            for (int x = n - 1; x > 0; --x) w.link(grid[x][y][W], grid[x - 1][y][E]);
            w.link(grid[0][y][W], port[v][3][m - 1 - y]);
        }
    }

    for (const auto& e : g.edges) {
        const int n = e.color;
        const auto& pp = port[e.from.vertex][e.from.slot];
        const auto& qq = port[e.to.vertex][e.to.slot];
        if (n >= 2) {
            std::vector<int> box = add_jw(n);
            for (int j = 0; j < n; ++j) {
                w.link(pp[j], box[n - 1 - j]);
                w.link(qq[j], box[n + j]);
            }
        } else {
            for (int j = 0; j < n; ++j) w.link(pp[j], qq[n - 1 - j]);
        }
    }

    for (int n : g.free_loops) {
        if (n == 0) continue;
        if (n == 1) {
            factor *= loop_value();
            continue;
        }
        std::vector<int> box = add_jw(n);
        for (int i = 0; i < n; ++i) w.link(box[n + i], box[i]);
    }

    // Contract ports into endpoint-to-endpoint wires.
    const int total = static_cast<int>(w.links.size());
    for (int x = 0; x < total; ++x) {
        std::size_t want = w.endpoint[x] ? 1 : 2;
        if (w.links[x].size() != want) throw OpenEndpoints("oracle wiring left a dangling strand");
    }
    TLNetwork net;
    std::vector<int> net_id(total, -1);
    for (int x = 0; x < total; ++x)
        if (w.endpoint[x]) net_id[x] = net.add_endpoints(1);
    std::vector<char> visited(total, 0);
    for (int x = 0; x < total; ++x) {
        if (!w.endpoint[x] || visited[x]) continue;
        int prev = x, cur = w.links[x][0];
        visited[x] = 1;
        while (!w.endpoint[cur]) {
            visited[cur] = 1;
            int nxt = w.links[cur][0] == prev ? w.links[cur][1] : w.links[cur][0];
            if (w.links[cur][0] == prev && w.links[cur][1] == prev) nxt = prev;
            prev = cur;
            cur = nxt;
        }
        visited[cur] = 1;
        net.wire(net_id[x], net_id[cur]);
    }
    for (int x = 0; x < total; ++x) {
        if (visited[x]) continue;
        factor *= loop_value();  // a closed strand through ports only
        int prev = -1, cur = x;
        while (!visited[cur]) {
            visited[cur] = 1;
            int nxt = w.links[cur][0] == prev ? w.links[cur][1] : w.links[cur][0];
            prev = cur;
            cur = nxt;
        }
    }
    for (auto& piece : pieces) {
        std::vector<int> ids;
        for (int node : piece.nodes) ids.push_back(net_id[node]);
        net.add_piece(std::move(ids), std::move(piece.terms));
    }
    return RatFunc(net.evaluate() * factor, scale);
}

OracleGraph theta_graph(int a, int b, int c) {
    OracleGraph g;
    int u = g.add_triad(), v = g.add_triad();
    g.add_edge(u, 0, v, 0, a);
    g.add_edge(u, 1, v, 2, b);
    g.add_edge(u, 2, v, 1, c);
    return g;
}

OracleGraph tet_graph(int a, int b, int e, int c, int d, int f) {
    // Planar K4: V4 in the middle, V1, V2, V3 counterclockwise around it.
    OracleGraph g;
    int v1 = g.add_triad(), v2 = g.add_triad(), v3 = g.add_triad(), v4 = g.add_triad();
    g.add_edge(v1, 2, v3, 0, a);
    g.add_edge(v2, 0, v3, 2, b);
    g.add_edge(v2, 1, v4, 1, c);
    g.add_edge(v1, 1, v4, 0, d);
    g.add_edge(v1, 0, v2, 2, e);
    g.add_edge(v3, 1, v4, 2, f);
    return g;
}

OracleGraph unknot_graph(int n) {
    OracleGraph g;
    g.free_loops.push_back(n);
    return g;
}

}  // namespace shadowsum
