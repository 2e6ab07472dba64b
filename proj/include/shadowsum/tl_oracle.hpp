#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadowsum/laurent.hpp"

namespace shadowsum {

// Planar matching on 2n boundary points. Points 0..n-1 sit on the bottom edge
// and n..2n-1 on the top edge, both numbered left to right.
class TLDiagram {
public:
    TLDiagram() = default;
    explicit TLDiagram(int n);  // identity
    TLDiagram(int n, std::vector<int> match);

    int strands() const { return n_; }
    const std::vector<int>& match() const { return match_; }
    int partner(int p) const { return match_[p]; }
    bool is_planar() const;

    // e_i (1 <= i < n): cap-cup joining strands i-1 and i.
    static TLDiagram generator(int n, int i);
    // `this` stacked on top of `below`; adds the number of closed loops to *loops.
    TLDiagram compose_over(const TLDiagram& below, int* loops) const;
    TLDiagram tensor_strand() const;  // adds one identity strand on the right

    friend bool operator<(const TLDiagram& a, const TLDiagram& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.match_ < b.match_;
    }
    friend bool operator==(const TLDiagram& a, const TLDiagram& b) { return a.n_ == b.n_ && a.match_ == b.match_; }

private:
    int n_ = 0;
    std::vector<int> match_;
};

using TLElement = std::map<TLDiagram, LaurentZ>;

// Loop value -t^2 - t^-2 = -s^4 - s^-4.
LaurentZ loop_value();
// Product in the TL algebra (a on top of b).
TLElement tl_multiply(const TLElement& a, const TLElement& b);

// [n]! times the n-th Jones-Wenzl projector. Integral coefficients.
struct JWExpansion {
    int n = 0;
    LaurentZ scale;   // [n]!
    TLElement terms;  // scale * JW_n
};

inline constexpr int kDefaultOracleBound = 6;

JWExpansion expand_jw(int n, int bound = kDefaultOracleBound);

// A closed network of local pieces glued by wires. Each piece lists its
// endpoints and the weighted planar pairings it expands to.
class TLNetwork {
public:
    int add_endpoints(int count);  // returns first id
    void wire(int p, int q);
    void add_piece(std::vector<int> endpoints, std::vector<std::pair<std::vector<int>, LaurentZ>> terms);

    int endpoint_count() const { return count_; }
    // Sum over resolutions of coefficient * loop_value^#loops.
    LaurentZ evaluate() const;

private:
    struct Piece {
        std::vector<int> endpoints;
        std::vector<std::pair<std::vector<int>, LaurentZ>> terms;  // pairing over local indices
    };
    int count_ = 0;
    std::vector<int> wire_;
    std::vector<Piece> pieces_;
};

// Planar graph given by a rotation system. Triads have three slots; crossings
// have four, with slots 0/2 and 1/3 forming the two strands.
struct OracleGraph {
    enum class Kind { Triad, Crossing };
    struct Vertex {
        Kind kind = Kind::Triad;
        bool over_even = true;  // crossings: the strand through slots 0 and 2 passes over
    };
    struct Dart {
        int vertex;
        int slot;
    };
    struct Edge {
        Dart from;
        Dart to;
        int color;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<int> free_loops;  // colors of crossingless unknotted components

    int add_triad();
    int add_crossing(bool over_even);
    void add_edge(int v, int sv, int w, int sw, int color);
};

// Exact Kauffman bracket of the colored network: JW projectors on edges,
// Kauffman triads at trivalent vertices, cabled crossings resolved by the
// skein relation. Divided by the projector scales at the end.
RatFunc oracle_bracket(const OracleGraph& g, int bound = kDefaultOracleBound);

OracleGraph theta_graph(int a, int b, int c);
OracleGraph tet_graph(int a, int b, int e, int c, int d, int f);
OracleGraph unknot_graph(int n);

}  // namespace shadowsum
