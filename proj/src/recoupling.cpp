#include "shadowsum/recoupling.hpp"

#include <algorithm>

namespace shadowsum {

namespace {

// Edges of the tetrahedron as vertex pairs, in label order (a, b, e, c, d, f).
constexpr int kEdgeEnds[6][2] = {{0, 2}, {1, 2}, {0, 1}, {1, 3}, {0, 3}, {2, 3}};

int edge_index(int u, int v) {
    for (int k = 0; k < 6; ++k)
        if ((kEdgeEnds[k][0] == u && kEdgeEnds[k][1] == v) || (kEdgeEnds[k][0] == v && kEdgeEnds[k][1] == u))
            return k;
    return -1;
}

}  // namespace

std::vector<TetLabels> tet_orbit(const TetLabels& labels) {
    std::vector<TetLabels> out;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        TetLabels img{};
        for (int k = 0; k < 6; ++k) img[k] = labels[edge_index(perm[kEdgeEnds[k][0]], perm[kEdgeEnds[k][1]])];
        out.push_back(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

TetLabels tet_canonical(const TetLabels& labels) {
    auto orbit = tet_orbit(labels);
    return *std::min_element(orbit.begin(), orbit.end());
}

bool admissible_triple(int a, int b, int c, int r) {
    if (a < 0 || b < 0 || c < 0) return false;
    if ((a + b + c) % 2 != 0) return false;
    if (a > b + c || b > a + c || c > a + b) return false;
    if (r > 0 && (a + b + c > 2 * r - 4 || a > r - 2 || b > r - 2 || c > r - 2)) return false;
    return true;
}

Real quantum_int_lower_bound(int n, int r, long prec) {
    if (r < 2 || n < 0 || n > r) throw PreconditionViolated("quantum_int_lower_bound needs 0 <= n <= r");
    Real two(2L, prec);
    return two * static_cast<long>(std::min(n, r - n)) / pi(prec);
}

}  // namespace shadowsum
