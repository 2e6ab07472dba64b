#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "shadowsum/asymptotic.hpp"
#include "shadowsum/context.hpp"
#include "shadowsum/diagram.hpp"
#include "shadowsum/recoupling.hpp"

namespace shadowsum {

enum class EvalStatus { Exact, Truncated, DivergenceDetected, Inconclusive };
enum class Convergence { ConvergesCertified, DivergenceDetected, Inconclusive };

std::string to_string(EvalStatus s);
std::string to_string(Convergence c);

struct EvalResult {
    Complex value{kDefaultPrecisionBits};
    std::optional<Rational> exact;              // finite sums at t = -1
    std::optional<ZetaExpression> closed_form;  // infinite sums at t = -1
    std::optional<Real> tail_bound;
    int shells_summed = 0;
    EvalStatus status = EvalStatus::Exact;
    std::vector<std::string> diagnostics;
};

struct EvalOptions {
    double epsilon = 1e-10;
    int max_shells = 4000;
    int workers = 0;          // 0: hardware concurrency
    int cesaro_terms = 1000;  // n_max when routing genus 1
};

// Product over faces of half_twist(u)^{twice_gleam} * Delta_u^{x_f}, over
// vertices of Tet(u1, u2, k; u3, u4, l), divided by theta(u, u', k_e) for every
// edge that meets a vertex.
template <class Field>
typename Field::Value term_weight(const Recoupling<Field>& rc, const Shadow& s, const Coloring& c) {
    const Field& field = rc.field();
    auto w = field.one();
    for (std::size_t f = 0; f < s.faces.size(); ++f) {
        const int u = c[f];
        const Face& face = s.faces[f];
        if (face.twice_gleam != 0) w = w * rc.half_twist_power(u, face.twice_gleam);
        if (face.euler_char != 0) {
            auto d = rc.delta(u);
            auto p = field.one();
            for (int i = 0; i < std::abs(face.euler_char); ++i) p = p * d;
            w = face.euler_char > 0 ? w * p : field.divide(w, p);
        }
    }
    for (const auto& v : s.vertices) {
        const auto& q = v.corners;
        w = w * rc.tet(c[q[0]], c[q[1]], v.over, c[q[2]], c[q[3]], v.under);
    }
    for (const auto& e : s.edges)
        if (e.adjacent_to_vertex()) w = field.divide(w, rc.theta(c[e.faces[0]], c[e.faces[1]], e.color));
    return w;
}

Complex term_weight(const Shadow& s, const Coloring& c, const ScalarContext& ctx);

// Computes fn(i) for i in [0, n) on up to `workers` threads; results are
// returned in index order so reductions stay deterministic.
template <class T>
std::vector<T> parallel_map(std::size_t n, int workers, const std::function<T(std::size_t)>& fn) {
    std::vector<std::optional<T>> slots(n);
    if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(n, 1)));
    if (workers <= 1 || n < 8) {
        for (std::size_t i = 0; i < n; ++i) slots[i].emplace(fn(i));
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr error;
        std::mutex error_mu;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < n; i += workers) slots[i].emplace(fn(i));
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

// Closed surfaces of genus >= 2 at t = -1 (exact) or |t| != 1.
EvalResult eval_closed(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt = {});
// Surfaces with boundary; boundary faces carry color 0 and the sum is finite.
EvalResult eval_boundary(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt = {});
// Finite sum over r-admissible colorings.
EvalResult eval_root_of_unity(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt = {});

struct Classification {
    Convergence verdict = Convergence::Inconclusive;
    std::string reason;
    std::vector<double> shell_magnitudes;  // sum of |term| per probed shell
};
Classification classify_convergence(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt = {});

// Shadow series; throws Divergent when classification forbids summing.
EvalResult eval_shadow(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt = {});

// Genus-1 closed surfaces: mean of Delta_u * YM(punctured, boundary loop u) over u <= n_max.
EvalResult cesaro_eval(const Shadow& s, const ScalarContext& ctx, int n_max, const EvalOptions& opt = {});
std::vector<Complex> cesaro_means(const Shadow& s, const ScalarContext& ctx, int n_max, const EvalOptions& opt = {});

// The closed surface punctured inside `face`, with a boundary-parallel loop of
// color `loop_color` around the new boundary.
Shadow punctured(const Shadow& s, int face, int loop_color);

struct FoldReport {
    EvalResult result;
    bool symmetric = false;
    double max_discrepancy = 0;
    std::vector<Complex> terms;  // term(u), u = 0..r-2
    Complex full_sum{kDefaultPrecisionBits};
};
// Root-of-unity evaluation regrouped by the loop color u around a puncture,
// folding u with r-2-u when the terms agree. `framing` twists the loop.
FoldReport symmetry_fold(const Shadow& s, const ScalarContext& ctx, int framing = 0, const EvalOptions& opt = {});

struct LimitPoint {
    int r = 0;
    Complex value{kDefaultPrecisionBits};
    double difference = 0;
};
struct LimitScan {
    Complex reference{kDefaultPrecisionBits};  // 2 * YM at t = -1
    std::vector<LimitPoint> points;
};
LimitScan limit_scan(const Shadow& s, const std::vector<int>& r_list, const EvalOptions& opt = {},
                     long precision_bits = kDefaultPrecisionBits);

// Picks the engine from the surface and the scalar mode.
EvalResult evaluate(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt = {});

}  // namespace shadowsum
