#pragma once

#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "shadowsum/errors.hpp"
#include "shadowsum/fields.hpp"

namespace shadowsum {

using TetLabels = std::array<int, 6>;  // (a, b, e, c, d, f)

// Lexicographically smallest relabeling of the tetrahedron under its 24 symmetries.
TetLabels tet_canonical(const TetLabels& labels);
// All 24 images, including the identity.
std::vector<TetLabels> tet_orbit(const TetLabels& labels);

bool admissible_triple(int a, int b, int c, int r = 0);

// Lower bound (2/pi) * min(n, r - n) for [n] at t = exp(i pi / 2r), 0 <= n <= r.
// The plain form (2/pi) * n only holds for n <= r/2.
Real quantum_int_lower_bound(int n, int r, long prec);

// Quantum recoupling quantities over a scalar field, memoized.
// Tet uses the vertex triples (a,d,e), (b,c,e), (a,b,f), (c,d,f).
template <class Field>
class Recoupling {
public:
    using Value = typename Field::Value;

    explicit Recoupling(Field field, bool memoize = true) : field_(std::move(field)), memoize_(memoize) {}

    const Field& field() const { return field_; }
    int root_order() const { return field_.root_order(); }

    bool admissible(int a, int b, int c) const { return admissible_triple(a, b, c, field_.root_order()); }

    Value quantum_int(int n) const { return field_.quantum_int(n); }

    Value quantum_factorial(int n) const {
        if (n < 0) throw PreconditionViolated("negative quantum factorial");
        {
            std::shared_lock lock(mu_);
            if (n < static_cast<int>(fact_.size())) return fact_[n];
        }
        std::unique_lock lock(mu_);
        if (fact_.empty()) fact_.push_back(field_.one());
        while (static_cast<int>(fact_.size()) <= n) {
            int k = static_cast<int>(fact_.size());
            fact_.push_back(fact_.back() * field_.quantum_int(k));
        }
        return fact_[n];
    }

    Value delta(int n) const {
        Value q = field_.quantum_int(n + 1);
        return n % 2 == 0 ? q : -q;
    }

    Value theta(int a, int b, int c) const {
        if (!admissible(a, b, c))
            throw NonAdmissible("theta(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        std::array<int, 3> key{a, b, c};
        std::sort(key.begin(), key.end());
        if (memoize_) {
            std::shared_lock lock(mu_);
            auto it = theta_.find(key);
            if (it != theta_.end()) return it->second;
        }
        int x = (a + b - c) / 2, y = (a + c - b) / 2, z = (b + c - a) / 2;
        Value num = quantum_factorial(x + y + z + 1) * quantum_factorial(x) * quantum_factorial(y) * quantum_factorial(z);
        Value den = quantum_factorial(x + y) * quantum_factorial(x + z) * quantum_factorial(y + z);
        Value v = field_.divide(num, den);
        if ((x + y + z) % 2 != 0) v = -v;
        if (memoize_) {
            std::unique_lock lock(mu_);
            theta_.emplace(key, v);
        }
        return v;
    }

    Value tet(int a, int b, int e, int c, int d, int f) const {
        check_tet(a, b, e, c, d, f);
        TetLabels key = tet_canonical({a, b, e, c, d, f});
        if (memoize_) {
            std::shared_lock lock(mu_);
            auto it = tet_.find(key);
            if (it != tet_.end()) return it->second;
        }
        Value v = tet_formula(key[0], key[1], key[2], key[3], key[4], key[5]);
        if (memoize_) {
            std::unique_lock lock(mu_);
            tet_.emplace(key, v);
        }
        return v;
    }

    // Closed formula on the arguments exactly as given, bypassing the cache
    // and the canonical relabeling.
    Value tet_uncached(int a, int b, int e, int c, int d, int f) const {
        check_tet(a, b, e, c, d, f);
        return tet_formula(a, b, e, c, d, f);
    }

    Value sixj(int a, int b, int e, int c, int d, int f) const {
        Value num = tet(a, b, e, c, d, f) * delta(e);
        return field_.divide(num, theta(a, d, e) * theta(b, c, e));
    }

    // i^u * s^{u(u+2)}
    Value half_twist(int u) const { return field_.phase(u, static_cast<long>(u) * (u + 2)); }

    // half_twist(u) raised to `power`.
    Value half_twist_power(int u, long power) const {
        return field_.phase(static_cast<long>(u) * power, static_cast<long>(u) * (u + 2) * power);
    }

private:
    void check_tet(int a, int b, int e, int c, int d, int f) const {
        if (!admissible(a, d, e) || !admissible(b, c, e) || !admissible(a, b, f) || !admissible(c, d, f))
            throw NonAdmissible("tet(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(e) + ";" +
                                std::to_string(c) + "," + std::to_string(d) + "," + std::to_string(f) + ")");
    }

    Value tet_formula(int a, int b, int e, int c, int d, int f) const {
        const int as[4] = {(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2};
        const int bs[3] = {(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2};
        Value pre_num = field_.one();
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 4; ++i) pre_num = pre_num * quantum_factorial(bs[j] - as[i]);
        Value pre_den = quantum_factorial(a) * quantum_factorial(b) * quantum_factorial(c) * quantum_factorial(d) *
                        quantum_factorial(e) * quantum_factorial(f);
        int lo = std::max(std::max(as[0], as[1]), std::max(as[2], as[3]));
        int hi = std::min(std::min(bs[0], bs[1]), bs[2]);
        Value sum = field_.zero();
        for (int s = lo; s <= hi; ++s) {
            Value num = quantum_factorial(s + 1);
            if (field_.is_zero(num)) continue;
            Value den = field_.one();
            for (int i = 0; i < 4; ++i) den = den * quantum_factorial(s - as[i]);
            for (int j = 0; j < 3; ++j) den = den * quantum_factorial(bs[j] - s);
            Value term = field_.divide(num, den);
            if (s % 2 != 0) term = -term;
            sum = sum + term;
        }
        return field_.divide(pre_num * sum, pre_den);
    }

    Field field_;
    bool memoize_;
    mutable std::shared_mutex mu_;
    mutable std::vector<Value> fact_;
    mutable std::map<std::array<int, 3>, Value> theta_;
    mutable std::map<TetLabels, Value> tet_;
};

}  // namespace shadowsum
