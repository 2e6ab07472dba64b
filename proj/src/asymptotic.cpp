#include "shadowsum/asymptotic.hpp"

#include <algorithm>
#include <sstream>

#include "shadowsum/charvar.hpp"
#include "shadowsum/statesum.hpp"

namespace shadowsum {

ZetaExpression ZetaExpression::from_rational(const Rational& q) {
    ZetaExpression z;
    z.constant = q;
    return z;
}

bool ZetaExpression::is_rational() const {
    for (const auto& [k, c] : zeta)
        if (sgn(c) != 0) return false;
    return sgn(log2) == 0;
}

std::map<int, Rational> ZetaExpression::pi_powers() const {
    std::map<int, Rational> out;
    for (const auto& [k, c] : zeta)
        if (k % 2 == 0 && sgn(c) != 0) {
            Rational v = c * zeta_even_coefficient(k);
            v.canonicalize();
            out[k] = v;
        }
    return out;
}

std::map<int, Rational> ZetaExpression::odd_zetas() const {
    std::map<int, Rational> out;
    for (const auto& [k, c] : zeta)
        if (k % 2 != 0 && sgn(c) != 0) out[k] = c;
    return out;
}

Real ZetaExpression::evaluate(long prec) const {
    Real v(constant, prec);
    for (const auto& [k, c] : zeta)
        if (sgn(c) != 0) v += Real(c, prec) * shadowsum::zeta(static_cast<unsigned long>(k), prec);
    if (sgn(log2) != 0) v += Real(log2, prec) * log2_const(prec);
    return v;
}

namespace {

void append_term(std::ostringstream& os, const Rational& c, const std::string& symbol) {
    if (sgn(c) == 0) return;
    Rational a = abs(c);
    os << (sgn(c) < 0 ? " - " : " + ") << a.get_str() << "*" << symbol;
}

}  // namespace

std::string ZetaExpression::to_string() const {
    std::ostringstream os;
    os << constant.get_str();
    for (const auto& [k, c] : pi_powers()) append_term(os, c, "pi^" + std::to_string(k));
    for (const auto& [k, c] : odd_zetas()) append_term(os, c, "zeta(" + std::to_string(k) + ")");
    append_term(os, log2, "log(2)");
    return os.str();
}

ZetaExpression& ZetaExpression::operator+=(const ZetaExpression& o) {
    constant += o.constant;
    for (const auto& [k, c] : o.zeta) {
        zeta[k] += c;
        if (sgn(zeta[k]) == 0) zeta.erase(k);
    }
    log2 += o.log2;
    return *this;
}

ZetaExpression operator-(const ZetaExpression& a, const ZetaExpression& b) {
    ZetaExpression neg = b;
    neg.constant = -neg.constant;
    for (auto& [k, c] : neg.zeta) c = -c;
    neg.log2 = -neg.log2;
    return a + neg;
}

bool operator==(const ZetaExpression& a, const ZetaExpression& b) {
    auto d = a - b;
    return sgn(d.constant) == 0 && d.is_rational();
}

Rational harmonic(long n, int k) {
    Rational s = 0;
    for (long j = 1; j <= n; ++j) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k));
        s += Rational(1, p);
    }
    return s;
}

Rational alternating_harmonic(long n, int k) {
    Rational s = 0;
    for (long j = 1; j <= n; ++j) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k));
        Rational term(1, p);
        if (j % 2 != 0) term = -term;
        s += term;
    }
    return s;
}

void QPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

QPoly QPoly::linear(const Rational& root_shift) { return QPoly({root_shift, Rational(1)}); }

Rational QPoly::operator()(const Rational& x) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = Rational(v * x + *it);
    return v;
}

QPoly QPoly::shifted(const Rational& h) const {
    QPoly out;
    QPoly base = linear(h);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * base + QPoly({*it});
    return out;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
}

QPoly QPoly::interpolate(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    const std::size_t n = x.size();
    if (y.size() != n) throw PreconditionViolated("interpolate: size mismatch");
    std::vector<Rational> dd = y;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) dd[i] = Rational((dd[i] - dd[i - 1]) / (x[i] - x[i - level]));
    QPoly out;
    for (std::size_t i = n; i-- > 0;) out = out * linear(-x[i]) + QPoly({dd[i]});
    return out;
}

namespace {

QPoly factors_poly(const LinearFactors& d) {
    QPoly p({Rational(1)});
    for (const auto& [q, m] : d)
        for (int i = 0; i < m; ++i) p = p * QPoly::linear(Rational(q));
    return p;
}

// Quotient of polynomial long division.
QPoly quotient(const QPoly& num, const QPoly& den) {
    if (num.degree() < den.degree()) return QPoly();
    std::vector<Rational> rem;
    for (int i = 0; i <= num.degree(); ++i) rem.push_back(num.coeff(i));
    const int dd = den.degree();
    std::vector<Rational> q(num.degree() - dd + 1, Rational(0));
    for (int i = num.degree(); i >= dd; --i) {
        Rational c = rem[i] / den.coeff(dd);
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den.coeff(j);
    }
    return QPoly(std::move(q));
}

// First n coefficients of a(w) / b(w) as a power series; b(0) != 0.
std::vector<Rational> series_divide(const QPoly& a, const QPoly& b, int n) {
    std::vector<Rational> out(n, Rational(0));
    auto ca = [&](int i) { return i <= a.degree() ? a.coeff(i) : Rational(0); };
    auto cb = [&](int i) { return i <= b.degree() ? b.coeff(i) : Rational(0); };
    for (int i = 0; i < n; ++i) {
        Rational v = ca(i);
        for (int j = 0; j < i; ++j) v -= out[j] * cb(i - j);
        out[i] = v / cb(0);
    }
    return out;
}

}  // namespace

PartialFractions partial_fractions(const QPoly& numerator, const LinearFactors& denominator) {
    PartialFractions pf;
    pf.polynomial = quotient(numerator, factors_poly(denominator));
    for (const auto& [q, m] : denominator) {
        if (m <= 0) continue;
        // Expand around U = -q in w = U + q.
        QPoly num_w = numerator.shifted(Rational(-q));
        QPoly rest({Rational(1)});
        for (const auto& [q2, m2] : denominator)
            if (q2 != q)
                for (int i = 0; i < m2; ++i) rest = rest * QPoly::linear(Rational(q2 - q));
        auto a = series_divide(num_w, rest, m);
        std::vector<Rational> c(m);
        for (int j = 1; j <= m; ++j) c[j - 1] = a[m - j];
        pf.terms[q] = std::move(c);
    }
    return pf;
}

std::optional<ZetaExpression> sum_rational_tail(const PartialFractions& pf, long u0, bool alternating) {
    if (!pf.polynomial.is_zero()) return std::nullopt;
    ZetaExpression out;
    Rational simple_sum = 0;
    for (const auto& [q, coeffs] : pf.terms) {
        const long first = u0 + q;  // smallest n = U + q in the tail
        if (first < 1) throw PreconditionViolated("sum_rational_tail: pole inside the summation range");
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const int k = static_cast<int>(i) + 1;
            const Rational& c = coeffs[i];
            if (sgn(c) == 0) continue;
            if (!alternating) {
                if (k == 1) {
                    simple_sum += c;
                    out.constant -= c * harmonic(first - 1, 1);
                } else {
                    out.zeta[k] += c;
                    out.constant -= c * harmonic(first - 1, k);
                }
            } else {
                // sum_{U >= u0} (-1)^U / (U+q)^k = (-1)^q sum_{n >= first} (-1)^n / n^k
                Rational sc = q % 2 == 0 ? c : Rational(-c);
                if (k == 1) {
                    out.log2 -= sc;
                } else {
                    Integer two_pow;
                    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k - 1));
                    out.zeta[k] -= sc * (1 - Rational(1, two_pow));
                }
                out.constant -= sc * alternating_harmonic(first - 1, k);
            }
        }
    }
    if (sgn(simple_sum) != 0) return std::nullopt;
    for (auto it = out.zeta.begin(); it != out.zeta.end();) {
        it->second.canonicalize();
        it = sgn(it->second) == 0 ? out.zeta.erase(it) : std::next(it);
    }
    out.constant.canonicalize();
    out.log2.canonicalize();
    return out;
}

namespace {

// Adds the linear factors that clear prod (U+num_i)! / prod (U+den_i)!, pairing
// arguments in sorted order.
void ratio_denominator(std::vector<long> num, std::vector<long> den, LinearFactors& out) {
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    for (std::size_t i = 0; i < num.size(); ++i)
        for (long j = num[i] + 1; j <= den[i]; ++j) out[j] += 1;
}

void lcm_into(LinearFactors& acc, const LinearFactors& f) {
    for (const auto& [q, m] : f) acc[q] = std::max(acc[q], m);
}

void multiply_into(LinearFactors& acc, const LinearFactors& f) {
    for (const auto& [q, m] : f) acc[q] += m;
}

int factor_degree(const LinearFactors& f) {
    int d = 0;
    for (const auto& [q, m] : f) d += m;
    return d;
}

struct FactorialArgs {
    std::vector<long> num;
    std::vector<long> den;
};

// Splits factorial arguments at two consecutive U values into those growing
// with U (kept as offsets from U) and constants. Returns false when an argument
// grows faster than U, or when the growing ones do not balance.
bool growing_offsets(const FactorialArgs& at_u, const FactorialArgs& at_next, long u, FactorialArgs& out) {
    auto split = [&](const std::vector<long>& a, const std::vector<long>& b, std::vector<long>& keep) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            long slope = b[i] - a[i];
            if (slope == 1)
                keep.push_back(a[i] - u);
            else if (slope != 0)
                return false;
        }
        return true;
    };
    out = {};
    if (!split(at_u.num, at_next.num, out.num) || !split(at_u.den, at_next.den, out.den)) return false;
    return out.num.size() == out.den.size();
}

// Factorial arguments of one summand of the closed Tet formula.
FactorialArgs tet_summand_args(int a, int b, int e, int c, int d, int f, int index) {
    const long as[4] = {(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2};
    const long bs[3] = {(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2};
    const long lo = *std::max_element(as, as + 4);
    const long s = lo + index;
    FactorialArgs out;
    for (long bj : bs)
        for (long ai : as) out.num.push_back(bj - ai);
    out.num.push_back(s + 1);
    for (long x : {a, b, c, d, e, f}) out.den.push_back(x);
    for (long ai : as) out.den.push_back(s - ai);
    for (long bj : bs) out.den.push_back(bj - s);
    return out;
}

int tet_summand_count(int a, int b, int e, int c, int d, int f) {
    const int as[4] = {(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2};
    const int bs[3] = {(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2};
    return *std::min_element(bs, bs + 3) - *std::max_element(as, as + 4) + 1;
}

FactorialArgs inverse_theta_args(int a, int b, int k) {
    long x = (a + b - k) / 2, y = (a + k - b) / 2, z = (b + k - a) / 2;
    return {{x + y, x + z, y + z}, {x + y + z + 1, x, y, z}};
}

Coloring at(const std::vector<int>& offset, long u) {
    Coloring c(offset.size());
    for (std::size_t i = 0; i < offset.size(); ++i) c[i] = static_cast<int>(u - offset[i]);
    return c;
}

// Exponent of -1 in the sign of the term for coloring c at t = -1, up to a
// constant: Delta powers, half twists, theta signs, and (-1)^U per Tet.
long sign_exponent(const Shadow& s, const Coloring& c, long u) {
    long p = 0;
    for (std::size_t f = 0; f < s.faces.size(); ++f) {
        const long uf = c[f];
        p += s.faces[f].euler_char * uf;
        p += s.faces[f].twice_gleam * (uf * (uf + 3) / 2);
    }
    for (const auto& e : s.edges)
        if (e.adjacent_to_vertex()) p += (c[e.faces[0]] + c[e.faces[1]] + e.color) / 2;
    p += static_cast<long>(s.vertices.size()) * u;
    return ((p % 2) + 2) % 2;
}

bool pattern_denominator(const Shadow& s, const std::vector<int>& offset, long u, LinearFactors& out) {
    const Coloring c0 = at(offset, u), c1 = at(offset, u + 1);
    for (std::size_t f = 0; f < s.faces.size(); ++f)
        if (s.faces[f].euler_char < 0) out[1 - offset[f]] += -s.faces[f].euler_char;
    for (const auto& e : s.edges) {
        if (!e.adjacent_to_vertex()) continue;
        FactorialArgs g;
        if (!growing_offsets(inverse_theta_args(c0[e.faces[0]], c0[e.faces[1]], e.color),
                             inverse_theta_args(c1[e.faces[0]], c1[e.faces[1]], e.color), u, g))
            return false;
        ratio_denominator(g.num, g.den, out);
    }
    for (const auto& v : s.vertices) {
        const auto& q = v.corners;
        auto args = [&](const Coloring& c, int index) {
            return tet_summand_args(c[q[0]], c[q[1]], v.over, c[q[2]], c[q[3]], v.under, index);
        };
        const int n = tet_summand_count(c0[q[0]], c0[q[1]], v.over, c0[q[2]], c0[q[3]], v.under);
        if (n != tet_summand_count(c1[q[0]], c1[q[1]], v.over, c1[q[2]], c1[q[3]], v.under)) return false;
        LinearFactors vd;
        for (int i = 0; i < n; ++i) {
            FactorialArgs g;
            if (!growing_offsets(args(c0, i), args(c1, i), u, g)) return false;
            LinearFactors sd;
            ratio_denominator(g.num, g.den, sd);
            lcm_into(vd, sd);
        }
        multiply_into(out, vd);
    }
    return true;
}

struct Group {
    std::vector<const std::vector<int>*> patterns;
    LinearFactors den;
};

}  // namespace

std::optional<ExactMinusOne> exact_closed_minus_one(const Shadow& s, std::string* why_not) {
    auto fail = [&](const std::string& msg) -> std::optional<ExactMinusOne> {
        if (why_not) *why_not = msg;
        return std::nullopt;
    };
    if (!s.closed() || s.surface.genus < 2) return fail("needs a closed surface of genus >= 2");
    ColoringEnumerator en(s, 0);
    if (!en.has_stable_pattern()) return fail("no stable shell pattern");

    Recoupling<MinusOneField> rc(MinusOneField{});
    // Start past the stable range far enough that every Tet summation range
    // is bounded by the U-linear half-sums.
    const long u0 = en.stable_from() + 2L * s.max_edge_color() + 2;

    Group groups[2];
    for (const auto& d : en.offsets()) {
        const Coloring base = at(d, u0);
        long p[4];
        for (int i = 0; i < 4; ++i) p[i] = sign_exponent(s, at(d, u0 + i), u0 + i);
        if (p[2] != p[0] || p[3] != p[1]) return fail("shell signs are not 2-periodic");
        const int alpha = static_cast<int>((p[1] - p[0] + 2) % 2);
        LinearFactors den;
        if (!pattern_denominator(s, d, u0, den)) return fail("term is not rational in U");
        groups[alpha].patterns.push_back(&d);
        lcm_into(groups[alpha].den, den);
    }

    ExactMinusOne out;
    out.shells_summed = static_cast<int>(u0);
    Rational partial = 0;
    for (long u = 0; u < u0; ++u)
        for (const auto& c : en.shell(static_cast<int>(u))) partial += term_weight(rc, s, c);
    out.value = ZetaExpression::from_rational(partial);

    for (int alpha = 0; alpha < 2; ++alpha) {
        const Group& g = groups[alpha];
        if (g.patterns.empty()) continue;
        const int deg = factor_degree(g.den);
        const int nodes = deg + 2;
        const QPoly dpoly = factors_poly(g.den);
        auto sample = [&](long u) -> Rational {
            Rational v = 0;
            for (const auto* d : g.patterns) v += term_weight(rc, s, at(*d, u));
            if (alpha == 1 && u % 2 != 0) v = -v;
            return v * dpoly(Rational(u));
        };
        std::vector<Rational> xs, ys;
        for (int i = 0; i < nodes; ++i) {
            xs.emplace_back(u0 + i);
            ys.push_back(sample(u0 + i));
        }
        QPoly num = QPoly::interpolate(xs, ys);
        for (int i = nodes; i < nodes + 2; ++i)
            if (num(Rational(u0 + i)) != sample(u0 + i)) return fail("interpolation check failed");
        auto tail = sum_rational_tail(partial_fractions(num, g.den), u0, alpha == 1);
        if (!tail) return fail("shell sums decay too slowly to converge");
        out.value += *tail;
        out.interpolation_degree = std::max(out.interpolation_degree, deg);
    }
    if (why_not) why_not->clear();
    return out;
}

}  // namespace shadowsum
