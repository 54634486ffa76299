#pragma once

// Dense univariate polynomials over a cyclotomic field: the workhorse behind
// exact division, gcds, valuations and Taylor expansions.  Coefficients are
// Cyc values of one common level; c[i] is the coefficient of x^i and the
// vector is trimmed (empty == zero).

#include <optional>
#include <utility>
#include <vector>

#include "torspair/cyclotomic.hpp"
#include "torspair/errors.hpp"

namespace torspair::detail {

using CP = std::vector<Cyc>;

inline void cp_trim(CP& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline long cp_deg(const CP& p) { return static_cast<long>(p.size()) - 1; }
inline bool cp_is_zero(const CP& p) { return p.empty(); }

inline CP cp_add(const CP& a, const CP& b) {
    CP r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    cp_trim(r);
    return r;
}

inline CP cp_sub(const CP& a, const CP& b) {
    CP r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    cp_trim(r);
    return r;
}

inline CP cp_mul(const CP& a, const CP& b) {
    if (a.empty() || b.empty()) return {};
    CP r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    cp_trim(r);
    return r;
}

inline CP cp_scale(const CP& a, const Cyc& c) {
    if (c.is_zero()) return {};
    CP r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline std::pair<CP, CP> cp_divrem(CP a, const CP& b) {
    if (cp_is_zero(b)) throw AlgebraError("division by zero");
    CP q;
    if (cp_deg(a) >= cp_deg(b)) q.resize(a.size() - b.size() + 1);
    Cyc lead_inv = b.back().inverse();
    while (cp_deg(a) >= cp_deg(b)) {
        Cyc c = a.back() * lead_inv;
        long shift = cp_deg(a) - cp_deg(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        cp_trim(a);
    }
    cp_trim(q);
    return {q, a};
}

// monic gcd (leading coefficient 1); gcd(0,0) == 0
inline CP cp_gcd(CP a, CP b) {
    while (!cp_is_zero(b)) {
        CP r = cp_divrem(std::move(a), b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!cp_is_zero(a)) a = cp_scale(a, a.back().inverse());
    return a;
}

struct CpXgcd {
    CP g, u, v;  // u*a + v*b = g, g monic
};

inline CpXgcd cp_xgcd(CP a, CP b) {
    CP u0 = {Cyc::rational(Rat(1))}, u1 = {};
    CP v0 = {}, v1 = {Cyc::rational(Rat(1))};
    while (!cp_is_zero(b)) {
        auto [q, r] = cp_divrem(a, b);
        CP u2 = cp_sub(u0, cp_mul(q, u1));
        CP v2 = cp_sub(v0, cp_mul(q, v1));
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (cp_is_zero(a)) return {a, u0, v0};
    Cyc inv = a.back().inverse();
    return {cp_scale(a, inv), cp_scale(u0, inv), cp_scale(v0, inv)};
}

inline Cyc cp_eval(const CP& p, const Cyc& x0) {
    Cyc acc = Cyc::rational(Rat(0), x0.level());
    for (long i = cp_deg(p); i >= 0; --i) acc = acc * x0 + p[i];
    return acc;
}

// exact division by (x - x0); nullopt when p(x0) != 0
inline std::optional<CP> cp_deflate(const CP& p, const Cyc& x0) {
    if (cp_is_zero(p)) return CP{};
    CP q(p.size() - 1);
    Cyc carry = Cyc::rational(Rat(0), x0.level());
    for (long i = cp_deg(p); i >= 1; --i) {
        carry = p[i] + carry * x0;
        q[i - 1] = carry;
    }
    Cyc rem = p[0] + carry * x0;
    if (!rem.is_zero()) return std::nullopt;
    cp_trim(q);
    return q;
}

// multiplicity of the root x0 (0 when p(x0) != 0); p must be nonzero
inline long cp_valuation(CP p, const Cyc& x0) {
    if (cp_is_zero(p)) throw AlgebraError("valuation of zero polynomial");
    long v = 0;
    while (true) {
        auto q = cp_deflate(p, x0);
        if (!q) return v;
        p = std::move(*q);
        ++v;
    }
}

// coefficients of p(x0 + w) in powers of w, truncated to `order` terms
inline CP cp_taylor(const CP& p, const Cyc& x0, long order) {
    CP out(order, Cyc::rational(Rat(0), x0.level()));
    CP cur = p;
    for (long k = 0; k < order && !cp_is_zero(cur); ++k) {
        out[k] = cp_eval(cur, x0);
        // synthetic division by (x - x0)
        CP q(cur.size() > 0 ? cur.size() - 1 : 0);
        Cyc carry = Cyc::rational(Rat(0), x0.level());
        for (long i = cp_deg(cur); i >= 1; --i) {
            carry = cur[i] + carry * x0;
            q[i - 1] = carry;
        }
        cp_trim(q);
        cur = std::move(q);
    }
    return out;
}

// power-series inverse of a to `order` terms; a[0] must be nonzero
inline CP cp_series_inverse(const CP& a, long order, long level) {
    if (cp_is_zero(a) || a[0].is_zero()) throw AlgebraError("series inverse of non-unit");
    CP out(order, Cyc::rational(Rat(0), level));
    Cyc c0 = a[0].inverse();
    out[0] = c0;
    for (long k = 1; k < order; ++k) {
        Cyc acc = Cyc::rational(Rat(0), level);
        for (long i = 1; i <= k && i <= cp_deg(a); ++i) acc += a[i] * out[k - i];
        out[k] = -(c0 * acc);
    }
    return out;
}

}  // namespace torspair::detail
