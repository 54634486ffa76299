#include "torspair/ratfunc.hpp"

#include <sstream>

#include "cycpoly.hpp"

namespace torspair {

using detail::CP;

std::string Center::str() const {
    return "zeta_" + std::to_string(n) + "^" + std::to_string(a);
}

namespace {

RingTag field_tag(RingTag tag) { return tag.kind == RingKind::integers ? ring_Q() : tag; }

struct Dense {
    CP poly;
    long low;
};

Dense to_dense(const LaurentPoly& p) {
    if (p.is_zero()) return {CP{}, 0};
    long low = p.min_doubled_exp();
    CP c(p.max_doubled_exp() - low + 1, Cyc::rational(Rat(0), p.ring().coeff_level()));
    for (const auto& [k, v] : p.terms()) c[k - low] = v;
    return {std::move(c), low};
}

LaurentPoly from_dense(RingTag tag, const CP& c, long low) {
    LaurentPoly p(tag);
    for (long i = 0; i < static_cast<long>(c.size()); ++i)
        if (!c[i].is_zero()) p.set_coeff(low + i, c[i]);
    return p;
}

}  // namespace

RatFunc::RatFunc(const LaurentPoly& num)
    : RatFunc(num, LaurentPoly::one(field_tag(num.ring()))) {}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) {
    RingTag a = field_tag(num.ring()), b = field_tag(den.ring());
    RingTag tag;
    if (a.kind == RingKind::cyclotomic && b.kind == RingKind::cyclotomic) {
        if (a.cyc_order != b.cyc_order) throw AlgebraError("ring mismatch");
        tag = a;
    } else {
        tag = a.kind == RingKind::cyclotomic ? a : b;
    }
    if (den.is_zero()) throw AlgebraError("zero denominator");
    LaurentPoly n = num.with_ring(tag), d = den.with_ring(tag);
    if (n.is_zero()) {
        num_ = n;
        den_ = LaurentPoly::one(tag);
        return;
    }
    LaurentPoly g = gcd_over_field(n, d).with_ring(tag);
    n = exact_div(n, g);
    d = exact_div(d, g);
    // normalize the denominator: lowest exponent 0, lowest coefficient 1
    long shift = -d.min_doubled_exp();
    n = n.shifted(shift);
    d = d.shifted(shift);
    Cyc c0 = d.coeff(0).inverse();
    num_ = LaurentPoly::constant(tag, c0) * n;
    den_ = LaurentPoly::constant(tag, c0) * d;
}

LaurentPoly RatFunc::as_laurent() const {
    if (!is_polynomial()) throw AlgebraError("rational function is not polynomial");
    return exact_div(num_, den_);
}

bool RatFunc::has_half_exponents() const {
    return num_.has_half_exponents() || den_.has_half_exponents();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::sharp() const { return RatFunc(num_.sharp(), den_.sharp()); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw AlgebraError("division by zero");
    return RatFunc(den_, num_);
}

bool RatFunc::operator==(const RatFunc& b) const {
    if (ring() == b.ring()) return num_ == b.num_ && den_ == b.den_;
    return num_ * b.den_ == b.num_ * den_;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num() * b.num(), a.den() * b.den());
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

namespace {

void check_center_ring(const RatFunc& f, const Center& c) {
    if (f.ring().kind == RingKind::cyclotomic && f.ring().cyc_order != c.cyc_order())
        throw AlgebraError("ring mismatch");
    if (c.n < 1 || c.a % c.n == 0) throw AlgebraError("invalid center");
}

RatFunc at_center_field(const RatFunc& f, const Center& c) {
    if (f.ring().kind == RingKind::cyclotomic) return f;
    return RatFunc(f.num().with_ring(ring_cyc(c.cyc_order())),
                   f.den().with_ring(ring_cyc(c.cyc_order())));
}

}  // namespace

long valuation_at(const RatFunc& f0, const Center& c) {
    check_center_ring(f0, c);
    if (f0.is_zero()) return kValInfinity;
    RatFunc f = at_center_field(f0, c);
    Cyc u0 = c.u_value();
    Dense dn = to_dense(f.num()), dd = to_dense(f.den());
    return detail::cp_valuation(dn.poly, u0) - detail::cp_valuation(dd.poly, u0);
}

bool is_germ_at(const RatFunc& f, const Center& c) {
    long v = valuation_at(f, c);
    return v >= 0;
}

bool is_unit_germ_at(const RatFunc& f, const Center& c) { return valuation_at(f, c) == 0; }

bool Jet::is_zero() const {
    for (const auto& x : coeffs)
        if (!x.is_zero()) return false;
    return true;
}

std::string Jet::str() const {
    std::ostringstream os;
    std::string mod = "(t-" + center.str() + ")^" + std::to_string(order());
    if (is_zero()) return "0 (mod " + mod + ")";
    bool first = true;
    for (long k = 0; k < order(); ++k) {
        if (coeffs[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs[k].str() << ")";
        if (k > 0) os << "*w^" << k;
    }
    os << "  [w = t-" << center.str() << ", mod w^" << order() << "]";
    return os.str();
}

Jet jet_at(const RatFunc& f0, const Center& c, long order) {
    check_center_ring(f0, c);
    if (order < 1) throw AlgebraError("jet order must be positive");
    long level = c.cyc_order();
    Jet out{c, std::vector<Cyc>(order, Cyc::rational(Rat(0), level))};
    if (f0.is_zero()) return out;
    RatFunc f = at_center_field(f0, c);
    if (f.has_half_exponents()) throw AlgebraError("half-exponent jet");
    // write f = t^k * (num / den) with num, den honest polynomials in t
    Dense dn = to_dense(f.num()), dd = to_dense(f.den());
    long tshift = (dn.low - dd.low) / 2;
    CP num_t, den_t;  // collapse u^2 -> t (all exponents are even here)
    auto collapse = [&](const CP& p) {
        CP q((p.size() + 1) / 2, Cyc::rational(Rat(0), level));
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i].is_zero()) continue;
            q[i / 2] = p[i];
        }
        detail::cp_trim(q);
        return q;
    };
    num_t = collapse(dn.poly);
    den_t = collapse(dd.poly);
    Cyc zeta = c.t_value();
    // fold the t^k monomial factor into numerator or denominator
    CP tt = {Cyc::rational(Rat(0), level), Cyc::rational(Rat(1), level)};
    for (long i = 0; i < tshift; ++i) num_t = detail::cp_mul(num_t, tt);
    for (long i = 0; i < -tshift; ++i) den_t = detail::cp_mul(den_t, tt);
    if (detail::cp_eval(den_t, zeta).is_zero()) throw AlgebraError("jet of a non-germ");
    CP num_w = detail::cp_taylor(num_t, zeta, order);
    CP den_w = detail::cp_taylor(den_t, zeta, order);
    detail::cp_trim(num_w);
    detail::cp_trim(den_w);
    CP den_inv = detail::cp_series_inverse(den_w, order, level);
    for (long k = 0; k < order; ++k) {
        Cyc acc = Cyc::rational(Rat(0), level);
        for (long i = 0; i <= k; ++i) {
            if (i <= detail::cp_deg(num_w) && (k - i) < order)
                acc += num_w[i] * den_inv[k - i];
        }
        out.coeffs[k] = acc;
    }
    return out;
}

Jet jet_add(const Jet& a, const Jet& b) {
    if (!(a.center == b.center) || a.order() != b.order())
        throw AlgebraError("jet shape mismatch");
    Jet out = a;
    for (long k = 0; k < a.order(); ++k) out.coeffs[k] += b.coeffs[k];
    return out;
}

Jet jet_mul(const Jet& a, const Jet& b) {
    if (!(a.center == b.center) || a.order() != b.order())
        throw AlgebraError("jet shape mismatch");
    long level = a.center.cyc_order();
    Jet out{a.center, std::vector<Cyc>(a.order(), Cyc::rational(Rat(0), level))};
    for (long i = 0; i < a.order(); ++i)
        for (long j = 0; i + j < a.order(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

Germ::Germ(RatFunc value, Center center) : f_(std::move(value)), c_(center) {
    if (!is_germ_at(f_, c_)) throw AlgebraError("not a germ at the center");
}

long Germ::valuation() const { return valuation_at(f_, c_); }

Germ Germ::inverted() const {
    long v = valuation();
    if (v == kValInfinity || v > 0) throw AlgebraError("non-unit germ");
    return Germ(f_.inverse(), c_);
}

Jet Germ::jet(long order) const { return jet_at(f_, c_, order); }

Germ Germ::operator+(const Germ& b) const {
    if (!(c_ == b.c_)) throw AlgebraError("center mismatch");
    return Germ(f_ + b.f_, c_);
}

Germ Germ::operator-(const Germ& b) const {
    if (!(c_ == b.c_)) throw AlgebraError("center mismatch");
    return Germ(f_ - b.f_, c_);
}

Germ Germ::operator*(const Germ& b) const {
    if (!(c_ == b.c_)) throw AlgebraError("center mismatch");
    return Germ(f_ * b.f_, c_);
}

bool Germ::operator==(const Germ& b) const { return c_ == b.c_ && f_ == b.f_; }

bool up_to_unit_equal(const Germ& a, const Germ& b) {
    return up_to_unit_equal_at(a.value(), b.value(), a.center());
}

bool up_to_unit_equal_at(const RatFunc& a, const RatFunc& b, const Center& c) {
    long va = valuation_at(a, c), vb = valuation_at(b, c);
    return va == vb;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return as_laurent().str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace torspair
