#include "torspair/laurent.hpp"

#include <cctype>
#include <sstream>

#include "cycpoly.hpp"

namespace torspair {

using detail::CP;

std::string RingTag::str() const {
    switch (kind) {
        case RingKind::integers: return "Z[t^(1/2),t^(-1/2)]";
        case RingKind::rationals: return "Q[t^(1/2),t^(-1/2)]";
        case RingKind::cyclotomic:
            return "Q(z_" + std::to_string(cyc_order) + ")[t^(1/2),t^(-1/2)]";
    }
    return "?";
}

namespace {

RingTag common_ring(const RingTag& a, const RingTag& b) {
    if (a == b) return a;
    if (a.kind == RingKind::cyclotomic && b.kind == RingKind::cyclotomic)
        throw AlgebraError("ring mismatch");
    // lift along Z -> Q -> cyclotomic
    auto rank = [](RingKind k) { return k == RingKind::integers ? 0 : k == RingKind::rationals ? 1 : 2; };
    return rank(a.kind) >= rank(b.kind) ? a : b;
}

Cyc to_level(const Cyc& c, long level) {
    return c.level() == level ? c : c.lifted(level);
}

}  // namespace

LaurentPoly LaurentPoly::one(RingTag tag) { return constant(tag, Cyc::rational(Rat(1))); }

LaurentPoly LaurentPoly::constant(RingTag tag, const Cyc& c) { return monomial(tag, c, 0); }

LaurentPoly LaurentPoly::monomial(RingTag tag, const Cyc& c, long doubled_exp) {
    LaurentPoly p(tag);
    Cyc cc = to_level(c, tag.coeff_level());
    if (!cc.is_zero()) p.terms_[doubled_exp] = cc;
    return p;
}

LaurentPoly LaurentPoly::t_half_power(RingTag tag, long k) {
    return monomial(tag, Cyc::rational(Rat(1)), k);
}

long LaurentPoly::min_doubled_exp() const {
    if (terms_.empty()) throw AlgebraError("exponent of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_doubled_exp() const {
    if (terms_.empty()) throw AlgebraError("exponent of zero polynomial");
    return terms_.rbegin()->first;
}

bool LaurentPoly::has_half_exponents() const {
    for (const auto& [k, c] : terms_)
        if (k % 2 != 0) return true;
    return false;
}

Cyc LaurentPoly::coeff(long doubled_exp) const {
    auto it = terms_.find(doubled_exp);
    if (it == terms_.end()) return Cyc::rational(Rat(0), tag_.coeff_level());
    return it->second;
}

void LaurentPoly::set_coeff(long doubled_exp, const Cyc& c) {
    Cyc cc = to_level(c, tag_.coeff_level());
    if (cc.is_zero())
        terms_.erase(doubled_exp);
    else
        terms_[doubled_exp] = cc;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(tag_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

LaurentPoly LaurentPoly::sharp() const {
    LaurentPoly r(tag_);
    for (const auto& [k, c] : terms_) r.terms_[-k] = c.conj();
    return r;
}

LaurentPoly LaurentPoly::shifted(long doubled_delta) const {
    LaurentPoly r(tag_);
    for (const auto& [k, c] : terms_) r.terms_[k + doubled_delta] = c;
    return r;
}

Cyc LaurentPoly::evaluate_half(const Cyc& u) const {
    Cyc acc = Cyc::rational(Rat(0), u.level());
    for (const auto& [k, c] : terms_) acc += to_level(c, u.level()) * u.pow(k);
    return acc;
}

Cyc LaurentPoly::evaluate(const Cyc& v) const {
    if (has_half_exponents()) throw AlgebraError("half-exponent evaluation requires a branch");
    Cyc acc = Cyc::rational(Rat(0), v.level());
    for (const auto& [k, c] : terms_) acc += to_level(c, v.level()) * v.pow(k / 2);
    return acc;
}

LaurentPoly LaurentPoly::with_ring(RingTag tag) const {
    if (tag_ == tag) return *this;
    RingTag target = common_ring(tag_, tag);
    if (!(target == tag)) throw AlgebraError("ring mismatch");
    LaurentPoly r(tag);
    for (const auto& [k, c] : terms_) r.terms_[k] = to_level(c, tag.coeff_level());
    return r;
}

bool LaurentPoly::is_monomial_unit() const {
    if (terms_.size() != 1) return false;
    const Cyc& c = terms_.begin()->second;
    if (tag_.kind == RingKind::integers) {
        if (!c.is_rational()) return false;
        Rat v = c.rational_value();
        return v == 1 || v == -1;
    }
    return !c.is_zero();
}

bool LaurentPoly::operator==(const LaurentPoly& b) const {
    if (tag_ == b.tag_) return terms_ == b.terms_;
    RingTag tag = common_ring(tag_, b.tag_);
    return with_ring(tag).terms() == b.with_ring(tag).terms();
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    RingTag tag = common_ring(a.ring(), b.ring());
    LaurentPoly aa = a.with_ring(tag), bb = b.with_ring(tag);
    LaurentPoly r = aa;
    for (const auto& [k, c] : bb.terms()) r.set_coeff(k, r.coeff(k) + c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    RingTag tag = common_ring(a.ring(), b.ring());
    LaurentPoly aa = a.with_ring(tag), bb = b.with_ring(tag);
    LaurentPoly r(tag);
    for (const auto& [ka, ca] : aa.terms())
        for (const auto& [kb, cb] : bb.terms()) r.set_coeff(ka + kb, r.coeff(ka + kb) + ca * cb);
    return r;
}

LaurentPoly operator*(const Cyc& c, const LaurentPoly& p) {
    return LaurentPoly::constant(p.ring(), c.level() == 1 ? c : c) * p;
}

namespace {

struct Dense {
    CP poly;   // constant term nonzero for nonzero input
    long low;  // doubled exponent of the constant term
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

bool all_integral(const LaurentPoly& p) {
    for (const auto& [k, c] : p.terms())
        if (!c.is_integral()) return false;
    return true;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    RingTag tag = common_ring(p.ring(), q.ring());
    if (q.is_zero()) throw AlgebraError("division by zero");
    if (p.is_zero()) return LaurentPoly::zero(tag);
    Dense dp = to_dense(p.with_ring(tag)), dq = to_dense(q.with_ring(tag));
    auto [quot, rem] = detail::cp_divrem(dp.poly, dq.poly);
    if (!detail::cp_is_zero(rem)) throw AlgebraError("inexact division");
    LaurentPoly out = from_dense(tag, quot, dp.low - dq.low);
    if (tag.kind == RingKind::integers && !all_integral(out))
        throw AlgebraError("inexact division");
    return out;
}

LaurentPoly gcd_over_field(const LaurentPoly& p, const LaurentPoly& q) {
    RingTag tag = common_ring(p.ring(), q.ring());
    if (tag.kind == RingKind::integers) tag = ring_Q();
    if (p.is_zero() && q.is_zero()) throw AlgebraError("gcd undefined");
    Dense dp = to_dense(p.with_ring(tag)), dq = to_dense(q.with_ring(tag));
    CP g = detail::cp_gcd(dp.poly, dq.poly);
    LaurentPoly out = from_dense(tag, g, 0);
    // lowest exponent 0, lowest coefficient 1
    Cyc c0 = out.coeff(out.min_doubled_exp());
    return LaurentPoly::constant(tag, c0.inverse()) * out;
}

bool up_to_unit_equal(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() == q.is_zero();
    RingTag tag = common_ring(p.ring(), q.ring());
    LaurentPoly pp = p.with_ring(tag), qq = q.with_ring(tag);
    long shift = pp.min_doubled_exp() - qq.min_doubled_exp();
    Cyc c = pp.coeff(pp.min_doubled_exp()) * qq.coeff(qq.min_doubled_exp()).inverse();
    LaurentPoly unit = LaurentPoly::monomial(tag, c, shift);
    if (!unit.is_monomial_unit()) return false;
    return pp == unit * qq;
}

LaurentPoly geometric_quotient(const LaurentPoly& u, long ell) {
    if (ell == 0) throw AlgebraError("undefined exponent");
    if (!u.is_monomial_unit()) throw AlgebraError("non-unit base");
    RingTag tag = u.ring();
    LaurentPoly acc(tag);
    if (ell > 0) {
        LaurentPoly pw = LaurentPoly::one(tag);
        for (long i = 0; i < ell; ++i) {
            acc = acc + pw;
            pw = pw * u;
        }
    } else {
        long k = u.min_doubled_exp();
        Cyc c = u.coeff(k);
        LaurentPoly uinv = LaurentPoly::monomial(tag, c.inverse(), -k);
        LaurentPoly pw = uinv;
        for (long i = 1; i <= -ell; ++i) {
            acc = acc - pw;
            pw = pw * uinv;
        }
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string cs = c.str();
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
            cs.find('-', 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        bool composite = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (composite) cs = "(" + cs + ")";
        if (k == 0) {
            os << cs;
        } else {
            os << cs << "*t^";
            if (k % 2 == 0)
                os << (k / 2);
            else
                os << "(" << k << "/2)";
        }
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text, RingTag tag) {
    LaurentPoly out(tag);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size()) throw AlgebraError("empty polynomial literal");
    bool any = false;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            throw AlgebraError("bad polynomial literal: " + text);
        }
        // coefficient: rational, z-monomial, parenthesized z-expression, or empty
        Cyc coeff = Cyc::rational(Rat(1), tag.coeff_level());
        bool have_coeff = false;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == '(') {
                // parenthesized: either (k/2) exponent handled below or coefficient
                size_t close = text.find(')', i);
                if (close == std::string::npos) throw AlgebraError("unbalanced parentheses");
                std::string inner = text.substr(i + 1, close - i - 1);
                coeff = coeff * Cyc::parse(inner, tag.coeff_level());
                have_coeff = true;
                i = close + 1;
            } else if (i < text.size() &&
                       (isdigit(static_cast<unsigned char>(text[i])))) {
                size_t j = i;
                while (j < text.size() &&
                       (isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                    ++j;
                coeff = coeff * Cyc::rational(rat_from_string(text.substr(i, j - i)),
                                              tag.coeff_level());
                have_coeff = true;
                i = j;
            } else if (i < text.size() && text[i] == 'z') {
                size_t j = i + 1;
                long e = 1;
                if (j < text.size() && text[j] == '^') {
                    ++j;
                    size_t k0 = j;
                    if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
                    while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
                    e = std::stol(text.substr(k0, j - k0));
                }
                coeff = coeff * Cyc::zeta_power(tag.coeff_level(), e);
                have_coeff = true;
                i = j;
            } else {
                break;
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                skip_ws();
                size_t save = i;
                ++i;
                skip_ws();
                if (i < text.size() && text[i] == 't') break;  // the '*' belongs to t
                i = save + 1;
                continue;
            }
            break;
        }
        long doubled = 0;
        skip_ws();
        if (i < text.size() && text[i] == 't') {
            ++i;
            doubled = 2;
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (i < text.size() && text[i] == '(') {
                    size_t close = text.find(')', i);
                    if (close == std::string::npos) throw AlgebraError("unbalanced parentheses");
                    std::string inner = text.substr(i + 1, close - i - 1);
                    size_t slash = inner.find('/');
                    if (slash == std::string::npos || inner.substr(slash + 1) != "2")
                        throw AlgebraError("bad half exponent: " + inner);
                    doubled = std::stol(inner.substr(0, slash));
                    i = close + 1;
                } else {
                    size_t j = i;
                    if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
                    while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
                    doubled = 2 * std::stol(text.substr(i, j - i));
                    i = j;
                }
            }
        } else if (!have_coeff) {
            throw AlgebraError("bad polynomial literal: " + text);
        }
        if (sign < 0) coeff = -coeff;
        out.set_coeff(doubled, out.coeff(doubled) + coeff);
        any = true;
    }
    if (!any) throw AlgebraError("empty polynomial literal");
    if (out.ring().kind == RingKind::integers && !all_integral(out))
        throw AlgebraError("non-integral coefficients for integer ring");
    return out;
}

}  // namespace torspair
