#pragma once

#include <map>
#include <string>

#include "torspair/cyclotomic.hpp"
#include "torspair/errors.hpp"

namespace torspair {

enum class RingKind { integers, rationals, cyclotomic };

struct RingTag {
    RingKind kind = RingKind::integers;
    long cyc_order = 0;  // N (always 2n here) when kind == cyclotomic

    bool operator==(const RingTag&) const = default;
    bool is_field() const { return kind != RingKind::integers; }
    long coeff_level() const { return kind == RingKind::cyclotomic ? cyc_order : 1; }
    std::string str() const;
};

inline RingTag ring_Z() { return {RingKind::integers, 0}; }
inline RingTag ring_Q() { return {RingKind::rationals, 0}; }
inline RingTag ring_cyc(long order) { return {RingKind::cyclotomic, order}; }

// Sparse Laurent polynomial in t with half-integer exponents: the key k of a
// term stores the doubled exponent, so k = 1 is t^{1/2} and k = 2 is t.
// Zero coefficients are never stored; the empty map is the zero polynomial.
class LaurentPoly {
  public:
    explicit LaurentPoly(RingTag tag = ring_Z()) : tag_(tag) {}

    static LaurentPoly zero(RingTag tag) { return LaurentPoly(tag); }
    static LaurentPoly one(RingTag tag);
    static LaurentPoly constant(RingTag tag, const Cyc& c);
    static LaurentPoly monomial(RingTag tag, const Cyc& c, long doubled_exp);
    // t^{k/2}
    static LaurentPoly t_half_power(RingTag tag, long k);
    // t^k
    static LaurentPoly t_power(RingTag tag, long k) { return t_half_power(tag, 2 * k); }

    const RingTag& ring() const { return tag_; }
    const std::map<long, Cyc>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    long min_doubled_exp() const;
    long max_doubled_exp() const;
    bool has_half_exponents() const;  // any odd doubled exponent
    Cyc coeff(long doubled_exp) const;

    void set_coeff(long doubled_exp, const Cyc& c);

    LaurentPoly operator-() const;
    // f(t) -> conj(f(t^{-1}))
    LaurentPoly sharp() const;
    // multiply by t^{delta/2}
    LaurentPoly shifted(long doubled_delta) const;
    // substitute t^{1/2} = u, u an invertible field element
    Cyc evaluate_half(const Cyc& u) const;
    // substitute t = v (requires integer exponents)
    Cyc evaluate(const Cyc& v) const;

    LaurentPoly with_ring(RingTag tag) const;  // lift Z -> Q -> cyclotomic

    // unit of the Laurent ring: +-t^{k/2} over Z, c t^{k/2} over a field
    bool is_monomial_unit() const;

    bool operator==(const LaurentPoly& b) const;
    bool operator!=(const LaurentPoly& b) const { return !(*this == b); }

    // text grammar: "-1*t^-4 + 2*t^-3 - 1*t^-2", half exponents as t^(k/2)
    std::string str() const;
    static LaurentPoly parse(const std::string& text, RingTag tag);

  private:
    RingTag tag_;
    std::map<long, Cyc> terms_;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const Cyc& c, const LaurentPoly& p);

// Exact division over the fraction field of the coefficient ring; throws
// "inexact division" on a nonzero remainder (or a non-integral quotient over
// the integer tag).
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

// Monic-normalized gcd: lowest exponent 0, lowest coefficient 1.  Integer
// inputs are computed over Q.  Throws "gcd undefined" when both inputs are 0.
LaurentPoly gcd_over_field(const LaurentPoly& p, const LaurentPoly& q);

// p == u*q for a unit u of the common ring
bool up_to_unit_equal(const LaurentPoly& p, const LaurentPoly& q);

// (1 - u^ell)/(1 - u) under the sign convention: sum_{i=0}^{ell-1} u^i for
// ell > 0, -sum_{i=1}^{-ell} u^{-i} otherwise.  u must be a monomial unit.
LaurentPoly geometric_quotient(const LaurentPoly& u, long ell);

}  // namespace torspair
