#pragma once

#include <limits>
#include <string>
#include <vector>

#include "torspair/laurent.hpp"

namespace torspair {

// The localization center t = zeta_n^a (a != 0 mod n).  All coefficient
// arithmetic happens in Q(zeta_{2n}); the branch of t^{1/2} at the center is
// fixed to be zeta_{2n}^a.
struct Center {
    long n = 0;
    long a = 0;

    long cyc_order() const { return 2 * n; }
    Cyc t_value() const { return Cyc::zeta_power(2 * n, 2 * a); }
    Cyc u_value() const { return Cyc::zeta_power(2 * n, a); }
    bool operator==(const Center&) const = default;
    std::string str() const;
};

inline constexpr long kValInfinity = std::numeric_limits<long>::max();

// Reduced fraction of Laurent polynomials over a coefficient field.  The
// canonical form has numerator and denominator coprime, the denominator with
// lowest exponent 0 and lowest coefficient 1, so equal functions have equal
// representations.  Integer-tagged input is lifted to the rationals.
class RatFunc {
  public:
    RatFunc() : RatFunc(LaurentPoly::zero(ring_Q())) {}
    explicit RatFunc(RingTag tag) : RatFunc(LaurentPoly::zero(tag)) {}
    RatFunc(const LaurentPoly& num);  // NOLINT: deliberate implicit lift
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const RingTag& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_monomial_unit(); }
    LaurentPoly as_laurent() const;
    bool has_half_exponents() const;

    RatFunc operator-() const;
    RatFunc sharp() const;
    RatFunc inverse() const;

    bool operator==(const RatFunc& b) const;
    bool operator!=(const RatFunc& b) const { return !(*this == b); }

    std::string str() const;

  private:
    LaurentPoly num_, den_;
};

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
RatFunc operator/(const RatFunc& a, const RatFunc& b);

// (t - zeta)-adic valuation at the center (computed as the (u - zeta_{2n}^a)-
// adic valuation of the half-exponent representation, which agrees with the
// t-adic one on integer-exponent functions).  kValInfinity for the zero
// function.
long valuation_at(const RatFunc& f, const Center& c);
bool is_germ_at(const RatFunc& f, const Center& c);       // valuation >= 0
bool is_unit_germ_at(const RatFunc& f, const Center& c);  // valuation == 0

// Truncated expansion in powers of (t - zeta_n^a): an element of
// O(a)/((t - zeta)^order).
struct Jet {
    Center center;
    std::vector<Cyc> coeffs;  // length == order

    long order() const { return static_cast<long>(coeffs.size()); }
    bool is_zero() const;
    bool operator==(const Jet& b) const { return center == b.center && coeffs == b.coeffs; }
    std::string str() const;
};

Jet jet_at(const RatFunc& f, const Center& c, long order);
Jet jet_add(const Jet& a, const Jet& b);
Jet jet_mul(const Jet& a, const Jet& b);

// Element of O(a): a rational germ, i.e. a rational function whose reduced
// denominator does not vanish at the center.
class Germ {
  public:
    Germ(RatFunc value, Center center);

    const RatFunc& value() const { return f_; }
    const Center& center() const { return c_; }

    long valuation() const;         // kValInfinity for the zero germ
    Germ inverted() const;          // requires valuation 0
    Jet jet(long order) const;

    Germ operator+(const Germ& b) const;
    Germ operator-(const Germ& b) const;
    Germ operator*(const Germ& b) const;
    bool operator==(const Germ& b) const;

  private:
    RatFunc f_;
    Center c_;
};

// equality up to a valuation-0 germ factor
bool up_to_unit_equal(const Germ& a, const Germ& b);
bool up_to_unit_equal_at(const RatFunc& a, const RatFunc& b, const Center& c);

}  // namespace torspair
