#pragma once

#include <string>
#include <vector>

#include "torspair/rational.hpp"

namespace torspair {

long euler_phi(long n);

// Coefficients of the N-th cyclotomic polynomial, constant term first,
// computed by recursive exact division of x^N - 1 by the lower-order
// cyclotomic polynomials.  All coefficients are integers.
std::vector<Rat> cyclotomic_polynomial(long n);

// Exact element of the cyclotomic field Q(zeta_N), stored in the power basis
// 1, zeta, ..., zeta^{phi(N)-1} and eagerly reduced modulo the N-th
// cyclotomic polynomial, so equal field elements have identical coordinate
// vectors.  Level 1 is plain Q.
class Cyc {
  public:
    Cyc() : Cyc(1) {}
    explicit Cyc(long level);

    static Cyc rational(const Rat& value, long level = 1);
    static Cyc integer(long value, long level = 1);
    // zeta_N^k, any integer k
    static Cyc zeta_power(long level, long k);

    long level() const { return level_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    bool is_integral() const;  // all coordinates in Z
    Rat rational_value() const;

    // Embeds a rational (level-1) element into Q(zeta_level).
    Cyc lifted(long level) const;

    Cyc operator-() const;
    Cyc conj() const;  // zeta -> zeta^{-1}
    Cyc inverse() const;
    Cyc pow(long k) const;

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
    Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
    Cyc& operator*=(const Cyc& b) { return *this = *this * b; }

    bool operator==(const Cyc& b) const;
    bool operator!=(const Cyc& b) const { return !(*this == b); }

    // z-notation, descending powers: "z^3-2*z+1/2".  "z" denotes zeta_N.
    std::string str() const;
    static Cyc parse(const std::string& text, long level);

  private:
    long level_;
    std::vector<Rat> c_;  // length phi(level)

    friend struct CycOps;
};

}  // namespace torspair
