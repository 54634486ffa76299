#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "torspair/errors.hpp"

namespace torspair {

// Generators of R_2 * F_2: x, y are the Heegaard generators, g1, g2 the
// relator letters gamma~_1, gamma~_2.
enum class Gen : int { x = 0, y = 1, g1 = 2, g2 = 3 };

std::string gen_name(Gen g);

struct Syllable {
    Gen gen;
    long exp;
    auto operator<=>(const Syllable&) const = default;
};

// Freely reduced word, run-length encoded: adjacent syllables have distinct
// generators and no syllable has exponent zero.
class Word {
  public:
    Word() = default;
    static Word generator(Gen g, long exp = 1);
    static Word from_syllables(const std::vector<Syllable>& syl);

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }
    long letter_count() const;

    Word operator*(const Word& b) const;
    Word inverse() const;
    Word pow(long k) const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

    std::string str() const;  // "x^2 y^-3 g1^-1"; empty word prints "1"
    static Word parse(const std::string& text);

  private:
    std::vector<Syllable> syl_;
};

// Z-linear combinations of words: elements of the group ring.
class GroupRing {
  public:
    GroupRing() = default;
    static GroupRing of(const Word& w, long long coeff = 1);

    const std::map<Word, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRing& add(const Word& w, long long coeff);
    GroupRing operator+(const GroupRing& b) const;
    GroupRing operator-(const GroupRing& b) const;
    GroupRing operator*(const GroupRing& b) const;
    bool operator==(const GroupRing&) const = default;

  private:
    std::map<Word, long long> terms_;
};

// Fox derivative with the left convention d(uv) = du + u dv;
// d(g^k)/dg = sum_{i=0}^{k-1} g^i for k > 0 and -sum_{i=1}^{-k} g^{-i} for
// k < 0.
GroupRing fox_derivative(const Word& w, Gen g);

struct TorusParams {
    long m = 0, n = 0;
    long r = 0, s = 0;  // m r + n s = 1, -n < r < 0 < s < m
};

// The unique Bezout pair in the window; throws ConstraintError for invalid
// or non-coprime input.
TorusParams bezout_params(long m, long n);

Word meridian_word(const TorusParams& p);            // mu = x^s y^r
Word relator_word(int which, const TorusParams& p);  // gamma_1 = x^m y^{-n}, gamma_2 = mu^{-mn} y^n

// psi substitutes the relator letters by their defining words and reduces
Word apply_psi(const Word& w, const TorusParams& p);

struct IdentityFactor {
    Word omega;
    int relator;  // 1 or 2
    int sign;     // +1 or -1
};

// sigma = prod_i omega_i gamma~_{j_i}^{eps_i} omega_i^{-1}
struct IdentityDecomposition {
    std::vector<IdentityFactor> factors;
    Word expanded() const;
};

// The four-factor taut identity
// (x^s g1^{-1} x^{-s}) g1 (mu^{mn} g2 mu^{-mn}) (mu^{mn+1} g2^{-1} mu^{-mn-1}).
IdentityDecomposition taut_identity(const TorusParams& p);

// true iff psi of the expanded product freely reduces to the empty word
bool verify_identity(const IdentityDecomposition& id, const TorusParams& p);

}  // namespace torspair
