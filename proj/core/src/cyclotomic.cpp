#include "torspair/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace torspair {

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw AlgebraError("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

long euler_phi(long n) {
    if (n < 1) throw AlgebraError("euler_phi: positive argument required");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Dense Q[x] helpers, constant term first, trailing zeros trimmed.
using QP = std::vector<Rat>;

void qp_trim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long qp_deg(const QP& p) { return static_cast<long>(p.size()) - 1; }

QP qp_sub(const QP& a, const QP& b) {
    QP r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qp_trim(r);
    return r;
}

QP qp_mul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

// quotient and remainder of a by b, b nonzero
std::pair<QP, QP> qp_divrem(QP a, const QP& b) {
    if (b.empty()) throw AlgebraError("division by zero polynomial");
    QP q;
    if (qp_deg(a) >= qp_deg(b)) q.assign(a.size() - b.size() + 1, Rat(0));
    while (qp_deg(a) >= qp_deg(b)) {
        Rat c = a.back() / b.back();
        long shift = qp_deg(a) - qp_deg(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qp_trim(a);
    }
    qp_trim(q);
    return {q, a};
}

struct CycField {
    long n = 1;
    long phi = 1;
    QP minpoly;                      // Phi_n, degree phi, monic
    std::vector<QP> high_powers;     // x^{phi+k} mod Phi_n, k in [0, phi-1]
    std::vector<std::vector<Rat>> conj_map;  // image of x^j under x -> x^{n-1}, reduced
    std::vector<std::vector<Rat>> zeta_pow;  // x^k mod Phi_n, k in [0, n-1]
};

std::vector<Rat> reduce_mod_field(const CycField& f, QP p) {
    // p may have degree up to 2*phi-2
    std::vector<Rat> out(f.phi, Rat(0));
    for (long k = qp_deg(p); k >= f.phi; --k) {
        if (p[k] == 0) continue;
        const QP& row = f.high_powers[k - f.phi];
        for (size_t i = 0; i < row.size(); ++i) p[i] += p[k] * row[i];
        p[k] = 0;
    }
    for (long i = 0; i < f.phi && i < static_cast<long>(p.size()); ++i) out[i] = p[i];
    return out;
}

const CycField& cyc_field(long n) {
    static std::map<long, CycField> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw AlgebraError("cyclotomic level must be positive");

    CycField f;
    f.n = n;
    f.phi = euler_phi(n);
    f.minpoly = cyclotomic_polynomial(n);

    // x^{phi+k} mod Phi_n by repeated multiplication by x
    QP cur(f.phi + 1, Rat(0));
    cur[f.phi] = 1;  // x^{phi}
    for (long k = 0; k < f.phi; ++k) {
        QP rem = qp_divrem(cur, f.minpoly).second;
        rem.resize(f.phi, Rat(0));
        f.high_powers.push_back(rem);
        cur.insert(cur.begin(), Rat(0));  // multiply by x
        qp_trim(cur);
    }

    f.zeta_pow.resize(n);
    QP pw = {Rat(1)};
    for (long k = 0; k < n; ++k) {
        QP rem = qp_divrem(pw, f.minpoly).second;
        rem.resize(f.phi, Rat(0));
        f.zeta_pow[k] = rem;
        pw.insert(pw.begin(), Rat(0));
        qp_trim(pw);
    }

    f.conj_map.resize(f.phi);
    for (long j = 0; j < f.phi; ++j) {
        long e = ((n - 1) * j) % n;
        f.conj_map[j] = f.zeta_pow[e];
    }

    auto [pos, inserted] = cache.emplace(n, std::move(f));
    (void)inserted;
    return pos->second;
}

}  // namespace

std::vector<Rat> cyclotomic_polynomial(long n) {
    if (n < 1) throw AlgebraError("cyclotomic polynomial: positive order required");
    if (n == 1) return {Rat(-1), Rat(1)};  // x - 1
    // x^n - 1 divided by product of Phi_d over proper divisors d
    QP num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    QP den = {Rat(1)};
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        den = qp_mul(den, cyclotomic_polynomial(d));
    }
    auto [q, r] = qp_divrem(num, den);
    if (!r.empty()) throw AlgebraError("cyclotomic polynomial division not exact");
    return q;
}

Cyc::Cyc(long level) : level_(level) {
    const CycField& f = cyc_field(level);
    c_.assign(f.phi, Rat(0));
}

Cyc Cyc::rational(const Rat& value, long level) {
    Cyc z(level);
    z.c_[0] = value;
    return z;
}

Cyc Cyc::integer(long value, long level) { return rational(Rat(value), level); }

Cyc Cyc::zeta_power(long level, long k) {
    const CycField& f = cyc_field(level);
    long e = k % level;
    if (e < 0) e += level;
    Cyc z(level);
    z.c_ = f.zeta_pow[e];
    return z;
}

bool Cyc::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool Cyc::is_one() const {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& x) { return x == 0; });
}

bool Cyc::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& x) { return x == 0; });
}

bool Cyc::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return rat_is_integer(x); });
}

Rat Cyc::rational_value() const {
    if (!is_rational()) throw AlgebraError("cyclotomic element is not rational");
    return c_[0];
}

Cyc Cyc::lifted(long level) const {
    if (level_ == level) return *this;
    if (level_ != 1) throw AlgebraError("ring mismatch");
    return Cyc::rational(c_[0], level);
}

namespace {

// Aligns levels: rationals lift into the other operand's field.
std::pair<Cyc, Cyc> aligned(const Cyc& a, const Cyc& b) {
    if (a.level() == b.level()) return {a, b};
    if (a.level() == 1) return {a.lifted(b.level()), b};
    if (b.level() == 1) return {a, b.lifted(a.level())};
    throw AlgebraError("ring mismatch");
}

}  // namespace

Cyc operator+(const Cyc& a0, const Cyc& b0) {
    auto [a, b] = aligned(a0, b0);
    Cyc r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

Cyc operator-(const Cyc& a0, const Cyc& b0) {
    auto [a, b] = aligned(a0, b0);
    Cyc r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc operator*(const Cyc& a0, const Cyc& b0) {
    auto [a, b] = aligned(a0, b0);
    const CycField& f = cyc_field(a.level_);
    QP conv(2 * f.phi - 1, Rat(0));
    for (long i = 0; i < f.phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < f.phi; ++j) {
            if (b.c_[j] == 0) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    Cyc r(a.level_);
    r.c_ = reduce_mod_field(f, std::move(conv));
    return r;
}

Cyc Cyc::conj() const {
    const CycField& f = cyc_field(level_);
    Cyc r(level_);
    for (long j = 0; j < f.phi; ++j) {
        if (c_[j] == 0) continue;
        for (long i = 0; i < f.phi; ++i) r.c_[i] += c_[j] * f.conj_map[j][i];
    }
    return r;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw AlgebraError("division by zero");
    if (is_rational()) return Cyc::rational(Rat(1) / c_[0], level_);
    const CycField& f = cyc_field(level_);
    // extended Euclid: u * this + v * Phi = 1
    QP a(c_.begin(), c_.end());
    qp_trim(a);
    QP b = f.minpoly;
    QP u0 = {Rat(1)}, u1 = {};
    while (!b.empty()) {
        auto [q, r] = qp_divrem(a, b);
        QP u2 = qp_sub(u0, qp_mul(q, u1));
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (qp_deg(a) != 0) throw AlgebraError("cyclotomic inverse failed");
    Rat lead = a[0];
    Cyc out(level_);
    QP red = qp_divrem(u0, f.minpoly).second;
    for (long i = 0; i < f.phi && i < static_cast<long>(red.size()); ++i)
        out.c_[i] = red[i] / lead;
    return out;
}

Cyc Cyc::pow(long k) const {
    if (k == 0) return Cyc::rational(Rat(1), level_);
    Cyc base = k > 0 ? *this : inverse();
    unsigned long e = k > 0 ? k : -k;
    Cyc acc = Cyc::rational(Rat(1), level_);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Cyc::operator==(const Cyc& b) const {
    if (level_ != b.level_) {
        if (level_ == 1 || b.level_ == 1) {
            auto [x, y] = aligned(*this, b);
            return x.c_ == y.c_;
        }
        return false;
    }
    return c_ == b.c_;
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long j = static_cast<long>(c_.size()) - 1; j >= 0; --j) {
        if (c_[j] == 0) continue;
        Rat v = c_[j];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
            first = false;
        } else {
            os << (v < 0 ? "-" : "+");
            if (v < 0) v = -v;
        }
        if (j == 0) {
            os << rat_to_string(v);
        } else {
            if (v != 1) os << rat_to_string(v) << "*";
            os << "z";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

Cyc Cyc::parse(const std::string& text, long level) {
    Cyc out(level);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size()) throw AlgebraError("empty cyclotomic literal");
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
            throw AlgebraError("bad cyclotomic literal: " + text);
        }
        Rat coeff(1);
        bool have_coeff = false;
        if (i < text.size() && (isdigit(static_cast<unsigned char>(text[i])))) {
            size_t j = i;
            while (j < text.size() &&
                   (isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                ++j;
            coeff = rat_from_string(text.substr(i, j - i));
            i = j;
            have_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        long zexp = 0;
        if (i < text.size() && text[i] == 'z') {
            ++i;
            zexp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t j = i;
                if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
                while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
                zexp = std::stol(text.substr(i, j - i));
                i = j;
            }
        } else if (!have_coeff) {
            throw AlgebraError("bad cyclotomic literal: " + text);
        }
        Cyc term = Cyc::zeta_power(level, zexp);
        term *= Cyc::rational(sign * coeff, level);
        out += term;
        any = true;
    }
    if (!any) throw AlgebraError("empty cyclotomic literal");
    return out;
}

}  // namespace torspair
