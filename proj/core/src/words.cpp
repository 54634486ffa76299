#include "torspair/words.hpp"

#include <numeric>
#include <sstream>

namespace torspair {

std::string gen_name(Gen g) {
    switch (g) {
        case Gen::x: return "x";
        case Gen::y: return "y";
        case Gen::g1: return "g1";
        case Gen::g2: return "g2";
    }
    return "?";
}

Word Word::generator(Gen g, long exp) {
    Word w;
    if (exp != 0) w.syl_.push_back({g, exp});
    return w;
}

Word Word::from_syllables(const std::vector<Syllable>& syl) {
    Word w;
    for (const auto& s : syl) {
        if (s.exp == 0) continue;
        if (!w.syl_.empty() && w.syl_.back().gen == s.gen) {
            w.syl_.back().exp += s.exp;
            if (w.syl_.back().exp == 0) w.syl_.pop_back();
        } else {
            w.syl_.push_back(s);
        }
    }
    return w;
}

long Word::letter_count() const {
    long n = 0;
    for (const auto& s : syl_) n += s.exp >= 0 ? s.exp : -s.exp;
    return n;
}

Word Word::operator*(const Word& b) const {
    std::vector<Syllable> all = syl_;
    all.insert(all.end(), b.syl_.begin(), b.syl_.end());
    // from_syllables only merges adjacent pairs once; cancellation can cascade
    Word w;
    for (const auto& s : all) {
        if (s.exp == 0) continue;
        if (!w.syl_.empty() && w.syl_.back().gen == s.gen) {
            w.syl_.back().exp += s.exp;
            if (w.syl_.back().exp == 0) w.syl_.pop_back();
        } else {
            w.syl_.push_back(s);
        }
    }
    return w;
}

Word Word::inverse() const {
    Word w;
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
    return w;
}

Word Word::pow(long k) const {
    if (k == 0) return Word();
    Word base = k > 0 ? *this : inverse();
    long e = k > 0 ? k : -k;
    Word acc;
    for (long i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

std::string Word::str() const {
    if (syl_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syl_) {
        if (!first) os << " ";
        first = false;
        os << gen_name(s.gen);
        if (s.exp != 1) os << "^" << s.exp;
    }
    return os.str();
}

Word Word::parse(const std::string& text) {
    std::istringstream is(text);
    std::vector<Syllable> syl;
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        size_t caret = tok.find('^');
        std::string name = caret == std::string::npos ? tok : tok.substr(0, caret);
        long exp = caret == std::string::npos ? 1 : std::stol(tok.substr(caret + 1));
        Gen g;
        if (name == "x")
            g = Gen::x;
        else if (name == "y")
            g = Gen::y;
        else if (name == "g1")
            g = Gen::g1;
        else if (name == "g2")
            g = Gen::g2;
        else
            throw AlgebraError("bad word literal: " + text);
        syl.push_back({g, exp});
    }
    return from_syllables(syl);
}

GroupRing GroupRing::of(const Word& w, long long coeff) {
    GroupRing r;
    r.add(w, coeff);
    return r;
}

GroupRing& GroupRing::add(const Word& w, long long coeff) {
    if (coeff == 0) return *this;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

GroupRing GroupRing::operator+(const GroupRing& b) const {
    GroupRing r = *this;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
}

GroupRing GroupRing::operator-(const GroupRing& b) const {
    GroupRing r = *this;
    for (const auto& [w, c] : b.terms_) r.add(w, -c);
    return r;
}

GroupRing GroupRing::operator*(const GroupRing& b) const {
    GroupRing r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
    return r;
}

GroupRing fox_derivative(const Word& w, Gen g) {
    GroupRing result;
    Word prefix;
    for (const auto& s : w.syllables()) {
        if (s.gen == g) {
            if (s.exp > 0) {
                for (long i = 0; i < s.exp; ++i)
                    result.add(prefix * Word::generator(g, i), 1);
            } else {
                for (long i = 1; i <= -s.exp; ++i)
                    result.add(prefix * Word::generator(g, -i), -1);
            }
        }
        prefix = prefix * Word::generator(s.gen, s.exp);
    }
    return result;
}

TorusParams bezout_params(long m, long n) {
    if (m < 2 || n < 2) throw ConstraintError("invalid parameters");
    if (std::gcd(m, n) != 1) throw ConstraintError("not coprime");
    for (long s = 1; s < m; ++s) {
        long num = 1 - n * s;
        if (num % m != 0) continue;
        long r = num / m;
        if (-n < r && r < 0) return {m, n, r, s};
    }
    throw AlgebraError("Bezout window search failed");
}

Word meridian_word(const TorusParams& p) {
    return Word::generator(Gen::x, p.s) * Word::generator(Gen::y, p.r);
}

Word relator_word(int which, const TorusParams& p) {
    if (which == 1) return Word::generator(Gen::x, p.m) * Word::generator(Gen::y, -p.n);
    if (which == 2) return meridian_word(p).pow(-p.m * p.n) * Word::generator(Gen::y, p.n);
    throw AlgebraError("relator index out of range");
}

Word apply_psi(const Word& w, const TorusParams& p) {
    Word out;
    for (const auto& s : w.syllables()) {
        switch (s.gen) {
            case Gen::x:
            case Gen::y:
                out = out * Word::generator(s.gen, s.exp);
                break;
            case Gen::g1:
                out = out * relator_word(1, p).pow(s.exp);
                break;
            case Gen::g2:
                out = out * relator_word(2, p).pow(s.exp);
                break;
        }
    }
    return out;
}

Word IdentityDecomposition::expanded() const {
    Word out;
    for (const auto& f : factors) {
        Gen rel = f.relator == 1 ? Gen::g1 : Gen::g2;
        out = out * f.omega * Word::generator(rel, f.sign) * f.omega.inverse();
    }
    return out;
}

IdentityDecomposition taut_identity(const TorusParams& p) {
    long mn = p.m * p.n;
    Word mu = meridian_word(p);
    IdentityDecomposition id;
    id.factors.push_back({Word::generator(Gen::x, p.s), 1, -1});
    id.factors.push_back({Word(), 1, +1});
    id.factors.push_back({mu.pow(mn), 2, +1});
    id.factors.push_back({mu.pow(mn + 1), 2, -1});
    return id;
}

bool verify_identity(const IdentityDecomposition& id, const TorusParams& p) {
    return apply_psi(id.expanded(), p).empty();
}

}  // namespace torspair
