#include "torspair/representation.hpp"

namespace torspair {

Representation::Representation(RingTag tag, PolyMat image_x, PolyMat image_y)
    : tag_(tag), image_x_(std::move(image_x)), image_y_(std::move(image_y)) {
    if (image_x_.rows() != image_x_.cols() || image_y_.rows() != image_y_.cols() ||
        image_x_.rows() != image_y_.rows())
        throw AlgebraError("representation images must be square of equal size");
    image_x_inv_ = poly_inverse(image_x_);
    image_y_inv_ = poly_inverse(image_y_);
}

PolyMat Representation::gen_power(Gen g, long k) const {
    if (k == 0) return poly_identity(tag_, dim());
    const PolyMat& base = k > 0 ? (g == Gen::x ? image_x_ : image_y_)
                                : (g == Gen::x ? image_x_inv_ : image_y_inv_);
    if (g != Gen::x && g != Gen::y) throw AlgebraError("relator letters have no image");
    unsigned long e = k > 0 ? k : -k;
    PolyMat acc = poly_identity(tag_, dim());
    PolyMat pw = base;
    while (e) {
        if (e & 1) acc = acc * pw;
        pw = pw * pw;
        e >>= 1;
    }
    return acc;
}

PolyMat Representation::image(const Word& w) const {
    PolyMat acc = poly_identity(tag_, dim());
    for (const auto& s : w.syllables()) acc = acc * gen_power(s.gen, s.exp);
    return acc;
}

PolyMat Representation::image(const GroupRing& e) const {
    PolyMat acc = poly_zero_mat(tag_, dim(), dim());
    LaurentPoly one = LaurentPoly::one(tag_);
    for (const auto& [w, c] : e.terms()) {
        LaurentPoly coeff = LaurentPoly::constant(tag_, Cyc::rational(Rat(c)));
        acc = acc + coeff * image(w);
    }
    return acc;
}

PolyMat Representation::fox_image(const Word& w, Gen g) const {
    // d(uv) = du + u dv, so each syllable g^k contributes rho(prefix) geo(rho(g), k)
    PolyMat acc = poly_zero_mat(tag_, dim(), dim());
    PolyMat prefix = poly_identity(tag_, dim());
    for (const auto& s : w.syllables()) {
        if (s.gen == g) {
            PolyMat base = gen_power(g, 1);
            acc = acc + prefix * geometric_quotient(base, s.exp);
        }
        prefix = prefix * gen_power(s.gen, s.exp);
    }
    return acc;
}

PolyMat Representation::fox_image_op(const Word& w, Gen g) const {
    // the involution reverses products: each syllable contributes
    // geo(rho(g)^{-1}, k) rho(prefix^{-1})
    PolyMat acc = poly_zero_mat(tag_, dim(), dim());
    PolyMat prefix_inv = poly_identity(tag_, dim());
    for (const auto& s : w.syllables()) {
        if (s.gen == g) {
            PolyMat base_inv = gen_power(g, -1);
            acc = acc + geometric_quotient(base_inv, s.exp) * prefix_inv;
        }
        prefix_inv = gen_power(s.gen, -s.exp) * prefix_inv;
    }
    return acc;
}

Representation abelianization_rep(const TorusParams& p) {
    RingTag tag = ring_Z();
    PolyMat x(1, 1, LaurentPoly::t_power(tag, p.n));
    PolyMat y(1, 1, LaurentPoly::t_power(tag, p.m));
    return Representation(tag, x, y);
}

Representation metabelian_rep(const TorusParams& p, const std::vector<long>& b) {
    long m = p.m, n = p.n;
    if (static_cast<long>(b.size()) != m)
        throw ConstraintError("character length must equal m");
    long sum = 0;
    bool all_zero = true;
    for (long bi : b) {
        sum += ((bi % n) + n) % n;
        if (((bi % n) + n) % n != 0) all_zero = false;
    }
    if (sum % n != 0) throw ConstraintError("not a valid character");
    if (all_zero) throw ConstraintError("trivial character rejected");

    RingTag tag = ring_cyc(2 * n);
    PolyMat c = poly_zero_mat(tag, m, m);
    for (long i = 0; i + 1 < m; ++i) c.at(i, i + 1) = LaurentPoly::one(tag);
    c.at(m - 1, 0) = LaurentPoly::t_power(tag, 1);
    PolyMat x = poly_pow(c, n);
    PolyMat y = poly_zero_mat(tag, m, m);
    for (long i = 0; i < m; ++i)
        y.at(i, i) = LaurentPoly::monomial(tag, Cyc::zeta_power(2 * n, 2 * b[i]), 2);

    Representation rep(tag, x, y);
    // M^{mn} = Y^n = X^m = t^n I
    PolyMat tn = poly_scalar_mat(LaurentPoly::t_power(tag, n), m);
    if (!(poly_pow(x, m) == tn) || !(poly_pow(y, n) == tn))
        throw AlgebraError("metabelian representation invariant failed");
    return rep;
}

}  // namespace torspair
