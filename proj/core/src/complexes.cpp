#include "torspair/complexes.hpp"

namespace torspair {

namespace {

// assembles the 2l x 2l block matrix [[a, b], [c, d]]
PolyMat blocks2(const PolyMat& a, const PolyMat& b, const PolyMat& c, const PolyMat& d) {
    return PolyMat::vcat(PolyMat::hcat(a, b), PolyMat::hcat(c, d));
}

}  // namespace

ChainComplex complex_from_fox(const Representation& rep, const TorusParams& p) {
    long l = rep.dim();
    RingTag tag = rep.ring();
    ChainComplex cc{tag, Provenance::fox_derived, {}, {}, {}};

    PolyMat id = poly_identity(tag, l);
    cc.d1 = PolyMat::hcat(id - rep.gen_power(Gen::x, -1), id - rep.gen_power(Gen::y, -1));

    Word gamma1 = relator_word(1, p), gamma2 = relator_word(2, p);
    cc.d2 = blocks2(rep.fox_image_op(gamma1, Gen::x), rep.fox_image_op(gamma2, Gen::x),
                    rep.fox_image_op(gamma1, Gen::y), rep.fox_image_op(gamma2, Gen::y));

    // d3 entries are the psi-images of the Fox derivatives of the identity
    // with respect to the relator letters, pushed through rho after the
    // group-ring involution
    IdentityDecomposition id3 = taut_identity(p);
    Word sigma = id3.expanded();
    PolyMat rows[2] = {poly_zero_mat(tag, l, l), poly_zero_mat(tag, l, l)};
    for (int which = 0; which < 2; ++which) {
        GroupRing d = fox_derivative(sigma, which == 0 ? Gen::g1 : Gen::g2);
        PolyMat acc = poly_zero_mat(tag, l, l);
        for (const auto& [w, c] : d.terms()) {
            Word pushed = apply_psi(w, p);
            LaurentPoly coeff = LaurentPoly::constant(tag, Cyc::rational(Rat(c)));
            acc = acc + coeff * rep.image(pushed.inverse());
        }
        rows[which] = acc;
    }
    cc.d3 = PolyMat::vcat(rows[0], rows[1]);
    return cc;
}

ChainComplex complex_closed_form(Coefficients kind, const TorusParams& p,
                                 const std::vector<long>* b) {
    long m = p.m, n = p.n, r = p.r, s = p.s;
    if (kind == Coefficients::classical) {
        RingTag tag = ring_Z();
        auto t = [&](long k) { return LaurentPoly::t_power(tag, k); };
        auto geo = [&](long base, long ell) { return geometric_quotient(t(base), ell); };
        LaurentPoly one = LaurentPoly::one(tag);
        ChainComplex cc{tag, Provenance::closed_form, {}, {}, {}};

        cc.d1 = poly_zero_mat(tag, 1, 2);
        cc.d1.at(0, 0) = one - t(-n);
        cc.d1.at(0, 1) = one - t(-m);

        // (1 - t^{mn})/(1 - t^n) = geo(t^n, m), (1 - t^{ns})/(1 - t) = geo(t, ns),
        // (1 - t^{mr})/(1 - t^m) = geo(t^m, r)
        cc.d2 = poly_zero_mat(tag, 2, 2);
        cc.d2.at(0, 0) = t(n - m * n) * geo(n, m);
        cc.d2.at(0, 1) = -(t(m * r + n) * geo(n, m) * geo(1, n * s));
        cc.d2.at(1, 0) = -(t(m - m * n) * geo(m, n));
        cc.d2.at(1, 1) = t(m * r + m) * geo(m, n) * geo(1, n * s);

        cc.d3 = poly_zero_mat(tag, 2, 1);
        cc.d3.at(0, 0) = one - t(-n * s);
        cc.d3.at(1, 0) = t(-m * n) - t(-m * n - 1);
        return cc;
    }

    if (b == nullptr) throw ConstraintError("twisted coefficients require a character");
    Representation rep = metabelian_rep(p, *b);
    RingTag tag = rep.ring();
    long mn = m * n;
    PolyMat X = rep.image_x(), Y = rep.image_y();
    PolyMat M = rep.image(meridian_word(p));
    LaurentPoly tpow = LaurentPoly::t_power(tag, -n);
    PolyMat id = poly_identity(tag, m);

    ChainComplex cc{tag, Provenance::closed_form, {}, {}, {}};
    cc.d1 = PolyMat::hcat(id - rep.gen_power(Gen::x, -1), id - rep.gen_power(Gen::y, -1));

    PolyMat gx = geometric_quotient(X, m), gy = geometric_quotient(Y, n);
    PolyMat gxs = geometric_quotient(X, s), gyr = geometric_quotient(Y, r);
    PolyMat gm = geometric_quotient(M, mn);
    PolyMat b11 = tpow * (gx * X);
    PolyMat b12 = -(rep.gen_power(Gen::x, 1 - s) * gxs * gm * M);
    PolyMat b21 = -(tpow * (gy * Y));
    PolyMat b22 =
        -(rep.gen_power(Gen::y, 1 - r) * gyr * rep.gen_power(Gen::x, -s) * gm * M) + gy * Y;
    cc.d2 = blocks2(b11, b12, b21, b22);

    cc.d3 = PolyMat::vcat(id - rep.gen_power(Gen::x, -s),
                          tpow * (id - poly_inverse(M)));
    return cc;
}

PDMap pd_matrix(Coefficients kind, const TorusParams& p, const std::vector<long>* b) {
    long m = p.m, n = p.n, r = p.r, s = p.s;
    if (kind == Coefficients::classical) {
        RingTag tag = ring_Z();
        auto t = [&](long k) { return LaurentPoly::t_power(tag, k); };
        auto geo = [&](long base, long ell) { return geometric_quotient(t(base), ell); };
        PolyMat pd = poly_zero_mat(tag, 2, 2);
        pd.at(0, 0) = -(t(n) * geo(n, s));      // -t^n (1-t^{ns})/(1-t^n)
        pd.at(0, 1) = -(t(m * n + m * r + n) * geo(n, s));
        pd.at(1, 1) = -(t(m * n + m) * geo(m, r));
        return {Provenance::closed_form, pd};
    }
    if (b == nullptr) throw ConstraintError("twisted coefficients require a character");
    Representation rep = metabelian_rep(p, *b);
    RingTag tag = rep.ring();
    PolyMat X = rep.image_x(), Y = rep.image_y();
    PolyMat gxs = geometric_quotient(X, s), gyr = geometric_quotient(Y, r);
    LaurentPoly tn = LaurentPoly::t_power(tag, n);
    PolyMat z = poly_zero_mat(tag, m, m);
    PolyMat pd = blocks2(-(X * gxs), -(tn * (X * gxs * rep.gen_power(Gen::y, r))), z,
                         -(tn * (gyr * Y)));
    return {Provenance::closed_form, pd};
}

std::vector<DiagonalTerm> diagonal_approximation(const IdentityDecomposition& id,
                                                 const Representation& rep) {
    std::vector<DiagonalTerm> terms;
    for (const auto& f : id.factors) {
        PolyMat translate = rep.image(f.omega);
        for (int left = 1; left <= 2; ++left) {
            Gen g = left == 1 ? Gen::x : Gen::y;
            terms.push_back({left, f.relator, f.sign, rep.fox_image(f.omega, g), translate});
        }
    }
    return terms;
}

PDMap pd_from_cap(const IdentityDecomposition& id, const Representation& rep) {
    long l = rep.dim();
    RingTag tag = rep.ring();
    // block (left, k) = sum over factors with j_i = k of
    // eps_i rho_op(d omega_i / d x_left) rho(omega_i)
    PolyMat blocks[2][2] = {{poly_zero_mat(tag, l, l), poly_zero_mat(tag, l, l)},
                            {poly_zero_mat(tag, l, l), poly_zero_mat(tag, l, l)}};
    for (const auto& f : id.factors) {
        PolyMat translate = rep.image(f.omega);
        for (int left = 0; left < 2; ++left) {
            Gen g = left == 0 ? Gen::x : Gen::y;
            PolyMat contrib = rep.fox_image_op(f.omega, g) * translate;
            if (f.sign < 0) contrib = poly_zero_mat(tag, l, l) - contrib;
            blocks[left][f.relator - 1] = blocks[left][f.relator - 1] + contrib;
        }
    }
    PolyMat pd = PolyMat::vcat(PolyMat::hcat(blocks[0][0], blocks[0][1]),
                               PolyMat::hcat(blocks[1][0], blocks[1][1]));
    return {Provenance::cap_product, pd};
}

ComplexReport verify_complex(const ChainComplex& cc) {
    ComplexReport rep;
    rep.d1d2_zero = is_zero_mat(cc.d1 * cc.d2);
    rep.d2d3_zero = is_zero_mat(cc.d2 * cc.d3);
    rep.rank_d1 = rank_over_fraction_field(cc.d1);
    rep.rank_d2 = rank_over_fraction_field(cc.d2);
    rep.rank_d3 = rank_over_fraction_field(cc.d3);
    return rep;
}

bool complexes_equal(const ChainComplex& a, const ChainComplex& b) {
    return a.d1 == b.d1 && a.d2 == b.d2 && a.d3 == b.d3;
}

}  // namespace torspair
