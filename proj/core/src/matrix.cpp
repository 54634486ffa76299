#include "torspair/matrix.hpp"

#include <algorithm>

#include "cycpoly.hpp"

namespace torspair {

using detail::CP;

PolyMat poly_zero_mat(RingTag tag, long rows, long cols) {
    return PolyMat(rows, cols, LaurentPoly::zero(tag));
}

PolyMat poly_identity(RingTag tag, long n) {
    PolyMat m = poly_zero_mat(tag, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one(tag);
    return m;
}

PolyMat poly_scalar_mat(const LaurentPoly& c, long n) {
    PolyMat m = poly_zero_mat(c.ring(), n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

namespace {

void check_same_shape(long ar, long ac, long br, long bc) {
    if (ar != br || ac != bc) throw AlgebraError("matrix shape mismatch");
}

template <typename T>
Mat<T> mat_add(const Mat<T>& a, const Mat<T>& b, bool subtract) {
    check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
    Mat<T> out = a;
    for (long i = 0; i < a.rows() * a.cols(); ++i)
        out.data()[i] = subtract ? out.data()[i] - b.data()[i] : out.data()[i] + b.data()[i];
    return out;
}

template <typename T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b, const T& zero) {
    if (a.cols() != b.rows()) throw AlgebraError("matrix shape mismatch");
    Mat<T> out(a.rows(), b.cols(), zero);
    for (long r = 0; r < a.rows(); ++r)
        for (long k = 0; k < a.cols(); ++k) {
            const T& av = a.at(r, k);
            if (av == zero) continue;
            for (long c = 0; c < b.cols(); ++c) out.at(r, c) = out.at(r, c) + av * b.at(k, c);
        }
    return out;
}

}  // namespace

PolyMat operator+(const PolyMat& a, const PolyMat& b) { return mat_add(a, b, false); }
PolyMat operator-(const PolyMat& a, const PolyMat& b) { return mat_add(a, b, true); }

PolyMat operator-(const PolyMat& a) {
    PolyMat out = a;
    for (auto& e : out.data()) e = -e;
    return out;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
    return mat_mul(a, b, LaurentPoly::zero(a.at(0, 0).ring()));
}

PolyMat operator*(const LaurentPoly& c, const PolyMat& a) {
    PolyMat out = a;
    for (auto& e : out.data()) e = c * e;
    return out;
}

RatMat rat_zero_mat(RingTag tag, long rows, long cols) {
    return RatMat(rows, cols, RatFunc(tag));
}

RatMat rat_identity(RingTag tag, long n) {
    RatMat m = rat_zero_mat(tag, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = RatFunc(LaurentPoly::one(tag));
    return m;
}

RatMat operator+(const RatMat& a, const RatMat& b) { return mat_add(a, b, false); }
RatMat operator-(const RatMat& a, const RatMat& b) { return mat_add(a, b, true); }

RatMat operator-(const RatMat& a) {
    RatMat out = a;
    for (auto& e : out.data()) e = -e;
    return out;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
    return mat_mul(a, b, RatFunc(a.at(0, 0).ring()));
}

RatMat operator*(const RatFunc& c, const RatMat& a) {
    RatMat out = a;
    for (auto& e : out.data()) e = c * e;
    return out;
}

RatMat to_ratmat(const PolyMat& a) {
    return a.map([](const LaurentPoly& p) { return RatFunc(p); });
}

PolyMat to_polymat(const RatMat& a, RingTag tag) {
    return a.map([&](const RatFunc& f) {
        if (!f.is_polynomial()) throw AlgebraError("non-unit base");
        return f.as_laurent().with_ring(tag);
    });
}

bool is_zero_mat(const PolyMat& a) {
    for (const auto& e : a.data())
        if (!e.is_zero()) return false;
    return true;
}

bool is_zero_mat(const RatMat& a) {
    for (const auto& e : a.data())
        if (!e.is_zero()) return false;
    return true;
}

PolyMat sharp_transpose(const PolyMat& a) {
    return a.map([](const LaurentPoly& p) { return p.sharp(); }).transpose();
}

RatMat sharp_transpose(const RatMat& a) {
    return a.map([](const RatFunc& f) { return f.sharp(); }).transpose();
}

LaurentPoly det(const PolyMat& a) {
    if (a.rows() != a.cols()) throw AlgebraError("determinant of non-square matrix");
    long n = a.rows();
    RingTag tag = a.at(0, 0).ring();
    if (n == 1) return a.at(0, 0);
    LaurentPoly acc = LaurentPoly::zero(tag);
    std::vector<long> cols(n - 1);
    for (long c = 0; c < n; ++c) {
        if (a.at(0, c).is_zero()) continue;
        PolyMat minor = poly_zero_mat(tag, n - 1, n - 1);
        for (long r = 1; r < n; ++r) {
            long cc = 0;
            for (long c2 = 0; c2 < n; ++c2) {
                if (c2 == c) continue;
                minor.at(r - 1, cc++) = a.at(r, c2);
            }
        }
        LaurentPoly term = a.at(0, c) * det(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

PolyMat adjugate(const PolyMat& a) {
    if (a.rows() != a.cols()) throw AlgebraError("adjugate of non-square matrix");
    long n = a.rows();
    RingTag tag = a.at(0, 0).ring();
    if (n == 1) return poly_identity(tag, 1);
    PolyMat out = poly_zero_mat(tag, n, n);
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) {
            PolyMat minor = poly_zero_mat(tag, n - 1, n - 1);
            long rr = 0;
            for (long r2 = 0; r2 < n; ++r2) {
                if (r2 == r) continue;
                long cc = 0;
                for (long c2 = 0; c2 < n; ++c2) {
                    if (c2 == c) continue;
                    minor.at(rr, cc++) = a.at(r2, c2);
                }
                ++rr;
            }
            LaurentPoly cof = det(minor);
            if ((r + c) % 2 != 0) cof = -cof;
            out.at(c, r) = cof;  // transposed cofactor
        }
    return out;
}

namespace {

// pivot weight: lowest total degree first
long entry_weight(const RatFunc& f) {
    if (f.is_zero()) return -1;
    long w = 0;
    if (!f.num().is_zero()) w += f.num().max_doubled_exp() - f.num().min_doubled_exp();
    if (!f.den().is_zero()) w += f.den().max_doubled_exp() - f.den().min_doubled_exp();
    return w;
}

}  // namespace

RatFunc det(const RatMat& a0) {
    if (a0.rows() != a0.cols()) throw AlgebraError("determinant of non-square matrix");
    RatMat a = a0;
    long n = a.rows();
    RingTag tag = a.at(0, 0).ring();
    RatFunc result(LaurentPoly::one(tag));
    int sign = 1;
    for (long k = 0; k < n; ++k) {
        long pr = -1, pw = 0;
        for (long r = k; r < n; ++r) {
            long w = entry_weight(a.at(r, k));
            if (w < 0) continue;
            if (pr < 0 || w < pw) {
                pr = r;
                pw = w;
            }
        }
        if (pr < 0) return RatFunc(tag);
        if (pr != k) {
            for (long c = k; c < n; ++c) std::swap(a.at(k, c), a.at(pr, c));
            sign = -sign;
        }
        result = result * a.at(k, k);
        RatFunc inv = a.at(k, k).inverse();
        for (long r = k + 1; r < n; ++r) {
            if (a.at(r, k).is_zero()) continue;
            RatFunc f = a.at(r, k) * inv;
            for (long c = k; c < n; ++c) a.at(r, c) = a.at(r, c) - f * a.at(k, c);
        }
    }
    if (sign < 0) result = -result;
    return result;
}

RatMat inverse(const RatMat& a0) {
    if (a0.rows() != a0.cols()) throw AlgebraError("inverse of non-square matrix");
    long n = a0.rows();
    RingTag tag = a0.at(0, 0).ring();
    RatMat aug = RatMat::hcat(a0, rat_identity(tag, n));
    for (long k = 0; k < n; ++k) {
        long pr = -1, pw = 0;
        for (long r = k; r < n; ++r) {
            long w = entry_weight(aug.at(r, k));
            if (w < 0) continue;
            if (pr < 0 || w < pw) {
                pr = r;
                pw = w;
            }
        }
        if (pr < 0) throw AlgebraError("singular matrix");
        if (pr != k)
            for (long c = 0; c < 2 * n; ++c) std::swap(aug.at(k, c), aug.at(pr, c));
        RatFunc inv = aug.at(k, k).inverse();
        for (long c = 0; c < 2 * n; ++c) aug.at(k, c) = aug.at(k, c) * inv;
        for (long r = 0; r < n; ++r) {
            if (r == k || aug.at(r, k).is_zero()) continue;
            RatFunc f = aug.at(r, k);
            for (long c = 0; c < 2 * n; ++c) aug.at(r, c) = aug.at(r, c) - f * aug.at(k, c);
        }
    }
    return aug.sub(0, n, n, n);
}

PolyMat poly_inverse(const PolyMat& a) {
    RatMat inv = inverse(to_ratmat(a));
    return to_polymat(inv, a.at(0, 0).ring());
}

PolyMat poly_pow(const PolyMat& a, long k) {
    RingTag tag = a.at(0, 0).ring();
    if (a.rows() != a.cols()) throw AlgebraError("power of non-square matrix");
    if (k == 0) return poly_identity(tag, a.rows());
    PolyMat base = k > 0 ? a : poly_inverse(a);
    unsigned long e = k > 0 ? k : -k;
    PolyMat acc = poly_identity(tag, a.rows());
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

PolyMat geometric_quotient(const PolyMat& a, long ell) {
    if (ell == 0) throw AlgebraError("undefined exponent");
    RingTag tag = a.at(0, 0).ring();
    long n = a.rows();
    PolyMat acc = poly_zero_mat(tag, n, n);
    if (ell > 0) {
        PolyMat pw = poly_identity(tag, n);
        for (long i = 0; i < ell; ++i) {
            acc = acc + pw;
            pw = pw * a;
        }
    } else {
        PolyMat ainv = poly_inverse(a);
        PolyMat pw = ainv;
        for (long i = 1; i <= -ell; ++i) {
            acc = acc - pw;
            pw = pw * ainv;
        }
    }
    return acc;
}

long rank(const RatMat& a0) {
    RatMat a = a0;
    long rows = a.rows(), cols = a.cols();
    long r0 = 0;
    for (long c = 0; c < cols && r0 < rows; ++c) {
        long pr = -1, pw = 0;
        for (long r = r0; r < rows; ++r) {
            long w = entry_weight(a.at(r, c));
            if (w < 0) continue;
            if (pr < 0 || w < pw) {
                pr = r;
                pw = w;
            }
        }
        if (pr < 0) continue;
        if (pr != r0)
            for (long c2 = c; c2 < cols; ++c2) std::swap(a.at(r0, c2), a.at(pr, c2));
        RatFunc inv = a.at(r0, c).inverse();
        for (long r = r0 + 1; r < rows; ++r) {
            if (a.at(r, c).is_zero()) continue;
            RatFunc f = a.at(r, c) * inv;
            for (long c2 = c; c2 < cols; ++c2) a.at(r, c2) = a.at(r, c2) - f * a.at(r0, c2);
        }
        ++r0;
    }
    return r0;
}

long rank_over_fraction_field(const PolyMat& a) { return rank(to_ratmat(a)); }

DvrSnf snf_over_dvr(const RatMat& a, const Center& c0) {
    long rows = a.rows(), cols = a.cols();
    RingTag tag = a.at(0, 0).ring();
    if (tag.kind != RingKind::cyclotomic) tag = ring_cyc(c0.cyc_order());
    DvrSnf out{{}, rat_identity(tag, rows), rat_identity(tag, cols), a};
    RatMat& d = out.D;
    long steps = std::min(rows, cols);
    for (long k = 0; k < steps; ++k) {
        // pivot: minimal valuation, ties row-major
        long pr = -1, pc = -1, pv = 0;
        for (long r = k; r < rows; ++r)
            for (long c = k; c < cols; ++c) {
                if (d.at(r, c).is_zero()) continue;
                long v = valuation_at(d.at(r, c), c0);
                if (pr < 0 || v < pv) {
                    pr = r;
                    pc = c;
                    pv = v;
                }
            }
        if (pr < 0) break;
        if (pr != k) {
            for (long c = 0; c < cols; ++c) std::swap(d.at(k, c), d.at(pr, c));
            for (long c = 0; c < rows; ++c) std::swap(out.U.at(k, c), out.U.at(pr, c));
        }
        if (pc != k) {
            for (long r = 0; r < rows; ++r) std::swap(d.at(r, k), d.at(r, pc));
            for (long r = 0; r < cols; ++r) std::swap(out.V.at(r, k), out.V.at(r, pc));
        }
        RatFunc inv = d.at(k, k).inverse();
        for (long r = k + 1; r < rows; ++r) {
            if (d.at(r, k).is_zero()) continue;
            RatFunc f = d.at(r, k) * inv;
            for (long c = k; c < cols; ++c) d.at(r, c) = d.at(r, c) - f * d.at(k, c);
            for (long c = 0; c < rows; ++c) out.U.at(r, c) = out.U.at(r, c) - f * out.U.at(k, c);
        }
        for (long c = k + 1; c < cols; ++c) {
            if (d.at(k, c).is_zero()) continue;
            RatFunc f = d.at(k, c) * inv;
            for (long r = k; r < rows; ++r) d.at(r, c) = d.at(r, c) - f * d.at(r, k);
            for (long r = 0; r < cols; ++r) out.V.at(r, c) = out.V.at(r, c) - f * out.V.at(r, k);
        }
    }
    for (long i = 0; i < steps; ++i) {
        if (d.at(i, i).is_zero())
            out.exponents.push_back(kValInfinity);
        else
            out.exponents.push_back(valuation_at(d.at(i, i), c0));
    }
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

RatMat dvr_kernel_basis(const RatMat& a, const Center& c0) {
    DvrSnf snf = snf_over_dvr(a, c0);
    long cols = a.cols();
    std::vector<long> kernel_cols;
    for (long j = 0; j < cols; ++j) {
        bool zero = true;
        for (long r = 0; r < a.rows(); ++r)
            if (!snf.D.at(r, j).is_zero()) {
                zero = false;
                break;
            }
        if (zero) kernel_cols.push_back(j);
    }
    RingTag tag = snf.V.at(0, 0).ring();
    RatMat out = rat_zero_mat(tag, cols, static_cast<long>(kernel_cols.size()));
    for (long r = 0; r < cols; ++r)
        for (size_t j = 0; j < kernel_cols.size(); ++j)
            out.at(r, static_cast<long>(j)) = snf.V.at(r, kernel_cols[j]);
    return out;
}

std::optional<RatMat> solve_exact(const RatMat& k, const RatMat& b) {
    if (k.rows() != b.rows()) throw AlgebraError("matrix shape mismatch");
    long rows = k.rows(), kc = k.cols(), bc = b.cols();
    RatMat aug = RatMat::hcat(k, b);
    long piv = 0;
    for (long c = 0; c < kc; ++c) {
        long pr = -1, pw = 0;
        for (long r = piv; r < rows; ++r) {
            long w = entry_weight(aug.at(r, c));
            if (w < 0) continue;
            if (pr < 0 || w < pw) {
                pr = r;
                pw = w;
            }
        }
        if (pr < 0) return std::nullopt;  // not full column rank
        if (pr != piv)
            for (long c2 = 0; c2 < kc + bc; ++c2) std::swap(aug.at(piv, c2), aug.at(pr, c2));
        RatFunc inv = aug.at(piv, c).inverse();
        for (long c2 = 0; c2 < kc + bc; ++c2) aug.at(piv, c2) = aug.at(piv, c2) * inv;
        for (long r = 0; r < rows; ++r) {
            if (r == piv || aug.at(r, c).is_zero()) continue;
            RatFunc f = aug.at(r, c);
            for (long c2 = 0; c2 < kc + bc; ++c2)
                aug.at(r, c2) = aug.at(r, c2) - f * aug.at(piv, c2);
        }
        ++piv;
    }
    // consistency: remaining rows must vanish on the B side
    for (long r = piv; r < rows; ++r)
        for (long c = kc; c < kc + bc; ++c)
            if (!aug.at(r, c).is_zero()) return std::nullopt;
    RatMat sol = aug.sub(0, kc, kc, bc);
    if (!((k * sol) == b)) return std::nullopt;
    return sol;
}

namespace {

struct DenseQtMat {
    std::vector<std::vector<CP>> a;  // dense polys over Q (level 1) in t
    long rows, cols;
};

void qt_swap_rows(DenseQtMat& m, long r1, long r2) { std::swap(m.a[r1], m.a[r2]); }

void qt_swap_cols(DenseQtMat& m, long c1, long c2) {
    for (long r = 0; r < m.rows; ++r) std::swap(m.a[r][c1], m.a[r][c2]);
}

}  // namespace

QtSnf snf_over_qt(const PolyMat& a0) {
    long rows = a0.rows(), cols = a0.cols();
    RingTag tag = ring_Q();
    long min_exp = 0;
    for (const auto& e : a0.data()) {
        if (e.is_zero()) continue;
        if (e.has_half_exponents()) throw AlgebraError("half exponents in PID normal form");
        min_exp = std::min(min_exp, e.min_doubled_exp() / 2);
    }
    // clear denominator t powers; over the Laurent ring this is a unit factor
    DenseQtMat m{{}, rows, cols};
    m.a.assign(rows, std::vector<CP>(cols));
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) {
            const LaurentPoly& e = a0.at(r, c);
            CP p;
            if (!e.is_zero()) {
                p.assign(e.max_doubled_exp() / 2 - min_exp + 1, Cyc());
                for (const auto& [dk, v] : e.terms()) p[dk / 2 - min_exp] = v.lifted(1);
                detail::cp_trim(p);
            }
            m.a[r][c] = std::move(p);
        }
    std::vector<std::vector<CP>> v(cols, std::vector<CP>(cols));
    for (long i = 0; i < cols; ++i) v[i][i] = CP{Cyc::rational(Rat(1))};

    auto v_swap_cols = [&](long c1, long c2) {
        for (long r = 0; r < cols; ++r) std::swap(v[r][c1], v[r][c2]);
    };
    auto v_submul_col = [&](long dst, long src, const CP& q) {
        for (long r = 0; r < cols; ++r) v[r][dst] = detail::cp_sub(v[r][dst], detail::cp_mul(q, v[r][src]));
    };

    long k = 0;
    long steps = std::min(rows, cols);
    while (k < steps) {
        long pr = -1, pc = -1, pd = 0;
        for (long r = k; r < rows; ++r)
            for (long c = k; c < cols; ++c) {
                if (detail::cp_is_zero(m.a[r][c])) continue;
                long dg = detail::cp_deg(m.a[r][c]);
                if (pr < 0 || dg < pd) {
                    pr = r;
                    pc = c;
                    pd = dg;
                }
            }
        if (pr < 0) break;
        if (pr != k) qt_swap_rows(m, k, pr);
        if (pc != k) {
            qt_swap_cols(m, k, pc);
            v_swap_cols(k, pc);
        }
        bool settled = false;
        while (!settled) {
            settled = true;
            for (long r = k + 1; r < rows; ++r) {
                if (detail::cp_is_zero(m.a[r][k])) continue;
                auto [q, rem] = detail::cp_divrem(m.a[r][k], m.a[k][k]);
                for (long c = k; c < cols; ++c)
                    m.a[r][c] = detail::cp_sub(m.a[r][c], detail::cp_mul(q, m.a[k][c]));
                if (!detail::cp_is_zero(rem)) {
                    qt_swap_rows(m, k, r);
                    settled = false;
                }
            }
            for (long c = k + 1; c < cols; ++c) {
                if (detail::cp_is_zero(m.a[k][c])) continue;
                auto [q, rem] = detail::cp_divrem(m.a[k][c], m.a[k][k]);
                for (long r = k; r < rows; ++r)
                    m.a[r][c] = detail::cp_sub(m.a[r][c], detail::cp_mul(q, m.a[r][k]));
                v_submul_col(c, k, q);
                if (!detail::cp_is_zero(rem)) {
                    qt_swap_cols(m, k, c);
                    v_swap_cols(k, c);
                    settled = false;
                }
            }
            if (settled) {
                // divisibility chain: the pivot must divide the rest
                for (long r = k + 1; r < rows && settled; ++r)
                    for (long c = k + 1; c < cols && settled; ++c) {
                        if (detail::cp_is_zero(m.a[r][c])) continue;
                        auto rem = detail::cp_divrem(m.a[r][c], m.a[k][k]).second;
                        if (!detail::cp_is_zero(rem)) {
                            for (long c2 = k; c2 < cols; ++c2)
                                m.a[k][c2] = detail::cp_add(m.a[k][c2], m.a[r][c2]);
                            settled = false;
                        }
                    }
            }
        }
        ++k;
    }

    QtSnf out;
    out.rank = k;
    out.V = poly_zero_mat(tag, cols, cols);
    for (long r = 0; r < cols; ++r)
        for (long c = 0; c < cols; ++c) {
            LaurentPoly p(tag);
            for (long i = 0; i <= detail::cp_deg(v[r][c]); ++i)
                if (!v[r][c][i].is_zero()) p.set_coeff(2 * i, v[r][c][i]);
            out.V.at(r, c) = p;
        }
    for (long i = 0; i < steps; ++i) {
        LaurentPoly p(tag);
        const CP& d = m.a[i][i];
        for (long j = 0; j <= detail::cp_deg(d); ++j)
            if (!d[j].is_zero()) p.set_coeff(2 * j, d[j]);
        if (!p.is_zero()) {
            // Laurent-unit normalization: lowest exponent 0, lowest coefficient 1
            p = p.shifted(-p.min_doubled_exp());
            p = LaurentPoly::constant(tag, p.coeff(0).inverse()) * p;
        }
        out.diag.push_back(p);
    }
    return out;
}

}  // namespace torspair
