#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "torspair/ratfunc.hpp"

namespace torspair {

template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(long rows, long cols, const T& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    T& at(long r, long c) { return e_[r * cols_ + c]; }
    const T& at(long r, long c) const { return e_[r * cols_ + c]; }

    Mat transpose() const {
        Mat out(cols_, rows_, e_.empty() ? T() : e_[0]);
        for (long r = 0; r < rows_; ++r)
            for (long c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
        return out;
    }

    Mat sub(long r0, long c0, long nr, long nc) const {
        Mat out(nr, nc, e_[0]);
        for (long r = 0; r < nr; ++r)
            for (long c = 0; c < nc; ++c) out.at(r, c) = at(r0 + r, c0 + c);
        return out;
    }

    template <typename F>
    auto map(F f) const -> Mat<decltype(f(e_[0]))> {
        using U = decltype(f(e_[0]));
        Mat<U> out(rows_, cols_, rows_ * cols_ ? f(e_[0]) : U());
        for (long i = 0; i < rows_ * cols_; ++i) out.data()[i] = f(e_[i]);
        return out;
    }

    std::vector<T>& data() { return e_; }
    const std::vector<T>& data() const { return e_; }

    bool operator==(const Mat& b) const {
        return rows_ == b.rows_ && cols_ == b.cols_ && e_ == b.e_;
    }

    static Mat hcat(const Mat& a, const Mat& b) {
        Mat out(a.rows_, a.cols_ + b.cols_, a.e_.empty() ? b.e_[0] : a.e_[0]);
        for (long r = 0; r < a.rows_; ++r) {
            for (long c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
            for (long c = 0; c < b.cols_; ++c) out.at(r, a.cols_ + c) = b.at(r, c);
        }
        return out;
    }

    static Mat vcat(const Mat& a, const Mat& b) {
        Mat out(a.rows_ + b.rows_, a.cols_, a.e_.empty() ? b.e_[0] : a.e_[0]);
        for (long c = 0; c < a.cols_; ++c) {
            for (long r = 0; r < a.rows_; ++r) out.at(r, c) = a.at(r, c);
            for (long r = 0; r < b.rows_; ++r) out.at(a.rows_ + r, c) = b.at(r, c);
        }
        return out;
    }

  private:
    long rows_, cols_;
    std::vector<T> e_;
};

using PolyMat = Mat<LaurentPoly>;
using RatMat = Mat<RatFunc>;

PolyMat poly_zero_mat(RingTag tag, long rows, long cols);
PolyMat poly_identity(RingTag tag, long n);
PolyMat poly_scalar_mat(const LaurentPoly& c, long n);

PolyMat operator+(const PolyMat& a, const PolyMat& b);
PolyMat operator-(const PolyMat& a, const PolyMat& b);
PolyMat operator-(const PolyMat& a);
PolyMat operator*(const PolyMat& a, const PolyMat& b);
PolyMat operator*(const LaurentPoly& c, const PolyMat& a);

RatMat rat_zero_mat(RingTag tag, long rows, long cols);
RatMat rat_identity(RingTag tag, long n);

RatMat operator+(const RatMat& a, const RatMat& b);
RatMat operator-(const RatMat& a, const RatMat& b);
RatMat operator-(const RatMat& a);
RatMat operator*(const RatMat& a, const RatMat& b);
RatMat operator*(const RatFunc& c, const RatMat& a);

RatMat to_ratmat(const PolyMat& a);
// entries must be polynomial
PolyMat to_polymat(const RatMat& a, RingTag tag);

bool is_zero_mat(const PolyMat& a);
bool is_zero_mat(const RatMat& a);

// entrywise # together with a transpose
PolyMat sharp_transpose(const PolyMat& a);
RatMat sharp_transpose(const RatMat& a);

LaurentPoly det(const PolyMat& a);   // cofactor expansion, exact
PolyMat adjugate(const PolyMat& a);  // adj(A) with A * adj(A) = det(A) I

RatFunc det(const RatMat& a);  // fraction-field Gaussian elimination
RatMat inverse(const RatMat& a);
// inverse with Laurent entries; throws "non-unit base" when the inverse does
// not exist over the Laurent ring
PolyMat poly_inverse(const PolyMat& a);

// matrix power, any integer exponent (negative uses poly_inverse)
PolyMat poly_pow(const PolyMat& a, long k);

// (I - A^ell)/(I - A) under the paper's sign convention; does not require
// I - A to be invertible
PolyMat geometric_quotient(const PolyMat& a, long ell);

// rank over the fraction field; pivot choice: lowest total degree, ties
// row-major
long rank(const RatMat& a);
long rank_over_fraction_field(const PolyMat& a);

// Smith normal form over the discrete valuation ring O(a): U*A*V = D with
// U, V invertible over germs, D diagonal with nondecreasing valuations.
// Exponents may contain kValInfinity (zero diagonal entries).
struct DvrSnf {
    std::vector<long> exponents;
    RatMat U, V, D;
};
DvrSnf snf_over_dvr(const RatMat& a, const Center& c);

// saturated free basis of the kernel, as columns (over O(a))
RatMat dvr_kernel_basis(const RatMat& a, const Center& c);

// solves K*C = B exactly over the fraction field (K of full column rank);
// nullopt when no exact solution exists
std::optional<RatMat> solve_exact(const RatMat& k, const RatMat& b);

// Smith normal form over the PID Q[t] (input tag integers or rationals, only
// integer exponents).  diag entries are normalized with lowest exponent 0 and
// lowest coefficient 1; V collects the column operations (A*V has the kernel
// of A in the columns beyond the rank).
struct QtSnf {
    std::vector<LaurentPoly> diag;
    PolyMat V;
    long rank = 0;
};
QtSnf snf_over_qt(const PolyMat& a);

}  // namespace torspair
