#pragma once

#include <optional>
#include <vector>

#include "torspair/representation.hpp"

namespace torspair {

enum class Coefficients { classical, twisted };
enum class Provenance { closed_form, fox_derived, cap_product };

// The length-three complex of X_{T(m,n)} in block form: d1 is l x 2l, d2 is
// 2l x 2l, d3 is 2l x l, with the x-block before the y-block and gamma_1
// before gamma_2.  d1 d2 = 0 and d2 d3 = 0 hold exactly.
struct ChainComplex {
    RingTag tag;
    Provenance prov;
    PolyMat d1, d2, d3;
};

// boundary maps from the taut identity and Fox derivatives
ChainComplex complex_from_fox(const Representation& rep, const TorusParams& p);

// verbatim transcriptions of the closed-form boundary maps
ChainComplex complex_closed_form(Coefficients kind, const TorusParams& p,
                                 const std::vector<long>* b = nullptr);

struct PDMap {
    Provenance prov;
    PolyMat mat;  // 2l x 2l, C^2 coordinates -> C_1 coordinates
};

// closed-form Poincare duality matrix
PDMap pd_matrix(Coefficients kind, const TorusParams& p, const std::vector<long>* b = nullptr);

// Poincare duality as the cap product with the fundamental class, assembled
// from the diagonal approximation of the taut identity
PDMap pd_from_cap(const IdentityDecomposition& id, const Representation& rep);

// One tensor summand of D#(h^(3)): sign * [d omega / d x_left] h_left (x)
// [omega] h_relator, with the Fox derivative pushed through the
// representation.
struct DiagonalTerm {
    int left;     // 1 or 2: which h^(1) basis vector
    int relator;  // 1 or 2: which h^(2) basis vector
    int sign;
    PolyMat coeff;      // rho(d omega_i / d x_left)
    PolyMat translate;  // rho(omega_i)
};
std::vector<DiagonalTerm> diagonal_approximation(const IdentityDecomposition& id,
                                                 const Representation& rep);

struct ComplexReport {
    bool d1d2_zero = false;
    bool d2d3_zero = false;
    long rank_d1 = 0, rank_d2 = 0, rank_d3 = 0;
};
ComplexReport verify_complex(const ChainComplex& cc);

bool complexes_equal(const ChainComplex& a, const ChainComplex& b);

}  // namespace torspair
