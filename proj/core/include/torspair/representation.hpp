#pragma once

#include <vector>

#include "torspair/matrix.hpp"
#include "torspair/words.hpp"

namespace torspair {

// A representation of pi_1(X_{T(m,n)}) by the invertible images of the two
// Heegaard generators.  Words map through products of generator powers.
class Representation {
  public:
    Representation(RingTag tag, PolyMat image_x, PolyMat image_y);

    long dim() const { return image_x_.rows(); }
    const RingTag& ring() const { return tag_; }
    const PolyMat& image_x() const { return image_x_; }
    const PolyMat& image_y() const { return image_y_; }

    PolyMat gen_power(Gen g, long k) const;  // rho(g^k), g in {x, y}
    PolyMat image(const Word& w) const;      // rho(w), w over {x, y}
    PolyMat image(const GroupRing& e) const;

    // rho(d w / d g)
    PolyMat fox_image(const Word& w, Gen g) const;
    // rho applied after the group-ring involution sum c_w w -> sum c_w w^{-1};
    // this is the form the op-module tensor identification produces in the
    // boundary matrices
    PolyMat fox_image_op(const Word& w, Gen g) const;

  private:
    RingTag tag_;
    PolyMat image_x_, image_y_, image_x_inv_, image_y_inv_;
};

// abelianization x -> t^n, y -> t^m
Representation abelianization_rep(const TorusParams& p);

// The Casson-Gordon type metabelian representation rho(b):
// x -> C^n with C the m x m companion-style matrix carrying t in the corner,
// y -> t diag(zeta_n^{b_1}, ..., zeta_n^{b_m}); coefficients in Q(zeta_{2n}).
// Requires sum(b) = 0 mod n and b != 0.
Representation metabelian_rep(const TorusParams& p, const std::vector<long>& b);

}  // namespace torspair
