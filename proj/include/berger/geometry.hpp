#pragma once

// The Berger metric family M^3(c) on SU(2): orthonormal frame {e1, e2, e3},
// Levi-Civita connection, curvature, contact structure (eta, xi, phi),
// moment of inertia, and the reductive-homogeneous machinery used by the
// structural self-checks.

#include <array>

#include "berger/lie.hpp"

namespace berger {

// Curvature parameter c > -3 together with the derived constants:
//   e1 = s1 i, e2 = s1 j, e3 = s3 k   with s1 = sqrt(c+3)/2, s3 = (c+3)/4,
//   inertia eigenvalues I1 = I2 = 4/(c+3), I3 = 16/(c+3)^2 = I1^2.
struct BergerContext {
    double c;
    double s1;
    double s3;
    double I1;
    double I3;

    static BergerContext make(double c);
};

// Components w.r.t. the orthonormal frame {e1, e2, e3}.
struct FrameVector {
    double A = 0.0, B = 0.0, C = 0.0;

    friend FrameVector operator+(FrameVector a, FrameVector b) {
        return {a.A + b.A, a.B + b.B, a.C + b.C};
    }
    friend FrameVector operator-(FrameVector a, FrameVector b) {
        return {a.A - b.A, a.B - b.B, a.C - b.C};
    }
    friend FrameVector operator*(double s, FrameVector a) {
        return {s * a.A, s * a.B, s * a.C};
    }
    double norm() const;
};

double metric_inner(FrameVector v, FrameVector w);

AlgebraVector frame_to_algebra(FrameVector v, const BergerContext& ctx);
FrameVector algebra_to_frame(AlgebraVector X, const BergerContext& ctx);

// [e1,e2] = 2 e3, [e2,e3] = ((c+3)/2) e1, [e3,e1] = ((c+3)/2) e2
FrameVector structure_bracket(FrameVector v, FrameVector w,
                              const BergerContext& ctx);

// Levi-Civita connection on left-invariant fields
FrameVector levi_civita(FrameVector v, FrameVector w, const BergerContext& ctx);

// bi-invariance obstruction U; tabulated essential components
FrameVector u_tensor(FrameVector v, FrameVector w, const BergerContext& ctx);
// same tensor computed from 2<U(X,Y),Z> = -<X,[Y,Z]> + <Y,[Z,X]>
FrameVector u_tensor_from_metric(FrameVector v, FrameVector w,
                                 const BergerContext& ctx);

// R(v,w)z = nabla_v nabla_w z - nabla_w nabla_v z - nabla_[v,w] z
FrameVector curvature(FrameVector v, FrameVector w, FrameVector z,
                      const BergerContext& ctx);
// rejects linearly dependent v, w
double sectional(FrameVector v, FrameVector w, const BergerContext& ctx);
std::array<double, 3> ricci(const BergerContext& ctx);
double scalar_curvature(const BergerContext& ctx);

// contact structure: eta(v) = C, xi = e3, phi e1 = -e2, phi e2 = e1
double eta(FrameVector v);
FrameVector reeb();
FrameVector lorentz_phi(FrameVector v);

// moment of inertia acting on algebra coordinates
AlgebraVector inertia_apply(AlgebraVector X, const BergerContext& ctx);

struct CheckReport {
    double max_deviation = 0.0;
    int checks = 0;
};

// evaluates (nabla_X phi)Y = -g(X,Y) xi + eta(Y) X and nabla_X xi = phi X
// on all frame pairs
CheckReport check_nabla_phi_xi(const BergerContext& ctx);

// Element of the product algebra su(2) (+) k used by the homogeneous-space
// representation; `k_coeff` is the coefficient of e3 in the second factor.
struct ProductAlgebraVector {
    AlgebraVector g;
    double k_coeff = 0.0;
};

// tangent correspondence X -> X_hat into the reductive complement p(c)
ProductAlgebraVector hat_map(AlgebraVector X, const BergerContext& ctx);

// U_p computed on all basis pairs of p(c); zero identically for every c
CheckReport nat_red_check(const BergerContext& ctx);

// invariant two-form F^zeta versus d(eta) on all frame pairs; stated for the
// bi-invariant case and therefore requires c = 1
CheckReport standard_field_check(const BergerContext& ctx);

} // namespace berger
