#pragma once

// Exact arithmetic for SU(2), su(2), SO(3) and so(3): quaternion products,
// brackets, closed-form exponentials, adjoint actions and the double cover.
//
// su(2) vectors are stored in the quaternionic basis {i, j, k}; group
// elements are unit quaternions q0 + q1 i + q2 j + q3 k.  SO(3) vectors use
// the standard generator basis {e1_hat, e2_hat, e3_hat} of so(3).

#include <array>
#include <cmath>

namespace berger {

struct AlgebraVector {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;

    friend AlgebraVector operator+(AlgebraVector a, AlgebraVector b) {
        return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
    }
    friend AlgebraVector operator-(AlgebraVector a, AlgebraVector b) {
        return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
    }
    friend AlgebraVector operator*(double s, AlgebraVector a) {
        return {s * a.x1, s * a.x2, s * a.x3};
    }
    AlgebraVector operator-() const { return {-x1, -x2, -x3}; }
    double norm() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }
};

struct GroupElement {
    double q0 = 1.0, q1 = 0.0, q2 = 0.0, q3 = 0.0;

    static GroupElement identity() { return {1.0, 0.0, 0.0, 0.0}; }
    double norm() const {
        return std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    }
    GroupElement normalized() const;
    GroupElement operator-() const { return {-q0, -q1, -q2, -q3}; }
};

struct So3Vector {
    double x = 0.0, y = 0.0, z = 0.0;

    friend So3Vector operator+(So3Vector a, So3Vector b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend So3Vector operator-(So3Vector a, So3Vector b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend So3Vector operator*(double s, So3Vector a) {
        return {s * a.x, s * a.y, s * a.z};
    }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline So3Vector cross(So3Vector a, So3Vector b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}
inline double dot(So3Vector a, So3Vector b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Row-major 3x3 matrix; used for SO(3) elements and the Ad representation.
struct So3Matrix {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static So3Matrix identity() { return {}; }
    double operator()(int r, int c) const { return m[3 * r + c]; }
    double& operator()(int r, int c) { return m[3 * r + c]; }
    So3Vector apply(So3Vector v) const;
    So3Matrix transpose() const;
    double det() const;
    // max |M^T M - 1| entry plus |det - 1|; 0 for an exact rotation
    double orthogonality_defect() const;

    friend So3Matrix operator*(const So3Matrix& a, const So3Matrix& b);
    friend So3Matrix operator-(const So3Matrix& a, const So3Matrix& b);
};

double max_abs(const So3Matrix& a);

// [X, Y]; coordinates are 2 (x cross y) in the quaternionic basis
AlgebraVector bracket(AlgebraVector X, AlgebraVector Y);

// normalized Killing form <X,Y>_1 = -tr(XY)/2 = x.y
double killing_inner(AlgebraVector X, AlgebraVector Y);

// closed-form exponential: cos(r) + sinc(r) X, r = |X|
GroupElement exp_group(AlgebraVector X);

GroupElement group_mul(GroupElement a, GroupElement b);
GroupElement group_inv(GroupElement a);

// sign-insensitive angle: zero iff a = +-b (equality in SO(3))
double group_distance(GroupElement a, GroupElement b);
// sign-sensitive angle: zero iff a = b in SU(2)
double group_distance_su2(GroupElement a, GroupElement b);
// max componentwise |a - b|; the angle metrics bottom out near 1e-8 from
// acos roundoff, so equality checks tighter than that use this one
double component_distance(GroupElement a, GroupElement b);

// Ad(a) X = a X a^{-1}
AlgebraVector adjoint(GroupElement a, AlgebraVector X);

// matrix of Ad(a) on the basis {i, j, k}; a and -a give the same rotation
So3Matrix double_cover(GroupElement a);
// differential of the cover at 1: (x1, x2, x3) -> (2 x1, 2 x2, 2 x3)
So3Vector double_cover_diff(AlgebraVector X);

// pi(a) = Ad(a)(k / sqrt(c+3)), a point on the base 2-sphere of radius
// 1/sqrt(c+3); rejects c <= -3
So3Vector hopf_project(GroupElement a, double c);

// Rodrigues formula with a small-angle series guard
So3Matrix exp_so3(So3Vector w);

// sinc with the series branch used by both exponentials
double sinc_stable(double r);

} // namespace berger
