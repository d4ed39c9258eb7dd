#include "berger/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace berger {

GroupElement GroupElement::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize zero quaternion");
    return {q0 / n, q1 / n, q2 / n, q3 / n};
}

So3Vector So3Matrix::apply(So3Vector v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

So3Matrix So3Matrix::transpose() const {
    So3Matrix t;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
    return t;
}

double So3Matrix::det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) -
           m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

double So3Matrix::orthogonality_defect() const {
    So3Matrix g = transpose() * (*this);
    g(0, 0) -= 1.0;
    g(1, 1) -= 1.0;
    g(2, 2) -= 1.0;
    return max_abs(g) + std::abs(det() - 1.0);
}

So3Matrix operator*(const So3Matrix& a, const So3Matrix& b) {
    So3Matrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

So3Matrix operator-(const So3Matrix& a, const So3Matrix& b) {
    So3Matrix r;
    for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

double max_abs(const So3Matrix& a) {
    double m = 0.0;
    for (double v : a.m) m = std::max(m, std::abs(v));
    return m;
}

AlgebraVector bracket(AlgebraVector X, AlgebraVector Y) {
    return {2.0 * (X.x2 * Y.x3 - X.x3 * Y.x2),
            2.0 * (X.x3 * Y.x1 - X.x1 * Y.x3),
            2.0 * (X.x1 * Y.x2 - X.x2 * Y.x1)};
}

double killing_inner(AlgebraVector X, AlgebraVector Y) {
    return X.x1 * Y.x1 + X.x2 * Y.x2 + X.x3 * Y.x3;
}

double sinc_stable(double r) {
    if (r < 1e-4) {
        const double r2 = r * r;
        return 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
    }
    return std::sin(r) / r;
}

GroupElement exp_group(AlgebraVector X) {
    const double r = X.norm();
    const double s = sinc_stable(r);
    return {std::cos(r), s * X.x1, s * X.x2, s * X.x3};
}

GroupElement group_mul(GroupElement a, GroupElement b) {
    return {a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
            a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
            a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
            a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0};
}

GroupElement group_inv(GroupElement a) { return {a.q0, -a.q1, -a.q2, -a.q3}; }

static double dot4(GroupElement a, GroupElement b) {
    return a.q0 * b.q0 + a.q1 * b.q1 + a.q2 * b.q2 + a.q3 * b.q3;
}

double group_distance(GroupElement a, GroupElement b) {
    return std::acos(std::min(1.0, std::abs(dot4(a, b))));
}

double group_distance_su2(GroupElement a, GroupElement b) {
    return std::acos(std::clamp(dot4(a, b), -1.0, 1.0));
}

double component_distance(GroupElement a, GroupElement b) {
    return std::max({std::abs(a.q0 - b.q0), std::abs(a.q1 - b.q1),
                     std::abs(a.q2 - b.q2), std::abs(a.q3 - b.q3)});
}

AlgebraVector adjoint(GroupElement a, AlgebraVector X) {
    const GroupElement x{0.0, X.x1, X.x2, X.x3};
    const GroupElement r = group_mul(group_mul(a, x), group_inv(a));
    return {r.q1, r.q2, r.q3};
}

So3Matrix double_cover(GroupElement a) {
    So3Matrix r;
    const AlgebraVector basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int j = 0; j < 3; ++j) {
        const AlgebraVector col = adjoint(a, basis[j]);
        r(0, j) = col.x1;
        r(1, j) = col.x2;
        r(2, j) = col.x3;
    }
    return r;
}

So3Vector double_cover_diff(AlgebraVector X) {
    return {2.0 * X.x1, 2.0 * X.x2, 2.0 * X.x3};
}

So3Vector hopf_project(GroupElement a, double c) {
    if (!(c > -3.0)) throw std::invalid_argument("c must exceed -3");
    const AlgebraVector p = adjoint(a, {0.0, 0.0, 1.0 / std::sqrt(c + 3.0)});
    return {p.x1, p.x2, p.x3};
}

So3Matrix exp_so3(So3Vector w) {
    const double th = w.norm();
    const double a = sinc_stable(th);
    double b; // (1 - cos th) / th^2
    if (th < 1e-4) {
        const double t2 = th * th;
        b = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
    } else {
        b = (1.0 - std::cos(th)) / (th * th);
    }
    const double kx = w.x, ky = w.y, kz = w.z;
    So3Matrix r;
    r(0, 0) = 1.0 + b * (-ky * ky - kz * kz);
    r(0, 1) = -a * kz + b * kx * ky;
    r(0, 2) = a * ky + b * kx * kz;
    r(1, 0) = a * kz + b * kx * ky;
    r(1, 1) = 1.0 + b * (-kx * kx - kz * kz);
    r(1, 2) = -a * kx + b * ky * kz;
    r(2, 0) = -a * ky + b * kx * kz;
    r(2, 1) = a * kx + b * ky * kz;
    r(2, 2) = 1.0 + b * (-kx * kx - ky * ky);
    return r;
}

} // namespace berger
