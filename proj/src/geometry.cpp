#include "berger/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace berger {

BergerContext BergerContext::make(double c) {
    if (!(c > -3.0)) throw std::invalid_argument("c must exceed -3");
    BergerContext ctx;
    ctx.c = c;
    ctx.s1 = std::sqrt(c + 3.0) / 2.0;
    ctx.s3 = (c + 3.0) / 4.0;
    ctx.I1 = 4.0 / (c + 3.0);
    ctx.I3 = 16.0 / ((c + 3.0) * (c + 3.0));
    return ctx;
}

double FrameVector::norm() const { return std::sqrt(A * A + B * B + C * C); }

double metric_inner(FrameVector v, FrameVector w) {
    return v.A * w.A + v.B * w.B + v.C * w.C;
}

AlgebraVector frame_to_algebra(FrameVector v, const BergerContext& ctx) {
    return {ctx.s1 * v.A, ctx.s1 * v.B, ctx.s3 * v.C};
}

FrameVector algebra_to_frame(AlgebraVector X, const BergerContext& ctx) {
    return {X.x1 / ctx.s1, X.x2 / ctx.s1, X.x3 / ctx.s3};
}

FrameVector structure_bracket(FrameVector v, FrameVector w,
                              const BergerContext& ctx) {
    const double h = (ctx.c + 3.0) / 2.0;
    return {h * (v.B * w.C - v.C * w.B), h * (v.C * w.A - v.A * w.C),
            2.0 * (v.A * w.B - v.B * w.A)};
}

FrameVector levi_civita(FrameVector v, FrameVector w,
                        const BergerContext& ctx) {
    const double h = (ctx.c + 1.0) / 2.0;
    return {v.B * w.C - h * v.C * w.B, -v.A * w.C + h * v.C * w.A,
            v.A * w.B - v.B * w.A};
}

FrameVector u_tensor(FrameVector v, FrameVector w, const BergerContext& ctx) {
    const double k = (ctx.c - 1.0) / 4.0;
    return {-k * (v.B * w.C + v.C * w.B), k * (v.A * w.C + v.C * w.A), 0.0};
}

FrameVector u_tensor_from_metric(FrameVector v, FrameVector w,
                                 const BergerContext& ctx) {
    const FrameVector basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    FrameVector u{};
    double* out[3] = {&u.A, &u.B, &u.C};
    for (int k = 0; k < 3; ++k) {
        const FrameVector z = basis[k];
        *out[k] = 0.5 * (-metric_inner(v, structure_bracket(w, z, ctx)) +
                         metric_inner(w, structure_bracket(z, v, ctx)));
    }
    return u;
}

FrameVector curvature(FrameVector v, FrameVector w, FrameVector z,
                      const BergerContext& ctx) {
    const FrameVector a = levi_civita(v, levi_civita(w, z, ctx), ctx);
    const FrameVector b = levi_civita(w, levi_civita(v, z, ctx), ctx);
    const FrameVector c = levi_civita(structure_bracket(v, w, ctx), z, ctx);
    return a - b - c;
}

double sectional(FrameVector v, FrameVector w, const BergerContext& ctx) {
    const double gram = metric_inner(v, v) * metric_inner(w, w) -
                        metric_inner(v, w) * metric_inner(v, w);
    if (gram < 1e-12)
        throw std::invalid_argument("sectional: v, w linearly dependent");
    return metric_inner(curvature(v, w, w, ctx), v) / gram;
}

std::array<double, 3> ricci(const BergerContext& ctx) {
    const FrameVector basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::array<double, 3> r{};
    for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i)
            s += metric_inner(curvature(basis[i], basis[j], basis[j], ctx),
                              basis[i]);
        r[j] = s;
    }
    return r;
}

double scalar_curvature(const BergerContext& ctx) {
    const auto r = ricci(ctx);
    return r[0] + r[1] + r[2];
}

double eta(FrameVector v) { return v.C; }

FrameVector reeb() { return {0.0, 0.0, 1.0}; }

FrameVector lorentz_phi(FrameVector v) { return {v.B, -v.A, 0.0}; }

AlgebraVector inertia_apply(AlgebraVector X, const BergerContext& ctx) {
    return {ctx.I1 * X.x1, ctx.I1 * X.x2, ctx.I3 * X.x3};
}

CheckReport check_nabla_phi_xi(const BergerContext& ctx) {
    const FrameVector basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CheckReport rep;
    for (const auto& x : basis) {
        // nabla_X xi = phi X
        const FrameVector d = levi_civita(x, reeb(), ctx) - lorentz_phi(x);
        rep.max_deviation = std::max(rep.max_deviation, d.norm());
        ++rep.checks;
        for (const auto& y : basis) {
            const FrameVector lhs = levi_civita(x, lorentz_phi(y), ctx) -
                                    lorentz_phi(levi_civita(x, y, ctx));
            const FrameVector rhs =
                (eta(y) * x) - (metric_inner(x, y) * reeb());
            rep.max_deviation =
                std::max(rep.max_deviation, (lhs - rhs).norm());
            ++rep.checks;
        }
    }
    return rep;
}

ProductAlgebraVector hat_map(AlgebraVector X, const BergerContext& ctx) {
    const FrameVector f = algebra_to_frame(X, ctx);
    const double beta = 4.0 / (ctx.c + 3.0);
    const FrameVector g_part{f.A, f.B, beta * f.C};
    return {frame_to_algebra(g_part, ctx),
            -(ctx.c - 1.0) / (ctx.c + 3.0) * f.C};
}

namespace {

// projection of (X, y e3) onto p(c) along the diagonal of the k factor
ProductAlgebraVector project_p(const ProductAlgebraVector& v,
                               const BergerContext& ctx) {
    const FrameVector f = algebra_to_frame(v.g, ctx);
    const double d = f.C - v.k_coeff;
    const double beta = 4.0 / (ctx.c + 3.0);
    return {frame_to_algebra({f.A, f.B, beta * d}, ctx),
            -(ctx.c - 1.0) / (ctx.c + 3.0) * d};
}

// coordinates of a p(c) element in the orthonormal basis {e1^, e2^, e3^}
// induced by the metric at the origin
std::array<double, 3> p_coords(const ProductAlgebraVector& v,
                               const BergerContext& ctx) {
    const FrameVector f = algebra_to_frame(v.g, ctx);
    return {f.A, f.B, (ctx.c + 3.0) / 4.0 * f.C};
}

double p_inner(const ProductAlgebraVector& a, const ProductAlgebraVector& b,
               const BergerContext& ctx) {
    const auto x = p_coords(a, ctx);
    const auto y = p_coords(b, ctx);
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

// bracket on su(2) (+) k; the k factor is abelian and central
ProductAlgebraVector l_bracket(const ProductAlgebraVector& a,
                               const ProductAlgebraVector& b) {
    return {bracket(a.g, b.g), 0.0};
}

} // namespace

CheckReport nat_red_check(const BergerContext& ctx) {
    const FrameVector fb[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    ProductAlgebraVector e[3];
    for (int i = 0; i < 3; ++i)
        e[i] = hat_map(frame_to_algebra(fb[i], ctx), ctx);

    CheckReport rep;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const double s =
                    p_inner(e[i], project_p(l_bracket(e[k], e[j]), ctx), ctx) +
                    p_inner(e[j], project_p(l_bracket(e[k], e[i]), ctx), ctx);
                rep.max_deviation = std::max(rep.max_deviation,
                                             std::abs(0.5 * s));
                ++rep.checks;
            }
    return rep;
}

CheckReport standard_field_check(const BergerContext& ctx) {
    if (std::abs(ctx.c - 1.0) > 1e-12)
        throw std::invalid_argument("standard_field_check requires c = 1");

    const FrameVector basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CheckReport rep;
    for (const auto& x : basis)
        for (const auto& y : basis) {
            // F^zeta(X^, Y^) = -<zeta, [X^, Y^]> with zeta = (e3/2, e3/2);
            // the bracket lands in the su(2) factor.
            const FrameVector br = structure_bracket(x, y, ctx);
            const double f_zeta = -0.5 * br.C;
            const double d_eta = metric_inner(lorentz_phi(x), y);
            rep.max_deviation =
                std::max(rep.max_deviation, std::abs(f_zeta - d_eta));
            ++rep.checks;
        }
    return rep;
}

} // namespace berger
