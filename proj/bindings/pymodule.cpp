// Python bindings for the core operations: Lie arithmetic, the Berger
// metric family, closed-form trajectories with their oracle, and the
// analysis/rigid-body helpers.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "berger/analysis.hpp"
#include "berger/flows.hpp"
#include "berger/geometry.hpp"
#include "berger/lie.hpp"
#include "berger/manifest.hpp"
#include "berger/rigidbody.hpp"
#include "berger/trajectory_io.hpp"
#include "berger/verify.hpp"
#include "berger/version.hpp"

namespace py = pybind11;
using namespace berger;

PYBIND11_MODULE(pyberger, m) {
    m.doc() = "Geodesics and contact magnetic trajectories on the Berger "
              "sphere family M^3(c)";
    m.attr("__version__") = BERGER_VERSION;

    py::class_<AlgebraVector>(m, "AlgebraVector")
        .def(py::init<double, double, double>(), py::arg("x1"), py::arg("x2"),
             py::arg("x3"))
        .def_readwrite("x1", &AlgebraVector::x1)
        .def_readwrite("x2", &AlgebraVector::x2)
        .def_readwrite("x3", &AlgebraVector::x3)
        .def("norm", &AlgebraVector::norm)
        .def("__repr__", [](const AlgebraVector& v) {
            return "AlgebraVector(" + format_double(v.x1) + ", " +
                   format_double(v.x2) + ", " + format_double(v.x3) + ")";
        });

    py::class_<GroupElement>(m, "GroupElement")
        .def(py::init<double, double, double, double>(), py::arg("q0"),
             py::arg("q1"), py::arg("q2"), py::arg("q3"))
        .def_static("identity", &GroupElement::identity)
        .def_readwrite("q0", &GroupElement::q0)
        .def_readwrite("q1", &GroupElement::q1)
        .def_readwrite("q2", &GroupElement::q2)
        .def_readwrite("q3", &GroupElement::q3)
        .def("norm", &GroupElement::norm)
        .def("normalized", &GroupElement::normalized)
        .def("__repr__", [](const GroupElement& g) {
            return "GroupElement(" + format_double(g.q0) + ", " +
                   format_double(g.q1) + ", " + format_double(g.q2) + ", " +
                   format_double(g.q3) + ")";
        });

    py::class_<So3Vector>(m, "So3Vector")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"),
             py::arg("z"))
        .def_readwrite("x", &So3Vector::x)
        .def_readwrite("y", &So3Vector::y)
        .def_readwrite("z", &So3Vector::z)
        .def("norm", &So3Vector::norm);

    py::class_<So3Matrix>(m, "So3Matrix")
        .def_static("identity", &So3Matrix::identity)
        .def("apply", &So3Matrix::apply)
        .def("det", &So3Matrix::det)
        .def("orthogonality_defect", &So3Matrix::orthogonality_defect)
        .def("__getitem__",
             [](const So3Matrix& mat, std::pair<int, int> rc) {
                 return mat(rc.first, rc.second);
             })
        .def("rows", [](const So3Matrix& mat) {
            return std::vector<std::vector<double>>{
                {mat(0, 0), mat(0, 1), mat(0, 2)},
                {mat(1, 0), mat(1, 1), mat(1, 2)},
                {mat(2, 0), mat(2, 1), mat(2, 2)}};
        });

    m.def("bracket", &bracket);
    m.def("killing_inner", &killing_inner);
    m.def("exp_group", &exp_group);
    m.def("group_mul", &group_mul);
    m.def("group_inv", &group_inv);
    m.def("group_distance", &group_distance);
    m.def("group_distance_su2", &group_distance_su2);
    m.def("component_distance", &component_distance);
    m.def("adjoint", &adjoint);
    m.def("double_cover", &double_cover);
    m.def("double_cover_diff", &double_cover_diff);
    m.def("hopf_project", &hopf_project);
    m.def("exp_so3", &exp_so3);

    py::class_<BergerContext>(m, "BergerContext")
        .def_static("make", &BergerContext::make, py::arg("c"))
        .def_readonly("c", &BergerContext::c)
        .def_readonly("s1", &BergerContext::s1)
        .def_readonly("s3", &BergerContext::s3)
        .def_readonly("I1", &BergerContext::I1)
        .def_readonly("I3", &BergerContext::I3);

    py::class_<FrameVector>(m, "FrameVector")
        .def(py::init<double, double, double>(), py::arg("A"), py::arg("B"),
             py::arg("C"))
        .def_readwrite("A", &FrameVector::A)
        .def_readwrite("B", &FrameVector::B)
        .def_readwrite("C", &FrameVector::C)
        .def("norm", &FrameVector::norm)
        .def("__repr__", [](const FrameVector& v) {
            return "FrameVector(" + format_double(v.A) + ", " +
                   format_double(v.B) + ", " + format_double(v.C) + ")";
        });

    m.def("metric_inner", &metric_inner);
    m.def("frame_to_algebra", &frame_to_algebra);
    m.def("algebra_to_frame", &algebra_to_frame);
    m.def("structure_bracket", &structure_bracket);
    m.def("levi_civita", &levi_civita);
    m.def("u_tensor", &u_tensor);
    m.def("curvature", &curvature);
    m.def("sectional", &sectional);
    m.def("ricci", &ricci);
    m.def("scalar_curvature", &scalar_curvature);
    m.def("eta", &eta);
    m.def("reeb", &reeb);
    m.def("lorentz_phi", &lorentz_phi);
    m.def("inertia_apply", &inertia_apply);

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("max_deviation", &CheckReport::max_deviation)
        .def_readonly("checks", &CheckReport::checks);
    m.def("check_nabla_phi_xi", &check_nabla_phi_xi);
    m.def("nat_red_check", &nat_red_check);
    m.def("standard_field_check", &standard_field_check);

    py::class_<FlowParams>(m, "FlowParams")
        .def_static("make", &FlowParams::make, py::arg("ctx"), py::arg("q"),
                    py::arg("omega0"))
        .def_static("from_angle", &FlowParams::from_angle, py::arg("ctx"),
                    py::arg("q"), py::arg("theta"), py::arg("phase") = 0.0)
        .def_readonly("ctx", &FlowParams::ctx)
        .def_readonly("q", &FlowParams::q)
        .def_readonly("omega0", &FlowParams::omega0)
        .def_readonly("theta", &FlowParams::theta)
        .def_readonly("q_tilde", &FlowParams::q_tilde);

    py::class_<TrajectorySample>(m, "TrajectorySample")
        .def_readonly("t", &TrajectorySample::t)
        .def_readonly("gamma", &TrajectorySample::gamma)
        .def_readonly("omega", &TrajectorySample::omega);

    m.def("ea_rhs", &ea_rhs);
    m.def("mea_rhs", &mea_rhs);
    m.def("omega_closed_form", &omega_closed_form);
    m.def("geodesic_closed_form", &geodesic_closed_form);
    m.def("magnetic_closed_form", &magnetic_closed_form);
    m.def("magnetic_fibration_form", &magnetic_fibration_form);
    m.def("rk4_group_integrate", &rk4_group_integrate, py::arg("params"),
          py::arg("t_end"), py::arg("step"), py::arg("stride") = 1);
    m.def("sample_closed_form", &sample_closed_form);
    m.def(
        "lorentz_residual_analytic",
        [](const FlowParams& p, const std::vector<double>& times) {
            return lorentz_residual_analytic(p, times);
        },
        py::arg("params"), py::arg("times"));

    m.def("contact_angle", &contact_angle);
    m.def("engel_lambda", &engel_lambda);
    m.def("length_bound", &length_bound);
    m.def("diameter", &diameter);
    m.def("conjugate_times", &conjugate_times);
    m.def("conjugate_pi_family", &conjugate_pi_family);
    m.def("rational_detect", &rational_detect, py::arg("x"),
          py::arg("max_den") = 1000000, py::arg("tol") = 1e-12);

    py::class_<PeriodicityReport> rep(m, "PeriodicityReport");
    py::enum_<PeriodicityReport::Verdict>(rep, "Verdict")
        .value("Periodic", PeriodicityReport::Verdict::Periodic)
        .value("NoAtCap", PeriodicityReport::Verdict::NoAtCap)
        .value("Degenerate", PeriodicityReport::Verdict::Degenerate);
    rep.def_readonly("verdict", &PeriodicityReport::verdict)
        .def_readonly("rational", &PeriodicityReport::rational)
        .def_readonly("period", &PeriodicityReport::period)
        .def_readonly("quantity", &PeriodicityReport::quantity);
    m.def("geodesic_period_test", &geodesic_period_test, py::arg("theta"),
          py::arg("c"), py::arg("max_den") = 1000000, py::arg("tol") = 1e-12);
    m.def("magnetic_period_test", &magnetic_period_test, py::arg("q"),
          py::arg("theta"), py::arg("max_den") = 1000000,
          py::arg("tol") = 1e-12);

    py::class_<InertiaSpec>(m, "InertiaSpec")
        .def_static("make", &InertiaSpec::make)
        .def_readonly("I1", &InertiaSpec::I1)
        .def_readonly("I2", &InertiaSpec::I2)
        .def_readonly("I3", &InertiaSpec::I3);
    py::class_<GyrostatSpec>(m, "GyrostatSpec")
        .def(py::init([](So3Vector k) { return GyrostatSpec{k}; }))
        .def_readonly("kappa", &GyrostatSpec::kappa);
    m.def("euler_rhs", &euler_rhs);
    m.def("gyrostat_rhs", &gyrostat_rhs);
    m.def("symmetric_top_solution", &symmetric_top_solution);
    m.def("symmetric_top_omega", &symmetric_top_omega);
    m.def("berger_correspondence", &berger_correspondence);
    m.def("project_trajectory",
          [](const std::vector<TrajectorySample>& samples,
             const BergerContext& ctx) {
              return project_trajectory(samples, ctx);
          });

    py::class_<Check>(m, "Check")
        .def_readonly("name", &Check::name)
        .def_readonly("deviation", &Check::deviation)
        .def_readonly("tolerance", &Check::tolerance)
        .def_readonly("pass_", &Check::pass);
    py::class_<SuiteResult>(m, "SuiteResult")
        .def_readonly("suite", &SuiteResult::suite)
        .def_readonly("checks", &SuiteResult::checks)
        .def("all_pass", &SuiteResult::all_pass);
    m.def(
        "run_suites",
        [](const std::string& name) {
            return run_suites(name, VerifyOptions{});
        },
        py::arg("suite"));
}
