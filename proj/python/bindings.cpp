// Python surface: the pipeline entry points and the value types they
// exchange. Vectors cross the boundary as lists; exceptions map onto a
// glsfun.Error hierarchy so callers can catch hypothesis failures narrowly.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "glsfun/conjugate.hpp"
#include "glsfun/csv.hpp"
#include "glsfun/eof.hpp"
#include "glsfun/errors.hpp"
#include "glsfun/gls_core.hpp"
#include "glsfun/inverse_problem.hpp"
#include "glsfun/norms.hpp"

namespace py = pybind11;
using namespace glsfun;

namespace {

Monotonicity mono_of(const std::string& s) {
    if (s == "increasing") return Monotonicity::increasing;
    if (s == "decreasing") return Monotonicity::decreasing;
    if (s.empty() || s == "unknown") return Monotonicity::unknown;
    throw DomainError("monotonicity must be increasing, decreasing, or unknown");
}

Convexity conv_of(const std::string& s) {
    if (s == "convex") return Convexity::convex;
    if (s == "concave") return Convexity::concave;
    if (s.empty() || s == "unknown") return Convexity::unknown;
    throw DomainError("convexity must be convex, concave, or unknown");
}

}  // namespace

PYBIND11_MODULE(_glsfun, m) {
    m.doc() =
        "Grand Lebesgue space toolkit: generating functions psi, fundamental "
        "functions phi, Young-Orlicz functions N, and the norms they induce on "
        "discrete measure spaces.";

    // Base first so derived translators run before it.
    auto err = py::register_exception<Error>(m, "Error");
    py::register_exception<DomainError>(m, "DomainError", err.ptr());
    py::register_exception<NotMonotone>(m, "NotMonotone", err.ptr());
    py::register_exception<NotIncreasing>(m, "NotIncreasing", err.ptr());
    py::register_exception<OutOfRange>(m, "OutOfRange", err.ptr());
    py::register_exception<TruncationUncertain>(m, "TruncationUncertain", err.ptr());
    py::register_exception<TailUncertain>(m, "TailUncertain", err.ptr());
    py::register_exception<NonConvex>(m, "NonConvex", err.ptr());
    py::register_exception<NonYoung>(m, "NonYoung", err.ptr());
    py::register_exception<NoValidC5>(m, "NoValidC5", err.ptr());
    py::register_exception<AllNonConvex>(m, "AllNonConvex", err.ptr());
    py::register_exception<InvalidFundamental>(m, "InvalidFundamental", err.ptr());
    py::register_exception<ExtensionNotConvex>(m, "ExtensionNotConvex", err.ptr());

    py::class_<ScalarFunction>(m, "ScalarFunction")
        .def("__call__", &ScalarFunction::operator())
        .def("domain_lo", &ScalarFunction::domain_lo)
        .def("domain_hi", &ScalarFunction::domain_hi)
        .def("contains", &ScalarFunction::contains)
        .def("describe", &ScalarFunction::describe)
        .def("__repr__", [](const ScalarFunction& f) { return "<ScalarFunction " + f.describe() + ">"; });

    m.def(
        "tabulation",
        [](std::vector<double> x, std::vector<double> y, const std::string& rule,
           const std::string& monotonicity, const std::string& convexity) {
            ScalarFunction f = ScalarFunction::tabulation(
                std::move(x), std::move(y), rule == "loglog" ? Interp::loglog : Interp::linear);
            if (!monotonicity.empty()) f = f.with_monotonicity(mono_of(monotonicity));
            if (!convexity.empty()) f = f.with_convexity(conv_of(convexity));
            return f;
        },
        py::arg("x"), py::arg("y"), py::arg("rule") = "linear", py::arg("monotonicity") = "",
        py::arg("convexity") = "", "Piecewise interpolant through the given knots.");
    m.def("power_fn",
          [](double c, double e, double lo, double hi) { return ScalarFunction::power(c, e, lo, hi); },
          py::arg("c"), py::arg("e"), py::arg("lo"), py::arg("hi"), "c * x^e on [lo, hi].");
    m.def("load_tabulation", &csv::load_tabulation, py::arg("path"));
    m.def("save_tabulation", &csv::save_tabulation, py::arg("tab"), py::arg("path"));

    py::class_<GeneratingFunction>(m, "GeneratingFunction")
        .def(py::init<ScalarFunction, double, double>(), py::arg("psi"), py::arg("a"), py::arg("b"))
        .def_static("power", &GeneratingFunction::power, py::arg("m"), py::arg("a") = 1.0)
        .def_static("grand", &GeneratingFunction::grand, py::arg("beta"), py::arg("b"),
                    py::arg("a") = 1.0)
        .def_static("from_spec", &parse_psi_spec, py::arg("spec"))
        .def("__call__", &GeneratingFunction::operator())
        .def("a", &GeneratingFunction::a)
        .def("b", &GeneratingFunction::b)
        .def("inf_psi", &GeneratingFunction::inf_psi)
        .def("scaled", &GeneratingFunction::scaled, py::arg("C"))
        .def("support_grid", &GeneratingFunction::support_grid,
             py::arg("n") = num::defaults::sup_grid_n)
        .def("psi", &GeneratingFunction::psi);

    py::class_<OrliczFunction>(m, "OrliczFunction")
        .def(py::init<ScalarFunction>(), py::arg("right_branch"))
        .def("__call__", &OrliczFunction::operator())
        .def("inverse", &OrliczFunction::inverse, py::arg("y"))
        .def("right_branch", &OrliczFunction::right_branch);

    m.def("fundamental_direct", &fundamental_direct, py::arg("psi"), py::arg("delta"),
          "sup over p of delta^(1/p) / psi(p).");
    m.def("nu_from_psi", &nu_from_psi, py::arg("psi"));
    m.def("orlicz_from_psi", &orlicz_from_psi, py::arg("psi"));
    m.def("theta", &theta, py::arg("psi"), py::arg("delta"));
    m.def("theta_from_orlicz", &theta_from_orlicz, py::arg("N"), py::arg("delta"));

    py::class_<ComparisonRow>(m, "ComparisonRow")
        .def_readonly("key", &ComparisonRow::key)
        .def_readonly("lhs", &ComparisonRow::lhs)
        .def_readonly("rhs", &ComparisonRow::rhs)
        .def_readonly("ratio", &ComparisonRow::ratio)
        .def_readonly("valid", &ComparisonRow::valid)
        .def_readonly("note", &ComparisonRow::note);
    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_readonly("key_name", &ComparisonReport::key_name)
        .def_readonly("lhs_name", &ComparisonReport::lhs_name)
        .def_readonly("rhs_name", &ComparisonReport::rhs_name)
        .def_readonly("rows", &ComparisonReport::rows)
        .def_readonly("ratio_min", &ComparisonReport::ratio_min)
        .def_readonly("ratio_max", &ComparisonReport::ratio_max)
        .def_readonly("log_ratio_at_smallest_key", &ComparisonReport::log_ratio_at_smallest_key);
    m.def("compare_fundamental", &compare_fundamental, py::arg("psi"), py::arg("delta_grid"));

    py::class_<LegendreEval>(m, "LegendreEval")
        .def_readonly("value", &LegendreEval::value)
        .def_readonly("argmax", &LegendreEval::argmax);
    m.def("legendre", &legendre, py::arg("g"), py::arg("q"),
          "Young-Fenchel transform sup_p (p|q| - g(p)).");
    m.def("legendre_eval", &legendre_eval, py::arg("g"), py::arg("q"));
    m.def("biconjugate_at", &biconjugate_at, py::arg("g"), py::arg("p"));

    py::class_<DiscreteMeasureSpace> space(m, "DiscreteMeasureSpace");
    space
        .def_static("uniform_probability", &DiscreteMeasureSpace::uniform_probability,
                    py::arg("n"))
        .def_static("geometric_truncated", &DiscreteMeasureSpace::geometric_truncated,
                    py::arg("total_mass"), py::arg("n"), py::arg("spread") = 1e4)
        .def_static("from_weights", &DiscreteMeasureSpace::from_weights, py::arg("weights"),
                    py::arg("kind"))
        .def("weights", &DiscreteMeasureSpace::weights)
        .def("total_mass", &DiscreteMeasureSpace::total_mass)
        .def("kind", &DiscreteMeasureSpace::kind)
        .def("__len__", &DiscreteMeasureSpace::size);
    py::enum_<DiscreteMeasureSpace::Kind>(space, "Kind")
        .value("probability", DiscreteMeasureSpace::Kind::probability)
        .value("truncated_infinite", DiscreteMeasureSpace::Kind::truncated_infinite);

    py::class_<Indicator>(m, "Indicator")
        .def_readonly("values", &Indicator::values)
        .def_readonly("achieved_mass", &Indicator::achieved_mass);
    m.def("indicator_of_mass", &indicator_of_mass, py::arg("space"), py::arg("target_mass"));
    m.def("lp_norm", &lp_norm, py::arg("space"), py::arg("f"), py::arg("p"));
    m.def("gls_norm", &gls_norm, py::arg("space"), py::arg("f"), py::arg("psi"));
    m.def("modular", &modular, py::arg("space"), py::arg("f"), py::arg("N"));
    m.def("luxemburg_norm", &luxemburg_norm, py::arg("space"), py::arg("f"), py::arg("N"));
    py::class_<AmemiyaResult>(m, "AmemiyaResult")
        .def_readonly("value", &AmemiyaResult::value)
        .def_readonly("bracketed", &AmemiyaResult::bracketed);
    m.def("orlicz_norm_amemiya", &orlicz_norm_amemiya, py::arg("space"), py::arg("f"),
          py::arg("N"));
    m.def("equivalence_report", &equivalence_report, py::arg("space"), py::arg("fs"),
          py::arg("psi"), py::arg("N"));

    py::class_<FundamentalFunction>(m, "FundamentalFunction")
        .def(py::init<ScalarFunction>(), py::arg("phi"))
        .def("__call__", &FundamentalFunction::operator())
        .def("delta_lo", &FundamentalFunction::delta_lo)
        .def("delta_hi", &FundamentalFunction::delta_hi)
        .def("phi", &FundamentalFunction::phi);
    m.def("orlicz_from_fundamental", &orlicz_from_fundamental, py::arg("phi"));
    py::class_<InversionResult>(m, "InversionResult")
        .def_readonly("psi", &InversionResult::psi)
        .def_readonly("C", &InversionResult::C)
        .def_readonly("vstar_defect", &InversionResult::vstar_defect)
        .def_readonly("p_covered_lo", &InversionResult::p_covered_lo)
        .def_readonly("p_covered_hi", &InversionResult::p_covered_hi);
    m.def("psi_from_fundamental",
          py::overload_cast<const FundamentalFunction&, double, const std::vector<double>&>(
              &psi_from_fundamental),
          py::arg("phi"), py::arg("C"), py::arg("p_grid"));
    m.def("psi_from_fundamental",
          py::overload_cast<const FundamentalFunction&, double>(&psi_from_fundamental),
          py::arg("phi"), py::arg("C"));
    py::class_<ShiftChoice>(m, "ShiftChoice")
        .def_readonly("C", &ShiftChoice::C)
        .def_readonly("defect", &ShiftChoice::defect);
    m.def("choose_C", &choose_C, py::arg("phi"));

    py::class_<WFunction>(m, "WFunction")
        .def(py::init<ScalarFunction>(), py::arg("w"))
        .def("__call__", &WFunction::operator())
        .def("derivative", &WFunction::derivative, py::arg("z"))
        .def("slope_still_growing", &WFunction::slope_still_growing)
        .def("asymptotic_slope", &WFunction::asymptotic_slope)
        .def("fn", &WFunction::fn);
    m.def("eof_from_W", &eof_from_W, py::arg("w"));
    py::class_<AlphaPatch>(m, "AlphaPatch")
        .def_readonly("alpha", &AlphaPatch::alpha)
        .def_readonly("C1", &AlphaPatch::C1)
        .def_readonly("C2", &AlphaPatch::C2)
        .def_readonly("C3", &AlphaPatch::C3)
        .def_readonly("C4", &AlphaPatch::C4)
        .def_readonly("C5", &AlphaPatch::C5)
        .def_readonly("patched", &AlphaPatch::patched);
    m.def("alpha_patch", &alpha_patch, py::arg("N"), py::arg("alpha"));
    m.def("trudinger", &trudinger, py::arg("m"), py::arg("j"));
    m.def("psi_from_W", &psi_from_W, py::arg("w"), py::arg("alpha"));
    m.def("orlicz_from_psi_eof", &orlicz_from_psi_eof, py::arg("psi"));
    m.def("theorem_a_check", &theorem_a_check, py::arg("space"), py::arg("psi"), py::arg("fs"),
          py::arg("alpha"));
}
