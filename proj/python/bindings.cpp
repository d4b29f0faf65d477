#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "kryspace/arnoldi.hpp"
#include "kryspace/classk.hpp"
#include "kryspace/diagnostics.hpp"
#include "kryspace/errors.hpp"
#include "kryspace/experiments.hpp"
#include "kryspace/gmres.hpp"
#include "kryspace/operator_zoo.hpp"

namespace py = pybind11;
using namespace kryspace;

namespace {

CoefficientVector on(const LinearOperator& op, const ComplexVector& values) {
  if (values.size() != op.dim()) {
    throw std::invalid_argument("dimension mismatch: expected " + std::to_string(op.dim()) + ", got " +
                                std::to_string(values.size()));
  }
  return CoefficientVector(op.space(), values);
}

std::optional<CoefficientVector> on(const LinearOperator& op, const std::optional<ComplexVector>& values) {
  if (!values) return std::nullopt;
  return on(op, *values);
}

WeightSequence to_weights(const py::object& w) {
  if (py::isinstance<WeightSequence>(w)) return w.cast<WeightSequence>();
  if (py::isinstance<py::float_>(w) || py::isinstance<py::int_>(w)) return WeightSequence::reciprocal(w.cast<double>());
  return WeightSequence::explicit_list(w.cast<std::vector<double>>());
}

py::dict rows_to_dict(const std::vector<SolveRow>& rows) {
  std::vector<Index> n;
  std::vector<double> res, err, sol, est;
  bool has_error = !rows.empty() && rows.front().error_norm.has_value();
  for (const auto& r : rows) {
    n.push_back(r.iteration);
    res.push_back(r.residual_norm);
    if (has_error) err.push_back(*r.error_norm);
    sol.push_back(r.solution_norm);
    est.push_back(r.estimated_residual);
  }
  py::dict d;
  d["N"] = n;
  d["residual_norm"] = res;
  d["error_norm"] = has_error ? py::object(py::cast(err)) : py::object(py::none());
  d["solution_norm"] = sol;
  d["estimated_residual"] = est;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Krylov subspace solvers and diagnostics on truncated Hilbert spaces";

  py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_RuntimeError);
  py::register_exception<UnsupportedOperator>(m, "UnsupportedOperator", PyExc_TypeError);

  py::class_<WeightSequence>(m, "WeightSequence")
      .def_static("reciprocal", &WeightSequence::reciprocal, py::arg("scale"))
      .def_static("explicit_list", &WeightSequence::explicit_list, py::arg("values"))
      .def("__getitem__", &WeightSequence::at);

  py::class_<LinearOperator>(m, "LinearOperator")
      .def_property_readonly("dim", &LinearOperator::dim)
      .def_property_readonly("name", [](const LinearOperator& op) { return op.info().name; })
      .def_property_readonly("operator_norm", [](const LinearOperator& op) { return op.info().operator_norm; })
      .def_property_readonly("kernel_indices", [](const LinearOperator& op) { return op.info().kernel_indices; })
      .def_property_readonly("self_adjoint", [](const LinearOperator& op) { return op.info().self_adjoint; })
      .def_property_readonly("normal", [](const LinearOperator& op) { return op.info().normal; })
      .def_property_readonly("weights", [](const LinearOperator& op) { return RealVector(op.space()->weights()); })
      .def_property_readonly("nodes", [](const LinearOperator& op) { return RealVector(op.space()->nodes()); })
      .def("apply", [](const LinearOperator& op, const ComplexVector& v) { return op.apply(on(op, v)).values(); })
      .def("adjoint_apply",
           [](const LinearOperator& op, const ComplexVector& v) { return op.adjoint_apply(on(op, v)).values(); })
      .def("inner", [](const LinearOperator& op, const ComplexVector& a, const ComplexVector& b) {
        return on(op, a).inner(on(op, b));
      })
      .def("norm", [](const LinearOperator& op, const ComplexVector& a) { return on(op, a).norm(); })
      .def("__repr__", [](const LinearOperator& op) {
        return "<LinearOperator " + op.info().name + " dim=" + std::to_string(op.dim()) + ">";
      });

  m.def("multiplication", [](const py::object& w, Index d) { return make_multiplication(to_weights(w), d); },
        py::arg("weights"), py::arg("dim"));
  m.def("masked_multiplication",
        [](const py::object& w, const std::vector<Index>& zero_set, Index d) {
          return make_masked_multiplication(to_weights(w), zero_set, d);
        },
        py::arg("weights"), py::arg("zero_set"), py::arg("dim"));
  m.def("diagonal",
        [](const ComplexVector& entries) {
          return make_diagonal(entries, Space::sequence(entries.size()));
        },
        py::arg("entries"));
  m.def("identity", &make_identity, py::arg("dim"));
  m.def("matrix", &make_matrix, py::arg("matrix"), py::arg("name") = "matrix");
  m.def("a_theta", &make_a_theta, py::arg("theta"));
  m.def("right_shift", &make_right_shift, py::arg("dim"));
  m.def("left_shift", &make_left_shift, py::arg("dim"));
  m.def("weighted_right_shift",
        [](const py::object& w, Index d) { return make_weighted_right_shift(to_weights(w), d); },
        py::arg("weights"), py::arg("dim"));
  m.def("bilateral_weighted_shift",
        [](const py::object& w, Index d) { return make_bilateral_weighted_shift(to_weights(w), d); },
        py::arg("weights"), py::arg("dim"));
  m.def("volterra", &make_volterra, py::arg("points"));
  m.def("fourier_convolution", &make_fourier_convolution, py::arg("n_modes"));
  m.def("fourier_symbol", &fourier_symbol, py::arg("n"));
  m.def("bilateral_slot", &bilateral_slot, py::arg("n"));
  m.def("bilateral_index", &bilateral_index, py::arg("slot"));

  py::class_<KrylovBasis>(m, "KrylovBasis")
      .def_property_readonly("size", &KrylovBasis::size)
      .def_property_readonly("Q", [](const KrylovBasis& b) { return ComplexMatrix(b.vectors()); })
      .def_property_readonly("H", &KrylovBasis::hessenberg)
      .def_property_readonly("beta", &KrylovBasis::beta)
      .def_property_readonly("grade", &KrylovBasis::grade)
      .def("leading", &KrylovBasis::leading, py::arg("k"));

  m.def(
      "arnoldi",
      [](const LinearOperator& op, const ComplexVector& g, Index n, double breakdown_tol) {
        ArnoldiOptions opts;
        opts.breakdown_tol = breakdown_tol;
        return arnoldi(op, on(op, g), n, opts);
      },
      py::arg("op"), py::arg("g"), py::arg("n"), py::arg("breakdown_tol") = 1e-12);
  m.def(
      "distance_to_subspace",
      [](const LinearOperator& op, const ComplexVector& v, const KrylovBasis& b) {
        return distance_to_subspace(on(op, v), b);
      },
      py::arg("op"), py::arg("v"), py::arg("basis"));
  m.def("orthonormality_defect", &orthonormality_defect, py::arg("basis"));
  m.def("arnoldi_relation_residual", &arnoldi_relation_residual, py::arg("op"), py::arg("basis"));

  m.def(
      "gmres_solve",
      [](const LinearOperator& op, const ComplexVector& g, Index n_max, const std::optional<ComplexVector>& exact) {
        const auto trace = gmres_solve(op, on(op, g), n_max, on(op, exact));
        py::dict d = rows_to_dict(trace.rows);
        d["solution"] = trace.final_solution.values();
        d["grade"] = trace.basis.grade();
        d["initial_residual"] = trace.initial_residual;
        d["initial_error"] = trace.initial_error;
        d["basis"] = trace.basis;
        return d;
      },
      py::arg("op"), py::arg("g"), py::arg("n_max"), py::arg("exact") = py::none());

  m.def(
      "reducibility_defect",
      [](const LinearOperator& op, const ComplexVector& g, Index n, bool allow_non_normal) {
        ReducibilityOptions opts;
        opts.allow_non_normal = allow_non_normal;
        std::vector<std::pair<Index, double>> out;
        for (const auto& p : reducibility_defect(op, on(op, g), n, opts)) out.emplace_back(p.n, p.defect);
        return out;
      },
      py::arg("op"), py::arg("g"), py::arg("n"), py::arg("allow_non_normal") = false);
  m.def(
      "intersection_indicator",
      [](const LinearOperator& op, const KrylovBasis& basis) {
        const auto ind = intersection_indicator(op, basis, op.dim());
        return py::make_tuple(ind.max_cosine, ind.image_rank, ind.notes);
      },
      py::arg("op"), py::arg("basis"));
  m.def(
      "kernel_error_profile",
      [](const LinearOperator& op, const ComplexVector& error, const std::vector<Index>& kernel, double tol) {
        const auto p = kernel_error_profile(on(op, error), kernel, tol);
        return py::make_tuple(p.on_kernel, p.off_kernel_max, p.supported_on_kernel);
      },
      py::arg("op"), py::arg("error"), py::arg("kernel_indices"), py::arg("tol") = 1e-6);
  m.def(
      "krylov_solution_projection",
      [](const LinearOperator& op, const ComplexVector& f, const KrylovBasis& b) {
        return krylov_solution_projection(on(op, f), b).values();
      },
      py::arg("op"), py::arg("f"), py::arg("basis"));

  py::class_<PolySeries>(m, "PolySeries")
      .def_readonly("center", &PolySeries::center)
      .def_readonly("degree", &PolySeries::degree)
      .def_readonly("coefficients", &PolySeries::coefficients)
      .def("evaluate", &PolySeries::evaluate)
      .def("remainder", &PolySeries::remainder)
      .def("remainder_bound", &PolySeries::remainder_bound, py::arg("radius"));
  m.def("inverse_poly", &inverse_poly, py::arg("center"), py::arg("degree"));
  m.def(
      "apply_poly",
      [](const LinearOperator& op, const PolySeries& p, const ComplexVector& g) {
        return apply_poly(op, p, on(op, g)).values();
      },
      py::arg("op"), py::arg("p"), py::arg("g"));
  m.def(
      "classk_error_curve",
      [](const LinearOperator& op, const ComplexVector& g, const ComplexVector& reference, Complex center,
         Index degree_max) {
        std::vector<double> err, res;
        for (const auto& r : classk_error_curve(op, on(op, g), on(op, reference), center, degree_max)) {
          err.push_back(r.error_norm);
          res.push_back(r.residual_norm);
        }
        return py::make_tuple(err, res);
      },
      py::arg("op"), py::arg("g"), py::arg("reference"), py::arg("center"), py::arg("degree_max"));
  m.def("classk_diagonal", &make_classk_diagonal, py::arg("dim"));

  m.def("experiments", [] {
    std::vector<std::string> names;
    for (auto n : all_experiments()) names.emplace_back(to_string(n));
    return names;
  });
  m.def(
      "run_experiment",
      [](const std::string& name, std::optional<Index> ambient_dim, std::optional<Index> n_max) {
        const auto parsed = parse_experiment_name(name);
        if (!parsed) throw std::invalid_argument("unknown experiment '" + name + "'");
        auto spec = ExperimentSpec::defaults(*parsed);
        if (ambient_dim) spec.ambient_dim = *ambient_dim;
        if (n_max) spec.n_max = *n_max;
        spec.validate();
        std::optional<ExperimentResult> result;
        {
          py::gil_scoped_release release;
          result.emplace(run_experiment(spec));
        }
        const auto& res = *result;
        py::dict d = rows_to_dict(res.rows);
        d["exact"] = res.problem.exact.values();
        d["exact_norm_closed_form"] = res.problem.exact_norm_closed_form;
        if (res.trace) d["solution"] = res.trace->final_solution.values();
        d["notes"] = res.diagnostics.notes;
        std::vector<std::pair<Index, double>> ladder;
        for (const auto& p : res.diagnostics.reducibility_defect) ladder.emplace_back(p.n, p.defect);
        d["reducibility_defect"] = ladder;
        d["intersection_max_cosine"] = res.diagnostics.intersection_max_cosine;
        return d;
      },
      py::arg("name"), py::arg("ambient_dim") = py::none(), py::arg("n_max") = py::none());

  m.def("trigamma", &trigamma, py::arg("m"));
}
