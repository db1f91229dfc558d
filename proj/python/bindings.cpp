#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orfkit/orfkit.hpp"

namespace py = pybind11;
using namespace orfkit;

namespace {

WeightMatrix draw(Estimator kind, int d, int p, std::uint64_t seed) {
  return kind == Estimator::orf ? orf_weight_matrix(d, p, seed) : rff_weight_matrix(d, p, seed);
}

py::dict as_dict(const BoundConstants& c) {
  py::dict out;
  out["d"] = c.d;
  out["b_d"] = c.b_d;
  out["c_d"] = c.c_d ? py::object(py::float_(*c.c_d)) : py::object(py::none());
  out["alpha_d"] = c.alpha_d;
  out["beta_d"] = c.beta_d;
  out["bias_interval_end"] = c.bias_interval_end;
  out["variance_interval_end"] = c.variance_interval_end;
  out["first_zero"] = c.first_zero;
  return out;
}

}  // namespace

PYBIND11_MODULE(_orfkit, m) {
  m.doc() = "Random Fourier and orthogonal random features for the Gaussian kernel";
  m.attr("__version__") = ORFKIT_VERSION;

  py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_ArithmeticError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::enum_<Estimator>(m, "Estimator").value("rff", Estimator::rff).value("orf", Estimator::orf);

  // Special functions. Scalar functions are vectorised over z.
  m.def("normalized_bessel", py::vectorize(&specfun::normalized_bessel), py::arg("d"), py::arg("z"));
  m.def("normalized_bessel_series", &specfun::normalized_bessel_series, py::arg("d"), py::arg("z"),
        py::arg("tol") = 1e-15);
  m.def("normalized_bessel_quadrature", &specfun::normalized_bessel_quadrature, py::arg("d"), py::arg("z"),
        py::arg("nodes"));
  m.def("first_zero", &specfun::first_zero, py::arg("d"));
  m.def("zeros", [](int d, int count) { return specfun::zeros(d, count).zeros(); }, py::arg("d"), py::arg("m"));
  m.def("rayleigh_partial", py::overload_cast<int, int>(&specfun::rayleigh_partial), py::arg("d"), py::arg("m"));
  m.def("weierstrass_partial", py::overload_cast<int, int, double>(&specfun::weierstrass_partial), py::arg("d"),
        py::arg("m"), py::arg("z"));

  // Closed forms and bounds.
  m.def("rff_bias", py::vectorize(&rff_bias), py::arg("z"));
  m.def("rff_variance", py::vectorize(&rff_variance), py::arg("p"), py::arg("z"));
  m.def("orf_bias", py::vectorize(&orf_bias), py::arg("d"), py::arg("z"));
  m.def("orf_variance", py::vectorize(&orf_variance), py::arg("d"), py::arg("p"), py::arg("z"));
  m.def("bound_constants", [](int d) { return as_dict(bound_constants(d)); }, py::arg("d"));
  m.def("bias_bounds", [](int d, double z) {
    const auto b = bias_bounds(d, z);
    return py::make_tuple(b.lower, b.upper, b.in_validity_interval);
  }, py::arg("d"), py::arg("z"));
  m.def("variance_bounds", [](int d, int p, double z) {
    const auto b = variance_bounds(d, p, z);
    return py::make_tuple(b.lower, b.upper, b.in_validity_interval);
  }, py::arg("d"), py::arg("p"), py::arg("z"));
  m.def("variance_dominance_interval", &variance_dominance_interval, py::arg("d"));

  // Sampling and features.
  m.def("weights", [](Estimator kind, int d, int p, std::uint64_t seed) { return draw(kind, d, p, seed).entries; },
        py::arg("kind"), py::arg("d"), py::arg("p"), py::arg("seed"));
  m.def("feature_matrix",
        [](Estimator kind, const Eigen::MatrixXd& x, int p, std::uint64_t seed) {
          return feature_matrix(draw(kind, static_cast<int>(x.cols()), p, seed), x);
        },
        py::arg("kind"), py::arg("x"), py::arg("p"), py::arg("seed"));
  m.def("gram_matrix",
        [](Estimator kind, const Eigen::MatrixXd& x, int p, std::uint64_t seed) {
          return gram_matrix(draw(kind, static_cast<int>(x.cols()), p, seed), x).entries;
        },
        py::arg("kind"), py::arg("x"), py::arg("p"), py::arg("seed"));

  // Monte-Carlo harness.
  m.def("empirical_moments",
        [](Estimator kind, int p, const Eigen::VectorXd& x, const Eigen::VectorXd& y, int s, std::uint64_t seed,
           int workers) {
          py::gil_scoped_release release;
          const auto e = empirical_moments(kind, static_cast<int>(x.size()), p, x, y, s, seed, workers);
          py::gil_scoped_acquire acquire;
          py::dict out;
          out["mean"] = e.mean;
          out["variance"] = e.variance;
          out["mean_stderr"] = e.mean_stderr;
          out["variance_stderr"] = e.variance_stderr;
          out["samples"] = e.samples;
          return out;
        },
        py::arg("kind"), py::arg("p"), py::arg("x"), py::arg("y"), py::arg("s"), py::arg("seed"),
        py::arg("workers") = 1);
  m.def("mse",
        [](Estimator kind, const Eigen::MatrixXd& x, int p, int trials, std::uint64_t seed, int workers) {
          MseOptions opt;
          opt.kind = kind;
          opt.p = p;
          opt.trials = trials;
          opt.seed = seed;
          opt.workers = workers;
          MseResult r;
          {
            py::gil_scoped_release release;
            r = run_mse(Dataset(x, "array", "python"), opt);
          }
          py::dict out;
          out["mean"] = r.mean;
          out["stddev"] = r.stddev;
          out["predicted"] = r.predicted;
          out["bandwidth"] = r.bandwidth;
          out["fraction_inside"] = r.fraction_inside;
          out["trial_mse"] = r.trial_mse;
          return out;
        },
        py::arg("kind"), py::arg("x"), py::arg("p"), py::arg("trials"), py::arg("seed"), py::arg("workers") = 1);
}
