#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "laguerre/ensembles.hpp"
#include "laguerre/run.hpp"
#include "laguerre/stats.hpp"
#include "laguerre/theory.hpp"

namespace py = pybind11;
using namespace laguerre;

namespace {

py::array_t<double> batch_array(const run::BatchResult& b) {
  py::array_t<double> out({static_cast<py::ssize_t>(b.samples), static_cast<py::ssize_t>(b.cols)});
  std::copy(b.values.begin(), b.values.end(), out.mutable_data());
  return out;
}

EmpiricalSample as_sample(const std::vector<double>& xs) {
  return EmpiricalSample(xs);
}

py::dict ks_dict(const KsReport& r) {
  py::dict d;
  d["kind"] = r.kind == KsReport::Kind::one_sample ? "one_sample" : "two_sample";
  d["statistic"] = r.statistic;
  d["n_a"] = r.n_a;
  d["n_b"] = r.n_b;
  d["alpha"] = r.alpha;
  d["critical"] = r.critical;
  d["pass"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_laguerre, m) {
  m.doc() = "beta-Laguerre / Wishart eigenvalue sampling core";
  m.attr("__version__") = run::kToolVersion;
  m.attr("generator_id") = RngStream::kGeneratorId;

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"),
           py::arg("stream_index") = 0)
      .def("uniform01", &RngStream::uniform01)
      .def("standard_normal", &RngStream::standard_normal)
      .def("gamma_variate", &RngStream::gamma_variate, py::arg("shape"), py::arg("scale") = 1.0)
      .def("chi_squared", [](RngStream& r, double dof) { return r.chi_squared(Dof(dof)); })
      .def("chi", [](RngStream& r, double dof) { return r.chi(Dof(dof)); })
      .def("beta_variate", &RngStream::beta_variate, py::arg("a"), py::arg("b"))
      .def("complex_standard_normal", &RngStream::complex_standard_normal)
      .def_property_readonly("variates_delivered", &RngStream::variates_delivered);

  m.def(
      "sample_batch",
      [](int n, double r, double beta, double sigma1, const std::string& method,
         const std::string& which, long samples, std::uint64_t seed, int threads) {
        run::RunConfig cfg;
        cfg.n = n;
        cfg.r = r;
        cfg.beta = beta;
        cfg.sigma1 = sigma1;
        cfg.method = run::parse_method(method);
        cfg.which = run::parse_which(which);
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.threads = threads;
        return batch_array(run::sample_batch(cfg));
      },
      py::arg("n"), py::arg("r"), py::arg("beta") = 2.0, py::arg("sigma1") = 1.0,
      py::arg("method") = "tridiagonal", py::arg("which") = "all", py::arg("samples") = 1,
      py::arg("seed") = 0, py::arg("threads") = 1,
      "Draw eigenvalue samples; rows are draws, columns the descending spectrum.");

  m.def("tridiag_eigen_all",
        [](std::vector<double> a, std::vector<double> b, double tol) {
          return tridiag_eigen_all(SymTridiagonal{std::move(a), std::move(b)}, tol).values;
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTol);
  m.def("pencil_eigen_all",
        [](std::vector<double> a_tilde, std::vector<double> b_tilde, double tol) {
          return pencil_eigen_all(BidiagonalPencil{std::move(a_tilde), std::move(b_tilde)}, tol)
              .values;
        },
        py::arg("a_tilde"), py::arg("b_tilde"), py::arg("tol") = kDefaultTol);
  m.def("sturm_count", [](std::vector<double> a, std::vector<double> b, double x) {
    return sturm_count(SymTridiagonal{std::move(a), std::move(b)}, x);
  });

  m.def("log_joint_density",
        [](const std::vector<double>& lambdas, int n, double r, double beta, double sigma1) {
          const LogDensity d = log_joint_density(lambdas, EnsembleParams{n, r, beta, sigma1});
          return py::make_tuple(d.log_value, d.normalized);
        },
        py::arg("lambdas"), py::arg("n"), py::arg("r"), py::arg("beta") = 2.0,
        py::arg("sigma1") = 1.0);
  m.def("pmin_exact", &pmin_exact, py::arg("x"), py::arg("n"));
  m.def("tw_rescale", &tw_rescale, py::arg("lambda1"), py::arg("big_n"), py::arg("a"));
  m.def("airy_ai", py::vectorize(&airy_ai));
  m.def("airy_ai_prime", py::vectorize(&airy_ai_prime));

  py::class_<TWGrid>(m, "TWGrid")
      .def(py::init<int, double>(), py::arg("order") = 64, py::arg("map_scale") = 10.0)
      .def_property_readonly("order", &TWGrid::order);
  m.def("tw2_cdf", &tw2_cdf, py::arg("s"), py::arg("grid"));
  m.def("tw2_pdf", &tw2_pdf, py::arg("s"), py::arg("grid"));
  m.def("tw2_moments", [](const TWGrid& g) {
    const TWMoments mo = tw2_moments(g);
    return py::make_tuple(mo.mean, mo.variance);
  });

  m.def("ks_one_sample",
        [](const std::vector<double>& xs, const std::function<double(double)>& cdf,
           double alpha) { return ks_dict(ks_one_sample(as_sample(xs), cdf, alpha)); },
        py::arg("sample"), py::arg("cdf"), py::arg("alpha") = 0.01);
  m.def("ks_two_sample",
        [](const std::vector<double>& a, const std::vector<double>& b, double alpha) {
          return ks_dict(ks_two_sample(as_sample(a), as_sample(b), alpha));
        },
        py::arg("a"), py::arg("b"), py::arg("alpha") = 0.01);
  m.def("moments", [](const std::vector<double>& xs) {
    const Moments mo = moments(as_sample(xs));
    return py::make_tuple(mo.mean, mo.variance, mo.skewness);
  });
  m.def("histogram", [](const std::vector<double>& xs, int bins) {
    const Histogram h = make_histogram(as_sample(xs), bins);
    return py::make_tuple(h.edges, h.density, h.count);
  }, py::arg("sample"), py::arg("bins") = 0);
}
