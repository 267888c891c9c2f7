#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "incgauss/distlab.hpp"
#include "incgauss/expsums.hpp"
#include "incgauss/gauss.hpp"

namespace py = pybind11;
using namespace incgauss;

namespace {

LimitVariant parse_variant(const std::string& name) {
  if (name == "plus" || name == "G_plus") return LimitVariant::GPlus;
  if (name == "full" || name == "G_full" || name == "G") return LimitVariant::GFull;
  if (name == "minus" || name == "G_minus") return LimitVariant::GMinus;
  throw DomainError(ErrorCode::InvalidArgument, "variant must be plus, full or minus");
}

py::array_t<std::complex<double>> to_array(const std::vector<cplx>& v) {
  py::array_t<std::complex<double>> a(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), a.mutable_data());
  return a;
}

}  // namespace

PYBIND11_MODULE(_incgauss, m) {
  m.doc() = "Incomplete Gauss sums, exponential sums and their limit laws";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("jacobi", &jacobi, py::arg("a"), py::arg("b"));
  m.def("mod_inverse", &mod_inverse, py::arg("a"), py::arg("m"));
  m.def("epsilon", &epsilon, py::arg("n"));
  m.def("find_nonresidue_witness", &find_nonresidue_witness, py::arg("q"), py::arg("max_attempts") = 1000000);
  m.def(
      "analyze_modulus",
      [](i64 q) {
        const auto mod = analyze_modulus(q);
        py::dict d;
        std::vector<std::pair<i64, int>> f;
        for (const auto& pp : mod.factorization) f.emplace_back(pp.prime, pp.exponent);
        d["q"] = mod.q;
        d["factorization"] = f;
        d["phi"] = mod.phi;
        d["tau"] = mod.tau;
        d["q_mod4"] = mod.q_mod4;
        d["is_square"] = mod.is_square;
        return d;
      },
      py::arg("q"));

  py::class_<WeightFunction>(m, "Weight")
      .def_static("constant", &WeightFunction::constant, py::arg("value") = cplx(1.0))
      .def_static("fourier", &WeightFunction::fourier, py::arg("coefficients"))
      .def_static("indicator", &WeightFunction::indicator, py::arg("left"), py::arg("right"), py::arg("cutoff"))
      .def("coefficient", &WeightFunction::coefficient, py::arg("k"))
      .def("evaluate", &WeightFunction::evaluate, py::arg("x"))
      .def_property_readonly("coefficients", &WeightFunction::coefficients)
      .def_property_readonly("cutoff", &WeightFunction::cutoff)
      .def_property_readonly("is_indicator",
                             [](const WeightFunction& w) { return w.kind() == WeightKind::IntervalIndicator; });

  m.def("gauss_sum_direct", &gauss_sum_direct, py::arg("weight"), py::arg("p"), py::arg("q"));
  m.def("gauss_sum_closed", &gauss_sum_closed, py::arg("p"), py::arg("q"));
  m.def("gauss_sum_fast", &gauss_sum_fast, py::arg("weight"), py::arg("p"), py::arg("q"));
  m.def(
      "sigma_class", [](i64 p, i64 q) { return sigma_class(p, q).label(); }, py::arg("p"), py::arg("q"));
  m.def(
      "limit_series",
      [](const std::string& variant, const WeightFunction& w, double x, i64 cutoff) {
        return limit_series(parse_variant(variant), w, x, cutoff);
      },
      py::arg("variant"), py::arg("weight"), py::arg("x"), py::arg("cutoff") = kNoCutoff);
  m.def(
      "sample_limit_law",
      [](const std::string& variant, const WeightFunction& w, i64 cutoff, std::size_t n, std::uint64_t seed,
         unsigned threads) {
        std::vector<cplx> v;
        {
          py::gil_scoped_release release;
          v = sample_limit_law(parse_variant(variant), w, cutoff, n, seed, threads);
        }
        return to_array(v);
      },
      py::arg("variant"), py::arg("weight"), py::arg("cutoff"), py::arg("n_samples"), py::arg("seed"),
      py::arg("threads") = 0);
  m.def(
      "limit_moment",
      [](const std::string& variant, const WeightFunction& w, double k, i64 grid, i64 cutoff) {
        return limit_moment(parse_variant(variant), w, k, grid, cutoff);
      },
      py::arg("variant"), py::arg("weight"), py::arg("k"), py::arg("grid_size") = kDefaultMomentGrid,
      py::arg("cutoff") = kNoCutoff);
  m.def(
      "empirical_batch",
      [](i64 q, const WeightFunction& w, bool fast, unsigned threads) {
        EmpiricalBatch b = [&] {
          py::gil_scoped_release release;
          return empirical_batch(q, w, DomainWindow::full(), {fast, threads});
        }();
        std::vector<i64> ps;
        std::vector<std::string> labels;
        std::vector<cplx> values;
        for (const auto& s : b.samples) {
          ps.push_back(s.p);
          labels.push_back(s.sigma.label());
          values.push_back(s.value);
        }
        py::dict d;
        d["p"] = ps;
        d["sigma"] = labels;
        d["values"] = to_array(values);
        d["normalization"] = to_string(b.normalization);
        return d;
      },
      py::arg("q"), py::arg("weight"), py::arg("fast") = false, py::arg("threads") = 0);
  m.def("ks_distance", &ks_distance, py::arg("a"), py::arg("b"));
  m.def(
      "discrete_factor_counts",
      [](i64 q) {
        py::dict d;
        for (const auto& [z, c] : discrete_factor_counts(q).counts)
          d[py::cast(cplx(z.re, z.im))] = c;
        return d;
      },
      py::arg("q"));

  m.def("kloosterman", &kloosterman, py::arg("m"), py::arg("n"), py::arg("q"));
  m.def("twisted_kloosterman", &twisted_kloosterman, py::arg("m"), py::arg("n"), py::arg("q"));
  m.def("salie", &salie, py::arg("m"), py::arg("n"), py::arg("q"));
  m.def("weil_bound", &weil_bound, py::arg("m"), py::arg("n"), py::arg("q"));
  m.def(
      "class_counts",
      [](i64 q) {
        py::dict d;
        for (const auto& [c, count] : class_counts(analyze_modulus(q)))
          d[py::str(to_string(c.kind) + ":" + c.label())] = count;
        return d;
      },
      py::arg("q"));
}
