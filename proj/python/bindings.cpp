#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "quarklet/bspline.hpp"
#include "quarklet/cascade.hpp"
#include "quarklet/coefficients.hpp"
#include "quarklet/corpus.hpp"
#include "quarklet/normest.hpp"
#include "quarklet/regions.hpp"
#include "quarklet/seqspace.hpp"
#include "quarklet/transform.hpp"

namespace py = pybind11;
using namespace quarklet;

namespace {

using CoeffList = std::vector<std::tuple<int, int, long long, double>>;

CoefficientSet coeffs_from_list(const CoeffList& entries, int m, int mtilde) {
    CoefficientSet c;
    c.meta.m = m;
    c.meta.mtilde = mtilde;
    for (const auto& [p, j, k, v] : entries) {
        c.set({p, j, k}, v);
        if (j > c.meta.max_level) c.meta.max_level = j;
    }
    return c;
}

CoeffList coeffs_to_list(const CoefficientSet& c) {
    CoeffList out;
    out.reserve(c.size());
    for (const auto& [idx, v] : c.entries) out.emplace_back(idx.p, idx.j, idx.k, v);
    return out;
}

SpaceParams make_params(double s, double r, double q, int m, std::optional<double> u) {
    SpaceParams sp{s, r, q, m, u};
    sp.validate();
    return sp;
}

py::dict verdict_to_dict(const RegionVerdict& v) {
    py::dict out;
    out["region"] = region_name(v.region);
    out["admissible"] = v.admissible();
    py::list checks;
    for (const auto& c : v.checks) {
        py::dict e;
        e["inequality"] = c.text;
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        e["strict"] = c.strict;
        e["satisfied"] = c.ok;
        checks.append(e);
    }
    out["checks"] = checks;
    return out;
}

}  // namespace

PYBIND11_MODULE(_quarklet, mod) {
    mod.doc() = "Biorthogonal B-spline quarklets, sequence-space quasi-norms and norm estimators";

    // splines
    mod.def("eval_bspline", &eval_bspline, py::arg("m"), py::arg("x"));
    mod.def("eval_bspline_recursive", &eval_bspline_recursive, py::arg("m"), py::arg("x"));
    mod.def("eval_bspline_derivative", &eval_bspline_derivative, py::arg("m"), py::arg("n"), py::arg("x"));
    mod.def("eval_symmetrized", &eval_symmetrized, py::arg("m"), py::arg("x"));
    mod.def(
        "eval_quark", [](int m, int p, double x) { return eval_quark({m, p}, x); }, py::arg("m"), py::arg("p"),
        py::arg("x"));
    mod.def("refinement_mask", &refinement_mask, py::arg("m"));

    // filters and quarklets
    py::class_<Mask>(mod, "Mask")
        .def_readonly("offset", &Mask::offset)
        .def_readonly("coefficients", &Mask::c)
        .def("sum", &Mask::sum);
    py::class_<FilterPair>(mod, "FilterPair")
        .def_readonly("m", &FilterPair::m)
        .def_readonly("mtilde", &FilterPair::mtilde)
        .def_readonly("a", &FilterPair::a)
        .def_readonly("atilde", &FilterPair::atilde)
        .def_readonly("b", &FilterPair::b)
        .def_readonly("btilde", &FilterPair::btilde)
        .def("table", [](const FilterPair& fp) {
            std::ostringstream os;
            write_filter_table(os, fp);
            return os.str();
        });
    mod.def("cdf_filters", &cdf_filters, py::arg("m"), py::arg("mtilde"));
    mod.def("discrete_biorthogonality_residual", &discrete_biorthogonality_residual);
    mod.def("eval_quarklet", &eval_quarklet, py::arg("filters"), py::arg("p"), py::arg("x"));
    mod.def(
        "eval_quarklet_scaled",
        [](const FilterPair& fp, int p, int j, long long k, double x) {
            return eval_quarklet_scaled(fp, {p, j, k}, x);
        },
        py::arg("filters"), py::arg("p"), py::arg("j"), py::arg("k"), py::arg("x"));
    mod.def(
        "support_of",
        [](const FilterPair& fp, int p, int j, long long k) {
            Interval s = support_of(fp, {p, j, k});
            return std::pair<double, double>{s.lo, s.hi};
        },
        py::arg("filters"), py::arg("p"), py::arg("j"), py::arg("k"));

    // dual cascade
    py::class_<DualBasis>(mod, "DualBasis")
        .def(py::init<const FilterPair&, int>(), py::arg("filters"), py::arg("depth"))
        .def_property_readonly("depth", &DualBasis::depth)
        .def("eval_generator", &DualBasis::eval_generator, py::arg("x"))
        .def("eval_wavelet", &DualBasis::eval_wavelet, py::arg("x"))
        .def("eval_scaled", &DualBasis::eval_scaled, py::arg("j"), py::arg("k"), py::arg("x"));

    // grid functions and transforms
    py::enum_<Interp>(mod, "Interp")
        .value("linear", Interp::linear)
        .value("left_constant", Interp::left_constant);
    py::class_<GridFunction>(mod, "GridFunction")
        .def_static(
            "sampled",
            [](const std::function<double(double)>& f, int lo, int hi, int level, Interp interp) {
                return GridFunction::sampled(f, {lo, hi}, level, interp);
            },
            py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("level"), py::arg("interp") = Interp::linear)
        .def_static(
            "from_samples",
            [](int lo, int hi, int level, std::vector<double> samples, Interp interp) {
                return GridFunction({lo, hi}, level, std::move(samples), interp);
            },
            py::arg("lo"), py::arg("hi"), py::arg("level"), py::arg("samples"), py::arg("interp") = Interp::linear)
        .def_property_readonly("level", &GridFunction::level)
        .def_property_readonly("window",
                               [](const GridFunction& g) {
                                   return std::pair<int, int>{g.window().lo, g.window().hi};
                               })
        .def_property_readonly("samples", [](const GridFunction& g) { return g.samples(); })
        .def("__call__", &GridFunction::eval, py::arg("x"));

    mod.def(
        "analyze",
        [](const GridFunction& f, const DualBasis& dual, int max_level) {
            return coeffs_to_list(analyze(f, dual, max_level));
        },
        py::arg("f"), py::arg("dual"), py::arg("max_level"));
    mod.def(
        "synthesize",
        [](const CoeffList& coeffs, const FilterPair& fp, int lo, int hi, int level) {
            return synthesize(coeffs_from_list(coeffs, fp.m, fp.mtilde), fp, {lo, hi}, level);
        },
        py::arg("coeffs"), py::arg("filters"), py::arg("lo"), py::arg("hi"), py::arg("level"));
    mod.def("roundtrip_error", &roundtrip_error, py::arg("f"), py::arg("filters"), py::arg("dual"),
            py::arg("max_level"));

    // sequence-space norms
    mod.def(
        "seqnorm",
        [](double s, double r, double q, int m, const CoeffList& coeffs) {
            return seqnorm(make_params(s, r, q, m, std::nullopt), coeffs_from_list(coeffs, m, m));
        },
        py::arg("s"), py::arg("r"), py::arg("q"), py::arg("m"), py::arg("coeffs"));
    mod.def(
        "seqnorm_morrey",
        [](double s, double u, double r, double q, int m, const CoeffList& coeffs) {
            return seqnorm_morrey(make_params(s, r, q, m, u), coeffs_from_list(coeffs, m, m));
        },
        py::arg("s"), py::arg("u"), py::arg("r"), py::arg("q"), py::arg("m"), py::arg("coeffs"));
    mod.def(
        "duality_pair",
        [](double s, double r, double q, int m, const CoeffList& g, const CoeffList& c) {
            DualityResult res = duality_pair(coeffs_from_list(g, m, m), coeffs_from_list(c, m, m),
                                             make_params(s, r, q, m, std::nullopt));
            return std::pair<double, double>{res.pairing, res.bound};
        },
        py::arg("s"), py::arg("r"), py::arg("q"), py::arg("m"), py::arg("g"), py::arg("c"));
    mod.def(
        "calderon_split",
        [](const CoeffList& coeffs, double s0, double r0, double q0, double s1, double r1, double q1, int m,
           double theta) {
            CalderonSplit split =
                calderon_split(coeffs_from_list(coeffs, m, m), make_params(s0, r0, q0, m, std::nullopt),
                               make_params(s1, r1, q1, m, std::nullopt), theta);
            py::dict out;
            out["alpha"] = coeffs_to_list(split.alpha);
            out["beta"] = coeffs_to_list(split.beta);
            out["max_factorization_residual"] = split.max_factorization_residual;
            out["alpha_constant"] = split.alpha_constant;
            out["beta_constant"] = split.beta_constant;
            out["gamma"] = split.gamma;
            out["delta"] = split.delta;
            out["u"] = split.u;
            out["v"] = split.v;
            return out;
        },
        py::arg("coeffs"), py::arg("s0"), py::arg("r0"), py::arg("q0"), py::arg("s1"), py::arg("r1"), py::arg("q1"),
        py::arg("m"), py::arg("theta"));

    // function-side norms
    mod.def("lr_norm", &lr_norm, py::arg("f"), py::arg("r"));
    mod.def("morrey_norm", &morrey_norm, py::arg("f"), py::arg("u"), py::arg("r"));
    mod.def(
        "difference_norm",
        [](const GridFunction& f, double s, double r, double q, int m, int order, double w, int i_max) {
            DifferenceNormConfig cfg;
            cfg.order = order;
            cfg.w = w;
            cfg.i_max = i_max;
            return difference_norm(f, make_params(s, r, q, m, std::nullopt), cfg);
        },
        py::arg("f"), py::arg("s"), py::arg("r"), py::arg("q"), py::arg("m") = 2, py::arg("order") = 0,
        py::arg("w") = 0.0, py::arg("i_max") = -1);
    mod.def(
        "besov_coeff_norm",
        [](const CoeffList& coeffs, double s, double r, int m) {
            return besov_coeff_norm(coeffs_from_list(coeffs, m, m), s, r);
        },
        py::arg("coeffs"), py::arg("s"), py::arg("r"), py::arg("m"));

    // regions
    mod.def(
        "classify", [](double s, double r, double q, int m) { return verdict_to_dict(classify(s, r, q, m)); },
        py::arg("s"), py::arg("r"), py::arg("q"), py::arg("m"));
    mod.def(
        "classify_exact",
        [](const std::string& s, const std::string& r, const std::string& q, int m) {
            return verdict_to_dict(classify(Rational::parse(s), Rational::parse(r), Rational::parse(q), m));
        },
        py::arg("s"), py::arg("r"), py::arg("q"), py::arg("m"));
    mod.def(
        "morrey_admissible",
        [](double s, double u, double r, double q, int m) { return morrey_admissible(s, u, r, q, m).admissible; },
        py::arg("s"), py::arg("u"), py::arg("r"), py::arg("q"), py::arg("m"));
    mod.def("spline_membership", &spline_membership, py::arg("s"), py::arg("r"), py::arg("m"));
    mod.def("sigma_r", &sigma_r, py::arg("r"));
    mod.def("sigma_rq", &sigma_rq, py::arg("r"), py::arg("q"));

    // corpus
    mod.def(
        "test_function",
        [](const std::string& spec, const FilterPair& fp) {
            return std::function<double(double)>(make_test_function(spec, fp));
        },
        py::arg("spec"), py::arg("filters"));
    mod.def("builtin_corpus", &builtin_corpus);
}
