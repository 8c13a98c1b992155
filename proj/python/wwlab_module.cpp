#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wwlab/diagnostics.hpp"
#include "wwlab/scenarios.hpp"
#include "wwlab/twisted.hpp"
#include "wwlab/weights.hpp"

namespace py = pybind11;
using namespace wwlab;

namespace {

Fix128 fix_from_ratio(long long num, long long den) {
    return Fix128::from_ratio(BigInt(num), BigInt(den));
}

OrbitSeq orbit_from_scalars(const std::vector<cplx>& values) {
    return OrbitSeq::from_scalars(values, ExactModel::Float64, "python");
}

// opaque holder so the variant is not auto-converted to a Python Union
struct PyOperator {
    OperatorSpec op;
};

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

PYBIND11_MODULE(wwlab, m) {
    m.doc() = "numerical experiments on twisted and adversarially weighted ergodic averages";

    py::register_exception<contract_error>(m, "ContractError", PyExc_ValueError);
    py::register_exception<wwlab::range_error>(m, "RangeError", PyExc_IndexError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<Fix128>(m, "Fix128", "fraction in [0,1) with 128 fixed-point bits")
        .def_static("from_ratio", &fix_from_ratio, py::arg("num"), py::arg("den"))
        .def_static("sqrt2_minus_1", &Fix128::sqrt2_minus_1)
        .def_static("from_double", &Fix128::from_double)
        .def("__float__", &Fix128::to_double)
        .def("__repr__", [](const Fix128& x) { return "Fix128(" + x.to_hex() + ")"; })
        .def("__add__", [](Fix128 a, Fix128 b) { return a + b; })
        .def("__eq__", [](Fix128 a, Fix128 b) { return a == b; });

    py::class_<Observable>(m, "Observable")
        .def_static("harmonic", &Observable::harmonic, py::arg("freq"),
                    py::arg("coeff") = cplx(1.0, 0.0))
        .def_static("random_trig", &Observable::random_trig, py::arg("dim"), py::arg("degree"),
                    py::arg("seed"), py::arg("mean_zero"))
        .def_static("indicator", &Observable::indicator, py::arg("lo"), py::arg("hi"))
        .def("eval", [](const Observable& f, Fix128 x) { return f.eval(x).coords; })
        .def_property_readonly("dim", &Observable::dim)
        .def_property_readonly("mean_zero", &Observable::mean_zero)
        .def("norm_integral", &Observable::norm_integral,
             py::arg("samples") = std::size_t(1) << 16);

    py::class_<OrbitSeq>(m, "OrbitSeq")
        .def_static("from_scalars", &orbit_from_scalars, py::arg("values"))
        .def("__len__", &OrbitSeq::size)
        .def_property_readonly("dim", &OrbitSeq::dim)
        .def("value", [](const OrbitSeq& s, std::size_t n) { return s.value(n).coords; },
             py::arg("n"), "1-based orbit value as a list of complex coordinates")
        .def("value_norm", &OrbitSeq::value_norm, py::arg("n"))
        .def("scaled", &OrbitSeq::scaled)
        .def("modulated", &OrbitSeq::modulated)
        .def_property_readonly("model", [](const OrbitSeq& s) {
            return std::string(to_string(s.model()));
        });

    m.def("cesaro_norm", &cesaro_norm, py::arg("seq"), py::arg("n"));
    m.def("dist_to_bounded", &dist_to_bounded, py::arg("seq"), py::arg("m"), py::arg("n"));
    m.def("max_partial_sum", [](const OrbitSeq& s) { return partial_sums(s).maxnorm; });

    m.def("rotation_orbit", &rotation_orbit, py::arg("x0"), py::arg("alpha"), py::arg("f"),
          py::arg("n"));
    m.def(
        "doubling_orbit",
        [](std::uint64_t seed, const Observable& f, std::size_t n, int precision_bits) {
            return doubling_orbit(BernoulliState{BitStream::seeded(seed)}, f, n, precision_bits);
        },
        py::arg("seed"), py::arg("f"), py::arg("n"), py::arg("precision_bits") = 128);

    // Operator constructors mirroring the scenario configs.
    py::class_<PyOperator>(m, "Operator")
        .def("__repr__", [](const PyOperator& op) {
            return std::string("Operator(") + variant_name(op.op) + ")";
        });
    m.def("op_koopman_rotation",
          [](Fix128 alpha) { return PyOperator{Koopman{MapSpec::rotation(alpha)}}; });
    m.def("op_koopman_doubling", [] { return PyOperator{Koopman{MapSpec::doubling()}}; });
    m.def("op_mult_harmonic", [](long long freq, cplx scale) {
        return PyOperator{MultOp{Multiplier::harmonic(freq, scale)}};
    }, py::arg("freq") = 1, py::arg("scale") = cplx(1.0, 0.0));
    m.def("op_mult_koopman_harmonic", [](long long freq, cplx scale, Fix128 alpha) {
        return PyOperator{MultKoopman{Multiplier::harmonic(freq, scale), MapSpec::rotation(alpha)}};
    });
    m.def("op_twisted_u", [](Fix128 alpha) { return PyOperator{TwistedU{alpha}}; });
    m.def("op_noncontractive", [](Fix128 alpha) { return PyOperator{NonContractiveS{alpha}}; });

    m.def(
        "orbit_values",
        [](const PyOperator& op, const Observable& f, Fix128 x, std::size_t n) {
            return orbit_values(op.op, f, PointState::at(x), n);
        },
        py::arg("op"), py::arg("f"), py::arg("x"), py::arg("n"));

    py::class_<CertifiedSup>(m, "CertifiedSup")
        .def_readonly("grid_max", &CertifiedSup::grid_max)
        .def_readonly("grid_argmax", &CertifiedSup::grid_argmax)
        .def_readonly("certified_upper", &CertifiedSup::certified_upper)
        .def_readonly("grid_size", &CertifiedSup::grid_size)
        .def_readonly("degree", &CertifiedSup::degree)
        .def("__repr__", [](const CertifiedSup& c) {
            return "CertifiedSup(lower=" + format_double(c.grid_max) +
                   ", upper=" + format_double(c.certified_upper) + ")";
        });

    m.def(
        "twisted_average",
        [](const OrbitSeq& v, cplx lambda, std::size_t n) {
            return twisted_average(v, lambda, n).coords;
        },
        py::arg("v"), py::arg("lam"), py::arg("n"));
    m.def(
        "sup_over_circle",
        [](const OrbitSeq& v, std::size_t n, std::size_t grid, bool refine) {
            SupOptions opt;
            opt.grid_size = grid;
            opt.refine = refine;
            return sup_over_circle(v, n, opt);
        },
        py::arg("v"), py::arg("n"), py::arg("grid") = 0, py::arg("refine") = false);

    py::class_<Membership>(m, "Membership")
        .def_readonly("ok", &Membership::ok)
        .def_readonly("variation", &Membership::variation)
        .def_readonly("lam", &Membership::lambda)
        .def_readonly("slack", &Membership::slack)
        .def_readonly("certified", &Membership::certified);
    m.def(
        "check_I",
        [](const std::vector<cplx>& c, double delta) {
            return check_I(WeightSeq{c}, delta);
        },
        py::arg("c"), py::arg("delta"));
    m.def(
        "check_C",
        [](const std::vector<cplx>& c, double delta, std::size_t grid) {
            return check_C(WeightSeq{c}, delta, grid);
        },
        py::arg("c"), py::arg("delta"), py::arg("grid") = 0);

    py::enum_<WeightClass>(m, "WeightClass")
        .value("I", WeightClass::I)
        .value("C", WeightClass::C);
    m.def("abel_upper_bound", &abel_upper_bound, py::arg("v"), py::arg("n"), py::arg("delta"),
          py::arg("cls") = WeightClass::I);

    py::class_<WitnessResult>(m, "WitnessResult")
        .def_readonly("value", &WitnessResult::value)
        .def_readonly("lam", &WitnessResult::lambda)
        .def_readonly("boundaries", &WitnessResult::boundaries)
        .def_property_readonly("weight", [](const WitnessResult& w) { return w.weight.c; });
    m.def("witness_search", &witness_search, py::arg("v"), py::arg("n"), py::arg("delta"),
          py::arg("cls"), py::arg("blocks"));

    py::class_<BruteForceResult>(m, "BruteForceResult")
        .def_readonly("value", &BruteForceResult::value)
        .def_readonly("nodes", &BruteForceResult::nodes)
        .def_property_readonly("weight", [](const BruteForceResult& b) { return b.argmax.c; });
    m.def("brute_force_small", &brute_force_small, py::arg("v"), py::arg("n"), py::arg("delta"),
          py::arg("cls"), py::arg("q"), py::arg("node_budget") = 100000000ULL);

    py::enum_<DyadicVariant>(m, "DyadicVariant")
        .value("T", DyadicVariant::T)
        .value("S", DyadicVariant::S);
    m.def(
        "dyadic_mean_ergodicity",
        [](DyadicVariant v, std::size_t m_max) {
            py::list rows;
            for (const auto& r : dyadic_mean_ergodicity(v, m_max)) {
                py::dict d;
                d["m"] = r.m;
                d["N"] = r.N;
                d["count"] = r.count;
                d["average"] = rational_str(r.average);
                d["target"] = rational_str(r.target);
                d["average_float"] = double(r.average);
                rows.append(d);
            }
            return rows;
        },
        py::arg("variant"), py::arg("m_max"));
    m.def("index_sequence",
          [](DyadicVariant v, std::size_t n, std::size_t cap) {
              std::ostringstream os;
              os << index_sequence(v, n, cap);
              return os.str();
          },
          py::arg("variant"), py::arg("n"), py::arg("cap") = std::size_t(24));

    m.def(
        "mixing_profile",
        [](const PyOperator& op, const Observable& f, const Observable& g, std::size_t h_max) {
            MixingProfile p = mixing_profile(op.op, f, g, h_max);
            py::dict d;
            d["horizons"] = p.horizons;
            d["ergodic_avg"] = p.ergodic_avg;
            d["abs_avg"] = p.abs_avg;
            d["tail_sup"] = p.tail_sup;
            d["exact"] = p.exact;
            return d;
        },
        py::arg("op"), py::arg("f"), py::arg("g"), py::arg("h_max"));

    m.def("scenario_names", [] {
        std::vector<std::string> names;
        for (const auto& info : scenario_registry()) names.push_back(info.name);
        return names;
    });
}
