#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewx/analysis.hpp"
#include "skewx/io.hpp"
#include "skewx/oracle.hpp"
#include "skewx/series.hpp"
#include "skewx/transforms.hpp"

namespace py = pybind11;
using namespace skewx;

namespace {

// shared_ptr<const Extension> travels inside a small value wrapper
struct PyExt {
    Ext ext;
};

PyExt load_spec_file(const std::string& path, uint64_t seed) {
    LoadOptions opts;
    opts.validation_seed = seed;
    return PyExt{load_ring_spec_file(path, opts)};
}

PyExt load_spec_text(const std::string& text, uint64_t seed) {
    LoadOptions opts;
    opts.validation_seed = seed;
    return PyExt{load_ring_spec_text(text, opts)};
}

py::list poly_terms(const SkewPoly& p) {
    py::list out;
    for (const auto& [w, c] : p.terms()) out.append(py::make_tuple(w.str(), c.str()));
    return out;
}

py::dict mega_to_dict(const MegaVerdict& v) {
    py::dict d;
    if (v.witness) {
        d["verdict"] = "witness";
        d["a"] = v.witness->a.str();
        d["r"] = v.witness->r;
        py::list b;
        for (const auto& e : v.witness->b) b.append(e.str());
        d["b"] = b;
    } else {
        d["verdict"] = "none";
        d["rmax"] = v.r_max;
        d["samples"] = v.sample_desc;
    }
    return d;
}

py::dict prime_to_dict(const PrimeVerdict& v) {
    py::dict d;
    switch (v.kind) {
        case PrimeVerdict::Kind::Certified: d["verdict"] = "certified"; break;
        case PrimeVerdict::Kind::NotPrime:
            d["verdict"] = "not_prime";
            d["a"] = v.pair->first.str();
            d["b"] = v.pair->second.str();
            break;
        case PrimeVerdict::Kind::Inconclusive: d["verdict"] = "inconclusive"; break;
    }
    d["detail"] = v.detail;
    return d;
}

py::dict basis_change_to_dict(const BasisChange& bc) {
    py::dict d;
    py::list fw, bw;
    for (const auto& p : bc.forward) fw.append(p.str());
    for (const auto& p : bc.backward) bw.append(p.str());
    d["forward"] = fw;
    d["backward"] = bw;
    d["target"] = PyExt{bc.target};
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "free skew extensions R<x1..xn; sigma, delta>: exact normal-form "
              "arithmetic, structural probes, truncated series and transforms";

    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<SpecError>(m, "SpecError");
    py::register_exception<ParseError>(m, "ExprParseError");

    py::class_<SkewPoly>(m, "SkewPoly")
        .def("__add__", [](const SkewPoly& a, const SkewPoly& b) { return a + b; })
        .def("__sub__", [](const SkewPoly& a, const SkewPoly& b) { return a - b; })
        .def("__mul__", [](const SkewPoly& a, const SkewPoly& b) { return a * b; })
        .def("__neg__", [](const SkewPoly& a) { return -a; })
        .def("__pow__", [](const SkewPoly& a, uint64_t e) { return a.pow(e); })
        .def("__eq__", [](const SkewPoly& a, const SkewPoly& b) { return a == b; })
        .def("__str__", &SkewPoly::str)
        .def("__repr__", [](const SkewPoly& p) { return "SkewPoly(" + p.str() + ")"; })
        .def_property_readonly("is_zero", &SkewPoly::is_zero)
        .def_property_readonly("deg",
                               [](const SkewPoly& p) -> py::object {
                                   auto d = p.deg();
                                   if (!d) return py::none();
                                   return py::int_(*d);
                               })
        .def("ord", [](const SkewPoly& p) { return p.ord(); })
        .def("leading",
             [](const SkewPoly& p) {
                 auto [w, c] = p.leading();
                 return py::make_tuple(w.str(), c.str());
             })
        .def("terms", &poly_terms);

    py::class_<PyExt>(m, "Extension")
        .def_property_readonly("n", [](const PyExt& e) { return e.ext->n; })
        .def_property_readonly("ring",
                               [](const PyExt& e) { return ring_name(e.ext->ring); })
        .def("__repr__",
             [](const PyExt& e) {
                 return "Extension(" + ring_name(e.ext->ring) +
                        ", n=" + std::to_string(e.ext->n) + ")";
             })
        .def("parse", [](const PyExt& e, const std::string& s) {
            return parse_skew_poly(e.ext, s);
        })
        .def("zero", [](const PyExt& e) { return SkewPoly::zero(e.ext); })
        .def("one", [](const PyExt& e) { return SkewPoly::one(e.ext); })
        .def("generator",
             [](const PyExt& e, unsigned j) { return SkewPoly::generator(e.ext, j); })
        .def("constant", [](const PyExt& e, const std::string& lit) {
            return SkewPoly::constant(e.ext, parse_ring_literal(e.ext->ring, lit));
        });

    m.def("load_ring_spec", &load_spec_file, py::arg("path"), py::arg("seed") = 0,
          "load and validate a ring-spec JSON file");
    m.def("load_ring_spec_text", &load_spec_text, py::arg("text"), py::arg("seed") = 0);

    m.def("oracle_mul", &oracle_mul, py::arg("f"), py::arg("g"),
          "independent operator-model multiplication (cross-check for *)");

    m.def(
        "probe_megainjective",
        [](const PyExt& e, unsigned rmax, uint64_t seed) {
            Rng rng(seed);
            return mega_to_dict(megainjective_probe(e.ext, rmax, {}, rng));
        },
        py::arg("ext"), py::arg("rmax") = 3, py::arg("seed") = 0);

    m.def(
        "probe_prime",
        [](const PyExt& e, size_t degree_bound, uint64_t seed) {
            Rng rng(seed);
            return prime_to_dict(prime_probe(e.ext, degree_bound, {}, rng));
        },
        py::arg("ext"), py::arg("degree_bound") = 4, py::arg("seed") = 0);

    m.def(
        "series_mul",
        [](const PyExt& e, const std::string& f, const std::string& g, size_t q) {
            SkewPoly fp = parse_skew_poly(e.ext, f);
            SkewPoly gp = parse_skew_poly(e.ext, g);
            TruncSeries fs = series_from_poly(fp, std::max(q, fp.deg().value_or(0)));
            size_t st = q;
            for (const auto& [v, b] : fs.terms) {
                if (v.length() > q) continue;
                auto nq = nq_bound(e.ext, b, q);
                if (!nq) throw UnknownNilpotence();
                st = std::max(st, *nq);
            }
            TruncSeries gs = series_from_poly(gp, std::max(st, gp.deg().value_or(0)));
            TruncSeries prod = series_mul_trunc(fs, gs, q);
            py::dict d;
            d["trunc"] = prod.trunc;
            d["terms"] = poly_terms(SkewPoly::from_terms(prod.ext, TermMap(prod.terms)));
            return d;
        },
        py::arg("ext"), py::arg("f"), py::arg("g"), py::arg("trunc"),
        "truncated series product of two polynomial inputs");

    m.def(
        "kill_delta",
        [](const PyExt& e, const std::string& c) {
            return basis_change_to_dict(kill_delta(e.ext, parse_ring_literal(e.ext->ring, c)));
        },
        py::arg("ext"), py::arg("c"));

    m.def(
        "scalarize_sigma",
        [](const PyExt& e, const std::vector<std::string>& cs) {
            std::vector<RingElem> parsed;
            for (const auto& s : cs) parsed.push_back(parse_ring_literal(e.ext->ring, s));
            return basis_change_to_dict(scalarize_sigma(e.ext, parsed));
        },
        py::arg("ext"), py::arg("cs"));

    m.def(
        "eval_hom",
        [](const PyExt& e, const std::vector<std::string>& targets, const std::string& f) {
            std::vector<EvalTarget> ts;
            for (const auto& s : targets) ts.emplace_back(parse_skew_poly(e.ext, s));
            return render_eval_target(eval_hom(e.ext, ts, parse_skew_poly(e.ext, f)));
        },
        py::arg("ext"), py::arg("targets"), py::arg("expr"),
        "evaluate the unique R-ring homomorphism sending x_i to targets[i]");

    m.def(
        "unit_probe",
        [](const PyExt& e, const std::string& f, size_t degree_bound) {
            UnitProbeResult r = unit_probe(e.ext, parse_skew_poly(e.ext, f), degree_bound);
            py::dict d;
            switch (r.kind) {
                case UnitProbeResult::Kind::Unit:
                    d["verdict"] = "unit";
                    d["inverse"] = r.inverse->str();
                    break;
                case UnitProbeResult::Kind::NotUnit: d["verdict"] = "not_unit"; break;
                case UnitProbeResult::Kind::NotUnitCertified:
                    d["verdict"] = "not_unit_certified";
                    break;
            }
            d["detail"] = r.detail;
            return d;
        },
        py::arg("ext"), py::arg("expr"), py::arg("degree_bound") = 3);

    m.def(
        "check_laws",
        [](const PyExt& e, uint64_t seed, size_t budget) {
            Rng rng(seed);
            ValidationReport hom = validate_hom(*e.ext->sigma, rng, budget);
            ValidationReport lei = validate_leibniz(*e.ext->delta, rng, budget);
            py::dict d;
            d["sigma_hom"] = hom.passed;
            d["delta_leibniz"] = lei.passed;
            d["samples"] = hom.samples + lei.samples;
            return d;
        },
        py::arg("ext"), py::arg("seed") = 0, py::arg("budget") = 64);

#ifdef SKEWX_VERSION
    m.attr("__version__") = SKEWX_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
