#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "pslat/chain.hpp"
#include "pslat/classify.hpp"
#include "pslat/dd.hpp"
#include "pslat/errors.hpp"
#include "pslat/lattice.hpp"

namespace py = pybind11;

namespace {

using namespace pslat;

py::int_ big_int(const Int& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list ray_to_py(const Ray& r) {
    py::list out;
    for (const auto& x : r) out.append(big_int(x));
    return out;
}

py::list vec_to_py(const Vec8& v) {
    py::list out;
    for (const auto& x : v) out.append(py::str(to_string(x)));
    return out;
}

// Accepts any sequence of 8 ints, strings, or Fraction-like objects whose
// str() is "p" or "p/q"; exactness is preserved end to end.
Vec8 vec_from_py(const py::handle& obj) {
    py::sequence seq = py::reinterpret_borrow<py::sequence>(obj);
    if (py::len(seq) != kDim) throw py::value_error("expected a sequence of 8 entries");
    Vec8 v;
    for (std::size_t i = 0; i < kDim; ++i)
        v[i] = parse_rational(py::str(seq[i]).cast<std::string>());
    return v;
}

std::array<Rat, 4> quad_from_py(const py::handle& obj) {
    py::sequence seq = py::reinterpret_borrow<py::sequence>(obj);
    if (py::len(seq) != 4) throw py::value_error("expected a sequence of 4 entries");
    std::array<Rat, 4> q;
    for (std::size_t i = 0; i < 4; ++i) q[i] = parse_rational(py::str(seq[i]).cast<std::string>());
    return q;
}

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            py::dict d;
            for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
            return d;
        }
        case nlohmann::json::value_t::array: {
            py::list l;
            for (const auto& value : j) l.append(json_to_py(value));
            return l;
        }
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        default:
            return py::none();
    }
}

Cone cone_from_rows(const py::handle& rows, bool as_generators) {
    std::vector<Vec8> vecs;
    for (const auto& row : py::reinterpret_borrow<py::sequence>(rows))
        vecs.push_back(vec_from_py(row));
    return as_generators ? Cone::from_generators(vecs) : Cone::from_inequalities(vecs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact polyhedral engine for the partial-separability lattice of "
              "three-qubit GHZ-diagonal states";
    m.attr("__version__") = "0.1.0";

    py::register_local_exception<SyntaxError>(m, "ExpressionSyntaxError", PyExc_ValueError);
    py::register_local_exception<ResourceExceededError>(m, "ResourceExceeded", PyExc_RuntimeError);
    py::register_local_exception<ZeroVectorError>(m, "ZeroVector", PyExc_ValueError);
    py::register_local_exception<NegativeEntryError>(m, "NegativeEntry", PyExc_ValueError);
    py::register_local_exception<NotGhzDiagonalError>(m, "NotGhzDiagonal", PyExc_ValueError);
    py::register_local_exception<NegativeIndexError>(m, "NegativeIndex", PyExc_ValueError);
    py::register_local_exception<ReplayError>(m, "ReplayFailure", PyExc_RuntimeError);

    py::class_<Cone>(m, "Cone")
        .def_static(
            "from_rays", [](const py::handle& rows) { return cone_from_rows(rows, true); },
            "conic hull of the given rays")
        .def_static(
            "from_facets", [](const py::handle& rows) { return cone_from_rows(rows, false); },
            "intersection of the half-spaces with the given inward normals")
        .def_static("from_json",
                    [](const std::string& text) { return Cone::from_json(nlohmann::json::parse(text)); })
        .def("converted", [](const Cone& c) { return dd_convert(c); },
             "same cone with both representations populated")
        .def("rays",
             [](const Cone& c) {
                 const Cone full = dd_convert(c);
                 py::list out;
                 for (const auto& r : full.generators()) out.append(ray_to_py(r));
                 return out;
             })
        .def("facets",
             [](const Cone& c) {
                 const Cone full = dd_convert(c);
                 py::list out;
                 for (const auto& n : full.facets()) out.append(ray_to_py(n));
                 return out;
             })
        .def("dim", &Cone::dim)
        .def("contains", [](const Cone& c, const py::handle& p) { return contains(c, vec_from_py(p)); })
        .def("member",
             [](const Cone& c, const py::handle& p) {
                 const Vec8 v = vec_from_py(p);
                 const Certificate cert = member(v, c);
                 py::dict out;
                 out["inside"] = is_inside(cert);
                 out["certificate"] = json_to_py(certificate_to_json(cert));
                 return out;
             })
        .def("to_json", [](const Cone& c) { return c.to_json().dump(); })
        .def("__eq__", [](const Cone& a, const Cone& b) { return cone_equal(a, b); })
        .def("__le__", [](const Cone& a, const Cone& b) { return subset(a, b); })
        .def("__or__", [](const Cone& a, const Cone& b) { return join(a, b); })
        .def("__and__", [](const Cone& a, const Cone& b) { return meet(a, b); })
        .def("dual", [](const Cone& c) { return dual(dd_convert(c)); });

    m.def("eval_expr",
          [](const std::string& text) { return eval(text, BaseCones::standard()); },
          py::arg("expression"),
          "evaluate a lattice expression over the base cones A, B, C");

    m.def("parse_expr",
          [](const std::string& text) { return to_string(parse(text)); },
          "parse and pretty-print a lattice expression");

    m.def("member",
          [](const py::handle& state, const std::string& expr) {
              const Vec8 p = vec_from_py(state);
              const Certificate cert = member(p, eval(expr, BaseCones::standard()));
              py::dict out;
              out["inside"] = is_inside(cert);
              out["certificate"] = json_to_py(certificate_to_json(cert));
              return out;
          },
          py::arg("state"), py::arg("expression"));

    m.def("pairing", [](const py::handle& p, const py::handle& q) {
        return to_string(pairing(vec_from_py(p), vec_from_py(q)));
    });

    m.def("normalize_ray",
          [](const py::handle& v) { return ray_to_py(normalize_ray(vec_from_py(v))); });

    m.def("rho", [](long n) { return vec_to_py(rho(n)); }, py::arg("n"));
    m.def("witness", [](long n) { return vec_to_py(witness(n)); }, py::arg("n"));
    m.def("chain_constant", [](long n) { return to_string(chain_constant(n)); }, py::arg("n"));
    m.def("rho_increments", [](long n) {
        const Increments inc = rho_increments(n);
        py::dict out;
        out["beta"] = vec_to_py(inc.beta);
        out["gamma"] = vec_to_py(inc.gamma);
        out["alpha"] = vec_to_py(inc.alpha);
        return out;
    });

    m.def("replay_state_induction",
          [](long n_max) { return json_to_py(replay_state_induction(n_max).to_json()); });
    m.def("replay_witness_induction",
          [](long n_max) { return json_to_py(replay_witness_induction(n_max).to_json()); });
    m.def("paper_verify",
          [](long n_max) {
              return json_to_py(merge_reports(replay_state_induction(n_max),
                                              replay_witness_induction(n_max))
                                    .to_json());
          },
          py::arg("n_max") = 100, "replay both inductions and return the certified report");

    m.def("verify_chain", [](long n_max) {
        py::list out;
        for (const auto& link : verify_chain_small(n_max)) {
            py::dict d;
            d["n"] = link.n;
            d["grows"] = link.grows;
            d["strict"] = link.strict;
            d["rho_inside"] = link.rho_inside;
            d["rho_outside_prev"] = link.rho_outside_prev;
            out.append(d);
        }
        return out;
    });

    m.def("ps_profile",
          [](const py::handle& state) { return json_to_py(ps_profile(vec_from_py(state)).to_json()); });

    m.def("xstate_from_spectrum", [](const py::handle& state) {
        return json_to_py(xstate_from_spectrum(vec_from_py(state)).to_json());
    });
    m.def("spectrum_from_xstate", [](const py::handle& a, const py::handle& b, const py::handle& c) {
        XState x;
        x.a = quad_from_py(a);
        x.b = quad_from_py(b);
        x.c = quad_from_py(c);
        return vec_to_py(spectrum_from_xstate(x));
    });

    m.def("dd_ray_cap", []() { return dd::ray_cap(); });
    m.def("set_dd_ray_cap", [](std::size_t cap) { dd::set_ray_cap(cap); });
}
