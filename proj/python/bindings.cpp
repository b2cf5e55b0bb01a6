#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "repclust/checks.hpp"
#include "repclust/cover.hpp"
#include "repclust/derived_model.hpp"
#include "repclust/embedding.hpp"
#include "repclust/orbit_model.hpp"
#include "repclust/tilting.hpp"

namespace py = pybind11;
using namespace repclust;

namespace {

using Triple = std::tuple<int, int, int>;

Triple triple(const Diagonal& d) { return {d.i, d.j, d.k}; }

Diagonal diagonal(const Triple& t, const ModelParams& params) {
  return make_diagonal(std::get<0>(t), std::get<1>(t), std::get<2>(t), params);
}

py::dict stability(const TranslationQuiver& q) {
  const auto r = verify_stable(q);
  py::list violations;
  for (const auto& v : r.violations)
    violations.append(py::make_tuple(v.source, v.target, v.forward, v.backward));
  py::dict out;
  out["stable"] = r.stable();
  out["translation_total"] = r.translation_total;
  out["translation_bijective"] = r.translation_bijective;
  out["violations"] = violations;
  return out;
}

}  // namespace

PYBIND11_MODULE(_repclust, m) {
  m.doc() = "Polygon models of repetitive higher cluster categories of type A";

  py::register_exception<InvalidParams>(m, "InvalidParams", PyExc_ValueError);
  py::register_exception<QuiverError>(m, "QuiverError", PyExc_RuntimeError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init(&ModelParams::make), py::arg("n"), py::arg("m"), py::arg("p"))
      .def_readonly("n", &ModelParams::n)
      .def_readonly("m", &ModelParams::m)
      .def_readonly("p", &ModelParams::p)
      .def_property_readonly("region_size", &ModelParams::region_size)
      .def_property_readonly("total_vertices", &ModelParams::total_vertices)
      .def_property_readonly("diagonal_count", &ModelParams::diagonal_count)
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(n=" + std::to_string(p.n) + ", m=" + std::to_string(p.m) +
               ", p=" + std::to_string(p.p) + ")";
      });

  py::class_<TranslationQuiver>(m, "TranslationQuiver")
      .def_property_readonly("vertex_count", &TranslationQuiver::vertex_count)
      .def_property_readonly("arrow_count", &TranslationQuiver::arrow_count)
      .def("label", &TranslationQuiver::label)
      .def("tau", &TranslationQuiver::tau)
      .def("tau_inverse", &TranslationQuiver::tau_inverse)
      .def("find", &TranslationQuiver::find)
      .def("arrows", [](const TranslationQuiver& q) {
        std::vector<std::tuple<VertexId, VertexId, std::string>> out;
        for (const auto& a : q.arrows()) out.emplace_back(a.source, a.target, to_string(a.tag));
        return out;
      })
      .def("to_json", [](const TranslationQuiver& q) { return to_json(q); })
      .def("to_dot", [](const TranslationQuiver& q) { return to_dot(q); });

  m.def("quiver_from_json", &quiver_from_json);
  m.def("verify_stable", &stability);
  m.def("power", &power, py::arg("quiver"), py::arg("m"));
  m.def("hammock_hom", &hammock_hom);
  m.def("isomorphic", [](const TranslationQuiver& a, const TranslationQuiver& b, bool respect) {
    IsomorphismOptions options;
    options.respect_translation = respect;
    return find_isomorphism(a, b, options).has_value();
  }, py::arg("a"), py::arg("b"), py::arg("respect_translation") = true);

  m.def("enumerate_diagonals", [](const ModelParams& params) {
    std::vector<Triple> out;
    for (const auto& d : enumerate_diagonals(params)) out.push_back(triple(d));
    return out;
  });
  m.def("crosses", [](const Triple& a, const Triple& b) {
    return crosses({std::get<0>(a), std::get<1>(a), std::get<2>(a)},
                   {std::get<0>(b), std::get<1>(b), std::get<2>(b)});
  });

  m.def("build_gamma", [](const ModelParams& params) { return build_gamma(params).quiver; });
  m.def("band_topology", [](const ModelParams& params) {
    return std::string(to_string(band_topology(build_gamma(params))));
  });

  py::class_<OrbitCategory>(m, "OrbitCategory")
      .def(py::init<const ModelParams&>())
      .def_property_readonly("quiver", [](const OrbitCategory& c) { return c.gamma().quiver; })
      .def("hom", [](const OrbitCategory& c, const Triple& x, const Triple& y) {
        return c.hom(diagonal(x, c.params()), diagonal(y, c.params()));
      })
      .def("ext", [](const OrbitCategory& c, const Triple& x, const Triple& y, int degree) {
        return c.ext(diagonal(x, c.params()), diagonal(y, c.params()), degree);
      }, py::arg("x"), py::arg("y"), py::arg("degree") = 1);

  m.def("ext1_crossing", [](const Triple& x, const Triple& y, const ModelParams& params) {
    return ext1_crossing(diagonal(x, params), diagonal(y, params), params);
  });

  m.def("fuss_catalan", &fuss_catalan);
  m.def("tilting_objects", [](const ModelParams& params) {
    std::vector<std::vector<Triple>> out;
    for (const auto& t : tilting_objects(params)) {
      std::vector<Triple> obj;
      for (const auto& d : t.summands) obj.push_back(triple(d));
      out.push_back(std::move(obj));
    }
    return out;
  });
  m.def("verify_tilting", [](const ModelParams& params) {
    const auto r = verify_tilting_bruteforce(params);
    py::dict out;
    out["object_count"] = r.object_count;
    out["maximal_rigid_count"] = r.maximal_rigid_count;
    out["cluster_tilting_count"] = r.cluster_tilting_count;
    out["maximal_rigid_matches"] = r.maximal_rigid_matches;
    out["cluster_tilting_matches"] = r.cluster_tilting_matches;
    out["objects_rigid"] = r.objects_rigid;
    out["summand_counts_ok"] = r.summand_counts_ok;
    return out;
  });

  m.def("t_value", &t_value);
  m.def("embed", [](int n, int p) {
    const Embedding e = embed(n, p);
    py::dict out;
    out["t"] = e.band.t;
    out["rows"] = e.band.rows;
    out["band_vertices"] = e.band_vertices.size();
    out["ok"] = e.ok();
    return out;
  });
  m.def("quotient_ar", [](int n, int p) { return quotient_ar(n, p).quotient; });

  m.def("power_decomposition", [](int n) {
    const PowerReport r = power_decomposition(n);
    py::dict out;
    out["component_sizes"] = r.component_sizes;
    out["ok"] = r.ok();
    return out;
  });
  m.def("verify_region", [](int rank) { return verify_region(rank).ok(); });
  m.def("verify_derived_iso", [](int rank, int half_width) {
    return verify_derived_iso(WindowParams::make(rank, half_width)).ok();
  });

  m.def("check_json", [](const std::string& suite, const ModelParams& params) {
    const auto s = parse_suite(suite);
    if (!s) throw InvalidParams("unknown suite '" + suite + "'");
    return to_json(run_suite(*s, params)).dump();
  });
}
