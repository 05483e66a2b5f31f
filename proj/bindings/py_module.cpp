#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bw/extend.hpp"
#include "bw/modio.hpp"

namespace py = pybind11;
using namespace bw;

namespace {

/* The library hands out shared_ptr<const T>; pybind11 holders want the
 * non-const form.  Nothing bound here mutates, so the cast is sound. */
using PyAlg = std::shared_ptr<Algebra>;
using PyRep = std::shared_ptr<Representation>;

PyAlg mut(AlgPtr p) { return std::const_pointer_cast<Algebra>(p); }
PyRep mut(RepPtr p) { return std::const_pointer_cast<Representation>(p); }

std::optional<Field> field_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Field::parse(s);
}

/* JSON-heavy results cross the boundary as strings; the Python package
 * parses them. */
std::string dumps(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact module calculus over finite-dimensional quiver algebras";

  py::register_exception<Error>(m, "CalculusError");

  py::class_<Algebra, PyAlg>(m, "Algebra")
      .def_property_readonly("hash", [](const Algebra& a) { return a.hash; })
      .def_property_readonly("dim", &Algebra::dim)
      .def_property_readonly("field", [](const Algebra& a) { return a.field().to_string(); })
      .def_property_readonly("vertices", [](const Algebra& a) { return a.quiver().vertices; })
      .def_property_readonly("n_arrows", [](const Algebra& a) { return a.quiver().n_arrows(); })
      .def_property_readonly("loewy_length",
                             [](const Algebra& a) { return a.basis.loewy_length; })
      .def_property_readonly("special_biserial",
                             [](const Algebra& a) { return a.cls.special_biserial; })
      .def_property_readonly("monomial", [](const Algebra& a) { return a.cls.monomial; })
      .def_property_readonly("canonical_text",
                             [](const Algebra& a) { return a.canonical_text; })
      .def_property_readonly("block_dims",
                             [](const Algebra& a) {
                               std::vector<int> out;
                               for (int v = 0; v < a.quiver().n_vertices(); ++v)
                                 out.push_back(a.basis.dim_from(v));
                               return out;
                             })
      .def("__repr__", [](const Algebra& a) {
        return "<Algebra dim " + std::to_string(a.dim()) + " over " + a.field().to_string() +
               ", hash " + a.hash + ">";
      });

  py::class_<Representation, PyRep>(m, "Module")
      .def_property_readonly("name", [](const Representation& m_) { return m_.name; })
      .def_property_readonly("dim", &Representation::total_dim)
      .def_property_readonly("dims", [](const Representation& m_) { return m_.dims; })
      .def_property_readonly("algebra", [](const Representation& m_) { return mut(m_.alg); })
      .def("__repr__", [](const Representation& m_) {
        return "<Module " + m_.name + ", dim " + std::to_string(m_.total_dim()) + ">";
      });

  m.def("load_algebra",
        [](const std::string& spec, const std::string& field) {
          return mut(load_algebra(spec, field_opt(field)));
        },
        py::arg("spec"), py::arg("field") = "");
  m.def("builtin_names", [] {
    return std::vector<std::string>{"ex2", "ex6", "ex7-lambda", "ex7-lambda1", "ex7-delta"};
  });

  m.def("simple", [](PyAlg A, const std::string& v) {
    return mut(simple_rep(A, A->quiver().require_vertex(v)));
  });
  m.def("projective", [](PyAlg A, const std::string& v) {
    return mut(projective_rep(A, A->quiver().require_vertex(v)));
  });
  m.def("string_module", [](PyAlg A, const std::string& word) {
    StringWord w = parse_word(A->quiver(), word);
    WordCheck chk = check_string(*A, w);
    require(chk.ok, Errc::invalid_input, "invalid string word: " + chk.reason);
    return mut(string_rep(A, w));
  });
  m.def("graph_module",
        [](PyAlg A, const std::string& spec_json, const std::string& name) {
          return mut(build_graph_module(A, graphspec_from_json(json::parse(spec_json)), name).rep);
        },
        py::arg("algebra"), py::arg("spec_json"), py::arg("name") = "module");
  m.def("enumerate_strings", [](PyAlg A, int max_len) {
    std::vector<std::string> out;
    for (const auto& w : enumerate_strings(A, max_len)) out.push_back(w.to_string(A->quiver()));
    return out;
  });

  m.def("module_to_json", [](PyRep M) { return dumps(module_to_json(*M)); });
  m.def("module_from_json",
        [](PyAlg A, const std::string& s) { return mut(module_from_json(A, json::parse(s))); });
  m.def("module_dot", [](PyRep M) { return dot_of_module(M); });

  m.def("direct_sum", [](const std::vector<PyRep>& parts) {
    return mut(direct_sum(std::vector<RepPtr>(parts.begin(), parts.end())));
  });
  m.def("syzygy", [](PyRep M, int k) { return mut(syzygy(M, k)); }, py::arg("module"),
        py::arg("k") = 1);
  m.def("pdim",
        [](PyRep M, int cutoff) { return dumps(pdim_to_json(pdim(M, PdimOptions{cutoff}))); },
        py::arg("module"), py::arg("cutoff") = 24);
  m.def("hom_dim", [](PyRep A, PyRep B) { return hom_dim(A, B); });
  m.def("is_isomorphic", [](PyRep A, PyRep B) { return is_isomorphic(A, B); });
  m.def("decompose_names",
        [](PyRep M, std::uint64_t seed) {
          std::vector<std::string> out;
          for (const auto& s : decompose(M, DecompOptions{seed, 64})) out.push_back(s.piece->name);
          return out;
        },
        py::arg("module"), py::arg("seed") = 20260815);

  m.def("findim_probe",
        [](PyAlg A, int max_len, int cutoff) {
          return dumps(findim_to_json(*A, findim_probe(A, max_len, PdimOptions{cutoff})));
        },
        py::arg("algebra"), py::arg("max_len") = 8, py::arg("cutoff") = 24);

  m.def("criterion3_scan",
        [](PyAlg A, const std::vector<std::string>& p, const std::vector<std::string>& q,
           int n_max, int max_len, int band_len, int cutoff) {
          Criterion3Input inp = make_criterion_input(*A, p, q);
          ScanOptions opt;
          opt.n_max = n_max;
          opt.max_len = max_len;
          opt.band_len = band_len;
          opt.pd.cutoff = cutoff;
          return dumps(criterion3_to_json(*A, run_criterion3(A, inp, opt)));
        },
        py::arg("algebra"), py::arg("p"), py::arg("q"), py::arg("n_max") = 4,
        py::arg("max_len") = 12, py::arg("band_len") = 8, py::arg("cutoff") = 24);
  m.def("criterion3_refute",
        [](PyAlg A, const std::vector<std::string>& p, const std::vector<std::string>& q,
           int dim_bound, int n_max, int cutoff) {
          Criterion3Input inp = make_criterion_input(*A, p, q);
          RefuteOptions opt;
          opt.dim_bound = dim_bound;
          opt.n_max = n_max;
          opt.pd.cutoff = cutoff;
          return dumps(refute_to_json(refute_left_bounded(A, inp, opt)));
        },
        py::arg("algebra"), py::arg("p"), py::arg("q"), py::arg("dim_bound") = 8,
        py::arg("n_max") = 9, py::arg("cutoff") = 24);

  m.def("one_point_extend", [](PyAlg A, const std::string& spec_text) {
    ExtendResult res = one_point_extend(A, parse_extension_spec(spec_text));
    return py::make_tuple(mut(res.ext), res.old_blocks_unchanged);
  });
  m.def("restrict_to_base",
        [](PyAlg base, PyRep M) { return mut(restrict_to_base(base, M)); });
}
