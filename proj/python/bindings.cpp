#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbital/closure.hpp"
#include "orbital/errors.hpp"
#include "orbital/gf.hpp"
#include "orbital/io.hpp"
#include "orbital/oracle.hpp"
#include "orbital/zoo.hpp"

namespace py = pybind11;
using namespace orbital;

namespace {

// Permutations cross the boundary as plain image tables.
std::vector<Perm> to_perms(const std::vector<std::vector<int>>& tables) {
  std::vector<Perm> perms;
  perms.reserve(tables.size());
  for (const auto& t : tables) perms.emplace_back(t);
  return perms;
}

std::vector<std::vector<int>> from_perms(const std::vector<Perm>& perms) {
  std::vector<std::vector<int>> tables;
  tables.reserve(perms.size());
  for (const Perm& p : perms) tables.push_back(p.images());
  return tables;
}

std::vector<BinaryRelation> to_relations(int degree,
                                         const std::vector<std::vector<std::pair<int, int>>>& rs) {
  std::vector<BinaryRelation> rels;
  rels.reserve(rs.size());
  for (const auto& pairs : rs) rels.emplace_back(degree, pairs);
  return rels;
}

py::dict iso_set_to_dict(const IsoSet& s) {
  py::dict d;
  d["degree"] = s.degree;
  d["symbolic_sym"] = s.symbolic_sym;
  d["perms"] = from_perms(s.perms);
  return d;
}

}  // namespace

PYBIND11_MODULE(orbital, m) {
  m.doc() = "2-closures of 3/2-transitive permutation groups and isomorphisms of the "
            "associated coherent configurations";

  py::register_exception<OverCapError>(m, "OverCapError");
  py::register_exception<OverBudgetError>(m, "OverBudgetError");
  py::register_exception<PreconditionError>(m, "PreconditionError");
  py::register_exception<IncoherentInputError>(m, "IncoherentInputError");

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init([](int degree, const std::vector<std::vector<int>>& generators) {
             return PermGroup(degree, to_perms(generators));
           }),
           py::arg("degree"), py::arg("generators"))
      .def_static("symmetric", &PermGroup::symmetric)
      .def_static("trivial", &PermGroup::trivial)
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("generators",
                             [](const PermGroup& g) { return from_perms(g.generators()); })
      .def("order",
           [](const PermGroup& g) -> py::object {
             auto o = g.order();
             if (!o) return py::none();
             return py::cast(*o);
           })
      .def("elements",
           [](const PermGroup& g) -> py::object {
             auto e = g.elements();
             if (!e) return py::none();
             return py::cast(from_perms(*e));
           })
      .def("orbit", &PermGroup::orbit, py::arg("alpha"))
      .def("stabilizer", &PermGroup::stabilizer, py::arg("alpha"))
      .def("is_transitive", &PermGroup::is_transitive)
      .def("rank", &PermGroup::rank)
      .def("is_2transitive", &PermGroup::is_2transitive)
      .def("is_three_halves_transitive", &PermGroup::is_three_halves_transitive)
      .def("is_primitive", &PermGroup::is_primitive)
      .def("is_frobenius", &PermGroup::is_frobenius)
      .def("contains",
           [](const PermGroup& g, const std::vector<int>& images) {
             return g.contains(Perm(images));
           })
      .def("conjugated_by",
           [](const PermGroup& g, const std::vector<int>& images) {
             return g.conjugated_by(Perm(images));
           })
      .def("same_elements",
           [](const PermGroup& a, const PermGroup& b) { return a.same_elements(b); })
      .def("__repr__", [](const PermGroup& g) {
        return "<PermGroup degree " + std::to_string(g.degree()) + ", " +
               std::to_string(g.generators().size()) + " generators>";
      });

  py::class_<CoherentConfiguration>(m, "CoherentConfiguration")
      .def_static("from_matrix",
                  [](int degree, const std::vector<std::vector<int>>& rows) {
                    std::vector<int> flat;
                    flat.reserve(static_cast<std::size_t>(degree) * degree);
                    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
                    return CoherentConfiguration::from_matrix(degree, std::move(flat));
                  })
      .def_property_readonly("degree", &CoherentConfiguration::degree)
      .def_property_readonly("rank", &CoherentConfiguration::rank)
      .def("color", &CoherentConfiguration::color)
      .def("matrix",
           [](const CoherentConfiguration& x) {
             std::vector<std::vector<int>> rows(x.degree(), std::vector<int>(x.degree()));
             for (int a = 0; a < x.degree(); ++a)
               for (int b = 0; b < x.degree(); ++b) rows[a][b] = x.color(a, b);
             return rows;
           })
      .def("verify",
           [](const CoherentConfiguration& x) -> py::object {
             const auto& v = x.verify();
             if (!v) return py::none();
             return py::cast(v->description());
           })
      .def("is_coherent", &CoherentConfiguration::is_coherent)
      .def("class_size", &CoherentConfiguration::class_size)
      .def("intersection_number", &CoherentConfiguration::intersection_number)
      .def("regular_points", &CoherentConfiguration::regular_points)
      .def("is_semiregular", &CoherentConfiguration::is_semiregular)
      .def("is_complete", &CoherentConfiguration::is_complete)
      .def("is_homogeneous", &CoherentConfiguration::is_homogeneous)
      .def("is_three_halves_homogeneous", &CoherentConfiguration::is_three_halves_homogeneous)
      .def("__eq__", [](const CoherentConfiguration& a,
                        const CoherentConfiguration& b) { return a == b; })
      .def("__repr__", [](const CoherentConfiguration& x) {
        return "<CoherentConfiguration degree " + std::to_string(x.degree()) + ", rank " +
               std::to_string(x.rank()) + ">";
      });

  m.def("scheme_of_group", &scheme_of_group);
  m.def(
      "wl_closure",
      [](int degree, const std::vector<std::vector<std::pair<int, int>>>& relations) {
        return wl_closure(to_relations(degree, relations));
      },
      py::arg("degree"), py::arg("relations"));
  m.def("point_extension", &point_extension, py::arg("x"), py::arg("points"));
  m.def(
      "two_closure",
      [](const PermGroup& g, int threshold) {
        auto r = two_closure(g, threshold);
        py::dict d;
        d["closure"] = r.closure;
        d["step"] = r.step;
        d["below_classification_bound"] = r.below_classification_bound;
        return d;
      },
      py::arg("group"), py::arg("threshold") = 169);
  m.def(
      "k_closure",
      [](const PermGroup& g, int k, std::uint64_t budget, int threshold) {
        return k_closure(g, k, budget, threshold);
      },
      py::arg("group"), py::arg("k"), py::arg("budget") = tuple_budget(),
      py::arg("threshold") = 169);
  m.def(
      "iso_schemes",
      [](const PermGroup& g, const PermGroup& g2, int threshold) {
        return iso_set_to_dict(iso_schemes(g, g2, threshold));
      },
      py::arg("group"), py::arg("group2"), py::arg("threshold") = 169);
  m.def(
      "iso_colored",
      [](const PermGroup& g, const PermGroup& g2, const std::vector<int>& psi, int threshold) {
        return iso_set_to_dict(iso_colored(g, g2, ColorBijection(psi), threshold));
      },
      py::arg("group"), py::arg("group2"), py::arg("psi"), py::arg("threshold") = 169);
  m.def("aut_oracle", &aut_oracle);
  m.def("bfc", &bfc);
  m.def(
      "imbed",
      [](const PermGroup& g, const std::vector<std::vector<int>>& t, const PermGroup& h,
         const std::vector<std::vector<int>>& t_prime, int omega, int omega_prime) -> py::object {
        auto x = imbed(g, to_perms(t), h, to_perms(t_prime), omega, omega_prime);
        if (!x) return py::none();
        return py::cast(x->images());
      },
      py::arg("group"), py::arg("t"), py::arg("h"), py::arg("t_prime"), py::arg("omega"),
      py::arg("omega_prime"));
  m.def("generating_pairs", [](const PermGroup& g, bool first_only) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& [a, b] : generating_pairs(g, first_only))
      out.emplace_back(a.images(), b.images());
    return out;
  });

  m.def("agl1", [](int p, int d) { return agl1(FiniteField(p, d)); }, py::arg("p"),
        py::arg("d") = 1);
  m.def("agammal1", &agammal1);
  m.def("as0", &as0);
  m.def("affine_group", &affine_group);
  m.def("multiplication_matrix",
        [](int p, int d, int element) { return multiplication_matrix(FiniteField(p, d), element); });
  m.def("frobenius_matrix", [](int p, int d) { return frobenius_matrix(FiniteField(p, d)); });
}
