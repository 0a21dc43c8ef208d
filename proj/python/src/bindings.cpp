#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvebounds/audit.hpp"
#include "curvebounds/liaison.hpp"
#include "curvebounds/surfaces.hpp"

namespace py = pybind11;
using namespace curvebounds;

namespace {

DegreePair pr(Int d1, Int d2) { return DegreePair(d1, d2); }

py::dict case_dict(const CaseParams& c) {
  py::dict d;
  d["alpha"] = c.alpha;
  d["beta"] = c.beta;
  d["u"] = c.u;
  d["k_step"] = c.k_step;
  d["case_label"] = std::string(to_string(c.label));
  return d;
}

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["d1"] = r.pair.d1;
  d["d2"] = r.pair.d2;
  d["b"] = r.values.b;
  d["b_g"] = r.values.b_g;
  d["b_dg"] = r.values.b_dg;
  d["trivial"] = r.values.trivial;
  d["g_extremal_of_sum"] = r.values.g_extremal_of_sum;
  d["best_proved"] = r.best_proved;
  py::list prov;
  for (const Provenance& p : r.provenance) {
    py::dict e;
    e["result_id"] = to_string(p.id);
    e["hypothesis"] = p.hypothesis;
    e["bound"] = p.bound;
    e["strict"] = p.strict;
    e["conditional"] = p.conditional;
    e["binding"] = p.binding;
    prov.append(e);
  }
  d["provenance"] = prov;
  d["flags"] = r.flags;
  return d;
}

}  // namespace

PYBIND11_MODULE(_curvebounds, m) {
  m.doc() = "Exact intersection bounds for pairs of curves in P^4";
  py::register_exception<IntegralityError>(m, "IntegralityError", PyExc_ArithmeticError);

  // bounds
  m.def("b_dg", [](Int d1, Int d2) { return b_dg(pr(d1, d2)); }, py::arg("d1"), py::arg("d2"));
  m.def("b", [](Int d1, Int d2) { return b(pr(d1, d2)); }, py::arg("d1"), py::arg("d2"));
  m.def("b_g", [](Int d1, Int d2) { return b_g(pr(d1, d2)); }, py::arg("d1"), py::arg("d2"));
  m.def("g_extremal", &g_extremal, py::arg("d"));
  m.def("case_of", [](Int d1, Int d2) { return case_dict(case_of(pr(d1, d2))); },
        py::arg("d1"), py::arg("d2"));
  m.def("m_threshold", [](Int d1, Int d2) { return m_threshold(pr(d1, d2)); },
        py::arg("d1"), py::arg("d2"));
  m.def("b_minus_bg_case_poly",
        [](Int d1, Int d2) { return b_minus_bg_case_poly(case_of(pr(d1, d2))); },
        py::arg("d1"), py::arg("d2"));

  // hvectors
  m.def("macaulay_next_max", &macaulay_next_max, py::arg("value"), py::arg("degree"));
  m.def("is_o_sequence", &is_o_sequence, py::arg("h"));
  m.def("integrate", [](const HVector& h) { return integrate(h).prefix; }, py::arg("h"));
  m.def("genus_of_hvector", &genus_of_hvector, py::arg("h"));
  m.def("genus_with_defect", [](const HVector& h, Int k) { return genus_with_defect(h, k).genus; },
        py::arg("h"), py::arg("k"));
  m.def("acm_genus_closed_form", &acm_genus_closed_form, py::arg("m"), py::arg("a"), py::arg("b"));
  m.def(
      "is_admissible",
      [](const HVector& h) {
        Admissibility a = is_admissible(h);
        std::vector<std::pair<std::string, std::string>> v;
        for (const auto& x : a.violations) v.emplace_back(to_string(x.rule), x.detail);
        return std::make_pair(a.admissible, v);
      },
      py::arg("h"));
  m.def("enumerate_admissible", [](Int d) { return enumerate_admissible(d); }, py::arg("d"));
  m.def("extremal_hvector", &extremal_hvector, py::arg("d"));
  m.def(
      "max_genus_bruteforce",
      [](Int d) {
        MaxGenus g = max_genus_bruteforce(d);
        return std::make_pair(g.hvector, g.genus);
      },
      py::arg("d"));
  m.def("rosa_bound", &rosa_bound, py::arg("g"), py::arg("g1"), py::arg("g2"));

  // surfaces
  m.def(
      "scroll_maximize",
      [](Int d1, Int d2) {
        OptResult r = scroll_maximize(pr(d1, d2));
        py::dict d;
        d["maximum"] = r.maximum;
        d["maximizers"] = r.maximizers;
        py::list classes;
        for (const auto& [c1, c2] : r.classes) classes.append(py::make_tuple(render(c1), render(c2)));
        d["classes"] = classes;
        return d;
      },
      py::arg("d1"), py::arg("d2"));
  m.def("scroll_bruteforce", [](Int d1, Int d2) { return scroll_bruteforce(pr(d1, d2)); },
        py::arg("d1"), py::arg("d2"));
  m.def(
      "cone_bound",
      [](Int d1, Int d2, bool v1, bool v2) { return cone_bound(pr(d1, d2), {v1, v2}).bound; },
      py::arg("d1"), py::arg("d2"), py::arg("vertex1"), py::arg("vertex2"));
  m.def(
      "dp_construction",
      [](Int k, Int l) {
        auto [c1, c2] = dp_construction(k, l);
        py::dict d;
        d["L1"] = render(c1);
        d["L2"] = render(c2);
        d["degrees"] = std::make_pair(c1.degree(), c2.degree());
        d["intersection"] = dp_intersect(c1, c2);
        d["genera"] = std::make_pair(dp_genus(c1), dp_genus(c2));
        return d;
      },
      py::arg("k"), py::arg("l"));

  // liaison
  m.def(
      "residual",
      [](Int f1, Int f2, Int f3, Int d_in, Int g_in) {
        LinkedPair p = residual(CIType(f1, f2, f3), d_in, g_in);
        return std::make_pair(p.d_res, p.g_res);
      },
      py::arg("f1"), py::arg("f2"), py::arg("f3"), py::arg("d_in"), py::arg("g_in"));
  m.def(
      "even_case_margin",
      [](Int d1, Int d2) {
        EvenMargin e = even_case_margin(pr(d1, d2));
        py::dict d;
        d["m"] = e.m;
        d["n_max"] = e.n_max;
        d["margin_lb"] = e.margin_lb;
        d["n_max_exact"] = e.n_max_exact;
        d["margin_exact"] = e.margin_exact;
        d["genus_gap"] = e.genus_gap;
        return d;
      },
      py::arg("d1"), py::arg("d2"));
  m.def(
      "odd_degree_obstruction",
      [](Int d1, Int d2) {
        OddObstruction o = odd_degree_obstruction(pr(d1, d2));
        py::dict d;
        d["m"] = o.m;
        d["b_minus_bg"] = o.b_minus_bg;
        d["residual_genus_acm"] = o.residual_genus_acm;
        d["residual_genus_defect1"] = o.residual_genus_defect1;
        d["union_genus"] = o.union_genus;
        return d;
      },
      py::arg("d1"), py::arg("d2"));

  // audit
  m.def(
      "verify_cases",
      [](Int range_max) {
        CasesSummary s = verify_cases(range_max);
        py::dict d;
        d["pairs"] = s.pairs;
        d["identity_failures"] = s.identity_failures.size();
        d["implication_failures"] = s.implication_failures.size();
        d["converse_counterexamples"] = s.converse_counterexamples;
        return d;
      },
      py::arg("range_max"));
  m.def("verify_table1", [] {
    Table1Summary s = verify_table1();
    py::dict d;
    d["matching"] = s.matching_cells;
    d["cells"] = s.cells.size();
    d["known_flagged"] = s.known_flagged;
    d["unexpected"] = s.unexpected;
    return d;
  });
  m.def(
      "acm_certificate",
      [](Int d1, Int d2, std::optional<HVector> h) {
        AcmCertificate c = acm_certificate(pr(d1, d2), h);
        py::dict d;
        d["a_value"] = c.a_value;
        d["reg_upper"] = c.reg_upper;
        d["claim_holds"] = c.claim_holds;
        d["route"] = to_string(c.route);
        d["special_case"] = c.special_case;
        d["strict"] = c.strict;
        return d;
      },
      py::arg("d1"), py::arg("d2"), py::arg("hvector") = py::none());
  m.def("conjecture_status", [](Int d1, Int d2) { return report_dict(conjecture_status(pr(d1, d2))); },
        py::arg("d1"), py::arg("d2"));
  m.def(
      "make_grid",
      [](const std::string& reference, Int d_min, Int d_max) {
        require(reference == "bdg" || reference == "b", "reference must be 'bdg' or 'b'");
        SignGrid g = make_grid(reference == "bdg" ? Reference::BDG : Reference::B, d_min, d_max);
        std::vector<std::vector<std::pair<int, Int>>> rows;
        for (Int d2 = d_min; d2 <= d_max; ++d2) {
          auto& row = rows.emplace_back();
          for (Int d1 = d_min; d1 <= d_max; ++d1) {
            const GridCell& c = g.at(d1, d2);
            row.emplace_back(c.sign, c.magnitude);
          }
        }
        return rows;
      },
      py::arg("reference"), py::arg("d_min"), py::arg("d_max"));
}
