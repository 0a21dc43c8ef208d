#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvebounds/cli.hpp"
#include "curvebounds/liaison.hpp"
#include "curvebounds/surfaces.hpp"

namespace curvebounds {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Args {
  std::string format = "text";
  Int d1 = 0, d2 = 0, d = 0, k = -1, l = 0;
  Int max = 0;
  Int d_min = 0, d_max = 0;
  bool vertex1 = true, vertex2 = true;
  std::string hvector;
  std::string reference = "b";
  std::string out_prefix = "figure";
  std::string image = "all";
};

Format format_of(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// ---- bound -------------------------------------------------------------------

int cmd_bound(const Args& a, Format fmt, std::ostream& out) {
  BoundReport r = conjecture_status(DegreePair(a.d1, a.d2));
  const BoundValues& v = r.values;
  if (fmt == Format::Json) {
    out << report_json(r) << '\n';
  } else if (fmt == Format::Csv) {
    out << "d1,d2,result_id,bound,strict,conditional,binding,hypothesis\n";
    for (const Provenance& p : r.provenance) {
      out << a.d1 << ',' << a.d2 << ',' << to_string(p.id) << ',' << p.bound << ','
          << p.strict << ',' << p.conditional << ',' << p.binding << ','
          << csv_quote(p.hypothesis) << '\n';
    }
  } else {
    out << "d1=" << a.d1 << " d2=" << a.d2 << '\n';
    out << "B=" << v.b << " B_g=" << v.b_g << " B_DG=" << v.b_dg << " trivial=" << v.trivial
        << '\n';
    out << "best_proved=" << r.best_proved << '\n';
    for (const Provenance& p : r.provenance) {
      out << "  " << to_string(p.id) << ": " << p.bound << (p.conditional ? " [conditional]" : "")
          << (p.strict ? " [strict off cubic]" : "") << (p.binding ? "" : " [non-binding]")
          << " -- " << p.hypothesis << '\n';
    }
    for (const std::string& f : r.flags) out << "flag: " << f << '\n';
  }
  return exit_code::kOk;
}

// ---- hvec --------------------------------------------------------------------

int cmd_hvec_genus(const Args& a, Format fmt, std::ostream& out) {
  HVector h = parse_hvector(a.hvector);
  GenusProfile g = genus_with_defect(h, a.k < 0 ? 0 : a.k);
  if (fmt == Format::Json) {
    ordered_json j;
    j["hvector"] = format_hvector(h);
    j["degree"] = hvector_degree(h);
    j["rao_defect"] = g.rao_defect;
    j["genus"] = g.genus;
    out << j.dump() << '\n';
  } else if (fmt == Format::Csv) {
    out << "hvector,degree,rao_defect,genus\n"
        << csv_quote(format_hvector(h)) << ',' << hvector_degree(h) << ',' << g.rao_defect << ','
        << g.genus << '\n';
  } else {
    out << g.genus << '\n';
  }
  return exit_code::kOk;
}

int cmd_hvec_enumerate(const Args& a, Format fmt, std::ostream& out) {
  if (fmt == Format::Csv) out << "hvector,genus\n";
  ordered_json arr = ordered_json::array();
  for_each_admissible(a.d, [&](const HVector& h) {
    Int g = genus_of_hvector(h);
    if (fmt == Format::Json) {
      arr.push_back({{"hvector", format_hvector(h)}, {"genus", g}});
    } else if (fmt == Format::Csv) {
      out << csv_quote(format_hvector(h)) << ',' << g << '\n';
    } else {
      out << format_hvector(h) << " genus=" << g << '\n';
    }
  });
  if (fmt == Format::Json) out << ordered_json{{"d", a.d}, {"hvectors", arr}}.dump() << '\n';
  return exit_code::kOk;
}

int cmd_hvec_extremal(const Args& a, Format fmt, std::ostream& out) {
  HVector h = extremal_hvector(a.d);
  Int g = g_extremal(a.d);
  if (fmt == Format::Json) {
    out << ordered_json{{"d", a.d}, {"hvector", format_hvector(h)}, {"g_extremal", g}}.dump()
        << '\n';
  } else if (fmt == Format::Csv) {
    out << "d,hvector,g_extremal\n" << a.d << ',' << csv_quote(format_hvector(h)) << ',' << g
        << '\n';
  } else {
    out << format_hvector(h) << '\n' << "g_extremal=" << g << '\n';
  }
  return exit_code::kOk;
}

// ---- surface -----------------------------------------------------------------

int cmd_scroll(const Args& a, Format fmt, std::ostream& out) {
  DegreePair p(a.d1, a.d2);
  OptResult r = scroll_maximize(p);
  if (fmt == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < r.maximizers.size(); ++i) {
      arr.push_back({{"a1", r.maximizers[i].first},
                     {"a2", r.maximizers[i].second},
                     {"class1", render(r.classes[i].first)},
                     {"class2", render(r.classes[i].second)}});
    }
    out << ordered_json{{"d1", a.d1}, {"d2", a.d2}, {"max", r.maximum}, {"maximizers", arr}}.dump()
        << '\n';
  } else if (fmt == Format::Csv) {
    out << "d1,d2,max,a1,a2,class1,class2\n";
    for (std::size_t i = 0; i < r.maximizers.size(); ++i) {
      out << a.d1 << ',' << a.d2 << ',' << r.maximum << ',' << r.maximizers[i].first << ','
          << r.maximizers[i].second << ',' << render(r.classes[i].first) << ','
          << render(r.classes[i].second) << '\n';
    }
  } else {
    out << "max=" << r.maximum << " at ";
    for (std::size_t i = 0; i < r.maximizers.size(); ++i) {
      out << (i ? "; " : "") << '(' << r.maximizers[i].first << ',' << r.maximizers[i].second
          << "): " << render(r.classes[i].first) << " and " << render(r.classes[i].second);
    }
    out << '\n';
  }
  return exit_code::kOk;
}

int cmd_cone(const Args& a, Format fmt, std::ostream& out) {
  ConeResult r = cone_bound(DegreePair(a.d1, a.d2), {a.vertex1, a.vertex2});
  if (fmt == Format::Json) {
    out << ordered_json{{"d1", a.d1},
                        {"d2", a.d2},
                        {"vertex1", a.vertex1},
                        {"vertex2", a.vertex2},
                        {"bound", r.bound},
                        {"i", r.i},
                        {"j", r.j},
                        {"strict_below_third_plus_one", r.strict_below_third_plus_one},
                        {"exceeds_third", r.exceeds_third},
                        {"sharpness_claimed", r.sharpness_claimed}}
               .dump()
        << '\n';
  } else if (fmt == Format::Csv) {
    out << "d1,d2,vertex1,vertex2,bound,i,j\n"
        << a.d1 << ',' << a.d2 << ',' << a.vertex1 << ',' << a.vertex2 << ',' << r.bound << ','
        << r.i << ',' << r.j << '\n';
  } else {
    out << r.bound << '\n';
  }
  return exit_code::kOk;
}

int cmd_delpezzo(const Args& a, Format fmt, std::ostream& out) {
  auto [c1, c2] = dp_construction(a.k, a.l);
  Int meet = dp_intersect(c1, c2);
  if (fmt == Format::Json) {
    out << ordered_json{{"k", a.k},
                        {"l", a.l},
                        {"L1", render(c1)},
                        {"L2", render(c2)},
                        {"degree1", c1.degree()},
                        {"degree2", c2.degree()},
                        {"intersection", meet},
                        {"genus1", dp_genus(c1)},
                        {"genus2", dp_genus(c2)}}
               .dump()
        << '\n';
  } else if (fmt == Format::Csv) {
    out << "k,l,L1,L2,degree1,degree2,intersection,genus1,genus2\n"
        << a.k << ',' << a.l << ',' << render(c1) << ',' << render(c2) << ',' << c1.degree() << ','
        << c2.degree() << ',' << meet << ',' << dp_genus(c1) << ',' << dp_genus(c2) << '\n';
  } else {
    out << "L1=" << render(c1) << " degree=" << c1.degree() << " genus=" << dp_genus(c1) << '\n'
        << "L2=" << render(c2) << " degree=" << c2.degree() << " genus=" << dp_genus(c2) << '\n'
        << "intersection=" << meet << '\n';
  }
  return exit_code::kOk;
}

// ---- verify ------------------------------------------------------------------

ordered_json case_json(const CaseCheck& c) {
  return {{"d1", c.pair.d1},          {"d2", c.pair.d2},
          {"case", to_string(c.params.label)},
          {"poly", c.poly_value},     {"b_minus_bg", c.b_minus_bg},
          {"threshold", c.threshold}, {"gap_squared", c.gap_squared}};
}

int cmd_verify_cases(const Args& a, Format fmt, std::ostream& out) {
  Int range = a.max > 0 ? a.max : 200;
  CasesSummary s = verify_cases(range);
  std::size_t failures = s.identity_failures.size() + s.implication_failures.size();
  if (fmt == Format::Json) {
    ordered_json fails = ordered_json::array();
    for (const auto& c : s.identity_failures) fails.push_back(case_json(c));
    for (const auto& c : s.implication_failures) fails.push_back(case_json(c));
    out << ordered_json{{"range_max", s.range_max},
                        {"pairs", s.pairs},
                        {"conditions_met", s.conditions_met},
                        {"identity_failures", s.identity_failures.size()},
                        {"implication_failures", s.implication_failures.size()},
                        {"converse_counterexamples", s.converse_counterexamples},
                        {"failures", fails}}
               .dump()
        << '\n';
  } else if (fmt == Format::Csv) {
    out << "range_max,pairs,conditions_met,identity_failures,implication_failures,"
           "converse_counterexamples\n"
        << s.range_max << ',' << s.pairs << ',' << s.conditions_met << ','
        << s.identity_failures.size() << ',' << s.implication_failures.size() << ','
        << s.converse_counterexamples << '\n';
  } else {
    out << "pairs=" << s.pairs << " condition met=" << s.conditions_met
        << " converse counterexamples=" << s.converse_counterexamples << '\n';
    out << "identity failures=" << s.identity_failures.size()
        << " implication failures=" << s.implication_failures.size() << '\n';
    out << failures << " failures\n";
  }
  return failures == 0 ? exit_code::kOk : exit_code::kMismatch;
}

int cmd_verify_table1(Format fmt, std::ostream& out) {
  Table1Summary s = verify_table1();
  bool ok = s.unexpected == 0 && s.known_flagged == 1;
  if (fmt == Format::Json) {
    ordered_json cells = ordered_json::array();
    for (const auto& c : s.cells) {
      cells.push_back({{"d1", c.d1},
                       {"d2", c.d2},
                       {"printed_b", c.printed_b},
                       {"b", c.b},
                       {"printed_b_dg", c.printed_b_dg},
                       {"b_dg", c.b_dg},
                       {"match", c.b_ok && c.b_dg_ok}});
    }
    out << ordered_json{{"cells", s.cells.size()},
                        {"matching", s.matching_cells},
                        {"known_flagged", s.known_flagged},
                        {"unexpected", s.unexpected},
                        {"detail", cells}}
               .dump()
        << '\n';
  } else if (fmt == Format::Csv) {
    out << "d1,d2,printed_b,b,printed_b_dg,b_dg,match\n";
    for (const auto& c : s.cells) {
      out << c.d1 << ',' << c.d2 << ',' << c.printed_b << ',' << c.b << ',' << c.printed_b_dg
          << ',' << c.b_dg << ',' << (c.b_ok && c.b_dg_ok) << '\n';
    }
  } else {
    out << s.matching_cells << '/' << s.cells.size() << " match";
    for (const auto& c : s.cells) {
      if (c.b_ok && c.b_dg_ok) continue;
      out << "; (" << c.d1 << ',' << c.d2 << ") flagged";
    }
    out << '\n';
    for (const auto& c : s.cells) {
      if (!c.b_dg_ok) {
        out << "  (" << c.d1 << ',' << c.d2 << ") b_dg computed " << c.b_dg << ", printed "
            << c.printed_b_dg << '\n';
      }
      if (!c.b_ok) {
        out << "  (" << c.d1 << ',' << c.d2 << ") b computed " << c.b << ", printed "
            << c.printed_b << '\n';
      }
    }
  }
  return ok ? exit_code::kOk : exit_code::kMismatch;
}

int cmd_verify_acm(const Args& a, Format fmt, std::ostream& out) {
  Int lo = a.d_min > 0 ? a.d_min : 6;
  Int hi = a.d_max > 0 ? a.d_max : 100;
  AcmSweep s = acm_sweep(lo, hi);
  if (fmt == Format::Json) {
    ordered_json fails = ordered_json::array();
    for (const auto& c : s.failures) {
      fails.push_back({{"d1", c.pair.d1},
                       {"d2", c.pair.d2},
                       {"a_value", c.a_value},
                       {"reg_upper", c.reg_upper}});
    }
    out << ordered_json{{"d_min", lo},
                        {"d_max", hi},
                        {"pairs", s.pairs},
                        {"failures", fails},
                        {"matches_expected", s.matches_expected}}
               .dump()
        << '\n';
  } else if (fmt == Format::Csv) {
    out << "d1,d2,a_value,reg_upper\n";
    for (const auto& c : s.failures) {
      out << c.pair.d1 << ',' << c.pair.d2 << ',' << c.a_value << ',' << c.reg_upper << '\n';
    }
  } else {
    out << "pairs=" << s.pairs << " regularity step fails for " << s.failures.size() << " pairs"
        << (s.matches_expected ? ", exactly the d2=8, d1>=10 subcase" : ", unexpected profile")
        << '\n';
  }
  return s.matches_expected ? exit_code::kOk : exit_code::kMismatch;
}

int cmd_verify_extremality(const Args& a, Format fmt, std::ostream& out) {
  Int hi = a.max > 0 ? a.max : 80;
  Int lo = a.d_min > 0 ? a.d_min : 9;
  std::vector<ExtremalityRow> rows = verify_extremality(hi, lo);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.ok;
  if (fmt == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"d", r.d},
                     {"argmax", format_hvector(r.argmax)},
                     {"max_genus", r.max_genus},
                     {"g_extremal", r.g_extremal},
                     {"ok", r.ok}});
    }
    out << ordered_json{{"rows", arr}, {"ok", ok}}.dump() << '\n';
  } else if (fmt == Format::Csv) {
    out << "d,argmax,max_genus,g_extremal,ok\n";
    for (const auto& r : rows) {
      out << r.d << ',' << csv_quote(format_hvector(r.argmax)) << ',' << r.max_genus << ','
          << r.g_extremal << ',' << r.ok << '\n';
    }
  } else {
    for (const auto& r : rows) {
      if (!r.ok) {
        out << "d=" << r.d << ": max genus " << r.max_genus << " at " << format_hvector(r.argmax)
            << ", g_extremal " << r.g_extremal << '\n';
      }
    }
    out << (ok ? "max genus = g_extremal for all d" : "mismatch found") << " in " << lo << ".."
        << hi << '\n';
  }
  return ok ? exit_code::kOk : exit_code::kMismatch;
}

// ---- figures -----------------------------------------------------------------

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  body(f);
  f.close();
  if (!f) throw std::runtime_error("failed writing " + path);
}

int cmd_figures(const Args& a, Format fmt, std::ostream& out) {
  Int lo = a.d_min > 0 ? a.d_min : 4;
  Int hi = a.d_max > 0 ? a.d_max : 300;
  require(lo >= 4 && lo < hi && hi <= 2000, "figures need 4 <= d-min < d-max <= 2000");
  Reference ref = a.reference == "bdg" ? Reference::BDG : Reference::B;
  SignGrid g = make_grid(ref, lo, hi);

  std::vector<std::string> written;
  auto emit = [&](const std::string& suffix, void (*writer)(const SignGrid&, std::ostream&)) {
    std::string path = a.out_prefix + suffix;
    write_file(path, [&](std::ostream& os) { writer(g, os); });
    written.push_back(path);
  };
  emit(".csv", write_grid_csv);
  if (a.image == "all" || a.image == "ppm") emit("_sign.ppm", write_sign_ppm);
  if (a.image == "all" || a.image == "pgm") emit("_mag.pgm", write_magnitude_pgm);

  if (fmt == Format::Json) {
    out << ordered_json{{"reference", to_string(ref)},
                        {"d_min", lo},
                        {"d_max", hi},
                        {"max_magnitude", g.max_magnitude()},
                        {"files", written}}
               .dump()
        << '\n';
  } else {
    for (const auto& p : written) out << p << '\n';
  }
  return exit_code::kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Intersection bounds for pairs of curves in P^4", "curvebounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("--d1", a.d1, "Degree of the first curve")->required();
    cmd->add_option("--d2", a.d2, "Degree of the second curve")->required();
  };

  CLI::App* bound = app.add_subcommand("bound", "All bounds and their provenance for a pair");
  add_pair(bound);

  CLI::App* hvec = app.add_subcommand("hvec", "h-vector tools");
  hvec->require_subcommand(1);
  CLI::App* genus = hvec->add_subcommand("genus", "Genus of an h-vector");
  genus->add_option("hvector", a.hvector, "Comma-separated entries, starting with 1")->required();
  genus->add_option("--k", a.k, "Rao defect subtracted from the genus")->check(CLI::NonNegativeNumber);
  CLI::App* enumerate = hvec->add_subcommand("enumerate", "Admissible h-vectors of a degree");
  enumerate->add_option("--d", a.d, "Degree")->required();
  CLI::App* extremal = hvec->add_subcommand("extremal", "Extremal h-vector of a degree");
  extremal->add_option("--d", a.d, "Degree")->required();

  CLI::App* surface = app.add_subcommand("surface", "Intersections on cubic and quartic surfaces");
  surface->require_subcommand(1);
  CLI::App* scroll = surface->add_subcommand("scroll", "Maximize over the smooth cubic scroll");
  add_pair(scroll);
  CLI::App* cone = surface->add_subcommand("cone", "Bound on the cubic cone");
  add_pair(cone);
  cone->add_option("--vertex1", a.vertex1, "First curve passes through the vertex");
  cone->add_option("--vertex2", a.vertex2, "Second curve passes through the vertex");
  CLI::App* delpezzo = surface->add_subcommand("delpezzo", "Extremal pair on the quartic del Pezzo");
  delpezzo->add_option("--k", a.k, "First curve has degree 2k+1")->required();
  delpezzo->add_option("--l", a.l, "Second curve has degree 2l+1")->required();

  CLI::App* verify = app.add_subcommand("verify", "Exhaustive consistency checks");
  verify->require_subcommand(1);
  CLI::App* cases = verify->add_subcommand("cases", "Case polynomials and thresholds");
  cases->add_option("--max", a.max, "Largest degree checked");
  CLI::App* table1 = verify->add_subcommand("table1", "Compare against the printed table");
  CLI::App* acm = verify->add_subcommand("acm-sweep", "Regularity certificate sweep");
  acm->add_option("--d-min", a.d_min, "Smallest degree");
  acm->add_option("--d-max", a.d_max, "Largest degree");
  CLI::App* extremality = verify->add_subcommand("extremality", "Brute-force maximal genus");
  extremality->add_option("--max", a.max, "Largest degree");
  extremality->add_option("--d-min", a.d_min, "Smallest degree");

  CLI::App* figures = app.add_subcommand("figures", "Sign and magnitude grids of b_g - reference");
  figures->add_option("--reference", a.reference, "Reference bound")
      ->check(CLI::IsMember({"bdg", "b"}));
  figures->add_option("--d-min", a.d_min, "Smallest degree");
  figures->add_option("--d-max", a.d_max, "Largest degree");
  figures->add_option("--out-prefix", a.out_prefix, "Output path prefix");
  figures->add_option("--image", a.image, "Images to write")
      ->check(CLI::IsMember({"all", "none", "pgm", "ppm"}));

  for (CLI::App* sub : {bound, hvec, genus, enumerate, extremal, surface, scroll, cone, delpezzo,
                        verify, cases, table1, acm, extremality, figures}) {
    sub->fallthrough();
  }

  std::vector<const char*> argv{"curvebounds"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  Format fmt = format_of(a.format);
  try {
    if (*bound) return cmd_bound(a, fmt, out);
    if (*genus) return cmd_hvec_genus(a, fmt, out);
    if (*enumerate) return cmd_hvec_enumerate(a, fmt, out);
    if (*extremal) return cmd_hvec_extremal(a, fmt, out);
    if (*scroll) return cmd_scroll(a, fmt, out);
    if (*cone) return cmd_cone(a, fmt, out);
    if (*delpezzo) return cmd_delpezzo(a, fmt, out);
    if (*cases) return cmd_verify_cases(a, fmt, out);
    if (*table1) return cmd_verify_table1(fmt, out);
    if (*acm) return cmd_verify_acm(a, fmt, out);
    if (*extremality) return cmd_verify_extremality(a, fmt, out);
    if (*figures) return cmd_figures(a, fmt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  err << app.help();
  return exit_code::kUsage;
}

}  // namespace curvebounds
