#include <ostream>
#include <string>

#include <json.hpp>

#include "curvebounds/cli.hpp"

namespace curvebounds {

namespace {

// Plain netpbm readers expect lines of at most 70 characters.
class WrappedWriter {
 public:
  explicit WrappedWriter(std::ostream& os) : os_(os) {}
  void put(Int v) {
    std::string tok = std::to_string(v);
    if (col_ > 0 && col_ + 1 + tok.size() > 70) {
      os_ << '\n';
      col_ = 0;
    }
    if (col_ > 0) {
      os_ << ' ';
      ++col_;
    }
    os_ << tok;
    col_ += tok.size();
  }
  void end_row() {
    if (col_ > 0) os_ << '\n';
    col_ = 0;
  }

 private:
  std::ostream& os_;
  std::size_t col_ = 0;
};

void header(std::ostream& os, const char* magic, const SignGrid& g) {
  os << magic << '\n' << g.side() << ' ' << g.side() << '\n' << 255 << '\n';
}

}  // namespace

void write_sign_ppm(const SignGrid& g, std::ostream& os) {
  header(os, "P3", g);
  Int positive_green = g.reference == Reference::B ? 255 : 0;
  WrappedWriter w(os);
  for (Int d2 = g.d_min; d2 <= g.d_max; ++d2) {
    for (Int d1 = g.d_min; d1 <= g.d_max; ++d1) {
      int s = g.at(d1, d2).sign;
      if (s < 0) {
        w.put(0), w.put(0), w.put(255);
      } else if (s > 0) {
        w.put(255), w.put(positive_green), w.put(0);
      } else {
        w.put(0), w.put(0), w.put(0);
      }
    }
    w.end_row();
  }
}

void write_magnitude_pgm(const SignGrid& g, std::ostream& os) {
  header(os, "P2", g);
  Int peak = g.max_magnitude();
  WrappedWriter w(os);
  for (Int d2 = g.d_min; d2 <= g.d_max; ++d2) {
    for (Int d1 = g.d_min; d1 <= g.d_max; ++d1) {
      Int m = g.at(d1, d2).magnitude;
      // Round half up; an all-zero grid stays black.
      w.put(peak == 0 ? 0 : (2 * 255 * m + peak) / (2 * peak));
    }
    w.end_row();
  }
}

void write_grid_csv(const SignGrid& g, std::ostream& os) {
  os << "d1,d2,b_dg,b,b_g,sign,magnitude\n";
  for (Int d2 = g.d_min; d2 <= g.d_max; ++d2) {
    for (Int d1 = g.d_min; d1 <= g.d_max; ++d1) {
      DegreePair p(d1, d2);
      const GridCell& c = g.at(d1, d2);
      os << d1 << ',' << d2 << ',' << b_dg(p) << ',' << b(p) << ',' << b_g(p) << ',' << c.sign
         << ',' << c.magnitude << '\n';
    }
  }
}

std::string report_json(const BoundReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["d1"] = r.pair.d1;
  j["d2"] = r.pair.d2;
  j["b"] = r.values.b;
  j["b_g"] = r.values.b_g;
  j["b_dg"] = r.values.b_dg;
  j["trivial"] = r.values.trivial;
  j["g_extremal_of_sum"] = r.values.g_extremal_of_sum;
  j["best_proved"] = r.best_proved;
  j["b_attained_on_cubic"] = r.b_attained_on_cubic;
  ordered_json prov = ordered_json::array();
  for (const Provenance& p : r.provenance) {
    ordered_json e;
    e["result_id"] = to_string(p.id);
    e["hypothesis"] = p.hypothesis;
    e["bound"] = p.bound;
    e["strict"] = p.strict;
    e["conditional"] = p.conditional;
    e["binding"] = p.binding;
    prov.push_back(std::move(e));
  }
  j["provenance"] = std::move(prov);
  j["flags"] = r.flags;
  return j.dump();
}

}  // namespace curvebounds
