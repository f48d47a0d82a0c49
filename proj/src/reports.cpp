#include "qring/reports.hpp"

#include <sstream>

#include <json.hpp>

#include "qring/error.hpp"
#include "qring/io.hpp"
#include "qring/linearize.hpp"
#include "qring/projectives.hpp"

namespace qring {

  using nlohmann::ordered_json;

  namespace {
    std::string dump(ordered_json const& j) {
      return j.dump(2) + "\n";
    }

    std::string pad(std::string const& s, std::size_t width) {
      std::size_t len = utf8_length(s);
      return len >= width ? s : s + std::string(width - len, ' ');
    }

    std::string kinds_of(PieObject const& o) {
      std::string k(1, kind_letter(o.kind));
      if (o.kind == PieKind::E && o.is_p) {
        k += "=P";
      }
      if (o.kind == PieKind::E && o.is_i) {
        k += "=I";
      }
      return k;
    }

    std::vector<std::size_t> fiber_sizes(QuiverOverQ const& x) {
      std::vector<std::size_t> r;
      for (std::size_t v = 0; v < x.base().num_vertices(); ++v) {
        r.push_back(x.fiber(v).size());
      }
      return r;
    }

    std::string join(std::vector<std::size_t> const& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s;
    }

    std::size_t object_arg(PieCategory const& c, std::string const& name) {
      auto i = c.find(name);
      if (!i) {
        throw InvalidInput("no PIE object named '" + name + "'");
      }
      return *i;
    }

    ordered_json matrix_json(IntMatrix const& m) {
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
          row.push_back(m(i, j));
        }
        rows.push_back(row);
      }
      return rows;
    }

    ordered_json element_json(PieCategory const& c, PieElement const& el) {
      ordered_json out = ordered_json::object();
      for (std::size_t i = 0; i < el.size(); ++i) {
        if (el[i] != 0) {
          out[c.object(i).name] = el[i];
        }
      }
      return out;
    }
  }  // namespace

  std::string report_validate(QuiverSpec const& spec, Format f) {
    auto rep = validate(spec);
    if (f == Format::json) {
      ordered_json j;
      j["valid"]    = rep.valid();
      j["acyclic"]  = rep.acyclic;
      j["problems"] = rep.problems;
      return dump(j);
    }
    std::ostringstream os;
    os << "valid: " << (rep.valid() ? "yes" : "no") << "\n";
    os << "acyclic: " << (rep.acyclic ? "yes" : "no") << "\n";
    for (auto const& p : rep.problems) {
      os << "problem: " << p << "\n";
    }
    return os.str();
  }

  std::string report_paths(Quiver const& q, std::string const& x, std::string const& y, Format f) {
    auto paths = enumerate_paths(q, q.vertex_index(x), q.vertex_index(y));
    if (f == Format::json) {
      ordered_json j;
      j["from"]  = x;
      j["to"]    = y;
      j["count"] = paths.size();
      j["paths"] = ordered_json::array();
      for (auto const& p : paths) {
        std::vector<std::string> names;
        for (std::size_t a : p.arrows) {
          names.push_back(q.arrow(a).name);
        }
        j["paths"].push_back({{"arrows", names}, {"text", path_to_string(q, p)}});
      }
      return dump(j);
    }
    std::ostringstream os;
    os << paths.size() << (paths.size() == 1 ? " path" : " paths") << " from " << x << " to " << y
       << "\n";
    for (auto const& p : paths) {
      os << "  " << path_to_string(q, p) << "\n";
    }
    return os.str();
  }

  std::string projective_sum(Quiver const& q, std::vector<std::int64_t> const& coeffs) {
    std::string out;
    for (std::size_t w = 0; w < coeffs.size(); ++w) {
      std::int64_t c = coeffs[w];
      if (c == 0) {
        continue;
      }
      if (!out.empty()) {
        out += c < 0 ? " - " : " + ";
      } else if (c < 0) {
        out += "-";
      }
      std::int64_t mag = c < 0 ? -c : c;
      if (mag != 1) {
        out += std::to_string(mag) + "·";
      }
      out += "P(" + q.vertex_name(w) + ")";
    }
    return out.empty() ? "0" : out;
  }

  std::string report_tensor_proj(Quiver const& q, std::string const& x, std::string const& y, Format f) {
    ProjectiveRing ring(q);
    auto           c   = ring.tensor_projectives(q.vertex_index(x), q.vertex_index(y));
    std::string    sum = projective_sum(q, c);
    if (f == Format::json) {
      ordered_json j;
      j["x"]              = x;
      j["y"]              = y;
      j["multiplicities"] = ordered_json::object();
      for (std::size_t w = 0; w < c.size(); ++w) {
        j["multiplicities"][q.vertex_name(w)] = c[w];
      }
      j["decomposition"] = sum;
      return dump(j);
    }
    return "P(" + x + ") ⊗ P(" + y + ") = " + sum + "\n";
  }

  std::string report_pie_list(PieCategory const& c, Format f) {
    Quiver const& q = c.base();
    if (f == Format::json) {
      ordered_json j;
      j["count"]   = c.size();
      j["objects"] = ordered_json::array();
      for (auto const& o : c.objects()) {
        std::vector<std::string> kinds;
        if (o.is_p) kinds.push_back("P");
        if (o.is_i) kinds.push_back("I");
        if (o.is_e) kinds.push_back("E");
        std::vector<std::string> verts, arrs;
        for (std::size_t v : o.support.vertices) verts.push_back(q.vertex_name(v));
        for (std::size_t a : o.support.arrows) arrs.push_back(q.arrow(a).name);
        ordered_json fibers = ordered_json::object();
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
          fibers[q.vertex_name(v)] = o.realization.fiber(v).size();
        }
        j["objects"].push_back({{"name", o.name},
                                {"kind", std::string(1, kind_letter(o.kind))},
                                {"kinds", kinds},
                                {"support", {{"vertices", verts}, {"arrows", arrs}}},
                                {"fibers", fibers}});
      }
      return dump(j);
    }
    std::size_t name_w = 6, support_w = 7;
    for (auto const& o : c.objects()) {
      name_w    = std::max(name_w, utf8_length(o.name));
      support_w = std::max(support_w, utf8_length(subquiver_name(q, o.support)));
    }
    std::ostringstream os;
    os << c.size() << " objects\n";
    std::string order;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      order += (v ? "," : "") + q.vertex_name(v);
    }
    os << pad("#", 4) << pad("object", name_w + 2) << pad("kind", 7) << pad("support", support_w + 2)
       << "fibers (" << order << ")\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto const& o = c.object(i);
      os << pad(std::to_string(i), 4) << pad(o.name, name_w + 2) << pad(kinds_of(o), 7)
         << pad(subquiver_name(q, o.support), support_w + 2) << join(fiber_sizes(o.realization))
         << "\n";
    }
    return os.str();
  }

  std::string report_pie_mobius(PieCategory const& c, Format f) {
    auto const& cat = c.category();
    if (f == Format::json) {
      ordered_json j;
      j["objects"] = cat.names();
      j["hom"]     = matrix_json(cat.hom_matrix());
      j["moebius"] = matrix_json(cat.moebius_matrix());
      return dump(j);
    }
    return "Hom matrix\n" + matrix_csv(cat.names(), cat.hom_matrix()) + "\nMoebius matrix\n"
           + matrix_csv(cat.names(), cat.moebius_matrix());
  }

  std::string report_pie_idempotents(PieCategory const& c, Format f) {
    if (f == Format::json) {
      ordered_json j;
      j["idempotents"] = ordered_json::array();
      for (std::size_t x = 0; x < c.size(); ++x) {
        auto e = c.idempotent(x);
        j["idempotents"].push_back({{"object", c.object(x).name},
                                    {"text", c.format(e, x)},
                                    {"coefficients", element_json(c, e)}});
      }
      j["identity"] = c.format(c.identity());
      return dump(j);
    }
    std::ostringstream os;
    for (std::size_t x = 0; x < c.size(); ++x) {
      os << "e[" << c.object(x).name << "] = " << c.format(c.idempotent(x), x) << "\n";
    }
    os << "sum = " << c.format(c.identity()) << "\n";
    return os.str();
  }

  std::string report_pie_product(PieCategory const& c, std::string const& x, std::string const& y, Format f) {
    std::size_t xi    = object_arg(c, x);
    std::size_t yi    = object_arg(c, y);
    auto        comps = c.structure_constants(xi, yi);
    auto        prod  = c.multiply(c.basis_element(xi), c.basis_element(yi));
    std::string lhs   = c.object(xi).name + " ×_Q " + c.object(yi).name;
    if (f == Format::json) {
      ordered_json j;
      j["x"]          = c.object(xi).name;
      j["y"]          = c.object(yi).name;
      j["components"] = ordered_json::array();
      for (std::size_t w : comps) {
        j["components"].push_back(c.object(w).name);
      }
      j["product"] = element_json(c, prod);
      j["text"]    = c.format(prod);
      return dump(j);
    }
    std::ostringstream os;
    os << lhs << " = " << c.format(prod) << "\n";
    os << comps.size() << (comps.size() == 1 ? " component" : " components") << "\n";
    for (std::size_t w : comps) {
      os << "  " << c.object(w).name << "\n";
    }
    return os.str();
  }

  std::string report_linearize(QuiverOverQ const& x, Format f) {
    Representation r = linearization(x);
    if (f == Format::json) {
      return representation_to_json(r);
    }
    Quiver const&      q = r.base();
    std::ostringstream os;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      os << "dim " << q.vertex_name(v) << " = " << r.dim(v);
      if (r.has_basis() && r.dim(v) > 0) {
        os << "  basis";
        for (auto const& b : r.basis(v)) {
          os << " " << b;
        }
      }
      os << "\n";
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      IntMatrix const& m = r.matrix(a);
      os << q.arrow(a).name << ": " << q.vertex_name(q.arrow(a).source) << " -> "
         << q.vertex_name(q.arrow(a).target) << "  " << m.rows() << "x" << m.cols() << "\n";
      for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
          os << (j ? " " : "") << m(i, j);
        }
        os << "]\n";
      }
    }
    return os.str();
  }

  std::string report_verify(std::vector<SuiteResult> const& results, Format f) {
    bool ok = all_passed(results);
    if (f == Format::json) {
      ordered_json j;
      j["passed"] = ok;
      j["suites"] = ordered_json::array();
      for (auto const& r : results) {
        j["suites"].push_back({{"suite", r.suite},
                               {"passed", r.passed()},
                               {"checks", r.checks},
                               {"failed", r.failed},
                               {"counterexamples", r.examples},
                               {"note", r.note}});
      }
      return dump(j);
    }
    std::ostringstream os;
    for (auto const& r : results) {
      os << pad(r.suite, 17) << (r.passed() ? "PASS" : "FAIL") << "  " << r.checks << " checks";
      if (r.failed > 0) {
        os << ", " << r.failed << " failed";
      }
      if (!r.note.empty()) {
        os << "  (" << r.note << ")";
      }
      os << "\n";
      for (auto const& e : r.examples) {
        os << "  counterexample: " << e << "\n";
      }
    }
    os << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return os.str();
  }

}  // namespace qring
