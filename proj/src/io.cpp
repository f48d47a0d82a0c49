#include "qring/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qring/error.hpp"

namespace qring {

  using nlohmann::json;
  using nlohmann::ordered_json;

  namespace {
    json parse(std::string const& text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
      }
    }

    std::string string_field(json const& obj, char const* key, std::string const& where) {
      auto it = obj.find(key);
      if (it == obj.end() || !it->is_string()) {
        throw InvalidInput(where + ": field \"" + key + "\" must be a string");
      }
      return it->get<std::string>();
    }

    QuiverSpec spec_from(json const& doc, std::string const& where) {
      if (!doc.is_object()) {
        throw InvalidInput(where + ": expected a JSON object");
      }
      QuiverSpec spec;
      auto       vs = doc.find("vertices");
      if (vs == doc.end() || !vs->is_array()) {
        throw InvalidInput(where + ": \"vertices\" must be an array of strings");
      }
      for (auto const& v : *vs) {
        if (!v.is_string()) {
          throw InvalidInput(where + ": \"vertices\" must be an array of strings");
        }
        spec.vertices.push_back(v.get<std::string>());
      }
      auto as = doc.find("arrows");
      if (as == doc.end()) {
        return spec;
      }
      if (!as->is_array()) {
        throw InvalidInput(where + ": \"arrows\" must be an array");
      }
      for (auto const& a : *as) {
        if (!a.is_object()) {
          throw InvalidInput(where + ": each arrow must be an object");
        }
        spec.arrows.push_back({string_field(a, "name", where), string_field(a, "from", where),
                               string_field(a, "to", where)});
      }
      return spec;
    }

    ordered_json quiver_json(Quiver const& q) {
      ordered_json out;
      out["vertices"] = q.vertex_names();
      out["arrows"]   = ordered_json::array();
      for (auto const& a : q.arrows()) {
        out["arrows"].push_back({{"name", a.name},
                                 {"from", q.vertex_name(a.source)},
                                 {"to", q.vertex_name(a.target)}});
      }
      return out;
    }

    Quiver checked_quiver(QuiverSpec const& spec, std::string const& where) {
      auto report = validate(spec);
      if (!report.valid()) {
        throw InvalidInput(where + ": " + report.problems.front());
      }
      return Quiver(spec);
    }
  }  // namespace

  QuiverSpec parse_quiver_spec(std::string const& text) {
    return spec_from(parse(text), "quiver");
  }

  std::string quiver_to_json(Quiver const& q, int indent) {
    if (indent < 0) {
      return quiver_json(q).dump();
    }
    return quiver_json(q).dump(indent) + "\n";
  }

  QuiverOverQ parse_quiver_over_q(std::string const& text) {
    json doc = parse(text);
    if (!doc.is_object() || !doc.contains("base") || !doc.contains("total")) {
      throw InvalidInput("quiver over Q: expected \"base\" and \"total\"");
    }
    auto   base  = std::make_shared<Quiver const>(checked_quiver(spec_from(doc["base"], "base"), "base"));
    Quiver total = checked_quiver(spec_from(doc["total"], "total"), "total");

    auto labels = [&](char const* key, std::size_t count, auto name_of, auto lookup) {
      auto it = doc.find(key);
      if (it == doc.end() || !it->is_object()) {
        throw InvalidInput(std::string("quiver over Q: \"") + key + "\" must be an object");
      }
      std::vector<std::size_t> out(count);
      for (std::size_t i = 0; i < count; ++i) {
        auto entry = it->find(name_of(i));
        if (entry == it->end() || !entry->is_string()) {
          throw InvalidInput(std::string("quiver over Q: no ") + key + " entry for '" + name_of(i)
                             + "'");
        }
        auto target = lookup(entry->template get<std::string>());
        if (!target) {
          throw InvalidInput(std::string("quiver over Q: ") + key + " of '" + name_of(i)
                             + "' is not in the base");
        }
        out[i] = *target;
      }
      return out;
    };
    auto vl = labels(
        "vertexLabel", total.num_vertices(), [&](std::size_t v) { return total.vertex_name(v); },
        [&](std::string const& s) { return base->find_vertex(s); });
    auto al = labels(
        "arrowLabel", total.num_arrows(), [&](std::size_t a) { return total.arrow(a).name; },
        [&](std::string const& s) { return base->find_arrow(s); });
    return QuiverOverQ(base, std::move(total), std::move(vl), std::move(al));
  }

  std::string quiver_over_q_to_json(QuiverOverQ const& x) {
    ordered_json out;
    out["base"]        = quiver_json(x.base());
    out["total"]       = quiver_json(x.total());
    out["vertexLabel"] = ordered_json::object();
    out["arrowLabel"]  = ordered_json::object();
    for (std::size_t v = 0; v < x.total().num_vertices(); ++v) {
      out["vertexLabel"][x.total().vertex_name(v)] = x.base().vertex_name(x.vertex_label(v));
    }
    for (std::size_t a = 0; a < x.total().num_arrows(); ++a) {
      out["arrowLabel"][x.total().arrow(a).name] = x.base().arrow(x.arrow_label(a)).name;
    }
    return out.dump(2) + "\n";
  }

  std::string representation_to_json(Representation const& r) {
    Quiver const& q = r.base();
    ordered_json  out;
    out["dims"] = ordered_json::object();
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      out["dims"][q.vertex_name(v)] = r.dim(v);
    }
    if (r.has_basis()) {
      out["basis"] = ordered_json::object();
      for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        out["basis"][q.vertex_name(v)] = r.basis(v);
      }
    }
    out["matrices"] = ordered_json::object();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      IntMatrix const& m    = r.matrix(a);
      ordered_json     rows = ordered_json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
          row.push_back(m(i, j));
        }
        rows.push_back(row);
      }
      out["matrices"][q.arrow(a).name] = rows;
    }
    return out.dump(2) + "\n";
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InvalidInput("cannot read '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

}  // namespace qring
