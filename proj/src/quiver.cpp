#include "qring/quiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "qring/error.hpp"

namespace qring {

  namespace {

    struct DisjointSets {
      explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t(0));
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
      }
      std::vector<std::size_t> parent;
    };

    bool sorted_contains(std::vector<std::size_t> const& v, std::size_t x) {
      return std::binary_search(v.begin(), v.end(), x);
    }

    // Kahn's algorithm with a min-heap so ties go to the earliest index.
    std::vector<std::size_t>
    kahn(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& edges) {
      std::vector<std::size_t>              indeg(n, 0);
      std::vector<std::vector<std::size_t>> succ(n);
      for (auto [s, t] : edges) {
        succ[s].push_back(t);
        ++indeg[t];
      }
      std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
      for (std::size_t v = 0; v < n; ++v) {
        if (indeg[v] == 0) {
          ready.push(v);
        }
      }
      std::vector<std::size_t> order;
      while (!ready.empty()) {
        std::size_t v = ready.top();
        ready.pop();
        order.push_back(v);
        for (std::size_t w : succ[v]) {
          if (--indeg[w] == 0) {
            ready.push(w);
          }
        }
      }
      return order;
    }

  }  // namespace

  ValidationReport validate(QuiverSpec const& spec) {
    ValidationReport                        report;
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
      if (!index.emplace(spec.vertices[i], i).second) {
        report.problems.push_back("duplicate vertex name '" + spec.vertices[i] + "'");
      }
    }
    std::unordered_set<std::string>                   arrow_names;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto const& a : spec.arrows) {
      if (!arrow_names.insert(a.name).second) {
        report.problems.push_back("duplicate arrow name '" + a.name + "'");
      }
      auto s = index.find(a.from);
      auto t = index.find(a.to);
      if (s == index.end()) {
        report.problems.push_back("arrow '" + a.name + "' starts at unknown vertex '" + a.from
                                  + "'");
      }
      if (t == index.end()) {
        report.problems.push_back("arrow '" + a.name + "' ends at unknown vertex '" + a.to + "'");
      }
      if (s != index.end() && t != index.end()) {
        edges.emplace_back(s->second, t->second);
      }
    }
    report.acyclic = kahn(spec.vertices.size(), edges).size() == spec.vertices.size();
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quiver
  ////////////////////////////////////////////////////////////////////////

  Quiver::Quiver(QuiverSpec const& spec) {
    auto report = validate(spec);
    if (!report.valid()) {
      std::string msg = "invalid quiver:";
      for (auto const& p : report.problems) {
        msg += " " + p + ";";
      }
      msg.pop_back();
      throw InvalidInput(msg);
    }
    _vertices = spec.vertices;
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < _vertices.size(); ++i) {
      index[_vertices[i]] = i;
    }
    for (auto const& a : spec.arrows) {
      _arrows.push_back({a.name, index.at(a.from), index.at(a.to)});
    }
    this->index();
  }

  Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
      : _vertices(std::move(vertex_names)), _arrows(std::move(arrows)) {
    std::unordered_set<std::string> seen;
    for (auto const& v : _vertices) {
      if (!seen.insert(v).second) {
        throw InvalidInput("duplicate vertex name '" + v + "'");
      }
    }
    seen.clear();
    for (auto const& a : _arrows) {
      if (!seen.insert(a.name).second) {
        throw InvalidInput("duplicate arrow name '" + a.name + "'");
      }
      if (a.source >= _vertices.size() || a.target >= _vertices.size()) {
        throw InvalidInput("arrow '" + a.name + "' has an endpoint out of range");
      }
    }
    index();
  }

  void Quiver::index() {
    _out.assign(_vertices.size(), {});
    _in.assign(_vertices.size(), {});
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < _arrows.size(); ++a) {
      _out[_arrows[a].source].push_back(a);
      _in[_arrows[a].target].push_back(a);
      edges.emplace_back(_arrows[a].source, _arrows[a].target);
    }
    _topo = kahn(_vertices.size(), edges);
  }

  std::optional<std::size_t> Quiver::find_vertex(std::string const& name) const {
    auto it = std::find(_vertices.begin(), _vertices.end(), name);
    if (it == _vertices.end()) {
      return std::nullopt;
    }
    return std::size_t(it - _vertices.begin());
  }

  std::optional<std::size_t> Quiver::find_arrow(std::string const& name) const {
    for (std::size_t a = 0; a < _arrows.size(); ++a) {
      if (_arrows[a].name == name) {
        return a;
      }
    }
    return std::nullopt;
  }

  std::size_t Quiver::vertex_index(std::string const& name) const {
    auto v = find_vertex(name);
    if (!v) {
      throw InvalidInput("no vertex named '" + name + "'");
    }
    return *v;
  }

  std::vector<std::size_t> const& Quiver::topological_order() const {
    if (!is_acyclic()) {
      throw InvalidInput("quiver has an oriented cycle");
    }
    return _topo;
  }

  QuiverSpec Quiver::to_spec() const {
    QuiverSpec spec;
    spec.vertices = _vertices;
    for (auto const& a : _arrows) {
      spec.arrows.push_back({a.name, _vertices[a.source], _vertices[a.target]});
    }
    return spec;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subquivers
  ////////////////////////////////////////////////////////////////////////

  bool Subquiver::contains_vertex(std::size_t v) const {
    return sorted_contains(vertices, v);
  }

  bool Subquiver::contains_arrow(std::size_t a) const {
    return sorted_contains(arrows, a);
  }

  bool Subquiver::is_subset_of(Subquiver const& that) const {
    return std::includes(that.vertices.begin(), that.vertices.end(), vertices.begin(),
                         vertices.end())
           && std::includes(that.arrows.begin(), that.arrows.end(), arrows.begin(),
                            arrows.end());
  }

  bool support_less(Subquiver const& a, Subquiver const& b) {
    if (a.vertices.size() != b.vertices.size()) {
      return a.vertices.size() < b.vertices.size();
    }
    if (a.arrows.size() != b.arrows.size()) {
      return a.arrows.size() < b.arrows.size();
    }
    return a < b;
  }

  Subquiver full_subquiver(Quiver const& q) {
    Subquiver s;
    s.vertices.resize(q.num_vertices());
    std::iota(s.vertices.begin(), s.vertices.end(), std::size_t(0));
    s.arrows.resize(q.num_arrows());
    std::iota(s.arrows.begin(), s.arrows.end(), std::size_t(0));
    return s;
  }

  bool is_closed(Quiver const& q, Subquiver const& s) {
    return std::all_of(s.arrows.begin(), s.arrows.end(), [&](std::size_t a) {
      return a < q.num_arrows() && s.contains_vertex(q.arrow(a).source)
             && s.contains_vertex(q.arrow(a).target);
    });
  }

  bool is_connected(Quiver const& q, Subquiver const& s) {
    if (s.vertices.empty()) {
      return false;
    }
    DisjointSets ds(q.num_vertices());
    std::size_t  pieces = s.vertices.size();
    for (std::size_t a : s.arrows) {
      if (ds.unite(q.arrow(a).source, q.arrow(a).target)) {
        --pieces;
      }
    }
    return pieces == 1;
  }

  std::vector<std::size_t> sources(Quiver const& q, Subquiver const& s) {
    std::vector<std::size_t> result;
    for (std::size_t v : s.vertices) {
      bool has_in = std::any_of(q.in_arrows(v).begin(), q.in_arrows(v).end(),
                                [&](std::size_t a) { return s.contains_arrow(a); });
      if (!has_in) {
        result.push_back(v);
      }
    }
    return result;
  }

  std::vector<std::size_t> sinks(Quiver const& q, Subquiver const& s) {
    std::vector<std::size_t> result;
    for (std::size_t v : s.vertices) {
      bool has_out = std::any_of(q.out_arrows(v).begin(), q.out_arrows(v).end(),
                                 [&](std::size_t a) { return s.contains_arrow(a); });
      if (!has_out) {
        result.push_back(v);
      }
    }
    return result;
  }

  Quiver as_quiver(Quiver const& q, Subquiver const& s) {
    std::vector<std::string> names;
    std::vector<std::size_t> renumber(q.num_vertices(), 0);
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      renumber[s.vertices[i]] = i;
      names.push_back(q.vertex_name(s.vertices[i]));
    }
    std::vector<Arrow> arrows;
    for (std::size_t a : s.arrows) {
      auto const& arr = q.arrow(a);
      arrows.push_back({arr.name, renumber[arr.source], renumber[arr.target]});
    }
    return Quiver(std::move(names), std::move(arrows));
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  bool is_valid_path(Quiver const& q, Path const& p) {
    if (p.start >= q.num_vertices()) {
      return false;
    }
    std::size_t at = p.start;
    for (std::size_t a : p.arrows) {
      if (a >= q.num_arrows() || q.arrow(a).source != at) {
        return false;
      }
      at = q.arrow(a).target;
    }
    return true;
  }

  namespace {
    void extend_paths(Quiver const&       q,
                      Subquiver const*    s,
                      std::size_t         at,
                      std::size_t         y,
                      Path&               current,
                      std::vector<Path>&  out) {
      if (at == y) {
        out.push_back(current);
      }
      for (std::size_t a : q.out_arrows(at)) {
        if (s != nullptr && !s->contains_arrow(a)) {
          continue;
        }
        current.arrows.push_back(a);
        extend_paths(q, s, q.arrow(a).target, y, current, out);
        current.arrows.pop_back();
      }
    }

    void require_acyclic(Quiver const& q) {
      if (!q.is_acyclic()) {
        throw InvalidInput("path set may be infinite: quiver has an oriented cycle");
      }
    }

    void require_vertex(Quiver const& q, std::size_t v) {
      if (v >= q.num_vertices()) {
        throw InvalidInput("vertex index " + std::to_string(v) + " out of range");
      }
    }
  }  // namespace

  std::vector<Path> enumerate_paths(Quiver const& q, std::size_t x, std::size_t y) {
    require_acyclic(q);
    require_vertex(q, x);
    require_vertex(q, y);
    std::vector<Path> out;
    Path              current{x, {}};
    extend_paths(q, nullptr, x, y, current, out);
    return out;
  }

  std::vector<Path>
  enumerate_paths(Quiver const& q, Subquiver const& s, std::size_t x, std::size_t y) {
    require_acyclic(q);
    require_vertex(q, x);
    require_vertex(q, y);
    std::vector<Path> out;
    if (!s.contains_vertex(x) || !s.contains_vertex(y)) {
      return out;
    }
    Path current{x, {}};
    extend_paths(q, &s, x, y, current, out);
    return out;
  }

  PathCountMatrix path_count_matrix(Quiver const& q) {
    auto const&     topo = q.topological_order();
    std::size_t     n    = q.num_vertices();
    PathCountMatrix n_xy(n);
    for (std::size_t x = 0; x < n; ++x) {
      n_xy(x, x) = 1;
      for (std::size_t z : topo) {
        if (z == x) {
          continue;
        }
        std::int64_t total = 0;
        for (std::size_t a : q.in_arrows(z)) {
          total = checked_add(total, n_xy(x, q.arrow(a).source));
        }
        n_xy(x, z) = total;
      }
    }
    return n_xy;
  }

  std::int64_t count_paths(Quiver const& q, Subquiver const& s, std::size_t x, std::size_t y) {
    auto const& topo = q.topological_order();
    if (!s.contains_vertex(x) || !s.contains_vertex(y)) {
      return 0;
    }
    std::vector<std::int64_t> count(q.num_vertices(), 0);
    count[x] = 1;
    for (std::size_t z : topo) {
      if (z == x || !s.contains_vertex(z)) {
        continue;
      }
      for (std::size_t a : q.in_arrows(z)) {
        if (s.contains_arrow(a)) {
          count[z] = checked_add(count[z], count[q.arrow(a).source]);
        }
      }
    }
    return count[y];
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration and closures
  ////////////////////////////////////////////////////////////////////////

  std::vector<Subquiver> connected_subquivers(Quiver const& q, std::uint64_t cap) {
    std::size_t const n = q.num_vertices();
    auto              exceeded = [&](std::string const& what) {
      return CapExceeded("subquiver enumeration cap exceeded: " + what + " exceeds the bound of "
                         + std::to_string(cap) + " candidates");
    };
    if (n >= 63 || (std::uint64_t(1) << n) > cap) {
      throw exceeded("2^" + std::to_string(n) + " vertex subsets");
    }
    std::vector<Subquiver> result;
    std::uint64_t          candidates = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      Subquiver region;
      for (std::size_t v = 0; v < n; ++v) {
        if (mask & (std::uint64_t(1) << v)) {
          region.vertices.push_back(v);
        }
      }
      for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        if ((mask >> q.arrow(a).source & 1) && (mask >> q.arrow(a).target & 1)) {
          region.arrows.push_back(a);
        }
      }
      if (!is_connected(q, region)) {
        continue;
      }
      std::size_t k = region.arrows.size();
      if (k >= 63 || (std::uint64_t(1) << k) > cap - std::min(cap, candidates)) {
        throw exceeded("arrow subsets of a region with " + std::to_string(k) + " arrows");
      }
      candidates += std::uint64_t(1) << k;
      for (std::uint64_t amask = 0; amask < (std::uint64_t(1) << k); ++amask) {
        Subquiver s;
        s.vertices = region.vertices;
        for (std::size_t i = 0; i < k; ++i) {
          if (amask & (std::uint64_t(1) << i)) {
            s.arrows.push_back(region.arrows[i]);
          }
        }
        if (is_connected(q, s)) {
          result.push_back(std::move(s));
        }
      }
    }
    std::sort(result.begin(), result.end(), support_less);
    return result;
  }

  namespace {
    Subquiver closure(Quiver const& q, Subquiver const& s, std::size_t i, bool forward) {
      if (!s.contains_vertex(i)) {
        throw InvalidInput("vertex '" + q.vertex_name(i) + "' is not in the subquiver");
      }
      std::vector<bool>       seen(q.num_vertices(), false);
      std::deque<std::size_t> todo{i};
      seen[i] = true;
      while (!todo.empty()) {
        std::size_t v = todo.front();
        todo.pop_front();
        for (std::size_t a : forward ? q.out_arrows(v) : q.in_arrows(v)) {
          std::size_t w = forward ? q.arrow(a).target : q.arrow(a).source;
          if (s.contains_arrow(a) && !seen[w]) {
            seen[w] = true;
            todo.push_back(w);
          }
        }
      }
      Subquiver result;
      for (std::size_t v : s.vertices) {
        if (seen[v]) {
          result.vertices.push_back(v);
        }
      }
      for (std::size_t a : s.arrows) {
        if (seen[q.arrow(a).source] && seen[q.arrow(a).target]) {
          result.arrows.push_back(a);
        }
      }
      return result;
    }
  }  // namespace

  Subquiver successor_closure(Quiver const& q, Subquiver const& s, std::size_t i) {
    return closure(q, s, i, true);
  }

  Subquiver predecessor_closure(Quiver const& q, Subquiver const& s, std::size_t i) {
    return closure(q, s, i, false);
  }

  Quiver opposite(Quiver const& q) {
    std::vector<Arrow> arrows;
    for (auto const& a : q.arrows()) {
      arrows.push_back({a.name, a.target, a.source});
    }
    return Quiver(q.vertex_names(), std::move(arrows));
  }

  ////////////////////////////////////////////////////////////////////////
  // Names
  ////////////////////////////////////////////////////////////////////////

  std::size_t utf8_length(std::string const& s) {
    return std::count_if(s.begin(), s.end(), [](char c) {
      return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    });
  }

  std::string subquiver_name(Quiver const& q, Subquiver const& s) {
    std::vector<std::string> parts;
    std::vector<bool>        touched(q.num_vertices(), false);
    for (std::size_t a : s.arrows) {
      parts.push_back(q.arrow(a).name);
      touched[q.arrow(a).source] = touched[q.arrow(a).target] = true;
    }
    for (std::size_t v : s.vertices) {
      if (!touched[v]) {
        parts.push_back(q.vertex_name(v));
      }
    }
    bool        short_names = std::all_of(parts.begin(), parts.end(),
                                   [](auto const& p) { return utf8_length(p) == 1; });
    std::string name;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0 && !short_names) {
        name += ",";
      }
      name += parts[i];
    }
    return name;
  }

  std::string path_to_string(Quiver const& q, Path const& p) {
    std::ostringstream os;
    os << q.vertex_name(p.start);
    if (p.is_trivial()) {
      os << " (trivial path)";
    }
    for (std::size_t a : p.arrows) {
      os << " -" << q.arrow(a).name << "-> " << q.vertex_name(q.arrow(a).target);
    }
    return os.str();
  }

}  // namespace qring
