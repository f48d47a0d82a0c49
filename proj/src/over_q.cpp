#include "qring/over_q.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "qring/error.hpp"

namespace qring {

  QuiverOverQ::QuiverOverQ(std::shared_ptr<Quiver const> base,
                           Quiver                        total,
                           std::vector<std::size_t>      vertex_label,
                           std::vector<std::size_t>      arrow_label)
      : _base(std::move(base)),
        _total(std::move(total)),
        _vertex_label(std::move(vertex_label)),
        _arrow_label(std::move(arrow_label)) {
    if (!_base) {
      throw InvalidInput("quiver over Q needs a base quiver");
    }
    if (_vertex_label.size() != _total.num_vertices()
        || _arrow_label.size() != _total.num_arrows()) {
      throw InvalidInput("structure map must label every vertex and arrow");
    }
    _vertex_fiber.assign(_base->num_vertices(), {});
    _arrow_fiber.assign(_base->num_arrows(), {});
    for (std::size_t v = 0; v < _total.num_vertices(); ++v) {
      if (_vertex_label[v] >= _base->num_vertices()) {
        throw InvalidInput("vertex '" + _total.vertex_name(v) + "' has no valid label");
      }
      _vertex_fiber[_vertex_label[v]].push_back(v);
    }
    for (std::size_t a = 0; a < _total.num_arrows(); ++a) {
      if (_arrow_label[a] >= _base->num_arrows()) {
        throw InvalidInput("arrow '" + _total.arrow(a).name + "' has no valid label");
      }
      auto const& mine  = _total.arrow(a);
      auto const& image = _base->arrow(_arrow_label[a]);
      if (_vertex_label[mine.source] != image.source
          || _vertex_label[mine.target] != image.target) {
        throw InvalidInput("label of arrow '" + mine.name
                           + "' is incompatible with the labels of its endpoints");
      }
      _arrow_fiber[_arrow_label[a]].push_back(a);
    }
  }

  bool QuiverOverQ::same_base(QuiverOverQ const& that) const {
    return _base == that._base || (_base && that._base && *_base == *that._base);
  }

  namespace {

    void require_same_base(QuiverOverQ const& x, QuiverOverQ const& y) {
      if (!x.same_base(y)) {
        throw InvalidInput("quivers are not over the same base");
      }
    }

    // Assignment order for backtracking: breadth first over the underlying
    // graph so each vertex after the first of its component has an assigned
    // neighbour.
    std::vector<std::size_t> search_order(Quiver const& q) {
      std::vector<std::size_t> order;
      std::vector<bool>        seen(q.num_vertices(), false);
      for (std::size_t root = 0; root < q.num_vertices(); ++root) {
        if (seen[root]) {
          continue;
        }
        std::deque<std::size_t> todo{root};
        seen[root] = true;
        while (!todo.empty()) {
          std::size_t v = todo.front();
          todo.pop_front();
          order.push_back(v);
          auto visit = [&](std::size_t w) {
            if (!seen[w]) {
              seen[w] = true;
              todo.push_back(w);
            }
          };
          for (std::size_t a : q.out_arrows(v)) {
            visit(q.arrow(a).target);
          }
          for (std::size_t a : q.in_arrows(v)) {
            visit(q.arrow(a).source);
          }
        }
      }
      return order;
    }

    // For each position k in the order, the arrows whose later endpoint is
    // order[k].
    std::vector<std::vector<std::size_t>> arrows_closed_at(Quiver const&                   q,
                                                           std::vector<std::size_t> const& order) {
      std::vector<std::size_t> position(q.num_vertices());
      for (std::size_t k = 0; k < order.size(); ++k) {
        position[order[k]] = k;
      }
      std::vector<std::vector<std::size_t>> closed(order.size());
      for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        auto const& arr = q.arrow(a);
        closed[std::max(position[arr.source], position[arr.target])].push_back(a);
      }
      return closed;
    }

    // Arrows of a quiver over Q between a vertex pair, grouped by label.
    class ArrowTable {
     public:
      explicit ArrowTable(QuiverOverQ const& x) : _n(x.total().num_vertices()) {
        for (std::size_t a = 0; a < x.total().num_arrows(); ++a) {
          auto const& arr = x.total().arrow(a);
          _table[key(arr.source, arr.target)][x.arrow_label(a)].push_back(a);
        }
      }

      std::vector<std::size_t> const&
      arrows(std::size_t s, std::size_t t, std::size_t label) const {
        static std::vector<std::size_t> const none;
        auto                                  it = _table.find(key(s, t));
        if (it == _table.end()) {
          return none;
        }
        auto jt = it->second.find(label);
        return jt == it->second.end() ? none : jt->second;
      }

      // Labels with multiplicity, or null when there are no arrows s -> t.
      std::map<std::size_t, std::vector<std::size_t>> const*
      between(std::size_t s, std::size_t t) const {
        auto it = _table.find(key(s, t));
        return it == _table.end() ? nullptr : &it->second;
      }

     private:
      std::uint64_t key(std::size_t s, std::size_t t) const {
        return std::uint64_t(s) * _n + t;
      }

      std::size_t                                                                   _n;
      std::unordered_map<std::uint64_t, std::map<std::size_t, std::vector<std::size_t>>> _table;
    };

    bool same_label_counts(std::map<std::size_t, std::vector<std::size_t>> const* a,
                           std::map<std::size_t, std::vector<std::size_t>> const* b) {
      if (a == nullptr || b == nullptr) {
        return a == b;
      }
      if (a->size() != b->size()) {
        return false;
      }
      for (auto ia = a->begin(), ib = b->begin(); ia != a->end(); ++ia, ++ib) {
        if (ia->first != ib->first || ia->second.size() != ib->second.size()) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  bool is_morphism(QuiverOverQ const& x, QuiverOverQ const& y, OverQMorphism const& g) {
    if (!x.same_base(y) || g.vertex_map.size() != x.total().num_vertices()
        || g.arrow_map.size() != x.total().num_arrows()) {
      return false;
    }
    for (std::size_t v = 0; v < g.vertex_map.size(); ++v) {
      if (g.vertex_map[v] >= y.total().num_vertices()
          || y.vertex_label(g.vertex_map[v]) != x.vertex_label(v)) {
        return false;
      }
    }
    for (std::size_t a = 0; a < g.arrow_map.size(); ++a) {
      std::size_t b = g.arrow_map[a];
      if (b >= y.total().num_arrows() || y.arrow_label(b) != x.arrow_label(a)) {
        return false;
      }
      auto const& from = x.total().arrow(a);
      auto const& to   = y.total().arrow(b);
      if (to.source != g.vertex_map[from.source] || to.target != g.vertex_map[from.target]) {
        return false;
      }
    }
    return true;
  }

  Subquiver support(QuiverOverQ const& x) {
    Subquiver s;
    for (std::size_t v = 0; v < x.base().num_vertices(); ++v) {
      if (!x.fiber(v).empty()) {
        s.vertices.push_back(v);
      }
    }
    for (std::size_t a = 0; a < x.base().num_arrows(); ++a) {
      if (!x.arrow_fiber(a).empty()) {
        s.arrows.push_back(a);
      }
    }
    return s;
  }

  QuiverOverQ inclusion(std::shared_ptr<Quiver const> base, Subquiver const& s) {
    if (!is_closed(*base, s)) {
      throw InvalidInput("subquiver is not closed under arrow endpoints");
    }
    Quiver total = as_quiver(*base, s);
    return QuiverOverQ(std::move(base), std::move(total), s.vertices, s.arrows);
  }

  QuiverOverQ restrict_to(QuiverOverQ const& x, Subquiver const& t) {
    Quiver const&            q = x.total();
    std::vector<std::size_t> renumber(q.num_vertices(), 0);
    std::vector<std::string> names;
    std::vector<std::size_t> vlabels;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      if (t.contains_vertex(x.vertex_label(v))) {
        renumber[v] = names.size();
        names.push_back(q.vertex_name(v));
        vlabels.push_back(x.vertex_label(v));
      }
    }
    std::vector<Arrow>       arrows;
    std::vector<std::size_t> alabels;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      auto const& arr = q.arrow(a);
      if (t.contains_arrow(x.arrow_label(a)) && t.contains_vertex(x.vertex_label(arr.source))
          && t.contains_vertex(x.vertex_label(arr.target))) {
        arrows.push_back({arr.name, renumber[arr.source], renumber[arr.target]});
        alabels.push_back(x.arrow_label(a));
      }
    }
    return QuiverOverQ(x.base_ptr(), Quiver(std::move(names), std::move(arrows)),
                       std::move(vlabels), std::move(alabels));
  }

  bool is_wrapping(QuiverOverQ const& x) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, int> seen;
    for (std::size_t a = 0; a < x.total().num_arrows(); ++a) {
      auto const& arr = x.total().arrow(a);
      if (++seen[{arr.source, arr.target, x.arrow_label(a)}] > 1) {
        return false;
      }
    }
    return true;
  }

  bool is_connected(QuiverOverQ const& x) {
    return is_connected(x.total(), full_subquiver(x.total()));
  }

  std::int64_t count_homs(QuiverOverQ const& x, QuiverOverQ const& y) {
    require_same_base(x, y);
    Quiver const& src   = x.total();
    auto const    order = search_order(src);
    auto const    check = arrows_closed_at(src, order);
    ArrowTable    table(y);

    std::vector<std::size_t> image(src.num_vertices(), 0);
    std::int64_t             total = 0;

    auto extend = [&](auto& self, std::size_t k, std::int64_t weight) -> void {
      if (k == order.size()) {
        total = checked_add(total, weight);
        return;
      }
      std::size_t u = order[k];
      for (std::size_t candidate : y.fiber(x.vertex_label(u))) {
        image[u]       = candidate;
        std::int64_t w = weight;
        for (std::size_t a : check[k]) {
          auto const& arr     = src.arrow(a);
          auto const& choices = table.arrows(image[arr.source], image[arr.target], x.arrow_label(a));
          if (choices.empty()) {
            w = 0;
            break;
          }
          w = checked_mul(w, static_cast<std::int64_t>(choices.size()));
        }
        if (w != 0) {
          self(self, k + 1, w);
        }
      }
    };
    extend(extend, 0, 1);
    return total;
  }

  QuiverOverQ fiber_product(QuiverOverQ const& x, QuiverOverQ const& y) {
    require_same_base(x, y);
    Quiver const&                                   qx = x.total();
    Quiver const&                                   qy = y.total();
    std::unordered_map<std::uint64_t, std::size_t> pair_index;
    std::vector<std::string>                        names;
    std::vector<std::size_t>                        vlabels;
    for (std::size_t i = 0; i < qx.num_vertices(); ++i) {
      for (std::size_t j : y.fiber(x.vertex_label(i))) {
        pair_index[std::uint64_t(i) * qy.num_vertices() + j] = names.size();
        names.push_back("(" + qx.vertex_name(i) + "," + qy.vertex_name(j) + ")");
        vlabels.push_back(x.vertex_label(i));
      }
    }
    auto vertex_of = [&](std::size_t i, std::size_t j) {
      return pair_index.at(std::uint64_t(i) * qy.num_vertices() + j);
    };
    std::vector<Arrow>       arrows;
    std::vector<std::size_t> alabels;
    for (std::size_t a = 0; a < qx.num_arrows(); ++a) {
      for (std::size_t b : y.arrow_fiber(x.arrow_label(a))) {
        auto const& ax = qx.arrow(a);
        auto const& by = qy.arrow(b);
        arrows.push_back({"(" + ax.name + "," + by.name + ")", vertex_of(ax.source, by.source),
                          vertex_of(ax.target, by.target)});
        alabels.push_back(x.arrow_label(a));
      }
    }
    return QuiverOverQ(x.base_ptr(), Quiver(std::move(names), std::move(arrows)),
                       std::move(vlabels), std::move(alabels));
  }

  std::vector<QuiverOverQ> connected_components(QuiverOverQ const& x) {
    Quiver const&            q = x.total();
    std::vector<std::size_t> root(q.num_vertices());
    std::iota(root.begin(), root.end(), std::size_t(0));
    auto find = [&](std::size_t v) {
      while (root[v] != v) {
        v = root[v] = root[root[v]];
      }
      return v;
    };
    for (auto const& arr : q.arrows()) {
      std::size_t a = find(arr.source);
      std::size_t b = find(arr.target);
      if (a != b) {
        root[std::max(a, b)] = std::min(a, b);
      }
    }
    // Roots are the smallest vertex of each component, so iterating roots in
    // index order gives the required component order.
    std::vector<QuiverOverQ> components;
    for (std::size_t r = 0; r < q.num_vertices(); ++r) {
      if (find(r) != r) {
        continue;
      }
      std::vector<std::size_t> renumber(q.num_vertices(), 0);
      std::vector<std::string> names;
      std::vector<std::size_t> vlabels;
      for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        if (find(v) == r) {
          renumber[v] = names.size();
          names.push_back(q.vertex_name(v));
          vlabels.push_back(x.vertex_label(v));
        }
      }
      std::vector<Arrow>       arrows;
      std::vector<std::size_t> alabels;
      for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        auto const& arr = q.arrow(a);
        if (find(arr.source) == r) {
          arrows.push_back({arr.name, renumber[arr.source], renumber[arr.target]});
          alabels.push_back(x.arrow_label(a));
        }
      }
      components.emplace_back(x.base_ptr(), Quiver(std::move(names), std::move(arrows)),
                              std::move(vlabels), std::move(alabels));
    }
    return components;
  }

  std::optional<OverQMorphism> iso_over_q(QuiverOverQ const& x, QuiverOverQ const& y) {
    require_same_base(x, y);
    Quiver const& qx = x.total();
    Quiver const& qy = y.total();
    if (qx.num_vertices() != qy.num_vertices() || qx.num_arrows() != qy.num_arrows()) {
      return std::nullopt;
    }
    for (std::size_t v = 0; v < x.base().num_vertices(); ++v) {
      if (x.fiber(v).size() != y.fiber(v).size()) {
        return std::nullopt;
      }
    }
    for (std::size_t a = 0; a < x.base().num_arrows(); ++a) {
      if (x.arrow_fiber(a).size() != y.arrow_fiber(a).size()) {
        return std::nullopt;
      }
    }

    auto const               order = search_order(qx);
    ArrowTable               tx(x);
    ArrowTable               ty(y);
    std::vector<std::size_t> image(qx.num_vertices(), 0);
    std::vector<bool>        assigned(qx.num_vertices(), false);
    std::vector<bool>        used(qy.num_vertices(), false);

    auto consistent = [&](std::size_t u) {
      for (std::size_t k = 0; k < order.size() && assigned[order[k]]; ++k) {
        std::size_t w = order[k];
        if (!same_label_counts(tx.between(u, w), ty.between(image[u], image[w]))
            || !same_label_counts(tx.between(w, u), ty.between(image[w], image[u]))) {
          return false;
        }
      }
      return true;
    };

    auto extend = [&](auto& self, std::size_t k) -> bool {
      if (k == order.size()) {
        return true;
      }
      std::size_t u = order[k];
      for (std::size_t candidate : y.fiber(x.vertex_label(u))) {
        if (used[candidate]) {
          continue;
        }
        image[u]    = candidate;
        assigned[u] = true;
        used[candidate] = true;
        if (consistent(u) && self(self, k + 1)) {
          return true;
        }
        assigned[u]     = false;
        used[candidate] = false;
      }
      return false;
    };
    if (!extend(extend, 0)) {
      return std::nullopt;
    }

    OverQMorphism     g{image, std::vector<std::size_t>(qx.num_arrows())};
    std::vector<bool> arrow_used(qy.num_arrows(), false);
    for (std::size_t a = 0; a < qx.num_arrows(); ++a) {
      auto const& arr = qx.arrow(a);
      for (std::size_t b : ty.arrows(image[arr.source], image[arr.target], x.arrow_label(a))) {
        if (!arrow_used[b]) {
          arrow_used[b]  = true;
          g.arrow_map[a] = b;
          break;
        }
      }
    }
    return g;
  }

  QuiverOverQ opposite(QuiverOverQ const& x, std::shared_ptr<Quiver const> opposite_base) {
    if (opposite_base->num_vertices() != x.base().num_vertices()
        || opposite_base->num_arrows() != x.base().num_arrows()) {
      throw InvalidInput("opposite base does not match");
    }
    return QuiverOverQ(std::move(opposite_base), opposite(x.total()), x.vertex_labels(),
                       x.arrow_labels());
  }

}  // namespace qring
