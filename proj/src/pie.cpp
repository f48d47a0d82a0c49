#include "qring/pie.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "qring/error.hpp"

namespace qring {

  char kind_letter(PieKind k) {
    switch (k) {
      case PieKind::P: return 'P';
      case PieKind::I: return 'I';
      case PieKind::E: return 'E';
    }
    return '?';
  }

  namespace {
    constexpr std::size_t max_realization_size = std::size_t(1) << 20;

    std::string vertex_list(Quiver const& q, std::vector<std::size_t> const& vs) {
      std::string r;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        r += (i ? ", " : "") + q.vertex_name(vs[i]);
      }
      return r.empty() ? "none" : r;
    }

    void require_connected(Quiver const& q, Subquiver const& t) {
      if (!is_closed(q, t) || !is_connected(q, t)) {
        throw InvalidInput("subquiver " + subquiver_name(q, t) + " is not connected");
      }
    }

    struct PathTreeBuilder {
      Quiver const&            q;
      Subquiver const&         t;
      std::vector<std::string> names;
      std::vector<std::size_t> vlabels;
      std::vector<Arrow>       arrows;
      std::vector<std::size_t> alabels;

      void visit(std::size_t node, std::size_t v) {
        for (std::size_t a : q.out_arrows(v)) {
          if (!t.contains_arrow(a)) {
            continue;
          }
          if (names.size() >= max_realization_size) {
            throw CapExceeded("path space exceeds " + std::to_string(max_realization_size)
                              + " vertices");
          }
          std::size_t child = names.size();
          std::size_t w     = q.arrow(a).target;
          names.push_back(names[node] + "/" + q.arrow(a).name);
          vlabels.push_back(w);
          arrows.push_back({names[child], node, child});
          alabels.push_back(a);
          visit(child, w);
        }
      }
    };
  }  // namespace

  QuiverOverQ build_P(std::shared_ptr<Quiver const> q, Subquiver const& t) {
    if (!q->is_acyclic()) {
      throw InvalidInput("path space of a cyclic quiver may be infinite");
    }
    require_connected(*q, t);
    auto src = sources(*q, t);
    if (src.size() != 1) {
      throw InvalidInput("P_T needs a unique source; sources of " + subquiver_name(*q, t) + ": "
                         + vertex_list(*q, src));
    }
    PathTreeBuilder b{*q, t, {}, {}, {}, {}};
    b.names.push_back(q->vertex_name(src[0]));
    b.vlabels.push_back(src[0]);
    b.visit(0, src[0]);
    return QuiverOverQ(std::move(q), Quiver(std::move(b.names), std::move(b.arrows)),
                       std::move(b.vlabels), std::move(b.alabels));
  }

  QuiverOverQ build_I(std::shared_ptr<Quiver const> q, Subquiver const& t) {
    require_connected(*q, t);
    auto snk = sinks(*q, t);
    if (snk.size() != 1) {
      throw InvalidInput("I_T needs a unique sink; sinks of " + subquiver_name(*q, t) + ": "
                         + vertex_list(*q, snk));
    }
    auto op = std::make_shared<Quiver const>(opposite(*q));
    return opposite(build_P(op, t), std::move(q));
  }

  QuiverOverQ build_E(std::shared_ptr<Quiver const> q, Subquiver const& t) {
    require_connected(*q, t);
    return inclusion(std::move(q), t);
  }

  Coincidences coincidences(Quiver const& q, Subquiver const& t) {
    Coincidences c;
    c.has_p = sources(q, t).size() == 1;
    c.has_i = sinks(q, t).size() == 1;

    bool parallel = false;
    for (std::size_t x : t.vertices) {
      for (std::size_t y : t.vertices) {
        if (x != y && count_paths(q, t, x, y) > 1) {
          parallel = true;
        }
      }
    }
    std::map<std::size_t, int> indeg, outdeg;
    for (std::size_t a : t.arrows) {
      ++outdeg[q.arrow(a).source];
      ++indeg[q.arrow(a).target];
    }
    bool thin = std::all_of(indeg.begin(), indeg.end(), [](auto const& e) { return e.second <= 1; })
                && std::all_of(outdeg.begin(), outdeg.end(),
                               [](auto const& e) { return e.second <= 1; });

    c.p_is_e = c.has_p && !parallel;
    c.i_is_e = c.has_i && !parallel;
    c.p_is_i = thin && is_connected(q, t);
    return c;
  }

  bool same_skeleton(Quiver const& q, Subquiver const& s, Subquiver const& t) {
    if (s.vertices != t.vertices) {
      return false;
    }
    auto edges = [&](Subquiver const& u) {
      std::set<std::pair<std::size_t, std::size_t>> e;
      for (std::size_t a : u.arrows) {
        auto const& arr = q.arrow(a);
        e.emplace(std::min(arr.source, arr.target), std::max(arr.source, arr.target));
      }
      return e;
    };
    return edges(s) == edges(t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Category
  ////////////////////////////////////////////////////////////////////////

  struct PieCategory::Cache {
    std::map<Subquiver, std::vector<std::size_t>>         by_support;
    std::mutex                                            lock;
    std::vector<std::optional<std::vector<std::size_t>>> products;
  };

  namespace {
    std::string support_label(Quiver const& q, Subquiver const& t) {
      bool q_free = !q.find_vertex("Q") && !q.find_arrow("Q");
      if (q_free && t == full_subquiver(q)) {
        return "Q";
      }
      return subquiver_name(q, t);
    }

    std::string object_name(PieKind k, std::string const& label) {
      std::string name(1, kind_letter(k));
      name += "_";
      return utf8_length(label) > 1 ? name + "{" + label + "}" : name + label;
    }

    std::string object_key(PieKind k, Subquiver const& t) {
      std::ostringstream os;
      os << kind_letter(k) << ':';
      for (std::size_t v : t.vertices) {
        os << v << ' ';
      }
      os << '|';
      for (std::size_t a : t.arrows) {
        os << ' ' << a;
      }
      return os.str();
    }

    std::string strip_braces(std::string const& s) {
      std::string r;
      for (char ch : s) {
        if (ch != '{' && ch != '}') {
          r += ch;
        }
      }
      return r;
    }

    PieObject make_object(Quiver const& q, PieKind k, Subquiver const& t, QuiverOverQ real) {
      PieObject o{k, k == PieKind::P, k == PieKind::I, k == PieKind::E, t, std::move(real),
                  object_key(k, t), object_name(k, support_label(q, t))};
      if (!is_connected(o.realization) || !is_wrapping(o.realization)) {
        throw InternalError(o.name + " is not a connected wrapping");
      }
      return o;
    }
  }  // namespace

  PieCategory PieCategory::build(std::shared_ptr<Quiver const> q, std::uint64_t cap) {
    if (!q->is_acyclic()) {
      throw InvalidInput("PIE category needs an acyclic quiver");
    }
    PieCategory c;
    c._base  = q;
    c._cache = std::make_shared<Cache>();

    for (auto const& t : connected_subquivers(*q, cap)) {
      Coincidences               rule = coincidences(*q, t);
      QuiverOverQ                e    = build_E(q, t);
      std::optional<QuiverOverQ> p, i;
      if (rule.has_p) {
        p = build_P(q, t);
      }
      if (rule.has_i) {
        i = build_I(q, t);
      }
      bool p_is_e = p && iso_over_q(*p, e).has_value();
      bool i_is_e = i && iso_over_q(*i, e).has_value();
      bool p_is_i = p && i && iso_over_q(*p, *i).has_value();
      if (p_is_e != rule.p_is_e || i_is_e != rule.i_is_e || p_is_i != rule.p_is_i) {
        throw InternalError("coincidence rules disagree with isomorphism test on "
                            + subquiver_name(*q, t));
      }

      auto& block = c._cache->by_support[t];
      if (p && !p_is_e) {
        block.push_back(c._objects.size());
        c._objects.push_back(make_object(*q, PieKind::P, t, std::move(*p)));
      }
      if (i && !i_is_e) {
        block.push_back(c._objects.size());
        c._objects.push_back(make_object(*q, PieKind::I, t, std::move(*i)));
      }
      block.push_back(c._objects.size());
      c._objects.push_back(make_object(*q, PieKind::E, t, std::move(e)));
      c._objects.back().is_p = p_is_e;
      c._objects.back().is_i = i_is_e;
    }

    std::size_t const n = c._objects.size();
    IntMatrix         h(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        h(x, y) = count_homs(c._objects[x].realization, c._objects[y].realization);
        if ((x == y && h(x, y) != 1) || (x > y && h(x, y) != 0)) {
          throw InternalError("Hom matrix is not unitriangular in block order at ("
                              + c._objects[x].name + ", " + c._objects[y].name + ")");
        }
      }
    }
    c._category = AcyclicCategory(c.names(), std::move(h));
    c._cache->products.resize(n * n);
    return c;
  }

  std::vector<std::string> PieCategory::names() const {
    std::vector<std::string> r;
    for (auto const& o : _objects) {
      r.push_back(o.name);
    }
    return r;
  }

  std::optional<std::size_t> PieCategory::find(std::string const& name) const {
    std::string key = strip_braces(name);
    for (std::size_t i = 0; i < _objects.size(); ++i) {
      if (_objects[i].name == name || strip_braces(_objects[i].name) == key) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> PieCategory::find(PieKind kind, Subquiver const& support) const {
    auto it = _cache->by_support.find(support);
    if (it == _cache->by_support.end()) {
      return std::nullopt;
    }
    for (std::size_t i : it->second) {
      auto const& o = _objects[i];
      if ((kind == PieKind::P && o.is_p) || (kind == PieKind::I && o.is_i)
          || (kind == PieKind::E && o.is_e)) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> PieCategory::match(QuiverOverQ const& connected) const {
    auto it = _cache->by_support.find(support(connected));
    if (it == _cache->by_support.end()) {
      return std::nullopt;
    }
    for (std::size_t i : it->second) {
      if (iso_over_q(connected, _objects[i].realization)) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::vector<std::size_t> PieCategory::structure_constants(std::size_t x, std::size_t y) const {
    std::size_t const n = size();
    if (x >= n || y >= n) {
      throw InvalidInput("object index out of range");
    }
    if (x > y) {
      std::swap(x, y);
    }
    {
      std::lock_guard<std::mutex> g(_cache->lock);
      if (auto const& hit = _cache->products[x * n + y]) {
        return *hit;
      }
    }
    std::vector<std::size_t> result;
    auto fp = fiber_product(_objects[x].realization, _objects[y].realization);
    for (auto const& comp : connected_components(fp)) {
      auto m = match(comp);
      if (!m) {
        throw InternalError("PIE not closed: a component of " + _objects[x].name + " x "
                            + _objects[y].name + " with support "
                            + subquiver_name(base(), support(comp)) + " matches no object");
      }
      result.push_back(*m);
    }
    std::sort(result.begin(), result.end());

    std::lock_guard<std::mutex> g(_cache->lock);
    auto&                       slot = _cache->products[x * n + y];
    if (!slot) {
      slot = result;
    }
    return result;
  }

  PieElement PieCategory::basis_element(std::size_t x) const {
    PieElement r(size(), 0);
    r.at(x) = 1;
    return r;
  }

  PieElement PieCategory::multiply(PieElement const& a, PieElement const& b) const {
    if (a.size() != size() || b.size() != size()) {
      throw InvalidInput("element does not belong to this category");
    }
    PieElement r(size(), 0);
    for (std::size_t x = 0; x < size(); ++x) {
      if (a[x] == 0) {
        continue;
      }
      for (std::size_t y = 0; y < size(); ++y) {
        if (b[y] == 0) {
          continue;
        }
        std::int64_t w = checked_mul(a[x], b[y]);
        for (std::size_t z : structure_constants(x, y)) {
          r[z] = checked_add(r[z], w);
        }
      }
    }
    return r;
  }

  PieElement PieCategory::idempotent(std::size_t x) const {
    PieElement r(size(), 0);
    for (std::size_t z = 0; z < size(); ++z) {
      r[z] = _category.mu(z, x);
    }
    return r;
  }

  PieElement PieCategory::identity() const {
    PieElement r(size(), 0);
    auto       whole = inclusion(_base, full_subquiver(base()));
    for (auto const& comp : connected_components(whole)) {
      auto e = find(PieKind::E, support(comp));
      if (!e) {
        throw InternalError("no E object for a component of Q");
      }
      r[*e] = 1;
    }
    return r;
  }

  std::int64_t PieCategory::hom_count_closed_form(std::size_t x, std::size_t y) const {
    auto const& X = object(x);
    auto const& Y = object(y);
    Subquiver const& s = X.support;
    Subquiver const& t = Y.support;
    if (!s.is_subset_of(t)) {
      return 0;
    }
    switch (Y.kind) {
      case PieKind::E: return 1;
      case PieKind::P:
        if (!X.is_p) {
          return 0;
        }
        return count_paths(base(), t, sources(base(), t).at(0), sources(base(), s).at(0));
      case PieKind::I:
        if (!X.is_i) {
          return 0;
        }
        return count_paths(base(), t, sinks(base(), s).at(0), sinks(base(), t).at(0));
    }
    return 0;
  }

  namespace {
    // Role of the first argument: its kind, or X for E_S = P_S != I_S, or Y
    // for a single path where all three coincide.
    enum class Role { P, I, E, X, Y };
    enum class Cls { A, B, B_dual, C };
    enum class Value { zero, sign, neg_sign };

    Role swap_pi(Role r) {
      return r == Role::P ? Role::I : r == Role::I ? Role::P : r;
    }

    std::optional<Value> mu_table(Cls cls, Role x, Role y) {
      using R = Role;
      using V = Value;
      switch (cls) {
        case Cls::A:
          if (x == R::E && y == R::P) return V::zero;
          if (x == R::E && y == R::E) return V::sign;
          if (x == R::P && y == R::P) return V::sign;
          if (x == R::P && y == R::E) return V::neg_sign;
          if (x == R::P && y == R::I) return V::zero;
          break;
        case Cls::B:
          if (x == R::X && y == R::E) return V::zero;
          if (x == R::X && y == R::P) return V::sign;
          if (x == R::X && y == R::I) return V::zero;
          break;
        case Cls::C:
          if (x == R::Y && y == R::E) return V::neg_sign;
          if (x == R::Y && y == R::P) return V::sign;
          break;
        case Cls::B_dual: break;
      }
      return std::nullopt;
    }

    Role role_of_kind(PieKind k) {
      return k == PieKind::P ? Role::P : k == PieKind::I ? Role::I : Role::E;
    }
  }  // namespace

  std::optional<std::int64_t> PieCategory::mu_closed_form(std::size_t x, std::size_t y) const {
    auto const& X = object(x);
    auto const& Y = object(y);
    if (!X.support.is_subset_of(Y.support) || !same_skeleton(base(), X.support, Y.support)) {
      return std::nullopt;
    }
    if (x == y) {
      return 1;
    }
    Coincidences c = coincidences(base(), X.support);
    Cls          cls;
    Role         xr;
    if (c.p_is_e && c.i_is_e) {
      cls = Cls::C;
      xr  = Role::Y;
    } else if (c.p_is_e) {
      cls = Cls::B;
      xr  = X.is_e ? Role::X : role_of_kind(X.kind);
    } else if (c.i_is_e) {
      cls = Cls::B_dual;
      xr  = X.is_e ? Role::X : role_of_kind(X.kind);
    } else {
      cls = Cls::A;
      xr  = role_of_kind(X.kind);
    }
    Role yr = role_of_kind(Y.kind);

    std::optional<Value> v = mu_table(cls, xr, yr);
    if (!v) {
      Cls dual = cls == Cls::B ? Cls::B_dual : cls == Cls::B_dual ? Cls::B : cls;
      v        = mu_table(dual, swap_pi(xr), swap_pi(yr));
    }
    if (!v) {
      return std::nullopt;
    }
    std::size_t  extra = Y.support.arrows.size() - X.support.arrows.size();
    std::int64_t sign  = extra % 2 == 0 ? 1 : -1;
    switch (*v) {
      case Value::zero: return 0;
      case Value::sign: return sign;
      case Value::neg_sign: return -sign;
    }
    return std::nullopt;
  }

  std::string PieCategory::format(PieElement const& el, std::optional<std::size_t> lead) const {
    std::vector<std::size_t> terms;
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (el[i] != 0 && (!lead || i != *lead)) {
        terms.push_back(i);
      }
    }
    std::sort(terms.begin(), terms.end(), [&](std::size_t a, std::size_t b) {
      auto const& sa = _objects[a].support;
      auto const& sb = _objects[b].support;
      return std::make_tuple(sb.vertices.size(), sb.arrows.size(), a)
             < std::make_tuple(sa.vertices.size(), sa.arrows.size(), b);
    });
    if (lead && el.at(*lead) != 0) {
      terms.insert(terms.begin(), *lead);
    }
    if (terms.empty()) {
      return "0";
    }
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      std::int64_t c   = el[terms[k]];
      std::int64_t mag = c < 0 ? -c : c;
      if (k == 0) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1) {
        out += std::to_string(mag) + "·";
      }
      out += _objects[terms[k]].name;
    }
    return out;
  }

}  // namespace qring
