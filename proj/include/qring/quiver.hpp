#ifndef QRING_QUIVER_HPP_
#define QRING_QUIVER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qring {

  constexpr std::uint64_t default_subquiver_cap = std::uint64_t(1) << 20;

  // Unvalidated description of a quiver, as read from input.
  struct ArrowSpec {
    std::string name;
    std::string from;
    std::string to;
  };

  struct QuiverSpec {
    std::vector<std::string> vertices;
    std::vector<ArrowSpec>   arrows;
  };

  struct ValidationReport {
    std::vector<std::string> problems;
    bool                     acyclic = true;

    bool valid() const noexcept {
      return problems.empty();
    }
  };

  ValidationReport validate(QuiverSpec const& spec);

  struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;

    bool operator==(Arrow const&) const = default;
  };

  // A finite quiver. Vertices and arrows are addressed by their position in
  // input order; names are kept for I/O. Immutable once built.
  class Quiver {
   public:
    Quiver() = default;

    // Throws InvalidInput when the spec fails validation.
    explicit Quiver(QuiverSpec const& spec);

    Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

    std::size_t num_vertices() const noexcept {
      return _vertices.size();
    }
    std::size_t num_arrows() const noexcept {
      return _arrows.size();
    }

    std::string const& vertex_name(std::size_t v) const {
      return _vertices.at(v);
    }
    Arrow const& arrow(std::size_t a) const {
      return _arrows.at(a);
    }
    std::vector<std::string> const& vertex_names() const noexcept {
      return _vertices;
    }
    std::vector<Arrow> const& arrows() const noexcept {
      return _arrows;
    }

    std::optional<std::size_t> find_vertex(std::string const& name) const;
    std::optional<std::size_t> find_arrow(std::string const& name) const;

    // Throws InvalidInput naming the vertex when it does not exist.
    std::size_t vertex_index(std::string const& name) const;

    std::vector<std::size_t> const& out_arrows(std::size_t v) const {
      return _out.at(v);
    }
    std::vector<std::size_t> const& in_arrows(std::size_t v) const {
      return _in.at(v);
    }

    bool is_acyclic() const noexcept {
      return _topo.size() == _vertices.size();
    }

    // Kahn's algorithm, ties broken by input order. Throws InvalidInput for a
    // quiver with an oriented cycle.
    std::vector<std::size_t> const& topological_order() const;

    QuiverSpec to_spec() const;

    bool operator==(Quiver const& that) const {
      return _vertices == that._vertices && _arrows == that._arrows;
    }

   private:
    void index();

    std::vector<std::string>              _vertices;
    std::vector<Arrow>                    _arrows;
    std::vector<std::vector<std::size_t>> _out;
    std::vector<std::vector<std::size_t>> _in;
    std::vector<std::size_t>              _topo;
  };

  // Vertex and arrow subsets of some parent quiver, both sorted ascending.
  // The parent is not stored; every operation takes it explicitly.
  struct Subquiver {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> arrows;

    bool contains_vertex(std::size_t v) const;
    bool contains_arrow(std::size_t a) const;
    bool is_subset_of(Subquiver const& that) const;

    auto operator<=>(Subquiver const&) const = default;
  };

  // Ordering used everywhere a deterministic list of subquivers is needed:
  // vertex count, arrow count, then the index lists lexicographically.
  bool support_less(Subquiver const& a, Subquiver const& b);

  Subquiver full_subquiver(Quiver const& q);

  // Every arrow endpoint lies in the vertex set.
  bool is_closed(Quiver const& q, Subquiver const& s);
  // Nonempty and connected as an undirected graph.
  bool is_connected(Quiver const& q, Subquiver const& s);

  std::vector<std::size_t> sources(Quiver const& q, Subquiver const& s);
  std::vector<std::size_t> sinks(Quiver const& q, Subquiver const& s);

  // Induced quiver on s, with vertices and arrows renumbered in order.
  Quiver as_quiver(Quiver const& q, Subquiver const& s);

  struct Path {
    std::size_t              start;
    std::vector<std::size_t> arrows;

    std::size_t end(Quiver const& q) const {
      return arrows.empty() ? start : q.arrow(arrows.back()).target;
    }
    bool is_trivial() const noexcept {
      return arrows.empty();
    }

    auto operator<=>(Path const&) const = default;
  };

  bool is_valid_path(Quiver const& q, Path const& p);

  // All paths from x to y, lexicographic in arrow indices. Requires an
  // acyclic quiver; paths in a cyclic quiver may be infinite in number.
  std::vector<Path> enumerate_paths(Quiver const& q, std::size_t x, std::size_t y);

  // Same, restricted to the arrows of s.
  std::vector<Path>
  enumerate_paths(Quiver const& q, Subquiver const& s, std::size_t x, std::size_t y);

  class PathCountMatrix {
   public:
    PathCountMatrix() = default;
    explicit PathCountMatrix(std::size_t n) : _n(n), _entries(n * n, 0) {}

    std::size_t size() const noexcept {
      return _n;
    }
    // Number of paths from x to y, trivial path included.
    std::int64_t operator()(std::size_t x, std::size_t y) const {
      return _entries.at(x * _n + y);
    }
    std::int64_t& operator()(std::size_t x, std::size_t y) {
      return _entries.at(x * _n + y);
    }

    bool operator==(PathCountMatrix const&) const = default;

   private:
    std::size_t               _n = 0;
    std::vector<std::int64_t> _entries;
  };

  PathCountMatrix path_count_matrix(Quiver const& q);

  // Number of paths from x to y using only arrows of s.
  std::int64_t count_paths(Quiver const& q, Subquiver const& s, std::size_t x, std::size_t y);

  // Connected subquivers (arbitrary arrow subsets), ordered by support_less.
  // Throws CapExceeded when more than cap candidate subsets would be examined.
  std::vector<Subquiver> connected_subquivers(Quiver const& q,
                                              std::uint64_t cap = default_subquiver_cap);

  // Full subquiver of s on the vertices reachable from i inside s.
  Subquiver successor_closure(Quiver const& q, Subquiver const& s, std::size_t i);
  Subquiver predecessor_closure(Quiver const& q, Subquiver const& s, std::size_t i);

  Quiver opposite(Quiver const& q);

  // Display helpers. A vertex-only subquiver is named by its vertex, one with
  // arrows by its arrows (concatenated when every name is one character).
  std::string subquiver_name(Quiver const& q, Subquiver const& s);
  std::string path_to_string(Quiver const& q, Path const& p);

  // Number of Unicode code points in a UTF-8 string.
  std::size_t utf8_length(std::string const& s);

}  // namespace qring

#endif  // QRING_QUIVER_HPP_
