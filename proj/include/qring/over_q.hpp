#ifndef QRING_OVER_Q_HPP_
#define QRING_OVER_Q_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qring/quiver.hpp"

namespace qring {

  // A quiver Q' together with a structure map Q' -> Q, given by a label on
  // every vertex and arrow of Q'. The base is shared between all quivers
  // over it; two objects are "over the same base" when the bases compare
  // equal.
  class QuiverOverQ {
   public:
    QuiverOverQ() = default;

    // Throws InvalidInput when the labels are out of range or not compatible
    // with sources and targets.
    QuiverOverQ(std::shared_ptr<Quiver const> base,
                Quiver                        total,
                std::vector<std::size_t>      vertex_label,
                std::vector<std::size_t>      arrow_label);

    Quiver const& base() const {
      return *_base;
    }
    std::shared_ptr<Quiver const> const& base_ptr() const noexcept {
      return _base;
    }
    Quiver const& total() const noexcept {
      return _total;
    }
    std::size_t vertex_label(std::size_t v) const {
      return _vertex_label.at(v);
    }
    std::size_t arrow_label(std::size_t a) const {
      return _arrow_label.at(a);
    }
    std::vector<std::size_t> const& vertex_labels() const noexcept {
      return _vertex_label;
    }
    std::vector<std::size_t> const& arrow_labels() const noexcept {
      return _arrow_label;
    }

    // Total vertices over base vertex v, in total order.
    std::vector<std::size_t> const& fiber(std::size_t v) const {
      return _vertex_fiber.at(v);
    }
    std::vector<std::size_t> const& arrow_fiber(std::size_t a) const {
      return _arrow_fiber.at(a);
    }

    bool same_base(QuiverOverQ const& that) const;

   private:
    std::shared_ptr<Quiver const>         _base;
    Quiver                                _total;
    std::vector<std::size_t>              _vertex_label;
    std::vector<std::size_t>              _arrow_label;
    std::vector<std::vector<std::size_t>> _vertex_fiber;
    std::vector<std::vector<std::size_t>> _arrow_fiber;
  };

  struct OverQMorphism {
    std::vector<std::size_t> vertex_map;
    std::vector<std::size_t> arrow_map;

    bool operator==(OverQMorphism const&) const = default;
  };

  // Checks that g commutes with s, t and both structure maps.
  bool is_morphism(QuiverOverQ const& x, QuiverOverQ const& y, OverQMorphism const& g);

  // Image of the structure map, as a subquiver of the base.
  Subquiver support(QuiverOverQ const& x);

  // The inclusion of a subquiver of the base.
  QuiverOverQ inclusion(std::shared_ptr<Quiver const> base, Subquiver const& s);

  // Preimage of t under the structure map.
  QuiverOverQ restrict_to(QuiverOverQ const& x, Subquiver const& t);

  // No two parallel arrows of the total quiver share a label.
  bool is_wrapping(QuiverOverQ const& x);

  bool is_connected(QuiverOverQ const& x);

  // Exact number of morphisms x -> y over the base.
  std::int64_t count_homs(QuiverOverQ const& x, QuiverOverQ const& y);

  // Vertices are label-matched pairs (x-index major), arrows likewise, named
  // "(v',v'')" and "(a',a'')".
  QuiverOverQ fiber_product(QuiverOverQ const& x, QuiverOverQ const& y);

  // Ordered by smallest contained vertex.
  std::vector<QuiverOverQ> connected_components(QuiverOverQ const& x);

  // An isomorphism over the base if one exists.
  std::optional<OverQMorphism> iso_over_q(QuiverOverQ const& x, QuiverOverQ const& y);

  // Reverse every total arrow, viewing the result over the opposite of the
  // base. Applying it twice with the original base restores x.
  QuiverOverQ opposite(QuiverOverQ const& x, std::shared_ptr<Quiver const> opposite_base);

}  // namespace qring

#endif  // QRING_OVER_Q_HPP_
