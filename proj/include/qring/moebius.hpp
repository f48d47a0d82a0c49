#ifndef QRING_MOEBIUS_HPP_
#define QRING_MOEBIUS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qring/linearize.hpp"

namespace qring {

  // A finite acyclic category, known only through its Hom counts. Objects are
  // opaque; callers supply display names.
  //
  // Construction finds an ordering of the objects in which the Hom matrix H
  // is upper unitriangular (ties broken by index) and computes the Moebius
  // matrix M = H^-1 by back substitution in that order. A category where some
  // [x, x] != 1 or where distinct objects have morphisms both ways is
  // rejected with InvalidInput ("category not acyclic").
  class AcyclicCategory {
   public:
    AcyclicCategory() = default;
    AcyclicCategory(std::vector<std::string> names, IntMatrix hom_counts);

    static AcyclicCategory
    build(std::vector<std::string>                                    names,
          std::function<std::int64_t(std::size_t, std::size_t)> const& hom_counter);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::int64_t hom(std::size_t x, std::size_t y) const {
      return _hom(x, y);
    }
    std::int64_t mu(std::size_t x, std::size_t y) const {
      return _moebius(x, y);
    }
    IntMatrix const& hom_matrix() const noexcept {
      return _hom;
    }
    IntMatrix const& moebius_matrix() const noexcept {
      return _moebius;
    }
    // Ordering certifying acyclicity.
    std::vector<std::size_t> const& order() const noexcept {
      return _order;
    }

    // mu(x, y) = -sum_{x < z <= y} [x, z] mu(z, y), evaluated over the Hom
    // relation directly rather than the stored order.
    IntMatrix moebius_by_recursion() const;

   private:
    std::vector<std::string> _names;
    IntMatrix                _hom;
    IntMatrix                _moebius;
    std::vector<std::size_t> _order;
  };

  enum class MoebiusBasis { object, delta };

  // Element of the Moebius ring, in the object basis or the basis of
  // orthogonal idempotents delta_x = sum_z mu(z, x) z.
  struct MoebiusElement {
    MoebiusBasis              basis = MoebiusBasis::object;
    std::vector<std::int64_t> coeffs;

    bool operator==(MoebiusElement const&) const = default;
  };

  MoebiusElement object_element(AcyclicCategory const& c, std::size_t x);
  MoebiusElement delta_element(AcyclicCategory const& c, std::size_t x);

  // x = sum_z [z, x] delta_z.
  MoebiusElement to_delta(AcyclicCategory const& c, MoebiusElement const& el);
  MoebiusElement from_delta(AcyclicCategory const& c, MoebiusElement const& el);

  // Pointwise product in the delta basis; the result uses the basis of a.
  MoebiusElement multiply(AcyclicCategory const& c, MoebiusElement const& a, MoebiusElement const& b);

  // Object-basis product xy = sum_z (sum_w mu(z, w)[w, x][w, y]) z, extended
  // bilinearly. Both arguments are converted to the object basis.
  MoebiusElement multiply_by_hom_formula(AcyclicCategory const& c,
                                         MoebiusElement const&  a,
                                         MoebiusElement const&  b);

  // Integer CSV: a header row of object names, then one row per object
  // prefixed by its name.
  std::string matrix_csv(std::vector<std::string> const& names, IntMatrix const& m);

}  // namespace qring

#endif  // QRING_MOEBIUS_HPP_
