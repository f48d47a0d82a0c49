#ifndef QRING_PROJECTIVES_HPP_
#define QRING_PROJECTIVES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qring/linearize.hpp"
#include "qring/quiver.hpp"

namespace qring {

  // Columns are dimension vectors of the indecomposable projectives:
  // entry (w, x) is the number of paths from x to w.
  struct CartanMatrix {
    IntMatrix matrix;
    IntMatrix inverse;
  };

  // Requires an acyclic quiver. The inverse is computed by forward
  // substitution in topological order and checked against the closed form
  // (C^-1)^t(x, y) = [x = y] - #arrows(x -> y); a mismatch is an InternalError.
  CartanMatrix cartan_matrix(Quiver const& q);

  // Which basis the coefficients of a ProjectiveElement refer to: the
  // indecomposable projectives P(x), or the orthogonal idempotents e(x).
  enum class ProjectiveBasis { projective, idempotent };

  struct ProjectiveElement {
    ProjectiveBasis           basis = ProjectiveBasis::projective;
    std::vector<std::int64_t> coeffs;

    bool operator==(ProjectiveElement const&) const = default;
  };

  // The subring of R(Q) spanned by the projectives, for a fixed acyclic
  // quiver. Path counts and the Cartan matrix are computed once.
  class ProjectiveRing {
   public:
    explicit ProjectiveRing(Quiver q);

    Quiver const& quiver() const noexcept {
      return _quiver;
    }
    PathCountMatrix const& path_counts() const noexcept {
      return _counts;
    }
    CartanMatrix const& cartan() const noexcept {
      return _cartan;
    }
    std::size_t rank() const noexcept {
      return _quiver.num_vertices();
    }

    ProjectiveElement projective(std::size_t x) const;
    ProjectiveElement idempotent(std::size_t x) const;
    ProjectiveElement one() const;

    ProjectiveElement to_e_basis(ProjectiveElement const& el) const;
    ProjectiveElement from_e_basis(ProjectiveElement const& el) const;

    // Multiplicity of P(w) in P(x) (x) P(y), for every w. Throws
    // InternalError if a multiplicity comes out negative.
    std::vector<std::int64_t> tensor_projectives(std::size_t x, std::size_t y) const;

    // Product in the idempotent basis, returned in the basis of a.
    ProjectiveElement multiply(ProjectiveElement const& a, ProjectiveElement const& b) const;

    // Dimension vector of an element given in the projective basis.
    DimensionVector dimension_vector(ProjectiveElement const& el) const;

   private:
    void check(ProjectiveElement const& el) const;

    Quiver          _quiver;
    PathCountMatrix _counts;
    CartanMatrix    _cartan;
  };

}  // namespace qring

#endif  // QRING_PROJECTIVES_HPP_
