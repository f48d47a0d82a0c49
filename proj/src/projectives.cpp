#include "qring/projectives.hpp"

#include "qring/error.hpp"

namespace qring {

  CartanMatrix cartan_matrix(Quiver const& q) {
    auto const& topo   = q.topological_order();
    auto const  counts = path_count_matrix(q);
    std::size_t n      = q.num_vertices();

    CartanMatrix c{IntMatrix(n, n), IntMatrix(n, n)};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t w = 0; w < n; ++w) {
        c.matrix(w, x) = counts(x, w);
      }
    }
    // Lower unitriangular in topological order; solve C X = I column by column.
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t  w   = topo[k];
        std::int64_t val = (w == j) ? 1 : 0;
        for (std::size_t i = 0; i < k; ++i) {
          std::size_t x = topo[i];
          if (c.matrix(w, x) != 0) {
            val = checked_sub(val, checked_mul(c.matrix(w, x), c.inverse(x, j)));
          }
        }
        c.inverse(w, j) = val;
      }
    }

    if (!(c.matrix * c.inverse == IntMatrix::identity(n))) {
      throw InternalError("Cartan inverse does not invert the Cartan matrix");
    }
    IntMatrix closed = IntMatrix::identity(n);
    for (auto const& arr : q.arrows()) {
      closed(arr.source, arr.target) -= 1;
    }
    if (!(c.inverse.transpose() == closed)) {
      throw InternalError("Cartan inverse disagrees with the arrow-count formula");
    }
    return c;
  }

  ProjectiveRing::ProjectiveRing(Quiver q)
      : _quiver(std::move(q)), _counts(path_count_matrix(_quiver)), _cartan(cartan_matrix(_quiver)) {}

  ProjectiveElement ProjectiveRing::projective(std::size_t x) const {
    ProjectiveElement el{ProjectiveBasis::projective, std::vector<std::int64_t>(rank(), 0)};
    el.coeffs.at(x) = 1;
    return el;
  }

  ProjectiveElement ProjectiveRing::idempotent(std::size_t x) const {
    ProjectiveElement el{ProjectiveBasis::idempotent, std::vector<std::int64_t>(rank(), 0)};
    el.coeffs.at(x) = 1;
    return el;
  }

  ProjectiveElement ProjectiveRing::one() const {
    return {ProjectiveBasis::idempotent, std::vector<std::int64_t>(rank(), 1)};
  }

  void ProjectiveRing::check(ProjectiveElement const& el) const {
    if (el.coeffs.size() != rank()) {
      throw InvalidInput("element has " + std::to_string(el.coeffs.size())
                         + " coefficients, expected " + std::to_string(rank()));
    }
  }

  namespace {
    std::vector<std::int64_t> apply(IntMatrix const& m, std::vector<std::int64_t> const& v) {
      std::vector<std::int64_t> r(m.rows(), 0);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (m(i, j) != 0 && v[j] != 0) {
            r[i] = checked_add(r[i], checked_mul(m(i, j), v[j]));
          }
        }
      }
      return r;
    }
  }  // namespace

  // P(x) = sum_z n_xz e(z), so e-coordinates are C times P-coordinates.
  ProjectiveElement ProjectiveRing::to_e_basis(ProjectiveElement const& el) const {
    check(el);
    if (el.basis == ProjectiveBasis::idempotent) {
      return el;
    }
    return {ProjectiveBasis::idempotent, apply(_cartan.matrix, el.coeffs)};
  }

  ProjectiveElement ProjectiveRing::from_e_basis(ProjectiveElement const& el) const {
    check(el);
    if (el.basis == ProjectiveBasis::projective) {
      return el;
    }
    return {ProjectiveBasis::projective, apply(_cartan.inverse, el.coeffs)};
  }

  std::vector<std::int64_t> ProjectiveRing::tensor_projectives(std::size_t x, std::size_t y) const {
    if (x >= rank() || y >= rank()) {
      throw InvalidInput("vertex index out of range");
    }
    std::vector<std::int64_t> c(rank(), 0);
    for (std::size_t w = 0; w < rank(); ++w) {
      std::int64_t value = checked_mul(_counts(x, w), _counts(y, w));
      for (std::size_t a : _quiver.in_arrows(w)) {
        std::size_t z = _quiver.arrow(a).source;
        value         = checked_sub(value, checked_mul(_counts(x, z), _counts(y, z)));
      }
      if (value < 0) {
        throw InternalError("negative multiplicity of P(" + _quiver.vertex_name(w) + ") in P("
                            + _quiver.vertex_name(x) + ") (x) P(" + _quiver.vertex_name(y) + ")");
      }
      c[w] = value;
    }
    return c;
  }

  ProjectiveElement ProjectiveRing::multiply(ProjectiveElement const& a,
                                             ProjectiveElement const& b) const {
    auto ea = to_e_basis(a);
    auto eb = to_e_basis(b);
    for (std::size_t z = 0; z < rank(); ++z) {
      ea.coeffs[z] = checked_mul(ea.coeffs[z], eb.coeffs[z]);
    }
    return a.basis == ProjectiveBasis::idempotent ? ea : from_e_basis(ea);
  }

  DimensionVector ProjectiveRing::dimension_vector(ProjectiveElement const& el) const {
    return to_e_basis(el).coeffs;
  }

}  // namespace qring
