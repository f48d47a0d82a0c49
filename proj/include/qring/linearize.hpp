#ifndef QRING_LINEARIZE_HPP_
#define QRING_LINEARIZE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qring/over_q.hpp"
#include "qring/quiver.hpp"

namespace qring {

  // Dense row-major integer matrix. Zero-sized shapes (0 x n) are legal.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _data(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    std::int64_t operator()(std::size_t r, std::size_t c) const {
      return _data.at(r * _cols + c);
    }
    std::int64_t& operator()(std::size_t r, std::size_t c) {
      return _data.at(r * _cols + c);
    }

    IntMatrix transpose() const;

    bool operator==(IntMatrix const&) const = default;

   private:
    std::size_t               _rows = 0;
    std::size_t               _cols = 0;
    std::vector<std::int64_t> _data;
  };

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  IntMatrix kronecker(IntMatrix const& a, IntMatrix const& b);

  using DimensionVector = std::vector<std::int64_t>;

  // A representation of the base quiver with integer matrices. The matrix of
  // arrow a has shape dims(target) x dims(source).
  class Representation {
   public:
    Representation() = default;

    // Throws InvalidInput on a shape mismatch or a basis list of the wrong
    // length. An empty basis list means no basis names are recorded.
    Representation(std::shared_ptr<Quiver const>         base,
                   std::vector<std::size_t>              dims,
                   std::vector<IntMatrix>                matrices,
                   std::vector<std::vector<std::string>> basis = {});

    Quiver const& base() const {
      return *_base;
    }
    std::shared_ptr<Quiver const> const& base_ptr() const noexcept {
      return _base;
    }
    std::size_t dim(std::size_t v) const {
      return _dims.at(v);
    }
    std::vector<std::size_t> const& dims() const noexcept {
      return _dims;
    }
    IntMatrix const& matrix(std::size_t a) const {
      return _matrices.at(a);
    }
    bool has_basis() const noexcept {
      return !_basis.empty();
    }
    std::vector<std::string> const& basis(std::size_t v) const {
      return _basis.at(v);
    }

   private:
    std::shared_ptr<Quiver const>         _base;
    std::vector<std::size_t>              _dims;
    std::vector<IntMatrix>                _matrices;
    std::vector<std::vector<std::string>> _basis;
  };

  // Pushforward of the identity representation of the total quiver. The
  // basis at v is the fiber over v in total order.
  Representation linearization(QuiverOverQ const& x);

  // Identity representation of the base: every dimension 1, every map [1].
  Representation identity_representation(std::shared_ptr<Quiver const> base);

  // Simple representation at v.
  Representation simple_representation(std::shared_ptr<Quiver const> base, std::size_t v);

  // Pointwise tensor product; the basis at each vertex is the product basis
  // ordered with the left factor major.
  Representation tensor(Representation const& v, Representation const& w);

  // Exact equality of dimensions and matrices under the stored basis order.
  bool representations_equal(Representation const& v, Representation const& w);

  DimensionVector dimension_vector(Representation const& v);

}  // namespace qring

#endif  // QRING_LINEARIZE_HPP_
