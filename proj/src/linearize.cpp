#include "qring/linearize.hpp"

#include "qring/error.hpp"

namespace qring {

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::transpose() const {
    IntMatrix t(_cols, _rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw InvalidInput("matrix shapes do not compose");
    }
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
        }
      }
    }
    return c;
  }

  IntMatrix kronecker(IntMatrix const& a, IntMatrix const& b) {
    IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t p = 0; p < b.rows(); ++p) {
          for (std::size_t q = 0; q < b.cols(); ++q) {
            k(i * b.rows() + p, j * b.cols() + q) = checked_mul(a(i, j), b(p, q));
          }
        }
      }
    }
    return k;
  }

  Representation::Representation(std::shared_ptr<Quiver const>         base,
                                 std::vector<std::size_t>              dims,
                                 std::vector<IntMatrix>                matrices,
                                 std::vector<std::vector<std::string>> basis)
      : _base(std::move(base)),
        _dims(std::move(dims)),
        _matrices(std::move(matrices)),
        _basis(std::move(basis)) {
    if (!_base) {
      throw InvalidInput("representation needs a base quiver");
    }
    if (_dims.size() != _base->num_vertices() || _matrices.size() != _base->num_arrows()) {
      throw InvalidInput("representation must give a space per vertex and a map per arrow");
    }
    for (std::size_t a = 0; a < _matrices.size(); ++a) {
      auto const& arr = _base->arrow(a);
      if (_matrices[a].rows() != _dims[arr.target] || _matrices[a].cols() != _dims[arr.source]) {
        throw InvalidInput("matrix over arrow '" + arr.name + "' has the wrong shape");
      }
    }
    if (!_basis.empty()) {
      if (_basis.size() != _dims.size()) {
        throw InvalidInput("basis names must be given for every vertex");
      }
      for (std::size_t v = 0; v < _dims.size(); ++v) {
        if (_basis[v].size() != _dims[v]) {
          throw InvalidInput("basis at vertex '" + _base->vertex_name(v)
                             + "' does not match its dimension");
        }
      }
    }
  }

  Representation linearization(QuiverOverQ const& x) {
    Quiver const&                         q = x.base();
    std::vector<std::size_t>              dims(q.num_vertices());
    std::vector<std::vector<std::string>> basis(q.num_vertices());
    // Position of each total vertex inside its fiber.
    std::vector<std::size_t> slot(x.total().num_vertices());
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      dims[v] = x.fiber(v).size();
      for (std::size_t i = 0; i < x.fiber(v).size(); ++i) {
        slot[x.fiber(v)[i]] = i;
        basis[v].push_back(x.total().vertex_name(x.fiber(v)[i]));
      }
    }
    std::vector<IntMatrix> matrices;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      IntMatrix m(dims[q.arrow(a).target], dims[q.arrow(a).source]);
      for (std::size_t b : x.arrow_fiber(a)) {
        auto const& arr = x.total().arrow(b);
        m(slot[arr.target], slot[arr.source]) += 1;
      }
      matrices.push_back(std::move(m));
    }
    return Representation(x.base_ptr(), std::move(dims), std::move(matrices), std::move(basis));
  }

  Representation identity_representation(std::shared_ptr<Quiver const> base) {
    std::vector<std::size_t> dims(base->num_vertices(), 1);
    std::vector<IntMatrix>   matrices(base->num_arrows(), IntMatrix::identity(1));
    return Representation(std::move(base), std::move(dims), std::move(matrices));
  }

  Representation simple_representation(std::shared_ptr<Quiver const> base, std::size_t v) {
    std::vector<std::size_t> dims(base->num_vertices(), 0);
    dims.at(v) = 1;
    std::vector<IntMatrix> matrices;
    for (auto const& arr : base->arrows()) {
      matrices.emplace_back(dims[arr.target], dims[arr.source]);
    }
    return Representation(std::move(base), std::move(dims), std::move(matrices));
  }

  Representation tensor(Representation const& v, Representation const& w) {
    if (!(v.base_ptr() == w.base_ptr() || v.base() == w.base())) {
      throw InvalidInput("tensor product of representations of different quivers");
    }
    Quiver const&            q = v.base();
    std::vector<std::size_t> dims(q.num_vertices());
    for (std::size_t x = 0; x < q.num_vertices(); ++x) {
      dims[x] = v.dim(x) * w.dim(x);
    }
    std::vector<IntMatrix> matrices;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      matrices.push_back(kronecker(v.matrix(a), w.matrix(a)));
    }
    std::vector<std::vector<std::string>> basis;
    if (v.has_basis() && w.has_basis()) {
      basis.resize(q.num_vertices());
      for (std::size_t x = 0; x < q.num_vertices(); ++x) {
        for (auto const& b1 : v.basis(x)) {
          for (auto const& b2 : w.basis(x)) {
            basis[x].push_back("(" + b1 + "," + b2 + ")");
          }
        }
      }
    }
    return Representation(v.base_ptr(), std::move(dims), std::move(matrices), std::move(basis));
  }

  bool representations_equal(Representation const& v, Representation const& w) {
    if (!(v.base_ptr() == w.base_ptr() || v.base() == w.base())) {
      return false;
    }
    if (v.dims() != w.dims()) {
      return false;
    }
    for (std::size_t a = 0; a < v.base().num_arrows(); ++a) {
      if (!(v.matrix(a) == w.matrix(a))) {
        return false;
      }
    }
    return true;
  }

  DimensionVector dimension_vector(Representation const& v) {
    return DimensionVector(v.dims().begin(), v.dims().end());
  }

}  // namespace qring
