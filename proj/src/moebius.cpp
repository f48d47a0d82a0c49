#include "qring/moebius.hpp"

#include <queue>
#include <sstream>

#include "qring/error.hpp"

namespace qring {

  AcyclicCategory::AcyclicCategory(std::vector<std::string> names, IntMatrix hom_counts)
      : _names(std::move(names)), _hom(std::move(hom_counts)) {
    std::size_t const n = _names.size();
    if (_hom.rows() != n || _hom.cols() != n) {
      throw InvalidInput("Hom matrix must be square with one row per object");
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (_hom(x, y) < 0) {
          throw InvalidInput("negative Hom count");
        }
      }
      if (_hom(x, x) != 1) {
        throw InvalidInput("category not acyclic: object '" + _names[x] + "' has "
                           + std::to_string(_hom(x, x)) + " endomorphisms");
      }
    }

    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && _hom(x, y) != 0) {
          ++indeg[y];
        }
      }
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t x = 0; x < n; ++x) {
      if (indeg[x] == 0) {
        ready.push(x);
      }
    }
    while (!ready.empty()) {
      std::size_t x = ready.top();
      ready.pop();
      _order.push_back(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && _hom(x, y) != 0 && --indeg[y] == 0) {
          ready.push(y);
        }
      }
    }
    if (_order.size() != n) {
      throw InvalidInput("category not acyclic: distinct objects with morphisms both ways");
    }

    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) {
      position[_order[k]] = k;
    }
    _moebius = IntMatrix(n, n);
    for (std::size_t y = 0; y < n; ++y) {
      _moebius(y, y) = 1;
      for (std::size_t k = position[y]; k-- > 0;) {
        std::size_t  x   = _order[k];
        std::int64_t sum = 0;
        for (std::size_t j = k + 1; j <= position[y]; ++j) {
          std::size_t z = _order[j];
          if (_hom(x, z) != 0 && _moebius(z, y) != 0) {
            sum = checked_add(sum, checked_mul(_hom(x, z), _moebius(z, y)));
          }
        }
        _moebius(x, y) = -sum;
      }
    }
  }

  AcyclicCategory
  AcyclicCategory::build(std::vector<std::string>                                    names,
                         std::function<std::int64_t(std::size_t, std::size_t)> const& hom_counter) {
    IntMatrix h(names.size(), names.size());
    for (std::size_t x = 0; x < names.size(); ++x) {
      for (std::size_t y = 0; y < names.size(); ++y) {
        h(x, y) = hom_counter(x, y);
      }
    }
    return AcyclicCategory(std::move(names), std::move(h));
  }

  IntMatrix AcyclicCategory::moebius_by_recursion() const {
    std::size_t const n = size();
    IntMatrix         m(n, n);
    std::vector<bool> done(n);
    for (std::size_t y = 0; y < n; ++y) {
      std::fill(done.begin(), done.end(), false);
      auto value = [&](auto& self, std::size_t x) -> std::int64_t {
        if (done[x]) {
          return m(x, y);
        }
        std::int64_t r = 1;
        if (x != y) {
          r = 0;
          for (std::size_t z = 0; z < n; ++z) {
            if (z != x && _hom(x, z) != 0 && (z == y || _hom(z, y) != 0)) {
              r = checked_sub(r, checked_mul(_hom(x, z), self(self, z)));
            }
          }
        }
        done[x] = true;
        m(x, y) = r;
        return r;
      };
      for (std::size_t x = 0; x < n; ++x) {
        value(value, x);
      }
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Moebius ring
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check(AcyclicCategory const& c, MoebiusElement const& el) {
      if (el.coeffs.size() != c.size()) {
        throw InvalidInput("element does not belong to this category");
      }
    }

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

  MoebiusElement object_element(AcyclicCategory const& c, std::size_t x) {
    MoebiusElement el{MoebiusBasis::object, std::vector<std::int64_t>(c.size(), 0)};
    el.coeffs.at(x) = 1;
    return el;
  }

  MoebiusElement delta_element(AcyclicCategory const& c, std::size_t x) {
    MoebiusElement el{MoebiusBasis::delta, std::vector<std::int64_t>(c.size(), 0)};
    el.coeffs.at(x) = 1;
    return el;
  }

  MoebiusElement to_delta(AcyclicCategory const& c, MoebiusElement const& el) {
    check(c, el);
    if (el.basis == MoebiusBasis::delta) {
      return el;
    }
    return {MoebiusBasis::delta, apply(c.hom_matrix(), el.coeffs)};
  }

  MoebiusElement from_delta(AcyclicCategory const& c, MoebiusElement const& el) {
    check(c, el);
    if (el.basis == MoebiusBasis::object) {
      return el;
    }
    return {MoebiusBasis::object, apply(c.moebius_matrix(), el.coeffs)};
  }

  MoebiusElement multiply(AcyclicCategory const& c, MoebiusElement const& a, MoebiusElement const& b) {
    auto da = to_delta(c, a);
    auto db = to_delta(c, b);
    for (std::size_t z = 0; z < c.size(); ++z) {
      da.coeffs[z] = checked_mul(da.coeffs[z], db.coeffs[z]);
    }
    return a.basis == MoebiusBasis::delta ? da : from_delta(c, da);
  }

  MoebiusElement multiply_by_hom_formula(AcyclicCategory const& c,
                                         MoebiusElement const&  a,
                                         MoebiusElement const&  b) {
    auto const        oa = from_delta(c, a);
    auto const        ob = from_delta(c, b);
    std::size_t const n  = c.size();
    MoebiusElement    r{MoebiusBasis::object, std::vector<std::int64_t>(n, 0)};
    for (std::size_t x = 0; x < n; ++x) {
      if (oa.coeffs[x] == 0) {
        continue;
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (ob.coeffs[y] == 0) {
          continue;
        }
        std::int64_t weight = checked_mul(oa.coeffs[x], ob.coeffs[y]);
        for (std::size_t z = 0; z < n; ++z) {
          std::int64_t coeff = 0;
          for (std::size_t w = 0; w < n; ++w) {
            if (c.mu(z, w) != 0 && c.hom(w, x) != 0 && c.hom(w, y) != 0) {
              coeff = checked_add(coeff,
                                  checked_mul(c.mu(z, w), checked_mul(c.hom(w, x), c.hom(w, y))));
            }
          }
          r.coeffs[z] = checked_add(r.coeffs[z], checked_mul(weight, coeff));
        }
      }
    }
    return r;
  }

  namespace {
    std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string quoted = "\"";
      for (char ch : s) {
        if (ch == '"') {
          quoted += '"';
        }
        quoted += ch;
      }
      return quoted + "\"";
    }
  }  // namespace

  std::string matrix_csv(std::vector<std::string> const& names, IntMatrix const& m) {
    std::ostringstream os;
    os << "object";
    for (auto const& n : names) {
      os << ',' << csv_field(n);
    }
    os << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << csv_field(names.at(i));
      for (std::size_t j = 0; j < m.cols(); ++j) {
        os << ',' << m(i, j);
      }
      os << '\n';
    }
    return os.str();
  }

}  // namespace qring
