#ifndef QRING_PIE_HPP_
#define QRING_PIE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qring/moebius.hpp"
#include "qring/over_q.hpp"
#include "qring/quiver.hpp"

namespace qring {

  enum class PieKind { P, I, E };

  char kind_letter(PieKind k);

  // The quiver P_T: one vertex per path in t from its unique source, one
  // arrow p -> p.a for each single-arrow extension. Throws InvalidInput when
  // t is not connected or does not have exactly one source.
  QuiverOverQ build_P(std::shared_ptr<Quiver const> q, Subquiver const& t);
  // Dual of build_P: paths in t ending at its unique sink.
  QuiverOverQ build_I(std::shared_ptr<Quiver const> q, Subquiver const& t);
  // The inclusion of t.
  QuiverOverQ build_E(std::shared_ptr<Quiver const> q, Subquiver const& t);

  // Which of P_T, I_T, E_T exist and which coincide, decided from the shape
  // of t alone (unique source/sink, parallel paths, single path).
  struct Coincidences {
    bool has_p  = false;
    bool has_i  = false;
    bool p_is_e = false;
    bool i_is_e = false;
    bool p_is_i = false;
  };

  Coincidences coincidences(Quiver const& q, Subquiver const& t);

  // Same vertex set, and every vertex pair is joined by an arrow in s exactly
  // when it is joined by one in t.
  bool same_skeleton(Quiver const& q, Subquiver const& s, Subquiver const& t);

  struct PieObject {
    // Canonical kind: E whenever E_T coincides with this object, else P or I.
    PieKind     kind;
    bool        is_p = false;
    bool        is_i = false;
    bool        is_e = false;
    Subquiver   support;
    QuiverOverQ realization;
    std::string key;
    std::string name;
  };

  using PieElement = std::vector<std::int64_t>;

  // The category of all P_T, I_T, E_T over connected subquivers T of an
  // acyclic quiver, with coincident objects merged.
  //
  // Objects are grouped by support (supports ordered by support_less) and
  // ordered P, I, E inside a group; the Hom matrix is verified to be upper
  // unitriangular in that order at build time. Queries are thread-safe;
  // structure constants are memoized on first use.
  class PieCategory {
   public:
    static PieCategory build(std::shared_ptr<Quiver const> q,
                             std::uint64_t                 cap = default_subquiver_cap);

    Quiver const& base() const {
      return *_base;
    }
    std::shared_ptr<Quiver const> const& base_ptr() const noexcept {
      return _base;
    }
    std::size_t size() const noexcept {
      return _objects.size();
    }
    PieObject const& object(std::size_t i) const {
      return _objects.at(i);
    }
    std::vector<PieObject> const& objects() const noexcept {
      return _objects;
    }
    AcyclicCategory const& category() const noexcept {
      return _category;
    }
    std::vector<std::string> names() const;

    // Accepts names with or without braces, e.g. "E_{αβ}" or "E_αβ".
    std::optional<std::size_t> find(std::string const& name) const;
    // Object realizing the given kind on the given support, if defined.
    std::optional<std::size_t> find(PieKind kind, Subquiver const& support) const;

    // Object isomorphic over Q to a connected quiver over Q, if any.
    std::optional<std::size_t> match(QuiverOverQ const& connected) const;

    // Components of x *_Q y as object indices, sorted ascending. Throws
    // InternalError ("PIE not closed") if a component matches no object.
    std::vector<std::size_t> structure_constants(std::size_t x, std::size_t y) const;

    PieElement basis_element(std::size_t x) const;
    PieElement multiply(PieElement const& a, PieElement const& b) const;

    // e_x = sum_z mu(z, x) z.
    PieElement idempotent(std::size_t x) const;

    // E_Q for connected Q; otherwise the sum of E over the components of Q.
    PieElement identity() const;

    // Hom counts from the morphism table (supports, kinds, path counts).
    std::int64_t hom_count_closed_form(std::size_t x, std::size_t y) const;

    // Closed-form mu for supports S subset of T with the same skeleton, where
    // a formula (or its P/I dual) applies; none otherwise.
    std::optional<std::int64_t> mu_closed_form(std::size_t x, std::size_t y) const;

    // "E_{αβ} - P_{αβ} + 2·E_α": the term for lead (if nonzero) first, then by
    // decreasing support size and object order.
    std::string format(PieElement const& el, std::optional<std::size_t> lead = std::nullopt) const;

   private:
    struct Cache;

    std::shared_ptr<Quiver const> _base;
    std::vector<PieObject>        _objects;
    AcyclicCategory               _category;
    std::shared_ptr<Cache>        _cache;
  };

}  // namespace qring

#endif  // QRING_PIE_HPP_
