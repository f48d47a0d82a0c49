#include "qring/random.hpp"

#include "qring/error.hpp"

namespace qring {

  namespace {
    std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    constexpr int max_redraws = 10000;
  }  // namespace

  Quiver random_acyclic_quiver(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_arrows) {
    if (max_vertices == 0) {
      throw InvalidInput("random quivers need at least one vertex");
    }
    std::size_t n = uniform(rng, 1, max_vertices);
    std::size_t m = uniform(rng, 0, max_arrows);
    if (n == 1) {
      m = 0;
    }
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) {
      names.push_back("v" + std::to_string(v));
    }
    std::vector<Arrow> arrows;
    for (std::size_t a = 0; a < m; ++a) {
      std::size_t i = uniform(rng, 0, n - 2);
      std::size_t j = uniform(rng, i + 1, n - 1);
      arrows.push_back({"a" + std::to_string(a), i, j});
    }
    return Quiver(std::move(names), std::move(arrows));
  }

  Quiver random_connected_acyclic_quiver(std::mt19937_64& rng,
                                         std::size_t      max_vertices,
                                         std::size_t      max_arrows) {
    for (int attempt = 0; attempt < max_redraws; ++attempt) {
      Quiver q = random_acyclic_quiver(rng, max_vertices, max_arrows);
      if (is_connected(q, full_subquiver(q))) {
        return q;
      }
    }
    throw InternalError("no connected quiver drawn");
  }

  QuiverOverQ random_connected_wrapping(std::mt19937_64&              rng,
                                        std::shared_ptr<Quiver const> base,
                                        std::size_t                   max_total) {
    if (base->num_vertices() == 0 || max_total == 0) {
      throw InvalidInput("random wrappings need a nonempty base and total");
    }
    for (int attempt = 0; attempt < max_redraws; ++attempt) {
      std::size_t              k = uniform(rng, 1, max_total);
      std::vector<std::string> names;
      std::vector<std::size_t> vlabels;
      for (std::size_t v = 0; v < k; ++v) {
        names.push_back("u" + std::to_string(v));
        vlabels.push_back(uniform(rng, 0, base->num_vertices() - 1));
      }
      std::vector<Arrow>       arrows;
      std::vector<std::size_t> alabels;
      for (std::size_t a = 0; a < base->num_arrows(); ++a) {
        auto const& arr = base->arrow(a);
        for (std::size_t u = 0; u < k; ++u) {
          for (std::size_t w = 0; w < k; ++w) {
            if (vlabels[u] == arr.source && vlabels[w] == arr.target && uniform(rng, 0, 1) == 1) {
              arrows.push_back({"b" + std::to_string(arrows.size()), u, w});
              alabels.push_back(a);
            }
          }
        }
      }
      QuiverOverQ x(base, Quiver(std::move(names), std::move(arrows)), std::move(vlabels),
                    std::move(alabels));
      if (is_connected(x)) {
        return x;
      }
    }
    throw InternalError("no connected wrapping drawn");
  }

}  // namespace qring
