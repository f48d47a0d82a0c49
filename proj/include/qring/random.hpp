#ifndef QRING_RANDOM_HPP_
#define QRING_RANDOM_HPP_

#include <cstddef>
#include <memory>
#include <random>

#include "qring/over_q.hpp"
#include "qring/quiver.hpp"

namespace qring {

  // Vertex count uniform in [1, max_vertices], arrow count uniform in
  // [0, max_arrows], each arrow i -> j with i < j drawn uniformly. Vertices
  // are named v0, v1, ... and arrows a0, a1, ...
  Quiver random_acyclic_quiver(std::mt19937_64& rng,
                               std::size_t      max_vertices = 6,
                               std::size_t      max_arrows   = 10);

  // Same distribution, redrawn until the quiver is connected.
  Quiver random_connected_acyclic_quiver(std::mt19937_64& rng,
                                         std::size_t      max_vertices,
                                         std::size_t      max_arrows);

  // A connected wrapping over base with at most max_total vertices: random
  // vertex labels, then each (base arrow, compatible vertex pair) gets an
  // arrow with probability 1/2. Redrawn until connected.
  QuiverOverQ random_connected_wrapping(std::mt19937_64&              rng,
                                        std::shared_ptr<Quiver const> base,
                                        std::size_t                   max_total);

}  // namespace qring

#endif  // QRING_RANDOM_HPP_
