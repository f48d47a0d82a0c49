#ifndef QRING_IO_HPP_
#define QRING_IO_HPP_

#include <memory>
#include <string>

#include "qring/linearize.hpp"
#include "qring/over_q.hpp"
#include "qring/quiver.hpp"

namespace qring {

  // {"vertices": [...], "arrows": [{"name", "from", "to"}, ...]}. Throws
  // InvalidInput on malformed JSON or a wrong shape; membership and
  // uniqueness problems are left to validate().
  QuiverSpec parse_quiver_spec(std::string const& text);
  // indent < 0 gives a single line without a trailing newline.
  std::string quiver_to_json(Quiver const& q, int indent = 2);

  // {"base": <quiver>, "total": <quiver>, "vertexLabel": {total vertex: base
  // vertex}, "arrowLabel": {total arrow: base arrow}}.
  QuiverOverQ parse_quiver_over_q(std::string const& text);
  std::string quiver_over_q_to_json(QuiverOverQ const& x);

  // Dimensions and row-major matrices keyed by vertex and arrow name, in
  // base order.
  std::string representation_to_json(Representation const& r);

  std::string read_file(std::string const& path);

}  // namespace qring

#endif  // QRING_IO_HPP_
