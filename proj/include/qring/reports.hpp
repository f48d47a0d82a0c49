#ifndef QRING_REPORTS_HPP_
#define QRING_REPORTS_HPP_

#include <string>
#include <vector>

#include "qring/over_q.hpp"
#include "qring/pie.hpp"
#include "qring/quiver.hpp"
#include "qring/verify.hpp"

namespace qring {

  enum class Format { text, json };

  // Every report ends with a newline. JSON reports carry the same fields as
  // the text form.
  std::string report_validate(QuiverSpec const& spec, Format f);
  std::string report_paths(Quiver const& q, std::string const& x, std::string const& y, Format f);
  std::string report_tensor_proj(Quiver const& q, std::string const& x, std::string const& y, Format f);

  std::string report_pie_list(PieCategory const& c, Format f);
  std::string report_pie_mobius(PieCategory const& c, Format f);
  std::string report_pie_idempotents(PieCategory const& c, Format f);
  std::string report_pie_product(PieCategory const& c, std::string const& x, std::string const& y, Format f);

  std::string report_linearize(QuiverOverQ const& x, Format f);
  std::string report_verify(std::vector<SuiteResult> const& results, Format f);

  // "P(3) + 2·P(2)", terms in vertex order; "0" when every coefficient is 0.
  std::string projective_sum(Quiver const& q, std::vector<std::int64_t> const& coeffs);

}  // namespace qring

#endif  // QRING_REPORTS_HPP_
