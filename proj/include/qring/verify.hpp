#ifndef QRING_VERIFY_HPP_
#define QRING_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qring/linearize.hpp"
#include "qring/pie.hpp"
#include "qring/quiver.hpp"

namespace qring {

  struct SuiteResult {
    explicit SuiteResult(std::string name = {}) : suite(std::move(name)) {}

    std::string              suite;
    std::size_t              checks   = 0;
    std::size_t              failed   = 0;
    std::vector<std::string> examples;  // first few counterexamples
    std::string              note;

    bool passed() const noexcept {
      return failed == 0;
    }
    void check(bool ok, std::string const& what);
    void merge(SuiteResult const& other, std::string const& prefix);
  };

  struct VerifyOptions {
    std::vector<std::string> suites;  // empty: all
    std::uint64_t            cap  = default_subquiver_cap;
    std::uint64_t            seed = 0;
    // PIE suites on random quivers only run up to this size.
    std::size_t pie_max_vertices = 4;
    std::size_t pie_max_arrows   = 6;
  };

  // paths, projectives, over-q, linearize, moebius, pie-homs, pie-ring,
  // pie-idempotents, pie-mu.
  std::vector<std::string> const& verify_suite_names();

  // Throws InvalidInput for an unknown suite name or a cyclic quiver.
  std::vector<SuiteResult> verify_quiver(std::shared_ptr<Quiver const> q, VerifyOptions const& opt);

  // count random acyclic quivers (up to 6 vertices, 10 arrows) drawn from
  // opt.seed; PIE suites are skipped for quivers above the PIE size limit.
  std::vector<SuiteResult> verify_random(std::size_t count, VerifyOptions const& opt);

  // Individual checks, usable on hand-made matrices.
  SuiteResult check_moebius(std::vector<std::string> const& names, IntMatrix const& hom, IntMatrix const& moebius);
  SuiteResult check_table(PieCategory const& c, IntMatrix const& hom);
  SuiteResult check_ring(PieCategory const& c, IntMatrix const& hom);

  bool all_passed(std::vector<SuiteResult> const& results);

}  // namespace qring

#endif  // QRING_VERIFY_HPP_
