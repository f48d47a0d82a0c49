#include "qring/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "qring/error.hpp"
#include "qring/io.hpp"
#include "qring/projectives.hpp"
#include "qring/random.hpp"

namespace qring {

  namespace {
    constexpr std::size_t max_examples = 5;

    std::string str(std::vector<std::int64_t> const& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s + ")";
    }
  }  // namespace

  void SuiteResult::check(bool ok, std::string const& what) {
    ++checks;
    if (!ok) {
      ++failed;
      if (examples.size() < max_examples) {
        examples.push_back(what);
      }
    }
  }

  void SuiteResult::merge(SuiteResult const& other, std::string const& prefix) {
    checks += other.checks;
    failed += other.failed;
    for (auto const& e : other.examples) {
      if (examples.size() < max_examples) {
        examples.push_back(prefix + e);
      }
    }
  }

  std::vector<std::string> const& verify_suite_names() {
    static std::vector<std::string> const names = {
        "paths",    "projectives", "over-q",          "linearize", "moebius",
        "pie-homs", "pie-ring",    "pie-idempotents", "pie-mu"};
    return names;
  }

  bool all_passed(std::vector<SuiteResult> const& results) {
    return std::all_of(results.begin(), results.end(), [](auto const& r) { return r.passed(); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Quiver-level suites
  ////////////////////////////////////////////////////////////////////////

  namespace {
    SuiteResult suite_paths(Quiver const& q, std::uint64_t cap) {
      SuiteResult r{"paths"};
      auto        n = path_count_matrix(q);
      for (std::size_t x = 0; x < q.num_vertices(); ++x) {
        for (std::size_t y = 0; y < q.num_vertices(); ++y) {
          auto listed = enumerate_paths(q, x, y);
          r.check(static_cast<std::int64_t>(listed.size()) == n(x, y),
                  "n(" + q.vertex_name(x) + "," + q.vertex_name(y) + ") = " + std::to_string(n(x, y))
                      + " but " + std::to_string(listed.size()) + " paths enumerated");
          if (x != y) {
            std::int64_t sum = 0;
            for (std::size_t a : q.in_arrows(y)) {
              sum += n(x, q.arrow(a).source);
            }
            r.check(sum == n(x, y), "path count recurrence fails at (" + q.vertex_name(x) + ","
                                        + q.vertex_name(y) + ")");
          }
        }
      }

      auto subs = connected_subquivers(q, cap);
      r.check(std::set<Subquiver>(subs.begin(), subs.end()).size() == subs.size(),
              "connected subquiver list has duplicates");
      for (auto const& s : subs) {
        r.check(is_closed(q, s) && is_connected(q, s),
                "subquiver " + subquiver_name(q, s) + " is not closed and connected");
        for (std::size_t i : s.vertices) {
          auto c = successor_closure(q, s, i);
          r.check(successor_closure(q, c, i) == c, "successor closure of " + q.vertex_name(i)
                                                       + " in " + subquiver_name(q, s)
                                                       + " is not idempotent");
        }
      }
      r.check(opposite(opposite(q)) == q, "opposite is not an involution");
      return r;
    }

    // Solves C c = b by elimination on the rows of C taken in topological
    // order, using C itself rather than its stored inverse.
    std::vector<std::int64_t> cartan_solve(Quiver const& q, IntMatrix const& c, std::vector<std::int64_t> b) {
      auto const&               topo = q.topological_order();
      std::vector<std::int64_t> sol(b.size(), 0);
      for (std::size_t k = 0; k < topo.size(); ++k) {
        std::size_t  w   = topo[k];
        std::int64_t val = b[w];
        for (std::size_t i = 0; i < k; ++i) {
          val = checked_sub(val, checked_mul(c(w, topo[i]), sol[topo[i]]));
        }
        sol[w] = val;
      }
      return sol;
    }

    SuiteResult suite_projectives(std::shared_ptr<Quiver const> const& qp) {
      Quiver const&  q = *qp;
      SuiteResult    r{"projectives"};
      ProjectiveRing ring(q);
      auto const&    n    = ring.path_counts();
      auto const&    c    = ring.cartan();
      std::size_t    rank = ring.rank();

      r.check(c.matrix * c.inverse == IntMatrix::identity(rank), "C C^-1 != I");
      for (std::size_t x = 0; x < rank; ++x) {
        for (std::size_t y = 0; y < rank; ++y) {
          std::vector<std::int64_t> target(rank);
          for (std::size_t w = 0; w < rank; ++w) {
            target[w] = checked_mul(n(x, w), n(y, w));
          }
          auto expect = cartan_solve(q, c.matrix, target);
          auto got    = ring.tensor_projectives(x, y);
          std::string at = "P(" + q.vertex_name(x) + ") x P(" + q.vertex_name(y) + ")";
          r.check(got == expect, at + ": closed form " + str(got) + ", Cartan solve " + str(expect));
          r.check(std::all_of(got.begin(), got.end(), [](auto v) { return v >= 0; }),
                  at + ": negative multiplicity");

          // Matrix level: linearizations of the path-space quivers.
          auto full = full_subquiver(q);
          auto px   = linearization(build_P(qp, successor_closure(q, full, x)));
          auto py   = linearization(build_P(qp, successor_closure(q, full, y)));
          std::vector<std::int64_t> dims(rank, 0);
          for (std::size_t w = 0; w < rank; ++w) {
            for (std::size_t v = 0; v < rank; ++v) {
              dims[v] += got[w] * n(w, v);
            }
          }
          r.check(dimension_vector(tensor(px, py)) == dims,
                  at + ": dimension vector of the linearized tensor differs");

          auto exy = ring.multiply(ring.idempotent(x), ring.idempotent(y));
          auto ok  = x == y ? exy == ring.idempotent(x)
                            : exy == ProjectiveElement{ProjectiveBasis::idempotent,
                                                       std::vector<std::int64_t>(rank, 0)};
          r.check(ok, "e(" + q.vertex_name(x) + ") e(" + q.vertex_name(y) + ") = " + str(exy.coeffs));
        }
      }
      return r;
    }

    // Samples for the universal-property and linearization checks.
    std::vector<QuiverOverQ> sample_objects(std::shared_ptr<Quiver const> const& q,
                                            PieCategory const*                   pie,
                                            std::uint64_t                        seed) {
      std::vector<QuiverOverQ> out;
      if (q->num_vertices() == 0) {
        return out;
      }
      std::mt19937_64 rng(seed);
      for (int i = 0; i < 8; ++i) {
        out.push_back(random_connected_wrapping(rng, q, 6));
      }
      if (pie) {
        std::size_t step = std::max<std::size_t>(1, pie->size() / 8);
        for (std::size_t i = 0; i < pie->size(); i += step) {
          out.push_back(pie->object(i).realization);
        }
      }
      return out;
    }

    SuiteResult suite_over_q(std::vector<QuiverOverQ> const& sample) {
      SuiteResult r{"over-q"};
      for (std::size_t i = 0; i < sample.size(); ++i) {
        r.check(iso_over_q(sample[i], sample[i]).has_value(), "no identity isomorphism");
        for (std::size_t j = 0; j < sample.size(); ++j) {
          auto const& x  = sample[i];
          auto const& y  = sample[j];
          auto        fp = fiber_product(x, y);
          std::string at = "sample pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
          r.check(is_wrapping(fp), at + ": fiber product is not a wrapping");
          r.check(iso_over_q(x, y).has_value() == iso_over_q(y, x).has_value(),
                  at + ": isomorphism test is not symmetric");
          auto comps = connected_components(fp);
          for (auto const& z : sample) {
            std::int64_t lhs = count_homs(z, fp);
            r.check(lhs == count_homs(z, x) * count_homs(z, y),
                    at + ": universal property fails");
            std::int64_t sum = 0;
            for (auto const& w : comps) {
              sum += count_homs(z, w);
            }
            r.check(sum == lhs, at + ": Hom count does not split over components");
          }
        }
      }
      return r;
    }

    SuiteResult suite_linearize(std::vector<QuiverOverQ> const& sample) {
      SuiteResult r{"linearize"};
      for (std::size_t i = 0; i < sample.size(); ++i) {
        auto const& x  = sample[i];
        auto        lx = linearization(x);
        for (std::size_t v = 0; v < x.base().num_vertices(); ++v) {
          r.check(lx.dim(v) == x.fiber(v).size(), "dimension is not the fiber size");
        }
        for (std::size_t j = 0; j < sample.size(); ++j) {
          auto const& y = sample[j];
          r.check(representations_equal(tensor(lx, linearization(y)),
                                        linearization(fiber_product(x, y))),
                  "tensor of linearizations differs from linearized fiber product for sample pair ("
                      + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
      return r;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Category-level checks
  ////////////////////////////////////////////////////////////////////////

  SuiteResult check_moebius(std::vector<std::string> const& names, IntMatrix const& h, IntMatrix const& m) {
    SuiteResult       r{"moebius"};
    std::size_t const n = names.size();
    r.check(h * m == IntMatrix::identity(n), "H M != I");
    r.check(m * h == IntMatrix::identity(n), "M H != I");
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (h(x, y) == 0) {
          r.check(m(x, y) == 0, "mu(" + names[x] + "," + names[y] + ") != 0 although [x,y] = 0");
        }
        if (x != y) {
          std::int64_t sum = 0;
          for (std::size_t z = 0; z < n; ++z) {
            sum = checked_add(sum, checked_mul(m(x, z), h(z, y)));
          }
          r.check(sum == 0, "sum_z mu(" + names[x] + ",z)[z," + names[y] + "] != 0");
        }
      }
    }
    try {
      AcyclicCategory c(names, h);
      IntMatrix       rec = c.moebius_by_recursion();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          r.check(rec(x, y) == m(x, y), "recursion gives mu(" + names[x] + "," + names[y]
                                            + ") = " + std::to_string(rec(x, y)) + ", matrix has "
                                            + std::to_string(m(x, y)));
        }
      }
    } catch (InvalidInput const& e) {
      r.check(false, e.what());
    }
    return r;
  }

  namespace {
    void check_products(SuiteResult& r, AcyclicCategory const& c) {
      std::size_t const n = c.size();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          auto a = multiply(c, object_element(c, x), object_element(c, y));
          auto b = multiply_by_hom_formula(c, object_element(c, x), object_element(c, y));
          r.check(a == b, "delta-basis and Hom-formula products differ for (" + c.names()[x] + ","
                              + c.names()[y] + ")");
        }
      }
    }
  }  // namespace

  SuiteResult check_table(PieCategory const& c, IntMatrix const& h) {
    SuiteResult r{"pie-homs"};
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t y = 0; y < c.size(); ++y) {
        std::int64_t closed = c.hom_count_closed_form(x, y);
        r.check(closed == h(x, y), "[" + c.object(x).name + "," + c.object(y).name + "]: table gives "
                                       + std::to_string(closed) + ", count gives "
                                       + std::to_string(h(x, y)));
      }
    }
    return r;
  }

  namespace {
    // Kinds a product component must have, given the roles its factors can play.
    bool component_kind_ok(PieObject const& x, PieObject const& y, PieObject const& w) {
      auto kinds = [](PieObject const& o) {
        std::vector<PieKind> k;
        if (o.is_p) k.push_back(PieKind::P);
        if (o.is_i) k.push_back(PieKind::I);
        if (o.is_e) k.push_back(PieKind::E);
        return k;
      };
      for (PieKind a : kinds(x)) {
        for (PieKind b : kinds(y)) {
          if (a > b) {
            std::swap(a, b);
          }
          bool ok = true;
          if (a == PieKind::E && b == PieKind::E) {
            ok = w.is_e;
          } else if (a == PieKind::P && b == PieKind::I) {
            ok = w.is_p && w.is_i && w.is_e;
          } else if (a == PieKind::P) {
            ok = w.is_p;
          } else {
            ok = w.is_i;
          }
          if (!ok) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  SuiteResult check_ring(PieCategory const& c, IntMatrix const& h) {
    SuiteResult       r{"pie-ring"};
    std::size_t const n = c.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x; y < n; ++y) {
        auto comps = c.structure_constants(x, y);
        for (std::size_t w : comps) {
          r.check(component_kind_ok(c.object(x), c.object(y), c.object(w)),
                  c.object(x).name + " x " + c.object(y).name + " has component " + c.object(w).name
                      + " of the wrong kind");
        }
        for (std::size_t z = 0; z < n; ++z) {
          std::int64_t sum = 0;
          for (std::size_t w : comps) {
            sum = checked_add(sum, h(z, w));
          }
          r.check(checked_mul(h(z, x), h(z, y)) == sum,
                  "[z,x][z,y] != sum [z,w_i] for z = " + c.object(z).name + ", x = "
                      + c.object(x).name + ", y = " + c.object(y).name);
        }
      }
    }
    return r;
  }

  namespace {
    SuiteResult suite_idempotents(PieCategory const& c) {
      SuiteResult             r{"pie-idempotents"};
      std::size_t const       n = c.size();
      std::vector<PieElement> e;
      for (std::size_t x = 0; x < n; ++x) {
        e.push_back(c.idempotent(x));
      }
      PieElement total(n, 0);
      PieElement zero(n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) {
          total[z] += e[x][z];
        }
        for (std::size_t y = x; y < n; ++y) {
          auto prod = c.multiply(e[x], e[y]);
          r.check(prod == (x == y ? e[x] : zero),
                  "e[" + c.object(x).name + "] e[" + c.object(y).name + "] = " + c.format(prod));
        }
      }
      r.check(total == c.identity(), "sum of idempotents is " + c.format(total));
      return r;
    }

    SuiteResult suite_mu(PieCategory const& c) {
      SuiteResult r{"pie-mu"};
      std::size_t covered = 0;
      for (std::size_t x = 0; x < c.size(); ++x) {
        for (std::size_t y = 0; y < c.size(); ++y) {
          if (auto v = c.mu_closed_form(x, y)) {
            ++covered;
            std::int64_t mu = c.category().mu(x, y);
            r.check(*v == mu, "mu(" + c.object(x).name + "," + c.object(y).name + "): closed form "
                                  + std::to_string(*v) + ", matrix " + std::to_string(mu));
          }
        }
      }
      r.note = std::to_string(covered) + " pairs with a closed form";
      return r;
    }

    bool is_pie_suite(std::string const& s) {
      return s.rfind("pie", 0) == 0 || s == "moebius";
    }

    std::vector<std::string> selected(VerifyOptions const& opt) {
      if (opt.suites.empty()) {
        return verify_suite_names();
      }
      auto const& all = verify_suite_names();
      for (auto const& s : opt.suites) {
        if (std::find(all.begin(), all.end(), s) == all.end()) {
          throw InvalidInput("unknown suite '" + s + "'");
        }
      }
      std::vector<std::string> out;
      for (auto const& s : all) {
        if (std::find(opt.suites.begin(), opt.suites.end(), s) != opt.suites.end()) {
          out.push_back(s);
        }
      }
      return out;
    }

    SuiteResult guarded(std::string const& name, std::function<SuiteResult()> const& run) {
      try {
        return run();
      } catch (InternalError const& e) {
        SuiteResult r{name};
        r.check(false, std::string("internal check failed: ") + e.what());
        return r;
      }
    }

    std::vector<SuiteResult> run_suites(std::shared_ptr<Quiver const> const& q,
                                        std::vector<std::string> const&      suites,
                                        VerifyOptions const&                 opt,
                                        bool                                 with_pie) {
      std::optional<PieCategory> pie;
      bool const needs_pie = with_pie && std::any_of(suites.begin(), suites.end(), [](auto const& s) {
                               return is_pie_suite(s) || s == "over-q" || s == "linearize";
                             });
      std::string pie_error;
      if (needs_pie) {
        try {
          pie = PieCategory::build(q, opt.cap);
        } catch (InternalError const& e) {
          pie_error = e.what();
        }
      }
      std::vector<QuiverOverQ> sample;
      bool                     sampled = false;
      auto get_sample = [&]() -> std::vector<QuiverOverQ> const& {
        if (!sampled) {
          sample  = sample_objects(q, pie ? &*pie : nullptr, opt.seed);
          sampled = true;
        }
        return sample;
      };

      std::vector<SuiteResult> out;
      for (auto const& s : suites) {
        if (is_pie_suite(s) && !pie) {
          SuiteResult r{s};
          if (!pie_error.empty()) {
            r.check(false, "building the PIE category failed: " + pie_error);
          } else {
            r.note = "skipped";
          }
          out.push_back(r);
          continue;
        }
        out.push_back(guarded(s, [&]() -> SuiteResult {
          if (s == "paths") return suite_paths(*q, opt.cap);
          if (s == "projectives") return suite_projectives(q);
          if (s == "over-q") return suite_over_q(get_sample());
          if (s == "linearize") return suite_linearize(get_sample());
          auto const& cat = pie->category();
          if (s == "moebius") {
            auto r = check_moebius(cat.names(), cat.hom_matrix(), cat.moebius_matrix());
            check_products(r, cat);
            return r;
          }
          if (s == "pie-homs") return check_table(*pie, cat.hom_matrix());
          if (s == "pie-ring") return check_ring(*pie, cat.hom_matrix());
          if (s == "pie-idempotents") return suite_idempotents(*pie);
          return suite_mu(*pie);
        }));
      }
      return out;
    }
  }  // namespace

  std::vector<SuiteResult> verify_quiver(std::shared_ptr<Quiver const> q, VerifyOptions const& opt) {
    auto suites = selected(opt);
    if (!q->is_acyclic()) {
      throw InvalidInput("verify needs an acyclic quiver");
    }
    return run_suites(q, suites, opt, true);
  }

  std::vector<SuiteResult> verify_random(std::size_t count, VerifyOptions const& opt) {
    auto                     suites = selected(opt);
    std::vector<SuiteResult> total;
    for (auto const& s : suites) {
      total.push_back(SuiteResult{s});
    }
    std::vector<std::size_t> skipped(suites.size(), 0);
    std::mt19937_64          rng(opt.seed);
    for (std::size_t i = 0; i < count; ++i) {
      auto q = std::make_shared<Quiver const>(random_acyclic_quiver(rng));
      bool small =
          q->num_vertices() <= opt.pie_max_vertices && q->num_arrows() <= opt.pie_max_arrows;
      VerifyOptions sub = opt;
      sub.seed          = opt.seed + i + 1;
      auto results      = run_suites(q, suites, sub, small);
      for (std::size_t k = 0; k < suites.size(); ++k) {
        if (results[k].note == "skipped") {
          ++skipped[k];
        }
        total[k].merge(results[k], "quiver " + quiver_to_json(*q, -1) + ": ");
      }
    }
    for (std::size_t k = 0; k < suites.size(); ++k) {
      if (skipped[k] > 0) {
        total[k].note = std::to_string(skipped[k]) + " of " + std::to_string(count)
                        + " quivers above the PIE size limit skipped";
      }
    }
    return total;
  }

}  // namespace qring
