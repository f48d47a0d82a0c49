#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qring/error.hpp"
#include "qring/io.hpp"
#include "qring/pie.hpp"
#include "qring/random.hpp"

using namespace qring;

namespace {

  PieCategory q3_pie() {
    static PieCategory c = PieCategory::build(std::make_shared<Quiver const>(oracle::q3()));
    return c;
  }

  std::size_t idx(PieCategory const& c, std::string const& name) {
    auto i = c.find(name);
    if (!i) throw std::runtime_error("no object " + name);
    return *i;
  }

  // Element from (coefficient, name) terms.
  PieElement element(PieCategory const& c, std::vector<std::pair<std::int64_t, std::string>> const& terms) {
    PieElement e(c.size(), 0);
    for (auto const& [k, n] : terms) e[idx(c, n)] += k;
    return e;
  }

  IntMatrix brute_hom(PieCategory const& c) {
    IntMatrix h(c.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        h(i, j) = oracle::count_homs(c.object(i).realization, c.object(j).realization);
    return h;
  }

  std::vector<std::shared_ptr<Quiver const>> small_bases() {
    std::vector<std::shared_ptr<Quiver const>> out;
    std::mt19937_64                            rng(61);
    for (int i = 0; i < 25; ++i) {
      out.push_back(std::make_shared<Quiver const>(random_acyclic_quiver(rng, 4, 6)));
    }
    return out;
  }

}  // namespace

TEST(PieObjects, Q3HasFourteen) {
  auto                  c = q3_pie();
  auto                  all = c.names();
    std::set<std::string> names(all.begin(), all.end());
  std::set<std::string> expect{"E_1",      "E_2",      "E_3",      "E_α",      "E_β",
                               "E_γ",      "E_{αβ}",   "E_{αγ}",   "E_{βγ}",   "E_Q",
                               "P_{αβ}",   "I_{αβ}",   "P_Q",      "I_Q"};
  EXPECT_EQ(c.size(), 14u);
  EXPECT_EQ(names, expect);
  std::size_t e_type = 0;
  for (auto const& o : c.objects()) e_type += o.is_e;
  EXPECT_EQ(e_type, 10u);
}

TEST(PieObjects, SmallQuivers) {
  auto one = PieCategory::build(std::make_shared<Quiver const>(oracle::make_quiver({"v"}, {})));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one.object(0).is_p && one.object(0).is_i && one.object(0).is_e);
  auto ab = PieCategory::build(std::make_shared<Quiver const>(oracle::make_quiver({"a", "b"}, {{"x", "a", "b"}})));
  ASSERT_EQ(ab.size(), 3u);
  for (auto const& o : ab.objects()) EXPECT_TRUE(o.is_p && o.is_i && o.is_e);
}

TEST(PieObjects, Realizations) {
  auto        b  = std::make_shared<Quiver const>(oracle::q3());
  auto        pq = build_P(b, full_subquiver(*b));
  EXPECT_EQ(pq.total().num_vertices(), 5u);
  EXPECT_EQ(pq.total().num_arrows(), 4u);
  EXPECT_TRUE(is_wrapping(pq));
  Subquiver ab{{b->vertex_index("3"), b->vertex_index("2")}, {*b->find_arrow("α"), *b->find_arrow("β")}};
  std::sort(ab.vertices.begin(), ab.vertices.end());
  auto iab = build_I(b, ab);
  EXPECT_EQ(iab.fiber(b->vertex_index("3")).size(), 2u);
  EXPECT_EQ(iab.fiber(b->vertex_index("2")).size(), 1u);
  EXPECT_EQ(iab.total().num_arrows(), 2u);
  for (auto const& a : iab.total().arrows()) EXPECT_EQ(iab.vertex_label(a.target), b->vertex_index("2"));
  EXPECT_THROW(build_P(b, Subquiver{{b->vertex_index("2"), b->vertex_index("3")}, {}}), InvalidInput);
}

TEST(PieObjects, SinglePathCoincides) {
  auto      b = std::make_shared<Quiver const>(oracle::q3());
  Subquiver ag{{0, 1, 2}, {*b->find_arrow("α"), *b->find_arrow("γ")}};
  std::sort(ag.arrows.begin(), ag.arrows.end());
  auto e = build_E(b, ag);
  EXPECT_TRUE(iso_over_q(build_P(b, ag), e).has_value());
  EXPECT_TRUE(iso_over_q(build_I(b, ag), e).has_value());
  auto k = coincidences(*b, ag);
  EXPECT_TRUE(k.p_is_e && k.i_is_e && k.p_is_i);
}

TEST(PieObjects, CoincidencesAgreeWithIsomorphism) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    auto b = std::make_shared<Quiver const>(random_acyclic_quiver(rng, 5, 7));
    for (auto const& t : oracle::connected_subquivers(*b)) {
      auto k = coincidences(*b, t);
      EXPECT_EQ(k.has_p, sources(*b, t).size() == 1);
      EXPECT_EQ(k.has_i, sinks(*b, t).size() == 1);
      auto e = build_E(b, t);
      if (k.has_p) EXPECT_EQ(k.p_is_e, iso_over_q(build_P(b, t), e).has_value());
      if (k.has_i) EXPECT_EQ(k.i_is_e, iso_over_q(build_I(b, t), e).has_value());
      if (k.has_p && k.has_i) EXPECT_EQ(k.p_is_i, iso_over_q(build_P(b, t), build_I(b, t)).has_value());
    }
  }
}

TEST(PieObjects, FindAcceptsBracesOrNot) {
  auto c = q3_pie();
  EXPECT_EQ(c.find("E_{αβ}"), c.find("E_αβ"));
  EXPECT_TRUE(c.find("E_αβ").has_value());
  EXPECT_FALSE(c.find("P_1x").has_value());
}

TEST(PieHoms, Q3AgainstBruteForce) {
  auto c = q3_pie();
  EXPECT_EQ(c.category().hom_matrix(), brute_hom(c));
  EXPECT_EQ(c.category().hom(idx(c, "E_2"), idx(c, "P_αβ")), 2);
  EXPECT_EQ(c.category().hom(idx(c, "P_αβ"), idx(c, "P_Q")), 1);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c.hom_count_closed_form(i, j), c.category().hom(i, j));
}

TEST(PieHoms, TableOnSmallBases) {
  for (auto const& b : small_bases()) {
    auto c = PieCategory::build(b);
    auto h = brute_hom(c);
    ASSERT_EQ(c.category().hom_matrix(), h) << quiver_to_json(*b, -1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        ASSERT_EQ(c.hom_count_closed_form(i, j), h(i, j));
        auto const& x = c.object(i);
        auto const& y = c.object(j);
        if (!x.support.is_subset_of(y.support)) EXPECT_EQ(h(i, j), 0);
        if (y.is_e) EXPECT_EQ(h(i, j), x.support.is_subset_of(y.support) ? 1 : 0);
        if (x.is_i && !x.is_p && y.is_p && !y.is_i) EXPECT_EQ(h(i, j), 0);
      }
    }
  }
}

TEST(PieMu, Q3Values) {
  auto c  = q3_pie();
  auto mu = [&](char const* x, char const* y) { return c.category().mu(idx(c, x), idx(c, y)); };
  EXPECT_EQ(c.category().moebius_matrix(), oracle::moebius_left(brute_hom(c)));
  EXPECT_EQ(mu("E_2", "E_αβ"), 0);
  EXPECT_EQ(mu("E_3", "E_αβ"), 0);
  EXPECT_EQ(mu("P_αβ", "E_αβ"), -1);
  EXPECT_EQ(mu("I_αβ", "E_αβ"), -1);
  EXPECT_EQ(mu("E_α", "E_αβ"), 1);
  EXPECT_EQ(mu("E_β", "E_αβ"), 1);
  // A single path S inside a same-skeleton T.
  EXPECT_EQ(mu("E_αγ", "E_Q"), 1);
  EXPECT_EQ(c.mu_closed_form(idx(c, "E_αγ"), idx(c, "E_Q")), 1);
  EXPECT_EQ(c.mu_closed_form(idx(c, "E_α"), idx(c, "E_αβ")), 1);
  EXPECT_FALSE(c.mu_closed_form(idx(c, "E_2"), idx(c, "E_αβ")).has_value());
}

TEST(PieMu, ClosedFormsOnSmallBases) {
  std::size_t covered = 0;
  for (auto const& b : small_bases()) {
    auto c = PieCategory::build(b);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        auto f = c.mu_closed_form(i, j);
        if (f) {
          ++covered;
          ASSERT_EQ(*f, c.category().mu(i, j)) << c.object(i).name << " " << c.object(j).name;
        }
      }
    }
  }
  EXPECT_GT(covered, 0u);
}

TEST(PieRing, Q3Products) {
  auto c    = q3_pie();
  auto prod = [&](char const* x, char const* y) { return c.structure_constants(idx(c, x), idx(c, y)); };
  EXPECT_EQ(prod("E_αβ", "E_αγ"), std::vector<std::size_t>{idx(c, "E_α")});
  auto pi = prod("P_Q", "I_Q");
  std::vector<std::size_t> paths{idx(c, "E_αγ"), idx(c, "E_βγ")};
  std::sort(paths.begin(), paths.end());
  EXPECT_EQ(pi, paths);
  std::vector<std::size_t> pp{idx(c, "P_Q"), idx(c, "E_γ"), idx(c, "E_γ")};
  std::sort(pp.begin(), pp.end());
  EXPECT_EQ(prod("P_Q", "P_Q"), pp);
  for (std::size_t x = 0; x < c.size(); ++x) {
    EXPECT_EQ(c.structure_constants(x, idx(c, "E_Q")), std::vector<std::size_t>{x});
  }
}

TEST(PieRing, ProductWithInclusionRestricts) {
  for (auto const& b : small_bases()) {
    auto c = PieCategory::build(b);
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t t = 0; t < c.size(); ++t) {
        if (!c.object(t).is_e) continue;
        auto                     r = restrict_to(c.object(x).realization, c.object(t).support);
        std::vector<std::size_t> expect;
        for (auto const& comp : connected_components(r)) expect.push_back(*c.match(comp));
        std::sort(expect.begin(), expect.end());
        ASSERT_EQ(c.structure_constants(x, t), expect);
      }
    }
  }
}

TEST(PieRing, HomFormulaForAllTriples) {
  for (auto const& b : small_bases()) {
    auto        c = PieCategory::build(b);
    auto const& h = c.category().hom_matrix();
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t y = 0; y < c.size(); ++y) {
        auto comps = c.structure_constants(x, y);
        EXPECT_EQ(comps, c.structure_constants(y, x));
        for (std::size_t z = 0; z < c.size(); ++z) {
          std::int64_t sum = 0;
          for (auto w : comps) sum += h(z, w);
          ASSERT_EQ(h(z, x) * h(z, y), sum);
        }
      }
    }
  }
}

TEST(PieIdempotents, Q3) {
  auto c = q3_pie();
  EXPECT_EQ(c.idempotent(idx(c, "E_αβ")),
            element(c, {{1, "E_αβ"}, {-1, "P_αβ"}, {-1, "I_αβ"}, {1, "E_α"}, {1, "E_β"}}));
  EXPECT_EQ(c.idempotent(idx(c, "E_3")), c.basis_element(idx(c, "E_3")));
  EXPECT_EQ(c.format(c.idempotent(idx(c, "E_αβ")), idx(c, "E_αβ")), "E_{αβ} - P_{αβ} - I_{αβ} + E_α + E_β");
}

TEST(PieIdempotents, OrthogonalAndSumToIdentity) {
  auto bases = small_bases();
  bases.push_back(std::make_shared<Quiver const>(oracle::q3()));
  for (auto const& b : bases) {
    auto       c = PieCategory::build(b);
    PieElement sum(c.size(), 0);
    for (std::size_t x = 0; x < c.size(); ++x) {
      auto ex = c.idempotent(x);
      for (std::size_t k = 0; k < c.size(); ++k) sum[k] += ex[k];
      for (std::size_t y = 0; y < c.size(); ++y) {
        auto p = c.multiply(ex, c.idempotent(y));
        ASSERT_EQ(p, x == y ? ex : PieElement(c.size(), 0));
      }
    }
    EXPECT_EQ(sum, c.identity());
    for (std::size_t x = 0; x < c.size(); ++x) {
      EXPECT_EQ(c.multiply(c.identity(), c.basis_element(x)), c.basis_element(x));
    }
  }
}

TEST(PieIdempotents, DisconnectedBaseIdentity) {
  auto b = std::make_shared<Quiver const>(oracle::make_quiver({"a", "b", "c"}, {{"x", "a", "b"}}));
  auto c = PieCategory::build(b);
  EXPECT_EQ(c.identity(), element(c, {{1, "E_x"}, {1, "E_c"}}));
}

TEST(PieFormat, Coefficients) {
  auto c = q3_pie();
  EXPECT_EQ(c.format(element(c, {{2, "E_γ"}, {1, "P_Q"}})), "P_Q + 2·E_γ");
  EXPECT_EQ(c.format(element(c, {{-1, "E_1"}})), "-E_1");
  EXPECT_EQ(c.format(PieElement(c.size(), 0)), "0");
}
