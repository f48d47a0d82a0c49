#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qring/error.hpp"
#include "qring/over_q.hpp"
#include "qring/pie.hpp"
#include "qring/random.hpp"

using namespace qring;

namespace {

  auto q3ptr() {
    return std::make_shared<Quiver const>(oracle::q3());
  }

  // Quiver over base from (name, base vertex) and (name, from, to, base arrow).
  QuiverOverQ over(std::shared_ptr<Quiver const>                                                  base,
                   std::vector<std::pair<std::string, std::string>> const&                         verts,
                   std::vector<std::tuple<std::string, std::string, std::string, std::string>> const& arrows) {
    QuiverSpec               spec;
    std::vector<std::size_t> vl, al;
    for (auto const& [n, b] : verts) {
      spec.vertices.push_back(n);
      vl.push_back(base->vertex_index(b));
    }
    for (auto const& [n, f, t, b] : arrows) {
      spec.arrows.push_back({n, f, t});
      al.push_back(*base->find_arrow(b));
    }
    return QuiverOverQ(base, Quiver(spec), vl, al);
  }

  // The natural structure quiver of P(3) over Q3.
  QuiverOverQ q_prime(std::shared_ptr<Quiver const> b) {
    return over(b,
                {{"3", "3"}, {"2a", "2"}, {"2b", "2"}, {"1a", "1"}, {"1b", "1"}},
                {{"a", "3", "2a", "α"}, {"b", "3", "2b", "β"}, {"c", "2a", "1a", "γ"}, {"d", "2b", "1b", "γ"}});
  }

  // Same, plus one more arrow over gamma.
  QuiverOverQ q_double_prime(std::shared_ptr<Quiver const> b) {
    return over(b,
                {{"3", "3"}, {"2a", "2"}, {"2b", "2"}, {"1a", "1"}, {"1b", "1"}},
                {{"a", "3", "2a", "α"},
                 {"b", "3", "2b", "β"},
                 {"c", "2a", "1a", "γ"},
                 {"d", "2b", "1b", "γ"},
                 {"e", "2a", "1b", "γ"}});
  }

  Subquiver sub(Quiver const& q, std::vector<std::string> const& arrows, std::vector<std::string> verts = {}) {
    Subquiver s;
    for (auto const& a : arrows) {
      std::size_t i = *q.find_arrow(a);
      s.arrows.push_back(i);
      verts.push_back(q.vertex_name(q.arrow(i).source));
      verts.push_back(q.vertex_name(q.arrow(i).target));
    }
    for (auto const& v : verts) {
      s.vertices.push_back(q.vertex_index(v));
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
    std::sort(s.arrows.begin(), s.arrows.end());
    return s;
  }

}  // namespace

TEST(OverQ, RejectsIncompatibleLabels) {
  auto b = q3ptr();
  EXPECT_THROW(over(b, {{"x", "3"}, {"y", "1"}}, {{"a", "x", "y", "α"}}), InvalidInput);
}

TEST(Wrapping, InjectiveLabelsAndParallelDuplicates) {
  auto b = q3ptr();
  EXPECT_TRUE(is_wrapping(build_E(b, full_subquiver(*b))));
  auto bad = over(b, {{"x", "2"}, {"y", "1"}}, {{"g1", "x", "y", "γ"}, {"g2", "x", "y", "γ"}});
  EXPECT_FALSE(is_wrapping(bad));
  EXPECT_TRUE(is_wrapping(q_prime(b)));
  EXPECT_TRUE(is_wrapping(q_double_prime(b)));
}

TEST(Homs, VertexIntoDoubleArrowProjective) {
  auto b = q3ptr();
  auto e2 = build_E(b, sub(*b, {}, {"2"}));
  auto pab = build_P(b, sub(*b, {"α", "β"}));
  EXPECT_EQ(count_homs(e2, pab), 2);
  EXPECT_EQ(oracle::count_homs(e2, pab), 2);
}

TEST(Homs, SupportNotContainedGivesZero) {
  auto b   = q3ptr();
  auto eag = build_E(b, sub(*b, {"α", "γ"}));
  auto eab = build_E(b, sub(*b, {"α", "β"}));
  EXPECT_EQ(count_homs(eag, eab), 0);
  EXPECT_EQ(count_homs(build_E(b, sub(*b, {}, {"1"})), eab), 0);
}

TEST(Homs, EmbeddingOfNaturalStructureQuiver) {
  auto b = q3ptr();
  EXPECT_EQ(count_homs(q_prime(b), q_prime(b)), oracle::count_homs(q_prime(b), q_prime(b)));
  EXPECT_GE(count_homs(q_prime(b), q_double_prime(b)), 1);
  EXPECT_EQ(count_homs(q_prime(b), q_double_prime(b)), oracle::count_homs(q_prime(b), q_double_prime(b)));
}

TEST(Homs, MatchBruteForceOnRandomWrappings) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    auto base = std::make_shared<Quiver const>(random_connected_acyclic_quiver(rng, 4, 6));
    auto x    = random_connected_wrapping(rng, base, 5);
    auto y    = random_connected_wrapping(rng, base, 5);
    ASSERT_EQ(count_homs(x, y), oracle::count_homs(x, y));
    ASSERT_EQ(count_homs(y, x), oracle::count_homs(y, x));
  }
}

TEST(FiberProduct, PQTimesIQIsTwoMaximalPaths) {
  auto b     = q3ptr();
  auto full  = full_subquiver(*b);
  auto fp    = fiber_product(build_P(b, full), build_I(b, full));
  auto comps = connected_components(fp);
  ASSERT_EQ(comps.size(), 2u);
  auto eag = build_E(b, sub(*b, {"α", "γ"}));
  auto ebg = build_E(b, sub(*b, {"β", "γ"}));
  bool first_ag = iso_over_q(comps[0], eag).has_value();
  EXPECT_TRUE(first_ag ? iso_over_q(comps[1], ebg).has_value() : iso_over_q(comps[0], ebg).has_value());
  EXPECT_TRUE(first_ag || iso_over_q(comps[1], eag).has_value());
}

TEST(FiberProduct, UniversalPropertyCounts) {
  // Hom(z, x *_Q y) = Hom(z, x) * Hom(z, y).
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    auto base = std::make_shared<Quiver const>(random_connected_acyclic_quiver(rng, 3, 4));
    auto x    = random_connected_wrapping(rng, base, 4);
    auto y    = random_connected_wrapping(rng, base, 4);
    auto z    = random_connected_wrapping(rng, base, 3);
    auto fp   = fiber_product(x, y);
    ASSERT_EQ(oracle::count_homs(z, fp), oracle::count_homs(z, x) * oracle::count_homs(z, y));
  }
}

TEST(Components, Basics) {
  auto b = q3ptr();
  EXPECT_EQ(connected_components(q_prime(b)).size(), 1u);
  auto e1 = build_E(b, sub(*b, {}, {"1"}));
  auto e3 = build_E(b, sub(*b, {}, {"3"}));
  EXPECT_TRUE(connected_components(fiber_product(e1, e3)).empty());
}

TEST(Iso, Basics) {
  auto b = q3ptr();
  auto p = q_prime(b);
  auto g = iso_over_q(p, p);
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(is_morphism(p, p, *g));
  EXPECT_FALSE(iso_over_q(build_E(b, full_subquiver(*b)), p).has_value());
  EXPECT_FALSE(iso_over_q(p, q_double_prime(b)).has_value());
  EXPECT_TRUE(iso_over_q(p, build_P(b, full_subquiver(*b))).has_value());
}

TEST(Iso, RandomRelabelingIsFound) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto base = std::make_shared<Quiver const>(random_connected_acyclic_quiver(rng, 4, 6));
    auto x    = random_connected_wrapping(rng, base, 6);
    // Reverse the vertex order of the total quiver.
    std::size_t              n = x.total().num_vertices();
    std::vector<std::string> names(n);
    std::vector<std::size_t> vl(n);
    for (std::size_t v = 0; v < n; ++v) {
      names[n - 1 - v] = x.total().vertex_name(v);
      vl[n - 1 - v]    = x.vertex_label(v);
    }
    std::vector<Arrow> arrows;
    for (auto const& a : x.total().arrows()) {
      arrows.push_back({a.name, n - 1 - a.source, n - 1 - a.target});
    }
    QuiverOverQ y(base, Quiver(names, arrows), vl, x.arrow_labels());
    auto        g = iso_over_q(x, y);
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(is_morphism(x, y, *g));
  }
}

TEST(Restrict, ToSubquiver) {
  auto b = q3ptr();
  auto r = restrict_to(q_prime(b), sub(*b, {"α", "β"}));
  EXPECT_EQ(r.total().num_vertices(), 3u);
  EXPECT_EQ(r.total().num_arrows(), 2u);
  EXPECT_EQ(support(r), sub(*b, {"α", "β"}));
}
