#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qring/error.hpp"
#include "qring/quiver.hpp"
#include "qring/random.hpp"

using namespace qring;

namespace {

  std::vector<std::string> names_of(Quiver const& q, std::vector<std::size_t> const& idx, bool arrows) {
    std::vector<std::string> out;
    for (auto i : idx) {
      out.push_back(arrows ? q.arrow(i).name : q.vertex_name(i));
    }
    return out;
  }

}  // namespace

TEST(Validate, SingleVertexIsValidAndAcyclic) {
  auto r = validate({{"v"}, {}});
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.acyclic);
}

TEST(Validate, Q3IsValidAndAcyclic) {
  auto r = validate(oracle::q3().to_spec());
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.acyclic);
}

TEST(Validate, LoopIsValidButCyclic) {
  QuiverSpec spec{{"v"}, {{"l", "v", "v"}}};
  auto       r = validate(spec);
  EXPECT_TRUE(r.valid());
  EXPECT_FALSE(r.acyclic);
  Quiver q(spec);
  EXPECT_FALSE(q.is_acyclic());
  EXPECT_THROW(q.topological_order(), InvalidInput);
}

TEST(Validate, RejectsDanglingAndDuplicateNames) {
  EXPECT_FALSE(validate({{"a", "a"}, {}}).valid());
  EXPECT_FALSE(validate({{"a"}, {{"x", "a", "b"}}}).valid());
  EXPECT_FALSE(validate({{"a", "b"}, {{"x", "a", "b"}, {"x", "a", "b"}}}).valid());
  EXPECT_THROW(Quiver(QuiverSpec{{"a"}, {{"x", "a", "b"}}}), InvalidInput);
}

TEST(Paths, Q3ThreeToOne) {
  Quiver q = oracle::q3();
  auto   p = enumerate_paths(q, q.vertex_index("3"), q.vertex_index("1"));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(path_to_string(q, p[0]), "3 -α-> 2 -γ-> 1");
  EXPECT_EQ(path_to_string(q, p[1]), "3 -β-> 2 -γ-> 1");
}

TEST(Paths, TrivialAndEmpty) {
  Quiver q  = oracle::q3();
  auto   p2 = enumerate_paths(q, q.vertex_index("2"), q.vertex_index("2"));
  ASSERT_EQ(p2.size(), 1u);
  EXPECT_TRUE(p2[0].is_trivial());
  EXPECT_TRUE(enumerate_paths(q, q.vertex_index("1"), q.vertex_index("3")).empty());
}

TEST(Paths, CyclicQuiverIsRejected) {
  Quiver q(QuiverSpec{{"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}}});
  EXPECT_THROW(enumerate_paths(q, 0, 1), InvalidInput);
  EXPECT_THROW(path_count_matrix(q), InvalidInput);
}

TEST(PathCounts, Q3) {
  Quiver q = oracle::q3();
  auto   n = path_count_matrix(q);
  auto   i = [&](char const* v) { return q.vertex_index(v); };
  EXPECT_EQ(n(i("3"), i("3")), 1);
  EXPECT_EQ(n(i("2"), i("2")), 1);
  EXPECT_EQ(n(i("1"), i("1")), 1);
  EXPECT_EQ(n(i("3"), i("2")), 2);
  EXPECT_EQ(n(i("3"), i("1")), 2);
  EXPECT_EQ(n(i("2"), i("1")), 1);
  EXPECT_EQ(n(i("2"), i("3")), 0);
  EXPECT_EQ(n(i("1"), i("3")), 0);
  EXPECT_EQ(n(i("1"), i("2")), 0);
}

TEST(PathCounts, LinearQuiver) {
  Quiver q = oracle::make_quiver({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}});
  auto   n = path_count_matrix(q);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_EQ(n(r, c), r <= c ? 1 : 0);
    }
  }
  EXPECT_EQ(path_count_matrix(oracle::make_quiver({"v"}, {}))(0, 0), 1);
}

TEST(PathCounts, MatchBruteForceOnRandomQuivers) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Quiver q = random_acyclic_quiver(rng);
    auto   n = path_count_matrix(q);
    for (std::size_t x = 0; x < q.num_vertices(); ++x) {
      for (std::size_t y = 0; y < q.num_vertices(); ++y) {
        auto brute = oracle::paths(q, x, y);
        ASSERT_EQ(n(x, y), static_cast<std::int64_t>(brute.size()));
        auto listed = enumerate_paths(q, x, y);
        ASSERT_EQ(listed.size(), brute.size());
        for (std::size_t k = 0; k < listed.size(); ++k) {
          EXPECT_TRUE(is_valid_path(q, listed[k]));
          EXPECT_EQ(listed[k].arrows, brute[k]);
        }
      }
    }
  }
}

TEST(Subquivers, Q3HasTen) {
  auto subs = connected_subquivers(oracle::q3());
  EXPECT_EQ(subs.size(), 10u);
}

TEST(Subquivers, SmallCases) {
  EXPECT_EQ(connected_subquivers(oracle::make_quiver({"v"}, {})).size(), 1u);
  EXPECT_EQ(connected_subquivers(oracle::make_quiver({"a", "b"}, {{"x", "a", "b"}})).size(), 3u);
}

TEST(Subquivers, MatchBruteForceAndAreSorted) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    Quiver q = random_acyclic_quiver(rng, 5, 7);
    auto   subs  = connected_subquivers(q);
    auto   brute = oracle::connected_subquivers(q);
    std::sort(brute.begin(), brute.end(), support_less);
    EXPECT_EQ(subs, brute);
    for (std::size_t i = 1; i < subs.size(); ++i) {
      EXPECT_TRUE(support_less(subs[i - 1], subs[i]));
    }
  }
}

TEST(Subquivers, CapExceededNamesTheBound) {
  Quiver q = oracle::q3();
  try {
    connected_subquivers(q, 4);
    FAIL() << "expected CapExceeded";
  } catch (CapExceeded const& e) {
    EXPECT_NE(std::string(e.what()).find("subquiver enumeration cap exceeded"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find('4'), std::string::npos);
  }
}

TEST(Closure, SuccessorAndPredecessor) {
  Quiver q    = oracle::q3();
  auto   full = full_subquiver(q);
  auto   s2   = successor_closure(q, full, q.vertex_index("2"));
  EXPECT_EQ(names_of(q, s2.vertices, false), (std::vector<std::string>{"2", "1"}));
  EXPECT_EQ(names_of(q, s2.arrows, true), (std::vector<std::string>{"γ"}));
  EXPECT_EQ(successor_closure(q, full, q.vertex_index("3")), full);
  auto s1 = successor_closure(q, full, q.vertex_index("1"));
  EXPECT_EQ(s1.vertices.size(), 1u);
  EXPECT_TRUE(s1.arrows.empty());
  auto p2 = predecessor_closure(q, full, q.vertex_index("2"));
  EXPECT_EQ(names_of(q, p2.vertices, false), (std::vector<std::string>{"3", "2"}));
  EXPECT_EQ(p2.arrows.size(), 2u);
  Subquiver just3{{q.vertex_index("3")}, {}};
  EXPECT_THROW(successor_closure(q, just3, q.vertex_index("2")), InvalidInput);
}

TEST(Opposite, ReversesArrows) {
  Quiver ab  = oracle::make_quiver({"a", "b"}, {{"x", "a", "b"}});
  Quiver op  = opposite(ab);
  EXPECT_EQ(op.arrow(0).source, 1u);
  EXPECT_EQ(op.arrow(0).target, 0u);
  Quiver q   = oracle::q3();
  Quiver qop = opposite(q);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    EXPECT_EQ(qop.arrow(a).source, q.arrow(a).target);
    EXPECT_EQ(qop.arrow(a).target, q.arrow(a).source);
  }
  EXPECT_EQ(opposite(qop), q);
}

TEST(Names, SubquiverNames) {
  Quiver q = oracle::q3();
  EXPECT_EQ(subquiver_name(q, Subquiver{{1}, {}}), "2");
  EXPECT_EQ(subquiver_name(q, Subquiver{{0, 1}, {0, 1}}), "αβ");
  EXPECT_EQ(utf8_length("αβ"), 2u);
}
