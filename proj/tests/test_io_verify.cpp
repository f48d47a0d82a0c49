#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qring/error.hpp"
#include "qring/io.hpp"
#include "qring/pie.hpp"
#include "qring/random.hpp"
#include "qring/reports.hpp"
#include "qring/verify.hpp"

using namespace qring;

TEST(Io, QuiverRoundTrip) {
  Quiver q = oracle::q3();
  EXPECT_EQ(Quiver(parse_quiver_spec(quiver_to_json(q))), q);
  EXPECT_EQ(Quiver(parse_quiver_spec(quiver_to_json(q, -1))), q);
  EXPECT_EQ(quiver_to_json(q, -1).find('\n'), std::string::npos);
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(parse_quiver_spec("{"), InvalidInput);
  EXPECT_THROW(parse_quiver_spec(R"({"vertices": 3})"), InvalidInput);
  EXPECT_THROW(parse_quiver_spec(R"({"vertices": ["a"], "arrows": [{"name": "x"}]})"), InvalidInput);
  EXPECT_THROW(read_file("/nonexistent/q.json"), InvalidInput);
}

TEST(Io, QuiverOverQRoundTrip) {
  auto b = std::make_shared<Quiver const>(oracle::q3());
  auto x = build_P(b, full_subquiver(*b));
  auto y = parse_quiver_over_q(quiver_over_q_to_json(x));
  EXPECT_EQ(y.total(), x.total());
  EXPECT_EQ(y.base(), x.base());
  EXPECT_EQ(y.vertex_labels(), x.vertex_labels());
  EXPECT_EQ(y.arrow_labels(), x.arrow_labels());
}

TEST(Random, DeterministicAndInRange) {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 50; ++i) {
    Quiver qa = random_acyclic_quiver(a);
    Quiver qb = random_acyclic_quiver(b);
    EXPECT_EQ(qa, qb);
    EXPECT_GE(qa.num_vertices(), 1u);
    EXPECT_LE(qa.num_vertices(), 6u);
    EXPECT_LE(qa.num_arrows(), 10u);
    EXPECT_TRUE(qa.is_acyclic());
    for (auto const& arr : qa.arrows()) EXPECT_LT(arr.source, arr.target);
  }
}

TEST(Random, WrappingsAreConnectedWrappings) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    auto base = std::make_shared<Quiver const>(random_acyclic_quiver(rng, 4, 10));
    auto x    = random_connected_wrapping(rng, base, 8);
    EXPECT_TRUE(is_wrapping(x));
    EXPECT_TRUE(is_connected(x));
    EXPECT_LE(x.total().num_vertices(), 8u);
  }
}

TEST(Reports, TensorProj) {
  Quiver q = oracle::q3();
  EXPECT_EQ(report_tensor_proj(q, "3", "3", Format::text), "P(3) ⊗ P(3) = P(3) + 2·P(2)\n");
  EXPECT_EQ(report_tensor_proj(q, "3", "2", Format::text), "P(3) ⊗ P(2) = 2·P(2)\n");
  EXPECT_EQ(report_tensor_proj(q, "1", "1", Format::text), "P(1) ⊗ P(1) = P(1)\n");
}

TEST(Reports, DeterministicOutput) {
  auto b = std::make_shared<Quiver const>(oracle::q3());
  auto c = PieCategory::build(b);
  auto d = PieCategory::build(b);
  for (auto f : {Format::text, Format::json}) {
    EXPECT_EQ(report_pie_list(c, f), report_pie_list(d, f));
    EXPECT_EQ(report_pie_mobius(c, f), report_pie_mobius(d, f));
    EXPECT_EQ(report_pie_idempotents(c, f), report_pie_idempotents(d, f));
  }
  VerifyOptions opt;
  opt.seed = 3;
  EXPECT_EQ(report_verify(verify_random(10, opt), Format::json), report_verify(verify_random(10, opt), Format::json));
}

TEST(Verify, Q3AllSuitesPass) {
  auto r = verify_quiver(std::make_shared<Quiver const>(oracle::q3()), VerifyOptions{});
  EXPECT_EQ(r.size(), verify_suite_names().size());
  for (auto const& s : r) EXPECT_TRUE(s.passed()) << s.suite << ": " << (s.examples.empty() ? "" : s.examples[0]);
}

TEST(Verify, RandomBatchPasses) {
  VerifyOptions opt;
  opt.seed = 1;
  EXPECT_TRUE(all_passed(verify_random(20, opt)));
}

TEST(Verify, UnknownSuiteAndCyclicInputAreRejected) {
  VerifyOptions opt;
  opt.suites = {"nope"};
  EXPECT_THROW(verify_quiver(std::make_shared<Quiver const>(oracle::q3()), opt), InvalidInput);
  auto cyc = std::make_shared<Quiver const>(Quiver(QuiverSpec{{"v"}, {{"l", "v", "v"}}}));
  EXPECT_THROW(verify_quiver(cyc, VerifyOptions{}), InvalidInput);
}

TEST(Verify, CorruptedHomMatrixIsCaught) {
  auto      c = PieCategory::build(std::make_shared<Quiver const>(oracle::q3()));
  IntMatrix h = c.category().hom_matrix();
  auto      e2 = *c.find("E_2"), pab = *c.find("P_αβ");
  h(e2, pab)  = 3;
  auto r      = check_moebius(c.names(), h, c.category().moebius_matrix());
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.examples.empty());
  EXPECT_NE(r.examples[0].find("H M != I"), std::string::npos);
  EXPECT_FALSE(check_table(c, h).passed());
  EXPECT_FALSE(check_ring(c, h).passed());
  EXPECT_TRUE(check_moebius(c.names(), c.category().hom_matrix(), c.category().moebius_matrix()).passed());
}
