// Exercises the shared library through its C header only.
#include <cstring>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qring/qring.h"

namespace {

  char const* q3_json = R"({"vertices": ["3", "2", "1"], "arrows": [
    {"name": "α", "from": "3", "to": "2"},
    {"name": "β", "from": "3", "to": "2"},
    {"name": "γ", "from": "2", "to": "1"}]})";

  std::string take(char* s) {
    std::string out = s ? s : "";
    qr_string_free(s);
    return out;
  }

  struct Q3 : ::testing::Test {
    qr_quiver* q = nullptr;
    qr_pie*    c = nullptr;
    void       SetUp() override {
      ASSERT_EQ(qr_quiver_from_json(q3_json, &q), QR_OK);
      ASSERT_EQ(qr_pie_build(q, 0, &c), QR_OK);
    }
    void TearDown() override {
      qr_pie_free(c);
      qr_quiver_free(q);
    }
    size_t find(char const* name) {
      size_t i = 0;
      EXPECT_EQ(qr_pie_find(c, name, &i), QR_OK) << name;
      return i;
    }
  };

}  // namespace

TEST_F(Q3, Basics) {
  EXPECT_EQ(qr_quiver_num_vertices(q), 3u);
  EXPECT_EQ(qr_quiver_num_arrows(q), 3u);
  EXPECT_EQ(qr_quiver_is_acyclic(q), 1);
  int64_t n = 0;
  ASSERT_EQ(qr_path_count(q, "3", "1", &n), QR_OK);
  EXPECT_EQ(n, 2);
  std::vector<int64_t> mult(3);
  ASSERT_EQ(qr_tensor_proj(q, "3", "3", mult.data(), mult.size()), QR_OK);
  EXPECT_EQ(mult, (std::vector<int64_t>{1, 2, 0}));
  EXPECT_EQ(qr_tensor_proj(q, "3", "3", mult.data(), 2), QR_ERR_INPUT);
}

TEST_F(Q3, Pie) {
  EXPECT_EQ(qr_pie_size(c), 14u);
  int64_t v = 0;
  ASSERT_EQ(qr_pie_hom(c, find("E_2"), find("P_{αβ}"), &v), QR_OK);
  EXPECT_EQ(v, 2);
  ASSERT_EQ(qr_pie_mu(c, find("P_αβ"), find("E_αβ"), &v), QR_OK);
  EXPECT_EQ(v, -1);
  char* name = nullptr;
  ASSERT_EQ(qr_pie_object_name(c, find("E_αβ"), &name), QR_OK);
  EXPECT_EQ(take(name), "E_{αβ}");
  std::vector<int64_t> e(14);
  ASSERT_EQ(qr_pie_idempotent(c, find("E_3"), e.data(), e.size()), QR_OK);
  std::vector<int64_t> expect(14, 0);
  expect[find("E_3")] = 1;
  EXPECT_EQ(e, expect);
  ASSERT_EQ(qr_pie_product(c, find("P_Q"), find("I_Q"), e.data(), e.size()), QR_OK);
  expect.assign(14, 0);
  expect[find("E_αγ")] = expect[find("E_βγ")] = 1;
  EXPECT_EQ(e, expect);
  size_t i = 0;
  EXPECT_EQ(qr_pie_find(c, "E_nothing", &i), QR_ERR_INPUT);
  EXPECT_NE(std::strlen(qr_last_error()), 0u);
  EXPECT_EQ(qr_pie_hom(c, 99, 0, &v), QR_ERR_INPUT);
}

TEST_F(Q3, Reports) {
  char* out = nullptr;
  ASSERT_EQ(qr_pie_report(c, "idempotents", QR_FORMAT_TEXT, &out), QR_OK);
  EXPECT_NE(take(out).find("E_{αβ} - P_{αβ} - I_{αβ} + E_α + E_β"), std::string::npos);
  ASSERT_EQ(qr_pie_report(c, "list", QR_FORMAT_JSON, &out), QR_OK);
  EXPECT_EQ(take(out).front(), '{');
  EXPECT_EQ(qr_pie_report(c, "bogus", QR_FORMAT_TEXT, &out), QR_ERR_INPUT);
  int passed = 0;
  ASSERT_EQ(qr_verify_quiver(q, "paths,pie-ring", 0, 0, QR_FORMAT_TEXT, &out, &passed), QR_OK);
  take(out);
  EXPECT_EQ(passed, 1);
}

TEST(CApi, Errors) {
  qr_quiver* q = nullptr;
  EXPECT_EQ(qr_quiver_from_json("{", &q), QR_ERR_INPUT);
  EXPECT_EQ(qr_quiver_from_json(nullptr, &q), QR_ERR_INPUT);
  EXPECT_EQ(qr_quiver_from_file("/nonexistent.json", &q), QR_ERR_INPUT);
  ASSERT_EQ(qr_quiver_from_json(R"({"vertices": ["v"], "arrows": [{"name": "l", "from": "v", "to": "v"}]})", &q),
            QR_OK);
  EXPECT_EQ(qr_quiver_is_acyclic(q), 0);
  int64_t n = 0;
  EXPECT_EQ(qr_path_count(q, "v", "v", &n), QR_ERR_INPUT);
  qr_pie* c = nullptr;
  EXPECT_EQ(qr_pie_build(q, 0, &c), QR_ERR_INPUT);
  qr_quiver_free(q);
  ASSERT_EQ(qr_quiver_from_json(q3_json, &q), QR_OK);
  EXPECT_EQ(qr_pie_build(q, 2, &c), QR_ERR_CAP);
  qr_quiver_free(q);
  char* out   = nullptr;
  int   valid = 1;
  ASSERT_EQ(qr_validate_json(R"({"vertices": ["a", "a"], "arrows": []})", QR_FORMAT_TEXT, &out, &valid), QR_OK);
  take(out);
  EXPECT_EQ(valid, 0);
}
