#include "qring/qring.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "qring/error.hpp"
#include "qring/io.hpp"
#include "qring/pie.hpp"
#include "qring/projectives.hpp"
#include "qring/reports.hpp"
#include "qring/verify.hpp"

struct qr_quiver {
  std::shared_ptr<qring::Quiver const> q;
};

struct qr_pie {
  qring::PieCategory c;
};

namespace {
  thread_local std::string last_error;

  qr_status fail(qr_status s, std::string const& msg) {
    last_error = msg;
    return s;
  }

  template <class F>
  qr_status guard(F&& f) {
    try {
      f();
      last_error.clear();
      return QR_OK;
    } catch (qring::Error const& e) {
      switch (e.kind()) {
        case qring::ErrorKind::invalid_input: return fail(QR_ERR_INPUT, e.what());
        case qring::ErrorKind::cap_exceeded: return fail(QR_ERR_CAP, e.what());
        case qring::ErrorKind::internal: return fail(QR_ERR_INTERNAL, e.what());
      }
      return fail(QR_ERR_INTERNAL, e.what());
    } catch (std::bad_alloc const&) {
      return fail(QR_ERR_CAP, "out of memory");
    } catch (std::exception const& e) {
      return fail(QR_ERR_INTERNAL, e.what());
    }
  }

  void require(void const* p, char const* what) {
    if (p == nullptr) {
      throw qring::InvalidInput(std::string(what) + " is null");
    }
  }

  char* dup(std::string const& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  void put(char** out, std::string const& s) {
    require(out, "output pointer");
    *out = dup(s);
  }

  qring::Format format_of(qr_format f) {
    return f == QR_FORMAT_JSON ? qring::Format::json : qring::Format::text;
  }

  std::uint64_t cap_or_default(std::uint64_t cap) {
    return cap == 0 ? qring::default_subquiver_cap : cap;
  }

  std::vector<std::string> split_suites(char const* suites) {
    std::vector<std::string> out;
    if (suites == nullptr) {
      return out;
    }
    std::istringstream in(suites);
    std::string        item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) {
        out.push_back(item);
      }
    }
    return out;
  }

  void check_index(qr_pie const* c, std::size_t i) {
    if (i >= c->c.size()) {
      throw qring::InvalidInput("object index " + std::to_string(i) + " out of range");
    }
  }

  void copy_out(std::vector<std::int64_t> const& v, std::int64_t* dst, std::size_t len) {
    require(dst, "output array");
    if (len != v.size()) {
      throw qring::InvalidInput("output array has length " + std::to_string(len) + ", expected "
                                + std::to_string(v.size()));
    }
    std::copy(v.begin(), v.end(), dst);
  }
}  // namespace

extern "C" {

const char* qr_version(void) {
  return "0.1.0";
}

const char* qr_last_error(void) {
  return last_error.c_str();
}

void qr_string_free(char* s) {
  std::free(s);
}

qr_status qr_quiver_from_json(const char* json, qr_quiver** out) {
  return guard([&] {
    require(json, "json");
    require(out, "output pointer");
    auto q = std::make_shared<qring::Quiver const>(qring::Quiver(qring::parse_quiver_spec(json)));
    *out   = new qr_quiver{std::move(q)};
  });
}

qr_status qr_quiver_from_file(const char* path, qr_quiver** out) {
  return guard([&] {
    require(path, "path");
    std::string text = qring::read_file(path);
    require(out, "output pointer");
    auto q = std::make_shared<qring::Quiver const>(qring::Quiver(qring::parse_quiver_spec(text)));
    *out   = new qr_quiver{std::move(q)};
  });
}

void qr_quiver_free(qr_quiver* q) {
  delete q;
}

size_t qr_quiver_num_vertices(const qr_quiver* q) {
  return q ? q->q->num_vertices() : 0;
}

size_t qr_quiver_num_arrows(const qr_quiver* q) {
  return q ? q->q->num_arrows() : 0;
}

int qr_quiver_is_acyclic(const qr_quiver* q) {
  return q && q->q->is_acyclic() ? 1 : 0;
}

qr_status qr_validate_json(const char* json, qr_format fmt, char** report, int* valid) {
  return guard([&] {
    require(json, "json");
    auto spec = qring::parse_quiver_spec(json);
    put(report, qring::report_validate(spec, format_of(fmt)));
    if (valid) {
      *valid = qring::validate(spec).valid() ? 1 : 0;
    }
  });
}

qr_status qr_path_count(const qr_quiver* q, const char* x, const char* y, int64_t* out) {
  return guard([&] {
    require(q, "quiver");
    require(x, "x");
    require(y, "y");
    require(out, "output pointer");
    auto const& qq = *q->q;
    *out = qring::path_count_matrix(qq)(qq.vertex_index(x), qq.vertex_index(y));
  });
}

qr_status qr_paths_report(const qr_quiver* q, const char* x, const char* y, qr_format fmt, char** out) {
  return guard([&] {
    require(q, "quiver");
    require(x, "x");
    require(y, "y");
    put(out, qring::report_paths(*q->q, x, y, format_of(fmt)));
  });
}

qr_status qr_tensor_proj(const qr_quiver* q, const char* x, const char* y, int64_t* mult, size_t len) {
  return guard([&] {
    require(q, "quiver");
    require(x, "x");
    require(y, "y");
    qring::ProjectiveRing ring(*q->q);
    copy_out(ring.tensor_projectives(q->q->vertex_index(x), q->q->vertex_index(y)), mult, len);
  });
}

qr_status qr_tensor_proj_report(const qr_quiver* q, const char* x, const char* y, qr_format fmt, char** out) {
  return guard([&] {
    require(q, "quiver");
    require(x, "x");
    require(y, "y");
    put(out, qring::report_tensor_proj(*q->q, x, y, format_of(fmt)));
  });
}

qr_status qr_pie_build(const qr_quiver* q, uint64_t cap, qr_pie** out) {
  return guard([&] {
    require(q, "quiver");
    require(out, "output pointer");
    *out = new qr_pie{qring::PieCategory::build(q->q, cap_or_default(cap))};
  });
}

void qr_pie_free(qr_pie* c) {
  delete c;
}

size_t qr_pie_size(const qr_pie* c) {
  return c ? c->c.size() : 0;
}

qr_status qr_pie_object_name(const qr_pie* c, size_t i, char** out) {
  return guard([&] {
    require(c, "category");
    check_index(c, i);
    put(out, c->c.object(i).name);
  });
}

qr_status qr_pie_find(const qr_pie* c, const char* name, size_t* out) {
  return guard([&] {
    require(c, "category");
    require(name, "name");
    require(out, "output pointer");
    auto i = c->c.find(name);
    if (!i) {
      throw qring::InvalidInput(std::string("no PIE object named '") + name + "'");
    }
    *out = *i;
  });
}

qr_status qr_pie_hom(const qr_pie* c, size_t x, size_t y, int64_t* out) {
  return guard([&] {
    require(c, "category");
    require(out, "output pointer");
    check_index(c, x);
    check_index(c, y);
    *out = c->c.category().hom(x, y);
  });
}

qr_status qr_pie_mu(const qr_pie* c, size_t x, size_t y, int64_t* out) {
  return guard([&] {
    require(c, "category");
    require(out, "output pointer");
    check_index(c, x);
    check_index(c, y);
    *out = c->c.category().mu(x, y);
  });
}

qr_status qr_pie_product(const qr_pie* c, size_t x, size_t y, int64_t* coeffs, size_t len) {
  return guard([&] {
    require(c, "category");
    check_index(c, x);
    check_index(c, y);
    copy_out(c->c.multiply(c->c.basis_element(x), c->c.basis_element(y)), coeffs, len);
  });
}

qr_status qr_pie_idempotent(const qr_pie* c, size_t x, int64_t* coeffs, size_t len) {
  return guard([&] {
    require(c, "category");
    check_index(c, x);
    copy_out(c->c.idempotent(x), coeffs, len);
  });
}

qr_status qr_pie_report(const qr_pie* c, const char* what, qr_format fmt, char** out) {
  return guard([&] {
    require(c, "category");
    require(what, "report name");
    std::string w = what;
    if (w == "list") {
      put(out, qring::report_pie_list(c->c, format_of(fmt)));
    } else if (w == "mobius") {
      put(out, qring::report_pie_mobius(c->c, format_of(fmt)));
    } else if (w == "idempotents") {
      put(out, qring::report_pie_idempotents(c->c, format_of(fmt)));
    } else {
      throw qring::InvalidInput("unknown report '" + w + "'");
    }
  });
}

qr_status qr_pie_product_report(const qr_pie* c, const char* x, const char* y, qr_format fmt, char** out) {
  return guard([&] {
    require(c, "category");
    require(x, "x");
    require(y, "y");
    put(out, qring::report_pie_product(c->c, x, y, format_of(fmt)));
  });
}

qr_status qr_linearize_object_report(const qr_pie* c, const char* object, qr_format fmt, char** out) {
  return guard([&] {
    require(c, "category");
    require(object, "object");
    auto i = c->c.find(object);
    if (!i) {
      throw qring::InvalidInput(std::string("no PIE object named '") + object + "'");
    }
    put(out, qring::report_linearize(c->c.object(*i).realization, format_of(fmt)));
  });
}

qr_status qr_linearize_json_report(const char* json, qr_format fmt, char** out) {
  return guard([&] {
    require(json, "json");
    put(out, qring::report_linearize(qring::parse_quiver_over_q(json), format_of(fmt)));
  });
}

qr_status qr_verify_quiver(const qr_quiver* q,
                           const char*      suites,
                           uint64_t         seed,
                           uint64_t         cap,
                           qr_format        fmt,
                           char**           report,
                           int*             passed) {
  return guard([&] {
    require(q, "quiver");
    qring::VerifyOptions opt;
    opt.suites  = split_suites(suites);
    opt.seed    = seed;
    opt.cap     = cap_or_default(cap);
    auto result = qring::verify_quiver(q->q, opt);
    put(report, qring::report_verify(result, format_of(fmt)));
    if (passed) {
      *passed = qring::all_passed(result) ? 1 : 0;
    }
  });
}

qr_status qr_verify_random(size_t      count,
                           const char* suites,
                           uint64_t    seed,
                           uint64_t    cap,
                           qr_format   fmt,
                           char**      report,
                           int*        passed) {
  return guard([&] {
    qring::VerifyOptions opt;
    opt.suites  = split_suites(suites);
    opt.seed    = seed;
    opt.cap     = cap_or_default(cap);
    auto result = qring::verify_random(count, opt);
    put(report, qring::report_verify(result, format_of(fmt)));
    if (passed) {
      *passed = qring::all_passed(result) ? 1 : 0;
    }
  });
}

}  // extern "C"
