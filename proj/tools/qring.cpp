// Command-line front end. Links only the C interface.
//
//   qring --input q.json validate
//   qring --input q.json paths X Y
//   qring --input q.json tensor-proj X Y
//   qring --input q.json pie list|mobius|idempotents|product X Y
//   qring --input q.json linearize OBJECT       (or: linearize --over FILE)
//   qring [--input q.json] verify [--random --count N] [--suite S ...]
//
// Exit status: 0 ok, 2 invalid input, 3 cap exceeded, 4 internal check or
// verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qring/qring.h"

namespace {

  struct Config {
    std::string              input;
    std::uint64_t            seed   = 0;
    std::uint64_t            cap    = 0;
    std::string              format = "text";
    std::string              x, y, object, over;
    bool                     random = false;
    std::size_t              count  = 100;
    std::vector<std::string> suites;
  };

  class Failure {
   public:
    explicit Failure(int code) : code(code) {}
    int code;
  };

  void check(qr_status s) {
    if (s != QR_OK) {
      std::cerr << "error: " << qr_last_error() << "\n";
      throw Failure(static_cast<int>(s));
    }
  }

  void emit(char* s) {
    std::fputs(s, stdout);
    qr_string_free(s);
  }

  qr_format fmt(Config const& c) {
    return c.format == "json" ? QR_FORMAT_JSON : QR_FORMAT_TEXT;
  }

  std::string need_input(Config const& c) {
    if (c.input.empty()) {
      std::cerr << "error: --input is required\n";
      throw Failure(QR_ERR_INPUT);
    }
    return c.input;
  }

  std::string slurp(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read '" << path << "'\n";
      throw Failure(QR_ERR_INPUT);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  struct Quiver {
    qr_quiver* q = nullptr;
    explicit Quiver(std::string const& path) {
      check(qr_quiver_from_file(path.c_str(), &q));
    }
    ~Quiver() {
      qr_quiver_free(q);
    }
  };

  struct Pie {
    qr_pie* c = nullptr;
    Pie(Quiver const& q, std::uint64_t cap) {
      check(qr_pie_build(q.q, cap, &c));
    }
    ~Pie() {
      qr_pie_free(c);
    }
  };

  std::string join(std::vector<std::string> const& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + v[i];
    }
    return s;
  }

}  // namespace

int main(int argc, char** argv) {
  Config   cfg;
  CLI::App app{"Exact computations in representation rings of acyclic quivers"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--input", cfg.input, "quiver JSON file");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--cap", cfg.cap, "subquiver enumeration cap (default 2^20)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* validate = app.add_subcommand("validate", "check a quiver file");
  auto* paths    = app.add_subcommand("paths", "list the paths from X to Y");
  paths->add_option("X", cfg.x)->required();
  paths->add_option("Y", cfg.y)->required();
  auto* tensor = app.add_subcommand("tensor-proj", "decompose P(X) (x) P(Y) into projectives");
  tensor->add_option("X", cfg.x)->required();
  tensor->add_option("Y", cfg.y)->required();

  auto* pie = app.add_subcommand("pie", "the PIE category of the quiver");
  pie->require_subcommand(1);
  auto* pie_list    = pie->add_subcommand("list", "object catalog");
  auto* pie_mobius  = pie->add_subcommand("mobius", "Hom and Moebius matrices");
  pie->add_subcommand("idempotents", "orthogonal idempotents e_x");
  auto* pie_product = pie->add_subcommand("product", "product of two objects");
  pie_product->add_option("X", cfg.x)->required();
  pie_product->add_option("Y", cfg.y)->required();

  auto* linearize = app.add_subcommand("linearize", "linearize a PIE object or a quiver over Q");
  linearize->add_option("OBJECT", cfg.object);
  linearize->add_option("--over", cfg.over, "quiver-over-Q JSON file");

  auto* verify = app.add_subcommand("verify", "run the oracle suites");
  verify->add_flag("--random", cfg.random, "random acyclic quivers instead of --input");
  verify->add_option("--count", cfg.count, "number of random quivers");
  verify->add_option("--suite", cfg.suites, "restrict to these suites");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return QR_ERR_INPUT;
  }

  try {
    char* out = nullptr;
    if (validate->parsed()) {
      int valid = 0;
      check(qr_validate_json(slurp(need_input(cfg)).c_str(), fmt(cfg), &out, &valid));
      emit(out);
      return valid ? 0 : QR_ERR_INPUT;
    }
    if (paths->parsed()) {
      Quiver q(need_input(cfg));
      check(qr_paths_report(q.q, cfg.x.c_str(), cfg.y.c_str(), fmt(cfg), &out));
      emit(out);
      return 0;
    }
    if (tensor->parsed()) {
      Quiver q(need_input(cfg));
      check(qr_tensor_proj_report(q.q, cfg.x.c_str(), cfg.y.c_str(), fmt(cfg), &out));
      emit(out);
      return 0;
    }
    if (pie->parsed()) {
      Quiver q(need_input(cfg));
      Pie    c(q, cfg.cap);
      if (pie_product->parsed()) {
        check(qr_pie_product_report(c.c, cfg.x.c_str(), cfg.y.c_str(), fmt(cfg), &out));
      } else {
        char const* what = pie_list->parsed() ? "list" : pie_mobius->parsed() ? "mobius" : "idempotents";
        check(qr_pie_report(c.c, what, fmt(cfg), &out));
      }
      emit(out);
      return 0;
    }
    if (linearize->parsed()) {
      if (!cfg.over.empty()) {
        check(qr_linearize_json_report(slurp(cfg.over).c_str(), fmt(cfg), &out));
      } else {
        if (cfg.object.empty()) {
          std::cerr << "error: linearize needs an OBJECT or --over FILE\n";
          return QR_ERR_INPUT;
        }
        Quiver q(need_input(cfg));
        Pie    c(q, cfg.cap);
        check(qr_linearize_object_report(c.c, cfg.object.c_str(), fmt(cfg), &out));
      }
      emit(out);
      return 0;
    }
    if (verify->parsed()) {
      int         passed = 0;
      std::string suites = join(cfg.suites);
      char const* sel    = suites.empty() ? nullptr : suites.c_str();
      if (cfg.random) {
        check(qr_verify_random(cfg.count, sel, cfg.seed, cfg.cap, fmt(cfg), &out, &passed));
      } else {
        Quiver q(need_input(cfg));
        check(qr_verify_quiver(q.q, sel, cfg.seed, cfg.cap, fmt(cfg), &out, &passed));
      }
      emit(out);
      return passed ? 0 : QR_ERR_INTERNAL;
    }
  } catch (Failure const& f) {
    return f.code;
  }
  return 0;
}
