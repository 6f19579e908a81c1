// ranum command-line interface. Talks to the shared library exclusively
// through the public C API.

#include <ranum/ranum.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

using nlohmann::json;

// Exit codes: 0 ok, 1 domain error, 2 parse error, 3 internal error.
[[noreturn]] void bail(ranum_status status, char* err) {
  std::fprintf(stderr, "error: %s\n", err != nullptr ? err : "unknown failure");
  ranum_string_free(err);
  std::exit(static_cast<int>(status));
}

struct Str {
  char* p = nullptr;
  ~Str() { ranum_string_free(p); }
  std::string view() const { return p != nullptr ? std::string(p) : std::string(); }
};

struct Real {
  ranum_real* p = nullptr;
  ~Real() { ranum_real_free(p); }
};

struct System {
  ranum_system* p = nullptr;
  ~System() { ranum_system_free(p); }
};

struct Stream {
  ranum_stream* p = nullptr;
  ~Stream() { ranum_stream_free(p); }
};

void need(ranum_status status, char* err) {
  if (status != RANUM_OK) bail(status, err);
}

void parse_real(const std::string& literal, Real& out) {
  char* err = nullptr;
  need(ranum_real_parse(literal.c_str(), &out.p, &err), err);
}

void make_system(const std::string& base, int r, System& out) {
  Real a;
  parse_real(base, a);
  char* err = nullptr;
  need(ranum_system_new(a.p, r, &out.p, &err), err);
}

json value_fields(const ranum_real* x, int precision) {
  Str exact;
  exact.p = ranum_real_format(x);
  Str decimal;
  char* err = nullptr;
  need(ranum_real_decimal(x, precision, &decimal.p, &err), err);
  return json{{"exact", exact.view()}, {"decimal", decimal.view()}, {"rounding", "down"}};
}

json system_fields(const ranum_system* sys) {
  Str text;
  text.p = ranum_system_describe(sys);
  return json::parse(text.view());
}

void emit(const json& doc) { std::printf("%s\n", doc.dump(2).c_str()); }

struct EvalArgs {
  std::string base;
  int r = 1;
  std::string digits;
  int precision = 12;
};

int run_eval(const EvalArgs& args) {
  System sys;
  make_system(args.base, args.r, sys);
  Stream stream;
  char* err = nullptr;
  need(ranum_stream_parse(args.digits.c_str(), args.r, &stream.p, &err), err);
  Real value;
  need(ranum_eval_stream(sys.p, stream.p, &value.p, &err), err);

  Str canonical;
  canonical.p = ranum_stream_format(stream.p, args.r);
  json doc{{"system", system_fields(sys.p)},
           {"digits", canonical.view()},
           {"value", value_fields(value.p, args.precision)}};
  int ra = 0;
  char* ignored = nullptr;
  if (ranum_is_ra_rational(sys.p, stream.p, 20, &ra, &ignored) == RANUM_OK) {
    doc["ra_rational"] = ra != 0;
  } else {
    ranum_string_free(ignored);
  }
  emit(doc);
  return 0;
}

struct ExpandArgs {
  std::string base;
  int r = 1;
  std::string x;
  std::string algo = "greedy";
  int digits = 12;
  int precision = 12;
};

int run_expand(const ExpandArgs& args) {
  System sys;
  make_system(args.base, args.r, sys);
  Real x;
  parse_real(args.x, x);
  char* err = nullptr;
  Str word;
  Real remainder;
  need(ranum_expand(sys.p, x.p, args.algo == "lazy" ? 1 : 0, args.digits, &word.p, &remainder.p,
                    &err),
       err);
  emit(json{{"system", system_fields(sys.p)},
            {"x", value_fields(x.p, args.precision)},
            {"algo", args.algo},
            {"digits", args.digits},
            {"word", word.view()},
            {"remainder", value_fields(remainder.p, args.precision)}});
  return 0;
}

struct CylArgs {
  std::string base;
  int r = 1;
  std::string word;
  bool children = false;
  int overlap = -1;
  std::string equals;
  bool has_equals = false;
};

int run_cyl(const CylArgs& args) {
  System sys;
  make_system(args.base, args.r, sys);
  char* err = nullptr;
  Str doc;
  need(ranum_cylinder_report(sys.p, args.word.c_str(), args.children ? 1 : 0, args.overlap,
                             &doc.p, &err),
       err);
  if (!args.has_equals) {
    std::printf("%s\n", doc.p);
    return 0;
  }
  json report = json::parse(doc.view());
  int same = 0;
  need(ranum_words_equal(sys.p, args.word.c_str(), args.equals.c_str(), &same, &err), err);
  report["equals"] = json{{"word", args.equals}, {"same_cylinder", same != 0}};
  emit(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact numeral systems with redundant digit alphabets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ranum_version()));

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "exact value of a digit stream");
  eval->add_option("--base", eval_args.base, "base literal")->required();
  eval->add_option("--r", eval_args.r, "largest digit")->required();
  eval->add_option("--digits", eval_args.digits, "stream literal, e.g. 110(01)")->required();
  eval->add_option("--precision", eval_args.precision, "decimal digits (default 12)");

  ExpandArgs expand_args;
  CLI::App* expand = app.add_subcommand("expand", "greedy or lazy expansion of a value");
  expand->add_option("--base", expand_args.base, "base literal")->required();
  expand->add_option("--r", expand_args.r, "largest digit")->required();
  expand->add_option("--x", expand_args.x, "value literal in [0, r/(a-1)]")->required();
  expand->add_option("--algo", expand_args.algo, "greedy|lazy (default greedy)")
      ->check(CLI::IsMember({"greedy", "lazy"}));
  expand->add_option("--digits", expand_args.digits, "number of digits (default 12)");
  expand->add_option("--precision", expand_args.precision, "decimal digits (default 12)");

  CylArgs cyl_args;
  CLI::App* cyl = app.add_subcommand("cyl", "cylinder interval, children, overlap");
  cyl->add_option("--base", cyl_args.base, "base literal")->required();
  cyl->add_option("--r", cyl_args.r, "largest digit")->required();
  cyl->add_option("--word", cyl_args.word, "base word (may be empty for rank 0)")->required();
  cyl->add_flag("--children", cyl_args.children, "include the r+1 children");
  cyl->add_option("--overlap", cyl_args.overlap, "overlap of children J and J+1");
  CLI::Option* equals_opt =
      cyl->add_option("--equals", cyl_args.equals, "test same-cylinder against another word");

  std::string special_base;
  int special_r = 1;
  int special_max_m = 8;
  CLI::App* special = app.add_subcommand("special", "parameter coincidence report");
  special->add_option("--base", special_base, "base literal")->required();
  special->add_option("--r", special_r, "largest digit")->required();
  special->add_option("--max-m", special_max_m,
                      "largest m probed for the rank-(k+m) overlap coincidence (default 8)");

  // f eval|jump|witness|graph
  std::string f_base;
  int f_r = 1;
  int f_precision = 12;
  CLI::App* f = app.add_subcommand("f", "the digit-transplant function");
  f->require_subcommand(1);
  std::string f_digits;
  CLI::App* f_eval_cmd = f->add_subcommand("eval", "f at a classical base-(r+1) point");
  std::string f_prefix;
  int f_k = 1;
  CLI::App* f_jump_cmd = f->add_subcommand("jump", "jump at a binary point");
  std::string f_word;
  CLI::App* f_witness_cmd = f->add_subcommand("witness", "non-monotonicity certificate");
  int f_depth = 4;
  std::string f_format = "csv";
  std::string f_size = "800x600";
  CLI::App* f_graph_cmd = f->add_subcommand("graph", "sampled graph as csv or svg");
  int f_n = 3;
  CLI::App* f_variation_cmd =
      f->add_subcommand("variation", "variation lower bound V_n = ((r+1)/a)^n U");
  for (CLI::App* sub : {f_eval_cmd, f_jump_cmd, f_witness_cmd, f_graph_cmd, f_variation_cmd}) {
    sub->add_option("--base", f_base, "base literal")->required();
    sub->add_option("--r", f_r, "largest digit")->required();
  }
  f_eval_cmd->add_option("--digits", f_digits, "source stream literal")->required();
  f_eval_cmd->add_option("--precision", f_precision, "decimal digits (default 12)");
  f_jump_cmd->add_option("--k", f_k, "discontinuity position (= prefix length)")->required();
  f_jump_cmd->add_option("--prefix", f_prefix, "terminating digits of the binary point")
      ->required();
  f_jump_cmd->add_option("--precision", f_precision, "decimal digits (default 12)");
  f_witness_cmd->add_option("--word", f_word, "source cylinder base word (may be empty)");
  f_graph_cmd->add_option("--depth", f_depth, "grid depth: (r+1)^depth points")->required();
  f_graph_cmd->add_option("--format", f_format, "csv|svg (default csv)")
      ->check(CLI::IsMember({"csv", "svg"}));
  f_graph_cmd->add_option("--size", f_size, "svg pixel size WxH (default 800x600)");
  f_variation_cmd->add_option("--n", f_n, "rank of the cylinder sum")->required();
  f_variation_cmd->add_option("--precision", f_precision, "decimal digits (default 12)");

  // cantor cover|dim|member
  std::string cantor_base;
  int cantor_n = 4;
  std::string cantor_digits;
  CLI::App* cantor = app.add_subcommand("cantor", "the {0,2}-digit Cantor set (r = 2)");
  cantor->require_subcommand(1);
  CLI::App* cantor_cover_cmd = cantor->add_subcommand("cover", "cover intervals, levels 1..n");
  CLI::App* cantor_dim_cmd = cantor->add_subcommand("dim", "self-similarity dimension");
  CLI::App* cantor_member_cmd = cantor->add_subcommand("member", "digit test for a stream");
  cantor_cover_cmd->add_option("--base", cantor_base, "base literal in (2,3)")->required();
  cantor_cover_cmd->add_option("--n", cantor_n, "deepest level")->required();
  cantor_dim_cmd->add_option("--base", cantor_base, "base literal in (2,3)")->required();
  cantor_member_cmd->add_option("--base", cantor_base, "base literal in (2,3)")->required();
  cantor_member_cmd->add_option("--digits", cantor_digits, "stream literal over {0,1,2}")
      ->required();

  // levelset enum|subs
  int levelset_len = 3;
  int levelset_tail = 4;
  std::string levelset_seed;
  int levelset_max_len = 12;
  CLI::App* levelset = app.add_subcommand("levelset", "golden-base level set of f");
  levelset->require_subcommand(1);
  CLI::App* levelset_enum_cmd =
      levelset->add_subcommand("enum", "preimages from {4,5}-words (system fixed at phi, r=1)");
  levelset_enum_cmd->add_option("--len", levelset_len, "word length L: 2^L rows")->required();
  levelset_enum_cmd->add_option("--tail", levelset_tail, "periodic tail digit, 4 or 5")
      ->required()
      ->check(CLI::IsMember({4, 5}));
  CLI::App* levelset_subs_cmd =
      levelset->add_subcommand("subs", "substitution closure (100) <-> (011) of a seed stream");
  levelset_subs_cmd->add_option("--seed", levelset_seed, "seed stream literal")->required();
  levelset_subs_cmd->add_option("--max-len", levelset_max_len,
                                "canonical length cap (default 12)");
  CLI::App* levelset_dim_cmd =
      levelset->add_subcommand("dim", "certified dimension lower bound of f^-1(y0)");

  std::string verify_suite = "all";
  std::string verify_base;
  int verify_r = 1;
  CLI::App* verify = app.add_subcommand("verify", "run the property suites for (a, r)");
  verify->add_option("--suite", verify_suite, "all|cylinders|function|fractal (default all)")
      ->check(CLI::IsMember({"all", "cylinders", "function", "fractal"}));
  verify->add_option("--base", verify_base, "base literal")->required();
  verify->add_option("--r", verify_r, "largest digit")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  char* err = nullptr;
  cyl_args.has_equals = equals_opt->count() > 0;

  if (eval->parsed()) return run_eval(eval_args);
  if (expand->parsed()) return run_expand(expand_args);
  if (cyl->parsed()) return run_cyl(cyl_args);

  if (special->parsed()) {
    System sys;
    make_system(special_base, special_r, sys);
    Str doc;
    need(ranum_coincidence_report(sys.p, special_max_m, &doc.p, &err), err);
    std::printf("%s\n", doc.p);
    return 0;
  }

  if (f->parsed()) {
    System sys;
    make_system(f_base, f_r, sys);
    if (f_eval_cmd->parsed()) {
      Stream stream;
      need(ranum_stream_parse(f_digits.c_str(), f_r, &stream.p, &err), err);
      Real x;
      need(ranum_stream_classical_value(stream.p, f_r, &x.p, &err), err);
      Real y;
      need(ranum_f_eval(sys.p, stream.p, &y.p, &err), err);
      Str canonical;
      canonical.p = ranum_stream_format(stream.p, f_r);
      emit(json{{"system", system_fields(sys.p)},
                {"digits", canonical.view()},
                {"x", value_fields(x.p, f_precision)},
                {"y", value_fields(y.p, f_precision)}});
      return 0;
    }
    if (f_jump_cmd->parsed()) {
      Real jump;
      need(ranum_f_jump(sys.p, f_prefix.c_str(), f_k, &jump.p, &err), err);
      emit(json{{"system", system_fields(sys.p)},
                {"k", f_k},
                {"prefix", f_prefix},
                {"jump", value_fields(jump.p, f_precision)},
                {"convention", "left limit minus value"}});
      return 0;
    }
    if (f_witness_cmd->parsed()) {
      Str doc;
      need(ranum_f_witness(sys.p, f_word.c_str(), &doc.p, &err), err);
      std::printf("%s\n", doc.p);
      return 0;
    }
    if (f_variation_cmd->parsed()) {
      Real v;
      need(ranum_f_variation(sys.p, f_n, &v.p, &err), err);
      emit(json{{"system", system_fields(sys.p)},
                {"n", f_n},
                {"value", value_fields(v.p, f_precision)}});
      return 0;
    }
    // graph
    int width = 800;
    int height = 600;
    if (std::sscanf(f_size.c_str(), "%dx%d", &width, &height) != 2) {
      std::fprintf(stderr, "error: --size expects WxH, e.g. 800x600\n");
      return 2;
    }
    Str doc;
    need(ranum_f_graph(sys.p, f_depth, f_format.c_str(), width, height, &doc.p, &err), err);
    std::fputs(doc.p, stdout);
    return 0;
  }

  if (cantor->parsed()) {
    Real base;
    parse_real(cantor_base, base);
    Str doc;
    if (cantor_cover_cmd->parsed()) {
      need(ranum_cantor_cover_csv(base.p, cantor_n, &doc.p, &err), err);
      std::fputs(doc.p, stdout);
    } else if (cantor_member_cmd->parsed()) {
      Stream s;
      need(ranum_stream_parse(cantor_digits.c_str(), 2, &s.p, &err), err);
      int member = 0;
      need(ranum_cantor_member(base.p, s.p, &member, &err), err);
      Str canonical;
      canonical.p = ranum_stream_format(s.p, 2);
      emit(json{{"digits", canonical.view()}, {"member", member != 0}});
    } else {
      need(ranum_cantor_dimension(base.p, &doc.p, &err), err);
      std::printf("%s\n", doc.p);
    }
    return 0;
  }

  if (levelset->parsed()) {
    Str doc;
    if (levelset_enum_cmd->parsed()) {
      need(ranum_levelset_enum_csv(levelset_len, levelset_tail, &doc.p, &err), err);
      std::fputs(doc.p, stdout);
    } else if (levelset_dim_cmd->parsed()) {
      need(ranum_levelset_dimension(&doc.p, &err), err);
      std::printf("%s\n", doc.p);
    } else {
      need(ranum_substitutions(levelset_seed.c_str(), levelset_max_len, &doc.p, &err), err);
      std::printf("%s\n", doc.p);
    }
    return 0;
  }

  if (verify->parsed()) {
    System sys;
    make_system(verify_base, verify_r, sys);
    int all_passed = 0;
    Str doc;
    need(ranum_verify(sys.p, verify_suite.c_str(), &all_passed, &doc.p, &err), err);
    std::printf("%s\n", doc.p);
    return all_passed != 0 ? 0 : 1;
  }

  return 2;
}
