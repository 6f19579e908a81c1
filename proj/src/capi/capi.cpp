#include "ranum/ranum.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "core/cylinder.hpp"
#include "core/exact_real.hpp"
#include "core/fractal.hpp"
#include "core/function_f.hpp"
#include "core/literal.hpp"
#include "core/representation.hpp"
#include "core/serialize.hpp"
#include "core/system.hpp"
#include "core/verify.hpp"

struct ranum_real {
  ranum::ExactReal v;
};
struct ranum_system {
  ranum::SystemParams v;
};
struct ranum_stream {
  ranum::DigitStream v;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& message) {
  if (err != nullptr) *err = dup_string(message);
}

template <typename Fn>
ranum_status guarded(char** err, Fn&& fn) {
  if (err != nullptr) *err = nullptr;
  try {
    fn();
    return RANUM_OK;
  } catch (const ranum::parse_error& e) {
    set_err(err, e.what());
    return RANUM_ERR_PARSE;
  } catch (const ranum::domain_error& e) {
    set_err(err, e.what());
    return RANUM_ERR_DOMAIN;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return RANUM_ERR_INTERNAL;
  }
}

constexpr int kJsonIndent = 2;

}  // namespace

extern "C" {

const char* ranum_version(void) { return "1.0.0"; }

void ranum_string_free(char* s) { std::free(s); }
void ranum_real_free(ranum_real* x) { delete x; }
void ranum_system_free(ranum_system* sys) { delete sys; }
void ranum_stream_free(ranum_stream* s) { delete s; }

ranum_status ranum_real_parse(const char* literal, ranum_real** out, char** err) {
  return guarded(err, [&] {
    if (literal == nullptr || out == nullptr) throw ranum::domain_error("null argument");
    *out = new ranum_real{ranum::parse_real_literal(literal)};
  });
}

ranum_status ranum_real_make(long u_num, long u_den, long v_num, long v_den, long d,
                             ranum_real** out, char** err) {
  return guarded(err, [&] {
    if (out == nullptr) throw ranum::domain_error("null argument");
    if (u_den == 0 || v_den == 0) throw ranum::domain_error("zero denominator");
    ranum::Rat u(u_num, u_den);
    ranum::Rat v(v_num, v_den);
    *out = new ranum_real{ranum::ExactReal::make(std::move(u), std::move(v), d)};
  });
}

char* ranum_real_format(const ranum_real* x) {
  if (x == nullptr) return nullptr;
  return dup_string(x->v.literal());
}

ranum_status ranum_real_decimal(const ranum_real* x, int digits, char** out, char** err) {
  return guarded(err, [&] {
    if (x == nullptr || out == nullptr) throw ranum::domain_error("null argument");
    *out = dup_string(x->v.approx(digits));
  });
}

#define RANUM_BINOP(NAME, EXPR)                                                              \
  ranum_status NAME(const ranum_real* x, const ranum_real* y, ranum_real** out, char** err) { \
    return guarded(err, [&] {                                                                \
      if (x == nullptr || y == nullptr || out == nullptr)                                    \
        throw ranum::domain_error("null argument");                                          \
      *out = new ranum_real{EXPR};                                                           \
    });                                                                                      \
  }

RANUM_BINOP(ranum_real_add, x->v + y->v)
RANUM_BINOP(ranum_real_sub, x->v - y->v)
RANUM_BINOP(ranum_real_mul, x->v * y->v)
RANUM_BINOP(ranum_real_div, x->v / y->v)

#undef RANUM_BINOP

ranum_status ranum_real_cmp(const ranum_real* x, const ranum_real* y, int* out, char** err) {
  return guarded(err, [&] {
    if (x == nullptr || y == nullptr || out == nullptr)
      throw ranum::domain_error("null argument");
    *out = x->v.compare(y->v);
  });
}

ranum_status ranum_real_floor(const ranum_real* x, char** out, char** err) {
  return guarded(err, [&] {
    if (x == nullptr || out == nullptr) throw ranum::domain_error("null argument");
    *out = dup_string(x->v.floor().get_str());
  });
}

ranum_status ranum_system_new(const ranum_real* base, int r, ranum_system** out, char** err) {
  return guarded(err, [&] {
    if (base == nullptr || out == nullptr) throw ranum::domain_error("null argument");
    *out = new ranum_system{ranum::SystemParams(base->v, r)};
  });
}

char* ranum_system_describe(const ranum_system* sys) {
  if (sys == nullptr) return nullptr;
  return dup_string(ranum::system_json(sys->v).dump(kJsonIndent));
}

ranum_status ranum_stream_parse(const char* text, int r, ranum_stream** out, char** err) {
  return guarded(err, [&] {
    if (text == nullptr || out == nullptr) throw ranum::domain_error("null argument");
    *out = new ranum_stream{ranum::parse_stream_literal(text, r)};
  });
}

char* ranum_stream_format(const ranum_stream* s, int r) {
  if (s == nullptr) return nullptr;
  return dup_string(ranum::format_stream(s->v, r));
}

ranum_status ranum_eval_stream(const ranum_system* sys, const ranum_stream* s, ranum_real** out,
                               char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || s == nullptr || out == nullptr)
      throw ranum::domain_error("null argument");
    *out = new ranum_real{ranum::eval_stream(sys->v, s->v)};
  });
}

ranum_status ranum_stream_classical_value(const ranum_stream* s, int r, ranum_real** out,
                                          char** err) {
  return guarded(err, [&] {
    if (s == nullptr || out == nullptr) throw ranum::domain_error("null argument");
    ranum::SystemParams classical(ranum::ExactReal(r + 1), r);
    *out = new ranum_real{ranum::eval_stream(classical, s->v)};
  });
}

ranum_status ranum_expand(const ranum_system* sys, const ranum_real* x, int lazy, int n,
                          char** word_out, ranum_real** rem_out, char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || x == nullptr || word_out == nullptr || rem_out == nullptr)
      throw ranum::domain_error("null argument");
    ranum::Expansion expansion = lazy != 0 ? ranum::lazy_expand(sys->v, x->v, n)
                                           : ranum::greedy_expand(sys->v, x->v, n);
    *word_out = dup_string(ranum::format_word(expansion.word, sys->v.max_digit()));
    *rem_out = new ranum_real{std::move(expansion.remainder)};
  });
}

ranum_status ranum_is_ra_rational(const ranum_system* sys, const ranum_stream* s, int depth,
                                  int* out, char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || s == nullptr || out == nullptr)
      throw ranum::domain_error("null argument");
    *out = ranum::is_ra_rational(sys->v, s->v, depth) ? 1 : 0;
  });
}

ranum_status ranum_cylinder_report(const ranum_system* sys, const char* word, int with_children,
                                   int overlap_digit, char** json_out, char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || word == nullptr || json_out == nullptr)
      throw ranum::domain_error("null argument");
    ranum::Cylinder cyl(sys->v, ranum::parse_word_literal(word, sys->v.max_digit()));
    *json_out =
        dup_string(ranum::cylinder_json(cyl, with_children != 0, overlap_digit).dump(kJsonIndent));
  });
}

ranum_status ranum_coincidence_report(const ranum_system* sys, int max_m, char** json_out,
                                      char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || json_out == nullptr) throw ranum::domain_error("null argument");
    nlohmann::json out = ranum::coincidence_json(ranum::classify_coincidences(sys->v, max_m));
    out["system"] = ranum::system_json(sys->v);
    out["max_m"] = max_m;
    *json_out = dup_string(out.dump(kJsonIndent));
  });
}

ranum_status ranum_words_equal(const ranum_system* sys, const char* word1, const char* word2,
                               int* out, char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || word1 == nullptr || word2 == nullptr || out == nullptr)
      throw ranum::domain_error("null argument");
    ranum::DigitWord w1 = ranum::parse_word_literal(word1, sys->v.max_digit());
    ranum::DigitWord w2 = ranum::parse_word_literal(word2, sys->v.max_digit());
    *out = ranum::words_equal(sys->v, w1, w2) ? 1 : 0;
  });
}

ranum_status ranum_f_eval(const ranum_system* sys, const ranum_stream* s, ranum_real** out,
                          char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || s == nullptr || out == nullptr)
      throw ranum::domain_error("null argument");
    *out = new ranum_real{ranum::f_eval(ranum::SourcePoint(sys->v, s->v))};
  });
}

ranum_status ranum_f_jump(const ranum_system* sys, const char* prefix_word, int k,
                          ranum_real** out, char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || prefix_word == nullptr || out == nullptr)
      throw ranum::domain_error("null argument");
    ranum::DigitWord prefix = ranum::parse_word_literal(prefix_word, sys->v.max_digit());
    *out = new ranum_real{ranum::jump_at_binary(sys->v, prefix, k)};
  });
}

ranum_status ranum_f_witness(const ranum_system* sys, const char* base_word, char** json_out,
                             char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || base_word == nullptr || json_out == nullptr)
      throw ranum::domain_error("null argument");
    ranum::DigitWord base = ranum::parse_word_literal(base_word, sys->v.max_digit());
    ranum::WitnessTriple witness = ranum::nonmonotone_witness(sys->v, base);
    *json_out = dup_string(ranum::witness_json(sys->v, witness).dump(kJsonIndent));
  });
}

ranum_status ranum_f_variation(const ranum_system* sys, int n, ranum_real** out, char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || out == nullptr) throw ranum::domain_error("null argument");
    *out = new ranum_real{ranum::variation_lower_bound(sys->v, n)};
  });
}

ranum_status ranum_f_graph(const ranum_system* sys, int depth, const char* format, int width,
                           int height, char** out, char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || format == nullptr || out == nullptr)
      throw ranum::domain_error("null argument");
    std::string kind(format);
    if (kind == "csv") {
      *out = dup_string(ranum::graph_csv(sys->v, depth));
    } else if (kind == "svg") {
      *out = dup_string(ranum::graph_svg(sys->v, depth, width, height));
    } else {
      throw ranum::domain_error("unknown graph format '" + kind + "'; expected csv or svg");
    }
  });
}

ranum_status ranum_cantor_cover_csv(const ranum_real* base, int levels, char** out, char** err) {
  return guarded(err, [&] {
    if (base == nullptr || out == nullptr) throw ranum::domain_error("null argument");
    ranum::CantorSpec spec(base->v);
    *out = dup_string(ranum::cover_csv(spec, levels));
  });
}

ranum_status ranum_cantor_dimension(const ranum_real* base, char** json_out, char** err) {
  return guarded(err, [&] {
    if (base == nullptr || json_out == nullptr) throw ranum::domain_error("null argument");
    ranum::CantorSpec spec(base->v);
    *json_out = dup_string(ranum::dimension_json(ranum::cantor_dimension(spec)).dump(kJsonIndent));
  });
}

ranum_status ranum_cantor_member(const ranum_real* base, const ranum_stream* s, int* out,
                                 char** err) {
  return guarded(err, [&] {
    if (base == nullptr || s == nullptr || out == nullptr)
      throw ranum::domain_error("null argument");
    ranum::CantorSpec spec(base->v);
    *out = ranum::cantor_member(spec, s->v) ? 1 : 0;
  });
}

ranum_status ranum_levelset_dimension(char** json_out, char** err) {
  return guarded(err, [&] {
    if (json_out == nullptr) throw ranum::domain_error("null argument");
    ranum::Rat dim = ranum::level_set_dimension();
    nlohmann::json out{
        {"dimension", nlohmann::json{{"exact", ranum::ExactReal(dim).literal()},
                                     {"decimal", ranum::ExactReal(dim).approx(12)}}},
        {"embedded_copy", "C[8;{4,5}]"},
        {"similarity_equation", "2*(1/8)^x = 1"},
        {"bound", "lower"}};
    *json_out = dup_string(out.dump(kJsonIndent));
  });
}

ranum_status ranum_levelset_enum_csv(int len, int tail, char** out, char** err) {
  return guarded(err, [&] {
    if (out == nullptr) throw ranum::domain_error("null argument");
    *out = dup_string(ranum::preimage_csv(len, tail));
  });
}

ranum_status ranum_substitutions(const char* seed, int max_len, char** json_out, char** err) {
  return guarded(err, [&] {
    if (seed == nullptr || json_out == nullptr) throw ranum::domain_error("null argument");
    ranum::SystemParams sys = ranum::golden_system();
    ranum::DigitStream stream = ranum::parse_stream_literal(seed, sys.max_digit());
    std::set<ranum::DigitStream> closure = ranum::substitute_all(sys, stream, max_len);
    *json_out = dup_string(ranum::substitution_json(sys, stream, closure).dump(kJsonIndent));
  });
}

ranum_status ranum_verify(const ranum_system* sys, const char* suite, int* all_passed,
                          char** json_out, char** err) {
  return guarded(err, [&] {
    if (sys == nullptr || suite == nullptr || all_passed == nullptr || json_out == nullptr)
      throw ranum::domain_error("null argument");
    std::vector<ranum::SuiteResult> results = ranum::run_verify(sys->v, suite);
    *all_passed = ranum::verify_all_passed(results) ? 1 : 0;
    *json_out = dup_string(ranum::verify_json(sys->v, results).dump(kJsonIndent));
  });
}

}  // extern "C"
