#include "core/serialize.hpp"

#include <cstdio>

#include "core/literal.hpp"
#include "core/representation.hpp"

namespace ranum {

using nlohmann::json;

json value_json(const ExactReal& x, int digits) {
  return json{{"exact", x.literal()}, {"decimal", x.approx(digits)}, {"rounding", "down"}};
}

json system_json(const SystemParams& sys, int digits) {
  return json{{"base", sys.base().literal()},
              {"base_decimal", sys.base().approx(digits)},
              {"r", sys.max_digit()},
              {"upper", value_json(sys.upper(), digits)},
              {"redundant", sys.redundant()},
              {"zero_redundancy", sys.zero_redundancy()}};
}

json interval_json(const Interval& iv, int digits) {
  if (iv.empty()) return json{{"empty", true}};
  return json{{"empty", false},
              {"point", iv.is_point()},
              {"lo", value_json(iv.lo(), digits)},
              {"hi", value_json(iv.hi(), digits)},
              {"length", value_json(iv.length(), digits)}};
}

json cylinder_json(const Cylinder& cyl, bool with_children, int overlap_digit, int digits) {
  const int r = cyl.system().max_digit();
  json out{{"system", system_json(cyl.system(), digits)},
           {"word", format_word(cyl.base(), r)},
           {"rank", cyl.rank()},
           {"interval", interval_json(cyl.interval(), digits)}};
  if (with_children) {
    json children = json::array();
    for (const Cylinder& child : cyl.subdivide()) {
      children.push_back(json{{"word", format_word(child.base(), r)},
                              {"interval", interval_json(child.interval(), digits)}});
    }
    out["children"] = std::move(children);
  }
  if (overlap_digit >= 0) {
    out["overlap"] = json{{"digits", json::array({overlap_digit, overlap_digit + 1})},
                          {"interval", interval_json(cyl.adjacent_overlap(overlap_digit), digits)}};
  }
  return out;
}

json coincidence_json(const CoincidenceReport& report) {
  return json{{"integer_coincidence", report.integer_coincidence},
              {"half_length", report.half_length},
              {"property11_m", report.property11_m},
              {"golden", report.golden},
              {"half_overlap_ratio", report.half_overlap_ratio}};
}

json witness_json(const SystemParams& sys, const WitnessTriple& witness, int digits) {
  const int r = sys.max_digit();
  auto point = [&](const DigitStream& digits_stream, const Rat& x, const ExactReal& fx) {
    return json{{"digits", format_stream(digits_stream, r)},
                {"x_exact", ExactReal(x).literal()},
                {"x_decimal", ExactReal(x).approx(digits)},
                {"f", value_json(fx, digits)}};
  };
  json out{{"system", system_json(sys, digits)},
           {"case", witness.case_id},
           {"x1", point(witness.x1, witness.v1, witness.f1)},
           {"x2", point(witness.x2, witness.v2, witness.f2)},
           {"x3", point(witness.x3, witness.v3, witness.f3)}};
  if (witness.case_id == 2) out["tail_run"] = witness.tail_run;
  out["certificate"] = witness.case_id == 1 ? "f2>f1 and f2>f3" : "f2>f1 and f3<f2";
  return out;
}

json dimension_json(const CantorDimension& dim) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", dim.decimal);
  return json{{"dimension", json{{"log_numerator_arg", dim.piece_count},
                                 {"log_denominator_arg", dim.contraction.literal()},
                                 {"symbolic", "log(2)/log(a)"},
                                 {"decimal", buf}}},
              {"similarity_equation", "2*a^x = 1"},
              {"equation_root", "x = -log_a(2)"},
              {"note", "reported value is the positive ratio log(2)/log(a)"}};
}

json substitution_json(const SystemParams& sys, const DigitStream& seed,
                       const std::set<DigitStream>& closure, int digits) {
  const int r = sys.max_digit();
  json members = json::array();
  for (const DigitStream& member : closure) {
    members.push_back(format_stream(member, r));
  }
  return json{{"system", system_json(sys, digits)},
              {"seed", format_stream(seed, r)},
              {"value", value_json(eval_stream(sys, seed), digits)},
              {"count", closure.size()},
              {"members", std::move(members)}};
}

namespace {

std::string rat_literal(const Rat& q) { return ExactReal(q).literal(); }

std::string rat_decimal(const Rat& q, int digits) { return ExactReal(q).approx(digits); }

}  // namespace

std::string graph_csv(const SystemParams& sys, int depth) {
  std::string out = "x_exact,x_decimal,y_exact,y_decimal,side\n";
  for (const GraphRow& row : sample_graph(sys, depth)) {
    out += rat_literal(row.x);
    out += ',';
    out += rat_decimal(row.x, kCsvDecimalDigits);
    out += ',';
    out += row.y.literal();
    out += ',';
    out += row.y.approx(kCsvDecimalDigits);
    out += ',';
    out += row.left_side ? "left" : "value";
    out += '\n';
  }
  return out;
}

namespace {

struct SvgMapper {
  double x0, y0, x_scale, y_scale;
  double px(double x) const { return x0 + x * x_scale; }
  double py(double y) const { return y0 - y * y_scale; }
};

void append_num(std::string& out, double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  out += buf;
}

}  // namespace

std::string graph_svg(const SystemParams& sys, int depth, int width, int height) {
  if (width < 64 || height < 64 || width > 8192 || height > 8192) {
    throw domain_error("svg size must lie in [64, 8192] pixels per side");
  }
  const std::vector<GraphRow> rows = sample_graph(sys, depth);
  const double margin = 24.0;
  const double upper = sys.upper().to_double();
  SvgMapper map{margin, height - margin, (width - 2 * margin), (height - 2 * margin) / upper};

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes along x in [0,1] and y in [0,U].
  for (double y : {0.0, upper}) {
    svg += "<line x1=\"";
    append_num(svg, map.px(0));
    svg += "\" y1=\"";
    append_num(svg, map.py(y));
    svg += "\" x2=\"";
    append_num(svg, map.px(1));
    svg += "\" y2=\"";
    append_num(svg, map.py(y));
    svg += "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }

  // One polyline segment per continuity piece: from the value at x_i to the
  // left limit at x_{i+1}.
  std::string segments;
  std::string markers;
  const size_t n = rows.size();
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].left_side) continue;
    // Find the next row: its left row if present, else its value row.
    size_t j = i + 1;
    if (j >= n) break;
    double x1 = ExactReal(rows[i].x).to_double();
    double y1 = rows[i].y.to_double();
    double x2 = ExactReal(rows[j].x).to_double();
    double y2 = rows[j].y.to_double();
    segments += "<line x1=\"";
    append_num(segments, map.px(x1));
    segments += "\" y1=\"";
    append_num(segments, map.py(y1));
    segments += "\" x2=\"";
    append_num(segments, map.px(x2));
    segments += "\" y2=\"";
    append_num(segments, map.py(y2));
    segments += "\" stroke=\"#1f3a93\" stroke-width=\"1\"/>\n";
  }
  for (const GraphRow& row : rows) {
    double cx = map.px(ExactReal(row.x).to_double());
    double cy = map.py(row.y.to_double());
    markers += "<circle cx=\"";
    append_num(markers, cx);
    markers += "\" cy=\"";
    append_num(markers, cy);
    markers += row.left_side ? "\" r=\"2.5\" fill=\"white\" stroke=\"#1f3a93\"/>\n"
                             : "\" r=\"2.5\" fill=\"#1f3a93\"/>\n";
  }
  svg += segments;
  svg += markers;
  svg += "</svg>\n";
  return svg;
}

std::string cover_csv(const CantorSpec& spec, int levels) {
  std::string out = "level,index,lo_exact,hi_exact,lo_decimal,hi_decimal\n";
  for (int level = 1; level <= levels; ++level) {
    const std::vector<Interval> cover = cantor_cover(spec, level);
    for (size_t index = 0; index < cover.size(); ++index) {
      out += std::to_string(level);
      out += ',';
      out += std::to_string(index);
      out += ',';
      out += cover[index].lo().literal();
      out += ',';
      out += cover[index].hi().literal();
      out += ',';
      out += cover[index].lo().approx(kCsvDecimalDigits);
      out += ',';
      out += cover[index].hi().approx(kCsvDecimalDigits);
      out += '\n';
    }
  }
  return out;
}

std::string preimage_csv(int len, int tail) {
  if (len < 0 || len > 16) throw domain_error("word length must lie in [0, 16]");
  std::string out = "octal_word,tail,x_exact,x_decimal\n";
  const long count = 1L << len;
  for (long index = 0; index < count; ++index) {
    std::string word;
    for (int i = len - 1; i >= 0; --i) {
      word += ((index >> i) & 1L) ? '5' : '4';
    }
    LevelSetPreimage pre = level_set_preimage(word, tail);
    out += word;
    out += ',';
    out += std::to_string(tail);
    out += ',';
    out += rat_literal(pre.x);
    out += ',';
    out += rat_decimal(pre.x, kCsvDecimalDigits);
    out += '\n';
  }
  return out;
}

}  // namespace ranum
