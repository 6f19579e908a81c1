#pragma once

#include <json.hpp>

#include <set>
#include <string>

#include "core/cylinder.hpp"
#include "core/fractal.hpp"
#include "core/function_f.hpp"
#include "core/system.hpp"

namespace ranum {

inline constexpr int kDefaultDecimalDigits = 12;
inline constexpr int kCsvDecimalDigits = 10;

nlohmann::json value_json(const ExactReal& x, int digits = kDefaultDecimalDigits);
nlohmann::json system_json(const SystemParams& sys, int digits = kDefaultDecimalDigits);
nlohmann::json interval_json(const Interval& iv, int digits = kDefaultDecimalDigits);

// Cylinder report: interval, optionally the r+1 children and the overlap of
// children (overlap_digit, overlap_digit + 1). overlap_digit < 0 omits it.
nlohmann::json cylinder_json(const Cylinder& cyl, bool with_children, int overlap_digit,
                             int digits = kDefaultDecimalDigits);

nlohmann::json coincidence_json(const CoincidenceReport& report);

nlohmann::json witness_json(const SystemParams& sys, const WitnessTriple& witness,
                            int digits = kDefaultDecimalDigits);

nlohmann::json dimension_json(const CantorDimension& dim);

nlohmann::json substitution_json(const SystemParams& sys, const DigitStream& seed,
                                 const std::set<DigitStream>& closure,
                                 int digits = kDefaultDecimalDigits);

// CSV: x_exact,x_decimal,y_exact,y_decimal,side with side in {value,left}.
std::string graph_csv(const SystemParams& sys, int depth);

// Polyline rendering with open/closed jump markers at binary points.
std::string graph_svg(const SystemParams& sys, int depth, int width, int height);

// CSV: level,index,lo_exact,hi_exact,lo_decimal,hi_decimal for levels 1..n.
std::string cover_csv(const CantorSpec& spec, int levels);

// CSV: octal_word,tail,x_exact,x_decimal over all 2^len words.
std::string preimage_csv(int len, int tail);

}  // namespace ranum
