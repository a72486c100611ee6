#pragma once

#include <json.hpp>

#include "mdyn/algnum.hpp"

namespace mdyn {

struct MeasureResult {
  AlgebraicNumber value;  // real, >= 1
  int outside_count = 0;  // conjugates strictly outside the unit circle
  CBall numeric;
};

enum class NumberTag { RationalInteger, RootOfUnity, Pisot, Salem, PerronNonFixed, Other };
const char* to_string(NumberTag t);

struct NumberClass {
  NumberTag tag = NumberTag::Other;
  long inside = 0;
  long on_circle = 0;
  long outside = 0;
};

MeasureResult mahler_measure(const AlgebraicNumber& a, const Budget& budget = {});
NumberClass classify(const AlgebraicNumber& a, const Budget& budget = {});
bool is_unit(const AlgebraicNumber& a);
bool is_fixed_point(const AlgebraicNumber& a, const Budget& budget = {});

// True when the monic f divides x^N - 1 for some N.
bool is_cyclotomic(const IntPolynomial& f);

nlohmann::json to_json(const MeasureResult& m);
nlohmann::json to_json(const NumberClass& c);

}  // namespace mdyn
