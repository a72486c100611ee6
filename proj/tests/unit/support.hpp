#pragma once

#include <doctest.h>

#include "mdyn/intpoly.hpp"

namespace doctest {
template <>
struct StringMaker<mdyn::IntPolynomial> {
  static String convert(const mdyn::IntPolynomial& p) { return mdyn::format(p).c_str(); }
};
}  // namespace doctest
