#pragma once

#include <string>

#include "tfn/io.hpp"
#include "tfn/rational.hpp"
#include "tfn/tfn.hpp"

namespace tfn::test {

inline Rational Q(const std::string& text) { return parse_rational(text); }
inline Tfn T(const std::string& text) { return parse_tfn(text); }

}  // namespace tfn::test
