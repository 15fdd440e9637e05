#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace isocay {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace isocay
