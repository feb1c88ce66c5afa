#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace grmirror {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace grmirror
