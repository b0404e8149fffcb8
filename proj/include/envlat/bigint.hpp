#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace envlat {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace envlat
