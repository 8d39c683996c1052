#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cmfock {

using Int = boost::multiprecision::cpp_int;

}  // namespace cmfock
