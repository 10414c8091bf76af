#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace bettikit {

using BigInt = boost::multiprecision::cpp_int;

/// C(a, b), exact. Zero when b < 0, a < 0 or b > a.
BigInt binomial(std::int64_t a, std::int64_t b);

}  // namespace bettikit
