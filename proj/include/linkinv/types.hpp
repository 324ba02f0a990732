#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linkinv {

// Exact integer type used by every invariant computation.  Magnus
// coefficients of degree-9 longitude expansions overflow 64 bits, so all
// coefficient arithmetic goes through cpp_int.
using Int = boost::multiprecision::cpp_int;

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;  // gcd(0,0) == 0 by convention
}

// Thrown when an operation is asked to exceed its configured budget
// (crossing count, skein nodes, mu-table size).  Carries how far we got.
struct BudgetExceeded : std::runtime_error {
  std::int64_t used = 0;
  explicit BudgetExceeded(const std::string& what, std::int64_t used_)
      : std::runtime_error(what), used(used_) {}
};

// Malformed input files or ill-formed diagrams passed to an operation.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace linkinv
