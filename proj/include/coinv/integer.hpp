#pragma once

#include <gmpxx.h>

#include <string>

namespace coinv {

/// The single integer type used for every mathematical value.
using Integer = mpz_class;

Integer factorial(unsigned n);

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

} // namespace coinv
