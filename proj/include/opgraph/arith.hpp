#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace opgraph {

using Int = mpz_class;
using Rat = mpq_class;

Int factorial(unsigned long n);

// (a1 + ... + ak)! / (a1! ... ak!)
Int multinomial(const std::vector<unsigned long>& parts);

inline std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace opgraph
