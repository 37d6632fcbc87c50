#ifndef PRYMCOVER_RATIONAL_HPP
#define PRYMCOVER_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace prym {

// Exact rational scalar. mpq_class keeps values canonicalized
// (lowest terms, positive denominator), which is exactly the
// normal form the rest of the engine relies on.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

// "p/q" with the "/q" dropped for integers; the exact-fraction
// string format used in reports and CSV output.
inline std::string to_fraction_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace prym

#endif
