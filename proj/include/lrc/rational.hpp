#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace lrc {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator once canonicalized; every constructor below canonicalizes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Serialized as "p" or "p/q"; never decimal.
inline std::string rational_str(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace lrc
