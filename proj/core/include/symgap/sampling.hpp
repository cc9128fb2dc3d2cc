#pragma once

#include <random>
#include <vector>

#include "symgap/rational.hpp"

namespace symgap {

// Generic rational sample point: each coordinate a/p with a in [2, 97] and
// p prime. Vanishing loci met by the computations are proper subvarieties,
// so rejection sampling converges immediately in practice.
inline std::vector<Rational> sample_point(std::mt19937_64& rng, int n) {
    static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    std::uniform_int_distribution<int> num(2, 97);
    std::uniform_int_distribution<int> pidx(0, 24);
    std::vector<Rational> p;
    p.reserve(n);
    for (int i = 0; i < n; ++i) p.push_back(Rational(num(rng)) / Rational(primes[pidx(rng)]));
    return p;
}

} // namespace symgap
