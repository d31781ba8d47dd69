#ifndef HTDYN_FACTOR_HPP
#define HTDYN_FACTOR_HPP

#include "htdyn/intpoly.hpp"

namespace htdyn {

struct FactorBudget {
    int max_degree = 64;        // Zassenhaus cutoff; above this, give up
    long max_subsets = 1 << 20; // recombination budget
    int sieve_primes = 4;       // primes used for the degree-set sieve
    int max_modular_factors = 40;
};

struct FactorOutcome {
    // primitive factors with positive leading coefficient and multiplicities;
    // the product over factor^mult equals the input up to a rational constant
    std::vector<std::pair<IntPoly, int>> factors;
    // false when a budget was hit: the listed parts may still be reducible
    bool certified = true;
};

// Full factorization over Q (content dropped). Works through squarefree
// decomposition, a cross-prime degree sieve, and Zassenhaus lifting.
FactorOutcome factor_int_poly(const IntPoly& p, const FactorBudget& budget = {});

// 1 = irreducible, 0 = reducible, -1 = unknown (budget). Input must be
// primitive squarefree of degree >= 1.
int irreducible_status(const IntPoly& p, const FactorBudget& budget = {});

} // namespace htdyn

#endif
