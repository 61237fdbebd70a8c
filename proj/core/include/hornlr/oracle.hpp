#pragma once

#include <cstdint>
#include <map>

#include "hornlr/monomial_map.hpp"
#include "hornlr/partition.hpp"

namespace hornlr {

// Ground-truth structure constants, computed from explicit polynomial
// models: Schur polynomials from semistandard tableaux, Schur Q-polynomials
// from marked shifted tableaux, P = Q / 2^length. Products are expanded back
// into a basis by peeling off leading monomials. Every routine here is
// independent of the inequality machinery in feasibility.hpp.

enum class Basis { schur, schur_p, schur_q };

/// Nonnegative structure constant; exact.
using LRCoefficient = std::int64_t;

MonomialMap schur_poly(const Partition& lambda, int variables);
MonomialMap schur_q_poly(const StrictPartition& lambda, int variables);
/// schur_q_poly divided by 2^length; throws InconsistencyError if any
/// coefficient is not divisible.
MonomialMap schur_p_poly(const StrictPartition& lambda, int variables);

/// Expands a symmetric homogeneous polynomial in the chosen basis by
/// repeatedly subtracting the basis element indexed by the leading exponent.
/// Keys are ordinary partitions (strict ones for P and Q). Throws
/// InconsistencyError when a leading exponent is not a valid index or a
/// leading coefficient does not divide exactly.
std::map<Partition, std::int64_t> expand_in_basis(const MonomialMap& p,
                                                  Basis basis);

/// Coefficient of S_lambda in S_mu * S_nu, using max(length(lambda), 1)
/// variables, or `variables` when given (must be at least length(lambda)).
LRCoefficient lr_a(const Partition& lambda, const Partition& mu,
                   const Partition& nu);
LRCoefficient lr_a(const Partition& lambda, const Partition& mu,
                   const Partition& nu, int variables);

/// Coefficient of Q_lambda in Q_mu * Q_nu.
LRCoefficient lr_c(const StrictPartition& lambda, const StrictPartition& mu,
                   const StrictPartition& nu);
LRCoefficient lr_c(const StrictPartition& lambda, const StrictPartition& mu,
                   const StrictPartition& nu, int variables);

/// Coefficient of P_lambda in P_mu * P_nu, obtained from lr_c by the
/// rescaling 2^(length(lambda) - length(mu) - length(nu)).
LRCoefficient lr_d(const StrictPartition& lambda, const StrictPartition& mu,
                   const StrictPartition& nu);

/// lr_d computed directly by expanding P_mu * P_nu in the P basis.
LRCoefficient lr_d_direct(const StrictPartition& lambda,
                          const StrictPartition& mu,
                          const StrictPartition& nu);

/// Coefficient of the full rectangle in S_lambda S_mu S_nu, i.e.
/// a^{lambda^c}_{mu,nu}.
LRCoefficient sym_a(const Partition& lambda, const Partition& mu,
                    const Partition& nu, Rectangle box);
/// c^{lambda^c}_{mu,nu} for the staircase complement.
LRCoefficient sym_c(const StrictPartition& lambda, const StrictPartition& mu,
                    const StrictPartition& nu, Staircase s);
LRCoefficient sym_d(const StrictPartition& lambda, const StrictPartition& mu,
                    const StrictPartition& nu, Staircase s);

/// Drops every memoized polynomial and product. Results are unaffected.
void clear_oracle_cache();

}  // namespace hornlr
