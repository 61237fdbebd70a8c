#pragma once

#include <cstdint>

#include "hornlr/monomial_map.hpp"
#include "hornlr/partition.hpp"

namespace hornlr {

/// Which boxes of a marked shifted tableau may carry a primed letter.
enum class DiagonalRule {
  free,       // Q-functions: primes allowed anywhere
  unprimed,   // P-functions: diagonal boxes must be unprimed
};

/// Generating polynomial of semistandard Young tableaux of shape lambda on
/// the alphabet 1..variables: rows weakly increase, columns strictly
/// increase. The tableau is filled one letter at a time; the boxes holding
/// letter i form a skew shape with at most one box per column.
MonomialMap ssyt_polynomial(const Partition& lambda, int variables);

/// Generating polynomial of marked shifted tableaux of shifted shape lambda
/// on 1' < 1 < 2' < 2 < ... : rows and columns weakly increase, an unprimed
/// letter occurs at most once per column, a primed letter at most once per
/// row. Filled one letter at a time; every admissible priming of each skew
/// layer is enumerated and checked against those rules.
MonomialMap marked_shifted_polynomial(const StrictPartition& lambda,
                                      int variables, DiagonalRule rule);

/// Number of admissible primings of the layer rho / kappa of a shifted
/// diagram when all its boxes carry the same letter (0 if none exist).
std::int64_t layer_markings(const StrictPartition& kappa,
                            const StrictPartition& rho, DiagonalRule rule);

}  // namespace hornlr
