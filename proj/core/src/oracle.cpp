#include "hornlr/oracle.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "hornlr/tableaux.hpp"

namespace hornlr {

namespace {

using Expansion = std::map<Partition, std::int64_t>;

// Process-wide memo tables. Values are immutable once inserted; two threads
// racing on the same key compute identical values and the first insert wins.
template <class Key, class Value>
class Memo {
 public:
  template <class Make>
  std::shared_ptr<const Value> get(const Key& key, Make&& make) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(make());
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> table_;
};

using PolyKey = std::tuple<Basis, Partition, int>;
using ProductKey = std::tuple<Basis, Partition, Partition, int>;

Memo<PolyKey, MonomialMap>& poly_memo() {
  static Memo<PolyKey, MonomialMap> memo;
  return memo;
}

Memo<ProductKey, Expansion>& product_memo() {
  static Memo<ProductKey, Expansion> memo;
  return memo;
}

bool is_strict(const Partition& p) {
  for (int i = 1; i < p.length(); ++i) {
    if (p[i] == p[i + 1]) return false;
  }
  return true;
}

std::int64_t pow2(int k) {
  if (k < 0 || k > 62) throw OverflowError("power of two out of range");
  return std::int64_t{1} << k;
}

std::shared_ptr<const MonomialMap> basis_poly(Basis basis, const Partition& index,
                                              int variables) {
  return poly_memo().get({basis, index, variables}, [&] {
    switch (basis) {
      case Basis::schur:
        return ssyt_polynomial(index, variables);
      case Basis::schur_q:
        return marked_shifted_polynomial(StrictPartition(index), variables,
                                         DiagonalRule::free);
      case Basis::schur_p: {
        const StrictPartition strict(index);
        MonomialMap q = *basis_poly(Basis::schur_q, index, variables);
        MonomialMap out(variables);
        const std::int64_t scale = pow2(strict.length());
        for (const auto& [e, c] : q.terms()) {
          if (c % scale != 0) {
            throw InconsistencyError("Q-polynomial of " + index.to_string() +
                                     " is not divisible by 2^length");
          }
          out.add(e, c / scale);
        }
        return out;
      }
    }
    throw InconsistencyError("unknown basis");
  });
}

std::int64_t leading_coefficient(Basis basis, const Partition& index) {
  return basis == Basis::schur_q ? pow2(index.length()) : 1;
}

std::shared_ptr<const Expansion> product_expansion(Basis basis, Partition mu,
                                                   Partition nu,
                                                   int variables) {
  if (nu < mu) std::swap(mu, nu);
  return product_memo().get({basis, mu, nu, variables}, [&] {
    const MonomialMap product =
        *basis_poly(basis, mu, variables) * *basis_poly(basis, nu, variables);
    return expand_in_basis(product, basis);
  });
}

int default_variables(const Partition& lambda) {
  return std::max(lambda.length(), 1);
}

void check_variables(const Partition& lambda, int variables) {
  if (variables < default_variables(lambda)) {
    throw InvalidArgument("need at least " +
                          std::to_string(default_variables(lambda)) +
                          " variables to resolve " + lambda.to_string());
  }
}

}  // namespace

MonomialMap schur_poly(const Partition& lambda, int variables) {
  return *basis_poly(Basis::schur, lambda, variables);
}

MonomialMap schur_q_poly(const StrictPartition& lambda, int variables) {
  return *basis_poly(Basis::schur_q, lambda.as_partition(), variables);
}

MonomialMap schur_p_poly(const StrictPartition& lambda, int variables) {
  return *basis_poly(Basis::schur_p, lambda.as_partition(), variables);
}

std::map<Partition, std::int64_t> expand_in_basis(const MonomialMap& p,
                                                  Basis basis) {
  p.degree();  // rejects inhomogeneous input
  std::map<Partition, std::int64_t> out;
  MonomialMap rest = p;
  while (!rest.is_zero()) {
    auto [exponent, coeff] = rest.leading();
    Partition index(exponent);
    if (basis != Basis::schur && !is_strict(index)) {
      throw InconsistencyError("leading exponent " + index.to_string() +
                               " is not a strict partition");
    }
    const std::int64_t lead = leading_coefficient(basis, index);
    if (coeff % lead != 0) {
      throw InconsistencyError("leading coefficient " + std::to_string(coeff) +
                               " at " + index.to_string() +
                               " is not divisible by " + std::to_string(lead));
    }
    const std::int64_t c = coeff / lead;
    auto element = basis_poly(basis, index, rest.variables());
    if (element->is_zero() || element->leading().first != exponent ||
        element->leading().second != lead) {
      throw InconsistencyError("basis element " + index.to_string() +
                               " has an unexpected leading term");
    }
    rest.add_scaled(*element, -c);
    out.emplace(std::move(index), c);
  }
  return out;
}

LRCoefficient lr_a(const Partition& lambda, const Partition& mu,
                   const Partition& nu) {
  return lr_a(lambda, mu, nu, default_variables(lambda));
}

LRCoefficient lr_a(const Partition& lambda, const Partition& mu,
                   const Partition& nu, int variables) {
  check_variables(lambda, variables);
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  auto expansion = product_expansion(Basis::schur, mu, nu, variables);
  auto it = expansion->find(lambda);
  return it == expansion->end() ? 0 : it->second;
}

LRCoefficient lr_c(const StrictPartition& lambda, const StrictPartition& mu,
                   const StrictPartition& nu) {
  return lr_c(lambda, mu, nu, default_variables(lambda.as_partition()));
}

LRCoefficient lr_c(const StrictPartition& lambda, const StrictPartition& mu,
                   const StrictPartition& nu, int variables) {
  check_variables(lambda.as_partition(), variables);
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  auto expansion = product_expansion(Basis::schur_q, mu.as_partition(),
                                     nu.as_partition(), variables);
  auto it = expansion->find(lambda.as_partition());
  return it == expansion->end() ? 0 : it->second;
}

LRCoefficient lr_d(const StrictPartition& lambda, const StrictPartition& mu,
                   const StrictPartition& nu) {
  const LRCoefficient c = lr_c(lambda, mu, nu);
  if (c == 0) return 0;
  const int shift = lambda.length() - mu.length() - nu.length();
  if (shift >= 0) return checked_mul(c, pow2(shift));
  const std::int64_t divisor = pow2(-shift);
  if (c % divisor != 0) {
    throw InconsistencyError("c-coefficient " + std::to_string(c) +
                             " does not rescale to an integral d-coefficient");
  }
  return c / divisor;
}

LRCoefficient lr_d_direct(const StrictPartition& lambda,
                          const StrictPartition& mu,
                          const StrictPartition& nu) {
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  auto expansion =
      product_expansion(Basis::schur_p, mu.as_partition(), nu.as_partition(),
                        default_variables(lambda.as_partition()));
  auto it = expansion->find(lambda.as_partition());
  return it == expansion->end() ? 0 : it->second;
}

namespace {

void require_in(const Partition& p, Rectangle box) {
  if (!contains(p, box)) {
    throw InvalidArgument("partition " + p.to_string() + " does not fit in " +
                          std::to_string(box.n) + "x" + std::to_string(box.m));
  }
}

void require_in(const StrictPartition& p, Staircase s) {
  if (!contains(p, s)) {
    throw InvalidArgument("strict partition " + p.to_string() +
                          " does not fit in the staircase of side " +
                          std::to_string(s.n));
  }
}

}  // namespace

LRCoefficient sym_a(const Partition& lambda, const Partition& mu,
                    const Partition& nu, Rectangle box) {
  require_in(lambda, box);
  require_in(mu, box);
  require_in(nu, box);
  return lr_a(complement(lambda, box), mu, nu);
}

LRCoefficient sym_c(const StrictPartition& lambda, const StrictPartition& mu,
                    const StrictPartition& nu, Staircase s) {
  require_in(lambda, s);
  require_in(mu, s);
  require_in(nu, s);
  return lr_c(complement(lambda, s), mu, nu);
}

LRCoefficient sym_d(const StrictPartition& lambda, const StrictPartition& mu,
                    const StrictPartition& nu, Staircase s) {
  require_in(lambda, s);
  require_in(mu, s);
  require_in(nu, s);
  return lr_d(complement(lambda, s), mu, nu);
}

void clear_oracle_cache() {
  poly_memo().clear();
  product_memo().clear();
}

}  // namespace hornlr
