#pragma once

#include <compare>
#include <string>
#include <vector>

namespace plurikit {

/// Exponent vector in N^dim. Total degree is always recomputed from the
/// exponents, never cached.
struct MultiIndex {
  std::vector<int> e;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exps);
  MultiIndex(std::initializer_list<int> exps) : MultiIndex(std::vector<int>(exps)) {}

  int dim() const { return static_cast<int>(e.size()); }
  int degree() const;

  bool operator==(const MultiIndex& o) const { return e == o.e; }
  std::string to_string() const;  // "a0;a1;..." (CSV-safe)
};

enum class Ordering { less, equal, greater };

/// Pure lexicographic comparison: the first differing coordinate decides.
/// Throws input_error on dimension mismatch.
Ordering lex_compare(const MultiIndex& a, const MultiIndex& b);

/// Strict-weak-order functor for containers keyed by MultiIndex.
struct LexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return lex_compare(a, b) == Ordering::less;
  }
};

/// All beta with beta <_lex alpha and |beta| <= |alpha|, lex ascending.
std::vector<MultiIndex> lower_order_basis(const MultiIndex& alpha);

/// All multi-indices of the given dimension with total degree <= d,
/// lex ascending. lower_order_basis(alpha) is exactly the prefix of
/// monomials_up_to(dim, |alpha|) preceding alpha.
std::vector<MultiIndex> monomials_up_to(int dim, int d);

}  // namespace plurikit
