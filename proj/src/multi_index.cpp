#include "plurikit/multi_index.hpp"

#include <algorithm>
#include <functional>

#include "plurikit/errors.hpp"

namespace plurikit {

MultiIndex::MultiIndex(std::vector<int> exps) : e(std::move(exps)) {
  for (int v : e) {
    if (v < 0) throw input_error("MultiIndex: exponents must be nonnegative");
  }
}

int MultiIndex::degree() const {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

std::string MultiIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(e[i]);
  }
  return out;
}

Ordering lex_compare(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw input_error("lex_compare: dimension mismatch");
  for (int i = 0; i < a.dim(); ++i) {
    if (a.e[i] < b.e[i]) return Ordering::less;
    if (a.e[i] > b.e[i]) return Ordering::greater;
  }
  return Ordering::equal;
}

std::vector<MultiIndex> monomials_up_to(int dim, int d) {
  if (dim < 1) throw input_error("monomials_up_to: dim must be >= 1");
  if (d < 0) throw input_error("monomials_up_to: degree must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(dim), 0);
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == dim) {
      out.push_back(MultiIndex(cur));
      return;
    }
    for (int v = 0; v <= d - used; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, used + v);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<MultiIndex> lower_order_basis(const MultiIndex& alpha) {
  std::vector<MultiIndex> out;
  for (MultiIndex& m : monomials_up_to(alpha.dim(), alpha.degree())) {
    if (lex_compare(m, alpha) == Ordering::less) out.push_back(std::move(m));
  }
  // monomials_up_to is already lex ascending; the filter preserves order.
  return out;
}

}  // namespace plurikit
