#include "swalg/spectrum.hpp"

#include <cmath>

namespace swalg {

void validate_params(const ModelParams& p) {
  if (p.n < 1) throw std::invalid_argument("N must be at least 1");
  if (static_cast<int>(p.a.size()) != p.n) throw std::invalid_argument("need one a_i per coordinate");
  if (!(p.b > 0)) throw std::invalid_argument("b must be positive");
  for (long double ai : p.a)
    if (1 + 8 * ai < 0) throw std::invalid_argument("1 + 8 a_i must be nonnegative");
  if (p.a_exact && static_cast<int>(p.a_exact->size()) != p.n) throw std::invalid_argument("need one a_i per coordinate");
  if (p.b_exact && *p.b_exact <= 0) throw std::invalid_argument("b must be positive");
}

bool exact_available(const ModelParams& p) {
  if (!p.a_exact || !p.b_exact) return false;
  if (!exact_sqrt(2 * *p.b_exact)) return false;
  for (const auto& ai : *p.a_exact)
    if (!exact_sqrt(1 + 8 * ai)) return false;
  return true;
}

std::vector<std::vector<int>> admitted_branches(const ModelParams& p) {
  std::vector<std::vector<int>> out{std::vector<int>(p.n, 1)};
  for (int i = 0; i < p.n; ++i) {
    const long double ai = p.a[i];
    if (!(ai > -0.125L && ai < 0.375L)) continue;
    const std::size_t existing = out.size();
    for (std::size_t k = 0; k < existing; ++k) {
      auto flipped = out[k];
      flipped[i] = -1;
      out.push_back(flipped);
    }
  }
  return out;
}

void for_each_tuple(int n, int max_sum, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> q(n, 0);
  // Compositions of each total in lexicographically decreasing order of q.
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n - 1) {
      q[pos] = remaining;
      fn(q);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      q[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  for (int tot = 0; tot <= max_sum; ++tot) rec(0, tot);
}

unsigned long long degeneracy_binomial(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("degeneracy needs N >= 1 and n >= 0");
  // C(n + m - 1, n - 1)
  unsigned long long c = 1;
  for (int k = 1; k <= n - 1; ++k) c = c * static_cast<unsigned long long>(m + k) / static_cast<unsigned long long>(k);
  return c;
}

unsigned long long degeneracy_brute_force(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("degeneracy needs N >= 1 and n >= 0");
  unsigned long long count = 0;
  std::vector<int> q(n, 0);
  // Odometer over [0, m]^n, counting tuples that sum to m.
  for (;;) {
    int s = 0;
    for (int v : q) s += v;
    if (s == m) ++count;
    int k = 0;
    while (k < n && ++q[k] > m) q[k++] = 0;
    if (k == n) break;
  }
  return count;
}

}  // namespace swalg
