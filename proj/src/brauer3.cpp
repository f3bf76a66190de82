#include "dp6/brauer3.hpp"

#include <algorithm>

namespace dp6 {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

// Gaussian elimination mod 3; returns a basis of the kernel of m.
std::vector<std::vector<int>> kernel_mod3(std::vector<std::vector<int>> m, int cols) {
  std::vector<int> pivot_col;
  size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    size_t pr = r;
    while (pr < m.size() && m[pr][c] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[r], m[pr]);
    int inv = m[r][c] == 1 ? 1 : 2;  // inverses mod 3
    for (int j = 0; j < cols; ++j) m[r][j] = mod3(m[r][j] * inv);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      int f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = mod3(m[i][j] - f * m[r][j]);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivot_col) is_pivot[p] = true;
  std::vector<std::vector<int>> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<int> v(cols, 0);
    v[fc] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = mod3(-m[i][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t rank_mod3(std::vector<std::vector<int>> m, int cols) {
  size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    size_t pr = r;
    while (pr < m.size() && m[pr][c] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[r], m[pr]);
    int inv = m[r][c] == 1 ? 1 : 2;
    for (int j = 0; j < cols; ++j) m[r][j] = mod3(m[r][j] * inv);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      int f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = mod3(m[i][j] - f * m[r][j]);
    }
    ++r;
  }
  return r;
}

}  // namespace

Brauer3Group Brauer3Group::make(int rank, std::vector<std::vector<int>> involution) {
  if (rank < 0 || involution.size() != static_cast<size_t>(rank))
    fail(Err::DegenerateInput, "involution matrix must be rank x rank");
  for (auto& row : involution) {
    if (row.size() != static_cast<size_t>(rank))
      fail(Err::DegenerateInput, "involution matrix must be square");
    for (auto& x : row) x = mod3(x);
  }
  // square must be the identity
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      int s = 0;
      for (int k = 0; k < rank; ++k) s += involution[i][k] * involution[k][j];
      if (mod3(s) != (i == j ? 1 : 0))
        fail(Err::DegenerateInput, "involution squared is not the identity mod 3");
    }
  Brauer3Group g;
  g.rank_ = rank;
  g.inv_ = std::move(involution);
  return g;
}

Brauer3Group Brauer3Group::identity_involution(int rank) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  return make(rank, std::move(m));
}

Brauer3Group Brauer3Group::negation(int rank) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 2;
  return make(rank, std::move(m));
}

Brauer3Group Brauer3Group::coordinate_swap(int rank) {
  if (rank < 2) fail(Err::DegenerateInput, "coordinate swap needs rank >= 2");
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 0));
  m[0][1] = m[1][0] = 1;
  for (int i = 2; i < rank; ++i) m[i][i] = 1;
  return make(rank, std::move(m));
}

std::vector<int> Brauer3Group::apply(const std::vector<int>& x) const {
  if (x.size() != static_cast<size_t>(rank_)) fail(Err::DegenerateInput, "vector rank mismatch");
  std::vector<int> y(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += inv_[i][j] * x[j];
    y[i] = mod3(s);
  }
  return y;
}

std::pair<std::vector<int>, std::vector<int>> decompose3(const std::vector<int>& x,
                                                         const Brauer3Group& g) {
  std::vector<int> sx = g.apply(x);
  std::vector<int> plus(x.size()), minus(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    plus[i] = mod3(2 * (x[i] + sx[i]));
    minus[i] = mod3(2 * (x[i] - sx[i]));
  }
  return {plus, minus};
}

static std::vector<std::vector<int>> eigen_kernel(const Brauer3Group& g, int shift) {
  // kernel of (involution + shift * id) mod 3
  std::vector<std::vector<int>> m = g.involution();
  for (int i = 0; i < g.rank(); ++i) m[i][i] = ((m[i][i] + shift) % 3 + 3) % 3;
  return kernel_mod3(std::move(m), g.rank());
}

std::vector<std::vector<int>> w_subgroup(const Brauer3Group& g) { return eigen_kernel(g, 1); }

std::vector<std::vector<int>> fixed_subgroup(const Brauer3Group& g) { return eigen_kernel(g, -1); }

bool direct_sum_check(const Brauer3Group& g) {
  auto w = w_subgroup(g);
  auto fx = fixed_subgroup(g);
  if (w.size() + fx.size() != static_cast<size_t>(g.rank())) return false;
  std::vector<std::vector<int>> all = fx;
  all.insert(all.end(), w.begin(), w.end());
  return rank_mod3(std::move(all), g.rank()) == static_cast<size_t>(g.rank());
}

CyclicAlgebraDatum CyclicAlgebraDatum::make(FieldPtr extension, int generator, Rat a) {
  if (extension->degree() != 3)
    fail(Err::DegenerateInput, "cyclic algebra datum needs a degree-3 extension");
  if (a == 0) fail(Err::DegenerateInput, "cyclic algebra datum needs a nonzero element");
  int g = generator;
  if (g == extension->identity_index())
    fail(Err::DegenerateInput, "generator must have order 3");
  int g2 = extension->compose(g, g);
  if (g2 == extension->identity_index() || extension->compose(g, g2) != extension->identity_index())
    fail(Err::DegenerateInput, "designated automorphism does not have order 3");
  return CyclicAlgebraDatum{std::move(extension), generator, std::move(a)};
}

CyclicAlgebraDatum opposite(const CyclicAlgebraDatum& c) {
  return CyclicAlgebraDatum{c.extension, c.generator, Rat(1) / c.a};
}

std::pair<CyclicAlgebraDatum, CyclicAlgebraDatum> split_pair(const CyclicAlgebraDatum& c) {
  return {c, opposite(c)};
}

}  // namespace dp6
