#pragma once

#include <cstdint>
#include <vector>

namespace ehsum {

// Summation multi-index y = (y_1, ..., y_n), all entries >= 0.
using MultiIndex = std::vector<int>;

int weight(const MultiIndex& y);  // |y| = y_1 + ... + y_n

// All streams yield indices in lexicographic order (leftmost entry most
// significant) and each index exactly once.

// { y >= 0 : |y| = N }, count C(N+n-1, n-1).
class SimplexExact {
 public:
  SimplexExact(int n, int N);
  bool next(MultiIndex& out);  // false once exhausted

 private:
  int n_, N_;
  bool started_ = false, done_ = false;
  MultiIndex cur_;
};

// { y >= 0 : |y| <= N }, count C(N+n, n).
class SimplexLe {
 public:
  SimplexLe(int n, int N);
  bool next(MultiIndex& out);

 private:
  int n_, N_;
  bool started_ = false, done_ = false;
  MultiIndex cur_;
};

// { y : 0 <= y_k <= m_k }, count prod (m_k + 1).
class Box {
 public:
  explicit Box(MultiIndex m);
  bool next(MultiIndex& out);

 private:
  MultiIndex m_;
  bool started_ = false, done_ = false;
  MultiIndex cur_;
};

std::uint64_t simplex_exact_count(int n, int N);
std::uint64_t simplex_le_count(int n, int N);
std::uint64_t box_count(const MultiIndex& m);

std::vector<MultiIndex> collect_simplex_exact(int n, int N);
std::vector<MultiIndex> collect_simplex_le(int n, int N);
std::vector<MultiIndex> collect_box(const MultiIndex& m);

std::uint64_t binom(std::uint64_t n, std::uint64_t k);

}  // namespace ehsum
