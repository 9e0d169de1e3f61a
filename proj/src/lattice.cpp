#include "ehsum/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace ehsum {

int weight(const MultiIndex& y) { return std::accumulate(y.begin(), y.end(), 0); }

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

// ---------------------------------------------------------------- SimplexExact

SimplexExact::SimplexExact(int n, int N) : n_(n), N_(N), cur_(n, 0) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (N < 0) throw std::invalid_argument("simplex size must be >= 0");
}

bool SimplexExact::next(MultiIndex& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    cur_.assign(n_, 0);
    cur_[n_ - 1] = N_;
    out = cur_;
    return true;
  }
  // Lexicographic successor within |y| = N: bump the rightmost position
  // (below the last) whose tail still carries weight; the leftover weight
  // moves entirely into the last slot.
  for (int i = n_ - 2; i >= 0; --i) {
    int tail = 0;
    for (int j = i + 1; j < n_; ++j) tail += cur_[j];
    if (tail > 0) {
      cur_[i] += 1;
      for (int j = i + 1; j < n_; ++j) cur_[j] = 0;
      cur_[n_ - 1] = tail - 1;
      out = cur_;
      return true;
    }
  }
  done_ = true;
  return false;
}

// ---------------------------------------------------------------- SimplexLe

SimplexLe::SimplexLe(int n, int N) : n_(n), N_(N), cur_(n, 0) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (N < 0) throw std::invalid_argument("simplex size must be >= 0");
}

bool SimplexLe::next(MultiIndex& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    cur_.assign(n_, 0);
    out = cur_;
    return true;
  }
  if (weight(cur_) < N_) {
    cur_[n_ - 1] += 1;
    out = cur_;
    return true;
  }
  // At full weight: clear the rightmost positive entry and carry left.
  for (int i = n_ - 1; i >= 1; --i) {
    if (cur_[i] > 0) {
      cur_[i] = 0;
      cur_[i - 1] += 1;
      out = cur_;
      return true;
    }
  }
  done_ = true;
  return false;
}

// ---------------------------------------------------------------- Box

Box::Box(MultiIndex m) : m_(std::move(m)), cur_(m_.size(), 0) {
  if (m_.empty()) throw std::invalid_argument("box bounds must be nonempty");
  for (int b : m_)
    if (b < 0) throw std::invalid_argument("box bounds must be >= 0");
}

bool Box::next(MultiIndex& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    out = cur_;
    return true;
  }
  for (int i = static_cast<int>(m_.size()) - 1; i >= 0; --i) {
    if (cur_[i] < m_[i]) {
      cur_[i] += 1;
      for (std::size_t j = i + 1; j < m_.size(); ++j) cur_[j] = 0;
      out = cur_;
      return true;
    }
  }
  done_ = true;
  return false;
}

// ---------------------------------------------------------------- counts

std::uint64_t simplex_exact_count(int n, int N) {
  return binom(static_cast<std::uint64_t>(N) + n - 1, n - 1);
}

std::uint64_t simplex_le_count(int n, int N) {
  return binom(static_cast<std::uint64_t>(N) + n, n);
}

std::uint64_t box_count(const MultiIndex& m) {
  std::uint64_t c = 1;
  for (int b : m) c *= static_cast<std::uint64_t>(b) + 1;
  return c;
}

template <typename Stream>
static std::vector<MultiIndex> collect(Stream s) {
  std::vector<MultiIndex> out;
  MultiIndex y;
  while (s.next(y)) out.push_back(y);
  return out;
}

std::vector<MultiIndex> collect_simplex_exact(int n, int N) { return collect(SimplexExact(n, N)); }
std::vector<MultiIndex> collect_simplex_le(int n, int N) { return collect(SimplexLe(n, N)); }
std::vector<MultiIndex> collect_box(const MultiIndex& m) { return collect(Box(m)); }

}  // namespace ehsum
