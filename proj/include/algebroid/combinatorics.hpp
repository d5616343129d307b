#ifndef ALGEBROID_COMBINATORICS_HPP
#define ALGEBROID_COMBINATORICS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace algebroid {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// All strictly increasing k-tuples from {0,...,n-1}, lexicographic.
inline std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  if (k == 0) out = {{}};
  return out;
}

/// Sort a tuple; returns +1/-1 for the permutation parity, 0 on repeats.
inline int sort_sign(std::vector<int>& t) {
  int sign = 1;
  for (size_t i = 0; i + 1 < t.size(); ++i)
    for (size_t j = 0; j + 1 < t.size() - i; ++j)
      if (t[j] > t[j + 1]) {
        std::swap(t[j], t[j + 1]);
        sign = -sign;
      }
  for (size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return 0;
  return sign;
}

/// Lexicographic rank of an increasing k-tuple among C(n,k).
inline int tuple_rank(const std::vector<int>& t, int n) {
  int k = static_cast<int>(t.size());
  long long r = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < t[i]; ++v) r += binomial(n - v - 1, k - i - 1);
    prev = t[i];
  }
  return static_cast<int>(r);
}

/// (p,q)-shuffles of {0,...,p+q-1}: pairs (first block, second block), both
/// increasing, with the permutation sign of (block1, block2).
struct Shuffle {
  std::vector<int> first, second;
  int sign;
};

inline std::vector<Shuffle> shuffles(int p, int q) {
  std::vector<Shuffle> out;
  for (const auto& f : increasing_tuples(p + q, p)) {
    Shuffle s;
    s.first = f;
    std::vector<bool> used(p + q, false);
    for (int x : f) used[x] = true;
    for (int x = 0; x < p + q; ++x)
      if (!used[x]) s.second.push_back(x);
    // Parity of the concatenated permutation (first, second).
    std::vector<int> perm = s.first;
    perm.insert(perm.end(), s.second.begin(), s.second.end());
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) sign = -sign;
    s.sign = sign;
    out.push_back(std::move(s));
  }
  return out;
}

/// Remove the given sorted positions from a tuple.
inline std::vector<int> drop_positions(const std::vector<int>& t, std::vector<int> pos) {
  std::vector<int> out;
  size_t pi = 0;
  std::sort(pos.begin(), pos.end());
  for (size_t i = 0; i < t.size(); ++i) {
    if (pi < pos.size() && static_cast<int>(i) == pos[pi]) {
      ++pi;
      continue;
    }
    out.push_back(t[i]);
  }
  return out;
}

}  // namespace algebroid

#endif
