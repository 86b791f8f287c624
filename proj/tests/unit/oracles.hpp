#pragma once

// Independent reference implementations. Nothing here calls into the library
// except for the Partition value type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "seqcong/partition.hpp"

namespace oracle {

using seqcong::Part;
using seqcong::Partition;

// All partitions of n built as nondecreasing part lists, then reversed.
inline void naive_rec(Part remaining, Part min_part, std::vector<Part>& cur, std::vector<std::vector<Part>>& out) {
  if (remaining == 0) {
    out.emplace_back(cur.rbegin(), cur.rend());
    return;
  }
  for (Part v = min_part; v <= remaining; ++v) {
    cur.push_back(v);
    naive_rec(remaining - v, v, cur, out);
    cur.pop_back();
  }
}

inline std::set<Partition> partitions(Part n) {
  std::vector<std::vector<Part>> raw;
  std::vector<Part> cur;
  naive_rec(n, 1, cur, raw);
  std::set<Partition> out;
  for (auto& v : raw) out.insert(Partition(v));
  return out;
}

inline std::set<Partition> partitions_upto(Part n) {
  std::set<Partition> out;
  for (Part k = 0; k <= n; ++k) {
    auto s = partitions(k);
    out.insert(s.begin(), s.end());
  }
  return out;
}

// Column j has one cell for every row at least j long.
inline Partition transpose(const Partition& p) {
  std::vector<Part> out;
  for (Part j = 1; j <= p.largest(); ++j) {
    Part h = 0;
    for (Part v : p.parts()) h += v >= j ? 1 : 0;
    out.push_back(h);
  }
  return Partition(out);
}

// λ'_i = i·λ_i + Σ_{j>i} λ_j.
inline Partition pi_direct(const Partition& p) {
  std::vector<Part> out;
  const auto v = p.vec();
  for (std::size_t i = 0; i < v.size(); ++i) {
    Part s = (i + 1) * v[i];
    for (std::size_t j = i + 1; j < v.size(); ++j) s += v[j];
    out.push_back(s);
  }
  return Partition(out);
}

inline bool seq_congruent(const Partition& p) {
  const auto v = p.vec();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Part next = i + 1 < v.size() ? v[i + 1] : 0;
    if ((v[i] - next) % (i + 1) != 0) return false;
  }
  return true;
}

inline std::uint64_t lcm_upto(std::uint64_t r) {
  std::uint64_t l = 1;
  for (std::uint64_t i = 1; i <= r; ++i) l = std::lcm(l, i);
  return l;
}

// λ_i ≡ λ_{i+1} (mod lcm(1..i)) with λ_{r+1} = 0.
inline bool sa_by_congruence(const Partition& p) {
  const auto v = p.vec();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Part next = i + 1 < v.size() ? v[i + 1] : 0;
    if ((v[i] - next) % lcm_upto(i + 1) != 0) return false;
  }
  return true;
}

inline bool all_squares(const Partition& p) {
  for (Part v : p.parts()) {
    Part r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) return false;
  }
  return true;
}

// Brute-force count of partitions of n satisfying pred.
inline std::uint64_t count(Part n, const std::function<bool(const Partition&)>& pred) {
  std::uint64_t c = 0;
  for (const auto& p : partitions(n)) c += pred(p) ? 1 : 0;
  return c;
}

// Sequentially congruent partitions with largest part n: a scan over weakly
// decreasing sequences starting at n, pruned as soon as a difference fails.
inline std::set<Partition> seqcong_with_largest(Part n) {
  std::set<Partition> out;
  if (n == 0) {
    out.insert(Partition{});
    return out;
  }
  std::vector<Part> cur{n};
  std::function<void()> rec = [&] {
    Partition p(cur);
    if (seq_congruent(p)) out.insert(p);
    if (cur.size() >= n) return;
    for (Part v = 1; v <= cur.back(); ++v) {
      if ((cur.back() - v) % cur.size() != 0) continue;
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace oracle
