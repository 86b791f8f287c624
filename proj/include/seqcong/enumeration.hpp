#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seqcong/partition.hpp"

namespace seqcong {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of a power series in q, indexed from q^0.
struct CountSeries {
  std::vector<BigInt> coefficients;

  const BigInt& operator[](std::size_t n) const { return coefficients.at(n); }
  std::size_t size() const noexcept { return coefficients.size(); }
};

using PartsPredicate = std::function<bool(std::span<const Part>)>;

inline constexpr std::size_t kUnboundedLength = std::numeric_limits<std::size_t>::max();

namespace detail {

template <class Visit>
bool call_visit(Visit& visit, std::span<const Part> parts) {
  if constexpr (std::is_void_v<std::invoke_result_t<Visit&, std::span<const Part>>>) {
    visit(parts);
    return true;
  } else {
    return static_cast<bool>(visit(parts));
  }
}

template <class Visit>
bool partitions_rec(std::vector<Part>& buf, Part remaining, Part cap, std::size_t slots, Visit& visit) {
  if (remaining == 0) return call_visit(visit, std::span<const Part>(buf));
  if (slots == 0) return true;
  const Part hi = std::min(remaining, cap);
  // The remaining slots must be able to absorb what is left.
  const Part lo = slots >= remaining ? 1 : (remaining + slots - 1) / slots;
  for (Part v = hi; v >= lo && v >= 1; --v) {
    buf.push_back(v);
    const bool go = partitions_rec(buf, remaining - v, v, slots - 1, visit);
    buf.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every partition of n with parts ≤ max_part and at most max_len
/// parts, in reverse lexicographic order. The visitor gets a span that is only
/// valid during the call; it may return false to stop early. Returns false iff
/// stopped early.
template <class Visit>
bool for_each_partition(Part n, Part max_part, std::size_t max_len, Visit&& visit) {
  std::vector<Part> buf;
  buf.reserve(std::min<std::size_t>(max_len, 64));
  return detail::partitions_rec(buf, n, max_part, max_len, visit);
}

/// Every partition with parts ≤ max_part and length ≤ max_len, ordered by
/// size and reverse lexicographically within a size. Starts with the empty
/// partition.
template <class Visit>
bool for_each_partition_within(Part max_part, std::size_t max_len, Visit&& visit) {
  const Part top = max_part * static_cast<Part>(max_len);
  for (Part n = 0; n <= top; ++n)
    if (!for_each_partition(n, max_part, max_len, visit)) return false;
  return true;
}

/// All partitions of n, reverse lexicographic.
std::vector<Partition> enumerate_partitions(Part n);

/// Partitions of n whose parts all lie in `allowed`, reverse lexicographic.
std::vector<Partition> enumerate_with_parts_from(std::span<const Part> allowed, Part n);

/// Canonical coefficient vectors c (no trailing zero) with Σ weights[i]·c[i] == total.
/// Coefficients beyond weights.size() are zero.
std::vector<std::vector<std::uint64_t>> enumerate_weighted_vectors(std::span<const std::uint64_t> weights,
                                                                   std::uint64_t total);

/// Sequentially congruent partitions of size n (Σ i²·c_i = n), reverse lexicographic.
std::vector<Partition> enumerate_seqcong_by_size(Part n);

/// Sequentially congruent partitions with largest part n (Σ i·c_i = n).
std::vector<Partition> enumerate_seqcong_by_largest(Part n);

/// Coefficients [q^0 … q^n_max] of ∏_{v ∈ part_values} 1/(1 − q^v).
CountSeries product_series(std::span<const Part> part_values, std::size_t n_max);

/// Coefficients of ∏_{m ≥ 1} 1/(1 − q^{m^k}) up to q^n_max. Cached per k;
/// safe to call from several threads.
CountSeries powers_series(unsigned k, std::size_t n_max);

/// Number of partitions of n into k-th powers.
BigInt count_into_powers(std::size_t n, unsigned k);

/// Brute-force count of partitions of n satisfying `pred`.
BigInt count_members(const PartsPredicate& pred, Part n);

}  // namespace seqcong
