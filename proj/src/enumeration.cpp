#include "seqcong/enumeration.hpp"

#include <map>
#include <mutex>
#include <set>

#include "seqcong/bijections.hpp"
#include "seqcong/checked.hpp"

namespace seqcong {

namespace {

void weighted_rec(std::span<const std::uint64_t> weights, std::size_t i, std::uint64_t remaining,
                  std::vector<std::uint64_t>& buf, std::vector<std::vector<std::uint64_t>>& out) {
  if (i == weights.size()) {
    if (remaining != 0) return;
    auto v = buf;
    while (!v.empty() && v.back() == 0) v.pop_back();
    out.push_back(std::move(v));
    return;
  }
  const std::uint64_t w = weights[i];
  const std::uint64_t max_c = w == 0 ? 0 : remaining / w;
  for (std::uint64_t c = 0; c <= max_c; ++c) {
    buf.push_back(c);
    weighted_rec(weights, i + 1, remaining - c * w, buf, out);
    buf.pop_back();
  }
}

std::vector<Partition> decode_sorted(const std::vector<std::vector<std::uint64_t>>& vectors) {
  std::vector<Partition> out;
  out.reserve(vectors.size());
  for (const auto& c : vectors) out.push_back(from_c_notation(CNotation{c}));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

std::vector<Partition> enumerate_partitions(Part n) {
  std::vector<Partition> out;
  for_each_partition(n, n, kUnboundedLength,
                     [&](std::span<const Part> p) { out.emplace_back(std::vector<Part>(p.begin(), p.end())); });
  return out;
}

std::vector<Partition> enumerate_with_parts_from(std::span<const Part> allowed, Part n) {
  const std::set<Part> values(allowed.begin(), allowed.end());
  std::vector<Partition> out;
  std::vector<Part> desc(values.rbegin(), values.rend());
  std::vector<Part> buf;
  // Choose parts from the allowed values in decreasing order.
  auto rec = [&](auto& self, std::size_t from, Part remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(buf);
      return;
    }
    for (std::size_t i = from; i < desc.size(); ++i) {
      if (desc[i] == 0 || desc[i] > remaining) continue;
      buf.push_back(desc[i]);
      self(self, i, remaining - desc[i]);
      buf.pop_back();
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<std::vector<std::uint64_t>> enumerate_weighted_vectors(std::span<const std::uint64_t> weights,
                                                                   std::uint64_t total) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> buf;
  weighted_rec(weights, 0, total, buf, out);
  return out;
}

std::vector<Partition> enumerate_seqcong_by_size(Part n) {
  std::vector<std::uint64_t> weights;
  for (std::uint64_t i = 1; i * i <= n; ++i) weights.push_back(i * i);
  return decode_sorted(enumerate_weighted_vectors(weights, n));
}

std::vector<Partition> enumerate_seqcong_by_largest(Part n) {
  std::vector<std::uint64_t> weights;
  for (std::uint64_t i = 1; i <= n; ++i) weights.push_back(i);
  return decode_sorted(enumerate_weighted_vectors(weights, n));
}

CountSeries product_series(std::span<const Part> part_values, std::size_t n_max) {
  CountSeries s;
  s.coefficients.assign(n_max + 1, BigInt(0));
  s.coefficients[0] = 1;
  for (Part v : part_values) {
    if (v == 0 || v > n_max) continue;
    for (std::size_t n = v; n <= n_max; ++n) s.coefficients[n] += s.coefficients[n - v];
  }
  return s;
}

CountSeries powers_series(unsigned k, std::size_t n_max) {
  static std::mutex mutex;
  static std::map<unsigned, CountSeries> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(k);
    if (it != cache.end() && it->second.size() > n_max) {
      CountSeries out;
      out.coefficients.assign(it->second.coefficients.begin(),
                              it->second.coefficients.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
      return out;
    }
  }
  std::vector<Part> values;
  for (Part m = 1;; ++m) {
    std::uint64_t v;
    try {
      v = checked_pow(m, k);
    } catch (const OverflowError&) {
      break;
    }
    if (v > n_max) break;
    values.push_back(v);
    if (k == 0) break;
  }
  CountSeries out = product_series(values, n_max);
  std::lock_guard lock(mutex);
  auto& slot = cache[k];
  if (slot.size() < out.size()) slot = out;
  return out;
}

BigInt count_into_powers(std::size_t n, unsigned k) { return powers_series(k, n)[n]; }

BigInt count_members(const PartsPredicate& pred, Part n) {
  BigInt count = 0;
  for_each_partition(n, n, kUnboundedLength, [&](std::span<const Part> p) {
    if (pred(p)) ++count;
  });
  return count;
}

}  // namespace seqcong
