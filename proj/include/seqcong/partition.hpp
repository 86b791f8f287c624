#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace seqcong {

using Part = std::uint64_t;

/// An integer partition stored in standard notation: parts weakly decreasing,
/// every part positive. The default-constructed value is the empty partition.
///
/// Positions are 1-based in `part(i)`, and `part(i)` reads 0 past the last
/// part, so formulas like λ_i − λ_{i+1} work without bounds juggling.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError if `parts` is not weakly decreasing or contains a 0.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

  /// Sorts into standard notation. Zeros are rejected.
  static Partition from_unsorted(std::vector<Part> parts);

  std::span<const Part> parts() const noexcept { return parts_; }
  const std::vector<Part>& vec() const noexcept { return parts_; }

  bool empty() const noexcept { return parts_.empty(); }
  std::size_t length() const noexcept { return parts_.size(); }
  /// Sum of parts. Throws OverflowError if it does not fit.
  Part size() const;
  Part largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  Part smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  /// 1-based part access; 0 for i == 0 or i > length().
  Part part(std::size_t i) const noexcept {
    return (i == 0 || i > parts_.size()) ? 0 : parts_[i - 1];
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
};

/// Frequency view ⟨1^{f_1}, 2^{f_2}, …⟩. Only nonzero frequencies are stored.
class FrequencyMap {
 public:
  FrequencyMap() = default;
  explicit FrequencyMap(const Partition& p);

  /// Adds `count` copies of `part`. Zero counts are ignored; part 0 is rejected.
  void add(Part part, std::uint64_t count = 1);
  std::uint64_t frequency(Part part) const;
  const std::map<Part, std::uint64_t>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  Partition to_partition() const;

  friend bool operator==(const FrequencyMap&, const FrequencyMap&) = default;

 private:
  std::map<Part, std::uint64_t> entries_;
};

// Conjugate via ⟨1^{λ1−λ2}, 2^{λ2−λ3}, …, r^{λr}⟩.
Partition conjugate(const Partition& p);

// Piecewise criterion: λ_i = j whenever λ_{j+1} < i ≤ λ_j.
bool is_self_conjugate(const Partition& p);

/// a ⋆ b: componentwise sum from the left, missing parts read as 0.
Partition star_add(const Partition& a, const Partition& b);

Partition scalar_mul(std::uint64_t c, const Partition& p);

/// a ⊕ b: multiset union of parts.
Partition oplus_merge(const Partition& a, const Partition& b);

/// φ^m: adds m to every part. The empty partition stays empty.
Partition shift(const Partition& p, Part m);

/// Tail_m: the parts that are at most m.
Partition tail(const Partition& p, Part m);

/// The parts strictly greater than m (complement of tail).
Partition head_above(const Partition& p, Part m);

/// Side of the Durfee square: largest d with λ_d ≥ d.
std::size_t durfee_size(const Partition& p);

/// Deletes the multiset `drop` from p. Throws ContainmentError if `drop` is
/// not a sub-multiset of p's parts.
Partition remove_parts(const Partition& p, const FrequencyMap& drop);

/// One row per part, cells "■" separated by single spaces, rows joined by
/// '\n' (no trailing newline). The empty partition renders as "(empty)".
std::string render_diagram(const Partition& p);

/// "(7, 5, 5, 4, 1)"; the empty partition is "()".
std::string to_string(const Partition& p);
/// "<1^1, 4^1, 5^2, 7^1>"; the empty frequency map is "<>".
std::string to_string(const FrequencyMap& f);

}  // namespace seqcong
