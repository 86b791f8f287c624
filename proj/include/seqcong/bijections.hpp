#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqcong/partition.hpp"

namespace seqcong {

/// c-notation [c_1, …, c_r]: the partition c_1(1) ⋆ c_2(2,2) ⋆ … ⋆ c_r(r,…,r).
/// Canonical form has c_r ≥ 1; the empty vector is the empty partition.
struct CNotation {
  std::vector<std::uint64_t> coeffs;

  friend bool operator==(const CNotation&, const CNotation&) = default;
};

/// First 1-based index where the sequential congruence fails, or nullopt for
/// members. Index r refers to the closing condition λ_r ≡ 0 (mod r).
std::optional<std::size_t> first_incongruent_index(const Partition& p);

/// λ_i ≡ λ_{i+1} (mod i) for i < r and λ_r ≡ 0 (mod r).
bool is_seq_congruent(const Partition& p);

/// c_i = (λ_i − λ_{i+1}) / i. Throws DomainError (carrying the failing index)
/// for partitions that are not sequentially congruent.
CNotation to_c_notation(const Partition& p);

/// λ_i = Σ_{j ≥ i} j·c_j. Throws CanonicalFormError on a trailing zero.
Partition from_c_notation(const CNotation& c);

/// π: partitions of n → sequentially congruent partitions with largest part n.
/// Built as the c-vector [λ_1−λ_2, …, λ_{r−1}−λ_r, λ_r].
Partition pi_map(const Partition& p);

/// σ: ⟨1^{c_1}, 2^{c_2}, …, r^{c_r}⟩ for φ = [c_1, …, c_r].
Partition sigma_map(const Partition& p);

/// π∘σ evaluated straight from the parts of φ: the value
/// Σ_{j=1}^{t} Σ_{i=j}^{r} (φ_i − φ_{i+1})/i appears (φ_t − φ_{t+1})/t times.
/// Zero-frequency entries are skipped.
Partition pi_sigma_closed_form(const Partition& p);

/// ψ: [c_1, …, c_r] ↦ ⟨(1²)^{c_1}, …, (r²)^{c_r}⟩. Size preserving.
Partition psi_map(const Partition& p);

/// Inverse of ψ. Throws DomainError naming the first non-square part.
Partition psi_inverse(const Partition& p);

/// One i×i block of the square decomposition. Blocks are listed left to right:
/// larger squares first, `column` is the 1-based leftmost column.
struct SquareBlock {
  std::uint64_t side;
  std::uint64_t column;

  friend bool operator==(const SquareBlock&, const SquareBlock&) = default;
};

std::vector<SquareBlock> square_blocks(const Partition& p);

/// Young diagram with each square block drawn in alternating glyphs
/// ("■" / "□") so adjacent blocks stay distinguishable.
std::string render_square_decomposition(const Partition& p);

std::string to_string(const CNotation& c);

}  // namespace seqcong
