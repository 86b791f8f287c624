#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqcong/partition.hpp"

namespace seqcong {

inline constexpr std::size_t kDefaultHorizon = 64;

/// An infinite integer sequence given by a family rule, or a finite explicit
/// prefix. Terms are 1-based.
///
///   nat      1, 2, 3, …
///   pow:k    1^k, 2^k, 3^k, …   (pow:0 is the all-ones sequence)
///   arith:a  a, 2a, 3a, …
///   explicit finite list, e.g. "2,5,3"
///
/// pow:1 and arith:1 normalize to nat so that equal sequences compare equal.
class Sequence {
 public:
  enum class Family { Naturals, Powers, Arithmetic, Explicit };

  static Sequence naturals();
  static Sequence powers(unsigned k);
  static Sequence arithmetic(std::uint64_t a);
  static Sequence explicit_terms(std::vector<std::uint64_t> terms);
  /// Grammar: "nat" | "pow:k" | "arith:a" | comma list. Throws SpecError.
  static Sequence parse(std::string_view text);

  Family family() const noexcept { return family_; }
  std::uint64_t param() const noexcept { return param_; }
  const std::vector<std::uint64_t>& terms() const noexcept { return terms_; }

  /// Term i (1-based). nullopt when an explicit list has fewer than i terms.
  /// Throws HorizonError when i exceeds `horizon`, OverflowError on overflow.
  std::optional<std::uint64_t> term(std::size_t i, std::size_t horizon) const;

  /// Smallest 1-based index whose term equals `value`, nullopt if none.
  /// Throws HorizonError if the answer cannot be settled within `horizon`.
  std::optional<std::size_t> index_of(std::uint64_t value, std::size_t horizon) const;

  bool strictly_increasing() const;
  bool distinct_terms() const;
  /// True for the rule families, which never run out of terms.
  bool infinite() const noexcept { return family_ != Family::Explicit; }

  std::string to_string() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  Sequence(Family f, std::uint64_t param, std::vector<std::uint64_t> terms)
      : family_(f), param_(param), terms_(std::move(terms)) {}

  Family family_ = Family::Naturals;
  std::uint64_t param_ = 0;
  std::vector<std::uint64_t> terms_;
};

/// Parameter pair (A, B) for S_B(A): the Young diagram is built from a_i-wide,
/// b_i-tall rectangles. B must be strictly increasing; A positive.
class GenSpec {
 public:
  GenSpec(Sequence a, Sequence b, std::size_t horizon = kDefaultHorizon);

  /// The specialization A = (1, 2, 3, …), B = ℕ that recovers c-notation.
  static GenSpec classical(std::size_t horizon = kDefaultHorizon);

  const Sequence& a() const noexcept { return a_; }
  const Sequence& b() const noexcept { return b_; }
  std::size_t horizon() const noexcept { return horizon_; }
  bool distinct_a() const noexcept { return distinct_a_; }

  /// Term access that throws SpecError when an explicit list runs out.
  std::uint64_t a_term(std::size_t i) const;
  std::uint64_t b_term(std::size_t i) const;

  std::string to_string() const;

  friend bool operator==(const GenSpec& x, const GenSpec& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  Sequence a_;
  Sequence b_;
  std::size_t horizon_;
  bool distinct_a_;
};

/// n-notation [n_1, …, n_r]_{A,B} = n_1(a_1^{b_1}) ⋆ n_2(a_2^{b_2}) ⋆ …
struct NNotation {
  GenSpec spec;
  std::vector<std::uint64_t> coeffs;

  friend bool operator==(const NNotation&, const NNotation&) = default;
};

/// conjugate(p) has all parts in B, and b_i occurs a multiple of a_i times.
bool is_in_SBA(const Partition& p, const GenSpec& spec);

/// Rows (b_{i−1}, b_i] all equal Σ_{j ≥ i} a_j·n_j. Throws CanonicalFormError
/// on a trailing zero coefficient.
Partition n_decode(const NNotation& n);

/// Inverse of n_decode; throws DomainError for non-members of S_B(A).
NNotation n_encode(const Partition& p, const GenSpec& spec);

/// σ_AB: ⟨a_1^{n_1}, …, a_r^{n_r}⟩, reordered into standard notation.
/// Requires distinct A terms (SpecError otherwise).
Partition sigma_AB(const NNotation& n);

/// π_AB: turns each column of height a_i into an a_i × b_i rectangle.
///
/// n_i is the number of columns of p whose height is a_i, i.e.
/// λ_{a_i} − λ_{a_i+1}. For increasing A this is the usual
/// n_i = λ_{a_i} − λ_{a_i+1} (i < r), n_r = λ_{a_r}; for A in any other order
/// the same count is used at the position of a_i in A (sorted-position
/// convention). Columns whose height is not a term of A are rejected.
NNotation pi_AB(const Partition& p, const GenSpec& spec);

/// π′_AB: decodes [λ_1−λ_2, …, λ_{r−1}−λ_r, λ_r] over the spec.
Partition pi_prime_AB(const Partition& p, const GenSpec& spec);

/// σ′_AB: ⟨1^{n_1}, …, r^{n_r}⟩ where [n_1, …, n_r] = n_encode(p, spec).
Partition sigma_prime_AB(const Partition& p, const GenSpec& spec);

/// S(k): λ_i ≡ λ_{i+1} (mod i^k), λ_r ≡ 0 (mod r^k). S(1) is 𝒮.
bool is_in_Sk(const Partition& p, unsigned k);

/// S(j,k): λ_i − λ_{i+1} = j·i^k for i < r, and λ_r = j·r^k.
bool is_in_Sjk(const Partition& p, std::uint64_t j, unsigned k);

/// σ_k over A = ℕ^k (any B): ⟨(1^k)^{n_1}, …, (r^k)^{n_r}⟩.
Partition sigma_k(const NNotation& n, unsigned k);

/// ψ_k over A = ℕ^k, B = ℕ: ⟨(1^{k+1})^{n_1}, …, (r^{k+1})^{n_r}⟩.
Partition psi_k(const NNotation& n, unsigned k);

/// η_{k,p}: same coefficients, spec (ℕ^k, B) → (ℕ^{k−p}, ℕ^p).
NNotation eta(const NNotation& n, unsigned k, unsigned p);

/// τ_{k,p,q}: same coefficients, spec (ℕ^{k−p}, ℕ^p) → (ℕ^{k−q}, ℕ^q).
NNotation tau(const NNotation& n, unsigned k, unsigned p, unsigned q);

std::string to_string(const NNotation& n);

}  // namespace seqcong
