#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqcong/enumeration.hpp"
#include "seqcong/partition.hpp"

namespace seqcong {

// Builtin partition ideals. S is not an ideal; it is kept as a predicate so
// the closure check and the maximality evidence have something to fail on.
enum class IdealKind {
  SA,         // λ_i divisible by every j ≤ i
  SA_maxlen,  // SA with length ≤ r
  S,          // sequentially congruent
  D,          // distinct parts
  R,          // adjacent parts differ by at least 2
  Rprime,     // no parts below the Durfee square: smallest part ≥ length
  Adiff,      // λ_{r−i} − λ_{r−i+1} ≥ i
  N_maxlen,   // length ≤ n
  P_parity,   // all parts of the same parity
  P_mod,      // all parts congruent modulo k
  Pprime,     // same parity and distinct
};

struct IdealSpec {
  IdealKind kind = IdealKind::D;
  std::uint64_t param = 0;

  /// "SA", "SA_maxlen:r", "S", "D", "R", "Rprime", "Adiff", "N_maxlen:n",
  /// "P_parity", "P_mod:k", "Pprime". Throws DomainError on bad input.
  static IdealSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

/// Every builtin kind with a representative parameter, in declaration order.
std::vector<IdealSpec> builtin_ideals();

bool is_member(const IdealSpec& s, std::span<const Part> parts);
inline bool is_member(const IdealSpec& s, const Partition& p) { return is_member(s, p.parts()); }

/// Exhaustive searches run over all partitions with parts ≤ max_part and
/// length ≤ max_length, by size and then reverse lexicographically.
struct AnalysisBound {
  Part max_part = 12;
  std::size_t max_length = 8;
};

struct ClosureResult {
  bool closed = true;
  std::optional<Partition> member;   // member whose part removal leaves the set
  std::optional<Partition> removed;  // the non-member left behind
};

/// Single-part removal suffices: any removal is a sequence of single removals.
ClosureResult check_ideal_closure(const IdealSpec& s, const AnalysisBound& b);

/// A non-member all of whose k-wide windows of consecutive integer part
/// values are members, i.e. a witness that the order exceeds k.
std::optional<Partition> order_refute(const IdealSpec& s, std::size_t k, const AnalysisBound& b);

/// Same search with windows over k consecutive distinct part values.
std::optional<Partition> weak_order_refute(const IdealSpec& s, std::size_t k, const AnalysisBound& b);

/// Bounded order estimate. Windows as wide as the search cap can never be
/// refuted inside the bound, so `unbounded` is reported when every k below
/// the cap is refuted (growing with the bound). `witnesses[k-1]` refutes k.
struct OrderEstimate {
  bool unbounded = false;
  std::size_t order = 0;
  std::vector<Partition> witnesses;
};

/// Cap is max_part.
OrderEstimate order_estimate(const IdealSpec& s, const AnalysisBound& b);
/// Cap is min(max_part, max_length): a partition has at most that many distinct parts.
OrderEstimate weak_order_estimate(const IdealSpec& s, const AnalysisBound& b);

struct ModulusVerdict {
  enum class Failure { None, ShiftLeavesIdeal, NotAShift };
  bool holds = true;
  Failure failure = Failure::None;
  std::optional<Partition> witness;  // the member (or I^(m) element) that fails
};

/// φ^m I = I^(m), checked in both directions within the bound.
ModulusVerdict check_modulus(const IdealSpec& s, Part m, const AnalysisBound& b);

/// L_I: members whose parts are all ≤ m, up to length max_length. Reported
/// infinite when a member still exists at the length cap.
struct LSet {
  std::vector<Partition> members;
  bool infinite_within_bound = false;
};

LSet compute_L(const IdealSpec& s, Part m, const AnalysisBound& b);

/// Bucketing by blocks of m: piece i holds the parts in ((i−1)m, im], each
/// reduced by (i−1)m. The last piece is nonempty; the empty partition gives [].
std::vector<Partition> andrews_decompose(const Partition& p, Part m);
/// λ = π_1 ⊕ φ^m π_2 ⊕ φ^{2m} π_3 ⊕ …
Partition andrews_compose(std::span<const Partition> pieces, Part m);

/// λ = π ⊕ φ^{l·m} π̃ is a member-shaped representation (π̃ ∈ I, Tail_m(π̃)
/// required by some member) whose result is not in I.
struct LinkConflict {
  Partition tail;    // Tail_m(π̃)
  Partition tilde;   // π̃
  Partition lambda;  // π ⊕ φ^{l·m} π̃, not a member
};

/// Outcome of testing one span l for one tail π.
struct SpanAnalysis {
  std::size_t span = 0;
  bool valid = false;
  std::vector<Partition> required;            // linking set forced by members, in L order
  std::optional<Partition> undecomposable;    // member with tail π not of the form π ⊕ φ^{lm} π̃
  std::vector<LinkConflict> conflicts;        // sorted by λ (size, then reverse lex)
};

SpanAnalysis analyse_span(const IdealSpec& s, Part m, const Partition& pi, std::size_t span,
                          const AnalysisBound& b);

struct LinkEntry {
  Partition tail;
  std::vector<std::size_t> valid_spans;
  std::optional<std::size_t> span;   // chosen span: the largest valid one
  std::vector<Partition> linking_set;
  std::optional<Partition> witness;  // set when no span works
};

struct LinkReport {
  enum class Verdict { LinkedWithinBound, Refuted, LInfiniteWithinBound };

  IdealSpec ideal;
  Part modulus = 1;
  Verdict verdict = Verdict::LinkedWithinBound;
  std::optional<Partition> witness;
  LSet L;
  std::vector<LinkEntry> entries;
};

inline constexpr std::size_t kDefaultSpanCap = 4;

/// Bounded search for spans and minimal linking sets. For a fixed span the
/// minimal linking set is unique (the tails forced by members), so the search
/// only has to pick the span.
LinkReport infer_linking(const IdealSpec& s, Part m, const AnalysisBound& b,
                         std::size_t span_cap = kDefaultSpanCap);

std::string to_string(LinkReport::Verdict v);

/// Coefficient of q^n in ∏1/(1−q^{2k−1}) + ∏1/(1−q^{2k}) − 1.
BigInt count_parity_ideal(std::size_t n);

/// For a sequentially congruent p outside SA: drop every part after the bad
/// λ_i and the first i−k parts, leaving λ_i at an index k that does not
/// divide it. Returns that non-member of S, or nullopt if p ∈ SA.
std::optional<Partition> exit_S_by_removal(const Partition& p);

/// For r ≥ 2 with m = lcm(1..r): (m+2, 2) belongs to SA_maxlen(r), while
/// (2m+2, m+2, 2) = (2) ⊕ φ^m (m+2, 2) is not even sequentially congruent.
struct LinkingCounterexample {
  std::uint64_t r = 0;
  std::uint64_t modulus = 0;
  Partition member;
  Partition non_member;
};

LinkingCounterexample sa_linking_counterexample(std::uint64_t r);

/// lcm(1, …, r). Throws OverflowError.
std::uint64_t lcm_upto(std::uint64_t r);

/// Canonical order used for witnesses: smaller size first, then reverse lexicographic.
bool canonical_less(const Partition& a, const Partition& b);

}  // namespace seqcong
