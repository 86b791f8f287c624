#include "seqcong/ideal.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "seqcong/bijections.hpp"
#include "seqcong/checked.hpp"
#include "seqcong/errors.hpp"

namespace seqcong {

namespace {

struct KindName {
  IdealKind kind;
  std::string_view name;
  bool has_param;
};

constexpr KindName kKinds[] = {
    {IdealKind::SA, "SA", false},         {IdealKind::SA_maxlen, "SA_maxlen", true},
    {IdealKind::S, "S", false},           {IdealKind::D, "D", false},
    {IdealKind::R, "R", false},           {IdealKind::Rprime, "Rprime", false},
    {IdealKind::Adiff, "Adiff", false},   {IdealKind::N_maxlen, "N_maxlen", true},
    {IdealKind::P_parity, "P_parity", false}, {IdealKind::P_mod, "P_mod", true},
    {IdealKind::Pprime, "Pprime", false},
};

bool all_congruent(std::span<const Part> parts, Part k) {
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] % k != parts[0] % k) return false;
  return true;
}

bool distinct(std::span<const Part> parts) {
  return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

bool sa_member(std::span<const Part> parts) {
  for (std::size_t i = 1; i <= parts.size(); ++i)
    for (std::size_t j = 2; j <= i; ++j)
      if (parts[i - 1] % j != 0) return false;
  return true;
}

Partition to_partition(std::span<const Part> parts) { return Partition(std::vector<Part>(parts.begin(), parts.end())); }

// Parts of a descending span whose value lies in [lo, hi].
std::span<const Part> value_window(std::span<const Part> parts, Part lo, Part hi) {
  auto first = std::lower_bound(parts.begin(), parts.end(), hi, std::greater<>());
  auto last = std::upper_bound(parts.begin(), parts.end(), lo, std::greater<>());
  if (first >= last) return {};
  return {first, last};
}

bool is_order_witness(const IdealSpec& s, std::span<const Part> parts, std::size_t k) {
  if (is_member(s, parts)) return false;
  const Part top = parts.empty() ? 0 : parts.front();
  for (Part m = 1; m <= top; ++m)
    if (!is_member(s, value_window(parts, m, m + k - 1))) return false;
  return true;
}

bool is_weak_order_witness(const IdealSpec& s, std::span<const Part> parts, std::size_t k) {
  if (is_member(s, parts)) return false;
  // Start offsets of each run of equal parts.
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (i == 0 || parts[i] != parts[i - 1]) starts.push_back(i);
  starts.push_back(parts.size());
  const std::size_t runs = starts.size() - 1;
  for (std::size_t m = 0; m < runs; ++m) {
    const std::size_t end_run = std::min(m + k, runs);
    if (!is_member(s, parts.subspan(starts[m], starts[end_run] - starts[m]))) return false;
  }
  return true;
}

template <class Refute>
OrderEstimate estimate(std::size_t cap, Refute refute) {
  OrderEstimate out;
  if (cap <= 1) {
    out.order = 1;
    return out;
  }
  for (std::size_t k = 1; k < cap; ++k) {
    auto w = refute(k);
    if (!w) {
      out.order = k;
      return out;
    }
    out.witnesses.push_back(std::move(*w));
  }
  out.unbounded = true;
  return out;
}

// Parts of λ above m, each lowered by `by`; nullopt if some part above m is ≤ by.
std::optional<Partition> lower_head(const Partition& lambda, Part m, Part by) {
  std::vector<Part> out;
  for (Part v : lambda.parts()) {
    if (v <= m) continue;
    if (v <= by) return std::nullopt;
    out.push_back(v - by);
  }
  return Partition(std::move(out));
}

std::vector<Partition> members_within(const IdealSpec& s, const AnalysisBound& b) {
  std::vector<Partition> out;
  for_each_partition_within(b.max_part, b.max_length, [&](std::span<const Part> p) {
    if (is_member(s, p)) out.push_back(to_partition(p));
  });
  return out;
}

}  // namespace

IdealSpec IdealSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  for (const auto& k : kKinds) {
    if (k.name != name) continue;
    IdealSpec s{k.kind, 0};
    if (k.has_param != (colon != std::string_view::npos))
      throw DomainError("ideal '" + std::string(name) + (k.has_param ? "' needs a parameter" : "' takes no parameter"));
    if (k.has_param) {
      const auto arg = text.substr(colon + 1);
      auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), s.param);
      if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size())
        throw DomainError("invalid ideal parameter '" + std::string(arg) + "'");
      if (s.param == 0) throw DomainError("ideal parameters must be positive");
      if (s.kind == IdealKind::P_mod && s.param < 2) throw DomainError("P_mod needs k >= 2");
    }
    return s;
  }
  throw DomainError("unknown ideal kind '" + std::string(name) + "'");
}

std::string IdealSpec::to_string() const {
  for (const auto& k : kKinds)
    if (k.kind == kind) return std::string(k.name) + (k.has_param ? ":" + std::to_string(param) : "");
  return "?";
}

std::vector<IdealSpec> builtin_ideals() {
  return {{IdealKind::SA, 0},       {IdealKind::SA_maxlen, 2}, {IdealKind::S, 0},
          {IdealKind::D, 0},        {IdealKind::R, 0},         {IdealKind::Rprime, 0},
          {IdealKind::Adiff, 0},    {IdealKind::N_maxlen, 3},  {IdealKind::P_parity, 0},
          {IdealKind::P_mod, 3},    {IdealKind::Pprime, 0}};
}

bool is_member(const IdealSpec& s, std::span<const Part> parts) {
  const std::size_t r = parts.size();
  switch (s.kind) {
    case IdealKind::SA: return sa_member(parts);
    case IdealKind::SA_maxlen: return r <= s.param && sa_member(parts);
    case IdealKind::S:
      for (std::size_t i = 1; i <= r; ++i)
        if ((parts[i - 1] - (i < r ? parts[i] : 0)) % i != 0) return false;
      return true;
    case IdealKind::D: return distinct(parts);
    case IdealKind::R:
      for (std::size_t i = 1; i < r; ++i)
        if (parts[i - 1] - parts[i] < 2) return false;
      return true;
    case IdealKind::Rprime: return r == 0 || parts.back() >= r;
    case IdealKind::Adiff:
      for (std::size_t i = 1; i < r; ++i)
        if (parts[r - i - 1] - parts[r - i] < i) return false;
      return true;
    case IdealKind::N_maxlen: return r <= s.param;
    case IdealKind::P_parity: return all_congruent(parts, 2);
    case IdealKind::P_mod: return all_congruent(parts, s.param);
    case IdealKind::Pprime: return all_congruent(parts, 2) && distinct(parts);
  }
  return false;
}

ClosureResult check_ideal_closure(const IdealSpec& s, const AnalysisBound& b) {
  ClosureResult out;
  std::vector<Part> buf;
  for_each_partition_within(b.max_part, b.max_length, [&](std::span<const Part> p) {
    if (!is_member(s, p)) return true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0 && p[i] == p[i - 1]) continue;
      buf.assign(p.begin(), p.end());
      buf.erase(buf.begin() + static_cast<std::ptrdiff_t>(i));
      if (!is_member(s, buf)) {
        out.closed = false;
        out.member = to_partition(p);
        out.removed = Partition(buf);
        return false;
      }
    }
    return true;
  });
  return out;
}

std::optional<Partition> order_refute(const IdealSpec& s, std::size_t k, const AnalysisBound& b) {
  std::optional<Partition> out;
  for_each_partition_within(b.max_part, b.max_length, [&](std::span<const Part> p) {
    if (!is_order_witness(s, p, k)) return true;
    out = to_partition(p);
    return false;
  });
  return out;
}

std::optional<Partition> weak_order_refute(const IdealSpec& s, std::size_t k, const AnalysisBound& b) {
  std::optional<Partition> out;
  for_each_partition_within(b.max_part, b.max_length, [&](std::span<const Part> p) {
    if (!is_weak_order_witness(s, p, k)) return true;
    out = to_partition(p);
    return false;
  });
  return out;
}

OrderEstimate order_estimate(const IdealSpec& s, const AnalysisBound& b) {
  return estimate(b.max_part, [&](std::size_t k) { return order_refute(s, k, b); });
}

OrderEstimate weak_order_estimate(const IdealSpec& s, const AnalysisBound& b) {
  const std::size_t cap = std::min<std::size_t>(b.max_part, b.max_length);
  return estimate(cap, [&](std::size_t k) { return weak_order_refute(s, k, b); });
}

ModulusVerdict check_modulus(const IdealSpec& s, Part m, const AnalysisBound& b) {
  ModulusVerdict out;
  std::vector<Part> buf;
  for_each_partition_within(b.max_part, b.max_length, [&](std::span<const Part> p) {
    if (!is_member(s, p)) return true;
    buf.assign(p.begin(), p.end());
    for (auto& v : buf) v = checked_add(v, m);
    if (!is_member(s, buf)) {
      out = {false, ModulusVerdict::Failure::ShiftLeavesIdeal, to_partition(p)};
      return false;
    }
    return true;
  });
  if (!out.holds) return out;
  for_each_partition_within(b.max_part, b.max_length, [&](std::span<const Part> p) {
    if (!p.empty() && p.back() <= m) return true;
    if (!is_member(s, p)) return true;
    buf.assign(p.begin(), p.end());
    for (auto& v : buf) v -= m;
    if (!is_member(s, buf)) {
      out = {false, ModulusVerdict::Failure::NotAShift, to_partition(p)};
      return false;
    }
    return true;
  });
  return out;
}

LSet compute_L(const IdealSpec& s, Part m, const AnalysisBound& b) {
  LSet out;
  for_each_partition_within(m, b.max_length, [&](std::span<const Part> p) {
    if (!is_member(s, p)) return;
    if (p.size() == b.max_length) out.infinite_within_bound = true;
    out.members.push_back(to_partition(p));
  });
  return out;
}

std::vector<Partition> andrews_decompose(const Partition& p, Part m) {
  if (m == 0) throw DomainError("andrews_decompose needs m >= 1");
  if (p.empty()) return {};
  const std::size_t pieces = static_cast<std::size_t>((p.largest() + m - 1) / m);
  std::vector<std::vector<Part>> buckets(pieces);
  for (Part v : p.parts()) {
    const std::size_t i = static_cast<std::size_t>((v - 1) / m);
    buckets[i].push_back(v - i * m);
  }
  std::vector<Partition> out;
  out.reserve(pieces);
  for (auto& bucket : buckets) out.emplace_back(std::move(bucket));
  return out;
}

Partition andrews_compose(std::span<const Partition> pieces, Part m) {
  Partition out;
  for (std::size_t i = 0; i < pieces.size(); ++i) out = oplus_merge(out, shift(pieces[i], checked_mul(i, m)));
  return out;
}

bool canonical_less(const Partition& a, const Partition& b) {
  const Part sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a > b;
}

SpanAnalysis analyse_span(const IdealSpec& s, Part m, const Partition& pi, std::size_t span,
                          const AnalysisBound& b) {
  SpanAnalysis out;
  out.span = span;
  const Part lift = checked_mul(span, m);
  const auto members = members_within(s, b);

  std::vector<Partition> required;
  for (const auto& lambda : members) {
    if (tail(lambda, m) != pi) continue;
    auto tilde = lower_head(lambda, m, lift);
    if (!tilde || !is_member(s, *tilde)) {
      if (!out.undecomposable) out.undecomposable = lambda;
      continue;
    }
    auto t = tail(*tilde, m);
    if (std::find(required.begin(), required.end(), t) == required.end()) required.push_back(std::move(t));
  }

  for (const auto& tilde : members) {
    auto t = tail(tilde, m);
    if (std::find(required.begin(), required.end(), t) == required.end()) continue;
    Partition lambda = oplus_merge(pi, shift(tilde, lift));
    if (!is_member(s, lambda)) out.conflicts.push_back({std::move(t), tilde, std::move(lambda)});
  }
  std::sort(out.conflicts.begin(), out.conflicts.end(),
            [](const LinkConflict& x, const LinkConflict& y) { return canonical_less(x.lambda, y.lambda); });

  std::sort(required.begin(), required.end(), canonical_less);
  out.required = std::move(required);
  out.valid = !out.undecomposable && out.conflicts.empty();
  return out;
}

LinkReport infer_linking(const IdealSpec& s, Part m, const AnalysisBound& b, std::size_t span_cap) {
  LinkReport report;
  report.ideal = s;
  report.modulus = m;

  const auto modulus = check_modulus(s, m, b);
  if (!modulus.holds) {
    report.verdict = LinkReport::Verdict::Refuted;
    report.witness = modulus.witness;
    return report;
  }
  report.L = compute_L(s, m, b);
  if (report.L.infinite_within_bound) {
    report.verdict = LinkReport::Verdict::LInfiniteWithinBound;
    return report;
  }

  for (const auto& pi : report.L.members) {
    LinkEntry entry;
    entry.tail = pi;
    std::optional<Partition> first_failure;
    for (std::size_t l = 1; l <= span_cap; ++l) {
      auto a = analyse_span(s, m, pi, l, b);
      if (a.valid) {
        entry.valid_spans.push_back(l);
        entry.span = l;
        entry.linking_set = std::move(a.required);
      } else if (!first_failure) {
        if (!a.conflicts.empty()) first_failure = a.conflicts.front().lambda;
        else first_failure = a.undecomposable;
      }
    }
    if (!entry.span) {
      entry.witness = first_failure;
      if (report.verdict != LinkReport::Verdict::Refuted) {
        report.verdict = LinkReport::Verdict::Refuted;
        report.witness = first_failure;
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string to_string(LinkReport::Verdict v) {
  switch (v) {
    case LinkReport::Verdict::LinkedWithinBound: return "linked-within-bound";
    case LinkReport::Verdict::Refuted: return "refuted";
    case LinkReport::Verdict::LInfiniteWithinBound: return "L-infinite-within-bound";
  }
  return "?";
}

BigInt count_parity_ideal(std::size_t n) {
  std::vector<Part> odd, even;
  for (Part v = 1; v <= n; ++v) (v % 2 ? odd : even).push_back(v);
  // The −1 only removes the empty partition counted by both products.
  return product_series(odd, n)[n] + product_series(even, n)[n] - (n == 0 ? 1 : 0);
}

std::optional<Partition> exit_S_by_removal(const Partition& p) {
  for (std::size_t i = 1; i <= p.length(); ++i) {
    for (std::size_t k = 2; k <= i; ++k) {
      if (p.part(i) % k == 0) continue;
      // Keep λ_{i−k+1}, …, λ_i so that λ_i lands at index k.
      std::vector<Part> kept(p.parts().begin() + static_cast<std::ptrdiff_t>(i - k),
                             p.parts().begin() + static_cast<std::ptrdiff_t>(i));
      return Partition(std::move(kept));
    }
  }
  return std::nullopt;
}

std::uint64_t lcm_upto(std::uint64_t r) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= r; ++i) out = checked_mul(out / std::gcd(out, i), i);
  return out;
}

LinkingCounterexample sa_linking_counterexample(std::uint64_t r) {
  if (r < 2) throw DomainError("the SA linking counterexample needs r >= 2");
  const std::uint64_t m = lcm_upto(r);
  LinkingCounterexample out;
  out.r = r;
  out.modulus = m;
  out.member = Partition{checked_add(m, 2), 2};
  out.non_member = oplus_merge(Partition{2}, shift(out.member, m));
  return out;
}

}  // namespace seqcong
