#include "seqcong/generalized.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "seqcong/checked.hpp"
#include "seqcong/errors.hpp"

namespace seqcong {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw SpecError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

// base^k, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> try_pow(std::uint64_t base, unsigned k) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k; ++i)
    if (__builtin_mul_overflow(out, base, &out)) return std::nullopt;
  return out;
}

[[noreturn]] void beyond_horizon(std::size_t i, std::size_t horizon) {
  std::ostringstream msg;
  msg << "sequence term " << i << " is beyond the horizon of " << horizon << " terms";
  throw HorizonError(msg.str());
}

void require_powers(const Sequence& s, unsigned k, std::string_view role, std::string_view op) {
  if (!(s == Sequence::powers(k))) {
    std::ostringstream msg;
    msg << op << " expects " << role << " = " << Sequence::powers(k).to_string() << ", got "
        << s.to_string();
    throw SpecError(msg.str());
  }
}

}  // namespace

Sequence Sequence::naturals() { return Sequence(Family::Naturals, 1, {}); }

Sequence Sequence::powers(unsigned k) {
  if (k == 1) return naturals();
  return Sequence(Family::Powers, k, {});
}

Sequence Sequence::arithmetic(std::uint64_t a) {
  if (a == 0) throw SpecError("arith:a needs a positive step");
  if (a == 1) return naturals();
  return Sequence(Family::Arithmetic, a, {});
}

Sequence Sequence::explicit_terms(std::vector<std::uint64_t> terms) {
  if (terms.empty()) throw SpecError("an explicit sequence needs at least one term");
  for (auto t : terms)
    if (t == 0) throw SpecError("sequence terms must be positive");
  return Sequence(Family::Explicit, 0, std::move(terms));
}

Sequence Sequence::parse(std::string_view text) {
  if (text == "nat") return naturals();
  if (text.starts_with("pow:")) return powers(static_cast<unsigned>(parse_u64(text.substr(4), "power")));
  if (text.starts_with("arith:")) return arithmetic(parse_u64(text.substr(6), "arithmetic step"));
  std::vector<std::uint64_t> terms;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
    terms.push_back(parse_u64(text.substr(start, stop - start), "sequence term"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return explicit_terms(std::move(terms));
}

std::optional<std::uint64_t> Sequence::term(std::size_t i, std::size_t horizon) const {
  if (i == 0) throw SpecError("sequence terms are 1-based");
  if (i > horizon) beyond_horizon(i, horizon);
  switch (family_) {
    case Family::Naturals: return i;
    case Family::Powers: return checked_pow(i, static_cast<unsigned>(param_));
    case Family::Arithmetic: return checked_mul(param_, i);
    case Family::Explicit: break;
  }
  if (i > terms_.size()) return std::nullopt;
  return terms_[i - 1];
}

std::optional<std::size_t> Sequence::index_of(std::uint64_t value, std::size_t horizon) const {
  if (value == 0) return std::nullopt;
  std::optional<std::size_t> idx;
  switch (family_) {
    case Family::Naturals: idx = value; break;
    case Family::Arithmetic:
      if (value % param_ == 0) idx = value / param_;
      break;
    case Family::Powers: {
      if (param_ == 0) {
        if (value == 1) idx = 1;
        break;
      }
      for (std::size_t i = 1;; ++i) {
        auto t = try_pow(i, static_cast<unsigned>(param_));
        if (!t || *t > value) break;
        if (i > horizon) beyond_horizon(i, horizon);
        if (*t == value) {
          idx = i;
          break;
        }
      }
      break;
    }
    case Family::Explicit: {
      const std::size_t limit = std::min(terms_.size(), horizon);
      for (std::size_t i = 0; i < limit; ++i)
        if (terms_[i] == value) return i + 1;
      if (terms_.size() > horizon) beyond_horizon(horizon + 1, horizon);
      return std::nullopt;
    }
  }
  if (idx && *idx > horizon) beyond_horizon(*idx, horizon);
  return idx;
}

bool Sequence::strictly_increasing() const {
  switch (family_) {
    case Family::Naturals:
    case Family::Arithmetic: return true;
    case Family::Powers: return param_ >= 1;
    case Family::Explicit: break;
  }
  return std::adjacent_find(terms_.begin(), terms_.end(), std::greater_equal<>()) == terms_.end();
}

bool Sequence::distinct_terms() const {
  if (family_ == Family::Explicit) return std::set(terms_.begin(), terms_.end()).size() == terms_.size();
  return !(family_ == Family::Powers && param_ == 0);
}

std::string Sequence::to_string() const {
  switch (family_) {
    case Family::Naturals: return "nat";
    case Family::Powers: return "pow:" + std::to_string(param_);
    case Family::Arithmetic: return "arith:" + std::to_string(param_);
    case Family::Explicit: break;
  }
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) out += (i ? "," : "") + std::to_string(terms_[i]);
  return out;
}

GenSpec::GenSpec(Sequence a, Sequence b, std::size_t horizon)
    : a_(std::move(a)), b_(std::move(b)), horizon_(horizon), distinct_a_(a_.distinct_terms()) {
  if (horizon_ == 0) throw SpecError("the sequence horizon must be positive");
  if (!b_.strictly_increasing()) throw SpecError("B must be strictly increasing, got " + b_.to_string());
}

GenSpec GenSpec::classical(std::size_t horizon) {
  return GenSpec(Sequence::naturals(), Sequence::naturals(), horizon);
}

std::uint64_t GenSpec::a_term(std::size_t i) const {
  if (auto t = a_.term(i, horizon_)) return *t;
  throw SpecError("A = " + a_.to_string() + " has no term " + std::to_string(i));
}

std::uint64_t GenSpec::b_term(std::size_t i) const {
  if (auto t = b_.term(i, horizon_)) return *t;
  throw SpecError("B = " + b_.to_string() + " has no term " + std::to_string(i));
}

std::string GenSpec::to_string() const { return "A=" + a_.to_string() + " B=" + b_.to_string(); }

bool is_in_SBA(const Partition& p, const GenSpec& spec) {
  // Column heights v occur λ_v − λ_{v+1} times.
  for (std::size_t v = 1; v <= p.length(); ++v) {
    const Part columns = p.part(v) - p.part(v + 1);
    if (columns == 0) continue;
    const auto idx = spec.b().index_of(v, spec.horizon());
    if (!idx) return false;
    if (columns % spec.a_term(*idx) != 0) return false;
  }
  return true;
}

Partition n_decode(const NNotation& n) {
  const auto& c = n.coeffs;
  if (!c.empty() && c.back() == 0) throw CanonicalFormError("n-notation must not end in a zero coefficient");
  const std::size_t r = c.size();
  if (r == 0) return {};
  std::vector<std::uint64_t> suffix(r + 1, 0);
  for (std::size_t i = r; i >= 1; --i)
    suffix[i - 1] = checked_add(suffix[i], checked_mul(n.spec.a_term(i), c[i - 1]));
  std::vector<Part> parts;
  std::uint64_t prev_b = 0;
  for (std::size_t i = 1; i <= r; ++i) {
    const std::uint64_t b = n.spec.b_term(i);
    parts.insert(parts.end(), b - prev_b, suffix[i - 1]);
    prev_b = b;
  }
  return Partition(std::move(parts));
}

NNotation n_encode(const Partition& p, const GenSpec& spec) {
  NNotation out{spec, {}};
  if (p.empty()) return out;
  const auto r = spec.b().index_of(p.length(), spec.horizon());
  if (!r) {
    throw DomainError(to_string(p) + " is not in S_B(A) for " + spec.to_string() + ": length " +
                          std::to_string(p.length()) + " is not a term of B",
                      p.length());
  }
  std::uint64_t prev_b = 0;
  for (std::size_t i = 1; i <= *r; ++i) {
    const std::uint64_t b = spec.b_term(i);
    if (p.part(prev_b + 1) != p.part(b)) {
      throw DomainError(to_string(p) + " is not in S_B(A) for " + spec.to_string() + ": rows " +
                            std::to_string(prev_b + 1) + ".." + std::to_string(b) + " are not equal",
                        b);
    }
    const Part drop = p.part(b) - p.part(b + 1);
    const std::uint64_t a = spec.a_term(i);
    if (drop % a != 0) {
      throw DomainError(to_string(p) + " is not in S_B(A) for " + spec.to_string() + ": λ_" +
                            std::to_string(b) + " − λ_" + std::to_string(b + 1) +
                            " is not divisible by a_" + std::to_string(i) + " = " + std::to_string(a),
                        b);
    }
    out.coeffs.push_back(drop / a);
    prev_b = b;
  }
  return out;
}

Partition sigma_AB(const NNotation& n) {
  if (!n.spec.distinct_a()) throw SpecError("sigma_AB needs distinct terms in A = " + n.spec.a().to_string());
  if (!n.coeffs.empty() && n.coeffs.back() == 0)
    throw CanonicalFormError("n-notation must not end in a zero coefficient");
  FrequencyMap out;
  for (std::size_t i = 1; i <= n.coeffs.size(); ++i) out.add(n.spec.a_term(i), n.coeffs[i - 1]);
  return out.to_partition();
}

NNotation pi_AB(const Partition& p, const GenSpec& spec) {
  if (!spec.distinct_a()) throw SpecError("pi_AB needs distinct terms in A = " + spec.a().to_string());
  NNotation out{spec, {}};
  for (std::size_t v = 1; v <= p.length(); ++v) {
    const Part columns = p.part(v) - p.part(v + 1);
    if (columns == 0) continue;
    const auto idx = spec.a().index_of(v, spec.horizon());
    if (!idx) {
      throw DomainError(to_string(p) + " has columns of height " + std::to_string(v) +
                            ", which is not a term of A = " + spec.a().to_string(),
                        v);
    }
    if (out.coeffs.size() < *idx) out.coeffs.resize(*idx, 0);
    out.coeffs[*idx - 1] = columns;
  }
  return out;
}

Partition pi_prime_AB(const Partition& p, const GenSpec& spec) {
  NNotation n{spec, {}};
  for (std::size_t i = 1; i <= p.length(); ++i) n.coeffs.push_back(p.part(i) - p.part(i + 1));
  return n_decode(n);
}

Partition sigma_prime_AB(const Partition& p, const GenSpec& spec) {
  const NNotation n = n_encode(p, spec);
  FrequencyMap out;
  for (std::size_t i = 1; i <= n.coeffs.size(); ++i) out.add(i, n.coeffs[i - 1]);
  return out.to_partition();
}

bool is_in_Sk(const Partition& p, unsigned k) {
  for (std::size_t i = 1; i <= p.length(); ++i) {
    const Part diff = p.part(i) - p.part(i + 1);
    const auto mod = try_pow(i, k);
    if (mod ? diff % *mod != 0 : diff != 0) return false;
  }
  return true;
}

bool is_in_Sjk(const Partition& p, std::uint64_t j, unsigned k) {
  for (std::size_t i = 1; i <= p.length(); ++i) {
    const Part diff = p.part(i) - p.part(i + 1);
    const auto ik = try_pow(i, k);
    std::uint64_t want;
    if (!ik || __builtin_mul_overflow(j, *ik, &want) || diff != want) return false;
  }
  return true;
}

Partition sigma_k(const NNotation& n, unsigned k) {
  require_powers(n.spec.a(), k, "A", "sigma_k");
  if (!n.coeffs.empty() && n.coeffs.back() == 0)
    throw CanonicalFormError("n-notation must not end in a zero coefficient");
  FrequencyMap out;
  for (std::size_t i = 1; i <= n.coeffs.size(); ++i) out.add(checked_pow(i, k), n.coeffs[i - 1]);
  return out.to_partition();
}

Partition psi_k(const NNotation& n, unsigned k) {
  require_powers(n.spec.a(), k, "A", "psi_k");
  require_powers(n.spec.b(), 1, "B", "psi_k");
  if (!n.coeffs.empty() && n.coeffs.back() == 0)
    throw CanonicalFormError("n-notation must not end in a zero coefficient");
  FrequencyMap out;
  for (std::size_t i = 1; i <= n.coeffs.size(); ++i) out.add(checked_pow(i, k + 1), n.coeffs[i - 1]);
  return out.to_partition();
}

NNotation eta(const NNotation& n, unsigned k, unsigned p) {
  if (k < 1 || p < 1 || p > k) throw DomainError("eta needs 1 <= p <= k");
  require_powers(n.spec.a(), k, "A", "eta");
  return NNotation{GenSpec(Sequence::powers(k - p), Sequence::powers(p), n.spec.horizon()), n.coeffs};
}

NNotation tau(const NNotation& n, unsigned k, unsigned p, unsigned q) {
  if (k < 1 || p < 1 || q < 1 || p > k || q > k) throw DomainError("tau needs 1 <= p, q <= k");
  require_powers(n.spec.a(), k - p, "A", "tau");
  require_powers(n.spec.b(), p, "B", "tau");
  return NNotation{GenSpec(Sequence::powers(k - q), Sequence::powers(q), n.spec.horizon()), n.coeffs};
}

std::string to_string(const NNotation& n) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n.coeffs.size(); ++i) os << (i ? ", " : "") << n.coeffs[i];
  os << "]_{" << n.spec.a().to_string() << ", " << n.spec.b().to_string() << '}';
  return os.str();
}

}  // namespace seqcong
