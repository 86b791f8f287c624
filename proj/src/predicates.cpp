#include "seqcong/predicates.hpp"

#include <charconv>

#include "seqcong/bijections.hpp"
#include "seqcong/errors.hpp"
#include "seqcong/generalized.hpp"
#include "seqcong/ideal.hpp"

namespace seqcong {

namespace {

unsigned parse_exponent(std::string_view tag, std::string_view arg) {
  unsigned k = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
  if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size() || k == 0)
    throw DomainError("predicate '" + std::string(tag) + "' needs a positive integer parameter");
  return k;
}

bool all_powers(std::span<const Part> parts, unsigned k) {
  for (Part v : parts) {
    Part root = 1;
    Part value = 1;
    while (value < v) {
      ++root;
      value = 1;
      for (unsigned e = 0; e < k && value <= v; ++e)
        if (__builtin_mul_overflow(value, root, &value)) return false;
    }
    if (value != v) return false;
  }
  return true;
}

Partition owned(std::span<const Part> parts) { return Partition(std::vector<Part>(parts.begin(), parts.end())); }

}  // namespace

PartsPredicate parse_predicate(std::string_view tag) {
  const auto colon = tag.find(':');
  const auto name = tag.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : tag.substr(colon + 1);

  if (name == "all" && arg.empty()) return [](std::span<const Part>) { return true; };
  if (name == "seqcong" && arg.empty())
    return [](std::span<const Part> p) { return is_seq_congruent(owned(p)); };
  if (name == "squares" && arg.empty()) return [](std::span<const Part> p) { return all_powers(p, 2); };
  if (name == "selfconj" && arg.empty())
    return [](std::span<const Part> p) { return is_self_conjugate(owned(p)); };
  if (name == "powers") {
    const unsigned k = parse_exponent(tag, arg);
    return [k](std::span<const Part> p) { return all_powers(p, k); };
  }
  if (name == "Sk") {
    const unsigned k = parse_exponent(tag, arg);
    return [k](std::span<const Part> p) { return is_in_Sk(owned(p), k); };
  }
  const IdealSpec s = IdealSpec::parse(tag);
  return [s](std::span<const Part> p) { return is_member(s, p); };
}

std::vector<std::string> predicate_tags() {
  std::vector<std::string> out{"all", "seqcong", "squares", "powers:k", "Sk:k", "selfconj"};
  for (const auto& s : builtin_ideals()) out.push_back(s.to_string());
  return out;
}

}  // namespace seqcong
