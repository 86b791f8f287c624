#include "seqcong/bijections.hpp"

#include <sstream>

#include "seqcong/checked.hpp"
#include "seqcong/errors.hpp"

namespace seqcong {

namespace {

// Integer square root, exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t v) {
  std::uint64_t lo = 0, hi = std::uint64_t{1} << 32;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid <= v / mid) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace

std::optional<std::size_t> first_incongruent_index(const Partition& p) {
  for (std::size_t i = 1; i <= p.length(); ++i)
    if ((p.part(i) - p.part(i + 1)) % i != 0) return i;
  return std::nullopt;
}

bool is_seq_congruent(const Partition& p) { return !first_incongruent_index(p).has_value(); }

CNotation to_c_notation(const Partition& p) {
  if (auto bad = first_incongruent_index(p)) {
    std::ostringstream msg;
    msg << to_string(p) << " is not sequentially congruent: congruence fails at index " << *bad;
    throw DomainError(msg.str(), bad);
  }
  CNotation c;
  c.coeffs.reserve(p.length());
  for (std::size_t i = 1; i <= p.length(); ++i) c.coeffs.push_back((p.part(i) - p.part(i + 1)) / i);
  return c;
}

Partition from_c_notation(const CNotation& c) {
  if (!c.coeffs.empty() && c.coeffs.back() == 0)
    throw CanonicalFormError("c-notation must not end in a zero coefficient");
  const std::size_t r = c.coeffs.size();
  std::vector<Part> parts(r);
  Part running = 0;
  for (std::size_t i = r; i >= 1; --i) {
    running = checked_add(running, checked_mul(i, c.coeffs[i - 1]));
    parts[i - 1] = running;
  }
  return Partition(std::move(parts));
}

Partition pi_map(const Partition& p) {
  CNotation c;
  c.coeffs.reserve(p.length());
  for (std::size_t i = 1; i <= p.length(); ++i) c.coeffs.push_back(p.part(i) - p.part(i + 1));
  return from_c_notation(c);
}

Partition sigma_map(const Partition& p) {
  const CNotation c = to_c_notation(p);
  std::vector<Part> parts;
  for (std::size_t i = c.coeffs.size(); i >= 1; --i) parts.insert(parts.end(), c.coeffs[i - 1], i);
  return Partition(std::move(parts));
}

Partition pi_sigma_closed_form(const Partition& p) {
  if (auto bad = first_incongruent_index(p)) {
    std::ostringstream msg;
    msg << to_string(p) << " is not sequentially congruent: congruence fails at index " << *bad;
    throw DomainError(msg.str(), bad);
  }
  const std::size_t r = p.length();
  // inner[j] = Σ_{i=j}^{r} (φ_i − φ_{i+1})/i, filled from the right.
  std::vector<Part> inner(r + 2, 0);
  for (std::size_t j = r; j >= 1; --j) inner[j] = checked_add(inner[j + 1], (p.part(j) - p.part(j + 1)) / j);

  FrequencyMap out;
  Part value = 0;
  for (std::size_t t = 1; t <= r; ++t) {
    value = checked_add(value, inner[t]);
    out.add(value, (p.part(t) - p.part(t + 1)) / t);
  }
  return out.to_partition();
}

Partition psi_map(const Partition& p) {
  const CNotation c = to_c_notation(p);
  FrequencyMap out;
  for (std::size_t i = 1; i <= c.coeffs.size(); ++i) out.add(checked_mul(i, i), c.coeffs[i - 1]);
  return out.to_partition();
}

Partition psi_inverse(const Partition& p) {
  CNotation c;
  for (std::size_t idx = 1; idx <= p.length(); ++idx) {
    const Part v = p.part(idx);
    const std::uint64_t root = isqrt(v);
    if (root * root != v) {
      std::ostringstream msg;
      msg << "part " << v << " of " << to_string(p) << " is not a perfect square";
      throw DomainError(msg.str(), idx);
    }
    if (c.coeffs.size() < root) c.coeffs.resize(root, 0);
    ++c.coeffs[root - 1];
  }
  return from_c_notation(c);
}

std::vector<SquareBlock> square_blocks(const Partition& p) {
  const CNotation c = to_c_notation(p);
  std::vector<SquareBlock> blocks;
  std::uint64_t column = 1;
  for (std::size_t side = c.coeffs.size(); side >= 1; --side) {
    for (std::uint64_t k = 0; k < c.coeffs[side - 1]; ++k) {
      blocks.push_back({side, column});
      column += side;
    }
  }
  return blocks;
}

std::string render_square_decomposition(const Partition& p) {
  const auto blocks = square_blocks(p);
  if (blocks.empty()) return "(empty)";
  std::string out;
  for (std::size_t row = 1; row <= p.length(); ++row) {
    if (row > 1) out += '\n';
    bool first_cell = true;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      // Blocks are ordered by decreasing side, so the row ends at the first short block.
      if (blocks[b].side < row) break;
      const char* glyph = (b % 2 == 0) ? "■" : "□";
      for (std::uint64_t cell = 0; cell < blocks[b].side; ++cell) {
        if (!first_cell) out += ' ';
        out += glyph;
        first_cell = false;
      }
    }
  }
  return out;
}

std::string to_string(const CNotation& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) os << (i ? ", " : "") << c.coeffs[i];
  os << ']';
  return os.str();
}

}  // namespace seqcong
