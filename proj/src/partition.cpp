#include "seqcong/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "seqcong/checked.hpp"
#include "seqcong/errors.hpp"

namespace seqcong {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw DomainError("partition parts must be positive", i + 1);
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw DomainError("partition parts must be weakly decreasing", i + 1);
  }
}

Partition Partition::from_unsorted(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Part Partition::size() const {
  Part total = 0;
  for (Part v : parts_) total = checked_add(total, v);
  return total;
}

FrequencyMap::FrequencyMap(const Partition& p) {
  for (Part v : p.parts()) ++entries_[v];
}

void FrequencyMap::add(Part part, std::uint64_t count) {
  if (part == 0) throw DomainError("frequency map parts must be positive");
  if (count == 0) return;
  auto& slot = entries_[part];
  slot = checked_add(slot, count);
}

std::uint64_t FrequencyMap::frequency(Part part) const {
  auto it = entries_.find(part);
  return it == entries_.end() ? 0 : it->second;
}

Partition FrequencyMap::to_partition() const {
  std::vector<Part> parts;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    parts.insert(parts.end(), it->second, it->first);
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
  // Part i appears λ_i − λ_{i+1} times; emit from the largest part value down.
  std::vector<Part> out;
  out.reserve(p.largest());
  for (std::size_t i = p.length(); i >= 1; --i) out.insert(out.end(), p.part(i) - p.part(i + 1), i);
  return Partition(std::move(out));
}

bool is_self_conjugate(const Partition& p) {
  const std::size_t r = p.length();
  if (r == 0) return true;
  if (p.largest() != r) return false;
  for (std::size_t j = r; j >= 1; --j) {
    for (Part i = p.part(j + 1) + 1; i <= p.part(j); ++i)
      if (p.part(i) != j) return false;
  }
  return true;
}

Partition star_add(const Partition& a, const Partition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  std::vector<Part> out(len);
  for (std::size_t i = 1; i <= len; ++i) out[i - 1] = checked_add(a.part(i), b.part(i));
  return Partition(std::move(out));
}

Partition scalar_mul(std::uint64_t c, const Partition& p) {
  if (c == 0) return {};
  std::vector<Part> out;
  out.reserve(p.length());
  for (Part v : p.parts()) out.push_back(checked_mul(c, v));
  return Partition(std::move(out));
}

Partition oplus_merge(const Partition& a, const Partition& b) {
  std::vector<Part> out;
  out.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(out), std::greater<>());
  return Partition(std::move(out));
}

Partition shift(const Partition& p, Part m) {
  std::vector<Part> out;
  out.reserve(p.length());
  for (Part v : p.parts()) out.push_back(checked_add(v, m));
  return Partition(std::move(out));
}

Partition tail(const Partition& p, Part m) {
  std::vector<Part> out;
  for (Part v : p.parts())
    if (v <= m) out.push_back(v);
  return Partition(std::move(out));
}

Partition head_above(const Partition& p, Part m) {
  std::vector<Part> out;
  for (Part v : p.parts())
    if (v > m) out.push_back(v);
  return Partition(std::move(out));
}

std::size_t durfee_size(const Partition& p) {
  std::size_t d = 0;
  while (d < p.length() && p.part(d + 1) >= d + 1) ++d;
  return d;
}

Partition remove_parts(const Partition& p, const FrequencyMap& drop) {
  FrequencyMap have(p);
  for (const auto& [part, count] : drop.entries()) {
    if (have.frequency(part) < count) {
      std::ostringstream msg;
      msg << "cannot remove " << count << " copies of part " << part << " from " << to_string(p);
      throw ContainmentError(msg.str());
    }
  }
  std::vector<Part> out;
  out.reserve(p.length());
  std::map<Part, std::uint64_t> remaining = drop.entries();
  for (Part v : p.parts()) {
    auto it = remaining.find(v);
    if (it != remaining.end() && it->second > 0) {
      --it->second;
      continue;
    }
    out.push_back(v);
  }
  return Partition(std::move(out));
}

std::string render_diagram(const Partition& p) {
  if (p.empty()) return "(empty)";
  std::string out;
  for (std::size_t row = 1; row <= p.length(); ++row) {
    if (row > 1) out += '\n';
    for (Part c = 0; c < p.part(row); ++c) {
      if (c > 0) out += ' ';
      out += "■";
    }
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.length(); ++i) os << (i ? ", " : "") << p.parts()[i];
  os << ')';
  return os.str();
}

std::string to_string(const FrequencyMap& f) {
  std::ostringstream os;
  os << '<';
  bool first = true;
  for (const auto& [part, count] : f.entries()) {
    os << (first ? "" : ", ") << part << '^' << count;
    first = false;
  }
  os << '>';
  return os.str();
}

}  // namespace seqcong
