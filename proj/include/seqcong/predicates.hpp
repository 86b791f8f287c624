#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seqcong/enumeration.hpp"

namespace seqcong {

/// Predicate tags shared by `enumerate`, `count` and `check`:
///   all, seqcong, squares, powers:k, Sk:k, selfconj, and every ideal kind
///   accepted by IdealSpec::parse (SA, D, R, N_maxlen:3, ...).
/// Throws DomainError on an unknown tag.
PartsPredicate parse_predicate(std::string_view tag);

/// Tags listed in --help.
std::vector<std::string> predicate_tags();

}  // namespace seqcong
