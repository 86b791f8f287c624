#include <doctest.h>

#include "oracles.hpp"
#include "seqcong/bijections.hpp"
#include "seqcong/errors.hpp"
#include "seqcong/ideal.hpp"

using namespace seqcong;

namespace {

IdealSpec I(const char* text) { return IdealSpec::parse(text); }

const AnalysisBound kSmall{12, 8};

bool contains(const std::vector<Partition>& ps, const Partition& p) {
  return std::find(ps.begin(), ps.end(), p) != ps.end();
}

}  // namespace

TEST_CASE("ideal spec grammar") {
  CHECK(I("SA_maxlen:3") == IdealSpec{IdealKind::SA_maxlen, 3});
  CHECK(I("P_mod:4").to_string() == "P_mod:4");
  for (const auto& s : builtin_ideals()) CHECK(IdealSpec::parse(s.to_string()) == s);
  CHECK_THROWS_AS(I("SA_maxlen"), DomainError);
  CHECK_THROWS_AS(I("D:2"), DomainError);
  CHECK_THROWS_AS(I("N_maxlen:0"), DomainError);
  CHECK_THROWS_AS(I("P_mod:1"), DomainError);
  CHECK_THROWS_AS(I("Q"), DomainError);
}

TEST_CASE("membership") {
  CHECK(is_member(I("SA"), Partition{60, 60, 60, 60, 60}));
  CHECK_FALSE(is_member(I("SA"), Partition{64, 64, 64, 64, 64}));
  CHECK(is_member(I("R"), Partition{5, 3, 1}));
  CHECK_FALSE(is_member(I("R"), Partition{3, 2}));
  CHECK(is_member(I("Rprime"), Partition{3, 3, 3}));
  CHECK_FALSE(is_member(I("Rprime"), Partition{3, 3, 2}));
  CHECK(is_member(I("Adiff"), Partition{6, 3, 1}));
  CHECK_FALSE(is_member(I("Adiff"), Partition{4, 3, 1}));
  CHECK(is_member(I("Pprime"), Partition{7, 3, 1}));
  CHECK_FALSE(is_member(I("Pprime"), Partition{3, 3}));
  CHECK(is_member(I("P_mod:3"), Partition{7, 4, 1}));
  for (const auto& s : builtin_ideals()) CHECK(is_member(s, Partition{}));
}

TEST_CASE("SA divisibility test matches the congruence definition") {
  for_each_partition_within(24, 5, [](std::span<const Part> p) {
    const Partition q(std::vector<Part>(p.begin(), p.end()));
    REQUIRE(is_member(IdealSpec{IdealKind::SA, 0}, q) == oracle::sa_by_congruence(q));
  });
}

TEST_CASE("SA inside S inside Rprime") {
  for (const auto& p : oracle::partitions_upto(24)) {
    if (is_member(I("SA"), p)) CHECK(is_seq_congruent(p));
    if (is_seq_congruent(p)) CHECK(is_member(I("Rprime"), p));
    CHECK(is_member(I("S"), p) == oracle::seq_congruent(p));
  }
}

TEST_CASE("closure") {
  for (const auto& s : builtin_ideals()) {
    const auto r = check_ideal_closure(s, kSmall);
    CHECK_MESSAGE(r.closed == (s.kind != IdealKind::S), s.to_string());
  }
  const auto r = check_ideal_closure(I("S"), kSmall);
  REQUIRE(r.member);
  CHECK(is_seq_congruent(*r.member));
  CHECK_FALSE(is_seq_congruent(*r.removed));
  CHECK(r.removed->length() + 1 == r.member->length());
  CHECK(check_ideal_closure(I("SA"), AnalysisBound{60, 5}).closed);
}

TEST_CASE("removal from S outside SA") {
  std::size_t checked = 0;
  for (const auto& p : oracle::partitions_upto(24)) {
    if (!is_seq_congruent(p)) continue;
    const auto exit = exit_S_by_removal(p);
    if (is_member(I("SA"), p)) {
      CHECK_FALSE(exit);
      continue;
    }
    REQUIRE(exit);
    CHECK_FALSE(is_seq_congruent(*exit));
    // The result is a contiguous run of parts of p.
    const auto v = p.vec();
    const auto w = exit->vec();
    CHECK(std::search(v.begin(), v.end(), w.begin(), w.end()) != v.end());
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("order") {
  CHECK_FALSE(order_refute(I("R"), 2, kSmall));
  CHECK_FALSE(order_refute(I("D"), 1, kSmall));
  CHECK(order_refute(I("R"), 1, kSmall) == Partition{2, 1});
  const auto r = order_estimate(I("R"), kSmall);
  CHECK_FALSE(r.unbounded);
  CHECK(r.order == 2);
  CHECK(order_estimate(I("D"), kSmall).order == 1);
  CHECK(order_estimate(I("SA"), kSmall).unbounded);
}

TEST_CASE("SA order witnesses") {
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto w = order_refute(I("SA"), k, kSmall);
    REQUIRE(w);
    CHECK(*w == Partition{k + 1, 1});
  }
}

TEST_CASE("weak order") {
  const auto parity = weak_order_estimate(I("P_parity"), kSmall);
  CHECK_FALSE(parity.unbounded);
  CHECK(parity.order == 2);
  for (std::uint64_t n = 1; n <= 4; ++n) {
    const auto s = IdealSpec{IdealKind::N_maxlen, n};
    const auto e = weak_order_estimate(s, kSmall);
    CHECK_FALSE(e.unbounded);
    CHECK(e.order == n + 1);
  }
  const auto rprime = weak_order_estimate(I("Rprime"), AnalysisBound{16, 6});
  CHECK(rprime.unbounded);
  CHECK(rprime.witnesses.size() == 5);
}

TEST_CASE("modulus") {
  CHECK(check_modulus(I("D"), 1, kSmall).holds);
  CHECK(check_modulus(I("R"), 1, kSmall).holds);
  CHECK(check_modulus(I("R"), 2, kSmall).holds);
  CHECK(check_modulus(I("SA_maxlen:2"), 2, kSmall).holds);
  CHECK(check_modulus(I("SA_maxlen:3"), 6, AnalysisBound{18, 5}).holds);
  CHECK_FALSE(check_modulus(I("SA_maxlen:3"), 4, kSmall).holds);
  const auto sa4 = check_modulus(I("SA"), 4, AnalysisBound{60, 5});
  CHECK_FALSE(sa4.holds);
  CHECK(sa4.failure == ModulusVerdict::Failure::ShiftLeavesIdeal);
  CHECK(is_member(I("SA"), *sa4.witness));
  CHECK_FALSE(is_member(I("SA"), shift(*sa4.witness, 4)));
  CHECK(is_member(I("SA"), Partition{60, 60, 60, 60, 60}));
  CHECK_FALSE(is_member(I("SA"), shift(Partition{60, 60, 60, 60, 60}, 4)));
}

TEST_CASE("L sets") {
  CHECK(compute_L(I("D"), 1, kSmall).members == std::vector<Partition>{Partition{}, Partition{1}});
  CHECK(compute_L(I("R"), 2, kSmall).members == std::vector<Partition>{Partition{}, Partition{1}, Partition{2}});
  CHECK_FALSE(compute_L(I("R"), 2, kSmall).infinite_within_bound);
  CHECK(compute_L(I("P_parity"), 1, kSmall).infinite_within_bound);
}

TEST_CASE("Andrews decomposition") {
  const auto pieces = andrews_decompose(Partition{5, 2}, 2);
  CHECK(pieces == std::vector<Partition>{Partition{2}, Partition{}, Partition{1}});
  CHECK(andrews_compose(pieces, 2) == Partition{5, 2});
  CHECK(andrews_decompose(Partition{}, 3).empty());
  CHECK(andrews_decompose(Partition{4, 1}, 9) == std::vector<Partition>{Partition{4, 1}});
  CHECK_THROWS_AS(andrews_decompose(Partition{1}, 0), DomainError);
  for (Part m = 1; m <= 6; ++m)
    for_each_partition_within(10, 4, [m](std::span<const Part> p) {
      const Partition q(std::vector<Part>(p.begin(), p.end()));
      const auto d = andrews_decompose(q, m);
      REQUIRE(andrews_compose(d, m) == q);
      for (const auto& piece : d) CHECK(piece.largest() <= m);
    });
}

TEST_CASE("pieces of R members lie in L at m = 2") {
  const auto L = compute_L(I("R"), 2, kSmall).members;
  for_each_partition_within(14, 6, [&](std::span<const Part> p) {
    if (!is_member(I("R"), p)) return;
    for (const auto& piece : andrews_decompose(Partition(std::vector<Part>(p.begin(), p.end())), 2))
      CHECK(contains(L, piece));
  });
}

TEST_CASE("linking for distinct parts") {
  const auto r = infer_linking(I("D"), 1, kSmall);
  CHECK(r.verdict == LinkReport::Verdict::LinkedWithinBound);
  REQUIRE(r.entries.size() == 2);
  for (const auto& e : r.entries) {
    CHECK(e.span == 1);
    CHECK(e.linking_set == r.L.members);
  }
}

TEST_CASE("linking for Rogers-Ramanujan partitions") {
  const auto m1 = infer_linking(I("R"), 1, kSmall);
  CHECK(m1.verdict == LinkReport::Verdict::LinkedWithinBound);
  REQUIRE(m1.entries.size() == 2);
  CHECK(m1.entries[0].span == 1);
  CHECK(m1.entries[1].tail == Partition{1});
  CHECK(m1.entries[1].span == 2);
  CHECK(m1.entries[1].linking_set == m1.L.members);

  const auto m2 = infer_linking(I("R"), 2, kSmall);
  CHECK(m2.verdict == LinkReport::Verdict::LinkedWithinBound);
  REQUIRE(m2.entries.size() == 3);
  for (const auto& e : m2.entries) {
    CHECK(e.span == 1);
    CHECK(contains(e.linking_set, Partition{}));
    if (e.tail == Partition{2}) CHECK(e.linking_set == std::vector<Partition>{Partition{}, Partition{2}});
    else CHECK(e.linking_set == m2.L.members);
  }
}

TEST_CASE("linking fails for bounded-length SA") {
  const auto r = infer_linking(I("SA_maxlen:2"), 2, kSmall);
  CHECK(r.verdict == LinkReport::Verdict::Refuted);
  REQUIRE(r.witness);
  CHECK_FALSE(is_member(I("SA_maxlen:2"), *r.witness));

  const auto span = analyse_span(I("SA_maxlen:2"), 2, Partition{2}, 1, kSmall);
  CHECK_FALSE(span.valid);
  CHECK(contains(span.required, Partition{2}));
  const bool found = std::any_of(span.conflicts.begin(), span.conflicts.end(), [](const LinkConflict& c) {
    return c.lambda == Partition{6, 4, 2} && c.tilde == Partition{4, 2} && c.tail == Partition{2};
  });
  CHECK(found);
}

TEST_CASE("counterexample constructor") {
  for (std::uint64_t r = 2; r <= 6; ++r) {
    const auto c = sa_linking_counterexample(r);
    CHECK(c.modulus == oracle::lcm_upto(r));
    CHECK(is_member(IdealSpec{IdealKind::SA_maxlen, r}, c.member));
    CHECK_FALSE(is_seq_congruent(c.non_member));
    CHECK(c.non_member == oplus_merge(Partition{2}, shift(c.member, c.modulus)));
  }
  CHECK(sa_linking_counterexample(2).non_member == Partition{6, 4, 2});
  CHECK_THROWS_AS(sa_linking_counterexample(1), DomainError);
  CHECK_THROWS_AS(sa_linking_counterexample(0), DomainError);
}

TEST_CASE("other verdicts") {
  CHECK(infer_linking(I("P_parity"), 1, kSmall).verdict == LinkReport::Verdict::LInfiniteWithinBound);
  CHECK(infer_linking(I("SA"), 2, kSmall).verdict == LinkReport::Verdict::Refuted);
  for (const char* s : {"Rprime", "Adiff", "Pprime", "N_maxlen:3"})
    CHECK_MESSAGE(infer_linking(I(s), 1, kSmall).verdict != LinkReport::Verdict::LinkedWithinBound, s);
}

TEST_CASE("linked ideals have finite order") {
  for (const auto& s : builtin_ideals()) {
    if (s.kind == IdealKind::S) continue;
    for (Part m = 1; m <= 2; ++m) {
      const auto link = infer_linking(s, m, kSmall);
      if (link.verdict == LinkReport::Verdict::LinkedWithinBound)
        CHECK_MESSAGE(!order_estimate(s, kSmall).unbounded, s.to_string());
    }
    if (order_estimate(s, kSmall).unbounded)
      for (Part m = 1; m <= 2; ++m)
        CHECK_MESSAGE(infer_linking(s, m, kSmall).verdict != LinkReport::Verdict::LinkedWithinBound, s.to_string());
  }
}

TEST_CASE("parity ideal series") {
  CHECK(count_parity_ideal(0) == 1);
  CHECK(count_parity_ideal(1) == 1);
  CHECK(count_parity_ideal(4) == 4);
  for (Part n = 0; n <= 24; ++n)
    CHECK(count_parity_ideal(n) == oracle::count(n, [](const Partition& p) {
            for (Part v : p.parts())
              if (v % 2 != p.part(1) % 2) return false;
            return true;
          }));
}

TEST_CASE("reports are deterministic") {
  const auto a = infer_linking(I("SA_maxlen:2"), 2, kSmall);
  const auto b = infer_linking(I("SA_maxlen:2"), 2, kSmall);
  CHECK(a.witness == b.witness);
  CHECK(order_estimate(I("SA"), kSmall).witnesses == order_estimate(I("SA"), kSmall).witnesses);
}
