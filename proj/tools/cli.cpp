#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "seqcong/bijections.hpp"
#include "seqcong/enumeration.hpp"
#include "seqcong/errors.hpp"
#include "seqcong/generalized.hpp"
#include "seqcong/ideal.hpp"
#include "seqcong/json.hpp"
#include "seqcong/partition.hpp"
#include "seqcong/predicates.hpp"

namespace seqcong::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::string> input;
  bool text = false;

  std::string to = "standard";
  std::string fn;
  std::string pred = "seqcong";
  std::optional<std::string> a_spec;
  std::optional<std::string> b_spec;
  unsigned k = 1;
  unsigned p = 1;
  unsigned q = 1;
  bool squares = false;

  std::optional<Part> size;
  std::optional<Part> largest;
  std::optional<std::size_t> limit;
  std::size_t upto = 0;

  std::string action;
  std::string ideal;
  Part max_part = 12;
  std::size_t max_len = 8;
  std::optional<Part> modulus;
  std::size_t span_cap = kDefaultSpanCap;

  std::size_t horizon = kDefaultHorizon;
};

using Handler = std::function<std::string(const Json&)>;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON input '" + text + "': " + e.what());
  }
}

// One result per input: the --input value, or each nonblank stdin line.
void for_each_input(const Options& o, std::istream& in, std::ostream& out, const Handler& handle) {
  if (o.input) {
    out << handle(parse_json(*o.input)) << '\n';
    return;
  }
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string result = handle(parse_json(line));
    // Multi-line text results are separated by a blank line in batch mode.
    if (!first && result.find('\n') != std::string::npos) out << '\n';
    out << result << '\n';
    first = false;
  }
}

std::string emit(const Options& o, const Partition& p) { return o.text ? to_string(p) : to_json(p).dump(); }

std::string emit(const Options& o, const NNotation& n) { return o.text ? to_string(n) : to_json(n).dump(); }

std::string emit_bool(const Options& o, bool member, Json extra = Json::object()) {
  if (o.text) return member ? "true" : "false";
  Json out{{"member", member}};
  out.update(extra);
  return out.dump();
}

std::size_t horizon_from_env() {
  const char* raw = std::getenv("SEQCONG_HORIZON");
  if (!raw || !*raw) return kDefaultHorizon;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0 || raw[0] == '-')
    throw UsageError(std::string("SEQCONG_HORIZON must be a positive integer, got '") + raw + "'");
  return static_cast<std::size_t>(v);
}

GenSpec spec_from(const Options& o, const std::string& default_a, const std::string& default_b) {
  return GenSpec(Sequence::parse(o.a_spec.value_or(default_a)), Sequence::parse(o.b_spec.value_or(default_b)),
                 o.horizon);
}

std::string pow_spec(unsigned k) { return "pow:" + std::to_string(k); }

// ---------------------------------------------------------------------------

int cmd_convert(const Options& o, std::istream& in, std::ostream& out) {
  for_each_input(o, in, out, [&](const Json& j) -> std::string {
    const Partition p = any_partition_from_json(j);
    if (o.to == "standard") return emit(o, p);
    if (o.to == "frequency") {
      const FrequencyMap f(p);
      return o.text ? to_string(f) : to_json(f).dump();
    }
    const CNotation c = to_c_notation(p);
    return o.text ? to_string(c) : to_json(c).dump();
  });
  return kExitOk;
}

int cmd_map(const Options& o, std::istream& in, std::ostream& out) {
  const std::map<std::string, Partition (*)(const Partition&)> fns{
      {"pi", pi_map},   {"sigma", sigma_map},         {"pisigma", pi_sigma_closed_form},
      {"psi", psi_map}, {"psi-inv", psi_inverse}, {"conjugate", conjugate}};
  const auto f = fns.at(o.fn);
  for_each_input(o, in, out, [&](const Json& j) { return emit(o, f(any_partition_from_json(j))); });
  return kExitOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const auto pred = parse_predicate(o.pred);
  for_each_input(o, in, out, [&](const Json& j) {
    const Partition p = any_partition_from_json(j);
    const bool member = pred(p.parts());
    if (o.pred != "seqcong") return emit_bool(o, member);
    const auto bad = first_incongruent_index(p);
    if (o.text) return member ? std::string("true") : "false (index " + std::to_string(*bad) + ")";
    return emit_bool(o, member, Json{{"first_incongruent_index", bad ? Json(*bad) : Json(nullptr)}});
  });
  return kExitOk;
}

int cmd_gcheck(const Options& o, std::istream& in, std::ostream& out) {
  const GenSpec spec = spec_from(o, "nat", "nat");
  for_each_input(o, in, out, [&](const Json& j) { return emit_bool(o, is_in_SBA(any_partition_from_json(j), spec)); });
  return kExitOk;
}

int cmd_gmap(const Options& o, std::istream& in, std::ostream& out) {
  Handler h;
  if (o.fn == "sigmaAB") {
    const GenSpec spec = spec_from(o, "nat", "nat");
    h = [&o, spec](const Json& j) { return emit(o, sigma_AB(nnotation_from_json(j, spec))); };
  } else if (o.fn == "piAB") {
    const GenSpec spec = spec_from(o, "nat", "nat");
    h = [&o, spec](const Json& j) { return emit(o, pi_AB(any_partition_from_json(j), spec)); };
  } else if (o.fn == "piPrimeAB") {
    const GenSpec spec = spec_from(o, "nat", "nat");
    h = [&o, spec](const Json& j) { return emit(o, pi_prime_AB(any_partition_from_json(j), spec)); };
  } else if (o.fn == "sigmaPrimeAB") {
    const GenSpec spec = spec_from(o, "nat", "nat");
    h = [&o, spec](const Json& j) { return emit(o, sigma_prime_AB(any_partition_from_json(j), spec)); };
  } else if (o.fn == "sigmak") {
    const GenSpec spec = spec_from(o, pow_spec(o.k), "nat");
    h = [&o, spec](const Json& j) { return emit(o, sigma_k(nnotation_from_json(j, spec), o.k)); };
  } else if (o.fn == "psik") {
    const GenSpec spec = spec_from(o, pow_spec(o.k), "nat");
    h = [&o, spec](const Json& j) { return emit(o, psi_k(nnotation_from_json(j, spec), o.k)); };
  } else if (o.fn == "eta") {
    const GenSpec spec = spec_from(o, pow_spec(o.k), "nat");
    h = [&o, spec](const Json& j) { return emit(o, eta(nnotation_from_json(j, spec), o.k, o.p)); };
  } else {
    if (o.p > o.k) throw DomainError("tau needs 1 <= p, q <= k");
    const GenSpec spec = spec_from(o, pow_spec(o.k - o.p), pow_spec(o.p));
    h = [&o, spec](const Json& j) { return emit(o, tau(nnotation_from_json(j, spec), o.k, o.p, o.q)); };
  }
  for_each_input(o, in, out, h);
  return kExitOk;
}

int cmd_diagram(const Options& o, std::istream& in, std::ostream& out) {
  for_each_input(o, in, out, [&](const Json& j) {
    const Partition p = any_partition_from_json(j);
    return o.squares ? render_square_decomposition(p) : render_diagram(p);
  });
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.size.has_value() == o.largest.has_value()) throw UsageError("enumerate needs exactly one of --size, --largest");
  std::vector<Partition> found;
  const std::size_t limit = o.limit.value_or(std::numeric_limits<std::size_t>::max());
  if (o.largest) {
    if (o.pred != "seqcong") throw DomainError("--largest is only supported for --pred seqcong");
    found = enumerate_seqcong_by_largest(*o.largest);
    if (found.size() > limit) found.resize(limit);
  } else {
    const auto pred = parse_predicate(o.pred);
    for_each_partition(*o.size, *o.size, kUnboundedLength, [&](std::span<const Part> p) {
      if (found.size() >= limit) return false;
      if (pred(p)) found.emplace_back(std::vector<Part>(p.begin(), p.end()));
      return true;
    });
  }
  if (o.text) {
    for (const auto& p : found) out << to_string(p) << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& p : found) arr.push_back(to_json(p));
    out << arr.dump() << '\n';
  }
  return kExitOk;
}

std::vector<BigInt> count_series(const std::string& tag, std::size_t upto) {
  std::vector<BigInt> out;
  const auto colon = tag.find(':');
  const std::string name = tag.substr(0, colon);
  if (name == "powers" || name == "squares" || tag == "all") {
    parse_predicate(tag);  // validates the parameter
    unsigned k = 1;
    if (name == "squares") k = 2;
    if (name == "powers") k = static_cast<unsigned>(std::stoul(tag.substr(colon + 1)));
    return powers_series(k, upto).coefficients;
  }
  if (tag == "P_parity") {
    for (std::size_t n = 0; n <= upto; ++n) out.push_back(count_parity_ideal(n));
    return out;
  }
  if (tag == "seqcong") {
    for (std::size_t n = 0; n <= upto; ++n) out.emplace_back(enumerate_seqcong_by_size(n).size());
    return out;
  }
  const auto pred = parse_predicate(tag);
  for (std::size_t n = 0; n <= upto; ++n) out.push_back(count_members(pred, n));
  return out;
}

int cmd_count(const Options& o, std::ostream& out) {
  const auto series = count_series(o.pred, o.upto);
  if (o.text) {
    out << "n\tcount\n";
    for (std::size_t n = 0; n < series.size(); ++n) out << n << '\t' << series[n] << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& c : series) arr.push_back(to_json(c));
    out << arr.dump() << '\n';
  }
  return kExitOk;
}

std::string optional_text(const std::optional<Partition>& p) { return p ? to_string(*p) : "none"; }

std::string order_text(const OrderEstimate& e, const char* what) {
  std::ostringstream os;
  if (e.unbounded) os << what << ": growing with bound (no k below the cap survives)";
  else os << what << ": " << e.order;
  for (std::size_t k = 0; k < e.witnesses.size(); ++k) os << "\n  k=" << k + 1 << " refuted by " << to_string(e.witnesses[k]);
  return os.str();
}

std::string link_text(const LinkReport& r) {
  std::ostringstream os;
  os << "ideal " << r.ideal.to_string() << ", modulus " << r.modulus << ": " << to_string(r.verdict);
  if (r.witness) os << "\nwitness: " << to_string(*r.witness);
  for (const auto& e : r.entries) {
    os << "\n  " << to_string(e.tail) << ": ";
    if (!e.span) {
      os << "no span up to the cap, witness " << optional_text(e.witness);
      continue;
    }
    os << "span " << *e.span << ", linking set {";
    for (std::size_t i = 0; i < e.linking_set.size(); ++i) os << (i ? ", " : "") << to_string(e.linking_set[i]);
    os << '}';
  }
  return os.str();
}

Part require_modulus(const Options& o) {
  if (!o.modulus) throw UsageError("ideal " + o.action + " needs --modulus");
  return *o.modulus;
}

int cmd_ideal(const Options& o, std::istream& in, std::ostream& out) {
  const IdealSpec s = IdealSpec::parse(o.ideal);
  const AnalysisBound b{o.max_part, o.max_len};
  const auto print = [&](const Json& j, const std::string& text) { out << (o.text ? text : j.dump()) << '\n'; };

  if (o.action == "check") {
    for_each_input(o, in, out, [&](const Json& j) { return emit_bool(o, is_member(s, any_partition_from_json(j))); });
  } else if (o.action == "decompose") {
    const Part m = require_modulus(o);
    for_each_input(o, in, out, [&](const Json& j) {
      const auto pieces = andrews_decompose(any_partition_from_json(j), m);
      Json arr = Json::array();
      std::string text;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        arr.push_back(to_json(pieces[i]));
        text += (i ? " " : "") + to_string(pieces[i]);
      }
      return o.text ? (pieces.empty() ? std::string("(no pieces)") : text) : arr.dump();
    });
  } else if (o.action == "closure") {
    const auto r = check_ideal_closure(s, b);
    print(to_json(r), r.closed ? "closed within bound"
                               : "not closed: " + optional_text(r.member) + " -> " + optional_text(r.removed));
  } else if (o.action == "order") {
    const auto r = order_estimate(s, b);
    print(to_json(r), order_text(r, "order"));
  } else if (o.action == "weak-order") {
    const auto r = weak_order_estimate(s, b);
    print(to_json(r), order_text(r, "weak order"));
  } else if (o.action == "modulus") {
    const auto r = check_modulus(s, require_modulus(o), b);
    print(to_json(r), r.holds ? "modulus holds within bound" : "modulus fails at " + optional_text(r.witness));
  } else if (o.action == "Lset") {
    const auto r = compute_L(s, require_modulus(o), b);
    std::string text = r.infinite_within_bound ? "infinite within bound:" : "finite:";
    for (const auto& p : r.members) text += " " + to_string(p);
    print(to_json(r), text);
  } else {
    const auto r = infer_linking(s, require_modulus(o), b, o.span_cap);
    print(to_json(r), link_text(r));
  }
  return kExitOk;
}

void add_io(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "JSON value; omitted: one JSON value per stdin line");
  sub->add_flag("--text", o.text, "Human-readable output instead of JSON");
}

void add_spec(CLI::App* sub, Options& o) {
  sub->add_option("--A", o.a_spec, "Sequence A: nat | pow:k | arith:a | comma list");
  sub->add_option("--B", o.b_spec, "Sequence B: nat | pow:k | arith:a | comma list");
}

std::string tag_help() {
  std::string out = "Predicate tag:";
  for (const auto& t : predicate_tags()) out += " " + t;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sequentially congruent partitions: representations, bijections and ideal analysis.", "seqcong"};
  app.require_subcommand(1);
  app.footer("Environment: SEQCONG_HORIZON bounds index searches in infinite sequences (default 64).\n"
             "Exit codes: 0 success, 1 domain error, 2 usage error.");

  auto* convert = app.add_subcommand("convert", "Convert between standard, frequency and c-notation");
  convert->add_option("--to", o.to, "Target form")
      ->check(CLI::IsMember({"standard", "frequency", "cnotation"}))
      ->capture_default_str();
  add_io(convert, o);

  auto* map = app.add_subcommand("map", "Apply a bijection or conjugation");
  map->add_option("--fn", o.fn, "Map")->required()->check(
      CLI::IsMember({"pi", "sigma", "pisigma", "psi", "psi-inv", "conjugate"}));
  add_io(map, o);

  auto* gmap = app.add_subcommand("gmap", "Apply a generalized map over sequences A and B");
  gmap->add_option("--fn", o.fn, "Map")->required()->check(CLI::IsMember(
      {"sigmaAB", "piAB", "piPrimeAB", "sigmaPrimeAB", "sigmak", "psik", "eta", "tau"}));
  add_spec(gmap, o);
  gmap->add_option("--k", o.k, "Exponent k")->check(CLI::PositiveNumber)->capture_default_str();
  gmap->add_option("--p", o.p, "Exponent p (eta, tau)")->check(CLI::PositiveNumber)->capture_default_str();
  gmap->add_option("--q", o.q, "Exponent q (tau)")->check(CLI::PositiveNumber)->capture_default_str();
  add_io(gmap, o);

  auto* check = app.add_subcommand("check", "Test membership");
  check->add_option("--pred", o.pred, tag_help())->capture_default_str();
  add_io(check, o);

  auto* gcheck = app.add_subcommand("gcheck", "Test membership in S_B(A)");
  add_spec(gcheck, o);
  add_io(gcheck, o);

  auto* diagram = app.add_subcommand("diagram", "Draw the Young diagram");
  diagram->add_flag("--squares", o.squares, "Show the square decomposition of a square-part partition");
  diagram->add_option("--input", o.input, "JSON partition; omitted: one per stdin line");

  auto* enumerate = app.add_subcommand("enumerate", "List partitions, reverse lexicographic");
  enumerate->add_option("--pred", o.pred, tag_help())->capture_default_str();
  enumerate->add_option("--size", o.size, "Partitions of n");
  enumerate->add_option("--largest", o.largest, "Largest part n (seqcong only)");
  enumerate->add_option("--limit", o.limit, "Stop after N results");
  enumerate->add_flag("--text", o.text, "One partition per line");

  auto* count = app.add_subcommand("count", "Counts for n = 0..upto");
  count->add_option("--pred", o.pred, tag_help())->capture_default_str();
  count->add_option("--upto", o.upto, "Largest n")->required();
  count->add_flag("--text", o.text, "Table instead of a JSON array");

  auto* ideal = app.add_subcommand("ideal", "Bounded analysis of builtin partition ideals");
  ideal->add_option("action", o.action, "Analysis")->required()->check(
      CLI::IsMember({"check", "closure", "order", "weak-order", "modulus", "Lset", "decompose", "link"}));
  ideal->add_option("--ideal", o.ideal,
                    "SA | SA_maxlen:r | S | D | R | Rprime | Adiff | N_maxlen:n | P_parity | P_mod:k | Pprime")
      ->required();
  ideal->add_option("--max-part", o.max_part, "Search bound on parts")->check(CLI::PositiveNumber)->capture_default_str();
  ideal->add_option("--max-len", o.max_len, "Search bound on length")->check(CLI::PositiveNumber)->capture_default_str();
  ideal->add_option("--modulus", o.modulus, "Modulus m")->check(CLI::PositiveNumber);
  ideal->add_option("--span-cap", o.span_cap, "Largest span tried by link")->check(CLI::PositiveNumber)->capture_default_str();
  add_io(ideal, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0 through CLI11; every other parse failure is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    o.horizon = horizon_from_env();
    if (convert->parsed()) return cmd_convert(o, in, out);
    if (map->parsed()) return cmd_map(o, in, out);
    if (gmap->parsed()) return cmd_gmap(o, in, out);
    if (check->parsed()) return cmd_check(o, in, out);
    if (gcheck->parsed()) return cmd_gcheck(o, in, out);
    if (diagram->parsed()) return cmd_diagram(o, in, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (count->parsed()) return cmd_count(o, out);
    return cmd_ideal(o, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Json::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace seqcong::cli
