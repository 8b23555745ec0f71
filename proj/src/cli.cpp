#include "rbchar/cli.hpp"

#include "rbchar/classify.hpp"
#include "rbchar/element.hpp"
#include "rbchar/expression.hpp"
#include "rbchar/finite_ring.hpp"
#include "rbchar/ideal.hpp"
#include "rbchar/json_io.hpp"
#include "rbchar/poly_bridge.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

namespace rbchar::cli {

namespace {

/// Malformed command lines that CLI11 itself accepts.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const char* const kFooter = R"(Expressions:
  expr    := ['+'|'-'] product (('+'|'-') product)*
  product := unary ('*' unary)*          '*' is the algebra product
  unary   := '-' unary | primary ['^' n]
  primary := [number] 'a' n | number | 'P(' expr ')' | '(' expr ')'
  number  := digits ['/' digits]
  Example: 2a1 + 2a0, a1 * a1, P(a1 - a0)^2
  Generator lists separate elements with ';'.

Ascent pairs (prime): s:omega[,s:omega...], e.g. "0:4,2:2" is {(0, 4Z), (2, 2Z)}.

Exit status: 0 success, 1 error, 2 parse error, 3 unstable saturation with --require-stable.)";

struct Options {
  std::string ring = "z";
  std::optional<std::string> weight;
  std::size_t bound = 8;
  std::size_t slack_max = 12;
  bool json = false;
  bool require_stable = false;
  std::optional<std::string> gens;
  std::optional<std::string> ideal_file;
  std::string expr;
  std::string pairs;
  std::optional<std::string> target;
  std::optional<std::int64_t> op;
  std::optional<std::string> ring_file;
  std::int64_t n = 0;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), path, e.byte);
  }
}

AlgebraCtx ctx_from_flags(const Options& o) {
  if (!o.weight) throw UsageError("--weight is required");
  CoeffRing ring = CoeffRing::parse(o.ring);
  return AlgebraCtx(ring, ring.parse_coeff(*o.weight));
}

/// Generators and bound from --gens or --ideal. Explicit flags must agree
/// with the ideal file.
struct IdealInput {
  RBIdealGens gens;
  std::size_t bound;
};

IdealInput ideal_input(const Options& o, const CLI::App& sub) {
  if (o.gens.has_value() == o.ideal_file.has_value())
    throw UsageError("give exactly one of --gens and --ideal");
  if (o.gens) {
    AlgebraCtx ctx = ctx_from_flags(o);
    return {RBIdealGens(ctx, parse_element_list(ctx, *o.gens)), o.bound};
  }
  IdealFile file = ideal_file_from_json(read_json_file(*o.ideal_file));
  if (sub.count("--ring") && !(CoeffRing::parse(o.ring) == file.ctx.ring))
    throw RingMismatch("--ring " + o.ring + " disagrees with the ideal file (" + file.ctx.ring.descriptor() + ")");
  if (o.weight && !(file.ctx.ring.parse_coeff(*o.weight) == file.ctx.weight))
    throw RingMismatch("--weight " + *o.weight + " disagrees with the ideal file (" +
                       to_string(file.ctx.weight) + ")");
  std::size_t bound = sub.count("--bound") ? o.bound : file.bound;
  return {RBIdealGens(file.ctx, std::move(file.generators)), bound};
}

SaturationState run_saturation(const Options& o, const CLI::App& sub) {
  IdealInput in = ideal_input(o, sub);
  SaturationConfig config;
  config.slack_max = o.slack_max;
  config.slack_start = std::min(config.slack_start, o.slack_max);
  return saturate(in.gens, in.bound, config);
}

int stability_status(const Options& o, const SaturationState& state) {
  return (o.require_stable && !state.stable()) ? kUnstable : kOk;
}

std::int64_t to_int64(const Coeff& c, const char* what) {
  const mpz_class& v = c.integer();
  if (!v.fits_slong_p()) throw std::out_of_range(std::string(what) + " out of range");
  return v.get_si();
}

std::int64_t int_weight(const Options& o) {
  if (!o.weight) throw UsageError("--weight is required");
  return to_int64(CoeffRing::integers().parse_coeff(*o.weight), "--weight");
}

struct TargetInput {
  FiniteRing ring;
  RBOperatorTable op;
};

TargetInput target_input(const Options& o) {
  if (o.target.has_value() == o.ring_file.has_value())
    throw UsageError("give exactly one of --target and --ring-file");
  if (o.ring_file) {
    if (o.op) throw UsageError("--op only applies to --target zmod:<n>");
    RingFile file = ring_file_from_json(read_json_file(*o.ring_file));
    return {std::move(file.ring), std::move(file.op)};
  }
  const std::string& t = *o.target;
  const std::string prefix = "zmod:";
  if (t.rfind(prefix, 0) != 0) throw ParseError("expected zmod:<n>", t, 0);
  std::int64_t n = 0;
  auto digits = t.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 12)
    throw ParseError("expected a positive modulus", t, prefix.size());
  n = std::stoll(digits);
  if (!o.op) throw UsageError("--target zmod:<n> needs --op <c>");
  return {FiniteRing::zmod(n), RBOperatorTable::multiplication_by(*o.op)};
}

AscentSet parse_pairs(const std::string& text) {
  const CoeffRing z = CoeffRing::integers();
  std::vector<AscentPair> pairs;
  std::size_t pos = 0;
  auto read_number = [&](std::size_t& at) {
    std::size_t start = at;
    while (at < text.size() && text[at] >= '0' && text[at] <= '9') ++at;
    if (at == start || at - start > 18) throw ParseError("expected a non-negative integer", text, start);
    return std::stoull(text.substr(start, at - start));
  };
  auto skip_space = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_space();
  if (pos == text.size()) return AscentSet(z, {});
  for (;;) {
    skip_space();
    std::size_t s = read_number(pos);
    skip_space();
    if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':'", text, pos);
    ++pos;
    skip_space();
    std::size_t w_at = pos;
    auto w = read_number(pos);
    if (w == 0) throw ParseError("ascending levels are nonzero", text, w_at);
    pairs.push_back({s, KIdeal(z, mpz_class(std::to_string(w)))});
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", text, pos);
    ++pos;
  }
  return AscentSet(z, std::move(pairs));
}

void print_omegas(std::ostream& out, const std::vector<KIdeal>& omegas) {
  for (std::size_t j = 0; j < omegas.size(); ++j) out << "omega[" << j << "] = " << omegas[j].to_string() << '\n';
}

// --- commands --------------------------------------------------------------

int cmd_eval(const Options& o, std::ostream& out) {
  RBElement f = parse_expression(ctx_from_flags(o), o.expr);
  if (o.json)
    out << json{{"element", element_to_json(f)}, {"text", to_string(f)}}.dump() << '\n';
  else
    out << to_string(f) << '\n';
  return kOk;
}

int cmd_saturate(const Options& o, const CLI::App& sub, std::ostream& out) {
  SaturationState state = run_saturation(o, sub);
  if (o.json) {
    out << saturation_report(state).dump() << '\n';
  } else {
    print_omegas(out, state.omegas());
    out << "ascent " << ascent_set(state, true).to_string() << '\n';
    out << (state.stable() ? "stable" : "unstable") << ", slack " << state.slack() << '\n';
    if (!state.diagnostic().empty()) out << state.diagnostic() << '\n';
  }
  return stability_status(o, state);
}

int cmd_ascent(const Options& o, const CLI::App& sub, std::ostream& out) {
  SaturationState state = run_saturation(o, sub);
  AscentSet a = ascent_set(state, true);
  if (o.json) {
    json j = ascent_to_json(a);
    j["stable"] = state.stable();
    out << j.dump() << '\n';
  } else {
    out << a.to_string() << ' ' << (state.stable() ? "stable" : "unstable") << '\n';
  }
  return stability_status(o, state);
}

int cmd_member(const Options& o, const CLI::App& sub, std::ostream& out) {
  SaturationState state = run_saturation(o, sub);
  RBElement f = parse_expression(state.ctx(), o.expr);
  Membership m = membership(state, f);
  if (o.json)
    out << json{{"membership", to_string(m)}, {"stable", state.stable()}}.dump() << '\n';
  else
    out << to_string(m) << '\n';
  return stability_status(o, state);
}

int cmd_reduce(const Options& o, const CLI::App& sub, std::ostream& out) {
  SaturationState state = run_saturation(o, sub);
  RBElement f = parse_expression(state.ctx(), o.expr);
  std::vector<RBElement> gens = ascent_generating_set(state);
  RBElement rest = reduce(f, gens, ascent_set(state));
  if (o.json)
    out << json{{"element", element_to_json(rest)}, {"text", to_string(rest)}}.dump() << '\n';
  else
    out << to_string(rest) << '\n';
  return kOk;
}

int cmd_prime(const Options& o, std::ostream& out) {
  AscentSet a = parse_pairs(o.pairs);
  CoeffRing z = CoeffRing::integers();
  Coeff weight = o.weight ? z.parse_coeff(*o.weight) : z.zero();
  PrimeReport r = is_prime_rb_ideal(a, weight);
  if (o.json) {
    out << prime_report_to_json(r).dump() << '\n';
  } else if (r.prime) {
    out << "prime, quotient " << r.quotient << '\n';
  } else {
    out << "not prime, quotient " << r.quotient;
    if (r.witness) out << ", witness (" << to_string(r.witness->first) << ") * (" << to_string(r.witness->second) << ")";
    out << '\n';
  }
  return kOk;
}

int cmd_char(const Options& o, const CLI::App& sub, std::ostream& out) {
  TargetInput t = target_input(o);
  std::size_t bound = sub.count("--bound") ? o.bound : 8;
  CharacteristicReport r = characteristic(t.ring, t.op, int_weight(o), bound);
  if (o.json) {
    out << characteristic_to_json(r).dump() << '\n';
  } else {
    out << r.ascent.to_string() << ' ' << (r.stable ? "stable" : "unstable") << '\n';
    for (std::size_t j = 0; j < r.omegas.size(); ++j) {
      out << "omega[" << j << "] = " << r.omegas[j].to_string();
      if (r.witnesses[j]) out << ", witness " << to_string(*r.witnesses[j]);
      out << '\n';
    }
    out << "orbit start " << r.orbit_start << ", period " << r.orbit_period << '\n';
  }
  return (o.require_stable && !r.stable) ? kUnstable : kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  std::vector<std::int64_t> ops = enumerate_rb_operators(o.n, int_weight(o));
  if (o.json) {
    out << json{{"n", o.n}, {"weight", int_weight(o)}, {"operators", ops}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < ops.size(); ++i) out << (i ? " " : "") << ops[i];
    out << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  TargetInput t = target_input(o);
  bool ok = verify_rb_operator(t.ring, t.op, int_weight(o));
  if (o.json)
    out << json{{"rota_baxter", ok}}.dump() << '\n';
  else
    out << (ok ? "rota-baxter" : "not rota-baxter") << '\n';
  return kOk;
}

int cmd_to_poly(const Options& o, std::ostream& out) {
  RatPoly p = to_poly(parse_expression(ctx_from_flags(o), o.expr));
  if (o.json) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    out << json{{"coeffs", coeffs}, {"text", to_string(p)}}.dump() << '\n';
  } else {
    out << to_string(p) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rota-Baxter characteristics of free commutative Rota-Baxter algebras", "rbchar"};
  app.footer(kFooter);
  app.require_subcommand(1);
  Options o;

  auto add_algebra = [&](CLI::App* sub, bool weight_required) {
    sub->add_option("--ring", o.ring, "coefficient ring: z, q or z:<n>")->capture_default_str();
    auto* w = sub->add_option("--weight", o.weight, "weight of the algebra (integer)");
    if (weight_required) w->required();
  };
  auto add_ideal = [&](CLI::App* sub) {
    add_algebra(sub, false);
    sub->add_option("--gens", o.gens, "generators separated by ';' (needs --weight)");
    sub->add_option("--ideal", o.ideal_file, "ideal file (JSON)")->check(CLI::ExistingFile);
    sub->add_option("--bound", o.bound, "degree bound")->capture_default_str();
    sub->add_option("--slack-max", o.slack_max, "largest slack tried before giving up")->capture_default_str();
    sub->add_flag("--require-stable", o.require_stable, "exit with status 3 when saturation is unstable");
  };
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("--target", o.target, "zmod:<n>");
    sub->add_option("--op", o.op, "multiplier c of the operator x -> c x on zmod:<n>");
    sub->add_option("--ring-file", o.ring_file, "finite ring with operator (JSON)")->check(CLI::ExistingFile);
    sub->add_option("--weight", o.weight, "weight")->required();
  };

  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  add_algebra(eval, true);
  eval->add_option("expr", o.expr, "expression")->required();

  auto* sat = app.add_subcommand("saturate", "leading-coefficient ideals up to the bound");
  add_ideal(sat);

  auto* asc = app.add_subcommand("ascent", "ascent set of an ideal");
  add_ideal(asc);

  auto* red = app.add_subcommand("reduce", "canonical representative modulo an ideal");
  add_ideal(red);
  red->add_option("expr", o.expr, "expression")->required();

  auto* mem = app.add_subcommand("member", "ideal membership up to the bound");
  add_ideal(mem);
  mem->add_option("expr", o.expr, "expression")->required();

  auto* prime = app.add_subcommand("prime", "prime test for an ideal over Z of weight 0 given by ascent pairs");
  prime->add_option("--pairs", o.pairs, "s:omega[,s:omega...]")->required();
  prime->add_option("--weight", o.weight, "weight (must be 0)");

  auto* chr = app.add_subcommand("char", "characteristic of a finite ring with an operator");
  add_target(chr);
  chr->add_option("--bound", o.bound, "degree bound")->capture_default_str();
  chr->add_flag("--require-stable", o.require_stable, "exit with status 3 when the result is unstable");

  auto* en = app.add_subcommand("enumerate-ops", "multipliers c that are Rota-Baxter operators on Z/n");
  en->add_option("--n", o.n, "modulus")->required();
  en->add_option("--weight", o.weight, "weight")->required();

  auto* ver = app.add_subcommand("verify", "check the Rota-Baxter identity on a finite ring");
  add_target(ver);

  auto* tp = app.add_subcommand("to-poly", "image in Q[x] of an element over Q of weight 0");
  add_algebra(tp, true);
  tp->add_option("expr", o.expr, "expression")->required();

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", o.json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (sat->parsed()) return cmd_saturate(o, *sat, out);
    if (asc->parsed()) return cmd_ascent(o, *asc, out);
    if (red->parsed()) return cmd_reduce(o, *red, out);
    if (mem->parsed()) return cmd_member(o, *mem, out);
    if (prime->parsed()) return cmd_prime(o, out);
    if (chr->parsed()) return cmd_char(o, *chr, out);
    if (en->parsed()) return cmd_enumerate(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (tp->parsed()) return cmd_to_poly(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.diagnostic() << '\n';
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const UnstableSaturation& e) {
    err << "unstable: " << e.what() << '\n';
    return o.require_stable ? kUnstable : kError;
  } catch (const json::exception& e) {
    err << "invalid JSON input: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace rbchar::cli
