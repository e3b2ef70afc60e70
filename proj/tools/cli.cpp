#include "cli.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <CLI11.hpp>

#include "detcoh/bott.hpp"
#include "detcoh/ext_engine.hpp"
#include "detcoh/ideal_lattice.hpp"
#include "detcoh/loccoh_reg.hpp"
#include "detcoh/verify.hpp"

namespace detcoh::cli {
namespace {

struct Context {
  Dimensions dims;
  OutputHeader header;
};

Context make_context(const JobConfig& c) {
  if (c.m < 1 || c.n < 1) throw std::invalid_argument("--m and --n must both be at least 1");
  Context ctx{Dimensions::make(c.m, c.n), {}};
  ctx.header.command = c.command;
  ctx.header.transposed = ctx.dims.transposed;
  ctx.header.params["m"] = ctx.dims.m;
  ctx.header.params["n"] = ctx.dims.n;
  return ctx;
}

TruncationBox make_box(const JobConfig& c, const Dimensions& dims) {
  ZWindow range{-dims.m - 4, 0};
  if (c.box) range = parse_range(*c.box);
  std::optional<ZWindow> window;
  if (c.zwin) window = parse_range(*c.zwin);
  return TruncationBox(range.lo, range.hi, window);
}

Partition require_x(const JobConfig& c, const Dimensions& dims) {
  if (!c.x) throw std::invalid_argument("--x is required for " + c.command);
  return parse_partition(*c.x, dims.n);
}

int require_p(const JobConfig& c) {
  if (!c.p) throw std::invalid_argument("--p is required for " + c.command);
  return *c.p;
}

void emit_trace(std::ostream& out, const JobConfig& c, std::vector<TermRecord> records) {
  auto order = [](const TermRecord& r) {
    return std::make_tuple(std::cref(r.key), r.extra["p"].get<int>(), r.extra["s"].get<int>(),
                           r.extra["t"].get<std::vector<int>>());
  };
  std::sort(records.begin(), records.end(), [&](const TermRecord& a, const TermRecord& b) { return order(a) < order(b); });
  write_terms(out, records, c.output, c.dims_flag);
}

ExtTermFn collect_into(std::vector<TermRecord>& records, const Dimensions& dims) {
  return [&records, dims](const TChain& chain, const DominantWeight& lambda) {
    TermRecord r;
    r.key = TermKey{chain_wdegree(chain, dims), weight_size(lambda), embed_lambda_s(lambda, chain.s, dims), lambda};
    r.mult = 1;
    r.extra = Json{{"p", chain.p}, {"s", chain.s}, {"t", chain.t}};
    records.push_back(std::move(r));
  };
}

int run_ext(const JobConfig& c, std::ostream& out, bool subquotient) {
  auto ctx = make_context(c);
  const Partition x = require_x(c, ctx.dims);
  const TruncationBox box = make_box(c, ctx.dims);
  ctx.header.params["x"] = to_json(x);
  ctx.header.box = box;
  std::optional<int> p;
  if (subquotient) {
    p = require_p(c);
    SubquotientSpec{x, *p}.validate();
    if (*p > ctx.dims.n) throw std::invalid_argument("--p must lie in [0,n]");
    ctx.header.params["p"] = *p;
  }
  write_header(out, ctx.header, c.output);
  if (c.trace) {
    std::vector<TermRecord> records;
    if (subquotient)
      for_each_ext_term_J(x, *p, ctx.dims, box, collect_into(records, ctx.dims));
    else
      for_each_ext_term_quotient(x, ctx.dims, box, collect_into(records, ctx.dims));
    emit_trace(out, c, std::move(records));
    return kExitOk;
  }
  const auto ch = subquotient ? ext_character_J(x, *p, ctx.dims, box) : ext_character_quotient(x, ctx.dims, box);
  write_character(out, ch, c.output, c.dims_flag);
  return kExitOk;
}

int run_loccoh(const JobConfig& c, std::ostream& out) {
  auto ctx = make_context(c);
  const int p = require_p(c);
  if (p < 1 || p > ctx.dims.n) throw std::invalid_argument("--p must lie in [1,n] for loccoh");
  const TruncationBox box = make_box(c, ctx.dims);
  const auto [depth, cohdim] = cohomological_range(p, ctx.dims);
  ctx.header.params["p"] = p;
  ctx.header.params["depth"] = depth;
  ctx.header.params["cohomological_dimension"] = cohdim;
  ctx.header.box = box;
  write_header(out, ctx.header, c.output);
  write_character(out, local_cohomology_character(p, ctx.dims, box), c.output, c.dims_flag);
  return kExitOk;
}

int run_reg(const JobConfig& c, std::ostream& out) {
  auto ctx = make_context(c);
  const Partition x = require_x(c, ctx.dims);
  if (x.is_zero()) throw std::invalid_argument("--x must be a nonzero partition for reg");
  ctx.header.params["x"] = to_json(x);
  write_header(out, ctx.header, c.output);
  const auto r = regularity(x, ctx.dims);
  write_record(out,
               Json{{"regularity", r.regularity},
                    {"linear_resolution", has_linear_resolution(x, ctx.dims)},
                    {"witness_p", r.witness_p}},
               c.output);
  return kExitOk;
}

int run_gauss(const JobConfig& c, std::ostream& out) {
  if (!c.a || !c.b) throw std::invalid_argument("--a and --b are required for gauss");
  if (*c.a < 0 || *c.b < 0) throw std::invalid_argument("--a and --b must be nonnegative");
  OutputHeader header{"gauss", Json{{"a", *c.a}, {"b", *c.b}}, std::nullopt, false};
  write_header(out, header, c.output);
  const auto g = gauss_polynomial(*c.a, *c.b);
  Json coeffs = Json::array();
  for (int e = 0; e <= *c.a * *c.b; ++e) coeffs.push_back(bigint_to_json(g.coefficient(e)));
  write_record(out, Json{{"a", *c.a}, {"b", *c.b}, {"coefficients", coeffs}}, c.output);
  return kExitOk;
}

Json bott_json(const BottStepResult& r) {
  if (r.vanishes()) return Json{{"vanishes", true}};
  return Json{{"vanishes", false}, {"shift", r.shift()}, {"weight", to_json(r.weight())}};
}

int run_bott_step(const JobConfig& c, std::ostream& out) {
  if (!c.mu) throw std::invalid_argument("--mu is required for bott-step");
  const DominantWeight mu(parse_int_list(*c.mu));
  OutputHeader header{"bott-step", Json{{"mu", to_json(mu)}}, std::nullopt, false};
  if (c.d) header.params["d"] = *c.d;
  write_header(out, header, c.output);

  std::vector<int> padded = mu.vec();
  BottStepResult rule;
  Json record{{"mu", to_json(mu)}};
  if (c.d) {
    if (mu.length() < 1) throw std::invalid_argument("--mu must be nonempty for the Grassmannian step");
    rule = pushforward_final(mu, *c.d);
    padded.resize(static_cast<std::size_t>(*c.d), 0);
    record["d"] = *c.d;
    const auto s = grassmannian_index(mu, *c.d);
    if (s) record["s"] = *s;
  } else {
    rule = pushforward_step(mu);
    padded.push_back(0);
  }
  const auto oracle = rho_sort_oracle(padded);
  record["rule"] = bott_json(rule);
  record["oracle"] = bott_json(oracle);
  record["agree"] = rule == oracle;
  write_record(out, record, c.output);
  return rule == oracle ? kExitOk : kExitVerifyFailed;
}

int run_verify(const JobConfig& c, std::ostream& out) {
  const VerifyScope scope = c.quick ? VerifyScope::quick() : VerifyScope::full();
  OutputHeader header{"verify", Json{{"scope", c.quick ? "quick" : "full"}}, std::nullopt, false};
  if (c.suite) header.params["suite"] = *c.suite;
  std::vector<SuiteReport> reports;
  if (c.suite) {
    reports.push_back(run_suite(*c.suite, scope));
  } else {
    reports = run_all_suites(scope);
  }
  write_header(out, header, c.output);
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.passed;
    write_record(out,
                 Json{{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}},
                 c.output);
  }
  return all ? kExitOk : kExitVerifyFailed;
}

/// Lets "--box -8:0" through: CLI11 would read "-8:0" as a short flag.
std::vector<std::string> attach_negative_values(const std::vector<std::string>& args) {
  static const std::set<std::string> valued{"--box", "--zwin", "--mu", "--x", "--p", "--m", "--n",
                                            "--a",   "--b",    "--d"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (valued.count(args[i]) && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        args[i + 1][1] != '-') {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "ext") return run_ext(config, out, false);
    if (config.command == "ext-sub") return run_ext(config, out, true);
    if (config.command == "loccoh") return run_loccoh(config, out);
    if (config.command == "reg") return run_reg(config, out);
    if (config.command == "gauss") return run_gauss(config, out);
    if (config.command == "bott-step") return run_bott_step(config, out);
    if (config.command == "verify") return run_verify(config, out);
    err << "error: unknown command '" << config.command << "'\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobConfig config;
  std::string format = "json";
  CLI::App app{"Equivariant characters of Ext modules, local cohomology and regularity for determinantal thickenings"};
  app.require_subcommand(1);

  auto add_dims = [&](CLI::App* sub) {
    sub->add_option("--m", config.m, "dim F")->required();
    sub->add_option("--n", config.n, "dim G")->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  };
  auto add_box = [&](CLI::App* sub) {
    sub->add_option("--box", config.box, "entry range lo:hi for beta (default -m-4:0)");
    sub->add_option("--zwin", config.zwin, "z-degree window lo:hi");
    sub->add_flag("--dims", config.dims_flag, "append mult * Weyl dimensions");
  };

  auto* ext = app.add_subcommand("ext", "character of Ext(S/I_x, S)");
  auto* ext_sub = app.add_subcommand("ext-sub", "character of Ext(J_{x,p}, S)");
  for (auto* sub : {ext, ext_sub}) {
    add_dims(sub);
    add_box(sub);
    add_output(sub);
    sub->add_option("--x", config.x, "partition, comma separated")->required();
    sub->add_flag("--trace", config.trace, "one record per (p, s, t) contribution");
  }
  ext_sub->add_option("--p", config.p, "subquotient index")->required();

  auto* loccoh = app.add_subcommand("loccoh", "character of local cohomology with support in the p x p minors");
  add_dims(loccoh);
  add_box(loccoh);
  add_output(loccoh);
  loccoh->add_option("--p", config.p, "size of the minors")->required();

  auto* reg = app.add_subcommand("reg", "regularity of I_x");
  add_dims(reg);
  add_output(reg);
  reg->add_option("--x", config.x, "partition, comma separated")->required();

  auto* gauss = app.add_subcommand("gauss", "Gauss polynomial {a+b choose a}(w)");
  add_output(gauss);
  gauss->add_option("--a", config.a, "rows of the box")->required();
  gauss->add_option("--b", config.b, "columns of the box")->required();

  auto* verify = app.add_subcommand("verify", "run the cross-check suites");
  add_output(verify);
  verify->add_flag("--quick", config.quick, "reduced sweep sizes");
  verify->add_option("--suite", config.suite, "run a single suite")->check(CLI::IsMember(suite_names()));

  auto* bott = app.add_subcommand("bott-step", "one push-forward step with its oracle");
  add_output(bott);
  bott->add_option("--mu", config.mu, "dominant weight, comma separated")->required();
  bott->add_option("--d", config.d, "ambient dimension for the Grassmannian step");

  std::vector<std::string> reversed = attach_negative_values(args);
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.output = format == "tsv" ? OutputFormat::Tsv : OutputFormat::Json;
  return run(config, out, err);
}

}  // namespace detcoh::cli
