#include "detcoh/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "detcoh/bott.hpp"
#include "detcoh/character.hpp"
#include "detcoh/ext_engine.hpp"
#include "detcoh/ideal_lattice.hpp"
#include "detcoh/lattice_enum.hpp"
#include "detcoh/loccoh_reg.hpp"

namespace detcoh {

VerifyScope VerifyScope::quick() {
  VerifyScope s;
  s.gauss_max = 6;
  s.bott_max_length = 3;
  s.bott_entry_bound = 5;
  s.bott_extra_d = 4;
  s.ext_dims = {{2, 1}, {2, 2}, {3, 2}};
  s.ext_max_x1 = 2;
  s.ext_box_below = 4;
  s.ext_box_high = 2;
  s.filtration_max_m = 2;
  s.filtration_max_x1 = 2;
  s.reg_max_n = 3;
  s.reg_max_x1 = 3;
  s.loccoh_max_n = 2;
  s.loccoh_max_m = 3;
  s.cauchy_max = 3;
  s.cauchy_max_r = 4;
  return s;
}

std::vector<Partition> partitions_up_to(int n, int max_part) {
  std::vector<Partition> out;
  enumerate_dominant(std::vector<int>(static_cast<std::size_t>(n), 0),
                     std::vector<int>(static_cast<std::size_t>(n), max_part), std::nullopt,
                     [&](const std::vector<int>& v) { out.push_back(normalize(v, n)); });
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

struct Tracker {
  SuiteReport report;

  explicit Tracker(std::string name) { report.name = std::move(name); }

  /// Records one case; keeps only the first failure message.
  void check(bool ok, const std::function<std::string()>& describe) {
    ++report.cases;
    if (ok || !report.passed) return;
    report.passed = false;
    report.detail = describe();
  }

  SuiteReport finish(const std::string& summary = "") {
    if (report.passed) report.detail = summary.empty() ? std::to_string(report.cases) + " cases" : summary;
    return report;
  }
};

std::string dims_text(const Dimensions& d) { return "m=" + std::to_string(d.m) + " n=" + std::to_string(d.n); }

std::string box_text(const TruncationBox& b) {
  return "box=" + std::to_string(b.lambda_low) + ":" + std::to_string(b.lambda_high);
}

std::string diff_text(const EquivariantCharacter& a, const EquivariantCharacter& b) {
  return first_difference(a, b).value_or("(no difference on shared box)");
}

bool equal_block(const Partition& x, int p) {
  for (int i = 2; i <= p; ++i)
    if (x.row(i) != x.row(1)) return false;
  return true;
}

/// All (m, n) with 1 <= n <= m <= max_m, optionally n <= max_n.
std::vector<Dimensions> dims_up_to(int max_m, int max_n) {
  std::vector<Dimensions> out;
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= std::min(m, max_n); ++n) out.push_back(Dimensions::make(m, n));
  return out;
}

BigInt binomial(int top, int bottom) {
  if (bottom < 0 || bottom > top) return 0;
  BigInt r = 1;
  for (int i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
  return r;
}

}  // namespace

SuiteReport verify_gauss(const VerifyScope& scope) {
  Tracker t("gauss");
  for (int a = 0; a <= scope.gauss_max; ++a) {
    for (int b = 0; b <= scope.gauss_max; ++b) {
      const WPolynomial g = gauss_polynomial(a, b);
      for (int c = -1; c <= a * b + 1; ++c) {
        const BigInt lhs = g.coefficient(c);
        const BigInt rhs = count_partitions_in_box(a, b, c);
        t.check(lhs == rhs && lhs == g.coefficient(a * b - c), [&] {
          return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c) +
                 ": gauss " + lhs.str() + " vs count " + rhs.str() + " vs mirror " + g.coefficient(a * b - c).str();
        });
      }
    }
  }
  return t.finish();
}

SuiteReport verify_bott(const VerifyScope& scope) {
  Tracker t("bott");
  const int bound = scope.bott_entry_bound;
  for (int q = 0; q <= scope.bott_max_length; ++q) {
    enumerate_dominant(std::vector<int>(static_cast<std::size_t>(q), -bound),
                       std::vector<int>(static_cast<std::size_t>(q), bound), std::nullopt,
                       [&](const std::vector<int>& v) {
                         const DominantWeight mu(v);
                         std::vector<int> padded(v);
                         padded.push_back(0);
                         const auto step = pushforward_step(mu);
                         const auto oracle = rho_sort_oracle(padded);
                         t.check(step == oracle, [&] {
                           return "step mu=" + mu.to_string() + ": rule " + step.to_string() + " vs oracle " +
                                  oracle.to_string();
                         });
                         if (q == 0) return;
                         for (int d = q; d <= q + scope.bott_extra_d; ++d) {
                           std::vector<int> wide(v);
                           wide.resize(static_cast<std::size_t>(d), 0);
                           const auto fin = pushforward_final(mu, d);
                           const auto fin_oracle = rho_sort_oracle(wide);
                           t.check(fin == fin_oracle, [&] {
                             return "final mu=" + mu.to_string() + " d=" + std::to_string(d) + ": rule " +
                                    fin.to_string() + " vs oracle " + fin_oracle.to_string();
                           });
                         }
                       });
  }
  return t.finish();
}

SuiteReport verify_ext_oracle(const VerifyScope& scope) {
  Tracker t("ext_oracle");
  long long terms = 0;
  for (const auto& [m0, n0] : scope.ext_dims) {
    const auto dims = Dimensions::make(m0, n0);
    const TruncationBox box(-dims.m - scope.ext_box_below, scope.ext_box_high);
    for (const auto& x : partitions_up_to(dims.n, scope.ext_max_x1)) {
      for (int p = 0; p <= dims.n; ++p) {
        if (!equal_block(x, p)) continue;
        const auto closed = ext_character_J(x, p, dims, box);
        const auto oracle = ext_character_J_oracle(x, p, dims, box);
        terms += static_cast<long long>(closed.size());
        t.check(equal_on_box(closed, oracle), [&] {
          return dims_text(dims) + " x=" + x.to_string() + " p=" + std::to_string(p) + " " + box_text(box) + ": " +
                 diff_text(closed, oracle);
        });
      }
    }
  }
  return t.finish(std::to_string(t.report.cases) + " cases, " + std::to_string(terms) + " terms");
}

SuiteReport verify_pipeline_roundtrip(const VerifyScope& scope) {
  Tracker t("pipeline_roundtrip");
  for (const auto& dims : dims_up_to(3, 2)) {
    const TruncationBox box(-dims.m - 4, 2);
    for (const auto& x : partitions_up_to(dims.n, std::min(scope.ext_max_x1, 2))) {
      for (int p = 0; p <= dims.n; ++p) {
        if (!equal_block(x, p)) continue;
        for (const auto& chain : enumerate_chains(p, ChainFlavor::J, dims)) {
          for (const auto& lambda : enumerate_weights(x, chain, dims, box)) {
            const auto mu = pipeline_inverse(lambda, chain, x, dims);
            const auto trace = pipeline_forward(mu, p, x, dims);
            const bool ok = trace && trace->lambda == lambda && trace->chain() == chain &&
                            trace->cohomological_degree == chain_wdegree(chain, dims) &&
                            trace->alpha == embed_lambda_s(lambda, chain.s, dims);
            t.check(ok, [&] {
              return dims_text(dims) + " x=" + x.to_string() + " chain=" + chain.to_string() +
                     " lambda=" + lambda.to_string() + " mu=" + mu.to_string() +
                     (trace ? " -> lambda=" + trace->lambda.to_string() + " chain=" + trace->chain().to_string()
                            : std::string(" -> vanishes"));
            });
          }
        }
      }
    }
  }
  return t.finish();
}

SuiteReport verify_ext_structure(const VerifyScope& scope) {
  Tracker t("ext_structure");
  for (const auto& [m0, n0] : scope.ext_dims) {
    const auto dims = Dimensions::make(m0, n0);
    const TruncationBox box(-dims.m - scope.ext_box_below, scope.ext_box_high);
    const int m = dims.m;
    const int n = dims.n;
    for (const auto& x : partitions_up_to(n, scope.ext_max_x1)) {
      for (int p = 0; p <= n; ++p) {
        if (!equal_block(x, p)) continue;
        for_each_ext_term_J(x, p, dims, box, [&](const TChain& chain, const DominantWeight& lambda) {
          const int w = chain_wdegree(chain, dims);
          const int parity = ((w - (m * n - p * p - chain.s * (m - n))) % 2 + 2) % 2;
          t.check(parity == 0 && in_weight_set(lambda, x, chain, dims), [&] {
            return "parity/membership " + dims_text(dims) + " x=" + x.to_string() + " chain=" + chain.to_string() +
                   " lambda=" + lambda.to_string();
          });
        });
      }
      const auto pruned = ext_character_quotient(x, dims, box, true);
      const auto full = ext_character_quotient(x, dims, box, false);
      t.check(equal_on_box(pruned, full), [&] {
        return "pruning " + dims_text(dims) + " x=" + x.to_string() + ": " + diff_text(pruned, full);
      });
      std::map<DominantWeight, std::pair<DominantWeight, int>> seen;
      bool unique = true;
      std::string clash;
      for_each_ext_term_quotient(
          x, dims, box,
          [&](const TChain& chain, const DominantWeight& lambda) {
            const auto alpha = embed_lambda_s(lambda, chain.s, dims);
            const auto [it, fresh] = seen.emplace(alpha, std::make_pair(lambda, chain.s));
            if (!fresh && (it->second.first != lambda || it->second.second != chain.s) && unique) {
              unique = false;
              clash = "alpha=" + alpha.to_string() + " from s=" + std::to_string(it->second.second) + " and s=" +
                      std::to_string(chain.s);
            }
          },
          false);
      t.check(unique, [&] { return "uniqueness " + dims_text(dims) + " x=" + x.to_string() + ": " + clash; });
    }
  }
  return t.finish();
}

SuiteReport verify_filtration(const VerifyScope& scope) {
  Tracker t("filtration");
  long long identity_pairs = 0;
  long long monotone_pairs = 0;
  for (const auto& dims : dims_up_to(scope.filtration_max_m, scope.filtration_max_m)) {
    const int n = dims.n;
    const TruncationBox box(-dims.m - 4, 1);
    std::map<Partition, EquivariantCharacter> cache;
    auto quotient = [&](const Partition& x) -> const EquivariantCharacter& {
      auto it = cache.find(x);
      if (it == cache.end()) it = cache.emplace(x, ext_character_quotient(x, dims, box)).first;
      return it->second;
    };
    for (const auto& x : partitions_up_to(n, scope.filtration_max_x1)) {
      for (int q = 0; q <= n - 1; ++q) {
        if (!equal_block(x, q + 1)) continue;
        auto rows = x.padded();
        for (int i = 0; i <= q; ++i) ++rows[static_cast<std::size_t>(i)];
        const Partition y = normalize(rows, n);
        EquivariantCharacter rhs = quotient(x);
        for (const auto& spec : filtration_quotients(x, q, 0, dims))
          rhs = combine(rhs, ext_character_J(spec.x, spec.p, dims, box), 1, 1);
        ++identity_pairs;
        t.check(equal_on_box(quotient(y), rhs), [&] {
          return "identity " + dims_text(dims) + " x=" + x.to_string() + " y=" + y.to_string() + ": " +
                 diff_text(quotient(y), rhs);
        });
      }
    }
    for (const auto& y : partitions_up_to(n, scope.filtration_max_x1 + 1)) {
      for (int d = 0; d < y.row(1); ++d) {
        std::vector<int> rows;
        for (int i = 1; i <= n; ++i) rows.push_back(std::min(y.row(i), d));
        const Partition x = normalize(rows, n);
        ++monotone_pairs;
        t.check(dominated_on_box(quotient(x), quotient(y)), [&] {
          return "injectivity " + dims_text(dims) + " x=" + x.to_string() + " y=" + y.to_string();
        });
      }
    }
    for (int p = 0; p <= n - 1; ++p) {
      for (int c = 1; c <= scope.filtration_max_x1 + 1; ++c) {
        for (int b = c + 1; b <= scope.filtration_max_x1 + 1; ++b) {
          const Partition x = normalize(std::vector<int>(static_cast<std::size_t>(p + 1), c), n);
          const Partition y = normalize(std::vector<int>(static_cast<std::size_t>(p + 1), b), n);
          ++monotone_pairs;
          t.check(dominated_on_box(quotient(x), quotient(y)), [&] {
            return "rectangles " + dims_text(dims) + " x=" + x.to_string() + " y=" + y.to_string();
          });
        }
      }
    }
  }
  return t.finish(std::to_string(identity_pairs) + " identity pairs, " + std::to_string(monotone_pairs) +
                  " monotone pairs");
}

SuiteReport verify_regularity(const VerifyScope& scope) {
  Tracker t("regularity");
  for (int n = 1; n <= scope.reg_max_n; ++n) {
    for (int m = n; m <= n + 2; ++m) {
      const auto dims = Dimensions::make(m, n);
      for (const auto& x : partitions_up_to(n, scope.reg_max_x1)) {
        if (x.is_zero()) continue;
        const int closed = regularity(x, dims).regularity;
        const int cells = regularity_oracle(x, dims);
        const TruncationBox box = regularity_box(x, dims);
        const auto ext = ext_character_quotient(x, dims, box);
        const int from_ext = regularity_from_character(ext);
        t.check(closed == cells && cells == from_ext, [&] {
          return dims_text(dims) + " x=" + x.to_string() + ": closed " + std::to_string(closed) + ", cells " +
                 std::to_string(cells) + ", character " + std::to_string(from_ext);
        });

        bool block = true, shifted = x.row(1) >= 1;
        for (int i = 2; i <= n; ++i) {
          block = block && x.row(i) == x.row(1);
          shifted = shifted && x.row(i) == x.row(1) - 1;
        }
        if (n == 1) shifted = x.row(1) == 1;
        t.check(has_linear_resolution(x, dims) == (block || shifted), [&] {
          return "linear resolution " + dims_text(dims) + " x=" + x.to_string();
        });

        for (int p = 1; p <= n; ++p) {
          for (const auto& chain : enumerate_chains(p, ChainFlavor::Quotient, dims)) {
            const bool predicate = quotient_cell_nonempty(x, p, chain.s, chain.t, dims);
            const bool found = !enumerate_weights(x, chain, dims, box).empty();
            t.check(predicate == found, [&] {
              return "cell " + dims_text(dims) + " x=" + x.to_string() + " chain=" + chain.to_string();
            });
          }
        }
      }
      for (int d = 1; d <= scope.reg_max_x1; ++d) {
        const Partition rect = normalize(std::vector<int>(static_cast<std::size_t>(n), d), n);
        t.check(regularity(rect, dims).regularity == n * d,
                [&] { return "power of maximal minors " + dims_text(dims) + " d=" + std::to_string(d); });
      }
      t.check(regularity(Partition({1}, n), dims).regularity == 1,
              [&] { return "maximal ideal " + dims_text(dims); });
    }
  }
  return t.finish();
}

SuiteReport verify_maximal_minors(const VerifyScope& scope) {
  Tracker t("maximal_minors");
  for (const auto& dims : dims_up_to(scope.loccoh_max_m, scope.loccoh_max_m)) {
    const int m = dims.m;
    const int n = dims.n;
    const TruncationBox box(-m - 4, 2);
    const auto general = local_cohomology_character(n, dims, box);
    EquivariantCharacter direct(dims, box);
    for (int s = 0; s <= n - 1; ++s)
      direct = combine(direct, h_s_character(s, dims, box, (n - s) * (m - n) + 1), 1, 1);
    t.check(equal_on_box(general, direct),
            [&] { return dims_text(dims) + " " + box_text(box) + ": " + diff_text(general, direct); });
    if (m == n) {
      bool concentrated = true;
      for (const auto& [key, mult] : general.terms()) concentrated = concentrated && key.wdeg == 1;
      t.check(concentrated && !general.empty(), [&] { return "square case not concentrated in H^1 " + dims_text(dims); });
    }
  }
  return t.finish();
}

SuiteReport verify_stabilization(const VerifyScope& scope) {
  Tracker t("stabilization");
  for (const auto& dims : dims_up_to(scope.loccoh_max_m, scope.loccoh_max_n)) {
    const int m = dims.m;
    const TruncationBox box(-m - 4, 0);
    for (int p = 1; p <= dims.n; ++p) {
      const auto limit = local_cohomology_character(p, dims, box);
      for (int d = m + 4; d <= m + 5; ++d) {
        const Partition x = normalize(std::vector<int>(static_cast<std::size_t>(p), d), dims.n);
        const auto ext = ext_character_quotient(x, dims, box);
        t.check(equal_on_box(ext, limit), [&] {
          return dims_text(dims) + " p=" + std::to_string(p) + " d=" + std::to_string(d) + ": " + diff_text(ext, limit);
        });
      }
    }
  }
  return t.finish();
}

SuiteReport verify_cohomological_range(const VerifyScope& scope) {
  Tracker t("cohomological_range");
  for (const auto& dims : dims_up_to(scope.loccoh_max_m, scope.loccoh_max_n)) {
    const TruncationBox box(-dims.m - 2, 0);
    for (int p = 1; p <= dims.n; ++p) {
      const auto [depth, cohdim] = cohomological_range(p, dims);
      const auto h = local_cohomology_character(p, dims, box);
      bool low = false, high = false, inside = !h.empty();
      for (const auto& [key, mult] : h.terms()) {
        low = low || key.wdeg == depth;
        high = high || key.wdeg == cohdim;
        inside = inside && depth <= key.wdeg && key.wdeg <= cohdim;
      }
      t.check(low && high && inside, [&] {
        return dims_text(dims) + " p=" + std::to_string(p) + ": range [" + std::to_string(depth) + "," +
               std::to_string(cohdim) + "] attained low=" + std::to_string(low) + " high=" + std::to_string(high) +
               " inside=" + std::to_string(inside);
      });
    }
  }
  return t.finish();
}

SuiteReport verify_cauchy(const VerifyScope& scope) {
  Tracker t("cauchy");
  for (int m = 1; m <= scope.cauchy_max; ++m) {
    for (int n = 1; n <= scope.cauchy_max; ++n) {
      const auto dims = Dimensions::make(m, n);
      const auto c = cauchy_character(dims, ZWindow{0, scope.cauchy_max_r});
      const auto slice = dimension_slice(c, 0);
      for (int r = 0; r <= scope.cauchy_max_r; ++r) {
        const auto it = slice.find(r);
        const BigInt expected = binomial(m * n + r - 1, r);
        const bool ok = it != slice.end() && it->second.dimension == expected && !it->second.lower_bound_only;
        t.check(ok, [&] {
          return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r) + ": expected " +
                 expected.str() + ", got " + (it == slice.end() ? std::string("nothing") : it->second.dimension.str());
        });
      }
    }
  }
  return t.finish();
}

SuiteReport verify_box_restriction(const VerifyScope& scope) {
  Tracker t("box_restriction");
  for (const auto& dims : dims_up_to(3, 2)) {
    const TruncationBox outer(-dims.m - 5, 2);
    const TruncationBox inner(-dims.m - 2, 0, ZWindow{-3 * dims.n, 0});
    auto compare = [&](const std::string& what, const std::function<EquivariantCharacter(const TruncationBox&)>& f) {
      const auto restricted = f(outer).restricted(inner);
      const auto direct = f(inner);
      t.check(restricted.terms() == direct.terms(),
              [&] { return what + " " + dims_text(dims) + ": " + diff_text(restricted, direct); });
    };
    for (const auto& x : partitions_up_to(dims.n, std::min(scope.ext_max_x1, 2))) {
      compare("quotient x=" + x.to_string(),
              [&](const TruncationBox& b) { return ext_character_quotient(x, dims, b); });
      for (int p = 0; p <= dims.n; ++p)
        if (equal_block(x, p))
          compare("J x=" + x.to_string() + " p=" + std::to_string(p),
                  [&](const TruncationBox& b) { return ext_character_J(x, p, dims, b); });
    }
    for (int p = 1; p <= dims.n; ++p)
      compare("local cohomology p=" + std::to_string(p),
              [&](const TruncationBox& b) { return local_cohomology_character(p, dims, b); });
  }
  return t.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "gauss",       "bott",           "ext_oracle",   "pipeline_roundtrip",  "ext_structure", "filtration",
      "regularity",  "maximal_minors", "stabilization", "cohomological_range", "cauchy",        "box_restriction"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyScope& scope) {
  static const std::map<std::string, SuiteReport (*)(const VerifyScope&)> table{
      {"gauss", verify_gauss},
      {"bott", verify_bott},
      {"ext_oracle", verify_ext_oracle},
      {"pipeline_roundtrip", verify_pipeline_roundtrip},
      {"ext_structure", verify_ext_structure},
      {"filtration", verify_filtration},
      {"regularity", verify_regularity},
      {"maximal_minors", verify_maximal_minors},
      {"stabilization", verify_stabilization},
      {"cohomological_range", verify_cohomological_range},
      {"cauchy", verify_cauchy},
      {"box_restriction", verify_box_restriction},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(scope);
}

std::vector<SuiteReport> run_all_suites(const VerifyScope& scope) {
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, scope));
  return out;
}

}  // namespace detcoh
