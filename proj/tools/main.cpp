#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "syzygy/audit.hpp"
#include "syzygy/corpus.hpp"
#include "syzygy/homprod.hpp"
#include "syzygy/ideal.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/module.hpp"
#include "syzygy/numtheory.hpp"
#include "syzygy/resolve.hpp"
#include "syzygy/template.hpp"

using namespace syz;

namespace {

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_betti(const std::string& file, std::optional<int> imax, std::optional<int> jmax, const std::string& module_file,
              bool json) {
  auto ideal = read_ideal_file(file);
  int e = ideal.num_vars();
  int i_hi = imax.value_or(e);
  int j_hi = jmax.value_or(i_hi + 6);
  Presentation pres;
  if (!module_file.empty()) pres = read_presentation_file(module_file, e);
  BettiTable table = visit_field(ideal.field, [&](auto k) {
    using F = decltype(k);
    QuotientAlgebra<F> a(k, e, ideal.generators);
    if (!module_file.empty()) {
      auto m = linearize_module(a, pres, j_hi + 1);
      KoszulComplex<F> kc(m);
      return betti_table(kc, i_hi, j_hi, j_hi);
    }
    auto m = algebra_module(a, j_hi + 1);
    KoszulComplex<F> kc(m);
    auto bound = algebra_column_bound(e, ideal.metadata, initial_ideal(a, 8));
    return betti_table(kc, i_hi, j_hi, j_hi, bound);
  });
  std::cout << (json ? table.to_json() : table.to_tsv());
  return 0;
}

int cmd_audit(const std::string& file, const std::vector<std::string>& checks, std::optional<int> imax, int row_cap,
              int heavy, const std::string& json_out) {
  auto ideal = read_ideal_file(file);
  AuditOptions opt;
  opt.i_max = imax;
  opt.row_cap = row_cap;
  opt.heavy_max_vars = heavy;
  const auto& ids = audit_check_ids();
  for (const auto& c : checks) {
    auto base = c.substr(0, c.find('.'));
    if (std::find(ids.begin(), ids.end(), base) == ids.end() && std::find(ids.begin(), ids.end(), c) == ids.end())
      throw CLI::ValidationError("--checks", "unknown check id " + c);
    opt.only.insert(c);
  }
  auto rep = run_audit(ideal, opt);
  std::cout << rep.summary_table();
  for (const auto& r : rep.records)
    if (r.verdict == Verdict::violated) {
      std::cout << (r.conjectural ? "counterexample " : "violated ") << r.id;
      for (const auto& [k, v] : r.params) std::cout << ' ' << k << '=' << v;
      for (const auto& [k, v] : r.witness) std::cout << ' ' << k << ':' << v;
      std::cout << '\n';
    }
  if (!json_out.empty()) write_output(json_out, rep.to_json());
  return rep.exit_code();
}

int cmd_template(int q, int cols, int rows) {
  if (q < 2) throw CLI::ValidationError("--q", "templates need q >= 2");
  std::cout << render_template(q, cols, rows).to_text();
  return 0;
}

int cmd_goodprimes(int n_max) {
  std::cout << "n\texceptional_prime\n";
  for (int n = 1; n <= n_max; ++n) {
    auto p = exceptional_prime(n);
    std::cout << n << '\t' << (p ? std::to_string(*p) : "-") << '\n';
  }
  return 0;
}

int cmd_splitcheck(const std::string& file, int sa, int sb, std::optional<int> jmax, const std::string& module) {
  auto ideal = read_ideal_file(file);
  int j_hi = jmax.value_or(sa + sb + 4);
  if (module != "R" && module != "k") throw CLI::ValidationError("--module", "expected R or k");
  Verdict worst = Verdict::verified;
  visit_field(ideal.field, [&](auto k) {
    using F = decltype(k);
    QuotientAlgebra<F> a(k, ideal.num_vars(), ideal.generators);
    std::optional<LinearizedModule<F>> kf;
    if (module == "k") kf.emplace(residue_field(a));
    ProductContext<F> ctx(a, kf ? &*kf : nullptr, j_hi + 1);
    std::cout << "a\tb\tj\tbinomial\tcycles\tverdict\n";
    for (int j = sa + sb; j <= j_hi; ++j) {
      auto s = verify_splitting(ctx, sa, sb, j);
      std::cout << sa << '\t' << sb << '\t' << j << '\t' << s.binomial << '\t' << s.cycles << '\t'
                << to_string(s.verdict);
      if (!s.detail.empty()) std::cout << '\t' << s.detail;
      std::cout << '\n';
      worst = combine(worst, s.verdict);
    }
    return 0;
  });
  return worst == Verdict::violated ? 2 : worst == Verdict::truncated ? 3 : 0;
}

int cmd_examples(const std::string& family, const std::vector<int>& params, std::uint64_t seed,
                 std::optional<std::uint32_t> characteristic, const std::string& out) {
  auto entry = generate_family(family, params, seed, characteristic);
  write_output(out, ideal_to_json(entry.ideal));
  return 0;
}

int cmd_resolve_k(const std::string& file, int n, std::optional<int> dmax) {
  auto ideal = read_ideal_file(file);
  return visit_field(ideal.field, [&](auto k) {
    using F = decltype(k);
    QuotientAlgebra<F> a(k, ideal.num_vars(), ideal.generators);
    auto p = preg_R_k(a, n, dmax, ideal.metadata.koszul);
    TorProfile profile;
    if (p.profile) {
      profile = *p.profile;
    } else {
      auto res = minimal_resolution(a, residue_field(a), n, dmax.value_or(n));
      profile = res.profile;
      if (!p.truncated)
        for (int i = 0; i <= n && i < static_cast<int>(profile.certified_bound.size()); ++i)
          profile.certified_bound[i] = ExtInt(i);
    }
    std::cout << profile.to_tsv();
    std::cout << "preg_" << n << "(k) = " << (p.truncated ? ">=" : "") << p.value.to_string() << "  (" << p.certificate
              << ")\n";
    return p.truncated ? 3 : 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syzygy degrees and Koszul homology products over standard graded algebras"};
  app.require_subcommand(1);

  std::string file, module_file, json_out, out;
  std::optional<int> imax, jmax, dmax;
  bool json = false;
  int row_cap = 8, heavy = 6;
  std::vector<std::string> checks;

  auto* betti = app.add_subcommand("betti", "graded Betti table of R (or of a module) over S");
  betti->add_option("ideal", file, "ideal file")->required()->check(CLI::ExistingFile);
  betti->add_option("--imax", imax, "largest homological degree");
  betti->add_option("--jmax", jmax, "largest internal degree");
  betti->add_option("--module", module_file, "module presentation file")->check(CLI::ExistingFile);
  betti->add_flag("--json", json, "JSON output");

  auto* audit = app.add_subcommand("audit", "compute invariants and check every inequality");
  audit->add_option("ideal", file, "ideal file")->required()->check(CLI::ExistingFile);
  audit->add_option("--checks", checks, "restrict to these check ids")->delimiter(',');
  audit->add_option("--imax", imax, "largest homological degree");
  audit->add_option("--row-cap", row_cap, "largest Betti row computed")->capture_default_str();
  audit->add_option("--heavy-max-vars", heavy, "run product/Tor checks up to this many variables")
      ->capture_default_str();
  audit->add_option("--json", json_out, "write the structured report here ('-' for stdout)");

  int q = 2, cols = 14, rows = 9;
  auto* tmpl = app.add_subcommand("template", "Betti template under N_q");
  tmpl->add_option("--q", q, "q >= 2")->capture_default_str();
  tmpl->add_option("--cols", cols, "number of columns")->capture_default_str();
  tmpl->add_option("--rows", rows, "number of rows")->capture_default_str();

  int n_max = 20;
  auto* good = app.add_subcommand("goodprimes", "exceptional prime for each n");
  good->add_option("n_max", n_max, "largest n")->required()->check(CLI::PositiveNumber);

  int sa = 1, sb = 1;
  std::string module = "R";
  auto* split = app.add_subcommand("splitcheck", "alpha o beta = C(a+b, a) on cycles");
  split->add_option("ideal", file, "ideal file")->required()->check(CLI::ExistingFile);
  split->add_option("--a", sa)->capture_default_str();
  split->add_option("--b", sb)->capture_default_str();
  split->add_option("--jmax", jmax, "largest internal degree");
  split->add_option("--module", module, "R or k")->capture_default_str();

  auto* examples = app.add_subcommand("examples", "example ideals");
  examples->require_subcommand(1);
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> characteristic;
  auto* gen = examples->add_subcommand("gen", "write the ideal file of a family member");
  gen->add_option("family", family,
                  "edge, veronese, segre, generic, gorenstein, ci, grassmannian, polynomial, power")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--char", characteristic, "field characteristic (0 or a prime)");
  gen->add_option("-o,--output", out, "output file (default stdout)");

  int n = 3;
  auto* rk = app.add_subcommand("resolve-k", "Tor^R(k, k) profile and preg_n(k)");
  rk->add_option("ideal", file, "ideal file")->required()->check(CLI::ExistingFile);
  rk->add_option("--n", n, "homological degree")->capture_default_str();
  rk->add_option("--dmax", dmax, "internal degree window");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*betti) return cmd_betti(file, imax, jmax, module_file, json);
    if (*audit) return cmd_audit(file, checks, imax, row_cap, heavy, json_out);
    if (*tmpl) return cmd_template(q, cols, rows);
    if (*good) return cmd_goodprimes(n_max);
    if (*split) return cmd_splitcheck(file, sa, sb, jmax, module);
    if (*gen) return cmd_examples(family, params, seed, characteristic, out);
    if (*rk) return cmd_resolve_k(file, n, dmax);
  } catch (const ParseError& err) {
    std::cerr << "parse error at " << err.what() << '\n';
    return 1;
  } catch (const CLI::Error& err) {
    return app.exit(err);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
