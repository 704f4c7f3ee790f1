// powershift: command-line front end.
//
//   powershift pell 2 --count 3
//   powershift family --a 1 --k 1 --count 2
//   powershift squares --k 9 [--oracle 1000000]
//   powershift syndetic (--gen NAME [ARGS...] --horizon H | --file PATH) --k 1
//   powershift search --a 1 --k 1 --ell 1 --m 2 --n 2 --bound 100
//   powershift survey --a 1..2 --k 1..2 --ell 1..2 --m 2 --n 2 --bound 200
//
// Exit status: 0 success, 1 domain error, 2 usage error.

#include "powershift/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace powershift;

namespace {

struct Common {
  std::string format = "text";
  unsigned workers = 1;
};

int emit(const CommandResult& r, const Common& common) {
  std::cout << (common.format == "json" ? render_json(r.envelope) : render_text(r.envelope));
  if (r.envelope.error && common.format != "json") std::cerr << "error: " << *r.envelope.error << "\n";
  return r.exit_code;
}

Integer integer_arg(const std::string& text, const char* name) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(name, "not an integer: " + text);
  }
}

SyndeticSample build_sample(const std::vector<std::string>& gen, const std::string& file,
                            const std::optional<std::string>& horizon_text,
                            const std::optional<std::string>& gap_text, std::uint64_t seed,
                            SampleSource& source) {
  const std::optional<Integer> horizon =
      horizon_text ? std::optional(integer_arg(*horizon_text, "--horizon")) : std::nullopt;
  if (!file.empty()) {
    source.kind = "file";
    source.parameters.emplace_back("file", file);
    SyndeticSample s;
    s.elements = read_set_file(file);
    if (s.elements.empty()) throw IngestionError("set file has no elements: " + file);
    s.gap_bound = gap_text ? integer_arg(*gap_text, "--gap-bound") : Integer(2);
    s.horizon = horizon ? *horizon : s.elements.back();
    return s;
  }
  if (!horizon) throw CLI::ValidationError("--horizon", "required with --gen");
  const std::string& name = gen.front();
  source.kind = name;
  auto expect_args = [&](std::size_t n) {
    if (gen.size() != n + 1) {
      throw CLI::ValidationError("--gen", name + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  if (name == "all") {
    expect_args(0);
    return sample_all(*horizon);
  }
  if (name == "odd") {
    expect_args(0);
    return sample_odd(*horizon);
  }
  if (name == "avoid-residue") {
    expect_args(2);
    source.parameters.emplace_back("residue", gen[1]);
    source.parameters.emplace_back("modulus", gen[2]);
    return sample_avoid_residue(integer_arg(gen[1], "residue"), integer_arg(gen[2], "modulus"),
                                *horizon);
  }
  if (name == "random") {
    expect_args(0);
    const Integer gap = gap_text ? integer_arg(*gap_text, "--gap-bound") : Integer(2);
    source.parameters.emplace_back("seed", std::to_string(seed));
    return sample_random(gap, *horizon, seed);
  }
  throw CLI::ValidationError("--gen", "unknown generator: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solution families for a x^2 + k = (a + k) y^2 and related searches"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string pell_d;
  std::size_t pell_count = 5;
  auto* pell = app.add_subcommand("pell", "Solve u^2 - d v^2 = 1");
  pell->add_option("d", pell_d, "Non-square d >= 2")->required();
  pell->add_option("--count", pell_count, "Number of solutions")->capture_default_str();

  std::string fam_a;
  std::string fam_k;
  std::size_t fam_count = 5;
  auto* family = app.add_subcommand("family", "Witnesses of a x^2 + k = (a + k) y^2");
  family->add_option("--a", fam_a)->required();
  family->add_option("--k", fam_k)->required();
  family->add_option("--count", fam_count)->capture_default_str();

  std::string sq_k;
  std::optional<std::string> sq_oracle;
  auto* squares = app.add_subcommand("squares", "All a with a (a + k) a perfect square");
  squares->add_option("--k", sq_k)->required();
  squares->add_option("--oracle", sq_oracle, "Cross-check by brute force up to this a");

  std::vector<std::string> syn_gen;
  std::string syn_file;
  std::string syn_k;
  std::optional<std::string> syn_horizon;
  std::optional<std::string> syn_gap;
  std::uint64_t syn_seed = 1;
  std::size_t syn_tries = 1;
  auto* syndetic = app.add_subcommand("syndetic", "Find {a, a x^2} pairs in a gap-bounded set");
  auto* gen_opt = syndetic->add_option("--gen", syn_gen,
                                       "Generator: all | odd | avoid-residue R M | random")
                      ->expected(1, 3);
  auto* file_opt = syndetic->add_option("--file", syn_file, "Set file, one integer per line");
  gen_opt->excludes(file_opt);
  syndetic->add_option("--k", syn_k)->required();
  syndetic->add_option("--horizon", syn_horizon);
  syndetic->add_option("--gap-bound", syn_gap, "Gap bound (default 2)");
  syndetic->add_option("--seed", syn_seed)->capture_default_str();
  syndetic->add_option("--tries", syn_tries, "Family members tried per pair")
      ->capture_default_str();

  std::string s_a;
  std::string s_k;
  std::string s_ell;
  unsigned long s_m = 2;
  unsigned long s_n = 2;
  std::string s_bound = "100";
  std::optional<std::string> s_xb;
  std::optional<std::string> s_yb;
  bool s_nontrivial = false;
  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--a", s_a)->required();
    cmd->add_option("--k", s_k)->required();
    cmd->add_option("--ell", s_ell)->required();
    cmd->add_option("--m", s_m)->capture_default_str();
    cmd->add_option("--n", s_n)->capture_default_str();
    cmd->add_option("--bound", s_bound, "Bound for both x and y")->capture_default_str();
    cmd->add_option("--x-bound", s_xb);
    cmd->add_option("--y-bound", s_yb);
    cmd->add_flag("--nontrivial", s_nontrivial, "Restrict to x >= 2, y >= 2");
    cmd->add_option("--workers", common.workers, "Scan threads; output is independent of it")
        ->capture_default_str();
  };
  auto* search = app.add_subcommand("search", "Bounded search for a x^m + k = (a + ell) y^n");
  add_search_flags(search);
  auto* surv = app.add_subcommand("survey", "Solution counts over a grid of (a, k, ell)");
  add_search_flags(surv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::usage_error;
  }

  try {
    if (*pell) return emit(cmd_pell(integer_arg(pell_d, "d"), pell_count), common);
    if (*family) {
      return emit(cmd_family(integer_arg(fam_a, "--a"), integer_arg(fam_k, "--k"), fam_count),
                  common);
    }
    if (*squares) {
      std::optional<Integer> limit;
      if (sq_oracle) limit = integer_arg(*sq_oracle, "--oracle");
      return emit(cmd_squares(integer_arg(sq_k, "--k"), limit), common);
    }
    if (*syndetic) {
      if (syn_gen.empty() && syn_file.empty()) {
        throw CLI::ValidationError("syndetic", "one of --gen or --file is required");
      }
      SampleSource source;
      SyndeticSample sample;
      try {
        sample = build_sample(syn_gen, syn_file, syn_horizon, syn_gap, syn_seed, source);
      } catch (const IngestionError& e) {
        return emit(command_error("syndetic", {{"source", source.kind}}, e.what(),
                                  exit_code::domain_error),
                    common);
      }
      return emit(cmd_syndetic(sample, source, integer_arg(syn_k, "--k"), syn_tries), common);
    }
    const Integer bound = integer_arg(s_bound, "--bound");
    const Integer xb = s_xb ? integer_arg(*s_xb, "--x-bound") : bound;
    const Integer yb = s_yb ? integer_arg(*s_yb, "--y-bound") : bound;
    const Integer min_value = s_nontrivial ? 2 : 1;
    const SearchOptions options{common.workers};
    if (*search) {
      const PowerEquationQuery q{integer_arg(s_a, "--a"), integer_arg(s_k, "--k"),
                                 integer_arg(s_ell, "--ell"), s_m, s_n, xb, yb, min_value};
      return emit(cmd_search(q, options), common);
    }
    const SurveyGrid grid{parse_range(s_a), parse_range(s_k), parse_range(s_ell), s_m, s_n,
                          xb, yb, min_value};
    return emit(cmd_survey(grid, options), common);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::usage_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::usage_error;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::domain_error;
  }
}
