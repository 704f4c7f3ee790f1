// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
//
//   acceptance <path-to-powershift-cli>

#include "powershift/pell.hpp"
#include "powershift/power_search.hpp"
#include "powershift/shift_square.hpp"
#include "powershift/square_products.hpp"
#include "powershift/syndetic.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace powershift;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Check&)> body;
};

std::string cli_path;

// 1. a(4a+3)^2 + 1 = (a+1)(4a+1)^2 and the Patil pair is the first family member.
void patil_identity(Check& c) {
  for (unsigned long a = 1; a <= 10'000; ++a) {
    const Integer A(a);
    const Integer lhs = A * (4 * A + 3) * (4 * A + 3) + 1;
    const Integer rhs = (A + 1) * (4 * A + 1) * (4 * A + 1);
    c.expect(lhs == rhs, "identity at a=" + std::to_string(a));
    c.expect(patil_witness(A) == WitnessFamily(ShiftInstance(A, 1)).next(),
             "first family member at a=" + std::to_string(a));
  }
  c.detail << "a=1..10000";
}

// 2. The first 10 witnesses for every nonsquare (a, k), a <= 100, k <= 20.
void shifted_square_families(Check& c) {
  std::size_t instances = 0;
  for (unsigned long a = 1; a <= 100; ++a) {
    for (unsigned long k = 1; k <= 20; ++k) {
      const ShiftInstance inst(a, k);
      if (inst.is_square()) continue;
      ++instances;
      for (const Witness& w : witness_family(inst, 10)) {
        c.expect(inst.a() * w.x * w.x + inst.k() == inst.shifted() * w.y * w.y,
                 "a=" + std::to_string(a) + " k=" + std::to_string(k));
      }
    }
  }
  const auto deep = witness_family(ShiftInstance(1, 1), 50);
  const Witness& w50 = deep.back();
  c.expect(w50.x * w50.x + 1 == 2 * w50.y * w50.y, "member 50 of (1,1)");
  c.detail << instances << " instances x 10 members; member 50 of (1,1) has "
           << w50.x.get_str().size() << " digits";
}

// 3. Fundamental solutions against a brute-force scan, stream and period checks.
void pell_correctness(Check& c) {
  for (unsigned long d = 2; d <= 50; ++d) {
    if (is_perfect_square(d)) continue;
    const auto scan = oracle::pell_scan(d, 1'000'000);
    const PellSolution f = fundamental_solution(d);
    c.expect(scan && f.u == Integer(static_cast<unsigned long>(scan->first)) &&
                 f.v == Integer(static_cast<unsigned long>(scan->second)),
             "brute force at d=" + std::to_string(d));
  }
  std::size_t checked = 0;
  for (unsigned long d = 2; d <= 1000; ++d) {
    if (is_perfect_square(d)) continue;
    ++checked;
    const auto sols = pell_solutions(d, 5);
    for (std::size_t i = 0; i < sols.size(); ++i) {
      c.expect(sols[i].u * sols[i].u - d * sols[i].v * sols[i].v == 1,
               "equation at d=" + std::to_string(d));
      if (i > 0) c.expect(sols[i].v > sols[i - 1].v, "increasing at d=" + std::to_string(d));
    }
    const auto cf = continued_fraction_sqrt(d);
    c.expect(cf.period.back() == 2 * oracle::isqrt(d), "period end at d=" + std::to_string(d));
  }
  c.detail << checked << " nonsquare d <= 1000";
}

// 4. Enumerated square products equal the brute-force scan on a <= 10^6.
void square_products_complete(Check& c) {
  const unsigned long limit = 1'000'000;
  for (unsigned long k = 1; k <= 100; ++k) {
    const Integer K(k);
    std::vector<Integer> brute;
    Integer a = 1;
    for (unsigned long i = 1; i <= limit; ++i, ++a) {
      if (is_square_product(a, K)) brute.push_back(a);
    }
    const auto certs = enumerate_square_products(K);
    std::vector<Integer> enumerated;
    for (const auto& cert : certs) {
      c.expect(cert.verify(K) && is_square_product(cert.a, K) == cert.root(),
               "certificate a=" + to_string(cert.a) + " k=" + std::to_string(k));
      if (cert.a <= limit) enumerated.push_back(cert.a);
    }
    c.expect(brute == enumerated, "set mismatch at k=" + std::to_string(k));
  }
  auto a_of = [](unsigned long k) {
    std::vector<Integer> out;
    for (const auto& cert : enumerate_square_products(k)) out.push_back(cert.a);
    return out;
  };
  c.expect(a_of(1).empty(), "k=1");
  c.expect(a_of(3) == std::vector<Integer>{1}, "k=3");
  c.expect(a_of(9) == std::vector<Integer>{3, 16}, "k=9");
  c.detail << "k=1..100, a<=10^6";
}

// 5. On gap-2 samples satisfying the hitting hypothesis no pair is a violation.
void dichotomy(Check& c) {
  std::size_t samples = 0;
  std::size_t found = 0;
  std::size_t outside = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const SyndeticSample s = sample_random(2, 10'000, seed);
    c.expect(verify_sample(s).valid(), "sample valid, seed " + std::to_string(seed));
    if (!verify_hitting(s, 1)) continue;
    ++samples;
    for (const auto& o : find_geometric_pairs(s, 1)) {
      c.expect(o.status == PairOutcome::Status::Found ||
                   o.status == PairOutcome::Status::OutOfHorizon,
               "seed " + std::to_string(seed) + " a=" + to_string(o.source));
      if (o.status == PairOutcome::Status::Found) {
        ++found;
        const auto& p = *o.pair;
        c.expect(p.product == p.base * p.ratio_root * p.ratio_root && p.ratio_root >= 2 &&
                     s.contains(p.base) && s.contains(p.product),
                 "witness shape");
      } else {
        ++outside;
      }
    }
  }
  c.expect(samples == 100, "all 100 samples satisfy the hitting hypothesis");
  const auto all = find_geometric_pairs(sample_all(200), 1);
  c.expect(!all.empty() && all[0].source == 1 && all[0].status == PairOutcome::Status::Found &&
               all[0].pair->branch == GeometricPairWitness::Branch::Direct &&
               all[0].pair->base == 1 && all[0].pair->product == 49,
           "all integers <= 200 gives {1, 49}");
  c.detail << samples << " samples, " << found << " Found, " << outside << " OutOfHorizon";
}

// 6. Search contains the Pell families; y-major scan equals the double loop.
void cross_module(Check& c) {
  std::size_t members = 0;
  for (unsigned long a = 1; a <= 10; ++a) {
    for (unsigned long k = 1; k <= 10; ++k) {
      const ShiftInstance inst(a, k);
      if (inst.is_square()) continue;
      const auto r = search_solutions({a, k, k, 2, 2, 10'000, 10'000});
      WitnessFamily family(inst);
      for (Witness w = family.next(); w.x <= 10'000 && w.y <= 10'000; w = family.next()) {
        ++members;
        const PowerSolution s{w.x, w.y};
        c.expect(std::find(r.solutions.begin(), r.solutions.end(), s) != r.solutions.end(),
                 "family member missing for a=" + std::to_string(a) + " k=" + std::to_string(k));
      }
      const auto small = search_solutions({a, k, k, 2, 2, 300, 300});
      const auto box = oracle::power_box(a, k, k, 2, 2, 300, 300);
      bool same = small.solutions.size() == box.size();
      for (std::size_t i = 0; same && i < box.size(); ++i) {
        same = small.solutions[i].x == box[i].first && small.solutions[i].y == box[i].second;
      }
      c.expect(same, "double loop mismatch for a=" + std::to_string(a) + " k=" + std::to_string(k));
    }
  }
  c.detail << members << " family members found in bounds 10^4";
}

// 7. Whenever gcd(a, ell) does not divide k the double loop finds nothing.
void obstruction_soundness(Check& c) {
  std::size_t cells = 0;
  for (unsigned long a = 1; a <= 20; ++a) {
    for (unsigned long k = 1; k <= 20; ++k) {
      for (unsigned long ell = 1; ell <= 20; ++ell) {
        const bool expected = k % oracle::gcd(a, ell) != 0;
        const PowerEquationQuery q{a, k, ell, 2, 2, 100, 100};
        c.expect(gcd_obstruction(q) == expected, "gcd_obstruction disagrees");
        if (!expected) continue;
        ++cells;
        for (unsigned long m : {2UL, 3UL}) {
          for (unsigned long n : {2UL, 3UL}) {
            c.expect(oracle::power_box(a, k, ell, m, n, 100, 100).empty(),
                     "solution in obstructed cell");
          }
        }
        c.expect(search_solutions(q).obstructed, "search not flagged obstructed");
      }
    }
  }
  c.detail << cells << " obstructed cells, m,n in {2,3}";
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = cli_path + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  return {pclose(pipe), out};
}

// 8. Byte-identical output across runs and worker counts.
void determinism(Check& c) {
  const std::vector<std::string> commands{
      "pell 2 --count 3",
      "pell 61 --count 5",
      "pell 4",
      "family --a 1 --k 1 --count 20",
      "family --a 1 --k 3",
      "family --a 5 --k 2 --count 3",
      "squares --k 9",
      "squares --k 3 --oracle 100000",
      "syndetic --gen all --horizon 200 --k 1",
      "syndetic --gen avoid-residue 0 3 --horizon 200 --k 1",
      "syndetic --gen odd --horizon 500 --k 2 --tries 3",
      "syndetic --gen random --seed 17 --horizon 2000 --k 1",
  };
  const std::vector<std::string> parallel{
      "search --a 1 --k 1 --ell 1 --m 2 --n 2 --bound 5000",
      "search --a 2 --k 3 --ell 4 --m 2 --n 2",
      "search --a 3 --k 5 --ell 2 --m 3 --n 2 --bound 3000 --nontrivial",
      "survey --a 1..2 --k 1..2 --ell 1..2 --m 2 --n 2 --bound 200",
      "survey --a 1..4 --k 1..4 --ell 1..4 --m 2 --n 3 --bound 500",
  };
  std::size_t runs = 0;
  for (const char* format : {"text", "json"}) {
    const std::string pre = std::string("--format ") + format + " ";
    for (const auto& cmd : commands) {
      const auto first = run_cli(pre + cmd);
      const auto second = run_cli(pre + cmd);
      runs += 2;
      c.expect(!first.second.empty() && first == second, "unstable: " + cmd);
    }
    for (const auto& cmd : parallel) {
      const auto base = run_cli(pre + cmd + " --workers 1");
      ++runs;
      c.expect(!base.second.empty(), "no output: " + cmd);
      for (const char* workers : {"1", "2", "5", "16"}) {
        c.expect(run_cli(pre + cmd + " --workers " + workers) == base,
                 "worker-dependent: " + cmd + " --workers " + workers);
        ++runs;
      }
    }
  }
  c.detail << runs << " CLI runs";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-powershift-cli>\n";
    return 2;
  }
  cli_path = argv[1];

  const std::vector<Criterion> criteria{
      {1, "Patil identity and first family member, a <= 10^4", 1.0, patil_identity},
      {2, "witness families exact for a <= 100, k <= 20", 30.0, shifted_square_families},
      {3, "Pell fundamental solutions, streams and periods", 60.0, pell_correctness},
      {4, "square products complete against brute force", 120.0, square_products_complete},
      {5, "syndetic dichotomy on seeded gap-2 samples", 30.0, dichotomy},
      {6, "search contains Pell families; scan equals double loop", 60.0, cross_module},
      {7, "gcd obstruction soundness", 60.0, obstruction_soundness},
      {8, "CLI output byte-stable across runs and worker counts", 120.0, determinism},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    cr.body(c);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs <= cr.budget_seconds;
    if (!in_budget) c.detail << "over budget; ";
    const bool pass = c.ok && in_budget;
    failures += pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.2fs / %.0fs) %s\n", pass ? "PASS" : "FAIL", cr.id,
                cr.name, secs, cr.budget_seconds, c.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
