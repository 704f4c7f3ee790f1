#include "powershift/power_search.hpp"

#include <algorithm>
#include <thread>

namespace powershift {

void PowerEquationQuery::validate() const {
  require_positive(a, "a");
  require_positive(k, "k");
  require_positive(ell, "ell");
  require_positive(x_bound, "x bound");
  require_positive(y_bound, "y bound");
  if (m < 2 || n < 2) throw std::invalid_argument("exponents m and n must be at least 2");
  if (min_value != 1 && min_value != 2) {
    throw std::invalid_argument("minimum x, y must be 1 or 2");
  }
  // Headroom so the striped loop counter cannot wrap.
  if (!y_bound.fits_uint_p()) throw std::invalid_argument("y bound too large to scan");
}

bool gcd_obstruction(const PowerEquationQuery& q) {
  return !mpz_divisible_p(q.k.get_mpz_t(), gcd(q.a, q.ell).get_mpz_t());
}

bool satisfies(const PowerEquationQuery& q, const PowerSolution& s) {
  return q.a * pow(s.x, q.m) + q.k == (q.a + q.ell) * pow(s.y, q.n);
}

namespace {

void scan_stripe(const PowerEquationQuery& q, unsigned long first, unsigned long stride,
                 std::vector<PowerSolution>& out) {
  const Integer shifted = q.a + q.ell;
  const unsigned long last = q.y_bound.get_ui();
  Integer w;
  Integer quotient;
  Integer root;
  for (unsigned long y = first; y <= last; y += stride) {
    mpz_ui_pow_ui(w.get_mpz_t(), y, q.n);
    w *= shifted;
    w -= q.k;
    if (sgn(w) <= 0) continue;
    if (!mpz_divisible_p(w.get_mpz_t(), q.a.get_mpz_t())) continue;
    mpz_divexact(quotient.get_mpz_t(), w.get_mpz_t(), q.a.get_mpz_t());
    if (mpz_root(root.get_mpz_t(), quotient.get_mpz_t(), q.m) == 0) continue;
    if (root < q.min_value || root > q.x_bound) continue;
    out.push_back({root, Integer(y)});
  }
}

}  // namespace

SearchResult search_solutions(const PowerEquationQuery& q, SearchOptions options) {
  q.validate();
  SearchResult result;
  if (gcd_obstruction(q)) {
    result.obstructed = true;
    result.exhausted = true;
    return result;
  }
  const unsigned long first = q.min_value.get_ui();
  const unsigned long last = q.y_bound.get_ui();
  const unsigned long span = last >= first ? last - first + 1 : 0;
  const unsigned workers =
      static_cast<unsigned>(std::clamp<unsigned long>(options.workers, 1, std::max(1UL, span)));

  // Stripe s takes y = first + s, first + s + workers, ...; merged by sorting.
  std::vector<std::vector<PowerSolution>> partial(workers);
  if (workers == 1) {
    scan_stripe(q, first, 1, partial[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned s = 0; s < workers; ++s) {
      threads.emplace_back([&, s] { scan_stripe(q, first + s, workers, partial[s]); });
    }
  }
  for (auto& part : partial) {
    result.solutions.insert(result.solutions.end(), std::make_move_iterator(part.begin()),
                            std::make_move_iterator(part.end()));
  }
  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const PowerSolution& lhs, const PowerSolution& rhs) { return lhs.y < rhs.y; });
  result.exhausted = true;
  return result;
}

namespace {

void validate_range(const IntegerRange& r, const char* name) {
  require_positive(r.lo, name);
  if (r.hi < r.lo) throw std::invalid_argument(std::string(name) + " range is empty");
}

}  // namespace

std::vector<SurveyRow> survey(const SurveyGrid& grid, SearchOptions options) {
  validate_range(grid.a, "a");
  validate_range(grid.k, "k");
  validate_range(grid.ell, "ell");
  std::vector<SurveyRow> rows;
  for (Integer a = grid.a.lo; a <= grid.a.hi; ++a) {
    for (Integer k = grid.k.lo; k <= grid.k.hi; ++k) {
      for (Integer ell = grid.ell.lo; ell <= grid.ell.hi; ++ell) {
        PowerEquationQuery q{a, k, ell, grid.m, grid.n, grid.x_bound, grid.y_bound,
                             grid.min_value};
        const SearchResult r = search_solutions(q, options);
        rows.push_back({a, k, ell, grid.m, grid.n, r.solutions.size(), r.obstructed,
                        r.exhausted});
      }
    }
  }
  return rows;
}

}  // namespace powershift
