#include "wci/screen.hpp"

#include <algorithm>
#include <numeric>

namespace wci {

namespace {

long count_divisible(const std::vector<long>& values, long h) {
  return std::ranges::count_if(values, [h](long v) { return v % h == 0; });
}

CheckResult pass(std::string name) { return CheckResult{std::move(name), true, {}}; }

CheckResult fail(std::string name, std::string witness) {
  return CheckResult{std::move(name), false, std::move(witness)};
}

void require_threefold(const Candidate& c, const char* what) {
  if (c.dim() != 3) {
    throw PreconditionError(std::string(what) + " is stated for threefolds only");
  }
}

// Shared by the isolated and terminal checks. Every subset of weights with gcd g
// is contained in S_h = {weights divisible by h} for each h | g, and the
// divisibility counts only weaken as h shrinks, so testing every h against the
// whole of S_h is equivalent to testing every subset against its exact gcd.
std::string isolated_violation(const Candidate& c) {
  const long max_weight = c.weights().back();
  for (long h = 2; h <= max_weight; ++h) {
    const long w = count_divisible(c.weights(), h);
    if (w == 0) {
      continue;
    }
    const long dcount = count_divisible(c.degrees(), h);
    if (w > c.codim() + 1) {
      return std::to_string(w) + " weights share the factor " + std::to_string(h) +
             " but at most c+1 = " + std::to_string(c.codim() + 1) + " may";
    }
    if (dcount < w - 1) {
      return std::to_string(w) + " weights share the factor " + std::to_string(h) +
             " which divides only " + std::to_string(dcount) + " degrees";
    }
  }
  return {};
}

}  // namespace

bool ScreenReport::passed() const {
  return std::ranges::all_of(checks, [](const CheckResult& r) { return r.passed; });
}

const CheckResult* ScreenReport::find(std::string_view name) const {
  const auto it = std::ranges::find(checks, name, &CheckResult::name);
  return it == checks.end() ? nullptr : &*it;
}

bool is_linear_cone(const Candidate& c) {
  return std::ranges::any_of(c.weights(), [&](long a) {
    return std::ranges::binary_search(c.degrees(), a);
  });
}

bool check_wps_wellformed(const Candidate& c) {
  const auto& w = c.weights();
  for (std::size_t skip = 0; skip < w.size(); ++skip) {
    long g = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != skip) {
        g = std::gcd(g, w[i]);
      }
    }
    if (g != 1) {
      return false;
    }
  }
  return true;
}

bool check_degree_weight_order(const Candidate& c) {
  for (long j = 1; j <= c.codim(); ++j) {
    if (c.d(j) <= c.a(j + c.dim())) {
      return false;
    }
  }
  return true;
}

bool check_codim_bound(const Candidate& c) {
  if (c.amplitude() >= 0) {
    return c.codim() <= c.dim() + c.amplitude() + 1;
  }
  return c.codim() <= c.dim();
}

CheckResult check_quasismooth_divisibility(const Candidate& c) {
  const long n = static_cast<long>(c.weights().size()) - 1;
  const long d1 = c.d(1);
  for (long t = 0; t <= n; ++t) {
    const long at = c.a(t);
    if (at <= d1) {
      continue;
    }
    const bool divides = std::ranges::any_of(c.degrees(), [at](long d) { return d % at == 0; });
    if (!divides) {
      return fail(kQuasismoothDivisibility, "a_" + std::to_string(t) + " = " + std::to_string(at) +
                                                " exceeds d_1 = " + std::to_string(d1) +
                                                " but divides no degree");
    }
  }
  const DeltaVector dv = deltas(c);
  if (c.a(n) > d1 && dv.deltas.back() < c.a(n)) {
    return fail(kQuasismoothDivisibility, "a_n = " + std::to_string(c.a(n)) + " exceeds d_1 but delta_c = " +
                                              std::to_string(dv.deltas.back()) + " < a_n");
  }
  if (c.codim() >= c.dim() + 1) {
    for (long j = 0; j <= c.dim(); ++j) {
      const long delta = dv.deltas[static_cast<std::size_t>(c.codim() - j - 1)];
      if (delta < c.a(c.dim() - j)) {
        return fail(kQuasismoothDivisibility,
                    "delta_" + std::to_string(c.codim() - j) + " = " + std::to_string(delta) + " < a_" +
                        std::to_string(c.dim() - j) + " = " + std::to_string(c.a(c.dim() - j)));
      }
    }
  }
  return pass(kQuasismoothDivisibility);
}

CheckResult check_isolated_divisibility(const Candidate& c) {
  require_threefold(c, "the isolated-singularity divisibility check");
  std::string witness = isolated_violation(c);
  return witness.empty() ? pass(kIsolatedSingularities) : fail(kIsolatedSingularities, std::move(witness));
}

CheckResult check_terminal_divisibility(const Candidate& c) {
  require_threefold(c, "the terminal-singularity divisibility check");
  if (std::string witness = isolated_violation(c); !witness.empty()) {
    return fail(kTerminalSingularities, "not isolated: " + witness);
  }
  const long alpha = c.amplitude();
  const long max_weight = c.weights().back();
  for (long h = 2; h <= max_weight; ++h) {
    const long w = count_divisible(c.weights(), h);
    if (w == 0) {
      continue;
    }
    const long dcount = count_divisible(c.degrees(), h);
    const long largest = std::min(w, c.codim() + 1);
    if (dcount >= largest) {
      continue;
    }
    // Here dcount == largest - 1; a witness weight outside the chosen set is
    // either a non-multiple of h with a_m + alpha = 0 mod h, or, when h | alpha,
    // a leftover multiple of h.
    const bool outside_non_multiple = std::ranges::any_of(c.weights(), [&](long a) {
      return a % h != 0 && (a + alpha) % h == 0;
    });
    const bool outside_multiple = alpha % h == 0 && w > largest;
    if (!outside_non_multiple && !outside_multiple) {
      return fail(kTerminalSingularities, std::to_string(largest) + " weights share the factor " +
                                              std::to_string(h) + " which divides only " +
                                              std::to_string(dcount) + " degrees and no other weight a_m has " +
                                              std::to_string(h) + " | a_m + " + std::to_string(alpha));
    }
  }
  return pass(kTerminalSingularities);
}

bool check_cy_product(const Candidate& c) {
  if (c.amplitude() != 0) {
    throw PreconditionError("the weight-product test needs amplitude 0");
  }
  require_threefold(c, "the weight-product test");
  Integer pa = 1;
  Integer pd = 1;
  for (long a : c.weights()) {
    pa *= a;
  }
  for (long d : c.degrees()) {
    pd *= d;
  }
  return pd % pa == 0;
}

LambdaScreen lambda_screen(const Candidate& c) {
  if (c.amplitude() < 0) {
    throw PreconditionError("the lambda bound needs amplitude >= 0");
  }
  if (!check_degree_weight_order(c)) {
    throw PreconditionError("the lambda bound needs d_j > a_{j+dim} for every j");
  }
  LambdaScreen out;
  out.lambda_sum = 0;
  for (long j = 1; j <= c.codim(); ++j) {
    out.lambda_sum += Rational(c.d(j), c.a(j + c.dim()));
  }
  out.limit = c.codim() + c.amplitude() + c.dim() + 1;
  out.passed = out.lambda_sum <= out.limit;

  Rational base(out.limit, c.codim());
  Rational power = 1;
  for (long k = 0; k < c.codim(); ++k) {
    power *= base;
  }
  Integer low_weights = 1;
  for (long i = 0; i <= c.dim(); ++i) {
    low_weights *= c.a(i);
  }
  out.volume_bound = power / Rational(low_weights);
  return out;
}

ScreenReport necessary_screen(const Candidate& c) {
  ScreenReport report{c, {}};
  auto& checks = report.checks;

  if (is_linear_cone(c)) {
    checks.push_back(fail(kNotLinearCone, "some degree equals some weight"));
  } else {
    checks.push_back(pass(kNotLinearCone));
  }
  checks.push_back(check_wps_wellformed(c) ? pass(kWpsWellFormed)
                                           : fail(kWpsWellFormed, "dropping some weight leaves gcd > 1"));
  const bool ordered = check_degree_weight_order(c);
  checks.push_back(ordered ? pass(kDegreeExceedsWeight)
                           : fail(kDegreeExceedsWeight, "some d_j <= a_{j+dim}"));
  checks.push_back(check_codim_bound(c)
                       ? pass(kCodimensionBound)
                       : fail(kCodimensionBound, "c = " + std::to_string(c.codim()) +
                                                     " too large for dim " + std::to_string(c.dim()) +
                                                     " and amplitude " + std::to_string(c.amplitude())));
  checks.push_back(check_quasismooth_divisibility(c));
  if (c.dim() == 3) {
    checks.push_back(check_isolated_divisibility(c));
    checks.push_back(check_terminal_divisibility(c));
    if (c.amplitude() == 0) {
      checks.push_back(check_cy_product(c) ? pass(kCyWeightProduct)
                                           : fail(kCyWeightProduct, "prod a_i does not divide prod d_j"));
    }
  }
  if (c.amplitude() >= 0) {
    if (!ordered) {
      checks.push_back(fail(kLambdaBound, "undefined unless d_j > a_{j+dim}"));
    } else {
      const LambdaScreen ls = lambda_screen(c);
      checks.push_back(ls.passed ? pass(kLambdaBound)
                                 : fail(kLambdaBound, "sum lambda_j = " + to_string(ls.lambda_sum) + " > " +
                                                          std::to_string(ls.limit)));
    }
  }
  return report;
}

}  // namespace wci
