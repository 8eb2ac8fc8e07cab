#include "wci/series.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace wci {

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InvalidInput("a truncated series needs at least the constant coefficient");
  }
}

TruncatedSeries TruncatedSeries::one(std::size_t bound) {
  TruncatedSeries s(bound);
  s.coeffs_[0] = 1;
  return s;
}

void TruncatedSeries::multiply_cyclotomic(long k) {
  if (k < 1) {
    throw InvalidInput("cyclotomic factor 1 - t^k needs k >= 1");
  }
  const auto step = static_cast<std::size_t>(k);
  for (std::size_t m = coeffs_.size(); m-- > step;) {
    coeffs_[m] -= coeffs_[m - step];
  }
}

void TruncatedSeries::divide_cyclotomic(long k) {
  if (k < 1) {
    throw InvalidInput("cyclotomic factor 1 - t^k needs k >= 1");
  }
  const auto step = static_cast<std::size_t>(k);
  for (std::size_t m = step; m < coeffs_.size(); ++m) {
    coeffs_[m] += coeffs_[m - step];
  }
}

TruncatedSeries mul_cyclo(TruncatedSeries s, long k) {
  s.multiply_cyclotomic(k);
  return s;
}

TruncatedSeries div_cyclo(TruncatedSeries s, long k) {
  s.divide_cyclotomic(k);
  return s;
}

TruncatedSeries poincare_series(std::span<const long> weights, std::span<const long> degrees, std::size_t bound) {
  TruncatedSeries s = TruncatedSeries::one(bound);
  for (long a : weights) {
    s.divide_cyclotomic(a);
  }
  for (long d : degrees) {
    s.multiply_cyclotomic(d);
  }
  return s;
}

TruncatedSeries series_from_candidate(const Candidate& c, std::size_t bound) {
  return poincare_series(c.weights(), c.degrees(), bound);
}

TruncatedSeries series_from_formal_basket(const FormalBasket& fb, int alpha, std::size_t bound) {
  if (alpha != 1 && alpha != -1) {
    throw PreconditionError("formal-basket series are defined for amplitude +1 or -1");
  }
  TruncatedSeries s = TruncatedSeries::one(bound);
  const long last = static_cast<long>(bound);
  if (alpha == 1) {
    if (bound >= 1) {
      s[1] = 1 - fb.chi;
    }
    if (bound >= 2) {
      const std::vector<Integer> chis = integral_chis(fb, 2, last);
      for (std::size_t m = 2; m <= bound; ++m) {
        s[m] = chis[m - 2];
      }
    }
  } else if (bound >= 1) {
    // P_{-m} = chi(-mK) = -chi_{m+1}
    const std::vector<Integer> chis = integral_chis(fb, 2, last + 1);
    for (std::size_t m = 1; m <= bound; ++m) {
      s[m] = -chis[m - 1];
    }
  }
  return s;
}

RecoveredPresentation table_method(const TruncatedSeries& s, TableLimits limits) {
  if (s[0] != 1) {
    throw InvalidInput("the table method needs constant coefficient 1");
  }
  RecoveredPresentation out;
  TruncatedSeries residual = s;
  const std::size_t bound = s.bound();
  long largest = 0;
  for (std::size_t m = 1; m <= bound; ++m) {
    const Integer value = residual[m];
    if (value == 0) {
      continue;
    }
    const long k = static_cast<long>(m);
    if (value > 0) {
      if (value > Integer(limits.max_weights - out.weights.size())) {
        out.within_limits = false;
        return out;
      }
      const auto count = static_cast<std::size_t>(value);
      out.weights.insert(out.weights.end(), count, k);
      for (std::size_t i = 0; i < count; ++i) {
        residual.multiply_cyclotomic(k);
      }
    } else {
      if (-value > Integer(limits.max_degrees - out.degrees.size())) {
        out.within_limits = false;
        return out;
      }
      const auto count = static_cast<std::size_t>(-value);
      out.degrees.insert(out.degrees.end(), count, k);
      for (std::size_t i = 0; i < count; ++i) {
        residual.divide_cyclotomic(k);
      }
    }
    largest = k;
  }
  out.residual_clean = 2 * static_cast<std::size_t>(largest) <= bound;
  return out;
}

TruncatedSeries low_degree_series(const Tuple& t, int h) {
  if (h < 0 || h > t.horizon) {
    throw PreconditionError("low_degree_series needs 0 <= h <= tuple horizon");
  }
  TruncatedSeries s = TruncatedSeries::one(static_cast<std::size_t>(h));
  for (int i = 1; i <= h; ++i) {
    for (int k = 0; k < t.mu[i]; ++k) {
      s.divide_cyclotomic(i);
    }
    for (int k = 0; k < t.nu[i]; ++k) {
      s.multiply_cyclotomic(i);
    }
  }
  return s;
}

long bound_M(const FormalBasket& fb, int alpha) {
  if (alpha != 1 && alpha != -1) {
    throw PreconditionError("bound_M is defined for amplitude +1 or -1");
  }
  Rational s = 0;
  for (long c = 1; c <= 4; ++c) {
    const Rational base(4 + c + alpha, c);
    Rational power = 1;
    for (long k = 0; k < c; ++k) {
      power *= base;
    }
    s = std::max(s, power);
  }
  const long from_volume = static_cast<long>(ceil(1680 * s)) + alpha;
  return 2 * std::max(fb.basket.max_index(), from_volume);
}

bool max_weight_constraint(long a_max, long r_max, std::span<const long> degrees) {
  if (a_max < 2) {
    throw PreconditionError("max_weight_constraint needs a_max >= 2");
  }
  return a_max <= r_max || std::ranges::any_of(degrees, [a_max](long d) { return d % a_max == 0; });
}

void write_series(std::ostream& out, const TruncatedSeries& s) {
  for (std::size_t m = 0; m <= s.bound(); ++m) {
    out << m << ' ' << s[m] << '\n';
  }
}

TruncatedSeries read_series(std::istream& in) {
  std::vector<Integer> coeffs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) {
      tokens.push_back(tok);
    }
    if (tokens.empty()) {
      continue;
    }
    if (tokens.size() > 2) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected 'm c_m'");
    }
    try {
      if (tokens.size() == 2) {
        const Integer index(tokens[0]);
        if (index != Integer(coeffs.size())) {
          throw InvalidInput("line " + std::to_string(line_no) + ": expected index " +
                             std::to_string(coeffs.size()));
        }
      }
      coeffs.emplace_back(tokens.back());
    } catch (const std::runtime_error&) {
      throw InvalidInput("line " + std::to_string(line_no) + ": malformed integer");
    }
  }
  if (coeffs.empty()) {
    throw InvalidInput("series file has no coefficients");
  }
  return TruncatedSeries(std::move(coeffs));
}

}  // namespace wci
