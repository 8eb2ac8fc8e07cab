#include "wci/classify.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "wci/numeric.hpp"

namespace wci {

namespace {

long to_long(const Integer& v) { return static_cast<long>(v); }

// The CY search: the four smallest weights have product <= floor(((c+4)/c)^c).
long cy_product_cap(long c) {
  Rational base(c + 4, c);
  Rational power = 1;
  for (long k = 0; k < c; ++k) {
    power *= base;
  }
  return to_long(numerator(power) / denominator(power));
}

// Calls visit on every nondecreasing sequence lo <= v_1 <= ... <= v_k <= hi.
void for_each_nondecreasing(long k, long lo, long hi, std::vector<long>& seq,
                            const std::function<void()>& visit) {
  if (k == 0) {
    visit();
    return;
  }
  for (long v = lo; v <= hi; ++v) {
    seq.push_back(v);
    for_each_nondecreasing(k - 1, v, hi, seq, visit);
    seq.pop_back();
  }
}

// Compositions of total into parts >= 1.
void for_each_composition(long parts, long total, std::vector<long>& seq, const std::function<void()>& visit) {
  if (parts == 1) {
    seq.push_back(total);
    visit();
    seq.pop_back();
    return;
  }
  for (long first = 1; first <= total - (parts - 1); ++first) {
    seq.push_back(first);
    for_each_composition(parts - 1, total - first, seq, visit);
    seq.pop_back();
  }
}

bool tuple_is_admissible(const Tuple& t, int alpha) {
  const int h = horizon_for(alpha);
  if (t.horizon != h || t.mu[0] != 0 || t.nu[0] != 0 || t.nu[1] != 0) {
    return false;
  }
  for (int i = 1; i <= Tuple::kMaxHorizon; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (t.mu[k] < 0 || t.nu[k] < 0 || (t.mu[k] > 0 && t.nu[k] > 0) || (i > h && (t.mu[k] | t.nu[k]) != 0)) {
      return false;
    }
  }
  const int weight_cap = alpha < 0 ? 7 : 9;
  const int degree_cap = alpha < 0 ? 3 : 5;
  if (t.weight_count() > weight_cap || t.degree_count() > degree_cap) {
    return false;
  }
  if (alpha > 0 && t.degree_count() > 0) {
    int mu_sum = t.mu[1];
    int nu_sum = 0;
    for (std::size_t s = 2; s <= static_cast<std::size_t>(h); ++s) {
      mu_sum += t.mu[s];
      nu_sum += t.nu[s];
      if (nu_sum > mu_sum + 4) {
        return false;
      }
    }
  }
  return true;
}

// Initial basket: the (1,2), (1,3), (1,4) counts plus the chosen indices >= 5.
Basket initial_points(long n12, long n13, long n14, const std::vector<long>& large) {
  std::vector<Orbifold> pts;
  pts.insert(pts.end(), static_cast<std::size_t>(n12), Orbifold{1, 2});
  pts.insert(pts.end(), static_cast<std::size_t>(n13), Orbifold{1, 3});
  pts.insert(pts.end(), static_cast<std::size_t>(n14), Orbifold{1, 4});
  for (long r : large) {
    pts.push_back(Orbifold{1, r});
  }
  return Basket(std::move(pts));
}

Rational c2_term(long r) { return Rational(r) - Rational(1, r); }
Rational k3_term(long r) { return Rational(r - 1, r); }

struct WorkerResult {
  std::vector<ClassificationRecord> records;
  RunStatistics stats;
  std::vector<std::string> violations;
};

void merge_records(std::map<Candidate, ClassificationRecord>& merged, std::vector<ClassificationRecord>& records) {
  for (ClassificationRecord& rec : records) {
    auto [it, inserted] = merged.try_emplace(rec.candidate, rec);
    if (!inserted) {
      ClassificationRecord& kept = it->second;
      kept.provenance.insert(kept.provenance.end(), rec.provenance.begin(), rec.provenance.end());
      if (rec.formal_basket && (!kept.formal_basket || *rec.formal_basket < *kept.formal_basket)) {
        kept.formal_basket = rec.formal_basket;
      }
    }
  }
}

}  // namespace

std::vector<ClassificationRecord> classify_cy() {
  std::vector<ClassificationRecord> out;
  std::set<Candidate> seen;
  for (long c = 1; c <= 4; ++c) {
    const long cap = cy_product_cap(c);
    for (long a0 = 1; a0 <= cap; ++a0) {
      for (long a1 = a0; a0 * a1 <= cap; ++a1) {
        for (long a2 = a1; a0 * a1 * a2 <= cap; ++a2) {
          for (long a3 = a2; a0 * a1 * a2 * a3 <= cap; ++a3) {
            // The largest weight divides a degree, so a_n <= delta_c <= delta.
            const long delta = a0 + a1 + a2 + a3;
            std::vector<long> upper;
            for_each_nondecreasing(c, a3, delta, upper, [&] {
              std::vector<long> parts;
              for_each_composition(c, delta, parts, [&] {
                std::vector<long> degrees(static_cast<std::size_t>(c));
                for (std::size_t j = 0; j < degrees.size(); ++j) {
                  degrees[j] = upper[j] + parts[j];
                  if (j > 0 && degrees[j] < degrees[j - 1]) {
                    return;
                  }
                }
                std::vector<long> weights{a0, a1, a2, a3};
                weights.insert(weights.end(), upper.begin(), upper.end());
                const Candidate cand = Candidate::normalize(std::move(weights), std::move(degrees));
                if (seen.contains(cand)) {
                  return;
                }
                ScreenReport screen = necessary_screen(cand);
                if (!screen.passed()) {
                  return;
                }
                seen.insert(cand);
                out.push_back({cand, std::nullopt, std::move(screen), true, {"cy:direct"}});
              });
            });
          }
        }
      }
    }
  }
  std::ranges::sort(out, {}, &ClassificationRecord::candidate);
  return out;
}

int horizon_for(int alpha) {
  if (alpha == -1) {
    return 5;
  }
  if (alpha == 1) {
    return 6;
  }
  throw PreconditionError("tuples are defined for amplitude -1 or +1");
}

void for_each_tuple(int alpha, const std::function<void(const Tuple&)>& visit) {
  const int h = horizon_for(alpha);
  const int weight_cap = alpha < 0 ? 7 : 9;
  const int degree_cap = alpha < 0 ? 3 : 5;
  Tuple t;
  t.horizon = h;
  std::function<void(int, int, int)> step = [&](int i, int weights_left, int degrees_left) {
    if (i > h) {
      if (tuple_is_admissible(t, alpha)) {
        visit(t);
      }
      return;
    }
    const auto k = static_cast<std::size_t>(i);
    for (int m = 0; m <= weights_left; ++m) {
      t.mu[k] = m;
      const int nu_max = (m > 0 || i == 1) ? 0 : degrees_left;
      for (int n = 0; n <= nu_max; ++n) {
        t.nu[k] = n;
        step(i + 1, weights_left - m, degrees_left - n);
      }
      t.nu[k] = 0;
    }
    t.mu[k] = 0;
  };
  step(1, weight_cap, degree_cap);
}

std::vector<Tuple> enumerate_tuples(int alpha) {
  std::vector<Tuple> out;
  for_each_tuple(alpha, [&](const Tuple& t) { out.push_back(t); });
  std::ranges::sort(out);
  return out;
}

ChiValues tuple_to_chis(const Tuple& t, int alpha) {
  const int h = horizon_for(alpha);
  if (t.horizon != h) {
    throw PreconditionError("tuple horizon does not match the amplitude");
  }
  const TruncatedSeries s = low_degree_series(t, h);
  ChiValues x;
  if (alpha < 0) {
    x.chi = 1;
    x.chi2 = -to_long(s[1]);
    x.chi3 = -to_long(s[2]);
    x.chi4 = -to_long(s[3]);
    x.chi5 = -to_long(s[4]);
    x.chi6 = -to_long(s[5]);
  } else {
    x.chi = 1 - to_long(s[1]);
    x.chi2 = to_long(s[2]);
    x.chi3 = to_long(s[3]);
    x.chi4 = to_long(s[4]);
    x.chi5 = to_long(s[5]);
    x.chi6 = to_long(s[6]);
  }
  return x;
}

TableLimits table_limits_for(int alpha) {
  // Generous caps: the screen, not the recovery, enforces the codimension bound.
  (void)alpha;
  return TableLimits{12, 8};
}

BasketSearch candidate_formal_baskets(const Tuple& t, int alpha) {
  BasketSearch out;
  const auto prune = [&](const std::string& why, long count = 1) { out.pruned_by[why] += count; };
  const ChiValues x = tuple_to_chis(t, alpha);
  const InitialCounts n0 = n0_from_chis(x);
  if (n0.n12 < 0 || n0.n13 < 0 || n0.n14_plus_sigma5 < 0) {
    prune("initial_counts_negative");
    return out;
  }
  const Sigma5Bounds range = sigma5_bounds(x);
  if (range.upper < range.lower) {
    prune("sigma5_range_empty");
    return out;
  }

  const long pg = 1 - x.chi;
  const std::vector<long> plurigenera{x.chi2, x.chi3, x.chi4, x.chi5, x.chi6};
  long cap = 24;
  out.bound = "fano:c2";
  if (alpha > 0) {
    if (!pluri_growth_filter(plurigenera, pg)) {
      prune("plurigenus_growth");
      return out;
    }
    const Rational margin = gt_volume_margin(pg, x.chi2, x.chi3, x.chi5, range.lower);
    if (margin <= 0) {
      prune("volume_margin");
      return out;
    }
    if (range.upper == 0) {
      cap = 4;
      out.bound = "gt:sigma5-zero";
    } else {
      std::optional<long> index_cap;
      std::optional<long> volume_cap;
      const bool has_degree = t.degree_count() > 0;
      if (t.weight_count() >= 5 || has_degree) {
        index_cap = 31;
      }
      if (margin < Rational(1, 4)) {
        const Rational limit = 1 / (Rational(1, 4) - margin);
        volume_cap = to_long(numerator(limit) / denominator(limit));
      }
      if (!index_cap && !volume_cap) {
        out.violation = "tuple " + t.to_string() + ": no bound on the indices of the initial basket";
        return out;
      }
      if (volume_cap && (!index_cap || *volume_cap < *index_cap)) {
        cap = *volume_cap;
        out.bound = "gt:volume-cap";
      } else {
        cap = *index_cap;
        out.bound = "gt:index-cap";
      }
    }
  }

  const Rational k3_base = 2 * Rational(x.chi2 + 3 * x.chi);
  for (long sigma5 = range.lower; sigma5 <= range.upper; ++sigma5) {
    const long n14 = n0.n14_plus_sigma5 - sigma5;
    if (alpha > 0 && gt_volume_margin(pg, x.chi2, x.chi3, x.chi5, sigma5) <= 0) {
      prune("volume_margin", range.upper - sigma5 + 1);
      break;
    }
    if (sigma5 > 0 && cap < 5) {
      prune("index_cap");
      break;
    }
    // Fano: sum (r - 1/r) <= 24 already holds for the initial basket, the minimum
    // under packing. General type: K^3 of the initial basket is positive, the maximum.
    const Rational fixed_c2 = n0.n12 * c2_term(2) + n0.n13 * c2_term(3) + n14 * c2_term(4);
    const Rational fixed_k3 = k3_base - n0.n12 * k3_term(2) - n0.n13 * k3_term(3) - n14 * k3_term(4);
    std::vector<long> large;
    std::function<void(long, Rational)> choose = [&](long lo, Rational used) {
      const long left = sigma5 - static_cast<long>(large.size());
      if (left == 0) {
        const Basket initial = initial_points(n0.n12, n0.n13, n14, large);
        for (FormalBasket& fb : canonical_descendants(initial, x)) {
          if (alpha < 0) {
            if (!fano_c2_filter(fb.basket)) {
              prune("c2_bound");
              continue;
            }
            if (k3(fb) >= 0) {
              prune("anticanonical_volume");
              continue;
            }
          } else if (!gt_volume_filter(fb, pg, x.chi2, x.chi3, x.chi5, sigma5)) {
            prune("canonical_volume");
            continue;
          }
          out.baskets.push_back(std::move(fb));
        }
        return;
      }
      for (long r = lo; r <= cap; ++r) {
        if (alpha < 0) {
          if (fixed_c2 + used + left * c2_term(r) > 24) {
            break;
          }
          large.push_back(r);
          choose(r, used + c2_term(r));
        } else {
          if (fixed_k3 - used - left * k3_term(r) <= 0) {
            break;
          }
          large.push_back(r);
          choose(r, used + k3_term(r));
        }
        large.pop_back();
      }
    };
    choose(5, Rational(0));
  }
  std::ranges::sort(out.baskets);
  out.baskets.erase(std::unique(out.baskets.begin(), out.baskets.end()), out.baskets.end());
  return out;
}

std::optional<ClassificationRecord> realize(const FormalBasket& fb, int alpha, std::optional<long> m_override) {
  if (alpha != 1 && alpha != -1) {
    throw PreconditionError("realize needs amplitude +1 or -1");
  }
  const long bound = m_override ? *m_override : bound_M(fb, alpha);
  if (bound < 2) {
    throw PreconditionError("realize needs a truncation bound of at least 2");
  }
  // Recovery is prefix-determined: a short truncation that already breaks the
  // limits or shows a negative coefficient rules out every longer one.
  constexpr long kProbe = 300;
  if (bound > kProbe) {
    try {
      const TruncatedSeries probe = series_from_formal_basket(fb, alpha, kProbe);
      if (std::ranges::any_of(probe.coefficients(), [](const Integer& v) { return v < 0; }) ||
          !table_method(probe, table_limits_for(alpha)).within_limits) {
        return std::nullopt;
      }
    } catch (const BasketInconsistency&) {
      return std::nullopt;
    }
  }
  std::optional<TruncatedSeries> series;
  try {
    series = series_from_formal_basket(fb, alpha, static_cast<std::size_t>(bound));
  } catch (const BasketInconsistency&) {
    return std::nullopt;
  }
  if (std::ranges::any_of(series->coefficients(), [](const Integer& v) { return v < 0; })) {
    return std::nullopt;
  }
  const RecoveredPresentation rec = table_method(*series, table_limits_for(alpha));
  if (!rec.residual_clean || rec.degrees.empty()) {
    return std::nullopt;
  }
  std::optional<Candidate> cand;
  try {
    cand = Candidate::normalize(rec.weights, rec.degrees);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  if (cand->dim() != 3 || cand->amplitude() != alpha || is_linear_cone(*cand)) {
    return std::nullopt;
  }
  ScreenReport screen = necessary_screen(*cand);
  if (!screen.passed()) {
    return std::nullopt;
  }
  if (series_from_candidate(*cand, static_cast<std::size_t>(bound)) != *series) {
    return std::nullopt;
  }
  const long a_max = cand->weights().back();
  if (a_max >= 2 && !max_weight_constraint(a_max, fb.basket.max_index(), cand->degrees())) {
    return std::nullopt;
  }
  return ClassificationRecord{*cand, fb, std::move(screen), true, {}};
}

RunReport classify(int alpha, const ClassifyConfig& config) {
  if (alpha < -1 || alpha > 1) {
    throw PreconditionError("classification is implemented for amplitude -1, 0 and +1");
  }
  if (config.jobs == 0) {
    throw PreconditionError("at least one worker is required");
  }
  if (!config.full && config.m_override && *config.m_override < 2) {
    throw PreconditionError("the truncation bound must be at least 2");
  }
  RunReport report;
  report.alpha = alpha;
  report.config = config;

  if (alpha == 0) {
    report.records = classify_cy();
  } else {
    std::vector<Tuple> tuples;
    if (config.only_tuple) {
      if (!tuple_is_admissible(*config.only_tuple, alpha)) {
        throw PreconditionError("restricted tuple " + config.only_tuple->to_string() + " is not admissible");
      }
      tuples.push_back(*config.only_tuple);
    } else {
      tuples = enumerate_tuples(alpha);
    }
    const std::optional<long> bound = config.full ? std::nullopt : config.m_override;
    std::vector<WorkerResult> results(config.jobs);
    const auto work = [&](unsigned worker) {
      WorkerResult& res = results[worker];
      for (std::size_t i = worker; i < tuples.size(); i += config.jobs) {
        const Tuple& t = tuples[i];
        ++res.stats.tuples;
        BasketSearch search = candidate_formal_baskets(t, alpha);
        for (const auto& [why, count] : search.pruned_by) {
          res.stats.pruned_by[why] += count;
        }
        if (search.violation) {
          res.violations.push_back(*search.violation);
        }
        res.stats.baskets += static_cast<long>(search.baskets.size());
        for (const FormalBasket& fb : search.baskets) {
          if (auto rec = realize(fb, alpha, bound)) {
            rec->provenance.push_back(search.bound + " " + t.to_string());
            res.records.push_back(std::move(*rec));
            ++res.stats.realized;
          } else {
            ++res.stats.pruned_by["not_realized"];
          }
        }
      }
    };
    if (config.jobs == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < config.jobs; ++w) {
        threads.emplace_back(work, w);
      }
    }
    std::map<Candidate, ClassificationRecord> merged;
    for (WorkerResult& res : results) {
      merge_records(merged, res.records);
      report.statistics.tuples += res.stats.tuples;
      report.statistics.baskets += res.stats.baskets;
      report.statistics.realized += res.stats.realized;
      for (const auto& [why, count] : res.stats.pruned_by) {
        report.statistics.pruned_by[why] += count;
      }
      report.exhaustiveness_violations.insert(report.exhaustiveness_violations.end(), res.violations.begin(),
                                              res.violations.end());
    }
    for (auto& [cand, rec] : merged) {
      std::ranges::sort(rec.provenance);
      report.records.push_back(std::move(rec));
    }
    std::ranges::sort(report.exhaustiveness_violations);
  }
  if (!config.codims.empty()) {
    std::erase_if(report.records, [&](const ClassificationRecord& r) { return !config.codims.contains(r.candidate.codim()); });
  }
  return report;
}

}  // namespace wci
