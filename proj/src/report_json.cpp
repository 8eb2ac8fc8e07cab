#include "wci/report_json.hpp"

namespace wci {

json to_json(const ScreenReport& report) {
  json checks = json::array();
  for (const CheckResult& check : report.checks) {
    checks.push_back({{"name", check.name}, {"passed", check.passed}, {"witness", check.witness}});
  }
  return {{"candidate", report.candidate.to_text()},
          {"alpha", report.candidate.amplitude()},
          {"dim", report.candidate.dim()},
          {"passed", report.passed()},
          {"checks", std::move(checks)}};
}

json to_json(const FormalBasket& fb) {
  json points = json::array();
  for (const auto& [q, count] : fb.basket.grouped()) {
    points.push_back({q.b, q.r, count});
  }
  return {{"basket", std::move(points)}, {"chi", fb.chi}, {"chi2", fb.chi2}, {"k3", to_string(k3(fb))}};
}

json to_json(const RecoveredPresentation& rec) {
  return {{"weights", rec.weights}, {"degrees", rec.degrees}, {"clean", rec.residual_clean}};
}

json to_json(const ClassificationRecord& record) {
  json out{{"candidate", record.candidate.to_text()},
           {"label", record.candidate.label()},
           {"codim", record.candidate.codim()},
           {"weights", record.candidate.weights()},
           {"degrees", record.candidate.degrees()},
           {"screen", to_json(record.screen)},
           {"series_verified", record.series_verified},
           {"provenance", record.provenance}};
  out["formal_basket"] = record.formal_basket ? to_json(*record.formal_basket) : json(nullptr);
  return out;
}

json to_json(const RunReport& report) {
  json config{{"full", report.config.full},
              {"codims", report.config.codims},
              {"jobs", report.config.jobs}};
  config["bound"] = report.config.full || !report.config.m_override ? json("bound_M") : json(*report.config.m_override);
  config["tuple"] = report.config.only_tuple ? json(report.config.only_tuple->to_string()) : json(nullptr);
  json records = json::array();
  for (const ClassificationRecord& r : report.records) {
    records.push_back(to_json(r));
  }
  return {{"alpha", report.alpha},
          {"config", std::move(config)},
          {"records", std::move(records)},
          {"statistics",
           {{"tuples", report.statistics.tuples},
            {"baskets", report.statistics.baskets},
            {"realized", report.statistics.realized},
            {"pruned_by", report.statistics.pruned_by}}},
          {"exhaustiveness_violations", report.exhaustiveness_violations}};
}

FormalBasket formal_basket_from_json(const json& j) {
  try {
    std::vector<Orbifold> pts;
    for (const json& entry : j.at("basket")) {
      if (!entry.is_array() || entry.size() != 3) {
        throw InvalidInput("basket entries are [b, r, count]");
      }
      const long count = entry[2].get<long>();
      if (count < 0) {
        throw InvalidInput("negative multiplicity in basket");
      }
      pts.insert(pts.end(), static_cast<std::size_t>(count), Orbifold{entry[0].get<long>(), entry[1].get<long>()});
    }
    return FormalBasket{Basket(std::move(pts)), j.at("chi").get<long>(), j.at("chi2").get<long>()};
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed formal basket JSON: ") + e.what());
  }
}

}  // namespace wci
