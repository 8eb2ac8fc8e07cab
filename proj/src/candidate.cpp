#include "wci/candidate.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "wci/numeric.hpp"

namespace wci {

namespace {

std::string join(const std::vector<long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<long> parse_list(std::string_view text, std::string_view what) {
  std::vector<long> values;
  if (text.empty()) {
    throw InvalidInput("empty " + std::string(what) + " list");
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view field = text.substr(start, end - start);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw InvalidInput("malformed " + std::string(what) + " entry '" + std::string(field) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return values;
}

}  // namespace

Candidate Candidate::normalize(std::vector<long> weights, std::vector<long> degrees) {
  if (weights.empty()) {
    throw InvalidInput("a candidate needs at least one weight");
  }
  if (degrees.empty()) {
    throw InvalidInput("a candidate needs at least one degree");
  }
  const auto non_positive = [](long v) { return v < 1; };
  if (std::ranges::any_of(weights, non_positive)) {
    throw InvalidInput("weights must be positive integers");
  }
  if (std::ranges::any_of(degrees, non_positive)) {
    throw InvalidInput("degrees must be positive integers");
  }
  if (static_cast<long>(weights.size()) - 1 - static_cast<long>(degrees.size()) < 1) {
    throw InvalidInput("dimension n - c must be at least 1");
  }
  std::ranges::sort(weights);
  std::ranges::sort(degrees);
  const long amplitude = std::accumulate(degrees.begin(), degrees.end(), 0L) -
                         std::accumulate(weights.begin(), weights.end(), 0L);
  return Candidate(std::move(weights), std::move(degrees), amplitude);
}

std::string Candidate::to_text() const { return join(weights_) + " / " + join(degrees_); }

std::string Candidate::label() const {
  return "X_{" + join(degrees_) + "} in P(" + join(weights_) + ")";
}

std::strong_ordering operator<=>(const Candidate& x, const Candidate& y) {
  if (auto cmp = x.codim() <=> y.codim(); cmp != 0) {
    return cmp;
  }
  const long sx = std::accumulate(x.degrees_.begin(), x.degrees_.end(), 0L);
  const long sy = std::accumulate(y.degrees_.begin(), y.degrees_.end(), 0L);
  if (auto cmp = sx <=> sy; cmp != 0) {
    return cmp;
  }
  if (auto cmp = x.degrees_ <=> y.degrees_; cmp != 0) {
    return cmp;
  }
  return x.weights_ <=> y.weights_;
}

Candidate parse_candidate(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') {
      compact += ch;
    }
  }
  const std::size_t slash = compact.find('/');
  if (slash == std::string::npos || compact.find('/', slash + 1) != std::string::npos) {
    throw InvalidInput("expected exactly one '/' separating weights from degrees");
  }
  const std::string_view view(compact);
  return Candidate::normalize(parse_list(view.substr(0, slash), "weight"),
                              parse_list(view.substr(slash + 1), "degree"));
}

DeltaVector deltas(const Candidate& c) {
  DeltaVector out;
  for (long j = 1; j <= c.codim(); ++j) {
    out.deltas.push_back(c.d(j) - c.a(j + c.dim()));
    out.sum += out.deltas.back();
  }
  return out;
}

}  // namespace wci
