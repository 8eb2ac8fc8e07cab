#include "wci/tuple.hpp"

#include <charconv>
#include <numeric>
#include <vector>

#include "wci/numeric.hpp"

namespace wci {

int Tuple::weight_count() const noexcept { return std::accumulate(mu.begin() + 1, mu.end(), 0); }

int Tuple::degree_count() const noexcept { return std::accumulate(nu.begin() + 2, nu.end(), 0); }

std::string Tuple::to_string() const {
  std::string out = "(";
  for (int i = 1; i <= horizon; ++i) {
    out += (i == 1 ? "" : ",") + std::to_string(mu[static_cast<std::size_t>(i)]);
  }
  out += ";";
  for (int i = 2; i <= horizon; ++i) {
    out += (i == 2 ? "" : ",") + std::to_string(nu[static_cast<std::size_t>(i)]);
  }
  return out + ")";
}

Tuple tuple_of(const Candidate& c, int horizon) {
  if (horizon < 1 || horizon > Tuple::kMaxHorizon) {
    throw PreconditionError("tuple horizon must lie in 1.." + std::to_string(Tuple::kMaxHorizon));
  }
  Tuple t;
  t.horizon = horizon;
  for (long a : c.weights()) {
    if (a <= horizon) {
      ++t.mu[static_cast<std::size_t>(a)];
    }
  }
  for (long d : c.degrees()) {
    if (d >= 2 && d <= horizon) {
      ++t.nu[static_cast<std::size_t>(d)];
    }
  }
  return t;
}

namespace {

std::vector<int> parse_counts(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value < 0) {
      throw InvalidInput("malformed tuple count '" + std::string(field) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) {
      return out;
    }
    start = comma + 1;
  }
}

}  // namespace

Tuple parse_tuple(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') {
      compact += ch;
    }
  }
  const std::size_t semi = compact.find(';');
  if (compact.size() < 3 || compact.front() != '(' || compact.back() != ')' || semi == std::string::npos) {
    throw InvalidInput("tuple must look like (mu_1,...,mu_h;nu_2,...,nu_h)");
  }
  const std::string_view body(compact);
  const std::vector<int> mu = parse_counts(body.substr(1, semi - 1));
  const std::vector<int> nu = parse_counts(body.substr(semi + 1, compact.size() - semi - 2));
  const auto h = static_cast<int>(mu.size());
  if (h < 2 || h > Tuple::kMaxHorizon || static_cast<int>(nu.size()) != h - 1) {
    throw InvalidInput("tuple needs h weight counts and h-1 degree counts, 2 <= h <= " +
                       std::to_string(Tuple::kMaxHorizon));
  }
  Tuple t;
  t.horizon = h;
  for (int i = 1; i <= h; ++i) {
    t.mu[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i - 1)];
  }
  for (int i = 2; i <= h; ++i) {
    t.nu[static_cast<std::size_t>(i)] = nu[static_cast<std::size_t>(i - 2)];
  }
  return t;
}

}  // namespace wci
