// Command-line driver: screening, series, table method and classification runs.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wci/classify.hpp"
#include "wci/properties.hpp"
#include "wci/report_json.hpp"
#include "wci/screen.hpp"
#include "wci/series.hpp"

namespace {

enum ExitCode { kOk = 0, kFailed = 1, kBadInput = 2 };

std::string join(const std::vector<long>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? sep : "") + std::to_string(values[i]);
  }
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string out = "\"";
  for (char ch : field) {
    out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  }
  return out + "\"";
}

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw wci::InvalidInput("cannot open output file " + path);
      }
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void print_screen(std::ostream& out, const wci::ScreenReport& report, const std::string& format) {
  if (format == "json") {
    out << wci::to_json(report).dump(2) << '\n';
  } else if (format == "csv") {
    out << "check,passed,witness\n";
    for (const auto& check : report.checks) {
      out << check.name << ',' << (check.passed ? "true" : "false") << ',' << csv_quote(check.witness) << '\n';
    }
  } else {
    out << report.candidate.label() << "  alpha=" << report.candidate.amplitude()
        << " dim=" << report.candidate.dim() << '\n';
    for (const auto& check : report.checks) {
      out << "  " << (check.passed ? "PASS " : "FAIL ") << check.name;
      if (!check.passed && !check.witness.empty()) {
        out << ": " << check.witness;
      }
      out << '\n';
    }
    out << (report.passed() ? "pass" : "fail") << '\n';
  }
}

void print_series(std::ostream& out, const wci::TruncatedSeries& s, const std::string& format) {
  if (format == "json") {
    std::vector<std::string> coeffs;
    for (const auto& c : s.coefficients()) {
      coeffs.push_back(c.str());
    }
    out << wci::json{{"bound", s.bound()}, {"coefficients", coeffs}}.dump() << '\n';
  } else if (format == "csv") {
    out << "m,c_m\n";
    for (std::size_t m = 0; m <= s.bound(); ++m) {
      out << m << ',' << s[m] << '\n';
    }
  } else {
    wci::write_series(out, s);
  }
}

void print_presentation(std::ostream& out, const wci::RecoveredPresentation& rec, const std::string& format) {
  if (format == "json") {
    out << wci::to_json(rec).dump() << '\n';
  } else if (format == "csv") {
    out << "weights,degrees,clean\n"
        << csv_quote(join(rec.weights)) << ',' << csv_quote(join(rec.degrees)) << ','
        << (rec.residual_clean ? "true" : "false") << '\n';
  } else {
    out << "weights: " << join(rec.weights) << " / degrees: " << join(rec.degrees) << " / "
        << (rec.residual_clean ? "clean" : "clean: false") << '\n';
  }
}

void print_run(std::ostream& out, const wci::RunReport& report, const std::string& format) {
  if (format == "json") {
    out << wci::to_json(report).dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << "no,codim,degrees,weights,basket,chi,chi2,k3\n";
    long no = 0;
    for (const auto& rec : report.records) {
      out << ++no << ',' << rec.candidate.codim() << ',' << csv_quote(join(rec.candidate.degrees())) << ','
          << csv_quote(join(rec.candidate.weights())) << ',';
      if (rec.formal_basket) {
        out << csv_quote(wci::format_basket(rec.formal_basket->basket)) << ',' << rec.formal_basket->chi << ','
            << rec.formal_basket->chi2 << ',' << wci::to_string(wci::k3(*rec.formal_basket));
      } else {
        out << ",,,";
      }
      out << '\n';
    }
    return;
  }
  long no = 0;
  for (const auto& rec : report.records) {
    out << "No. " << ++no << "\t" << rec.candidate.label();
    if (rec.formal_basket) {
      out << "\tbasket {" << wci::format_basket(rec.formal_basket->basket) << "}";
    }
    out << '\n';
  }
  const auto& st = report.statistics;
  out << "# records " << report.records.size() << ", tuples " << st.tuples << ", baskets " << st.baskets
      << ", realized " << st.realized << ", exhaustiveness violations " << report.exhaustiveness_violations.size()
      << '\n';
  for (const auto& v : report.exhaustiveness_violations) {
    out << "# violation: " << v << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted complete intersection threefolds: screening, series and classification"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  std::string format = "text";
  std::string output;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("--output", output, "Write to this file instead of stdout");
  };

  std::string candidate_text;
  auto* check = app.add_subcommand("check", "Run the numerical screen on a candidate \"a0,...,an / d1,...,dc\"");
  check->add_option("candidate", candidate_text)->required();
  add_common(check);

  long bound = -1;
  std::string basket_text;
  long chi = 0;
  long chi2 = 0;
  int alpha = 0;
  auto* series = app.add_subcommand("series", "Print the Hilbert series of a candidate or a formal basket");
  series->add_option("candidate", candidate_text, "Candidate text");
  series->add_option("--bound", bound, "Truncation bound M")->required();
  auto* basket_opt = series->add_option("--basket", basket_text, "Formal basket \"n x (b,r); ...\"")
                         ->excludes(series->get_option("candidate"));
  series->add_option("--chi", chi, "chi(O_X) of the formal basket")->needs(basket_opt);
  series->add_option("--chi2", chi2, "chi_2 of the formal basket")->needs(basket_opt);
  series->add_option("--alpha", alpha, "Amplitude +1 or -1 of the formal basket")->needs(basket_opt);
  add_common(series);

  std::string series_path;
  auto* table = app.add_subcommand("table", "Recover weights and degrees from a series file (\"-\" for stdin)");
  table->add_option("file", series_path)->required();
  table->add_option("--bound", bound, "Use only c_0..c_M of the file");
  add_common(table);

  std::string codims;
  std::string tuple_text;
  bool full = false;
  unsigned jobs = 1;
  auto* classify = app.add_subcommand("classify", "Run a classification driver");
  classify->add_option("--alpha", alpha, "Amplitude -1, 0 or +1")->required();
  classify->add_option("--bound", bound, "Truncation bound M for the table method (default 300)");
  classify->add_flag("--full", full, "Use the proven truncation bound for every basket");
  classify->add_option("--codim", codims, "Comma-separated codimensions to keep");
  classify->add_option("--tuple", tuple_text, "Restrict to one tuple \"(mu_1,...;nu_2,...)\"");
  classify->add_option("--jobs", jobs, "Worker threads");
  add_common(classify);

  std::uint64_t seed = 1;
  long trials = 1000;
  auto* selftest = app.add_subcommand("selftest", "Seeded randomized consistency checks");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--trials", trials, "Trials per property")->check(CLI::PositiveNumber);
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (check->parsed()) {
      const wci::Candidate c = wci::parse_candidate(candidate_text);
      const wci::ScreenReport report = wci::necessary_screen(c);
      Sink sink(output);
      print_screen(sink.out(), report, format);
      return report.passed() ? kOk : kFailed;
    }

    if (series->parsed()) {
      if (bound < 0) {
        throw wci::InvalidInput("--bound must be non-negative");
      }
      std::optional<wci::TruncatedSeries> s;
      if (basket_opt->count() > 0) {
        const wci::FormalBasket fb{wci::parse_basket(basket_text), chi, chi2};
        s = wci::series_from_formal_basket(fb, alpha, static_cast<std::size_t>(bound));
      } else if (!candidate_text.empty()) {
        s = wci::series_from_candidate(wci::parse_candidate(candidate_text), static_cast<std::size_t>(bound));
      } else {
        throw wci::InvalidInput("series needs a candidate or --basket");
      }
      Sink sink(output);
      print_series(sink.out(), *s, format);
      return kOk;
    }

    if (table->parsed()) {
      std::ifstream file;
      std::istream* in = &std::cin;
      if (series_path != "-") {
        file.open(series_path);
        if (!file) {
          throw wci::InvalidInput("cannot read " + series_path);
        }
        in = &file;
      }
      wci::TruncatedSeries s = wci::read_series(*in);
      if (bound >= 0) {
        if (static_cast<std::size_t>(bound) > s.bound()) {
          throw wci::InvalidInput("series file stops before the requested bound");
        }
        std::vector<wci::Integer> prefix(s.coefficients().begin(), s.coefficients().begin() + bound + 1);
        s = wci::TruncatedSeries(std::move(prefix));
      }
      const wci::RecoveredPresentation rec = wci::table_method(s);
      Sink sink(output);
      print_presentation(sink.out(), rec, format);
      return rec.residual_clean ? kOk : kFailed;
    }

    if (classify->parsed()) {
      wci::ClassifyConfig config;
      config.full = full;
      config.jobs = jobs;
      if (bound >= 0) {
        config.m_override = bound;
      }
      if (!codims.empty()) {
        std::stringstream fields(codims);
        for (std::string field; std::getline(fields, field, ',');) {
          std::size_t used = 0;
          long c = 0;
          try {
            c = std::stol(field, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used != field.size() || c < 1) {
            throw wci::InvalidInput("--codim expects positive integers, got '" + field + "'");
          }
          config.codims.insert(c);
        }
      }
      if (!tuple_text.empty()) {
        config.only_tuple = wci::parse_tuple(tuple_text);
      }
      const wci::RunReport report = wci::classify(alpha, config);
      Sink sink(output);
      print_run(sink.out(), report, format);
      return report.exhaustiveness_violations.empty() ? kOk : kFailed;
    }

    if (selftest->parsed()) {
      const auto outcomes = wci::run_selftest(seed, trials);
      bool ok = true;
      Sink sink(output);
      if (format == "json") {
        wci::json j = wci::json::array();
        for (const auto& o : outcomes) {
          j.push_back({{"property", o.name}, {"trials", o.trials}, {"failures", o.failures},
                       {"first_failure", o.first_failure}});
        }
        sink.out() << wci::json{{"seed", seed}, {"properties", j}}.dump(2) << '\n';
      }
      for (const auto& o : outcomes) {
        ok = ok && o.passed();
        if (format == "csv") {
          sink.out() << o.name << ',' << o.trials << ',' << o.failures << '\n';
        } else if (format == "text") {
          sink.out() << (o.passed() ? "PASS " : "FAIL ") << o.name << " (" << o.trials << " trials, seed " << seed
                     << ")";
          if (!o.passed()) {
            sink.out() << ": " << o.failures << " failures, first " << o.first_failure;
          }
          sink.out() << '\n';
        }
      }
      return ok ? kOk : kFailed;
    }
  } catch (const wci::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const wci::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const wci::BasketInconsistency& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
