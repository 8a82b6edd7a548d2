#include "g3enum/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "g3enum/g3enum.hpp"

namespace g3enum::cli {

namespace {

struct Options {
  int degree = 0;
  std::string quantity;
  int hyperflexes = 0;
  std::optional<std::string> route;
  std::optional<std::filesystem::path> rt_file;
  std::string format = "table";
  std::optional<std::filesystem::path> cache;
};

const std::map<std::string, Cr3Route> kCr3Routes{
    {"theorem", Cr3Route::Theorem}, {"corollary", Cr3Route::Corollary}, {"both", Cr3Route::Both}};

S12Route parse_s12_route(const std::string& route) {
  if (route == "corollary") return S12Route::Corollary;
  if (route == "lemma") return S12Route::Lemma;
  throw ValidationError("s12 route must be corollary, lemma or both, got '" + route + "'");
}

Cr3Route parse_cr3_route(const std::string& route) {
  const auto it = kCr3Routes.find(route);
  if (it == kCr3Routes.end()) {
    throw ValidationError("route must be theorem, corollary or both, got '" + route + "'");
  }
  return it->second;
}

void forbid_route(const Options& o) {
  if (o.route) throw ValidationError("--route does not apply to " + o.quantity);
}

std::vector<Report> compute(Session& session, const Options& o) {
  const int d = o.degree;
  if (o.hyperflexes != 0 && o.quantity != "cr3" && o.quantity != "n3d") {
    throw ValidationError("--hyperflexes applies only to cr3 and n3d");
  }
  if (o.quantity == "n3d" || o.quantity == "cr3") {
    const std::string route = o.route.value_or("both");
    const Cr3Route r = parse_cr3_route(route);
    const ExactScalar value = o.quantity == "n3d" ? n3d(session, d, o.hyperflexes, r)
                                                  : cr3(session, d, o.hyperflexes, r);
    return {{o.quantity, d, value, route}};
  }
  if (o.quantity == "s12") {
    const std::string route = o.route.value_or("both");
    if (route == "both") {
      const ExactScalar corollary = s12(session, d, S12Route::Corollary);
      require_equal("|S_{1;2}| corollary vs lemma", corollary, s12(session, d, S12Route::Lemma));
      return {{"s12", d, corollary, route}};
    }
    return {{"s12", d, s12(session, d, parse_s12_route(route)), route}};
  }
  if (o.quantity == "s21") {
    forbid_route(o);
    return {{"s21", d, s21(session, d), "lemma"}};
  }
  if (o.quantity == "tau3") {
    forbid_route(o);
    return {{"tau3", d, require_count("tau_3", tau3(session, d)), "assembler"}};
  }
  if (o.quantity == "rt") {
    forbid_route(o);
    if (d < 2) throw DomainError("rt: degree must be >= 2, got " + std::to_string(d));
    const bool overridden = session.rt_overrides().find(3, d).has_value();
    const ExactScalar value = require_integer("RT_{3,d}", rt(session, {3, d, {}, 3 * d - 4}));
    return {{"rt", d, value, overridden ? "override" : "composition"}};
  }
  if (o.quantity == "breakdown") {
    forbid_route(o);
    return breakdown_reports(component_counts(session, d));
  }
  throw ValidationError("unknown quantity " + o.quantity);
}

void print(const std::vector<Report>& reports, const std::string& format, std::uint64_t hits,
           bool as_list, std::ostream& out) {
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : reports) {
      rows.push_back({{"quantity", r.quantity},
                      {"degree", r.degree},
                      {"value", r.value.str()},
                      {"route", r.route},
                      {"cache_hits", hits}});
    }
    out << (as_list ? rows.dump(2) : rows.front().dump(2)) << '\n';
  } else if (format == "csv") {
    out << "quantity,degree,value\n";
    for (const auto& r : reports) out << r.quantity << ',' << r.degree << ',' << r.value << '\n';
  } else {
    std::size_t qw = 8;
    std::size_t vw = 5;
    for (const auto& r : reports) {
      qw = std::max(qw, r.quantity.size());
      vw = std::max(vw, r.value.str().size());
    }
    out << std::left << std::setw(static_cast<int>(qw)) << "quantity" << "  degree  "
        << std::right << std::setw(static_cast<int>(vw)) << "value" << "  route\n";
    for (const auto& r : reports) {
      out << std::left << std::setw(static_cast<int>(qw)) << r.quantity << "  " << std::setw(6)
          << r.degree << "  " << std::right << std::setw(static_cast<int>(vw)) << r.value.str()
          << "  " << r.route << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact genus-3 plane curve counts"};
  app.require_subcommand(1);
  Options o;
  CLI::App* cmd = app.add_subcommand("compute", "Evaluate one quantity at one degree");
  cmd->add_option("--degree", o.degree, "Curve degree")->required();
  cmd->add_option("--quantity", o.quantity, "Quantity to compute")
      ->required()
      ->check(CLI::IsMember({"n3d", "cr3", "s12", "s21", "tau3", "rt", "breakdown"}));
  cmd->add_option("--hyperflexes", o.hyperflexes, "Hyperflexes of the domain (cr3, n3d)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--route", o.route, "theorem|corollary|both, or corollary|lemma|both for s12");
  cmd->add_option("--rt-file", o.rt_file, "RT values, one 'g d value' per line");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--cache", o.cache, "Memo cache file (default: $G3ENUM_CACHE)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    auto cache = o.cache ? o.cache : Session::cache_path_from_environment();
    Session session(std::move(cache));
    if (o.rt_file) session.rt_overrides() = RtOverrides::load(*o.rt_file);
    const auto reports = compute(session, o);
    session.memo().flush();
    print(reports, o.format, session.memo().hits(), o.quantity == "breakdown", out);
    return kOk;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kConsistencyError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace g3enum::cli
