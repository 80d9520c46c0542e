#include "polypart/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "polypart/brion.hpp"
#include "polypart/errors.hpp"
#include "polypart/identities.hpp"
#include "polypart/json_io.hpp"
#include "polypart/oracle.hpp"
#include "polypart/volume.hpp"

namespace polypart::cli {

bool SuiteReport::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed; });
}

namespace {

struct Job {
  std::string id;
  Params params;
};

std::vector<Job> suite_jobs() {
  std::vector<Job> jobs;
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 5; ++n) jobs.push_back({"higherdiff-full", {{"r", r}, {"n", n}}});
  for (int r = 1; r <= 3; ++r) jobs.push_back({"higherdiff-q", {{"r", r}}});
  for (int n = 3; n <= 6; ++n) jobs.push_back({"ngon-q", {{"n", n}}});
  for (int n = 3; n <= 6; ++n) jobs.push_back({"ngon-full", {{"n", n}}});
  for (int n = 3; n <= 6; ++n) jobs.push_back({"hermite-q", {{"n", n}}});
  for (int n = 3; n <= 6; ++n) jobs.push_back({"hermite-full", {{"n", n}}});
  for (int j = 2; j <= 6; ++j) jobs.push_back({"cayley-formula", {{"j", j}}});
  for (int j = 3; j <= 6; ++j) jobs.push_back({"cayley-recurrence", {{"j", j}}});
  for (int j = 2; j <= 5; ++j) jobs.push_back({"brion", {{"j", j}}});
  for (int j = 2; j <= 6; ++j) jobs.push_back({"brion-diagonal", {{"j", j}}});
  return jobs;
}

VerificationReport run_job(const Job& job, const Settings& settings) {
  if (job.id == "brion") {
    return brion_verify(cayley_polytope(static_cast<int>(job.params.at("j"))), settings.points, settings.seed,
                        settings.inject_fault);
  }
  if (job.id == "brion-diagonal")
    return brion_diagonal_check(cayley_polytope(static_cast<int>(job.params.at("j"))), settings.inject_fault);
  return verify(*parse_identity_id(job.id), job.params, settings);
}

std::string params_text(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ',';
    out += k + '=' + std::to_string(v);
  }
  return out;
}

std::string vector_text(const IntVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

void write_text(std::ostream& os, const VerificationReport& r) {
  os << (r.passed ? "PASS " : "FAIL ") << r.id;
  if (!r.params.empty()) os << ' ' << params_text(r.params);
  os << "  " << to_string(r.method);
  if (r.order) os << " order=" << *r.order;
  if (r.points) os << " points=" << *r.points;
  if (r.seed) os << " seed=" << *r.seed;
  os << " checked=" << r.checked << '\n';
  if (r.error) os << "  error: " << *r.error << '\n';
  if (r.witness) {
    os << "  witness";
    if (r.witness->exponent) os << " exponent " << vector_text(*r.witness->exponent);
    if (!r.witness->point.empty()) {
      os << " point (";
      for (std::size_t i = 0; i < r.witness->point.size(); ++i)
        os << (i ? ", " : "") << to_string(r.witness->point[i]);
      os << ')';
    }
    os << ": lhs=" << to_string(r.witness->lhs) << " rhs=" << to_string(r.witness->rhs) << '\n';
  }
}

json suite_json(const SuiteReport& s) {
  const auto failed = static_cast<std::size_t>(
      std::count_if(s.reports.begin(), s.reports.end(), [](const VerificationReport& r) { return !r.passed; }));
  return {{"seed", s.settings.seed},
          {"points", s.settings.points},
          {"order", s.settings.order ? json(*s.settings.order) : json(nullptr)},
          {"total", s.reports.size()},
          {"passed", s.reports.size() - failed},
          {"failed", failed},
          {"outcome", failed == 0 ? "pass" : "fail"},
          {"reports", s.reports}};
}

void write_series_text(std::ostream& os, const TruncatedSeries& s) {
  for (const auto& [e, c] : s.terms()) os << vector_text(e) << ' ' << c << '\n';
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void write_conjecture_text(std::ostream& os, const std::vector<ConjectureRow>& rows) {
  std::size_t w = 12;
  for (const ConjectureRow& r : rows) w = std::max({w, r.volume.str().size(), r.graphs_on_j.str().size()});
  os << pad("j", 3) << pad("(j-1)!Vol", w + 2) << pad("G(j-1)", w + 2) << pad("G(j)", w + 2) << "  match\n";
  for (const ConjectureRow& r : rows) {
    std::string match = "none";
    if (r.matches_j_minus_1 && r.matches_j) match = "both";
    else if (r.matches_j_minus_1) match = "j-1";
    else if (r.matches_j) match = "j";
    os << pad(std::to_string(r.j), 3) << pad(r.volume.str(), w + 2) << pad(r.graphs_on_j_minus_1.str(), w + 2)
       << pad(r.graphs_on_j.str(), w + 2) << "  " << match << '\n';
  }
}

/// Options shared by the subcommands; registered per subcommand.
struct Options {
  std::string target;
  std::string params;
  std::optional<int> order;
  int points = 20;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out_path;
  int cayley = 0;
  int jmax = 7;
  int vertices = 8;
  bool inject_fault = false;
};

void add_format_out(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out_path, "Write output to FILE instead of stdout");
}

void add_sampling(CLI::App* sub, Options& o) {
  sub->add_option("--points", o.points, "Random evaluation points")->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "Seed for evaluation points");
}

Settings settings_of(const Options& o) { return Settings{o.order, o.points, o.seed, o.inject_fault}; }

}  // namespace

SuiteReport verify_all(const Settings& settings) {
  const std::vector<Job> jobs = suite_jobs();
  SuiteReport suite{settings, std::vector<VerificationReport>(jobs.size())};
  const auto count = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const Job& job = jobs[static_cast<std::size_t>(i)];
    VerificationReport& r = suite.reports[static_cast<std::size_t>(i)];
    try {
      r = run_job(job, settings);
    } catch (const std::exception& e) {
      r = VerificationReport{};
      r.id = job.id;
      r.params = job.params;
      r.passed = false;
      r.error = e.what();
    }
  }
  return suite;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition identities as lattice points of cones and polytopes", "polypart"};
  app.require_subcommand(1);
  Options o;

  auto* verify_cmd = app.add_subcommand("verify", "Check one identity against the brute-force oracle");
  verify_cmd->add_option("identity", o.target, "Identity id")->required();
  verify_cmd->add_option("--params", o.params, "Parameters, e.g. \"r=2,n=4\"");
  verify_cmd->add_option("--order", o.order, "Truncation order")->check(CLI::NonNegativeNumber);
  add_sampling(verify_cmd, o);
  add_format_out(verify_cmd, o);
  verify_cmd->add_flag("--inject-fault", o.inject_fault)->group("");

  auto* all_cmd = app.add_subcommand("verify-all", "Run the default verification suite");
  all_cmd->add_option("--order", o.order, "Truncation order override")->check(CLI::NonNegativeNumber);
  add_sampling(all_cmd, o);
  add_format_out(all_cmd, o);
  all_cmd->add_flag("--inject-fault", o.inject_fault)->group("");

  auto* expand_cmd = app.add_subcommand("expand", "Series of a family's generating function");
  expand_cmd->add_option("family", o.target, "Family, e.g. higherdiff:r=2,n=4")->required();
  expand_cmd->add_option("--order", o.order, "Total-degree bound")->check(CLI::NonNegativeNumber);
  add_format_out(expand_cmd, o);

  auto* enum_cmd = app.add_subcommand("enumerate", "Lattice points of a family, one JSON array per line");
  enum_cmd->add_option("family", o.target, "Family, e.g. ngon:n=5")->required();
  enum_cmd->add_option("--order", o.order, "Coordinate-sum bound")->check(CLI::NonNegativeNumber);
  add_format_out(enum_cmd, o);

  auto* brion_cmd = app.add_subcommand("brion", "Brion vertex-cone sum of C_j against the oracle");
  brion_cmd->add_option("--cayley", o.cayley, "j")->required()->check(CLI::Range(2, 24));
  add_sampling(brion_cmd, o);
  add_format_out(brion_cmd, o);
  brion_cmd->add_flag("--inject-fault", o.inject_fault)->group("");

  auto* volume_cmd = app.add_subcommand("volume", "Exact volume of C_j");
  volume_cmd->add_option("--cayley", o.cayley, "j")->required()->check(CLI::Range(2, 16));
  add_format_out(volume_cmd, o);

  auto* conj_cmd = app.add_subcommand("conjecture", "Normalized volumes against connected-graph counts");
  conj_cmd->add_option("--jmax", o.jmax, "Largest j")->check(CLI::Range(2, 10));
  add_format_out(conj_cmd, o);

  auto* graphs_cmd = app.add_subcommand("graphs", "Labeled connected graph counts");
  graphs_cmd->add_option("--vertices", o.vertices, "Largest vertex count")->check(CLI::Range(1, 64));
  add_format_out(graphs_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const bool as_json = o.format == "json";
  std::ostringstream buf;
  int code = 0;
  try {
    if (verify_cmd->parsed()) {
      const auto id = parse_identity_id(o.target);
      if (!id) {
        err << "unknown identity '" << o.target << "'\n";
        return 2;
      }
      // Accept both "n=4" and the family form "ngon:n=4".
      const std::string_view params = std::string_view(o.params).substr(o.params.find(':') + 1);
      const VerificationReport r = verify(*id, parse_params(params), settings_of(o));
      if (as_json) buf << json(r).dump(2) << '\n';
      else write_text(buf, r);
      code = r.passed ? 0 : 1;
    } else if (all_cmd->parsed()) {
      const SuiteReport s = verify_all(settings_of(o));
      if (as_json) {
        buf << suite_json(s).dump(2) << '\n';
      } else {
        for (const VerificationReport& r : s.reports) write_text(buf, r);
        buf << (s.passed() ? "all checks passed" : "some checks FAILED") << '\n';
      }
      code = s.passed() ? 0 : 1;
    } else if (expand_cmd->parsed()) {
      const FamilySpec spec = parse_family_spec(o.target);
      const int order = o.order.value_or(12);
      std::optional<RationalGF> gf;
      TruncatedSeries series(nvars_of(spec), order);
      if (std::holds_alternative<Cayley>(spec) || std::holds_alternative<HypersimplexSlice>(spec)) {
        series = to_series(enumerate(constraints_of(spec), std::nullopt), order);
      } else {
        gf = geometric_gf(spec);
        series = expand(*gf, order);
      }
      if (as_json) {
        buf << json{{"family", to_string(spec)},
                    {"generating_function", gf ? json(*gf) : json(nullptr)},
                    {"series", series}}
                   .dump(2)
            << '\n';
      } else {
        write_series_text(buf, series);
      }
    } else if (enum_cmd->parsed()) {
      const FamilySpec spec = parse_family_spec(o.target);
      std::optional<std::int64_t> bound;
      if (!std::holds_alternative<Cayley>(spec) && !std::holds_alternative<HypersimplexSlice>(spec))
        bound = o.order.value_or(12);
      buf << to_json_lines(enumerate(constraints_of(spec), bound));
    } else if (brion_cmd->parsed()) {
      const VerificationReport r = brion_verify(cayley_polytope(o.cayley), o.points, o.seed, o.inject_fault);
      if (as_json) buf << json(r).dump(2) << '\n';
      else write_text(buf, r);
      code = r.passed ? 0 : 1;
    } else if (volume_cmd->parsed()) {
      const BigRat vol = cayley_volume(o.cayley);
      const BigInt normalized = normalized_volume(o.cayley);
      std::optional<BigInt> by_simplices;
      if (o.cayley <= 10) by_simplices = normalized_volume_by_simplices(o.cayley);
      const bool agree = !by_simplices || *by_simplices == normalized;
      if (as_json) {
        buf << json{{"j", o.cayley},
                    {"volume", to_string(vol)},
                    {"normalized_volume", normalized.str()},
                    {"normalized_volume_by_simplices", by_simplices ? json(by_simplices->str()) : json(nullptr)},
                    {"agree", agree}}
                   .dump(2)
            << '\n';
      } else {
        buf << "Vol(C_" << o.cayley << ") = " << to_string(vol) << "\n(j-1)! Vol = " << normalized << '\n';
        if (by_simplices) buf << "simplex decomposition: " << *by_simplices << '\n';
      }
      code = agree ? 0 : 1;
    } else if (conj_cmd->parsed()) {
      const std::vector<ConjectureRow> rows = conjecture_report(o.jmax);
      if (as_json) buf << json{{"jmax", o.jmax}, {"rows", rows}}.dump(2) << '\n';
      else write_conjecture_text(buf, rows);
      const bool matched = std::all_of(rows.begin(), rows.end(), [](const ConjectureRow& r) {
        return r.matches_j_minus_1 || r.matches_j;
      });
      code = matched ? 0 : 1;
    } else if (graphs_cmd->parsed()) {
      json counts = json::array();
      for (int v = 1; v <= o.vertices; ++v) {
        const BigInt c = connected_graph_count(v);
        if (as_json) counts.push_back({{"vertices", v}, {"count", c.str()}});
        else buf << pad(std::to_string(v), 3) << "  " << c << '\n';
      }
      if (as_json) buf << json{{"counts", counts}}.dump(2) << '\n';
    }
  } catch (const BadParams& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (o.out_path.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << o.out_path << '\n';
      return 2;
    }
    file << buf.str();
  }
  return code;
}

}  // namespace polypart::cli
