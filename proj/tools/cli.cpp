#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "pgt/analysis.hpp"
#include "pgt/config.hpp"
#include "pgt/errors.hpp"
#include "pgt/lseries.hpp"
#include "pgt/parallel.hpp"
#include "pgt/quadforms.hpp"
#include "pgt/spectral.hpp"
#include "pgt/sums.hpp"

namespace pgt::cli {

using nlohmann::json;

namespace {

using Cell = std::variant<long long, double, bool, std::string>;

struct FitLine {
  std::string y;
  std::string x;
  Fit fit;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<FitLine> fit;
  json dataset;  // provenance of external data, if any
};

// ---- number and range parsing ----

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_plain(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw precondition_error("not a number: '" + s + "'");
  return v;
}

double parse_number(const std::string& raw) {
  const std::string s = trim(raw);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_plain(s);
  const double num = parse_plain(trim(s.substr(0, slash)));
  const double den = parse_plain(trim(s.substr(slash + 1)));
  if (den == 0.0) throw precondition_error("division by zero in '" + s + "'");
  return num / den;
}

double number_of(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_number(j.get<std::string>());
  throw precondition_error("expected a number, got " + j.dump());
}

std::vector<double> stepped(double from, double to, double step, bool geometric) {
  if (from > to) throw precondition_error("empty range: from > to");
  if (geometric) {
    if (!(step > 1.0)) throw precondition_error("log step must exceed 1");
    if (!(from > 0.0)) throw precondition_error("log-stepped range must start above 0");
  } else if (!(step > 0.0)) {
    throw precondition_error("step must be positive");
  }
  constexpr std::size_t kMaxRows = 1'000'000;
  std::vector<double> v;
  for (std::size_t k = 0;; ++k) {
    const double x = geometric ? from * std::pow(step, static_cast<double>(k)) : from + static_cast<double>(k) * step;
    if (x > to * (1.0 + 1e-12) + 1e-300) break;
    v.push_back(x);
    if (v.size() > kMaxRows) throw precondition_error("range has too many points");
  }
  const double scale = std::max(std::abs(to), 1e-300);
  if (std::abs(v.back() - to) <= 1e-9 * scale)
    v.back() = to;
  else
    v.push_back(to);
  return v;
}

std::vector<double> parse_range_string(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw precondition_error("empty range");
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const auto colon = s.find(':', dots);
    if (colon == std::string::npos) throw precondition_error("range '" + s + "' needs a step, e.g. a..b:1 or a..b:x2");
    const double from = parse_number(s.substr(0, dots));
    const double to = parse_number(s.substr(dots + 2, colon - dots - 2));
    std::string step = trim(s.substr(colon + 1));
    const bool geometric = !step.empty() && step[0] == 'x';
    if (geometric) step.erase(0, 1);
    return stepped(from, to, parse_number(step), geometric);
  }
  std::vector<double> v;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(parse_number(item));
  if (v.empty()) throw precondition_error("empty range");
  return v;
}

// ---- parameters ----

class Params {
 public:
  explicit Params(json j) : j_(std::move(j)) {}

  bool has(const std::string& key) const { return j_.contains(key) && !j_.at(key).is_null(); }

  const json& get(const std::string& key) const {
    if (!has(key)) throw precondition_error("missing parameter --" + key);
    return j_.at(key);
  }

  std::vector<double> range(const std::string& key) const { return parse_range(get(key)); }
  std::vector<double> range(const std::string& key, const char* fallback) const {
    return has(key) ? range(key) : parse_range(json(fallback));
  }
  std::vector<long long> ints(const std::string& key) const { return parse_int_range(get(key)); }

  double scalar(const std::string& key, std::optional<double> fallback = std::nullopt) const {
    if (!has(key)) {
      if (fallback) return *fallback;
      get(key);
    }
    const auto v = range(key);
    if (v.size() != 1) throw precondition_error("--" + key + " takes a single value");
    return v[0];
  }

  bool flag(const std::string& key) const {
    if (!has(key)) return false;
    const json& v = j_.at(key);
    if (v.is_boolean()) return v.get<bool>();
    throw precondition_error("--" + key + " must be true or false");
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_string()) throw precondition_error("--" + key + " must be a string");
    return v.get<std::string>();
  }

 private:
  json j_;
};

// ---- commands ----

void attach_fit(Table& t, const std::string& y_col, const std::string& x_col, const std::vector<double>& x,
                const std::vector<double>& y) {
  if (x.size() < 3) return;
  try {
    t.fit = FitLine{y_col, x_col, fit_exponent(x, y)};
  } catch (const precondition_error&) {
    // all-zero or non-increasing data: report rows without a fit
  }
}

Table cmd_psi(const Params& p) {
  const auto xs = p.range("x");
  const auto counts = psi_gamma_grid(xs);
  Table t;
  t.columns = {"x", "psi", "error", "error_over_x34"};
  std::vector<double> ax, ay;
  for (const auto& g : counts) {
    t.rows.push_back({g.x, g.psi, g.error, g.error / std::pow(g.x, 0.75)});
    ax.push_back(g.x);
    ay.push_back(std::abs(g.error));
  }
  attach_fit(t, "abs_error", "x", ax, ay);
  return t;
}

Table cmd_zagier(const Params& p) {
  const auto deltas = p.ints("delta");
  const auto sigmas = p.range("sigma");
  const auto ts = p.range("t", "0");
  Table t;
  t.columns = {"delta", "sigma", "t", "value_re", "value_im", "correction_re", "correction_im"};
  for (long long d : deltas)
    for (double sg : sigmas)
      for (double im : ts) {
        const auto z = zagier_evaluate(d, cplx(sg, im));
        t.rows.push_back({d, sg, im, z.value.real(), z.value.imag(), z.correction_factor.real(),
                          z.correction_factor.imag()});
      }
  return t;
}

Table cmd_avg(const Params& p) {
  const auto Xs = p.ints("X");
  const double tt = p.scalar("t", 0.0);
  Table t;
  t.columns = {"X", "t", "sum_re", "sum_im", "integral_re", "integral_im", "residual"};
  std::vector<double> ax, ay;
  for (long long X : Xs) {
    const auto r = average_central_values(X, tt);
    t.rows.push_back({X, tt, r.sum.real(), r.sum.imag(), r.integral.real(), r.integral.imag(), r.residual});
    ax.push_back(static_cast<double>(X));
    ay.push_back(r.residual);
  }
  attach_fit(t, "residual", "X", ax, ay);
  return t;
}

Table cmd_meanval(const Params& p) {
  const auto As = p.ints("A");
  const auto Bs = p.ints("B");
  const auto Cs = p.ints("C");
  Table t;
  if (p.has("x")) {
    const auto xs = p.range("x");
    const bool symmetric = !p.flag("one-sided");
    t.columns = {"A", "B", "C", "x", "value_re", "value_im", "main_term"};
    for (long long A : As)
      for (long long B : Bs)
        for (long long C : Cs)
          for (double x : xs) {
            const auto r = mean_value_Fx({A, B, C}, x, symmetric);
            t.rows.push_back({A, B, C, x, r.value.real(), r.value.imag(), r.main_term});
          }
    return t;
  }
  t.columns = {"A", "B", "C", "value", "main_term", "residual", "kappa"};
  std::vector<double> ax, ay;
  for (long long A : As)
    for (long long B : Bs)
      for (long long C : Cs) {
        const auto r = mean_value_F({A, B, C});
        const double kappa = std::abs(r.residual) / static_cast<double>(A + C * C);
        t.rows.push_back({A, B, C, static_cast<long long>(r.value), r.main_term, r.residual, kappa});
        ax.push_back(static_cast<double>(C));
        ay.push_back(std::abs(r.residual));
      }
  if (As.size() == 1 && Bs.size() == 1) attach_fit(t, "abs_residual", "C", ax, ay);
  return t;
}

EigenvalueTable load_table(const Params& p, Table& t) {
  auto table = load_eigenvalues(p.text("eigenvalues", PGT_DEFAULT_EIGENVALUES));
  t.dataset = {{"source", table.source},
               {"complete_to", table.complete_to},
               {"entries", table.t_values.size()}};
  return table;
}

Table cmd_spectral(const Params& p) {
  Table t;
  const auto table = load_table(p, t);
  const auto Xs = p.range("X");
  const auto Ts = p.range("T");
  if (p.flag("damped")) {
    t.columns = {"X", "T", "sum_re", "sum_im"};
    for (double X : Xs)
      for (double T : Ts) {
        const cplx v = weighted_spectral_sum(table, X, T);
        t.rows.push_back({X, T, v.real(), v.imag()});
      }
    return t;
  }
  t.columns = {"X", "T", "count", "sum_re", "sum_im", "triangle_bound", "weyl_ratio"};
  for (double X : Xs)
    for (double T : Ts) {
      const cplx v = spectral_sum(table, X, T);
      const auto n = static_cast<long long>(eigenvalue_count(table, T));
      t.rows.push_back({X, T, n, v.real(), v.imag(), 2.0 * static_cast<double>(n),
                        static_cast<double>(n) / (T * T / 12.0)});
    }
  return t;
}

Table cmd_smoothed(const Params& p) {
  Table t;
  const auto table = load_table(p, t);
  const auto xs = p.range("x");
  const auto Ys = p.range("Y");
  const double eps = p.scalar("eps", 0.05);
  t.columns = {"x", "Y", "direct", "spectral", "difference", "cutoff", "terms"};
  for (double x : xs)
    for (double Y : Ys) {
      const auto r = smoothed_error(table, x, Y, Kernel(Y), eps);
      t.rows.push_back({x, Y, r.direct, r.spectral, r.difference, r.cutoff, static_cast<long long>(r.terms)});
    }
  return t;
}

Table cmd_charsum(const Params& p) {
  const auto Ds = p.ints("D");
  const auto xs = p.ints("x");
  const double theta = p.scalar("theta", 1.0 / 6.0);
  Table t;
  t.columns = {"D", "x", "sum", "polya_vinogradov", "lemma_envelope", "lindelof_envelope", "alpha", "beta"};
  std::vector<double> ax, ay;
  for (long long D : Ds)
    for (long long x : xs) {
      const auto r = envelope_report(D, x, theta);
      t.rows.push_back({D, x, static_cast<long long>(r.sum), r.polya_vinogradov, r.lemma_envelope,
                        r.lindelof_envelope, r.alpha, r.beta});
      ax.push_back(static_cast<double>(x));
      ay.push_back(std::abs(static_cast<double>(r.sum)));
    }
  if (Ds.size() == 1) attach_fit(t, "abs_sum", "x", ax, ay);
  return t;
}

Table cmd_profile(const Params& p) {
  const auto thetas = p.range("theta");
  Table t;
  t.columns = {"theta", "alpha", "beta", "sigma_opt", "delta_exp", "e_value", "balance_residual", "constraint_ok"};
  for (double th : thetas) {
    const auto b = exponent_calculus(th);
    t.rows.push_back({b.theta, b.alpha, b.beta, b.sigma_opt, b.delta_exp, b.e_value, b.balance_residual,
                      theta_constraint_check(b)});
  }
  return t;
}

struct Command {
  Table (*run)(const Params&);
  std::vector<std::pair<std::string, std::string>> options;  // name, help
  std::vector<std::pair<std::string, std::string>> flags;
  std::string help;
};

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table = {
      {"psi", {cmd_psi, {{"x", "x grid"}}, {}, "Psi_Gamma(x) and its error term"}},
      {"zagier",
       {cmd_zagier, {{"delta", "discriminants"}, {"sigma", "Re s grid"}, {"t", "Im s grid (default 0)"}}, {},
        "Zagier L-series L(s, delta)"}},
      {"avg", {cmd_avg, {{"X", "X grid"}, {"t", "shift t (default 0)"}}, {}, "average of L(1/2+it, n^2-4)"}},
      {"meanval",
       {cmd_meanval,
        {{"A", "window length"}, {"B", "window start"}, {"C", "modulus range"}, {"x", "twist (selects F_x)"}},
        {{"one-sided", "F_x over B < a <= A+B instead of |B-a| <= A"}},
        "mean values F(A,B,C) and F_x(A,B,C)"}},
      {"spectral",
       {cmd_spectral, {{"X", "X grid"}, {"T", "T grid"}, {"eigenvalues", "eigenvalue file"}},
        {{"damped", "use the exp(-t/T) weighted sum"}},
        "spectral exponential sums"}},
      {"smoothed",
       {cmd_smoothed,
        {{"x", "x grid"}, {"Y", "kernel scale"}, {"eps", "cutoff exponent (default 0.05)"},
         {"eigenvalues", "eigenvalue file"}},
        {},
        "smoothed error E(x; k), direct vs spectral"}},
      {"charsum",
       {cmd_charsum, {{"D", "fundamental discriminants"}, {"x", "x grid"}, {"theta", "theta (default 1/6)"}}, {},
        "quadratic character sums against envelopes"}},
      {"profile", {cmd_profile, {{"theta", "theta grid"}}, {}, "exponent calculus"}},
  };
  return table;
}

const std::set<std::string> kGlobalKeys = {"command", "out", "format", "threads", "tolerances"};

// ---- output ----

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
  return std::string(buf, r.ptr);
}

std::string format_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, double>)
          return format_double(v);
        else if constexpr (std::is_same_v<V, bool>)
          return v ? "true" : "false";
        else if constexpr (std::is_same_v<V, long long>)
          return std::to_string(v);
        else
          return v;
      },
      c);
}

json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return json(v); }, c);
}

std::string render_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + format_cell(row[i]);
    s += '\n';
  }
  if (t.fit) {
    const Fit& f = t.fit->fit;
    s += "# fit log(" + t.fit->y + ") ~ log(" + t.fit->x + "): slope=" + format_double(f.slope) +
         " intercept=" + format_double(f.intercept) + " residual=" + format_double(f.residual) +
         " rows=" + std::to_string(f.used) + '\n';
  }
  return s;
}

json metadata(const std::string& command, const json& config, const json& dataset) {
  json m = {{"program", "pgt_cli"}, {"version", kVersion}, {"command", command}, {"config", config}};
  if (!dataset.is_null()) m["dataset"] = dataset;
  return m;
}

std::string render_json(const std::string& command, const json& config, const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(r));
  }
  json doc = {{"metadata", metadata(command, config, t.dataset)}, {"columns", t.columns}, {"rows", rows}};
  if (t.fit) {
    const Fit& f = t.fit->fit;
    doc["fit"] = {{"y", t.fit->y}, {"x", t.fit->x}, {"slope", f.slope}, {"intercept", f.intercept},
                  {"residual", f.residual}, {"rows", f.used}};
  } else {
    doc["fit"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

std::string render_error(const std::string& kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) + "\n";
}

void check_tolerances(const json& j) {
  static const std::set<std::string> known = {
      "special_relative", "lseries_relative",    "identity_residual", "functional_equation",
      "oracle_match",     "quadrature_absolute", "kernel_mass",       "imaginary_part",
      "balance",          "thread_agreement",    "spectral_damping"};
  if (!j.is_object()) throw precondition_error("tolerances must be an object");
  for (const auto& [k, v] : j.items()) {
    if (!known.count(k)) throw precondition_error("unknown tolerance '" + k + "'");
    if (!v.is_number() || !(v.get<double>() > 0.0)) throw precondition_error("tolerance '" + k + "' must be positive");
  }
}

}  // namespace

std::vector<double> parse_range(const json& spec) {
  if (spec.is_number()) return {spec.get<double>()};
  if (spec.is_string()) return parse_range_string(spec.get<std::string>());
  if (spec.is_array()) {
    std::vector<double> v;
    for (const auto& e : spec) v.push_back(number_of(e));
    if (v.empty()) throw precondition_error("empty range");
    return v;
  }
  if (spec.is_object()) {
    if (!spec.contains("from") || !spec.contains("to")) throw precondition_error("range object needs from and to");
    const double from = number_of(spec.at("from"));
    const double to = number_of(spec.at("to"));
    if (spec.contains("log_step")) return stepped(from, to, number_of(spec.at("log_step")), true);
    if (spec.contains("step")) return stepped(from, to, number_of(spec.at("step")), false);
    throw precondition_error("range object needs step or log_step");
  }
  throw precondition_error("unrecognised range " + spec.dump());
}

std::vector<long long> parse_int_range(const json& spec) {
  std::vector<long long> out;
  for (double v : parse_range(spec)) {
    if (std::abs(v) > 9e15) throw precondition_error("integer parameter out of range");
    const long long r = std::llround(v);
    if (out.empty() || out.back() != r) out.push_back(r);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical experiments on prime geodesics, quadratic L-series and spectral sums", "pgt_cli"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string config_path, out_path, format;
  int threads = 0;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, cmd] : commands()) {
    CLI::App* sub = app.add_subcommand(name, cmd.help);
    subs[name] = sub;
    for (const auto& [opt, help] : cmd.options) sub->add_option("--" + opt, values[name][opt], help);
    for (const auto& [opt, help] : cmd.flags) sub->add_flag("--" + opt, flags[name][opt], help);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string command;
  json config = json::object();
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw precondition_error("cannot open config file: " + config_path);
      try {
        config = json::parse(in);
      } catch (const json::parse_error& e) {
        throw precondition_error(std::string("config is not valid JSON: ") + e.what());
      }
      if (!config.is_object()) throw precondition_error("config must be a JSON object");
    }
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) command = name;
    if (command.empty() && config.contains("command") && config["command"].is_string())
      command = config["command"].get<std::string>();
    if (command.empty()) throw precondition_error("no command given; try --help");
    if (!commands().count(command)) throw precondition_error("unknown command '" + command + "'");
    config["command"] = command;

    CLI::App* sub = subs.at(command);
    for (const auto& [opt, help] : commands().at(command).options)
      if (sub->count("--" + opt) > 0) config[opt] = values[command][opt];
    for (const auto& [opt, help] : commands().at(command).flags)
      if (sub->count("--" + opt) > 0) config[opt] = flags[command][opt];
    if (!out_path.empty()) config["out"] = out_path;
    if (!format.empty()) config["format"] = format;
    if (threads > 0) config["threads"] = threads;

    std::set<std::string> allowed = kGlobalKeys;
    for (const auto& [opt, help] : commands().at(command).options) allowed.insert(opt);
    for (const auto& [opt, help] : commands().at(command).flags) allowed.insert(opt);
    for (const auto& [k, v] : config.items())
      if (!allowed.count(k)) throw precondition_error("parameter '" + k + "' does not apply to " + command);
    if (config.contains("tolerances")) check_tolerances(config["tolerances"]);
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string fmt = config.value("format", std::string("csv"));
  if (fmt != "csv" && fmt != "json") {
    err << "error: format must be csv or json\n";
    return 2;
  }
  const bool as_json = fmt == "json";
  const std::string target = config.value("out", std::string());

  auto emit = [&](const std::string& text) -> int {
    if (target.empty()) {
      out << text;
      return 0;
    }
    std::ofstream f(target, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << target << "\n";
      return 2;
    }
    f << text;
    return f ? 0 : 1;
  };

  auto fail = [&](const std::string& kind, const std::string& message, int code) {
    err << "error: " << message << "\n";
    if (as_json) emit(render_error(kind, message));
    return code;
  };

  try {
    if (config.contains("threads")) {
      const json& th = config["threads"];
      if (!th.is_number_integer()) throw precondition_error("threads must be an integer");
      par::set_threads(th.get<int>());
    }
    const Table t = commands().at(command).run(Params(config));
    return emit(as_json ? render_json(command, config, t) : render_csv(t));
  } catch (const parse_error& e) {
    return fail("parse", e.what(), 2);
  } catch (const precondition_error& e) {
    return fail("precondition", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
}

}  // namespace pgt::cli
