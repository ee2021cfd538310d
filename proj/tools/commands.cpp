#include "commands.hpp"

#include "cantor/errors.hpp"
#include "cantor/numeric.hpp"
#include "cantor/orthogonality.hpp"
#include "cantor/system.hpp"
#include "cantor/trees.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace cantor::cli {

namespace {

using nlohmann::json;

struct Config {
  std::int64_t p = 0;
  int alpha = 0;
  std::vector<std::int64_t> digits;
  std::string digits_text;
  int depth = 4;
  std::string bound;
  std::size_t limit = 100;
  std::size_t index = 0;
  int truncation = 40;
  std::string grid;
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
  std::string config;
  std::string labeling;
  std::string checks = "muhat,roots,hadamard";
  std::vector<int> betas;
  std::string betas_text;
  std::vector<std::string> frequencies;
};

struct UsageError : Error {
  using Error::Error;
};

// Options shared by the subcommands that take a system.
struct SystemOptions {
  CLI::Option* p = nullptr;
  CLI::Option* alpha = nullptr;
  CLI::Option* digits = nullptr;
};

SystemOptions add_system_options(CLI::App* sub, Config& cfg) {
  SystemOptions o;
  o.p = sub->add_option("-p", cfg.p, "prime p");
  o.alpha = sub->add_option("-a,--alpha", cfg.alpha, "exponent alpha, N = p^alpha");
  o.digits = sub->add_option("-D,--digits", cfg.digits_text, "digit set, comma separated");
  sub->add_option("--config", cfg.config, "JSON file with option values");
  return o;
}

template <class T>
std::vector<T> split_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

bool given(const CLI::App* sub, const std::string& name) {
  try {
    return sub->get_option(name)->count() > 0;
  } catch (const CLI::OptionNotFound&) {
    return false;
  }
}

// Fills options not given on the command line from the JSON config file.
void apply_config_file(const CLI::App* sub, Config& cfg) {
  if (cfg.config.empty()) return;
  std::ifstream in(cfg.config);
  if (!in) throw UsageError("cannot open config file " + cfg.config);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file " + cfg.config + ": " + e.what());
  }
  auto take = [&](const char* key, const std::string& flag, auto& field) {
    if (j.contains(key) && !given(sub, flag)) j.at(key).get_to(field);
  };
  take("p", "-p", cfg.p);
  take("alpha", "--alpha", cfg.alpha);
  take("digits", "--digits", cfg.digits);
  take("D", "--digits", cfg.digits);
  take("depth", "--depth", cfg.depth);
  if (j.contains("bound") && !given(sub, "--bound")) {
    cfg.bound = j["bound"].is_string() ? j["bound"].get<std::string>() : j["bound"].dump();
  }
  take("limit", "--limit", cfg.limit);
  take("index", "--index", cfg.index);
  take("truncation", "--truncation", cfg.truncation);
  take("grid", "--grid", cfg.grid);
  take("format", "--format", cfg.format);
  take("out", "--out", cfg.out);
  take("jobs", "--jobs", cfg.jobs);
}

CantorSystem require_system(const Config& cfg) {
  if (cfg.p == 0 || cfg.alpha == 0 || cfg.digits.empty()) {
    if (cfg.p == 0) throw UsageError("missing -p");
    if (cfg.alpha == 0) throw UsageError("missing -a/--alpha");
    throw UsageError("missing -D/--digits");
  }
  return build_system(cfg.p, cfg.alpha, cfg.digits);
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("unsupported --format " + cfg.format);
}

json integer_json(const Integer& k) {
  if (fits_int64(k)) return k.convert_to<std::int64_t>();
  return k.str();
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

std::string polynomial_factorization(const CantorSystem& s) {
  std::string text;
  for (int t : s.cyclotomic_exponents()) {
    if (!text.empty()) text += " * ";
    std::int64_t q = 1;
    for (int i = 0; i < t; ++i) q *= s.p();
    text += "Phi_" + std::to_string(q);
  }
  if (!s.is_cyclotomic_product()) {
    if (!text.empty()) text += " * ";
    text += "(" + s.residual_factor().to_string() + ")";
  }
  return text.empty() ? "1" : text;
}

int cmd_analyze(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  const CantorSystem s = require_system(cfg);
  const auto hadamard = enumerate_hadamard_L(s);
  std::vector<std::int64_t> factors;
  for (int t : s.cyclotomic_exponents()) {
    std::int64_t q = 1;
    for (int i = 0; i < t; ++i) q *= s.p();
    factors.push_back(q);
  }
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "p = " << s.p() << ", alpha = " << s.alpha() << ", N = " << s.modulus() << "\n";
    os << "D = {";
    for (std::size_t i = 0; i < s.digits().size(); ++i) os << (i ? "," : "") << s.digits()[i];
    os << "}, |D| = " << s.digit_count() << "\n";
    os << "P_D = " << s.digit_polynomial().to_string() << "\n";
    os << "P_D = " << polynomial_factorization(s) << "\n";
    os << "T = {";
    for (std::size_t i = 0; i < s.cyclotomic_exponents().size(); ++i) {
      os << (i ? "," : "") << s.cyclotomic_exponents()[i];
    }
    os << "}, p^|T| = " << s.branching_bound() << "\n";
    os << "is_cyclotomic_product = " << std::boolalpha << s.is_cyclotomic_product() << "\n";
    os << "circle_hypothesis = " << s.circle_hypothesis() << "\n";
    os << "hadamard_sets = " << hadamard.sets.size() << "\n";
    if (!hadamard.diagnostic.empty()) os << "note: " << hadamard.diagnostic << "\n";
    emit(cfg, out, os.str());
    return kSuccess;
  }
  json j = s;
  j["m"] = s.digit_count();
  j["branching_bound"] = s.branching_bound();
  j["digit_polynomial"] = s.digit_polynomial().to_string();
  j["cyclotomic_factors"] = factors;
  j["residual_factor"] = s.residual_factor().to_string();
  j["factorization"] = polynomial_factorization(s);
  j["hadamard_sets"] = hadamard.sets.size();
  if (!hadamard.diagnostic.empty()) j["diagnostic"] = hadamard.diagnostic;
  emit(cfg, out, j.dump(2) + "\n");
  return kSuccess;
}

SpectralLabeling select_labeling(const Config& cfg, const CLI::App* sub) {
  if (cfg.depth < 1) throw UsageError("--depth must be at least 1");
  if (!cfg.labeling.empty()) {
    std::ifstream in(cfg.labeling);
    if (!in) throw UsageError("cannot open labeling file " + cfg.labeling);
    json j;
    try {
      j = json::parse(in);
      return labeling_from_json(j);
    } catch (const json::exception& e) {
      throw UsageError("labeling file " + cfg.labeling + ": " + e.what());
    }
  }
  const CantorSystem s = require_system(cfg);
  if (!s.is_cyclotomic_product()) {
    throw UnsupportedSystem("P_D = " + polynomial_factorization(s) +
                            " is not a product of Phi_{p^t}, t in T; no spectral labeling exists");
  }
  if (!given(sub, "--index")) return canonical_labeling(s, cfg.depth);
  if (cfg.index >= cfg.limit) {
    throw UsageError("--index " + std::to_string(cfg.index) + " is not below --limit " + std::to_string(cfg.limit));
  }
  std::optional<SpectralLabeling> found;
  std::size_t seen = 0;
  enumerate_labelings(s, cfg.depth, [&](const SpectralLabeling& t) {
    if (seen++ == cfg.index) {
      found = t;
      return false;
    }
    return true;
  });
  if (!found) throw UsageError("--index " + std::to_string(cfg.index) + " exceeds the number of labelings");
  return *found;
}

int cmd_tree(const Config& cfg, const CLI::App* sub, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"json", "dot"});
  const SpectralLabeling tree = select_labeling(cfg, sub);
  const auto check = validate_labeling(tree);
  if (!check.valid) err << "warning: labeling is not spectral: " << check.reason << "\n";
  std::ostringstream os;
  if (cfg.format == "dot") {
    write_dot(os, tree);
  } else {
    os << json(tree).dump(2) << "\n";
  }
  emit(cfg, out, os.str());
  return check.valid ? kSuccess : kVerificationFailure;
}

int cmd_spectrum(const Config& cfg, const CLI::App* sub, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"json", "text"});
  const SpectralLabeling tree = select_labeling(cfg, sub);
  const auto check = validate_labeling(tree);
  if (!check.valid) err << "warning: labeling is not spectral: " << check.reason << "\n";
  const FrequencySet lambda = lambda_of_labeling(tree, tree.depth());
  const auto n = tree.system().modulus();
  std::ostringstream os;
  if (cfg.format == "text") {
    for (const auto& k : lambda) os << k << " " << render(expand(k, n)) << "\n";
  } else {
    json elems = json::array();
    for (const auto& k : lambda) elems.push_back({{"value", integer_json(k)}, {"expansion", render(expand(k, n))}});
    json j{{"system", tree.system()}, {"depth", tree.depth()}, {"elements", elems}};
    os << j.dump(2) << "\n";
  }
  emit(cfg, out, os.str());
  return check.valid ? kSuccess : kVerificationFailure;
}

int cmd_verify(const Config& cfg, const CLI::App* sub, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  const CantorSystem s = require_system(cfg);
  std::vector<Integer> values;
  for (const auto& text : cfg.frequencies) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) values.push_back(parse_integer(item));
    }
  }
  if (values.empty()) throw UsageError("verify needs at least one frequency");
  const FrequencySet set(s.modulus(), std::move(values));
  int depth = 1;
  if (given(sub, "--depth")) {
    if (cfg.depth < 1) throw UsageError("--depth must be at least 1");
    depth = cfg.depth;
  } else {
    for (const auto& k : set) depth = std::max<int>(depth, static_cast<int>(expand(k, s.modulus()).prefix.size()) + 1);
  }
  const auto family = is_orthogonal_family(s, set);
  const auto profile = branching_profile(s, set, depth);
  const bool ok = family.orthogonal && profile.within_bound();

  std::ostringstream os;
  if (cfg.format == "text") {
    os << "orthogonal: " << (family.orthogonal ? "yes" : "no") << "\n";
    if (family.violation) {
      os << "violating pair: (" << family.violation->first << ", " << family.violation->second << ")\n";
    }
    os << "branching bound p^|T| = " << profile.bound << "\n";
    for (const auto& r : profile.records) {
      os << "prefix [";
      for (std::size_t i = 0; i < r.prefix.size(); ++i) os << (i ? "," : "") << r.prefix[i];
      os << "] -> {";
      for (std::size_t i = 0; i < r.digits.size(); ++i) os << (i ? "," : "") << r.digits[i];
      os << "} count " << r.count() << (r.within_bound ? "" : "  EXCEEDS BOUND") << "\n";
    }
    os << (ok ? "PASS" : "FAIL") << "\n";
  } else {
    json records = json::array();
    for (const auto& r : profile.records) {
      records.push_back({{"prefix", r.prefix}, {"digits", r.digits}, {"count", r.count()},
                         {"within_bound", r.within_bound}});
    }
    json j{{"orthogonal", family.orthogonal},
           {"branching_bound", profile.bound},
           {"within_bound", profile.within_bound()},
           {"profile", records}};
    if (family.violation) {
      j["violating_pair"] = {integer_json(family.violation->first), integer_json(family.violation->second)};
    }
    os << j.dump(2) << "\n";
  }
  emit(cfg, out, os.str());
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_muhat(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"csv"});
  const CantorSystem s = require_system(cfg);
  if (cfg.truncation < 1) throw UsageError("-J/--truncation must be at least 1");
  double lo = 0, hi = 16, step = 1;
  if (!cfg.grid.empty()) {
    std::stringstream ss(cfg.grid);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c) ) {
      throw UsageError("--grid expects lo:hi:step");
    }
    try {
      lo = std::stod(a);
      hi = std::stod(b);
      step = std::stod(c);
    } catch (const std::exception&) {
      throw UsageError("--grid expects numeric lo:hi:step");
    }
  }
  std::ostringstream os;
  write_grid_csv(os, mu_hat_grid(s, lo, hi, step, cfg.truncation));
  emit(cfg, out, os.str());
  return kSuccess;
}

// ---- oracle sweeps --------------------------------------------------------

struct SweepFailure {
  std::string message;
};

std::optional<SweepFailure> sweep_muhat(const CantorSystem& s, std::int64_t bound, unsigned jobs) {
  auto run_range = [&s](std::int64_t from, std::int64_t to) -> std::optional<std::pair<std::int64_t, std::string>> {
    for (std::int64_t k = from; k <= to; ++k) {
      const double xi = static_cast<double>(k);
      const int j = truncation_for(s, xi, 1e-10);
      const auto v = mu_hat_truncated(s, xi, j);
      const double mod = std::abs(v.value);
      const bool exact = mu_hat_is_zero(s, Integer(k));
      const bool numeric = mod < 1e-9;
      if (exact != numeric || (!exact && mod <= 2 * v.tail_bound)) {
        std::ostringstream os;
        os << "k = " << k << ": exact zero = " << exact << ", |truncated| = " << mod << " (J = " << j
           << ", tail_bound = " << v.tail_bound << ")";
        return std::make_pair(k, os.str());
      }
    }
    return std::nullopt;
  };
  jobs = std::max(1u, jobs);
  const std::int64_t total = 2 * bound + 1;
  const std::int64_t chunk = (total + jobs - 1) / jobs;
  std::vector<std::future<std::optional<std::pair<std::int64_t, std::string>>>> parts;
  for (std::int64_t start = -bound; start <= bound; start += chunk) {
    const std::int64_t stop = std::min(bound, start + chunk - 1);
    parts.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run_range, start, stop));
  }
  std::optional<SweepFailure> first;
  for (auto& f : parts) {
    if (auto r = f.get(); r && !first) first = SweepFailure{r->second};
  }
  return first;
}

std::optional<SweepFailure> check_roots(std::int64_t p, const std::vector<int>& betas) {
  const auto best = max_ratio_closed_subset(p, betas);
  std::size_t cap = 1;
  for (std::size_t i = 0; i < betas.size(); ++i) cap *= static_cast<std::size_t>(p);
  std::string where = "p = " + std::to_string(p) + ", betas = {";
  for (std::size_t i = 0; i < betas.size(); ++i) where += (i ? "," : "") + std::to_string(betas[i]);
  where += "}";
  if (!is_ratio_closed(p, betas, best)) return SweepFailure{where + ": witness is not ratio-closed"};
  if (best.numerators.size() > cap) {
    return SweepFailure{where + ": ratio-closed set of size " + std::to_string(best.numerators.size()) +
                        " exceeds p^m = " + std::to_string(cap)};
  }
  return std::nullopt;
}

std::optional<SweepFailure> sweep_hadamard(const CantorSystem& s) {
  const std::int64_t n = s.modulus();
  const std::size_t m = s.digit_count();
  std::vector<std::int64_t> labels;
  std::optional<SweepFailure> fail;
  auto rec = [&](auto&& self, std::int64_t start) -> void {
    if (fail) return;
    if (labels.size() == m) {
      const bool exact = hadamard_triple_check(s, labels, CheckMode::Exact);
      const bool numeric = hadamard_triple_check(s, labels, CheckMode::Numeric);
      HadamardCandidate cand{n, s.digits(), labels};
      const bool generic = hadamard_triple_check(cand, CheckMode::Exact);
      if (exact != numeric || exact != generic) {
        std::string l;
        for (auto x : labels) l += std::to_string(x) + " ";
        fail = SweepFailure{"N = " + std::to_string(n) + ", L = { " + l + "}: exact and numeric modes disagree"};
      }
      return;
    }
    for (std::int64_t x = start; x < n; ++x) {
      labels.push_back(x);
      self(self, x + 1);
      labels.pop_back();
    }
  };
  rec(rec, 0);
  return fail;
}

int cmd_oracle(const Config& cfg, const CLI::App* sub, std::ostream& out) {
  std::vector<std::string> checks;
  {
    std::stringstream ss(cfg.checks);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      if (item != "muhat" && item != "roots" && item != "hadamard") throw UsageError("unknown check '" + item + "'");
      checks.push_back(item);
    }
  }
  if (checks.empty()) throw UsageError("no oracle checks selected");
  std::int64_t bound = 4096;
  if (!cfg.bound.empty()) {
    try {
      bound = std::stoll(cfg.bound);
    } catch (const std::exception&) {
      throw UsageError("--bound expects an integer");
    }
    if (bound < 0) throw UsageError("--bound must be nonnegative");
  }

  std::vector<CantorSystem> systems;
  const bool custom = given(sub, "-p") || given(sub, "--alpha") || given(sub, "--digits") || cfg.p != 0;
  if (custom && !given(sub, "--betas")) {
    systems.push_back(require_system(cfg));
  } else if (!custom) {
    systems.push_back(build_system(2, 2, {0, 2}));
    systems.push_back(build_system(2, 3, {0, 2, 4, 6}));
  }

  bool all_ok = true;
  auto report = [&](const std::string& name, const std::optional<SweepFailure>& f) {
    out << (f ? "FAIL " : "PASS ") << name;
    if (f) out << ": " << f->message;
    out << "\n";
    all_ok = all_ok && !f;
  };
  auto label = [](const CantorSystem& s) {
    std::string d;
    for (auto x : s.digits()) d += (d.empty() ? "" : ",") + std::to_string(x);
    return "(p=" + std::to_string(s.p()) + ", alpha=" + std::to_string(s.alpha()) + ", D={" + d + "})";
  };

  for (const auto& c : checks) {
    if (c == "muhat") {
      for (const auto& s : systems) {
        report("muhat " + label(s) + " |k| <= " + std::to_string(bound), sweep_muhat(s, bound, cfg.jobs));
      }
    } else if (c == "roots") {
      if (given(sub, "--betas")) {
        const std::int64_t p = cfg.p == 0 ? 2 : cfg.p;
        report("roots p=" + std::to_string(p), check_roots(p, cfg.betas));
      } else {
        for (std::int64_t p : {2, 3}) {
          const int top = p == 2 ? 6 : 3;
          std::optional<SweepFailure> fail;
          fail = check_roots(p, {});
          for (int a = 1; a <= top && !fail; ++a) {
            fail = check_roots(p, {a});
            for (int b = a + 1; b <= top && !fail; ++b) fail = check_roots(p, {a, b});
          }
          report("roots p=" + std::to_string(p) + " |betas| <= 2", fail);
        }
      }
    } else {
      std::vector<CantorSystem> targets = systems;
      if (!custom) targets.push_back(build_system(3, 2, {0, 3, 6}));
      for (const auto& s : targets) report("hadamard " + label(s), sweep_hadamard(s));
    }
  }
  return all_ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal orthogonal frequency sets of Cantor measures with base p^alpha", "cantor-spectra"};
  app.require_subcommand(1);
  Config cfg;

  auto* analyze = app.add_subcommand("analyze", "derive T, hypothesis flags and Hadamard label sets");
  add_system_options(analyze, cfg);
  analyze->add_option("--format", cfg.format, "json or text");
  analyze->add_option("--out", cfg.out, "output path");

  auto* tree = app.add_subcommand("tree", "emit a spectral labeling as JSON or DOT");
  auto* spectrum = app.add_subcommand("spectrum", "list the frequencies of a spectral labeling");
  for (auto* sub : {tree, spectrum}) {
    add_system_options(sub, cfg);
    sub->add_option("--depth", cfg.depth, "explicit tree depth");
    sub->add_option("--index", cfg.index, "position in the enumeration order instead of the canonical labeling");
    sub->add_option("--limit", cfg.limit, "enumeration cap for --index");
    sub->add_option("--labeling", cfg.labeling, "read the labeling from a JSON tree file");
    sub->add_option("--format", cfg.format, sub == tree ? "json or dot" : "json or text");
    sub->add_option("--out", cfg.out, "output path");
  }

  auto* verify = app.add_subcommand("verify", "check orthogonality and the branching bound of a frequency set");
  add_system_options(verify, cfg);
  verify->add_option("--depth", cfg.depth, "profile depth (default: enough digits for every element)");
  verify->add_option("--format", cfg.format, "json or text");
  verify->add_option("--out", cfg.out, "output path");
  verify->add_option("frequencies", cfg.frequencies, "integers, space or comma separated");

  auto* muhat = app.add_subcommand("muhat", "tabulate the truncated Fourier transform as CSV");
  add_system_options(muhat, cfg);
  muhat->add_option("-J,--truncation", cfg.truncation, "number of product factors");
  muhat->add_option("--grid", cfg.grid, "lo:hi:step");
  muhat->add_option("--format", cfg.format, "csv");
  muhat->add_option("--out", cfg.out, "output path");

  auto* oracle = app.add_subcommand("oracle", "run exact-versus-numeric consistency sweeps");
  add_system_options(oracle, cfg);
  oracle->add_option("--bound", cfg.bound, "sweep |k| <= bound");
  oracle->add_option("--checks", cfg.checks, "comma list of muhat, roots, hadamard");
  oracle->add_option("--betas", cfg.betas_text, "single ratio-closed instance (with -p), comma separated");
  oracle->add_option("--jobs", cfg.jobs, "worker threads for the muhat sweep");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    if (!cfg.digits_text.empty()) cfg.digits = split_list<std::int64_t>(cfg.digits_text, "--digits");
    if (!cfg.betas_text.empty()) cfg.betas = split_list<int>(cfg.betas_text, "--betas");
    apply_config_file(sub, cfg);
    if (sub == muhat && !given(sub, "--format") && cfg.format == "json") cfg.format = "csv";
    if (sub == analyze) return cmd_analyze(cfg, out);
    if (sub == tree) return cmd_tree(cfg, sub, out, err);
    if (sub == spectrum) return cmd_spectrum(cfg, sub, out, err);
    if (sub == verify) return cmd_verify(cfg, sub, out);
    if (sub == muhat) return cmd_muhat(cfg, out);
    return cmd_oracle(cfg, sub, out);
  } catch (const UnsupportedSystem& e) {
    err << "unsupported system: " << e.what() << "\n";
    return kUnsupportedSystem;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace cantor::cli
