#include "trisecant/cli.hpp"

#include "trisecant/catalog.hpp"
#include "trisecant/enumeration.hpp"
#include "trisecant/picard.hpp"
#include "trisecant/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace trisecant::cli {
namespace {

constexpr const char* kSynopsis =
    "usage: trisecant [--format text|json|csv] [--out PATH] [--threads N] <command>\n"
    "  enumerate no-lines (--small | --large) | isolated-line | inner-projection | conic-bundle\n"
    "  enumerate --profile NAME [--n-min N] [--n-max N]\n"
    "  scan-conjecture [--r-max N] [--n-min N] [--n-max N]\n"
    "  formulas --n N --e E --k K --c C [--r R]\n"
    "  picard (invariants | lines | decompose) --model NAME\n"
    "  catalog (list | verify | cross-check) [--path FILE]\n";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  std::string out_path;
  unsigned threads = 1;
  std::optional<int> n_min;
  std::optional<int> n_max;
};

struct Sink {
  const Common& common;
  std::ostream& out;
  std::ostream& err;

  Format format() const { return *parse_format(common.format); }

  /// Writes the report; false if the --out file cannot be written.
  bool emit(const std::string& text) const {
    if (common.out_path.empty()) {
      out << text;
      return true;
    }
    std::ofstream file(common.out_path, std::ios::binary);
    file << text;
    if (!file) {
      err << "trisecant: cannot write '" << common.out_path << "'\n";
      return false;
    }
    return true;
  }
};

EnumerationOptions options_from(const Common& c) {
  EnumerationOptions o;
  o.threads = c.threads;
  o.n_min = c.n_min;
  o.n_max = c.n_max;
  return o;
}

int finish(const Sink& sink, const std::string& text, bool expected) {
  if (!sink.emit(text)) return expectation_failed;
  return expected ? ok : expectation_failed;
}

int run_profile_by_name(const std::string& name, const Sink& sink) {
  const EnumerationOptions opts = options_from(sink.common);
  if (name == "conic-bundle") {
    const auto degrees = conic_bundle_degrees();
    const std::vector<Integer> expected = {6, 7, 8};
    return finish(sink, render_conic_bundle(conic_bundle_cubic(), degrees, sink.format()), degrees == expected);
  }
  EnumerationResult result;
  if (name == "no-lines-small") {
    result = enumerate_no_lines_small(opts);
  } else if (name == "no-lines-large") {
    result = enumerate_no_lines_large(opts);
  } else if (name == "isolated-line") {
    result = enumerate_isolated_line(opts);
  } else if (name == "inner-projection") {
    result = enumerate_inner_projection(opts);
  } else {
    throw UsageError("unknown profile '" + name +
                     "' (expected no-lines-small, no-lines-large, isolated-line, inner-projection, conic-bundle)");
  }
  return finish(sink, render(result, sink.format()), result.missing.empty() && result.extra_count() == 0);
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(std::string(what) + " expects LO,HI");
  try {
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " expects two integers");
  }
}

DivisorClass parse_class(const std::string& text, const SurfaceModel& model) {
  DivisorClass d;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      d.coeffs.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw UsageError("--target expects comma-separated integers");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (d.coeffs.size() != model.rank()) {
    throw UsageError("--target needs " + std::to_string(model.rank()) + " coefficients for " + model.str());
  }
  return d;
}

Polarization model_by_name(const std::string& name) {
  auto pol = polarization_by_name(name);
  if (!pol) {
    std::string known;
    for (const auto& n : polarization_names()) known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown model '" + name + "' (known: " + known + ")");
  }
  return *pol;
}

struct PicardArgs {
  std::string model = "bl11-degree12";
  long long chi = 1;
  long long deg = 0;
  std::string pair = "10,11";
  std::string target;
  std::string leading;
  std::string mult;
};

Box box_for(const Polarization& pol, const PicardArgs& a, bool decomposition) {
  const bool is_degree12 = pol.model == SurfaceModel::plane(11) && pol.H == bl11_degree12().H;
  if (a.leading.empty() && a.mult.empty() && is_degree12) {
    return decomposition ? degree12_decomposition_box() : degree12_line_box();
  }
  const auto lead = parse_pair(a.leading.empty() ? (decomposition ? "1,6" : "0,4") : a.leading, "--leading");
  const auto mult = parse_pair(a.mult.empty() ? (decomposition ? "0,2" : "-1,2") : a.mult, "--mult");
  return multiplicity_box(pol.model, std::vector<CoordinateRange>(pol.model.e_offset(), {lead.first, lead.second}),
                          std::vector<CoordinateRange>(static_cast<std::size_t>(pol.model.m), {mult.first, mult.second}));
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trisecant-free surfaces in P6: invariant searches, formulas, lattices and the surface catalog",
               "trisecant"};
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", common.out_path, "Write the report to PATH instead of stdout");
  app.add_option("--threads", common.threads, "Worker threads for searches")->check(CLI::Range(1u, 256u));
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Bounded searches for invariant tuples (n, e, k, c)");
  enumerate->fallthrough();
  std::string profile;
  enumerate->add_option("--profile", profile, "Named profile instead of a subcommand");
  enumerate->add_option("--n-min", common.n_min, "Override the lower degree bound");
  enumerate->add_option("--n-max", common.n_max, "Override the upper degree bound");
  enumerate->require_subcommand(0, 1);

  auto* no_lines = enumerate->add_subcommand(
      "no-lines", "Surfaces without lines: d3 = t3 = 0 (--small: degree 4..11, --large: degree 12..27)");
  no_lines->fallthrough();
  bool small = false;
  bool large = false;
  auto* small_flag = no_lines->add_flag("--small", small, "Degrees 4..11, genus bounded by p(4)");
  auto* large_flag = no_lines->add_flag("--large", large, "Degrees 12..27, e <= n^2/5 - 2n");
  small_flag->excludes(large_flag);
  auto* isolated = enumerate->add_subcommand(
      "isolated-line", "Surfaces with an isolated (-1)-line: d3 = 0 and the double point formula of the projection");
  isolated->fallthrough();
  auto* inner = enumerate->add_subcommand(
      "inner-projection", "Inner projections: d3 = 0, double point formula, t3 = 4r, s3 = 6 - 6r");
  inner->fallthrough();
  auto* conic = enumerate->add_subcommand(
      "conic-bundle", "Integer roots of d3 along the conic-bundle line e = n - 12, k = 24 - 3n, c = 3n - 12");
  conic->fallthrough();

  // scan-conjecture
  auto* scan = app.add_subcommand(
      "scan-conjecture", "For r = 0..r-max solve d3 = 0, t3 = 4r, s3 = 6 - 6r and list tuples outside the tables");
  scan->alias("scan");
  scan->fallthrough();
  int r_max = 100;
  scan->add_option("--r-max", r_max, "Largest number of (-1)-lines")->check(CLI::Range(0, 100000))->capture_default_str();
  scan->add_option("--n-min", common.n_min, "Override the lower degree bound");
  scan->add_option("--n-max", common.n_max, "Override the upper degree bound");

  // formulas
  auto* formulas = app.add_subcommand("formulas", "Evaluate d3, t3, s3, the double point formula and the bounds");
  formulas->fallthrough();
  long long fn = 0, fe = 0, fk = 0, fc = 0;
  std::optional<long long> fr;
  formulas->add_option("--n", fn, "Degree H^2")->required();
  formulas->add_option("--e", fe, "K.H")->required();
  formulas->add_option("--k", fk, "K^2")->required();
  formulas->add_option("--c", fc, "c2")->required();
  formulas->add_option("--r", fr, "Number of (-1)-lines");

  // picard
  auto* picard = app.add_subcommand("picard", "Intersection theory on blown-up planes and quadrics");
  picard->fallthrough();
  picard->require_subcommand(1);
  PicardArgs pa;
  auto add_model = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--model", pa.model, "Named polarization")->capture_default_str();
  };
  auto* p_inv = picard->add_subcommand("invariants", "(n, e, k, c) of a named polarization");
  add_model(p_inv);
  p_inv->add_option("--chi", pa.chi, "Holomorphic Euler characteristic")->capture_default_str();
  auto* p_lines = picard->add_subcommand("lines", "Numerical line classes H.L = 1, p_a(L) = 0, grouped into orbits");
  add_model(p_lines);
  p_lines->add_option("--leading", pa.leading, "LO,HI for the l (or f1, f2) coefficients");
  p_lines->add_option("--mult", pa.mult, "LO,HI for every multiplicity a_i in L = a l - sum a_i E_i");
  auto* p_dec = picard->add_subcommand("decompose", "Splittings target = A + B with H.A = deg and p_a(A), p_a(B) >= 0");
  add_model(p_dec);
  p_dec->add_option("--deg", pa.deg, "H.A")->required();
  p_dec->add_option("--pair", pa.pair, "i,j for the degree 8 target on bl11-degree12")->capture_default_str();
  p_dec->add_option("--target", pa.target, "Explicit target class as comma-separated coefficients");
  p_dec->add_option("--leading", pa.leading, "LO,HI for the leading coefficients of A");
  p_dec->add_option("--mult", pa.mult, "LO,HI for the multiplicities of A");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "The classification table as data");
  catalog->fallthrough();
  catalog->require_subcommand(1);
  std::string catalog_path = default_catalog_path();
  auto add_path = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--path", catalog_path, "Catalog file");
  };
  auto* c_list = catalog->add_subcommand("list", "Entries with degree, linear system and invariants");
  add_path(c_list);
  auto* c_verify = catalog->add_subcommand("verify", "Check every entry against its constraint class");
  add_path(c_verify);
  auto* c_cross = catalog->add_subcommand("cross-check", "Map every search row to an entry or an exclusion");
  add_path(c_cross);

  std::vector<const char*> argv;
  argv.push_back("trisecant");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "trisecant: " << e.what() << '\n' << kSynopsis;
    return usage_error;
  }

  const Sink sink{common, out, err};
  try {
    if (enumerate->parsed()) {
      std::string name = profile;
      if (no_lines->parsed()) {
        if (!small && !large) throw UsageError("no-lines needs --small or --large");
        name = small ? "no-lines-small" : "no-lines-large";
      } else if (isolated->parsed()) {
        name = "isolated-line";
      } else if (inner->parsed()) {
        name = "inner-projection";
      } else if (conic->parsed()) {
        name = "conic-bundle";
      }
      if (!profile.empty() && name != profile) throw UsageError("--profile conflicts with the subcommand");
      if (name.empty()) throw UsageError("enumerate needs a subcommand or --profile");
      return run_profile_by_name(name, sink);
    }
    if (scan->parsed()) {
      EnumerationResult result = conjecture_scan(r_max, options_from(common));
      return finish(sink, render_scan(result, r_max, sink.format()), result.extra_count() == 0);
    }
    if (formulas->parsed()) {
      InvariantTuple t{fn, fe, fk, fc, std::nullopt};
      if (fr) t.r = Integer(*fr);
      return finish(sink, render_formulas(t, sink.format()), true);
    }
    if (picard->parsed()) {
      const Polarization pol = model_by_name(pa.model);
      if (p_inv->parsed()) {
        return finish(sink, render_invariants(pa.model, pol, invariants_of(pol, pa.chi), sink.format()), true);
      }
      if (p_lines->parsed()) {
        return finish(sink, render_line_classes(pol, enumerate_line_classes(pol, box_for(pol, pa, false)), sink.format()),
                      true);
      }
      DivisorClass target;
      if (!pa.target.empty()) {
        target = parse_class(pa.target, pol.model);
      } else if (pa.model == "bl11-degree12") {
        const auto ij = parse_pair(pa.pair, "--pair");
        target = degree12_octic(static_cast<int>(ij.first), static_cast<int>(ij.second));
      } else {
        throw UsageError("decompose on " + pa.model + " needs --target");
      }
      return finish(sink,
                    render_decompositions(pol, enumerate_decompositions(pol, target, pa.deg, box_for(pol, pa, true)),
                                          sink.format()),
                    true);
    }
    if (catalog->parsed()) {
      Catalog cat;
      try {
        cat = load_catalog(catalog_path);
      } catch (const CatalogError& e) {
        err << "trisecant: " << e.what() << '\n';
        return expectation_failed;
      }
      if (c_list->parsed()) {
        std::ostringstream os;
        if (sink.format() == Format::csv) os << "name,degree,linear_system,n,e,k,c,r,verification\n";
        for (const auto& e : cat.entries) {
          const auto& t = e.invariants;
          if (sink.format() == Format::csv) {
            os << '"' << e.name << "\"," << e.degree << ",\"" << e.linear_system << "\"," << t.n << ',' << t.e << ','
               << t.k << ',' << t.c << ',' << (t.r ? t.r->str() : "") << ',' << to_string(e.verification) << '\n';
          } else {
            os << std::left << std::setw(26) << e.name << std::right << std::setw(4) << e.degree << "  "
               << std::left << std::setw(42) << e.linear_system << std::right << t.str() << '\n';
          }
        }
        if (sink.format() == Format::json) {
          std::ifstream in(catalog_path);
          std::ostringstream raw;
          raw << in.rdbuf();
          return finish(sink, raw.str(), true);
        }
        return finish(sink, os.str(), true);
      }
      if (c_verify->parsed()) {
        std::vector<VerificationReport> reports;
        bool all = true;
        for (const auto& e : cat.entries) {
          reports.push_back(verify_entry(e));
          all = all && reports.back().passed();
        }
        return finish(sink, render_verification(reports, sink.format()), all);
      }
      const EnumerationOptions opts{common.threads, std::nullopt, std::nullopt};
      const std::vector<EnumerationResult> results = {enumerate_no_lines_small(opts), enumerate_no_lines_large(opts),
                                                      enumerate_isolated_line(opts), enumerate_inner_projection(opts)};
      const CrossCheckReport report = cross_check_tables(results, cat);
      return finish(sink, render_cross_check(report, sink.format()), report.total());
    }
  } catch (const UsageError& e) {
    err << "trisecant: " << e.what() << '\n' << kSynopsis;
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "trisecant: " << e.what() << '\n';
    return usage_error;
  } catch (const DomainError& e) {
    err << "trisecant: " << e.what() << '\n';
    return usage_error;
  }
  err << kSynopsis;
  return usage_error;
}

}  // namespace trisecant::cli
