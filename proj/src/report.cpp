#include "trisecant/report.hpp"

#include "json.hpp"

#include <iomanip>
#include <sstream>

namespace trisecant {

using nlohmann::ordered_json;

std::optional<Format> parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

namespace {

ordered_json number(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return ordered_json(static_cast<std::int64_t>(x));
  }
  return ordered_json(x.str());
}

ordered_json tuple_json(const InvariantTuple& t) {
  ordered_json o;
  o["n"] = number(t.n);
  o["e"] = number(t.e);
  o["k"] = number(t.k);
  o["c"] = number(t.c);
  o["r"] = t.r ? number(*t.r) : ordered_json(nullptr);
  return o;
}

ordered_json row_json(const EnumerationRow& row) {
  ordered_json o = tuple_json(row.tuple);
  o["flags"] = to_string(row.flag);
  if (row.flag == RowFlag::extra_not_excluded) o["survives"] = row.survives;
  return o;
}

ordered_json rows_json(const EnumerationResult& result) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : result.rows) rows.push_back(row_json(row));
  return rows;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

bool carries_r(const EnumerationResult& result) {
  for (const auto& row : result.rows) {
    if (row.tuple.r) return true;
  }
  return false;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string render_csv(const EnumerationResult& result) {
  std::ostringstream os;
  os << "n,e,k,c,r,flags\n";
  for (const auto& row : result.rows) {
    const auto& t = row.tuple;
    os << t.n << ',' << t.e << ',' << t.k << ',' << t.c << ',';
    if (t.r) os << *t.r;
    os << ',' << to_string(row.flag) << '\n';
  }
  return os.str();
}

std::string render_json(const EnumerationResult& result) { return dump(rows_json(result)); }

std::string render_text(const EnumerationResult& result) {
  std::ostringstream os;
  const bool with_r = carries_r(result);
  constexpr int w = 6;
  os << std::setw(5) << "" << std::setw(w) << "n" << std::setw(w) << "e" << std::setw(w) << "k" << std::setw(w)
     << "c";
  if (with_r) os << std::setw(w) << "r";
  os << '\n';
  for (const auto& row : result.rows) {
    const auto& t = row.tuple;
    const std::string label = reference_label(result.profile, t).value_or("*");
    os << std::left << std::setw(5) << label << std::right << std::setw(w) << t.n << std::setw(w) << t.e
       << std::setw(w) << t.k << std::setw(w) << t.c;
    if (with_r) os << std::setw(w) << (t.r ? t.r->str() : "");
    os << '\n';
  }
  os << result.rows.size() << " rows, " << result.extra_count() << " extra\n";
  for (const auto& row : result.rows) {
    if (row.flag == RowFlag::extra_not_excluded) {
      os << "extra " << row.tuple.str() << " survives: " << join(row.survives, ", ") << '\n';
    }
  }
  for (const auto& t : result.missing) os << "missing " << t.str() << '\n';
  return os.str();
}

std::string render(const EnumerationResult& result, Format format) {
  switch (format) {
    case Format::text:
      return render_text(result);
    case Format::json:
      return render_json(result);
    case Format::csv:
      return render_csv(result);
  }
  return {};
}

std::string render_scan(const EnumerationResult& result, int r_max, Format format) {
  if (format != Format::json) return render(result, format);
  ordered_json o;
  o["profile"] = result.profile;
  o["r_max"] = r_max;
  o["n_min"] = result.window.n_min;
  o["n_max"] = result.window.n_max;
  o["admissible"] = rows_json(result);
  ordered_json extras = ordered_json::array();
  for (const auto& row : result.rows) {
    if (row.flag == RowFlag::extra_not_excluded) extras.push_back(row_json(row));
  }
  o["extras"] = extras;
  return dump(o);
}

std::string render_conic_bundle(const Polynomial& cubic, const std::vector<Integer>& degrees, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      ordered_json o;
      o["cubic"] = cubic.str("n");
      ordered_json coeffs = ordered_json::array();
      for (int i = 0; i <= cubic.degree(); ++i) coeffs.push_back(number(cubic.coefficient(i)));
      o["coefficients"] = coeffs;
      ordered_json roots = ordered_json::array();
      for (const auto& d : degrees) roots.push_back(number(d));
      o["degrees"] = roots;
      return dump(o);
    }
    case Format::csv:
      os << "degree\n";
      for (const auto& d : degrees) os << d << '\n';
      return os.str();
    case Format::text:
      os << "d3(n, n - 12, 24 - 3n, 3n - 12) = " << cubic.str("n") << '\n';
      os << "positive integer roots:";
      for (const auto& d : degrees) os << ' ' << d;
      os << '\n';
      return os.str();
  }
  return {};
}

namespace {

ordered_json class_json(const SurfaceModel& model, const DivisorClass& d) {
  ordered_json o;
  o["class"] = format_class(model, d);
  o["coefficients"] = d.coeffs;
  return o;
}

ordered_json model_json(const SurfaceModel& model) {
  ordered_json o;
  o["base"] = model.base == Base::plane ? "plane" : "quadric";
  o["m"] = model.m;
  return o;
}

std::string coeff_csv(const DivisorClass& d) {
  std::string out;
  for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(d.coeffs[i]);
  }
  return out;
}

}  // namespace

std::string render_line_classes(const Polarization& pol, const LineClassResult& result, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      ordered_json o;
      o["model"] = model_json(pol.model);
      o["H"] = class_json(pol.model, pol.H);
      o["total"] = result.classes.size();
      ordered_json orbits = ordered_json::array();
      for (const auto& orb : result.orbits) {
        ordered_json j = class_json(pol.model, orb.representative);
        j["size"] = orb.size;
        orbits.push_back(j);
      }
      o["orbits"] = orbits;
      ordered_json classes = ordered_json::array();
      for (const auto& c : result.classes) classes.push_back(c.coeffs);
      o["classes"] = classes;
      return dump(o);
    }
    case Format::csv:
      os << "orbit,size,coefficients\n";
      for (const auto& orb : result.orbits) {
        os << '"' << format_class(pol.model, orb.representative) << "\"," << orb.size << ','
           << coeff_csv(orb.representative) << '\n';
      }
      return os.str();
    case Format::text:
      os << pol.model.str() << ", H = " << format_class(pol.model, pol.H) << '\n';
      os << result.classes.size() << " line classes in " << result.orbits.size() << " orbits\n";
      for (const auto& orb : result.orbits) {
        os << std::setw(6) << orb.size << "  " << format_class(pol.model, orb.representative) << '\n';
      }
      return os.str();
  }
  return {};
}

std::string render_decompositions(const Polarization& pol, const std::vector<Decomposition>& result,
                                  Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& d : result) {
        ordered_json o;
        o["A"] = class_json(pol.model, d.A);
        o["B"] = class_json(pol.model, d.B);
        arr.push_back(o);
      }
      return dump(arr);
    }
    case Format::csv:
      os << "A,B\n";
      for (const auto& d : result) os << coeff_csv(d.A) << ',' << coeff_csv(d.B) << '\n';
      return os.str();
    case Format::text:
      os << result.size() << " decompositions\n";
      for (const auto& d : result) {
        os << "A = " << format_class(pol.model, d.A) << "   B = " << format_class(pol.model, d.B) << '\n';
      }
      return os.str();
  }
  return {};
}

std::string render_invariants(const std::string& name, const Polarization& pol, const InvariantTuple& t,
                              Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      ordered_json o;
      o["model"] = name;
      o["surface"] = model_json(pol.model);
      o["H"] = class_json(pol.model, pol.H);
      o["invariants"] = tuple_json(t);
      return dump(o);
    }
    case Format::csv:
      os << "n,e,k,c\n" << t.n << ',' << t.e << ',' << t.k << ',' << t.c << '\n';
      return os.str();
    case Format::text:
      os << name << ": " << pol.model.str() << ", H = " << format_class(pol.model, pol.H) << '\n';
      os << "(n, e, k, c) = " << t.str() << '\n';
      return os.str();
  }
  return {};
}

std::string render_verification(const std::vector<VerificationReport>& reports, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json o;
        o["entry"] = r.entry;
        o["passed"] = r.passed();
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.checks) {
          checks.push_back({{"check", c.name}, {"passed", c.passed}, {"exempt", c.exempt}, {"detail", c.detail}});
        }
        o["checks"] = checks;
        arr.push_back(o);
      }
      return dump(arr);
    }
    case Format::csv:
      os << "entry,check,status,detail\n";
      for (const auto& r : reports) {
        for (const auto& c : r.checks) {
          os << '"' << r.entry << "\"," << c.name << ',' << (c.passed ? "pass" : c.exempt ? "exempt" : "fail")
             << ",\"" << c.detail << "\"\n";
        }
      }
      return os.str();
    case Format::text:
      for (const auto& r : reports) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.entry << '\n';
        for (const auto& c : r.checks) {
          if (!c.passed) os << "     " << (c.exempt ? "exempt " : "failed ") << c.name << ": " << c.detail << '\n';
        }
      }
      return os.str();
  }
  return {};
}

std::string render_cross_check(const CrossCheckReport& report, Format format) {
  auto target = [](Mapping::Target t) {
    switch (t) {
      case Mapping::Target::entry:
        return "entry";
      case Mapping::Target::exclusion:
        return "exclusion";
      case Mapping::Target::none:
        return "none";
    }
    return "none";
  };
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      ordered_json o;
      o["total"] = report.total();
      ordered_json maps = ordered_json::array();
      for (const auto& m : report.mappings) {
        ordered_json j;
        j["table"] = m.table;
        j["row"] = m.row;
        j["tuple"] = tuple_json(m.tuple);
        j["target"] = target(m.target);
        j["name"] = m.target_name;
        maps.push_back(j);
      }
      o["mappings"] = maps;
      o["errors"] = report.errors;
      return dump(o);
    }
    case Format::csv:
      os << "table,row,n,e,k,c,target,name\n";
      for (const auto& m : report.mappings) {
        os << m.table << ',' << m.row << ',' << m.tuple.n << ',' << m.tuple.e << ',' << m.tuple.k << ','
           << m.tuple.c << ',' << target(m.target) << ",\"" << m.target_name << "\"\n";
      }
      return os.str();
    case Format::text:
      for (const auto& m : report.mappings) {
        os << std::left << std::setw(18) << m.table << std::setw(5) << m.row << std::right << ' '
           << m.tuple.str() << " -> " << target(m.target) << ' ' << m.target_name << '\n';
      }
      for (const auto& e : report.errors) os << "error: " << e << '\n';
      os << (report.total() ? "mapping is total\n" : "mapping is NOT total\n");
      return os.str();
  }
  return {};
}

std::string render_formulas(const InvariantTuple& t, Format format) {
  ordered_json o;
  o["tuple"] = tuple_json(t);
  o["d3"] = number(d3(t));
  o["t3"] = number(t3(t));
  o["s3"] = number(s3(t));
  o["double_point"] = number(double_point_p4(t));
  const bool parity = is_even(t.n + t.e);
  const bool noether = divides(12, t.k + t.c);
  o["sectional_genus"] = parity ? number(sectional_genus(t.n, t.e)) : ordered_json(nullptr);
  o["chi"] = to_string(holomorphic_euler_characteristic(t));
  if (parity && noether) {
    o["severi_p4"] = number(severi_p4(t.n - 3, (t.n + t.e) / 2, (t.k + t.c) / 12, t.k));
  } else {
    o["severi_p4"] = nullptr;
  }
  for (int ambient : {4, 5}) {
    const auto p = t.n >= 1 ? genus_ceiling(t.n, ambient) : std::nullopt;
    o["castelnuovo_p" + std::to_string(ambient)] = p ? number(*p) : ordered_json(nullptr);
  }
  o["harris_p1"] = to_string(harris_p1(t.n));
  const auto ceiling = t.n >= 1 ? genus_ceiling(t.n, 5) : std::nullopt;
  if (ceiling) {
    const Predicates p = predicates(t, Rational(*ceiling));
    o["predicates"] = {{"hodge", p.hodge},
                       {"miyaoka", p.miyaoka},
                       {"noether", p.noether},
                       {"parity", p.parity},
                       {"genus_le_p5", p.genus_in_range}};
  }

  std::ostringstream os;
  switch (format) {
    case Format::json:
      return dump(o);
    case Format::csv:
      os << "quantity,value\n";
      for (const auto& [key, value] : o.items()) {
        if (key == "tuple" || key == "predicates") continue;
        os << key << ',' << (value.is_string() ? value.get<std::string>() : value.is_null() ? "" : value.dump())
           << '\n';
      }
      return os.str();
    case Format::text:
      os << "(n, e, k, c) = " << t.str() << '\n';
      for (const auto& [key, value] : o.items()) {
        if (key == "tuple") continue;
        if (key == "predicates") {
          for (const auto& [pk, pv] : value.items()) os << std::setw(16) << pk << "  " << pv.dump() << '\n';
          continue;
        }
        os << std::setw(16) << key << "  "
           << (value.is_string() ? value.get<std::string>() : value.is_null() ? "n/a" : value.dump()) << '\n';
      }
      return os.str();
  }
  return {};
}

}  // namespace trisecant
