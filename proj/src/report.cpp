#include "liemult/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace liemult {

namespace {


std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ';');
  if (!text.empty() && text.back() == ';') text.pop_back();
  return text;
}

std::string verdict_cells(const BoundVerdict& v) {
  return std::to_string(v.lhs) + " <= " + std::to_string(v.rhs) +
         (v.equality ? "  equality" : (v.holds ? "  strict" : "  VIOLATED"));
}

std::string label_of(const LieAlgebra& l, const InvariantsReport& r) {
  if (!r.nilpotent) return "-";
  auto label = classify_small_t(l);
  return label ? small_t_label_str(*label) : "-";
}

}  // namespace

std::string format_info(const std::string& name, const LieAlgebra& l,
                        OutputFormat format) {
  const InvariantsReport r = invariants_report(l);
  const bool main_ok = r.nilpotent && r.m >= 1;

  if (format == OutputFormat::lines) {
    std::ostringstream out;
    out << "entry key=" << name << " field=" << l.field().str() << " n=" << r.n
        << " m=" << r.m << " center=" << r.dim_center
        << " l2_cap_center=" << r.dim_derived_cap_center
        << " nilpotent=" << (r.nilpotent ? 1 : 0) << " class=";
    if (r.nilpotent)
      out << r.nilpotency_class;
    else
      out << "-";
    out << " rank_d2=" << r.rank_d2 << " rank_d3=" << r.rank_d3
        << " dim_multiplier=" << r.dim_multiplier << " t=" << r.t
        << " batten_lhs=";
    if (r.nilpotent) {
      const BoundVerdict b = check_batten_bound(l);
      out << b.lhs << " batten_rhs=" << b.rhs << " batten_holds=" << b.holds
          << " batten_eq=" << b.equality;
    } else {
      out << "- batten_rhs=- batten_holds=- batten_eq=-";
    }
    if (main_ok) {
      const BoundVerdict m = check_main_bound(l);
      out << " main_lhs=" << m.lhs << " main_rhs=" << m.rhs
          << " main_holds=" << m.holds << " main_eq=" << m.equality;
    } else {
      out << " main_lhs=- main_rhs=- main_holds=- main_eq=-";
    }
    out << " label=" << label_of(l, r) << "\n";
    return out.str();
  }

  std::ostringstream out;
  out << "algebra " << name << "\n";
  auto row = [&](const std::string& k, const std::string& v) {
    out << "  " << k;
    for (std::size_t i = k.size(); i < 22; ++i) out << ' ';
    out << v << "\n";
  };
  row("field", l.field().str());
  row("dimension n", std::to_string(r.n));
  row("derived dim m", std::to_string(r.m));
  row("center dim", std::to_string(r.dim_center));
  row("derived cap center", std::to_string(r.dim_derived_cap_center));
  row("nilpotent", r.nilpotent ? "yes (class " +
                                     std::to_string(r.nilpotency_class) + ")"
                               : "no");
  row("multiplier dim", std::to_string(r.dim_multiplier));
  row("t invariant", std::to_string(r.t));
  row("batten bound",
      r.nilpotent ? verdict_cells(check_batten_bound(l))
                  : "not applicable (not nilpotent)");
  row("main bound", main_ok ? verdict_cells(check_main_bound(l))
                            : (r.nilpotent ? "not applicable (m = 0)"
                                           : "not applicable (not nilpotent)"));
  row("classification", label_of(l, r));
  return out.str();
}

SweepChecks parse_checks(const std::string& csv) {
  SweepChecks c;
  std::stringstream ss(csv);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    any = true;
    if (item == "main")
      c.main = true;
    else if (item == "batten")
      c.batten = true;
    else if (item == "kunneth")
      c.kunneth = true;
    else if (item == "sr")
      c.sr = true;
    else if (item == "t-classify")
      c.t_classify = true;
    else
      throw invalid_parameter("unknown check '" + item + "'");
  }
  if (!any)
    throw invalid_parameter(
        "no checks given (expected a subset of "
        "main,batten,kunneth,sr,t-classify)");
  return c;
}

namespace {

void record_bound(SweepResult& out, const std::string& check,
                  const std::string& key, const LieAlgebra& algebra,
                  const BoundVerdict& v, const std::string& extra = "") {
  std::ostringstream line;
  line << "check name=" << check << " key=" << key << extra
       << " lhs=" << v.lhs << " rhs=" << v.rhs << " holds=" << v.holds
       << " equality=" << v.equality;
  out.lines.push_back(line.str());
  ++out.checks_run;
  if (!v.holds)
    out.anomalies.push_back(Anomaly{check, key,
                                    "lhs=" + std::to_string(v.lhs) +
                                        " rhs=" + std::to_string(v.rhs),
                                    one_line(serialize(algebra))});
}

void record_skip(SweepResult& out, const std::string& check,
                 const std::string& key, const std::string& why) {
  out.lines.push_back("check name=" + check + " key=" + key +
                      " applicable=0 reason=" + why);
  ++out.checks_run;
}

}  // namespace

SweepResult run_sweep(std::vector<SweepItem> items, const SweepChecks& checks,
                      OutputFormat /*format*/) {
  std::sort(items.begin(), items.end(),
            [](const SweepItem& a, const SweepItem& b) { return a.key < b.key; });
  SweepResult out;

  for (const SweepItem& item : items) {
    const InvariantsReport r = invariants_report(item.algebra);
    if (checks.main) {
      if (!r.nilpotent)
        record_skip(out, "main", item.key, "not-nilpotent");
      else if (r.m == 0)
        record_skip(out, "main", item.key, "m=0");
      else
        record_bound(out, "main", item.key, item.algebra,
                     check_main_bound(item.algebra));
    }
    if (checks.batten) {
      if (!r.nilpotent)
        record_skip(out, "batten", item.key, "not-nilpotent");
      else
        record_bound(out, "batten", item.key, item.algebra,
                     check_batten_bound(item.algebra));
    }
    if (checks.sr) {
      if (!r.nilpotent) {
        record_skip(out, "sr", item.key, "not-nilpotent");
      } else {
        // the one-dimensional central ideals: canonical basis lines of
        // L^2 cap Z(L)
        const Subspace cap =
            item.algebra.derived_subalgebra().intersect(item.algebra.center());
        std::size_t idx = 0;
        for (const Vec& v : cap.basis()) {
          const Subspace k =
              Subspace::span(item.algebra.dim(), item.algebra.field(), {v});
          record_bound(out, "sr", item.key, item.algebra,
                       check_corollary_sr(item.algebra, k,
                                          SrMultiplierMode::central_closed_form),
                       " ideal=" + std::to_string(idx));
          ++idx;
        }
        if (cap.dim() == 0) record_skip(out, "sr", item.key, "L2-cap-Z-trivial");
      }
    }
    if (checks.t_classify) {
      if (!r.nilpotent) {
        record_skip(out, "t-classify", item.key, "not-nilpotent");
      } else {
        try {
          auto label = classify_small_t(item.algebra);
          out.lines.push_back(
              "check name=t-classify key=" + item.key + " t=" +
              std::to_string(r.t) + " label=" +
              (label ? small_t_label_str(*label) : std::string("-")));
          ++out.checks_run;
        } catch (const inconsistent_classification& e) {
          ++out.checks_run;
          out.lines.push_back("check name=t-classify key=" + item.key +
                              " t=" + std::to_string(r.t) + " label=ERROR");
          out.anomalies.push_back(Anomaly{"t-classify", item.key, e.what(),
                                          one_line(serialize(item.algebra))});
        }
      }
    }
  }

  if (checks.kunneth) {
    // exhaustive over pairs of total dimension <= 8, fixed-seed random
    // sample beyond (total dimension <= 12)
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < items.size(); ++a)
      for (std::size_t b = a; b < items.size(); ++b)
        if (items[a].algebra.dim() + items[b].algebra.dim() <= 8)
          pairs.emplace_back(a, b);
    std::mt19937 rng(0xC0FFEEu);
    std::uniform_int_distribution<std::size_t> pick(0, items.empty() ? 0 : items.size() - 1);
    std::size_t added = 0;
    for (std::size_t attempt = 0; attempt < 1000 && added < 32 && !items.empty();
         ++attempt) {
      std::size_t a = pick(rng), b = pick(rng);
      if (a > b) std::swap(a, b);
      const std::size_t total = items[a].algebra.dim() + items[b].algebra.dim();
      if (total <= 8 || total > 12) continue;
      pairs.emplace_back(a, b);
      ++added;
    }
    for (const auto& [a, b] : pairs) {
      const BoundVerdict v =
          verify_kunneth(items[a].algebra, items[b].algebra);
      std::ostringstream line;
      line << "check name=kunneth key=" << items[a].key << "+" << items[b].key
           << " lhs=" << v.lhs << " rhs=" << v.rhs << " holds=" << v.holds;
      out.lines.push_back(line.str());
      ++out.checks_run;
      if (!v.holds)
        out.anomalies.push_back(
            Anomaly{"kunneth", items[a].key + "+" + items[b].key,
                    "lhs=" + std::to_string(v.lhs) +
                        " rhs=" + std::to_string(v.rhs),
                    one_line(serialize(direct_sum(items[a].algebra,
                                                  items[b].algebra)))});
    }
  }

  return out;
}

std::string render_sweep(const SweepResult& result, OutputFormat format) {
  std::ostringstream out;
  for (const std::string& line : result.lines) out << line << "\n";
  for (const Anomaly& a : result.anomalies) {
    out << "anomaly check=" << a.check << " key=" << a.key << " " << a.detail
        << " algebra=\"" << a.algebra_text << "\"\n";
  }
  if (format == OutputFormat::table)
    out << "sweep: " << result.checks_run << " checks, "
        << result.anomalies.size() << " anomalies\n";
  else
    out << "summary checks=" << result.checks_run
        << " anomalies=" << result.anomalies.size() << "\n";
  return out.str();
}

FieldDescriptor parse_field_flag(const std::string& spec) {
  if (spec == "q" || spec == "Q") return FieldDescriptor::rationals();
  if (spec.size() > 3 && (spec.substr(0, 3) == "gf:" || spec.substr(0, 3) == "GF:")) {
    const std::string digits = spec.substr(3);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw invalid_parameter("bad field spec '" + spec + "'");
    return FieldDescriptor::prime_field(std::uint32_t(std::stoull(digits)));
  }
  throw invalid_parameter("bad field spec '" + spec + "' (expected q or gf:p)");
}

StructureConstants convert_field(const StructureConstants& sc,
                                 const FieldDescriptor& target) {
  if (sc.field() == target) return sc;
  if (!sc.field().is_rationals())
    throw invalid_parameter("cannot convert a " + sc.field().str() +
                            " table to " + target.str());
  StructureConstants out(sc.dim(), target);
  for (const auto& [ij, coeffs] : sc.table()) {
    StructureConstants::Coeffs converted;
    for (const auto& [k, c] : coeffs)
      converted.emplace_back(k, c.to_prime_field(target.prime()));
    out.set_bracket(ij.first, ij.second, converted);
  }
  return out;
}

}  // namespace liemult
