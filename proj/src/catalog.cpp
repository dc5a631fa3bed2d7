#include "liemult/catalog.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "liemult/multiplier.hpp"

namespace liemult {

LieAlgebra make_abelian(std::size_t n, FieldDescriptor f) {
  return LieAlgebra::validate(StructureConstants(n, f));
}

LieAlgebra make_heisenberg(std::size_t m, FieldDescriptor f) {
  if (m < 1) throw invalid_parameter("heisenberg rank must be >= 1");
  StructureConstants sc(2 * m + 1, f);
  for (std::size_t i = 0; i < m; ++i)
    sc.set_bracket(2 * i, 2 * i + 1, {{2 * m, Scalar::one(f)}});
  return LieAlgebra::validate(std::move(sc));
}

LieAlgebra make_filiform(std::size_t n, FieldDescriptor f) {
  if (n < 3) throw invalid_parameter("filiform dimension must be >= 3");
  StructureConstants sc(n, f);
  for (std::size_t i = 1; i + 1 < n; ++i)
    sc.set_bracket(0, i, {{i + 1, Scalar::one(f)}});
  return LieAlgebra::validate(std::move(sc));
}

namespace {

// Golden dim M(L) values for the table entries, generated by this engine
// with the fraction-free and naive-Gaussian strategies agreeing (plus a
// modular cross-check) and then frozen. See tests/test_catalog.cpp.
const std::map<std::string, std::size_t>& frozen_goldens() {
  static const std::map<std::string, std::size_t> table = {
      {"filiform_3", 2}, {"filiform_4", 2}, {"filiform_5", 3},
      {"filiform_6", 3}, {"filiform_7", 4},
      {"L1_1", 0},  {"L2_1", 1},  {"L3_1", 3},  {"L3_2", 2},  {"L4_1", 6},
      {"L4_2", 4},  {"L4_3", 2},  {"L5_1", 10}, {"L5_2", 7},  {"L5_3", 4},
      {"L5_4", 5},  {"L5_5", 4},  {"L5_6", 3},  {"L5_7", 3},  {"L5_8", 6},
      {"L5_9", 3},  {"L6_1", 15}, {"L6_2", 11}, {"L6_3", 7},  {"L6_4", 9},
      {"L6_5", 7},  {"L6_6", 5},  {"L6_7", 5},  {"L6_8", 9},  {"L6_9", 5},
      {"L6_10", 6}, {"L6_11", 5}, {"L6_12", 5}, {"L6_13", 4}, {"L6_14", 2},
      {"L6_15", 3}, {"L6_16", 2}, {"L6_17", 3}, {"L6_18", 3}, {"L6_19", 5},
      {"L6_20", 5}, {"L6_21", 4}, {"L6_22", 8}, {"L6_23", 6}, {"L6_24", 5},
      {"L6_25", 6}, {"L6_26", 8}, {"L6_27", 6}, {"L6_28", 4},
  };
  return table;
}

struct RawTable {
  const char* key;
  const char* text;  // structure-constants file format
  const char* note;
};

// Nilpotent Lie algebras of dimension <= 6 over Q, transcribed from the
// standard classification (W. A. de Graaf, J. Algebra 309 (2007) 640-653,
// characteristic != 2 list; basis x1..xn maps to e0..e{n-1}). Parametrized
// families are pinned to a single rational parameter value, recorded in
// the note. The tables are machine-validated; the classification itself
// is quoted, not re-proved.
const RawTable kClassification[] = {
    {"L1_1", "dim 1\nfield Q\n", "abelian"},
    {"L2_1", "dim 2\nfield Q\n", "abelian"},
    {"L3_1", "dim 3\nfield Q\n", "abelian"},
    {"L3_2", "dim 3\nfield Q\n0 1 -> 2:1\n", "Heisenberg H(1)"},
    {"L4_1", "dim 4\nfield Q\n", "abelian"},
    {"L4_2", "dim 4\nfield Q\n0 1 -> 2:1\n", "L3_2 plus a line"},
    {"L4_3", "dim 4\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n", "filiform"},
    {"L5_1", "dim 5\nfield Q\n", "abelian"},
    {"L5_2", "dim 5\nfield Q\n0 1 -> 2:1\n", "L3_2 plus two lines"},
    {"L5_3", "dim 5\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n", "L4_3 plus a line"},
    {"L5_4", "dim 5\nfield Q\n0 1 -> 4:1\n2 3 -> 4:1\n", "Heisenberg H(2)"},
    {"L5_5", "dim 5\nfield Q\n0 1 -> 2:1\n0 2 -> 4:1\n1 3 -> 4:1\n", ""},
    {"L5_6", "dim 5\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 4:1\n1 2 -> 4:1\n",
     ""},
    {"L5_7", "dim 5\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 4:1\n",
     "filiform"},
    {"L5_8", "dim 5\nfield Q\n0 1 -> 3:1\n0 2 -> 4:1\n", ""},
    {"L5_9", "dim 5\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n1 2 -> 4:1\n", ""},
    {"L6_1", "dim 6\nfield Q\n", "abelian"},
    {"L6_2", "dim 6\nfield Q\n0 1 -> 2:1\n", "L3_2 plus three lines"},
    {"L6_3", "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n", "L4_3 plus two lines"},
    {"L6_4", "dim 6\nfield Q\n0 1 -> 4:1\n2 3 -> 4:1\n", "H(2) plus a line"},
    {"L6_5", "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 4:1\n1 3 -> 4:1\n",
     "L5_5 plus a line"},
    {"L6_6", "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 4:1\n1 2 -> 4:1\n",
     "L5_6 plus a line"},
    {"L6_7", "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 4:1\n",
     "L5_7 plus a line"},
    {"L6_8", "dim 6\nfield Q\n0 1 -> 3:1\n0 2 -> 4:1\n", "L5_8 plus a line"},
    {"L6_9", "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n1 2 -> 4:1\n",
     "L5_9 plus a line"},
    {"L6_10", "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 5:1\n3 4 -> 5:1\n", ""},
    {"L6_11",
     "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 5:1\n1 2 -> 5:1\n"
     "1 4 -> 5:1\n",
     ""},
    {"L6_12",
     "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 5:1\n1 4 -> 5:1\n", ""},
    {"L6_13",
     "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 4:1\n1 3 -> 4:1\n0 4 -> 5:1\n"
     "2 3 -> 5:1\n",
     ""},
    {"L6_14",
     "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 4:1\n1 2 -> 4:1\n"
     "1 4 -> 5:1\n2 3 -> 5:-1\n",
     ""},
    {"L6_15",
     "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 4:1\n1 2 -> 4:1\n"
     "0 4 -> 5:1\n1 3 -> 5:1\n",
     ""},
    {"L6_16",
     "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 4:1\n1 4 -> 5:1\n"
     "2 3 -> 5:-1\n",
     ""},
    {"L6_17",
     "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 4:1\n0 4 -> 5:1\n"
     "1 2 -> 5:1\n",
     ""},
    {"L6_18",
     "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 4:1\n0 4 -> 5:1\n",
     "filiform"},
    {"L6_19",
     "dim 6\nfield Q\n0 1 -> 3:1\n0 2 -> 4:1\n1 3 -> 5:1\n2 4 -> 5:1\n",
     "parameter eps = 1"},
    {"L6_20",
     "dim 6\nfield Q\n0 1 -> 3:1\n0 2 -> 4:1\n0 4 -> 5:1\n1 3 -> 5:1\n", ""},
    {"L6_21",
     "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n1 2 -> 4:1\n0 3 -> 5:1\n"
     "1 4 -> 5:1\n",
     "parameter eps = 1"},
    {"L6_22",
     "dim 6\nfield Q\n0 1 -> 4:1\n0 2 -> 5:1\n1 3 -> 5:1\n2 3 -> 4:1\n",
     "parameter eps = 1"},
    {"L6_23",
     "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 4:1\n0 3 -> 5:1\n1 3 -> 4:1\n", ""},
    {"L6_24",
     "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 4:1\n0 3 -> 5:1\n1 2 -> 5:1\n"
     "1 3 -> 4:1\n",
     "parameter eps = 1"},
    {"L6_25", "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 4:1\n0 3 -> 5:1\n", ""},
    {"L6_26", "dim 6\nfield Q\n0 1 -> 3:1\n0 2 -> 4:1\n1 2 -> 5:1\n",
     "free nilpotent of class 2 on 3 generators"},
    {"L6_27", "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 4:1\n1 3 -> 5:1\n", ""},
    {"L6_28", "dim 6\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n0 3 -> 5:1\n1 2 -> 4:1\n",
     ""},
};

std::size_t heisenberg_multiplier_dim(std::size_t m) {
  return m == 1 ? 2 : 2 * m * m - m - 1;
}

std::optional<std::size_t> golden_for(const std::string& key) {
  auto it = frozen_goldens().find(key);
  if (it == frozen_goldens().end()) return std::nullopt;
  return it->second;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string key, LieAlgebra algebra,
                 CatalogEntry::Source source, std::string note,
                 std::optional<std::size_t> expected) {
    out.push_back(CatalogEntry{std::move(key), algebra.dim(),
                               std::move(algebra), source, std::move(note),
                               expected});
  };

  for (std::size_t n = 0; n <= 8; ++n)
    add("abelian_" + std::to_string(n), make_abelian(n),
        CatalogEntry::Source::constructed, "", binom2(n));

  for (std::size_t m = 1; m <= 5; ++m)
    add("heisenberg_" + std::to_string(m), make_heisenberg(m),
        CatalogEntry::Source::constructed, "", heisenberg_multiplier_dim(m));

  // heisenberg(h) + abelian(k), total dimension <= 9; the expected value
  // is the Kunneth closed form dim M(H(h)) + k(k-1)/2 + 2hk
  for (std::size_t h = 1; 2 * h + 1 + 1 <= 9; ++h)
    for (std::size_t k = 1; 2 * h + 1 + k <= 9; ++k)
      add("heisenberg_" + std::to_string(h) + "_plus_abelian_" +
              std::to_string(k),
          direct_sum(make_heisenberg(h), make_abelian(k)),
          CatalogEntry::Source::constructed, "",
          heisenberg_multiplier_dim(h) + binom2(k) + 2 * h * k);

  for (std::size_t n = 3; n <= 7; ++n)
    add("filiform_" + std::to_string(n), make_filiform(n),
        CatalogEntry::Source::constructed, "",
        golden_for("filiform_" + std::to_string(n)));

  for (const RawTable& t : kClassification)
    add(t.key, LieAlgebra::validate(deserialize(t.text)),
        CatalogEntry::Source::classification_table,
        std::string("de Graaf 2007 classification (char != 2)") +
            (*t.note ? std::string("; ") + t.note : std::string()),
        golden_for(t.key));

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry* find_catalog_entry(std::string_view key) {
  for (const CatalogEntry& e : builtin_catalog())
    if (e.key == key) return &e;
  return nullptr;
}

// ---------------------------------------------------------------------
// text format

std::string serialize(const StructureConstants& sc) {
  std::string out = "dim " + std::to_string(sc.dim()) + "\n";
  out += "field " + sc.field().str() + "\n";
  for (const auto& [ij, coeffs] : sc.table()) {
    out += std::to_string(ij.first) + " " + std::to_string(ij.second) + " ->";
    for (const auto& [k, c] : coeffs)
      out += " " + std::to_string(k) + ":" + c.str();
    out += "\n";
  }
  return out;
}

std::string serialize(const LieAlgebra& l) { return serialize(l.sc()); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (!all_digits(tok))
    throw parse_error(line, "expected an index, got '" + tok + "'");
  return std::stoull(tok);
}

Scalar parse_scalar(const std::string& tok, const FieldDescriptor& f,
                    std::size_t line) {
  for (char c : tok)
    if (c == '.' || c == 'e' || c == 'E')
      throw non_rational_scalar("line " + std::to_string(line) +
                                ": coefficient '" + tok +
                                "' is not an exact rational");
  std::string_view body = tok;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw parse_error(line, "malformed coefficient '" + tok + "'");

  if (f.is_rationals()) {
    mpz_class n(std::string(num), 10);
    mpz_class d = slash == std::string_view::npos
                      ? mpz_class(1)
                      : mpz_class(std::string(den), 10);
    if (sgn(d) == 0) throw parse_error(line, "zero denominator in '" + tok + "'");
    if (negative) n = -n;
    return Scalar::from_rational(mpq_class(n) / mpq_class(d));
  }
  if (slash != std::string_view::npos)
    throw parse_error(line,
                      "fractional coefficient '" + tok + "' over " + f.str());
  mpz_class n(std::string(num), 10);
  std::uint64_t r = mpz_fdiv_ui(n.get_mpz_t(), f.prime());
  if (negative && r != 0) r = f.prime() - r;
  return Scalar::from_residue(f, r);
}

}  // namespace

StructureConstants deserialize(std::string_view text) {
  std::optional<std::size_t> dim;
  std::optional<FieldDescriptor> field;
  std::optional<StructureConstants> sc;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;  // -> line

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    std::istringstream ls(raw);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank / comment-only

    if (tok == "dim") {
      if (dim) throw parse_error(line, "duplicate dim line");
      std::string v;
      if (!(ls >> v)) throw parse_error(line, "dim needs a value");
      dim = parse_index(v, line);
      continue;
    }
    if (tok == "field") {
      if (field) throw parse_error(line, "duplicate field line");
      std::string v;
      if (!(ls >> v)) throw parse_error(line, "field needs a value");
      if (v == "Q") {
        field = FieldDescriptor::rationals();
      } else if (v.size() > 4 && v.substr(0, 3) == "GF(" && v.back() == ')') {
        const std::string p = v.substr(3, v.size() - 4);
        if (!all_digits(p)) throw parse_error(line, "malformed field '" + v + "'");
        try {
          field = FieldDescriptor::prime_field(
              std::uint32_t(std::stoull(p)));
        } catch (const invalid_parameter& e) {
          throw parse_error(line, e.what());
        }
      } else {
        throw parse_error(line, "unknown field '" + v + "' (expected Q or GF(p))");
      }
      continue;
    }

    // bracket line: i j -> k:c ...
    if (!dim || !field)
      throw parse_error(line, "bracket before the dim/field header");
    if (!sc) sc.emplace(*dim, *field);

    const std::size_t i = parse_index(tok, line);
    std::string jtok, arrow;
    if (!(ls >> jtok >> arrow) || arrow != "->")
      throw parse_error(line, "expected 'i j -> k:c ...'");
    const std::size_t j = parse_index(jtok, line);
    if (i >= *dim || j >= *dim)
      throw index_out_of_range("line " + std::to_string(line) + ": bracket (" +
                               std::to_string(i) + ", " + std::to_string(j) +
                               ") outside dimension " + std::to_string(*dim));
    if (i == j)
      throw parse_error(line, "diagonal bracket (" + std::to_string(i) + ", " +
                                  std::to_string(j) +
                                  ") is identically zero; omit it");
    if (i > j)
      throw parse_error(line, "brackets must be given with i < j");
    if (auto it = seen.find({i, j}); it != seen.end())
      throw parse_error(line, "bracket (" + std::to_string(i) + ", " +
                                  std::to_string(j) +
                                  ") already given on line " +
                                  std::to_string(it->second));
    seen[{i, j}] = line;

    StructureConstants::Coeffs coeffs;
    std::string pair;
    while (ls >> pair) {
      const auto colon = pair.find(':');
      if (colon == std::string::npos)
        throw parse_error(line, "expected 'k:c', got '" + pair + "'");
      const std::size_t k = parse_index(pair.substr(0, colon), line);
      if (k >= *dim)
        throw index_out_of_range("line " + std::to_string(line) +
                                 ": coefficient index " + std::to_string(k) +
                                 " outside dimension " + std::to_string(*dim));
      for (const auto& [prev, c] : coeffs)
        if (prev == k)
          throw parse_error(line,
                            "duplicate coefficient index " + std::to_string(k));
      Scalar c = parse_scalar(pair.substr(colon + 1), *field, line);
      if (!c.is_zero()) coeffs.emplace_back(k, c);
    }
    sc->set_bracket(i, j, coeffs);
  }

  if (!dim) throw parse_error(line, "missing dim header");
  if (!field) throw parse_error(line, "missing field header");
  if (!sc) sc.emplace(*dim, *field);
  return std::move(*sc);
}

}  // namespace liemult
