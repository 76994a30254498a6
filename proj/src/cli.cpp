#include "nilo/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "nilo/catalog.hpp"
#include "nilo/centralizers.hpp"
#include "nilo/chevalley.hpp"
#include "nilo/classical.hpp"
#include "nilo/linalg.hpp"
#include "nilo/orbits.hpp"
#include "nilo/sl3.hpp"

namespace nilo {

namespace {

using json = nlohmann::ordered_json;

bool is_exceptional(const SimpleType& t) {
  return t.series == Series::E || t.series == Series::F || t.series == Series::G;
}

Eigen::VectorXi display_marks(const SimpleType& t, const Eigen::VectorXi& internal,
                              Numbering numbering) {
  return numbering == Numbering::kVo ? marks_bourbaki_to_vo(t, internal) : internal;
}

std::string join_ints(const Eigen::VectorXi& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v(i));
  }
  return s;
}

std::string partition_str(const Partition& p) { return partition_text(p); }

std::string bool_text(bool b) { return b ? "yes" : "no"; }

std::string opt_bool_text(const std::optional<bool>& b) {
  return b.has_value() ? bool_text(*b) : "-";
}

json opt_bool_json(const std::optional<bool>& b) {
  return b.has_value() ? json(*b) : json(nullptr);
}

json marks_json(const Eigen::VectorXi& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json rational_json(const Rational& r) {
  if (r.is_integer()) return json(static_cast<std::int64_t>(r.to_long()));
  return json(r.to_string());
}

json partition_json(const Partition& p) {
  json a = json::array();
  for (int part : p) a.push_back(part);
  return a;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

/// Display width in code points, so multi-byte UTF-8 labels align.
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

/// Left-aligned fixed-width text table with a header row.
void text_table(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = display_width(header[c]);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], display_width(row[c]));
    }
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - display_width(row[c]) + 2, ' ');
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

std::string map_text(const std::map<int, int>& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(k) + ":" + std::to_string(v);
  }
  return s + "}";
}

/// One orbit record in the report schema. `checks` may be an empty array.
json record_json(const SimpleType& t, const OrbitRecord& rec, Numbering numbering,
                 json checks) {
  json j;
  j["type"] = t.to_string();
  j["diagram"] = marks_json(display_marks(t, rec.diagram.marks, numbering));
  j["dim_orbit"] = rec.dim_orbit;
  j["height"] = rec.height;
  j["even"] = rec.even;
  j["divisible"] = rec.divisible;
  j["half"] = rec.half ? marks_json(display_marks(t, rec.half->marks, numbering)) : json(nullptr);
  j["index"] = rational_json(rec.dynkin_index);
  j["checks"] = std::move(checks);
  return j;
}

std::optional<SimpleType> parse_type_arg(const std::string& s, std::ostream& err) {
  const auto t = SimpleType::parse(s);
  if (!t || !t->valid()) {
    err << "error: unknown simple type '" << s << "'\n";
    return std::nullopt;
  }
  if (t->rank > 8) {
    err << "error: " << t->to_string() << " has rank > 8, which is not supported\n";
    return std::nullopt;
  }
  return t;
}

// ---------------------------------------------------------------------------
// orbits

int cmd_orbits(const SimpleType& t, const RunConfig& cfg, std::ostream& out) {
  ChevalleyAlgebra g(t);
  const auto records = enumerate_orbits(g, cfg.seed, cfg.trials);
  switch (cfg.output) {
    case OutputFormat::kJson: {
      json arr = json::array();
      for (const auto& rec : records) {
        arr.push_back(record_json(t, rec, cfg.numbering, json::array()));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      csv_row(out, {"type", "diagram", "dim_orbit", "height", "even", "divisible", "half",
                    "index"});
      for (const auto& rec : records) {
        csv_row(out, {t.to_string(), join_ints(display_marks(t, rec.diagram.marks, cfg.numbering)),
                      std::to_string(rec.dim_orbit), std::to_string(rec.height),
                      bool_text(rec.even), bool_text(rec.divisible),
                      rec.half ? join_ints(display_marks(t, rec.half->marks, cfg.numbering)) : "",
                      rec.dynkin_index.to_string()});
      }
      break;
    }
    case OutputFormat::kText: {
      out << "nilpotent orbits of " << t.to_string() << " (" << records.size() << ")\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& rec : records) {
        rows.push_back({join_ints(display_marks(t, rec.diagram.marks, cfg.numbering)),
                        std::to_string(rec.dim_orbit), std::to_string(rec.height),
                        bool_text(rec.even), bool_text(rec.divisible),
                        rec.half ? join_ints(display_marks(t, rec.half->marks, cfg.numbering)) : "-",
                        rec.dynkin_index.to_string()});
      }
      text_table(out, {"diagram", "dim", "height", "even", "divisible", "half", "index"}, rows);
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// pairs

struct PairReportRow {
  FriendlyPair pair;
  std::optional<std::string> upper_label;
  std::optional<std::string> lower_label;
};

int cmd_pairs(const SimpleType& t, const RunConfig& cfg, std::ostream& out) {
  ChevalleyAlgebra g(t);
  const FingerprintTable table(g, cfg.seed, cfg.trials);
  const auto pairs = friendly_pairs(g, cfg.seed, cfg.trials);
  const bool exceptional = is_exceptional(t);

  std::vector<PairReportRow> rows;
  bool any_inconclusive = false;
  for (const auto& p : pairs) {
    PairReportRow row;
    row.pair = annotate_pair(g, p, table, cfg.seed, cfg.trials);
    if (exceptional) {
      for (const auto& ref : exceptional_pair_catalog(t)) {
        if (ref.upper_marks_bourbaki(t) == p.upper.diagram.marks) {
          row.pair.a2_pair = ref.a2_pair;
          row.upper_label = ref.upper_label;
          row.lower_label = ref.lower_label;
          break;
        }
      }
    }
    if (!row.pair.very_friendly.has_value()) any_inconclusive = true;
    rows.push_back(std::move(row));
  }

  auto opt_label = [](const std::optional<std::string>& s) { return s ? *s : std::string("-"); };
  switch (cfg.output) {
    case OutputFormat::kJson: {
      json j;
      j["type"] = t.to_string();
      j["pairs"] = json::array();
      for (const auto& row : rows) {
        json pj;
        pj["upper"] = record_json(t, row.pair.upper, cfg.numbering, json::array());
        pj["lower"] = record_json(t, row.pair.lower, cfg.numbering, json::array());
        pj["upper_label"] = row.upper_label ? json(*row.upper_label) : json(nullptr);
        pj["lower_label"] = row.lower_label ? json(*row.lower_label) : json(nullptr);
        pj["lower_reachable"] = opt_bool_json(row.pair.lower_reachable);
        pj["very_friendly"] = opt_bool_json(row.pair.very_friendly);
        pj["a2_pair"] = opt_bool_json(row.pair.a2_pair);
        j["pairs"].push_back(std::move(pj));
      }
      j["reference_columns"] = json::array({"upper_label", "lower_label", "a2_pair"});
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      csv_row(out, {"type", "upper", "lower", "upper_label", "lower_label", "lower_reachable",
                    "very_friendly", "a2_pair"});
      for (const auto& row : rows) {
        csv_row(out,
                {t.to_string(),
                 join_ints(display_marks(t, row.pair.upper.diagram.marks, cfg.numbering)),
                 join_ints(display_marks(t, row.pair.lower.diagram.marks, cfg.numbering)),
                 row.upper_label.value_or(""), row.lower_label.value_or(""),
                 row.pair.lower_reachable ? bool_text(*row.pair.lower_reachable) : "",
                 row.pair.very_friendly ? bool_text(*row.pair.very_friendly) : "",
                 row.pair.a2_pair ? bool_text(*row.pair.a2_pair) : ""});
      }
      break;
    }
    case OutputFormat::kText: {
      out << "friendly pairs of " << t.to_string() << " (" << rows.size() << ")\n";
      std::vector<std::vector<std::string>> trows;
      for (const auto& row : rows) {
        trows.push_back({join_ints(display_marks(t, row.pair.upper.diagram.marks, cfg.numbering)),
                         join_ints(display_marks(t, row.pair.lower.diagram.marks, cfg.numbering)),
                         opt_label(row.upper_label), opt_label(row.lower_label),
                         opt_bool_text(row.pair.lower_reachable),
                         opt_bool_text(row.pair.very_friendly),
                         opt_bool_text(row.pair.a2_pair)});
      }
      text_table(out,
                 {"upper", "lower", "upper-label", "lower-label", "reachable", "very-friendly",
                  "a2"},
                 trows);
      if (exceptional) {
        out << "note: the label and a2 columns are reference classification data\n";
      }
      break;
    }
  }
  return any_inconclusive ? kExitInconclusive : kExitOk;
}

// ---------------------------------------------------------------------------
// classical

std::optional<std::string> diagram_type_text(const ClassicalAlgebra& alg) {
  try {
    return classical_type(alg).to_string();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int cmd_classical_classify(const ClassicalAlgebra& alg, const Partition& p, const RunConfig& cfg,
                           std::ostream& out) {
  const bool zero = is_zero_partition(p);
  const bool divisible = zero ? false : is_divisible_partition(alg, p);
  const std::optional<Partition> half =
      divisible ? std::optional<Partition>(half_partition(p)) : std::nullopt;
  const std::optional<int> height =
      zero ? std::nullopt : std::optional<int>(partition_height(alg, p));
  const auto dtype = diagram_type_text(alg);
  std::vector<WeightedDiagram> diagrams;
  if (dtype) diagrams = diagrams_from_partition(alg, p);

  switch (cfg.output) {
    case OutputFormat::kJson: {
      json j;
      j["family"] = to_string(alg.family);
      j["dim_v"] = alg.dim_v;
      j["partition"] = partition_json(p);
      j["valid"] = true;
      j["zero"] = zero;
      j["height"] = height ? json(*height) : json(nullptr);
      j["divisible"] = divisible;
      j["half_partition"] = half ? partition_json(*half) : json(nullptr);
      if (dtype) {
        j["diagrams"] = json::array();
        for (const auto& d : diagrams) {
          json dj;
          dj["type"] = *dtype;
          dj["marks"] = marks_json(display_marks(d.type, d.marks, cfg.numbering));
          j["diagrams"].push_back(std::move(dj));
        }
      } else {
        j["diagrams"] = json(nullptr);
      }
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      csv_row(out, {"family", "dim_v", "partition", "valid", "zero", "height", "divisible",
                    "half_partition", "diagrams"});
      std::string dtext;
      for (std::size_t i = 0; i < diagrams.size(); ++i) {
        if (i > 0) dtext += '|';
        dtext += join_ints(display_marks(diagrams[i].type, diagrams[i].marks, cfg.numbering));
      }
      csv_row(out, {to_string(alg.family), std::to_string(alg.dim_v), partition_str(p), "true",
                    bool_text(zero), height ? std::to_string(*height) : "", bool_text(divisible),
                    half ? partition_str(*half) : "", dtext});
      break;
    }
    case OutputFormat::kText: {
      out << "algebra: " << alg.to_string() << '\n';
      out << "partition: " << partition_str(p) << '\n';
      out << "valid: yes\n";
      out << "zero orbit: " << bool_text(zero) << '\n';
      out << "height: " << (height ? std::to_string(*height) : "-") << '\n';
      out << "divisible: " << (zero ? "no (zero orbit)" : bool_text(divisible)) << '\n';
      out << "half partition: " << (half ? partition_str(*half) : "-") << '\n';
      if (dtype) {
        out << "diagram type: " << *dtype << '\n';
        for (const auto& d : diagrams) {
          out << "diagram: " << join_ints(display_marks(d.type, d.marks, cfg.numbering)) << '\n';
        }
      } else {
        out << "diagram type: - (no simple diagram type at this dimension)\n";
      }
      break;
    }
  }
  return kExitOk;
}

int cmd_classical_divide(const ClassicalAlgebra& alg, const Partition& p, const RunConfig& cfg,
                         std::ostream& out, std::ostream& err) {
  if (is_zero_partition(p)) {
    err << "error: the zero orbit (all parts 1) is not divisible\n";
    return kExitRefuted;
  }
  if (!is_divisible_partition(alg, p)) {
    const bool even_part = std::any_of(p.begin(), p.end(), [](int k) { return k % 2 == 0; });
    const std::string reason = even_part
                                   ? "a part is even"
                                   : "a part congruent to 3 mod 4 is not paired with an equal part";
    if (cfg.output == OutputFormat::kJson) {
      json j;
      j["family"] = to_string(alg.family);
      j["partition"] = partition_json(p);
      j["divisible"] = false;
      j["reason"] = reason;
      out << j.dump(2) << '\n';
    } else {
      out << "partition: " << partition_str(p) << " (" << alg.to_string() << ")\n";
      out << "divisible: no (" << reason << ")\n";
    }
    return kExitRefuted;
  }

  const Partition half = half_partition(p);
  struct Line {
    std::string name;
    bool ok;
    std::string evidence;
  };
  std::vector<Line> lines;

  lines.push_back({"half labels an orbit", validate_partition(alg, half),
                   partition_str(half) + " is a valid " + alg.to_string() + " partition"});

  if (diagram_type_text(alg)) {
    const WeightedDiagram d = diagram_from_partition(alg, p);
    const WeightedDiagram dh = diagram_from_partition(alg, half);
    lines.push_back({"diagram is even", d.all_even(), "marks " + d.to_text()});
    lines.push_back({"diagram halves to the half partition's diagram",
                     d.all_even() && half_diagram(d).marks == dh.marks,
                     "half marks " + dh.to_text()});
  }
  const int ht = partition_height(alg, p);
  const int hth = partition_height(alg, half);
  lines.push_back({"height halves", ht == 2 * hth,
                   "ht = " + std::to_string(ht) + " = 2 x " + std::to_string(hth)});

  const MatrixTriple t = build_triple(alg, p);
  const MatQ e2 = build_e2(alg, p, t);
  lines.push_back({"companion Jordan type equals half", jordan_type(e2) == half,
                   "jordan(e2) = " + partition_str(jordan_type(e2))});
  lines.push_back({"[h/2, e2] = 2 e2", MatQ(t.h * e2 - e2 * t.h) == MatQ(e2 * Rational(4)),
                   "exact bracket"});
  lines.push_back(
      {"e2 commutes with e", MatQ(t.e * e2) == MatQ(e2 * t.e), "exact commutation"});
  if (t.phi) {
    lines.push_back({"e2 preserves the form",
                     MatQ(e2.transpose() * (*t.phi) + (*t.phi) * e2).isZero(0),
                     "e2^T phi + phi e2 = 0"});
  }

  const bool all_ok =
      std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.ok; });

  switch (cfg.output) {
    case OutputFormat::kJson: {
      json j;
      j["family"] = to_string(alg.family);
      j["partition"] = partition_json(p);
      j["divisible"] = true;
      j["half_partition"] = partition_json(half);
      j["checks"] = json::array();
      for (const auto& l : lines) {
        json cj;
        cj["name"] = l.name;
        cj["verdict"] = l.ok ? "true" : "false";
        cj["evidence"] = l.evidence;
        j["checks"].push_back(std::move(cj));
      }
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      csv_row(out, {"partition", "half_partition", "divisible", "checks_passed", "checks_total"});
      const auto passed = std::count_if(lines.begin(), lines.end(),
                                        [](const Line& l) { return l.ok; });
      csv_row(out, {partition_str(p), partition_str(half), "true", std::to_string(passed),
                    std::to_string(lines.size())});
      break;
    }
    case OutputFormat::kText: {
      out << "partition: " << partition_str(p) << " (" << alg.to_string() << ")\n";
      out << "divisible: yes\n";
      out << "half partition: " << partition_str(half) << '\n';
      for (const auto& l : lines) {
        out << "check " << l.name << ": " << (l.ok ? "ok" : "FAIL") << " (" << l.evidence << ")\n";
      }
      break;
    }
  }
  return all_ok ? kExitOk : kExitRefuted;
}

json matrix_json(const MatQ& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void matrix_text(std::ostream& out, const MatQ& m) {
  std::size_t width = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      width = std::max(width, m(i, j).to_string().size());
    }
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const std::string s = m(i, j).to_string();
      out << ' ' << std::string(width - s.size(), ' ') << s;
    }
    out << " ]\n";
  }
}

void matrix_csv(std::ostream& out, const std::string& name, const MatQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      csv_row(out, {name, std::to_string(i), std::to_string(j), m(i, j).to_string()});
    }
  }
}

int cmd_classical_matrices(const ClassicalAlgebra& alg, const Partition& p, const RunConfig& cfg,
                           std::ostream& out) {
  const MatrixTriple t = build_triple(alg, p);
  const bool divisible = !is_zero_partition(p) && is_divisible_partition(alg, p);
  const std::optional<MatQ> e2 =
      divisible ? std::optional<MatQ>(build_e2(alg, p, t)) : std::nullopt;

  switch (cfg.output) {
    case OutputFormat::kJson: {
      json j;
      j["family"] = to_string(alg.family);
      j["dim_v"] = alg.dim_v;
      j["partition"] = partition_json(p);
      j["blocks"] = json::array();
      for (const auto& [b, e] : t.block_structure) j["blocks"].push_back(json::array({b, e}));
      j["e"] = matrix_json(t.e);
      j["h"] = matrix_json(t.h);
      j["f"] = matrix_json(t.f);
      j["phi"] = t.phi ? matrix_json(*t.phi) : json(nullptr);
      j["e2"] = e2 ? matrix_json(*e2) : json(nullptr);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      csv_row(out, {"matrix", "row", "col", "value"});
      matrix_csv(out, "e", t.e);
      matrix_csv(out, "h", t.h);
      matrix_csv(out, "f", t.f);
      if (t.phi) matrix_csv(out, "phi", *t.phi);
      if (e2) matrix_csv(out, "e2", *e2);
      break;
    }
    case OutputFormat::kText: {
      out << "algebra: " << alg.to_string() << '\n';
      out << "partition: " << partition_str(p) << '\n';
      out << "blocks:";
      for (const auto& [b, e] : t.block_structure) out << " [" << b << "," << e << ")";
      out << '\n';
      out << "e =\n";
      matrix_text(out, t.e);
      out << "h =\n";
      matrix_text(out, t.h);
      out << "f =\n";
      matrix_text(out, t.f);
      if (t.phi) {
        out << "phi =\n";
        matrix_text(out, *t.phi);
      }
      if (e2) {
        out << "e2 =\n";
        matrix_text(out, *e2);
      } else {
        out << "e2: - (orbit not divisible)\n";
      }
      break;
    }
  }
  return kExitOk;
}

int cmd_classical_levi(const ClassicalAlgebra& alg, const Partition& p, const RunConfig& cfg,
                       std::ostream& out) {
  const LeviDecomposition levi = minimal_levi(alg, p);
  const bool zero = is_zero_partition(p);
  const std::optional<bool> criterion =
      zero ? std::nullopt : std::optional<bool>(is_divisible_partition(alg, p));
  const std::optional<bool> agreement =
      criterion ? std::optional<bool>(levi.divisible() == *criterion) : std::nullopt;

  switch (cfg.output) {
    case OutputFormat::kJson: {
      json j;
      j["family"] = to_string(alg.family);
      j["partition"] = partition_json(p);
      j["a_factors"] = json::array();
      for (const auto& f : levi.a_factors) {
        json fj;
        fj["type"] = f.type.to_string();
        fj["divisible"] = f.divisible;
        j["a_factors"].push_back(std::move(fj));
      }
      j["remainder"] = partition_json(levi.remainder);
      j["remainder_divisible"] = levi.remainder_divisible;
      j["levi_divisible"] = levi.divisible();
      j["criterion_divisible"] = opt_bool_json(criterion);
      j["agreement"] = opt_bool_json(agreement);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      csv_row(out, {"partition", "a_factors", "remainder", "levi_divisible",
                    "criterion_divisible", "agreement"});
      std::string factors;
      for (std::size_t i = 0; i < levi.a_factors.size(); ++i) {
        if (i > 0) factors += '|';
        factors += levi.a_factors[i].type.to_string();
      }
      csv_row(out, {partition_str(p), factors,
                    levi.remainder.empty() ? "" : partition_str(levi.remainder),
                    bool_text(levi.divisible()), opt_bool_text(criterion),
                    opt_bool_text(agreement)});
      break;
    }
    case OutputFormat::kText: {
      out << "partition: " << partition_str(p) << " (" << alg.to_string() << ")\n";
      out << "a-factors:";
      if (levi.a_factors.empty()) {
        out << " none";
      } else {
        for (std::size_t i = 0; i < levi.a_factors.size(); ++i) {
          out << (i > 0 ? ", " : " ") << levi.a_factors[i].type.to_string() << " ("
              << (levi.a_factors[i].divisible ? "divisible" : "not divisible") << ")";
        }
      }
      out << '\n';
      out << "remainder: "
          << (levi.remainder.empty() ? "-" : partition_str(levi.remainder) +
                                                 (levi.remainder_divisible ? " (divisible)"
                                                                           : " (not divisible)"))
          << '\n';
      out << "levi verdict: " << bool_text(levi.divisible()) << '\n';
      out << "direct criterion: " << (criterion ? bool_text(*criterion) : "- (zero orbit)")
          << '\n';
      if (agreement) out << "agreement: " << bool_text(*agreement) << '\n';
      break;
    }
  }
  return (agreement && !*agreement) ? kExitRefuted : kExitOk;
}

int cmd_classical(const std::string& family_str, const std::string& partition_str_arg,
                  const std::string& action, const RunConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  const auto family = parse_family(family_str);
  if (!family) {
    err << "error: unknown family '" << family_str << "' (expected sl, sp, or so)\n";
    return kExitUsage;
  }
  const auto p = parse_partition(partition_str_arg);
  if (!p || !is_partition(*p)) {
    err << "error: '" << partition_str_arg
        << "' is not a partition (weakly decreasing positive parts)\n";
    return kExitUsage;
  }
  const ClassicalAlgebra alg{*family, static_cast<int>(partition_sum(*p))};
  if (!alg.valid()) {
    err << "error: " << to_string(*family) << " is not defined in dimension " << alg.dim_v
        << '\n';
    return kExitUsage;
  }
  if (!validate_partition(alg, *p)) {
    err << "error: partition " << partition_str_arg << " does not label a nilpotent orbit of "
        << alg.to_string() << '\n';
    return kExitUsage;
  }
  if (action == "classify") return cmd_classical_classify(alg, *p, cfg, out);
  if (action == "divide") return cmd_classical_divide(alg, *p, cfg, out, err);
  if (action == "matrices") return cmd_classical_matrices(alg, *p, cfg, out);
  if (action == "levi") return cmd_classical_levi(alg, *p, cfg, out);
  err << "error: unknown action '" << action << "'\n";
  return kExitUsage;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::kInconclusive;
  std::string evidence;
};

CheckResult check_dims(const ChevalleyAlgebra& g, const OrbitRecord& rec, const SL2Triple& rep,
                       const GradedCentralizer& gc) {
  const RootSystem& rs = g.roots();
  const auto want = graded_centralizer_dims(rs, rec.diagram.marks);
  const Grading gr(rs, rec.diagram.marks);
  std::vector<std::string> fails;

  for (const auto& [deg, dim] : want) {
    if (gc.piece_dim(deg) != dim) {
      fails.push_back("piece " + std::to_string(deg) + " has dim " +
                      std::to_string(gc.piece_dim(deg)) + ", expected " + std::to_string(dim));
    }
  }
  for (const auto& [deg, basis] : gc.pieces) {
    if (basis.cols() > 0 && want.find(deg) == want.end()) {
      fails.push_back("unexpected piece in degree " + std::to_string(deg));
    }
  }
  const int cdim = gr.dim(0) + gr.dim(1);
  if (gc.total_dim() != cdim) {
    fails.push_back("dim g^e = " + std::to_string(gc.total_dim()) + ", expected " +
                    std::to_string(cdim));
  }
  const MatQ ad_e = g.ad_matrix(rep.e);
  const int ker2 = static_cast<int>(g.dim() - rank_of(MatQ(ad_e * ad_e)));
  const int want_ker2 = gr.dim(0) + 2 * gr.dim(1) + gr.dim(2);
  if (ker2 != want_ker2) {
    fails.push_back("dim ker(ad e)^2 = " + std::to_string(ker2) + ", expected " +
                    std::to_string(want_ker2));
  }

  std::string pair_note;
  if (rec.half) {
    const auto low = graded_centralizer_dims(rs, rec.half->marks);
    const Grading grl(rs, rec.half->marks);
    const int cdim_low = grl.dim(0) + grl.dim(1);
    const int nil_up = gr.dim(1) + gr.dim(2);
    if (cdim_low != cdim + nil_up) {
      fails.push_back("dim g^{e2} = " + std::to_string(cdim_low) + " != " +
                      std::to_string(cdim) + " + " + std::to_string(nil_up));
    }
    if (nil_up % 2 != 0) fails.push_back("dim g^e_nil is odd");
    const auto at = [](const std::map<int, int>& m, int k) {
      const auto it = m.find(k);
      return it == m.end() ? 0 : it->second;
    };
    for (int i = 0; i <= rec.height / 2 + 1; ++i) {
      if (at(want, 2 * i) + at(want, 2 * i + 2) != at(low, i)) {
        fails.push_back("graded identity fails at i = " + std::to_string(i));
      }
    }
    for (int j = 1; 4 * j - 2 <= rec.height; ++j) {
      if ((at(want, 4 * j - 2) + at(want, 4 * j)) % 2 != 0) {
        fails.push_back("parity fails at j = " + std::to_string(j));
      }
    }
    pair_note = "; dim g^{e2} = " + std::to_string(cdim_low) + " = " + std::to_string(cdim) +
                " + " + std::to_string(nil_up) + ", graded identity and parity hold";
  }

  if (!fails.empty()) {
    std::string ev = fails.front();
    for (std::size_t i = 1; i < fails.size(); ++i) ev += "; " + fails[i];
    return {"dims", Verdict::kFalse, ev};
  }
  return {"dims", Verdict::kTrue,
          "centralizer pieces " + map_text(want) + " match; dim g^e = " + std::to_string(cdim) +
              "; dim ker(ad e)^2 = " + std::to_string(ker2) + pair_note};
}

CheckResult check_index(const RootSystem& rs, const OrbitRecord& rec) {
  const Rational ind = rec.dynkin_index;
  bool ok = ind.is_integer();
  std::string ev = "index " + ind.to_string();
  if (!ok) ev += " is not an integer";
  if (rec.half) {
    const Rational half_ind = dynkin_index(rs, rec.half->marks);
    if (ind == half_ind * Rational(4)) {
      ev += " = 4 x " + half_ind.to_string();
    } else {
      ok = false;
      ev += "; expected 4 x " + half_ind.to_string();
    }
  }
  return {"index", ok ? Verdict::kTrue : Verdict::kFalse, ev};
}

CheckResult check_height(const ChevalleyAlgebra& g, const OrbitRecord& rec,
                         const SL2Triple& rep) {
  const int h_elem = element_height(g, rep.e);
  bool ok = h_elem == rec.height;
  std::string ev = "diagram height " + std::to_string(rec.height) + ", ad-power height " +
                   std::to_string(h_elem);
  if (rec.half) {
    const int h_half = diagram_height(g.roots(), rec.half->marks);
    if (rec.height == 2 * h_half) {
      ev += "; half height " + std::to_string(h_half) + " (ratio 2)";
    } else {
      ok = false;
      ev += "; half height " + std::to_string(h_half) + " breaks the ratio";
    }
  }
  return {"height", ok ? Verdict::kTrue : Verdict::kFalse, ev};
}

CheckResult check_reachable(const ChevalleyAlgebra& g, const SL2Triple& rep) {
  const bool r = is_reachable(g, rep.e, rep.h);
  return {"reachable", r ? Verdict::kTrue : Verdict::kFalse,
          r ? "e lies in [g^e, g^e]" : "e does not lie in [g^e, g^e]"};
}

CheckResult check_nilgen(const ChevalleyAlgebra& g, const GradedCentralizer& gc) {
  const bool r = nilradical_generated_by_degree_one(g, gc);
  return {"nilgen", r ? Verdict::kTrue : Verdict::kFalse,
          r ? "g^e(>=1) is generated by g^e(1)" : "g^e(1) does not generate g^e(>=1)"};
}

CheckResult check_very_friendly(const ChevalleyAlgebra& g, const OrbitRecord& rec,
                                const RunConfig& cfg) {
  const FingerprintTable table(g, cfg.seed, cfg.trials);
  FriendlyPair pair;
  pair.upper = rec;
  pair.lower = make_orbit_record(g, *rec.half, cfg.seed, cfg.trials);
  const VeryFriendlyResult res = very_friendly_check(g, pair, table, cfg.seed, cfg.trials);
  return {"very-friendly", res.verdict, res.evidence};
}

int cmd_verify(const SimpleType& t, const std::string& marks_str,
               const std::vector<std::string>& wanted, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
  const auto parsed = WeightedDiagram::parse_marks(marks_str, t.rank);
  if (!parsed) {
    err << "error: cannot parse '" << marks_str << "' as " << t.rank << " comma-separated marks\n";
    return kExitUsage;
  }
  Eigen::VectorXi marks =
      cfg.numbering == Numbering::kVo ? marks_vo_to_bourbaki(t, *parsed) : *parsed;
  for (Eigen::Index i = 0; i < marks.size(); ++i) {
    if (marks(i) < 0 || marks(i) > 2) {
      err << "error: marks must lie in {0, 1, 2}\n";
      return kExitUsage;
    }
  }
  ChevalleyAlgebra g(t);
  if (!is_characteristic(g, marks, cfg.seed, cfg.trials)) {
    err << "error: " << join_ints(display_marks(t, marks, cfg.numbering))
        << " is not a weighted Dynkin diagram of " << t.to_string() << '\n';
    return kExitUsage;
  }
  const OrbitRecord rec = make_orbit_record(g, WeightedDiagram{t, marks}, cfg.seed, cfg.trials);

  static const std::vector<std::string> kAllChecks = {"dims",      "index",  "height",
                                                      "reachable", "nilgen", "very-friendly"};
  std::vector<std::string> checks;
  for (const auto& name : kAllChecks) {
    const bool requested =
        wanted.empty() || std::find(wanted.begin(), wanted.end(), name) != wanted.end();
    if (!requested) continue;
    if (name == "very-friendly" && !rec.divisible) {
      if (wanted.empty()) continue;  // default run skips inapplicable checks
      err << "error: check very-friendly requires a divisible diagram, and "
          << join_ints(display_marks(t, marks, cfg.numbering)) << " is not divisible\n";
      return kExitUsage;
    }
    checks.push_back(name);
  }

  const SL2Triple rep = representative(g, rec.diagram, cfg.seed, cfg.trials);
  const GradedCentralizer gc = graded_centralizer(g, rep.e, rep.h);

  std::vector<CheckResult> results;
  for (const auto& name : checks) {
    if (name == "dims") results.push_back(check_dims(g, rec, rep, gc));
    if (name == "index") results.push_back(check_index(g.roots(), rec));
    if (name == "height") results.push_back(check_height(g, rec, rep));
    if (name == "reachable") results.push_back(check_reachable(g, rep));
    if (name == "nilgen") results.push_back(check_nilgen(g, gc));
    if (name == "very-friendly") results.push_back(check_very_friendly(g, rec, cfg));
  }

  switch (cfg.output) {
    case OutputFormat::kJson: {
      json checks_json = json::array();
      for (const auto& r : results) {
        json cj;
        cj["name"] = r.name;
        cj["verdict"] = to_string(r.verdict);
        cj["evidence"] = r.evidence;
        checks_json.push_back(std::move(cj));
      }
      json j = record_json(t, rec, cfg.numbering, std::move(checks_json));
      j["seed"] = cfg.seed;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      csv_row(out, {"type", "diagram", "check", "verdict", "evidence"});
      for (const auto& r : results) {
        csv_row(out, {t.to_string(), join_ints(display_marks(t, marks, cfg.numbering)), r.name,
                      to_string(r.verdict), r.evidence});
      }
      break;
    }
    case OutputFormat::kText: {
      out << "verify " << t.to_string() << ' ' << join_ints(display_marks(t, marks, cfg.numbering))
          << " (seed " << cfg.seed << ", trials " << cfg.trials << ")\n";
      for (const auto& r : results) {
        out << r.name << ": " << to_string(r.verdict) << " -- " << r.evidence << '\n';
      }
      break;
    }
  }

  bool any_false = false;
  bool any_inconclusive = false;
  for (const auto& r : results) {
    if (r.verdict == Verdict::kFalse) any_false = true;
    if (r.verdict == Verdict::kInconclusive) any_inconclusive = true;
  }
  if (any_false) return kExitRefuted;
  if (any_inconclusive) return kExitInconclusive;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sl3

int cmd_sl3(int a, int b, const RunConfig& cfg, std::ostream& out) {
  const auto mults = sl3::branching_multiplicities(a, b);
  switch (cfg.output) {
    case OutputFormat::kJson: {
      json arr = json::array();
      for (int m : mults) arr.push_back(m);
      out << arr.dump() << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      csv_row(out, {"k", "multiplicity"});
      for (std::size_t k = 0; k < mults.size(); ++k) {
        csv_row(out, {std::to_string(k), std::to_string(mults[k])});
      }
      break;
    }
    case OutputFormat::kText: {
      out << "R(" << a << "," << b << ")\n";
      out << "invariant dim: " << sl3::invariant_dim(a, b) << '\n';
      std::string s;
      for (std::size_t k = 0; k < mults.size(); ++k) {
        if (k > 0) s += ',';
        s += std::to_string(mults[k]);
      }
      out << "multiplicities: " << s << '\n';
      out << "cyclic: " << bool_text(sl3::is_cyclic(sl3::MonomialArray(a, b))) << '\n';
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"exact computations with nilpotent orbits of simple Lie algebras", "nilo"};
  app.require_subcommand(1);

  app.add_option("--seed", cfg.seed, "seed for all randomized searches")->capture_default_str();
  app.add_option("--trials", cfg.trials, "trial budget for witness searches")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  const std::map<std::string, Numbering> numbering_map{{"bourbaki", Numbering::kBourbaki},
                                                       {"vo", Numbering::kVo}};
  app.add_option("--numbering", cfg.numbering, "node numbering for diagram input and output")
      ->transform(CLI::CheckedTransformer(numbering_map, CLI::ignore_case))
      ->default_str("bourbaki");
  const std::map<std::string, OutputFormat> output_map{{"text", OutputFormat::kText},
                                                       {"json", OutputFormat::kJson},
                                                       {"csv", OutputFormat::kCsv}};
  app.add_option("--output", cfg.output, "report format")
      ->transform(CLI::CheckedTransformer(output_map, CLI::ignore_case))
      ->default_str("text");

  std::string orbits_type;
  CLI::App* orbits_cmd = app.add_subcommand("orbits", "list the nilpotent orbits of a type");
  orbits_cmd->fallthrough();
  orbits_cmd->add_option("type", orbits_type, "simple type, e.g. F4 or E6")->required();

  std::string pairs_type;
  CLI::App* pairs_cmd =
      app.add_subcommand("pairs", "list the friendly pairs of a type with computed verdicts");
  pairs_cmd->fallthrough();
  pairs_cmd->add_option("type", pairs_type, "simple type, e.g. F4 or E6")->required();

  std::string classical_family, classical_partition, classical_action;
  CLI::App* classical_cmd =
      app.add_subcommand("classical", "partition-based reports for sl, sp, and so");
  classical_cmd->fallthrough();
  classical_cmd->add_option("family", classical_family, "sl, sp, or so")->required();
  classical_cmd->add_option("partition", classical_partition, "comma-separated parts, e.g. 5,3")
      ->required();
  classical_cmd
      ->add_option("action", classical_action, "classify, divide, matrices, or levi")
      ->required()
      ->check(CLI::IsMember({"classify", "divide", "matrices", "levi"}));

  std::string verify_type, verify_marks;
  std::vector<std::string> verify_checks;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run checks against one weighted diagram");
  verify_cmd->fallthrough();
  verify_cmd->add_option("type", verify_type, "simple type, e.g. F4")->required();
  verify_cmd->add_option("diagram", verify_marks, "comma-separated marks, e.g. 0,2,0,2")
      ->required();
  verify_cmd
      ->add_option("checks", verify_checks,
                   "checks to run (default: all applicable): dims, index, height, reachable, "
                   "nilgen, very-friendly")
      ->check(CLI::IsMember({"dims", "index", "height", "reachable", "nilgen", "very-friendly"}));

  int sl3_a = 0;
  int sl3_b = 0;
  CLI::App* sl3_cmd =
      app.add_subcommand("sl3", "branching multiplicities of the model module R(a,b)");
  sl3_cmd->fallthrough();
  sl3_cmd->add_option("a", sl3_a, "first parameter")->required()->check(CLI::NonNegativeNumber);
  sl3_cmd->add_option("b", sl3_b, "second parameter")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (orbits_cmd->parsed()) {
      const auto t = parse_type_arg(orbits_type, err);
      return t ? cmd_orbits(*t, cfg, out) : kExitUsage;
    }
    if (pairs_cmd->parsed()) {
      const auto t = parse_type_arg(pairs_type, err);
      return t ? cmd_pairs(*t, cfg, out) : kExitUsage;
    }
    if (classical_cmd->parsed()) {
      return cmd_classical(classical_family, classical_partition, classical_action, cfg, out,
                           err);
    }
    if (verify_cmd->parsed()) {
      const auto t = parse_type_arg(verify_type, err);
      return t ? cmd_verify(*t, verify_marks, verify_checks, cfg, out, err) : kExitUsage;
    }
    if (sl3_cmd->parsed()) {
      return cmd_sl3(sl3_a, sl3_b, cfg, out);
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace nilo
