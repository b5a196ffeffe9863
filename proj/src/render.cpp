#include "fano72/render.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace fano72::render {

using nlohmann::json;
using pipeline::Certificate;
using pipeline::SquareFactorRow;

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::vector<std::string> quoted;
  for (const auto& c : cells) quoted.push_back(csv_quote(c));
  return join(quoted, ",") + "\n";
}

std::string md_line(const std::vector<std::string>& cells) { return "| " + join(cells, " | ") + " |\n"; }

std::string md_header(const std::vector<std::string>& cells) {
  std::string out = md_line(cells);
  out += "|";
  for (std::size_t i = 0; i < cells.size(); ++i) out += "---|";
  return out + "\n";
}

std::string ints(const std::vector<std::int64_t>& values, std::string_view sep) {
  std::vector<std::string> s;
  for (auto v : values) s.push_back(std::to_string(v));
  return join(s, sep);
}

std::string n_with_factors(const SquareFactorRow& row) {
  return std::to_string(row.n) + "=" + arith::factorization_str(row.factors);
}

json rational_list(const std::vector<std::int64_t>& values) { return json(values); }

// ---- JSON payloads -------------------------------------------------------

json table1_json(const Certificate& cert) {
  json rows = json::array();
  for (const auto& r : cert.table1) {
    rows.push_back({{"R", r.indices.str()},
                    {"r_x", r.r_x},
                    {"rx_c2c1", r.rx_c2c1},
                    {"candidates", rational_list(r.candidates)},
                    {"j1_budget_max", r.j1_budget_max ? json(r.j1_budget_max->str()) : json(nullptr)}});
  }
  return rows;
}

json table2_json(const Certificate& cert) {
  json rows = json::array();
  for (const auto& e : cert.table2) {
    rows.push_back({{"R", e.indices.str()},
                    {"r_x", e.r_x},
                    {"rx_c2c1", e.rx_c2c1},
                    {"n", e.n},
                    {"q", e.q},
                    {"j1_budget", e.j1_budget.str()},
                    {"sigma", e.sigma.str()},
                    {"j2_budget", e.j2_budget.str()},
                    {"passes_j2", e.passes_j2}});
  }
  return rows;
}

json square_rows_json(const std::vector<SquareFactorRow>& rows, bool gorenstein) {
  json out = json::array();
  for (const auto& r : rows) {
    json cells = json::array();
    for (const auto& c : r.cells) cells.push_back({{"j", c.j}, {"kept", c.kept}, {"divergent", c.divergent}});
    json row{{"n", r.n},
             {"factorization", arith::factorization_str(r.factors)},
             {"m", r.m},
             {"cells", cells},
             {"kept", rational_list(r.kept())},
             {"crossed", rational_list(r.crossed())},
             {"j1_budget", r.j1_budget.str()},
             {"notes", r.notes}};
    if (!gorenstein) {
      row["R"] = r.indices.str();
      row["r_x"] = r.r_x;
      row["rx_c2c1"] = r.rx_c2c1;
    } else {
      row["c2c1"] = r.rx_c2c1;
    }
    out.push_back(std::move(row));
  }
  return out;
}

json table4_json(const Certificate& cert) {
  json rows = json::array();
  for (const auto& e : cert.table4) {
    rows.push_back({{"R", e.indices.str()},
                    {"r_x", e.r_x},
                    {"rx_c2c1", e.rx_c2c1},
                    {"n", e.n},
                    {"q", e.q},
                    {"j_a", e.j_a},
                    {"sigma", e.sigma.str()},
                    {"j2_budget", e.j2_budget.str()},
                    {"passes_j2", e.passes_j2}});
  }
  return rows;
}

json table_json(int which, const Certificate& cert) {
  switch (which) {
    case 1: return table1_json(cert);
    case 2: return table2_json(cert);
    case 3: return square_rows_json(cert.table3, false);
    case 4: return table4_json(cert);
    case 5: return square_rows_json(cert.gorenstein.table5, true);
    default: throw std::invalid_argument("table selector must be 1..5, got " + std::to_string(which));
  }
}

json steps_json(const std::vector<pipeline::ScriptStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) out.push_back({{"step", s.name}, {"detail", s.detail}});
  return out;
}

json multisets_json(const std::vector<IndexMultiset>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s.str());
  return out;
}

json low_q_json(const pipeline::LowQTrace& t) {
  return {
      {"q_at_most_5",
       {{"coefficient", t.a_coefficient.str()},
        {"c2c1_lower", t.a_c2c1_lower.str()},
        {"indices", multisets_json(t.a_indices)},
        {"scaled_degrees", rational_list(t.a_scaled_degrees)},
        {"basket", t.a_basket ? json(t.a_basket->str()) : json(nullptr)},
        {"h0", t.a_h0 ? json(t.a_h0->str()) : json(nullptr)},
        {"eliminated", t.a_eliminated}}},
      {"q_equals_6",
       {{"coefficient", t.b_coefficient.str()},
        {"c2c1_lower", t.b_c2c1_lower.str()},
        {"indices", multisets_json(t.b_indices)},
        {"n_range", {t.b_n_lower.str(), t.b_n_upper.str()}},
        {"candidates", rational_list(t.b_candidates)},
        {"q_w", t.b_q_w},
        {"torsion_order", t.b_torsion_order},
        {"cover_degree", t.b_cover_degree.str()},
        {"external_bound", t.external_bound.str()},
        {"eliminated", t.b_eliminated}}},
      {"steps", steps_json(t.steps)},
      {"closed", t.closed()},
  };
}

json gorenstein_json(const pipeline::GorensteinTrace& t) {
  json qc = json::array();
  for (const auto& c : t.q_candidates) {
    qc.push_back({{"n", c.n},
                  {"q", c.q},
                  {"j_a", c.j_a},
                  {"sigma", c.sigma.str()},
                  {"j2_budget", c.j2_budget.str()},
                  {"passes_j2", c.passes_j2}});
  }
  json div = json::array();
  for (const auto& d : t.divergences) div.push_back({{"n", d.n}, {"m", d.m}, {"j", d.j}, {"note", d.note}});
  return {
      {"c_range", {t.c_min, t.c_max}},
      {"curve",
       {{"coefficient", t.low_q_coefficient.str()},
        {"min_contribution", t.min_curve_contribution.str()},
        {"c_upper", t.curve_c_upper.str()},
        {"eliminated", t.curve_eliminated}}},
      {"no_curve",
       {{"degrees", rational_list(t.no_curve_degrees)},
        {"parity_q", t.parity_q},
        {"semistable_bound", t.semistable_bound.str()},
        {"eliminated", t.no_curve_eliminated}}},
      {"large_q",
       {{"j_universe", rational_list(t.j_universe)},
        {"divergences", div},
        {"candidates", qc},
        {"eliminated", t.large_q_eliminated}}},
      {"steps", steps_json(t.steps)},
      {"closed", t.closed()},
  };
}

json record_json(const pipeline::EliminationRecord& r) {
  json trace = json::array();
  for (const auto& s : r.trace) trace.push_back({{"filter", s.filter}, {"detail", s.detail}, {"passed", s.passed}});
  return {{"branch", r.branch},
          {"case", {{"R", r.indices.str()}, {"r_x", r.r_x}, {"n", r.n}, {"m", r.m}, {"j_a", r.j_a}, {"q", r.q}}},
          {"trace", trace},
          {"verdict", r.eliminated_by ? "eliminated by " + *r.eliminated_by : std::string("survives")}};
}

// ---- Markdown ------------------------------------------------------------

std::string budget_cell(const Rational& budget, bool several) {
  return (several ? "<= " : "") + budget.decimal_str();
}

std::string table1_md(const Certificate& cert) {
  std::string out = md_header({"R_X", "r_X", "r_X c2c1", "r_X c1^3", "r_X c2c1 - r_X c1^3/4"});
  for (const auto& r : cert.table1) {
    if (r.candidates.empty()) {
      out += md_line({r.indices.str(), std::to_string(r.r_x), std::to_string(r.rx_c2c1), "NO", ""});
    } else {
      out += md_line({r.indices.str(), std::to_string(r.r_x), std::to_string(r.rx_c2c1), ints(r.candidates, ", "),
                      budget_cell(*r.j1_budget_max, r.candidates.size() > 1)});
    }
  }
  return out;
}

std::string table2_md(const Certificate& cert) {
  std::string out = md_header({"R_X", "r_X", "r_X c2c1", "r_X c1^3", "q"});
  for (std::size_t i = 0; i < cert.table2.size();) {
    const auto& e = cert.table2[i];
    std::vector<std::int64_t> qs;
    for (; i < cert.table2.size() && cert.table2[i].n == e.n && cert.table2[i].indices == e.indices; ++i) {
      qs.push_back(cert.table2[i].q);
    }
    out += md_line({e.indices.str(), std::to_string(e.r_x), std::to_string(e.rx_c2c1), std::to_string(e.n),
                    ints(qs, ", ")});
  }
  return out;
}

struct Footnotes {
  std::vector<std::string> lines;
  std::string mark(const std::string& text) {
    lines.push_back(text);
    return "[^" + std::to_string(lines.size()) + "]";
  }
  [[nodiscard]] std::string str() const {
    std::string out;
    if (!lines.empty()) out += "\n";
    for (std::size_t i = 0; i < lines.size(); ++i) out += "[^" + std::to_string(i + 1) + "]: " + lines[i] + "\n";
    return out;
  }
};

std::string j_cells(const SquareFactorRow& row, Footnotes& notes) {
  std::vector<std::string> cells;
  for (const auto& c : row.cells) {
    std::string s = c.kept ? std::to_string(c.j) : "~~" + std::to_string(c.j) + "~~";
    cells.push_back(std::move(s));
  }
  std::string out = join(cells, ", ");
  for (const auto& n : row.notes) out += notes.mark(std::to_string(row.n) + ", q/J_A=" + std::to_string(row.m) + ": " + n);
  return out;
}

std::string square_budget(const SquareFactorRow& row) {
  const bool show = std::any_of(row.cells.begin(), row.cells.end(), [](const auto& c) { return !c.kept; });
  return show ? row.j1_budget.decimal_str() : "";
}

std::string table3_md(const Certificate& cert) {
  std::string out = md_header({"R_X", "r_X", "r_X c2c1", "r_X c1^3", "q/J_A", "J_A", "r_X c2c1 - r_X c1^3/4"});
  Footnotes notes;
  for (const auto& r : cert.table3) {
    out += md_line({r.indices.str(), std::to_string(r.r_x), std::to_string(r.rx_c2c1), n_with_factors(r),
                    std::to_string(r.m), j_cells(r, notes), square_budget(r)});
  }
  return out + notes.str();
}

std::string table4_md(const Certificate& cert) {
  std::string out = md_header({"R_X", "r_X", "r_X c2c1", "r_X c1^3", "(q, J_A)"});
  // One line per square-factor row, as in Table 3.
  for (const auto& row : cert.table3) {
    std::vector<std::string> pairs;
    for (const auto& e : cert.table4) {
      if (e.indices == row.indices && e.n == row.n && e.q == row.m * e.j_a) {
        pairs.push_back("(" + std::to_string(e.q) + ", " + std::to_string(e.j_a) + ")");
      }
    }
    if (pairs.empty()) continue;
    out += md_line({row.indices.str(), std::to_string(row.r_x), std::to_string(row.rx_c2c1), n_with_factors(row),
                    join(pairs, ", ")});
  }
  return out;
}

std::string table5_md(const Certificate& cert) {
  std::string out = md_header({"c1^3", "q/J_A", "J_A", "c2c1 - c1^3/4"});
  Footnotes notes;
  for (const auto& r : cert.gorenstein.table5) {
    out += md_line({n_with_factors(r), std::to_string(r.m), j_cells(r, notes), square_budget(r)});
  }
  return out + notes.str();
}

// ---- CSV -----------------------------------------------------------------

std::string table1_csv(const Certificate& cert) {
  std::string out = csv_line({"R", "r_x", "rx_c2c1", "candidates", "j1_budget_max"});
  for (const auto& r : cert.table1) {
    out += csv_line({r.indices.str(), std::to_string(r.r_x), std::to_string(r.rx_c2c1),
                     r.candidates.empty() ? "NO" : ints(r.candidates, " "),
                     r.j1_budget_max ? r.j1_budget_max->str() : ""});
  }
  return out;
}

std::string table2_csv(const Certificate& cert) {
  std::string out = csv_line({"R", "r_x", "rx_c2c1", "n", "q", "j1_budget", "sigma", "j2_budget", "passes_j2"});
  for (const auto& e : cert.table2) {
    out += csv_line({e.indices.str(), std::to_string(e.r_x), std::to_string(e.rx_c2c1), std::to_string(e.n),
                     std::to_string(e.q), e.j1_budget.str(), e.sigma.str(), e.j2_budget.str(),
                     e.passes_j2 ? "true" : "false"});
  }
  return out;
}

std::string square_csv(const std::vector<SquareFactorRow>& rows, bool gorenstein) {
  std::string out;
  if (gorenstein) {
    out = csv_line({"n", "factorization", "m", "kept", "crossed", "divergent", "j1_budget"});
  } else {
    out = csv_line({"R", "r_x", "rx_c2c1", "n", "factorization", "m", "kept", "crossed", "j1_budget"});
  }
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    if (!gorenstein) cells = {r.indices.str(), std::to_string(r.r_x), std::to_string(r.rx_c2c1)};
    cells.push_back(std::to_string(r.n));
    cells.push_back(arith::factorization_str(r.factors));
    cells.push_back(std::to_string(r.m));
    cells.push_back(ints(r.kept(), " "));
    cells.push_back(ints(r.crossed(), " "));
    if (gorenstein) {
      std::vector<std::int64_t> div;
      for (const auto& c : r.cells) {
        if (c.divergent) div.push_back(c.j);
      }
      cells.push_back(ints(div, " "));
    }
    cells.push_back(r.j1_budget.str());
    out += csv_line(cells);
  }
  return out;
}

std::string table4_csv(const Certificate& cert) {
  std::string out = csv_line({"R", "r_x", "rx_c2c1", "n", "q", "j_a", "sigma", "j2_budget", "passes_j2"});
  for (const auto& e : cert.table4) {
    out += csv_line({e.indices.str(), std::to_string(e.r_x), std::to_string(e.rx_c2c1), std::to_string(e.n),
                     std::to_string(e.q), std::to_string(e.j_a), e.sigma.str(), e.j2_budget.str(),
                     e.passes_j2 ? "true" : "false"});
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "md" || text == "markdown") return Format::markdown;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("format must be md, markdown, csv or json, got '" + std::string(text) + "'");
}

std::string table(int which, const Certificate& cert, Format format) {
  if (which < 1 || which > 5) throw std::invalid_argument("table selector must be 1..5, got " + std::to_string(which));
  if (format == Format::json) return table_json(which, cert).dump(2) + "\n";
  if (format == Format::csv) {
    switch (which) {
      case 1: return table1_csv(cert);
      case 2: return table2_csv(cert);
      case 3: return square_csv(cert.table3, false);
      case 4: return table4_csv(cert);
      default: return square_csv(cert.gorenstein.table5, true);
    }
  }
  switch (which) {
    case 1: return table1_md(cert);
    case 2: return table2_md(cert);
    case 3: return table3_md(cert);
    case 4: return table4_md(cert);
    default: return table5_md(cert);
  }
}

std::string certificate_json(const Certificate& cert) {
  json axioms = json::array();
  for (const auto& a : cert.axioms) {
    axioms.push_back({{"name", a.name}, {"statement", a.statement}, {"citation", a.citation}});
  }
  json records = json::array();
  for (const auto& r : cert.records) records.push_back(record_json(r));
  json survivors = json::array();
  for (const auto& r : cert.survivors) survivors.push_back(record_json(r));
  json tables = json::object();
  for (int i = 1; i <= 5; ++i) tables[std::to_string(i)] = table_json(i, cert);

  json doc{{"mode", std::string(pipeline::mode_name(cert.mode))},
           {"j_budget_slack", cert.j_budget_slack.str()},
           {"j_universe", {{"budget", cert.j_universe_budget.str()}, {"values", rational_list(cert.j_universe)}}},
           {"tables", tables},
           {"low_q_script", low_q_json(cert.low_q)},
           {"gorenstein_script", gorenstein_json(cert.gorenstein)},
           {"records", records},
           {"survivors", survivors},
           {"axioms", axioms},
           {"normalizations", cert.normalizations},
           {"verdict", cert.bounded() ? "bounded by 72" : "survivors remain"}};
  return doc.dump(2) + "\n";
}

std::string survivor_listing(const Certificate& cert) {
  std::ostringstream out;
  for (const auto& r : cert.survivors) {
    out << "survivor: branch=" << r.branch;
    if (r.branch != "script") {
      out << " R=" << r.indices.str() << " N=" << r.n << " m=" << r.m << " J_A=" << r.j_a << " q=" << r.q;
    }
    if (!r.trace.empty()) out << " last=" << r.trace.back().filter << " (" << r.trace.back().detail << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace fano72::render
