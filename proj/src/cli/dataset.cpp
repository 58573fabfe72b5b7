#include "ncstat/cli/dataset.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "ncstat/errors.hpp"

namespace ncstat::cli {

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::json cell_json(const Cell& c) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(std::int64_t v) const { return v; }
    nlohmann::json operator()(double v) const {
      return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
    }
    nlohmann::json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t, const nlohmann::json& meta) {
  nlohmann::json j;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    j["rows"].push_back(std::move(r));
  }
  j["meta"] = meta;
  os << j.dump(2) << '\n';
}

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::f1_free_energy: return "f1";
    case FigureId::f2_mean_energy: return "f2";
    case FigureId::f3_entropy: return "f3";
    case FigureId::f4_specific_heat: return "f4";
    case FigureId::f5_one_d_panel: return "f5";
  }
  return "?";
}

std::optional<FigureId> figure_from_string(std::string_view s) {
  if (s == "f1") return FigureId::f1_free_energy;
  if (s == "f2") return FigureId::f2_mean_energy;
  if (s == "f3") return FigureId::f3_entropy;
  if (s == "f4") return FigureId::f4_specific_heat;
  if (s == "f5") return FigureId::f5_one_d_panel;
  return std::nullopt;
}

std::vector<std::string> figure_columns(std::optional<FigureId> id) {
  if (!id) return {"alpha_bar", "Z", "F_bar", "U_bar", "S_bar", "C_bar"};
  switch (*id) {
    case FigureId::f1_free_energy: return {"alpha_bar", "F_bar"};
    case FigureId::f2_mean_energy: return {"alpha_bar", "U_bar"};
    case FigureId::f3_entropy: return {"alpha_bar", "S_bar"};
    case FigureId::f4_specific_heat: return {"alpha_bar", "C_bar"};
    case FigureId::f5_one_d_panel: return {"alpha_bar", "F_bar", "U_bar", "S_bar", "C_bar"};
  }
  return {};
}

void FigureDataset::validate() const {
  if (columns != figure_columns(figure)) throw UsageError("dataset columns do not match figure id");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != columns.size()) throw UsageError("dataset row has wrong column count");
    if (i > 0 && !(rows[i][0] > rows[i - 1][0])) throw UsageError("dataset rows not sorted by alpha_bar");
  }
}

Table FigureDataset::to_table() const {
  Table t;
  t.columns = columns;
  for (const auto& r : rows) {
    std::vector<Cell> cells(r.begin(), r.end());
    t.rows.push_back(std::move(cells));
  }
  return t;
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw UsageError("not a number in CSV: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

FigureDataset parse_csv(std::string_view text, std::optional<FigureId> figure) {
  FigureDataset d;
  d.figure = figure;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (header) {
      for (auto f : fields) d.columns.emplace_back(f);
      header = false;
      continue;
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (auto f : fields) row.push_back(parse_double(f));
    d.rows.push_back(std::move(row));
  }
  if (!figure) {
    for (auto id : {FigureId::f1_free_energy, FigureId::f2_mean_energy, FigureId::f3_entropy,
                    FigureId::f4_specific_heat, FigureId::f5_one_d_panel}) {
      if (figure_columns(id) == d.columns) d.figure = id;
    }
  }
  return d;
}

}  // namespace ncstat::cli
