#include "periodica/io.hpp"

#include <fstream>

#include "periodica/error.hpp"

namespace periodica {

using nlohmann::json;

FiniteMagma magma_from_json(const json& j) {
  try {
    std::size_t n = j.at("n").get<std::size_t>();
    const json& rows = j.at("table");
    if (!rows.is_array() || rows.size() != n) {
      fail(ErrorCode::InvalidInput, "table must have n rows");
    }
    std::vector<Element> table;
    for (const json& row : rows) {
      if (!row.is_array() || row.size() != n) fail(ErrorCode::InvalidInput, "table rows must have n entries");
      for (const json& v : row) {
        long long e = v.get<long long>();
        if (e < 0 || static_cast<std::size_t>(e) >= n) {
          fail(ErrorCode::InvalidInput, "table entry " + std::to_string(e) + " out of range");
        }
        table.push_back(static_cast<Element>(e));
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteMagma(n, std::move(table), std::move(labels));
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed magma JSON: ") + e.what());
  }
}

FiniteMagma magma_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, path + ": " + e.what());
  }
  return magma_from_json(j);
}

json magma_to_json(const FiniteMagma& x) {
  json rows = json::array();
  for (Element a = 0; a < x.size(); ++a) {
    json row = json::array();
    for (Element b = 0; b < x.size(); ++b) row.push_back(x.op(a, b));
    rows.push_back(std::move(row));
  }
  return json{{"n", x.size()}, {"table", std::move(rows)}, {"labels", x.labels()}};
}

Element parse_element(const FiniteMagma& x, const std::string& text) {
  std::string t = text;
  t.erase(0, t.find_first_not_of(" \t\""));
  t.erase(t.find_last_not_of(" \t\"") + 1);
  if (auto e = x.find(t)) return *e;
  fail(ErrorCode::InvalidInput, "unknown element \"" + text + "\"");
}

Subset parse_subset(const FiniteMagma& x, const std::string& text) {
  std::string t = text;
  t.erase(0, t.find_first_not_of(" \t\""));
  t.erase(t.find_last_not_of(" \t\"") + 1);
  if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) {
    Subset s(x.size());
    std::size_t bit = 0;
    for (std::size_t i = t.size(); i-- > 2; bit += 4) {
      char c = t[i];
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        v = c - 'A' + 10;
      } else {
        fail(ErrorCode::InvalidInput, "bad hex digit in \"" + text + "\"");
      }
      for (int j = 0; j < 4; ++j) {
        if ((v >> j) & 1) {
          if (bit + j >= x.size()) fail(ErrorCode::InvalidInput, "subset literal \"" + text + "\" exceeds the carrier");
          s.insert(static_cast<Element>(bit + j));
        }
      }
    }
    return s;
  }
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    fail(ErrorCode::InvalidInput, "subset literal must be [..] or 0x..: \"" + text + "\"");
  }
  Subset s(x.size());
  std::string body = t.substr(1, t.size() - 2);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.find_first_not_of(" \t\"") != std::string::npos) s.insert(parse_element(x, item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return s;
}

namespace real {

namespace {

ExactReal parse_number_text(const std::string& raw) {
  std::string t;
  for (char c : raw) {
    if (c != ' ') t.push_back(c);
  }
  if (t.empty()) fail(ErrorCode::InvalidInput, "empty number");
  ExactReal total;
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t j = i + 1;
    while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
    std::string term = t.substr(i, j - i);
    std::size_t root = term.find("sqrt(");
    if (root == std::string::npos) {
      total += ExactReal(ExactReal::parse_rational(term));
    } else {
      std::string coef = term.substr(0, root);
      if (!coef.empty() && coef.back() == '*') coef.pop_back();
      if (coef.empty() || coef == "+") coef = "1";
      if (coef == "-") coef = "-1";
      std::size_t close = term.find(')', root);
      if (close == std::string::npos || close + 1 != term.size()) {
        fail(ErrorCode::InvalidInput, "malformed root term \"" + term + "\"");
      }
      std::string rad = term.substr(root + 5, close - root - 5);
      if (rad.empty() || rad.find_first_not_of("0123456789") != std::string::npos || rad.size() > 18) {
        fail(ErrorCode::InvalidInput, "malformed radicand \"" + rad + "\"");
      }
      total += ExactReal::root(std::stoull(rad), ExactReal::parse_rational(coef));
    }
    i = j;
  }
  return total;
}

}  // namespace

ExactReal number_from_json(const json& j) {
  if (j.is_number_integer()) return ExactReal(mpq_class(mpz_class(j.dump())));
  if (j.is_string()) return parse_number_text(j.get<std::string>());
  if (j.is_object()) {
    ExactReal v;
    for (const auto& [key, _] : j.items()) {
      if (key != "q" && key != "roots") fail(ErrorCode::InvalidInput, "unknown number field \"" + key + "\"");
    }
    if (j.contains("q")) v += number_from_json(j.at("q"));
    if (j.contains("roots")) {
      for (const auto& [rad, coef] : j.at("roots").items()) {
        if (rad.empty() || rad.find_first_not_of("0123456789") != std::string::npos || rad.size() > 18) {
          fail(ErrorCode::InvalidInput, "malformed radicand \"" + rad + "\"");
        }
        ExactReal c = number_from_json(coef);
        if (!c.is_rational()) fail(ErrorCode::InvalidInput, "root coefficients must be rational");
        v += ExactReal::root(std::stoull(rad), c.rational());
      }
    }
    return v;
  }
  fail(ErrorCode::InvalidInput, "a number must be an integer, a string or {q, roots}");
}

json number_to_json(const ExactReal& v) { return v.to_string(); }

Cell cell_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "a cell must be an object");
  if (j.contains("point")) return Cell::point(number_from_json(j.at("point")));
  if (!j.contains("lo") || !j.contains("hi")) {
    fail(ErrorCode::InvalidInput, "an interval cell needs lo and hi");
  }
  Cell c{number_from_json(j.at("lo")), number_from_json(j.at("hi")), j.value("lo_closed", true),
         j.value("hi_closed", true)};
  if (!(c.lo < c.hi)) fail(ErrorCode::InvalidInput, "an interval cell needs lo < hi");
  return c;
}

json cell_to_json(const Cell& c) {
  if (c.is_point()) return json{{"point", number_to_json(c.lo)}};
  return json{{"lo", number_to_json(c.lo)},
              {"hi", number_to_json(c.hi)},
              {"lo_closed", c.lo_closed},
              {"hi_closed", c.hi_closed}};
}

UnitPeriodicRealSet set_from_json(const json& j) {
  try {
    std::vector<Cell> d, e;
    if (j.contains("D")) {
      for (const json& c : j.at("D")) d.push_back(cell_from_json(c));
    }
    if (j.contains("E")) {
      for (const json& c : j.at("E")) e.push_back(cell_from_json(c));
    }
    return UnitPeriodicRealSet(std::move(d), std::move(e), j.value("mirrored", false));
  } catch (const json::exception& ex) {
    fail(ErrorCode::InvalidInput, std::string("malformed set JSON: ") + ex.what());
  }
}

json set_to_json(const UnitPeriodicRealSet& a) {
  json d = json::array(), e = json::array();
  for (const Cell& c : a.d().cells()) d.push_back(cell_to_json(c));
  for (const Cell& c : a.e().cells()) e.push_back(cell_to_json(c));
  json out{{"D", std::move(d)}, {"E", std::move(e)}};
  if (a.mirrored()) out["mirrored"] = true;
  return out;
}

UnitPeriodicRealSet set_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("set is not valid JSON: ") + e.what());
  }
  return set_from_json(j);
}

}  // namespace real

}  // namespace periodica
