#include "gsv/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gsv/error.hpp"

namespace gsv {

namespace {

struct Entry {
  int line = 0;
  std::string value;
};

using Section = std::map<std::string, Entry>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::vector<std::vector<int>> parse_int_matrix(const Entry& e) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(e.value);
  } catch (const std::exception& ex) {
    parse_fail(e.line, std::string("bad table literal: ") + ex.what());
  }
  if (!j.is_array()) parse_fail(e.line, "table literal must be a list of lists");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) parse_fail(e.line, "table literal must be a list of lists");
    out.push_back(row.get<std::vector<int>>());
  }
  return out;
}

std::vector<int> parse_int_list(const Entry& e) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(e.value);
  } catch (const std::exception& ex) {
    parse_fail(e.line, std::string("bad list literal: ") + ex.what());
  }
  if (!j.is_array()) parse_fail(e.line, "expected a list of integers");
  return j.get<std::vector<int>>();
}

GroupPtr build_group(const Section& sec) {
  const auto kind_it = sec.find("kind");
  const auto table_it = sec.find("table");
  if (kind_it != sec.end() && table_it != sec.end())
    parse_fail(kind_it->second.line, "[group] takes either 'kind' or 'table', not both");
  if (table_it != sec.end()) return group_from_table(parse_int_matrix(table_it->second));
  if (kind_it == sec.end()) fail(Errc::ParseError, "[group] needs 'kind' or 'table'");

  const Entry& e = kind_it->second;
  const auto words = split_words(e.value);
  auto arg = [&](std::size_t i) {
    if (i >= words.size()) parse_fail(e.line, "missing parameter for group kind");
    try {
      return std::stoi(words[i]);
    } catch (...) {
      parse_fail(e.line, "group parameter must be an integer");
    }
  };
  if (words.empty()) parse_fail(e.line, "empty group kind");
  if (words[0] == "cyclic") return cyclic_group(arg(1));
  if (words[0] == "dihedral") return dihedral_group(arg(1));
  if (words[0] == "symmetric") return symmetric_group(arg(1));
  if (words[0] == "product") {
    // product <kind> <n> <kind> <n>
    if (words.size() != 5) parse_fail(e.line, "product takes two kind/parameter pairs");
    auto sub = [&](const std::string& k, int n) -> GroupPtr {
      if (k == "cyclic") return cyclic_group(n);
      if (k == "dihedral") return dihedral_group(n);
      if (k == "symmetric") return symmetric_group(n);
      parse_fail(e.line, "unknown factor kind '" + k + "'");
    };
    return product_group(sub(words[1], arg(2)), sub(words[3], arg(4)));
  }
  parse_fail(e.line, "unknown group kind '" + words[0] + "'");
}

GSet build_gset(const GroupPtr& g, const std::string& name, const Entry& e) {
  const auto words = split_words(e.value);
  if (words.empty()) parse_fail(e.line, "empty G-set spec for '" + name + "'");
  GSet s;
  if (words[0] == "point") {
    s = point_gset(g);
  } else if (words[0] == "regular") {
    s = regular_gset(g);
  } else if (words[0] == "conj") {
    s = conj_gset(g);
  } else if (words[0] == "trivial") {
    if (words.size() != 2) parse_fail(e.line, "trivial takes a size");
    s = trivial_gset(g, std::stoi(words[1]));
  } else if (words[0] == "table") {
    const auto pos = e.value.find('[');
    if (pos == std::string::npos) parse_fail(e.line, "table spec needs a literal");
    Entry lit{e.line, e.value.substr(pos)};
    s = gset_from_table(g, parse_int_matrix(lit), name);
  } else {
    parse_fail(e.line, "unknown G-set kind '" + words[0] + "'");
  }
  s.name = name;
  return s;
}

}  // namespace

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> order = {
      "laws",      "distributive", "lax-colax", "correspondence",
      "duplicial", "cyclicity",    "homology",  "classify"};
  return order;
}

const GSet* Scenario::find_gset(const std::string& name) const {
  for (const auto& [n, s] : gsets)
    if (n == name) return &s;
  return nullptr;
}

Scenario parse_scenario(const std::string& text) {
  std::map<std::string, Section> sections;
  std::vector<std::pair<std::string, Entry>> gset_entries;  // keep declaration order
  std::string current;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(lineno, "unterminated section header");
      current = line.substr(1, line.size() - 2);
      if (current != "group" && current != "gsets" && current != "coefficients" &&
          current != "run")
        parse_fail(lineno, "unknown section '" + current + "'");
      sections[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail(lineno, "expected 'key = value'");
    if (current.empty()) parse_fail(lineno, "entry outside any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) parse_fail(lineno, "empty key");
    if (current == "gsets") {
      gset_entries.emplace_back(key, Entry{lineno, value});
    } else {
      if (sections[current].count(key)) parse_fail(lineno, "duplicate key '" + key + "'");
      sections[current][key] = Entry{lineno, value};
    }
  }

  if (!sections.count("group")) fail(Errc::ParseError, "missing [group] section");
  Scenario sc;
  sc.group = build_group(sections["group"]);
  sc.group_desc = sc.group->name;

  for (const auto& [name, entry] : gset_entries)
    sc.gsets.emplace_back(name, build_gset(sc.group, name, entry));

  if (sections.count("coefficients")) {
    Section& sec = sections["coefficients"];
    auto ref = [&](const char* key, const char* fallback) -> std::string {
      auto it = sec.find(key);
      return it == sec.end() ? fallback : it->second.value;
    };
    sc.l_name = ref("L", "L");
    sc.n_name = ref("N", "N");
    const GSet* l = sc.find_gset(sc.l_name);
    if (!l) fail(Errc::UnresolvedReference, "G-set '" + sc.l_name + "' is not defined");
    const GSet* n = sc.find_gset(sc.n_name);
    if (!n) fail(Errc::UnresolvedReference, "G-set '" + sc.n_name + "' is not defined");

    if (!sec.count("h") || !sec.count("f"))
      fail(Errc::ParseError, "[coefficients] needs 'h' and 'f'");
    const std::vector<int> h = parse_int_list(sec.at("h"));
    const std::vector<int> f = parse_int_list(sec.at("f"));

    CodomainAction action = CodomainAction::translation;
    if (sec.count("h_action")) {
      const std::string a = sec.at("h_action").value;
      if (a == "translation")
        action = CodomainAction::translation;
      else if (a == "conjugation")
        action = CodomainAction::conjugation;
      else if (a == "trivial")
        action = CodomainAction::trivial;
      else
        parse_fail(sec.at("h_action").line, "unknown h_action '" + a + "'");
    }
    int a_bar = 0;
    if (sec.count("a_bar")) {
      try {
        a_bar = std::stoi(sec.at("a_bar").value);
      } catch (...) {
        parse_fail(sec.at("a_bar").line, "a_bar must be an element index");
      }
    }
    sc.coefficients = make_config(*l, *n, h, action, f, a_bar, "scenario");
  }

  sc.cap = 3;
  if (sections.count("run")) {
    Section& sec = sections["run"];
    if (sec.count("cap")) {
      try {
        sc.cap = std::stoi(sec.at("cap").value);
      } catch (...) {
        parse_fail(sec.at("cap").line, "cap must be an integer");
      }
      if (sc.cap < 1) parse_fail(sec.at("cap").line, "cap must be >= 1");
    }
    if (sec.count("suites")) {
      for (const std::string& s : split_words(sec.at("suites").value)) {
        if (s == "all") {
          sc.suites = all_suites();
          break;
        }
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
          parse_fail(sec.at("suites").line, "unknown suite '" + s + "'");
        sc.suites.push_back(s);
      }
    }
  }
  if (sc.suites.empty()) sc.suites = all_suites();

  // Dependency order regardless of how the selection was written.
  std::vector<std::string> ordered;
  for (const std::string& s : all_suites())
    if (std::find(sc.suites.begin(), sc.suites.end(), s) != sc.suites.end()) ordered.push_back(s);
  sc.suites = ordered;
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace gsv
