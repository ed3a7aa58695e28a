#pragma once

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mptutte/matroid.hpp"
#include "mptutte/perspective.hpp"

namespace mptutte {

// Line-based input format. The first line is the kind keyword; an
// `elements` line fixes the ground-set order; set literals are
// brace-enclosed comma-separated labels.
//
//   matroid                       graph
//   elements 1 2 3 4              vertex a
//   bases {1,3} {1,4} ...         vertex b
//                                 edge 1 a b
//   perspective                   ...
//   elements 1 2 3 4 5
//   m circuits {1,2,3}            major
//   mprime circuits {2,4} ...     elements 1 2 3 p
//                                 bases {1,2,p} ...
//                                 ports {p}

enum class document_kind { matroid, graph, perspective, major };

inline std::string to_string(document_kind k) {
  switch (k) {
    case document_kind::matroid: return "matroid";
    case document_kind::graph: return "graph";
    case document_kind::perspective: return "perspective";
    case document_kind::major: return "major";
  }
  return "?";
}

/// Parsed input file with the original declarations retained (for
/// serialization) and the resolved objects.
struct input_document {
  document_kind kind = document_kind::matroid;
  std::string source_name;

  // declarations, as given
  std::vector<std::string> element_labels;          // matroid/perspective/major
  bool via_bases = true;                            // matroid/major family line
  std::vector<subset> family;                       // matroid/major sets
  bool m_via_bases = true, mprime_via_bases = true; // perspective family lines
  std::vector<subset> m_family, mprime_family;
  std::vector<std::string> vertex_names;            // graph
  std::vector<std::array<std::string, 3>> edge_decls;
  subset ports;                                     // major

  // resolved objects
  std::optional<matroid> m;
  std::optional<perspective> p;

  /// The perspective every subcommand operates on: identity for matroid
  /// and graph documents, the resolved pair otherwise.
  perspective to_perspective() const {
    if (p) return *p;
    return perspective::identity(*m);
  }
};

namespace detail {

struct line_cursor {
  std::istringstream in;
  int number = 0;
  std::string text;

  explicit line_cursor(const std::string& whole) : in(whole) {}

  bool next() {
    while (std::getline(in, text)) {
      ++number;
      const auto first = text.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;  // blank line
      if (text[first] == '#') continue;          // comment line
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("line " + std::to_string(number) + ": " + what);
  }
};

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Splits "bases {1,3} {1,4}" into the keyword and the brace literals.
inline std::vector<std::string> split_set_literals(line_cursor& cur, const std::string& rest) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < rest.size()) {
    if (std::isspace(static_cast<unsigned char>(rest[i]))) {
      ++i;
      continue;
    }
    if (rest[i] != '{') cur.fail("expected a set literal, found '" + rest.substr(i) + "'");
    const size_t close = rest.find('}', i);
    if (close == std::string::npos) cur.fail("unterminated set literal");
    out.push_back(rest.substr(i, close - i + 1));
    i = close + 1;
  }
  return out;
}

inline std::vector<subset> parse_family(line_cursor& cur, const ground_set& g,
                                        const std::string& rest) {
  std::vector<subset> out;
  for (const auto& lit : split_set_literals(cur, rest)) {
    try {
      out.push_back(g.parse_subset(lit));
    } catch (const std::exception& e) {
      cur.fail(e.what());
    }
  }
  return out;
}

inline std::string rest_after(const std::string& line, size_t words) {
  std::istringstream in(line);
  std::string w;
  for (size_t i = 0; i < words; ++i) in >> w;
  std::string rest;
  std::getline(in, rest);
  return rest;
}

}  // namespace detail

inline input_document parse_document(const std::string& text,
                                     const std::string& source_name = "<input>") {
  detail::line_cursor cur(text);
  if (!cur.next()) throw std::invalid_argument("empty document");
  const auto head = detail::split_words(cur.text);
  input_document doc;
  doc.source_name = source_name;

  if (head.size() != 1)
    cur.fail("first line must be one of: matroid, graph, perspective, major");
  if (head[0] == "matroid") doc.kind = document_kind::matroid;
  else if (head[0] == "graph") doc.kind = document_kind::graph;
  else if (head[0] == "perspective") doc.kind = document_kind::perspective;
  else if (head[0] == "major") doc.kind = document_kind::major;
  else cur.fail("unknown document kind '" + head[0] + "'");

  if (doc.kind == document_kind::graph) {
    graph g;
    while (cur.next()) {
      const auto words = detail::split_words(cur.text);
      try {
        if (words[0] == "vertex" && words.size() == 2) {
          g.add_vertex(words[1]);
          doc.vertex_names.push_back(words[1]);
        } else if (words[0] == "edge" && words.size() == 4) {
          g.add_edge(words[1], words[2], words[3]);
          doc.edge_decls.push_back({words[1], words[2], words[3]});
        } else {
          cur.fail("expected 'vertex NAME' or 'edge LABEL V1 V2'");
        }
      } catch (const std::invalid_argument& e) {
        cur.fail(e.what());
      }
    }
    try {
      doc.m = matroid::graphic(g);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("graph document: ") + e.what());
    }
    return doc;
  }

  // matroid / perspective / major share the `elements` header
  if (!cur.next()) cur.fail("missing 'elements' line");
  {
    const auto words = detail::split_words(cur.text);
    if (words.empty() || words[0] != "elements" || words.size() < 2)
      cur.fail("expected 'elements LABEL...'");
    doc.element_labels.assign(words.begin() + 1, words.end());
  }
  std::optional<ground_set> ground;
  try {
    ground.emplace(doc.element_labels);
  } catch (const std::exception& e) {
    cur.fail(e.what());
  }

  auto build = [&](bool via_bases, std::vector<subset> family) {
    return via_bases ? matroid::from_bases(*ground, family)
                     : matroid::from_circuits(*ground, family);
  };

  if (doc.kind == document_kind::perspective) {
    bool saw_m = false, saw_mprime = false;
    while (cur.next()) {
      const auto words = detail::split_words(cur.text);
      if (words.size() < 2 || (words[0] != "m" && words[0] != "mprime") ||
          (words[1] != "bases" && words[1] != "circuits"))
        cur.fail("expected 'm|mprime bases|circuits {..} ...'");
      const bool via_bases = words[1] == "bases";
      auto family = detail::parse_family(cur, *ground, detail::rest_after(cur.text, 2));
      if (words[0] == "m") {
        if (saw_m) cur.fail("duplicate 'm' line");
        saw_m = true;
        doc.m_via_bases = via_bases;
        doc.m_family = std::move(family);
      } else {
        if (saw_mprime) cur.fail("duplicate 'mprime' line");
        saw_mprime = true;
        doc.mprime_via_bases = via_bases;
        doc.mprime_family = std::move(family);
      }
    }
    if (!saw_m || !saw_mprime)
      throw std::invalid_argument("perspective document needs both 'm' and 'mprime' lines");
    doc.p = perspective::make(build(doc.m_via_bases, doc.m_family),
                              build(doc.mprime_via_bases, doc.mprime_family));
    return doc;
  }

  // matroid / major
  bool saw_family = false, saw_ports = false;
  while (cur.next()) {
    const auto words = detail::split_words(cur.text);
    if (words.empty()) continue;
    if (words[0] == "bases" || words[0] == "circuits") {
      if (saw_family) cur.fail("duplicate family line");
      saw_family = true;
      doc.via_bases = words[0] == "bases";
      doc.family = detail::parse_family(cur, *ground, detail::rest_after(cur.text, 1));
    } else if (words[0] == "ports" && doc.kind == document_kind::major) {
      if (saw_ports) cur.fail("duplicate 'ports' line");
      saw_ports = true;
      const auto lits = detail::split_set_literals(cur, detail::rest_after(cur.text, 1));
      if (lits.size() != 1) cur.fail("'ports' takes exactly one set literal");
      try {
        doc.ports = ground->parse_subset(lits[0]);
      } catch (const std::exception& e) {
        cur.fail(e.what());
      }
    } else {
      cur.fail("unexpected line '" + cur.text + "'");
    }
  }
  if (!saw_family) throw std::invalid_argument("missing 'bases' or 'circuits' line");
  doc.m = build(doc.via_bases, doc.family);
  if (doc.kind == document_kind::major) {
    if (!saw_ports) throw std::invalid_argument("major document needs a 'ports' line");
    doc.p = perspective::from_major(*doc.m, doc.ports);
  }
  return doc;
}

inline std::string serialize_document(const input_document& doc) {
  std::ostringstream os;
  os << to_string(doc.kind) << "\n";
  if (doc.kind == document_kind::graph) {
    for (const auto& v : doc.vertex_names) os << "vertex " << v << "\n";
    for (const auto& e : doc.edge_decls)
      os << "edge " << e[0] << " " << e[1] << " " << e[2] << "\n";
    return os.str();
  }
  os << "elements";
  for (const auto& l : doc.element_labels) os << " " << l;
  os << "\n";
  const ground_set ground(doc.element_labels);
  auto family_line = [&](const std::string& prefix, bool via_bases,
                         const std::vector<subset>& family) {
    os << prefix << (via_bases ? "bases" : "circuits");
    for (subset s : family) os << " " << ground.render(s);
    os << "\n";
  };
  if (doc.kind == document_kind::perspective) {
    family_line("m ", doc.m_via_bases, doc.m_family);
    family_line("mprime ", doc.mprime_via_bases, doc.mprime_family);
  } else {
    family_line("", doc.via_bases, doc.family);
    if (doc.kind == document_kind::major) os << "ports " << ground.render(doc.ports) << "\n";
  }
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace mptutte
