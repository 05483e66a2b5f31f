#include "bw/quiver.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bw {

int Quiver::require_vertex(const std::string& name) const {
  auto it = vertex_id.find(name);
  require(it != vertex_id.end(), Errc::invalid_input, "unknown vertex '" + name + "'");
  return it->second;
}

int Quiver::require_arrow(const std::string& label) const {
  auto it = arrow_id.find(label);
  require(it != arrow_id.end(), Errc::invalid_input, "unknown arrow '" + label + "'");
  return it->second;
}

void Quiver::add_vertex(const std::string& name) {
  require(!vertex_id.count(name), Errc::invalid_input, "duplicate vertex '" + name + "'");
  vertex_id[name] = n_vertices();
  vertices.push_back(name);
}

void Quiver::add_arrow(const std::string& label, int src, int tgt) {
  require(!arrow_id.count(label), Errc::invalid_input, "duplicate arrow '" + label + "'");
  arrow_id[label] = n_arrows();
  arrows.push_back({label, src, tgt});
}

std::string Path::to_string(const Quiver& Q) const {
  if (arrows.empty()) return "e_" + Q.vertices[src];
  std::string out;
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += Q.arrows[*it].label;
  }
  return out;
}

std::string Path::key() const {
  std::string k = std::to_string(src);
  for (int a : arrows) {
    k += '.';
    k += std::to_string(a);
  }
  return k;
}

Path compose(const Quiver& Q, const Path& q, const Path& p) {
  require(p.target(Q) == q.src, Errc::internal, "non-composable paths");
  Path out = p;
  out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
  return out;
}

Path trivial_path(int vertex) {
  Path p;
  p.src = vertex;
  return p;
}

Path arrow_path(const Quiver& Q, int arrow) {
  Path p;
  p.src = Q.arrows[arrow].src;
  p.arrows = {arrow};
  return p;
}

Path parse_path(const Quiver& Q, const std::string& text) {
  std::vector<std::string> labels;
  std::string cur;
  for (char c : text) {
    if (c == '.') {
      require(!cur.empty(), Errc::invalid_input, "empty arrow label in path '" + text + "'");
      labels.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  require(!cur.empty(), Errc::invalid_input, "empty arrow label in path '" + text + "'");
  labels.push_back(cur);
  Path p;
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    int a = Q.require_arrow(*it);
    if (p.arrows.empty()) {
      p.src = Q.arrows[a].src;
    } else {
      require(Q.arrows[a].src == Q.arrows[p.arrows.back()].tgt, Errc::invalid_input,
              "path '" + text + "' is not composable at '" + *it + "'");
    }
    p.arrows.push_back(a);
  }
  return p;
}

bool is_subpath(const Path& needle, const Path& hay) {
  if (needle.arrows.empty() || needle.arrows.size() > hay.arrows.size()) return false;
  for (std::size_t off = 0; off + needle.arrows.size() <= hay.arrows.size(); ++off) {
    bool hit = true;
    for (std::size_t i = 0; i < needle.arrows.size(); ++i)
      if (hay.arrows[off + i] != needle.arrows[i]) {
        hit = false;
        break;
      }
    if (hit) return true;
  }
  return false;
}

int Relation::src(const Quiver&) const {
  require(!terms.empty(), Errc::internal, "empty relation");
  return terms[0].path.src;
}

int Relation::tgt(const Quiver& Q) const {
  require(!terms.empty(), Errc::internal, "empty relation");
  return terms[0].path.target(Q);
}

std::string Relation::to_string(const Quiver& Q, const Field& F) const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Value& c = terms[i].coeff;
    bool neg = F.is_negative(c);
    Value a = neg ? F.neg(c) : c;
    std::string body = terms[i].path.to_string(Q);
    std::string piece = F.is_one(a) ? body : F.to_string(a) + "*" + body;
    if (i == 0)
      out = (neg ? "-" : "") + piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

std::string Presentation::canonical_text() const {
  std::ostringstream out;
  out << "field: " << field.to_string() << "\n";
  out << "vertices:";
  for (const auto& v : quiver.vertices) out << ' ' << v;
  out << "\n";
  for (const auto& a : quiver.arrows)
    out << "arrow " << a.label << ": " << quiver.vertices[a.src] << " -> "
        << quiver.vertices[a.tgt] << "\n";
  for (const auto& r : relations) out << "rel: " << r.to_string(quiver, field) << "\n";
  return out.str();
}

namespace {

struct LineScanner {
  const std::string& s;
  int lineno;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& msg, std::size_t at) const {
    fail(Errc::invalid_input,
         "line " + std::to_string(lineno) + ", col " + std::to_string(at + 1) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  void expect(char c, const std::string& what) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) err("expected '" + std::string(1, c) + "' " + what, pos);
    ++pos;
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  std::string ident(const std::string& what) {
    skip_ws();
    std::size_t b = pos;
    while (pos < s.size() && ident_char(s[pos])) ++pos;
    if (pos == b) err("expected " + what, b);
    return s.substr(b, pos - b);
  }
  /* Unsigned integer or integer/integer. */
  std::string number() {
    skip_ws();
    std::size_t b = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    return s.substr(b, pos - b);
  }
  bool starts_number() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
};

/* A dotted path token possibly prefixed by "coeff*". */
RelationTerm parse_term(LineScanner& sc, const Quiver& Q, const Field& F, bool negate) {
  Value coeff = F.one();
  sc.skip_ws();
  std::size_t save = sc.pos;
  if (sc.starts_number()) {
    std::string num = sc.number();
    if (sc.eat('*')) {
      coeff = F.parse_scalar(num);
    } else {
      /* Digits-only arrow labels exist, so back off and reparse as a path. */
      sc.pos = save;
    }
  }
  sc.skip_ws();
  std::size_t path_begin = sc.pos;
  std::string word = sc.ident("arrow label");
  while (sc.pos < sc.s.size() && sc.s[sc.pos] == '.') {
    ++sc.pos;
    word += "." + sc.ident("arrow label after '.'");
  }
  Path p;
  try {
    p = parse_path(Q, word);
  } catch (const Error& e) {
    sc.err(e.what(), path_begin);
  }
  if (negate) coeff = F.neg(coeff);
  return {coeff, p};
}

Relation parse_relation(LineScanner& sc, const Quiver& Q, const Field& F) {
  Relation rel;
  bool neg_first = sc.eat('-');
  rel.terms.push_back(parse_term(sc, Q, F, neg_first));
  while (!sc.done()) {
    std::size_t at = sc.pos;
    bool neg;
    if (sc.eat('+'))
      neg = false;
    else if (sc.eat('-'))
      neg = true;
    else
      sc.err("expected '+' or '-' between relation terms", at);
    rel.terms.push_back(parse_term(sc, Q, F, neg));
  }
  /* Merge repeated paths, drop vanished terms. */
  std::vector<RelationTerm> merged;
  for (const auto& t : rel.terms) {
    bool found = false;
    for (auto& m : merged)
      if (m.path == t.path) {
        m.coeff = F.add(m.coeff, t.coeff);
        found = true;
        break;
      }
    if (!found) merged.push_back(t);
  }
  std::vector<RelationTerm> live;
  for (auto& t : merged)
    if (!F.is_zero(t.coeff)) live.push_back(t);
  rel.terms = live;
  if (rel.terms.empty()) sc.err("relation vanishes over " + F.to_string(), 0);
  for (const auto& t : rel.terms) {
    if (t.path.length() < 2)
      sc.err("relation term '" + t.path.to_string(Q) + "' has length < 2", 0);
    if (t.path.src != rel.terms[0].path.src || t.path.target(Q) != rel.terms[0].path.target(Q))
      sc.err("relation terms are not parallel paths", 0);
  }
  return rel;
}

}  // namespace

Relation parse_relation_expr(const Quiver& Q, const Field& F, const std::string& text) {
  LineScanner sc{text, 1};
  require(!sc.done(), Errc::invalid_input, "empty relation expression");
  return parse_relation(sc, Q, F);
}

Presentation parse_presentation(const std::string& text, std::optional<Field> field_override) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) lines.push_back(l);
  }
  auto strip_comment = [](std::string l) {
    std::size_t h = l.find('#');
    if (h != std::string::npos) l.resize(h);
    return l;
  };

  Presentation P;
  bool field_seen = false;
  /* The field has to be known before relation coefficients are parsed. */
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string l = trim(strip_comment(lines[i]));
    if (l.rfind("field:", 0) == 0) {
      require(!field_seen, Errc::invalid_input,
              "line " + std::to_string(i + 1) + ": duplicate field line");
      field_seen = true;
      try {
        P.field = Field::parse(trim(l.substr(6)));
      } catch (const Error& e) {
        fail(Errc::invalid_input, "line " + std::to_string(i + 1) + ": " + e.what());
      }
    }
  }
  if (field_override) P.field = *field_override;

  bool vertices_seen = false;
  std::vector<std::pair<int, std::string>> rel_lines;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string l = trim(strip_comment(lines[i]));
    if (l.empty() || l.rfind("field:", 0) == 0) continue;
    LineScanner sc{l, static_cast<int>(i + 1)};
    if (l.rfind("vertices:", 0) == 0) {
      if (vertices_seen) sc.err("duplicate vertices line", 0);
      vertices_seen = true;
      sc.pos = 9;
      while (!sc.done()) P.quiver.add_vertex(sc.ident("vertex name"));
      require(P.quiver.n_vertices() > 0, Errc::invalid_input,
              "line " + std::to_string(i + 1) + ": no vertices declared");
    } else if (l.rfind("arrow", 0) == 0 && l.size() > 5 && std::isspace((unsigned char)l[5])) {
      if (!vertices_seen) sc.err("arrow declared before vertices", 0);
      sc.pos = 5;
      std::string label = sc.ident("arrow label");
      sc.expect(':', "after arrow label");
      std::string sv = sc.ident("source vertex");
      sc.expect('-', "in '->'");
      sc.expect('>', "in '->'");
      std::string tv = sc.ident("target vertex");
      if (!sc.done()) sc.err("trailing junk after arrow declaration", sc.pos);
      try {
        P.quiver.add_arrow(label, P.quiver.require_vertex(sv), P.quiver.require_vertex(tv));
      } catch (const Error& e) {
        sc.err(e.what(), 0);
      }
    } else if (l.rfind("rel:", 0) == 0) {
      if (!vertices_seen) sc.err("relation declared before vertices", 0);
      rel_lines.emplace_back(static_cast<int>(i + 1), l.substr(4));
    } else {
      sc.err("unrecognized line (expected field:/vertices:/arrow/rel:)", 0);
    }
  }
  require(vertices_seen, Errc::invalid_input, "presentation has no vertices line");

  for (auto& [ln, body] : rel_lines) {
    LineScanner sc{body, ln};
    P.relations.push_back(parse_relation(sc, P.quiver, P.field));
  }
  return P;
}

Presentation parse_presentation_file(const std::string& path, std::optional<Field> field_override) {
  std::ifstream in(path);
  require(in.good(), Errc::usage, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str(), field_override);
}

}  // namespace bw
