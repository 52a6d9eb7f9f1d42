#include "peonto/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

namespace peonto {
namespace {

constexpr const char* kOwlIri = "http://www.w3.org/2002/07/owl#";
constexpr const char* kRdfIri = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr const char* kXsdIri = "http://www.w3.org/2001/XMLSchema#";

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string escape_string(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string literal_token(const Literal& lit) {
  if (lit.is_integer()) return std::to_string(lit.as_integer());
  if (lit.is_real()) return "\"" + format_double(lit.as_real()) + "\"^^xsd:double";
  return "\"" + escape_string(lit.as_text()) + "\"";
}

enum class Family { Prototype, Sample, Section, Other };

Family classify_individual(const KnowledgeBase& kb, const ClassHierarchy& hier,
                           const std::string& individual) {
  Family fam = Family::Other;
  for (const auto& cls : kb.classes_of(individual)) {
    if (!hier.contains(cls)) continue;
    if (hier.subsumes("PEFile", cls)) return Family::Sample;
    if (hier.subsumes("Section", cls)) fam = Family::Section;
    if (fam != Family::Section &&
        (hier.subsumes("FileFeature", cls) || hier.subsumes("SectionFeature", cls) ||
         hier.subsumes("SectionFlag", cls) || hier.subsumes("Action", cls)))
      fam = Family::Prototype;
  }
  return fam;
}

class Emitter {
 public:
  Emitter(const KnowledgeBase& kb, const ClassHierarchy& hier) : kb_(kb), hier_(hier) {
    for (const auto& p : hier_.data_properties()) data_order_.push_back(p.name);
    for (const auto& p : hier_.object_properties()) object_order_.push_back(p.name);
  }

  std::string run() {
    out_ << "@prefix : <" << kb_.base_iri << "> .\n";
    out_ << "@prefix owl: <" << kOwlIri << "> .\n";
    out_ << "@prefix rdf: <" << kRdfIri << "> .\n";
    out_ << "@prefix xsd: <" << kXsdIri << "> .\n";

    if (!kb_.disjoint_classes.empty()) {
      out_ << "\n";
      for (const auto& [a, b] : kb_.disjoint_classes)
        out_ << ":" << a << " owl:disjointWith :" << b << " .\n";
    }
    if (!kb_.annotations.empty()) {
      out_ << "\n";
      for (const auto& [subject, property, text] : kb_.annotations)
        out_ << ":" << subject << " :" << property << " \"" << escape_string(text)
             << "\" .\n";
    }

    std::vector<std::string> prototypes, samples, rest;
    for (const auto& ind : kb_.individuals) {
      switch (classify_individual(kb_, hier_, ind)) {
        case Family::Prototype: prototypes.push_back(ind); break;
        case Family::Sample: samples.push_back(ind); break;
        default: rest.push_back(ind); break;
      }
    }

    if (!prototypes.empty()) {
      out_ << "\n";
      for (const auto& p : prototypes) emit_individual(p);
    }
    for (const auto& s : samples) {
      emit_block(s);
      for (const auto& sec : kb_.successors(s, "has_section"))
        if (kb_.individuals.count(sec)) emit_block(sec);
    }
    for (const auto& r : rest) emit_block(r);
    return out_.str();
  }

 private:
  // Single-line form for individuals carrying nothing but type assertions.
  void emit_individual(const std::string& ind) {
    if (!emitted_.insert(ind).second) return;
    if (has_property_assertions(ind)) {
      emitted_.erase(ind);
      emit_block(ind);
      return;
    }
    out_ << ":" << ind << " rdf:type ";
    for (const auto& cls : kb_.classes_of(ind)) out_ << ":" << cls << " , ";
    out_ << "owl:NamedIndividual .\n";
  }

  bool has_property_assertions(const std::string& ind) const {
    auto oit = kb_.object_assertions.lower_bound({ind, "", ""});
    if (oit != kb_.object_assertions.end() && std::get<0>(*oit) == ind) return true;
    auto dit = kb_.data_assertions.lower_bound({ind, "", Literal::integer(0)});
    if (dit != kb_.data_assertions.end() && std::get<0>(*dit) == ind) return true;
    return false;
  }

  void emit_block(const std::string& ind) {
    if (!emitted_.insert(ind).second) return;
    std::vector<std::string> lines;

    {
      std::string types = "rdf:type ";
      for (const auto& cls : kb_.classes_of(ind)) types += ":" + cls + " , ";
      types += "owl:NamedIndividual";
      lines.push_back(std::move(types));
    }

    std::map<std::string, std::vector<Literal>> data;
    for (auto it = kb_.data_assertions.lower_bound({ind, "", Literal::integer(0)});
         it != kb_.data_assertions.end() && std::get<0>(*it) == ind; ++it)
      data[std::get<1>(*it)].push_back(std::get<2>(*it));
    for_properties_in_order(data_order_, data, [&](const std::string& prop,
                                                   const std::vector<Literal>& values) {
      std::string line = ":" + prop + " ";
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line += " , ";
        line += literal_token(values[i]);
      }
      lines.push_back(std::move(line));
    });

    std::map<std::string, std::vector<std::string>> objects;
    for (auto it = kb_.object_assertions.lower_bound({ind, "", ""});
         it != kb_.object_assertions.end() && std::get<0>(*it) == ind; ++it)
      objects[std::get<1>(*it)].push_back(std::get<2>(*it));
    for_properties_in_order(object_order_, objects,
                            [&](const std::string& prop,
                                const std::vector<std::string>& values) {
      std::string line = ":" + prop + " ";
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line += " , ";
        line += ":" + values[i];
      }
      lines.push_back(std::move(line));
    });

    out_ << "\n:" << ind << "\n";
    for (std::size_t i = 0; i < lines.size(); ++i)
      out_ << "    " << lines[i] << (i + 1 == lines.size() ? " .\n" : " ;\n");
  }

  // Declared properties first in declaration order, then any others sorted.
  template <typename V, typename Fn>
  void for_properties_in_order(const std::vector<std::string>& order,
                               const std::map<std::string, V>& groups, Fn&& fn) const {
    for (const auto& prop : order) {
      auto it = groups.find(prop);
      if (it != groups.end()) fn(prop, it->second);
    }
    for (const auto& [prop, values] : groups) {
      if (std::find(order.begin(), order.end(), prop) == order.end()) fn(prop, values);
    }
  }

  const KnowledgeBase& kb_;
  const ClassHierarchy& hier_;
  std::vector<std::string> data_order_;
  std::vector<std::string> object_order_;
  std::set<std::string> emitted_;
  std::ostringstream out_;
};

struct Token {
  enum class Type {
    PrefixDirective,  // @prefix
    Iri,              // <...>
    Name,             // prefix:local or 'a'
    String,           // "..."
    Integer,
    TypeMarker,  // ^^
    Dot,
    Semicolon,
    Comma,
    End,
  };
  Type type = Type::End;
  std::string text;       // name: "prefix:local", iri: inner text, string: unescaped
  std::int64_t integer = 0;
  std::size_t line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) {
      t.type = Token::Type::End;
      return t;
    }
    char c = text_[pos_];
    if (c == '.') { advance(); t.type = Token::Type::Dot; return t; }
    if (c == ';') { advance(); t.type = Token::Type::Semicolon; return t; }
    if (c == ',') { advance(); t.type = Token::Type::Comma; return t; }
    if (c == '^') {
      if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '^')
        fail(t, "expected '^^'");
      advance();
      advance();
      t.type = Token::Type::TypeMarker;
      return t;
    }
    if (c == '<') return lex_iri(t);
    if (c == '"') return lex_string(t);
    if (c == '@') return lex_directive(t);
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c)))
      return lex_integer(t);
    return lex_name(t);
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw TurtleError(TurtleError::Kind::Syntax, t.line, t.column, msg);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token lex_iri(Token t) {
    advance();  // '<'
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '>') {
      out.push_back(text_[pos_]);
      advance();
    }
    if (pos_ >= text_.size()) fail(t, "unterminated IRI");
    advance();  // '>'
    t.type = Token::Type::Iri;
    t.text = std::move(out);
    return t;
  }

  Token lex_string(Token t) {
    advance();  // '"'
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      char c = text_[pos_];
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size()) fail(t, "unterminated escape");
        switch (text_[pos_]) {
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case 't': out.push_back('\t'); break;
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          default: fail(t, "unsupported escape sequence");
        }
        advance();
      } else {
        out.push_back(c);
        advance();
      }
    }
    if (pos_ >= text_.size()) fail(t, "unterminated string literal");
    advance();  // '"'
    t.type = Token::Type::String;
    t.text = std::move(out);
    return t;
  }

  Token lex_directive(Token t) {
    std::string word;
    advance();  // '@'
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      word.push_back(text_[pos_]);
      advance();
    }
    if (word != "prefix") fail(t, "unsupported directive @" + word);
    t.type = Token::Type::PrefixDirective;
    return t;
  }

  Token lex_integer(Token t) {
    std::string digits;
    if (text_[pos_] == '-' || text_[pos_] == '+') {
      digits.push_back(text_[pos_]);
      advance();
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_]);
      advance();
    }
    if (digits.empty() || digits == "-" || digits == "+") fail(t, "bad integer");
    t.type = Token::Type::Integer;
    t.integer = std::strtoll(digits.c_str(), nullptr, 10);
    return t;
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           c == ':';
  }

  Token lex_name(Token t) {
    std::string out;
    while (pos_ < text_.size() && name_char(text_[pos_])) {
      out.push_back(text_[pos_]);
      advance();
    }
    if (out.empty()) fail(t, std::string("unexpected character '") + text_[pos_] + "'");
    t.type = Token::Type::Name;
    t.text = std::move(out);
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const ClassHierarchy& hier)
      : lexer_(text), hier_(hier) {
    advance();
  }

  KnowledgeBase run() {
    while (cur_.type != Token::Type::End) {
      if (cur_.type == Token::Type::PrefixDirective) {
        parse_prefix();
      } else {
        parse_statement();
      }
    }
    if (auto it = prefixes_.find(""); it != prefixes_.end()) kb_.base_iri = it->second;
    return std::move(kb_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw TurtleError(TurtleError::Kind::Syntax, cur_.line, cur_.column, msg);
  }

  void advance() { cur_ = lexer_.next(); }

  void expect(Token::Type type, const char* what) {
    if (cur_.type != type) fail(std::string("expected ") + what);
    advance();
  }

  void parse_prefix() {
    advance();  // @prefix
    if (cur_.type != Token::Type::Name || cur_.text.back() != ':')
      fail("expected prefix name");
    std::string prefix = cur_.text.substr(0, cur_.text.size() - 1);
    advance();
    if (cur_.type != Token::Type::Iri) fail("expected IRI");
    prefixes_[prefix] = cur_.text;
    advance();
    expect(Token::Type::Dot, "'.'");
  }

  // A resolved name: either a local name in the default namespace or a
  // well-known term (rdf:type, owl:NamedIndividual, owl:disjointWith, xsd:*).
  struct Resolved {
    std::string ns;
    std::string local;
  };

  Resolved resolve(const Token& tok) const {
    if (tok.text == "a") return {kRdfIri, "type"};
    auto colon = tok.text.find(':');
    if (colon == std::string::npos)
      throw TurtleError(TurtleError::Kind::Syntax, tok.line, tok.column,
                        "expected prefixed name");
    std::string prefix = tok.text.substr(0, colon);
    std::string local = tok.text.substr(colon + 1);
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end())
      throw TurtleError(TurtleError::Kind::UnknownPrefix, tok.line, tok.column,
                        "unknown prefix '" + prefix + ":'");
    return {it->second, local};
  }

  bool is_default_ns(const Resolved& r) const {
    auto it = prefixes_.find("");
    return it != prefixes_.end() && it->second == r.ns;
  }

  void parse_statement() {
    if (cur_.type != Token::Type::Name) fail("expected subject");
    Resolved subject = resolve(cur_);
    if (!is_default_ns(subject)) fail("subject outside default namespace");
    advance();

    while (true) {
      if (cur_.type != Token::Type::Name) fail("expected predicate");
      Resolved predicate = resolve(cur_);
      advance();
      parse_objects(subject.local, predicate);
      if (cur_.type == Token::Type::Semicolon) {
        advance();
        continue;
      }
      expect(Token::Type::Dot, "'.' or ';'");
      break;
    }
  }

  void parse_objects(const std::string& subject, const Resolved& predicate) {
    while (true) {
      parse_one_object(subject, predicate);
      if (cur_.type == Token::Type::Comma) {
        advance();
        continue;
      }
      break;
    }
  }

  void parse_one_object(const std::string& subject, const Resolved& predicate) {
    bool pred_is_type = predicate.ns == kRdfIri && predicate.local == "type";
    bool pred_is_disjoint =
        predicate.ns == kOwlIri && predicate.local == "disjointWith";

    if (cur_.type == Token::Type::Integer) {
      record_literal(subject, predicate, Literal::integer(cur_.integer));
      advance();
      return;
    }
    if (cur_.type == Token::Type::String) {
      std::string text = cur_.text;
      advance();
      if (cur_.type == Token::Type::TypeMarker) {
        advance();
        if (cur_.type != Token::Type::Name) fail("expected datatype");
        Resolved dt = resolve(cur_);
        advance();
        record_literal(subject, predicate, typed_literal(text, dt));
      } else {
        record_literal(subject, predicate, Literal::text(text));
      }
      return;
    }
    if (cur_.type != Token::Type::Name) fail("expected object");
    Resolved object = resolve(cur_);
    advance();

    if (pred_is_type) {
      if (object.ns == kOwlIri && object.local == "NamedIndividual") {
        kb_.individuals.insert(subject);
        return;
      }
      if (!is_default_ns(object)) fail("type outside default namespace");
      kb_.individuals.insert(subject);
      kb_.class_assertions.insert({subject, object.local});
      return;
    }
    if (pred_is_disjoint) {
      if (!is_default_ns(object)) fail("disjoint class outside default namespace");
      std::string a = subject, b = object.local;
      if (b < a) std::swap(a, b);
      kb_.disjoint_classes.insert({a, b});
      return;
    }
    if (!is_default_ns(predicate)) fail("unsupported predicate namespace");
    if (!is_default_ns(object)) fail("object outside default namespace");
    kb_.individuals.insert(subject);
    kb_.individuals.insert(object.local);
    kb_.object_assertions.insert({subject, predicate.local, object.local});
  }

  Literal typed_literal(const std::string& text, const Resolved& dt) const {
    if (dt.ns != std::string(kXsdIri)) fail("unsupported datatype namespace");
    if (dt.local == "double" || dt.local == "float") {
      char* end = nullptr;
      double v = std::strtod(text.c_str(), &end);
      if (end == text.c_str()) fail("bad double literal");
      return Literal::real(v);
    }
    if (dt.local == "integer" || dt.local == "int" || dt.local == "long")
      return Literal::integer(std::strtoll(text.c_str(), nullptr, 10));
    if (dt.local == "string") return Literal::text(text);
    fail("unsupported datatype xsd:" + dt.local);
  }

  void record_literal(const std::string& subject, const Resolved& predicate,
                      Literal lit) {
    if (!is_default_ns(predicate)) fail("unsupported predicate namespace");
    if (hier_.is_data_property(predicate.local)) {
      kb_.individuals.insert(subject);
      kb_.data_assertions.insert({subject, predicate.local, std::move(lit)});
      return;
    }
    // Anything else with a literal object is an annotation; keep lexical form.
    std::string text;
    if (lit.is_text())
      text = lit.as_text();
    else if (lit.is_integer())
      text = std::to_string(lit.as_integer());
    else
      text = format_double(lit.as_real());
    kb_.annotations.insert({subject, predicate.local, std::move(text)});
  }

  Lexer lexer_;
  Token cur_;
  const ClassHierarchy& hier_;
  KnowledgeBase kb_;
  std::map<std::string, std::string> prefixes_;
};

}  // namespace

std::string emit_turtle(const KnowledgeBase& kb, const ClassHierarchy& hierarchy) {
  return Emitter(kb, hierarchy).run();
}

KnowledgeBase parse_turtle(std::string_view text, const ClassHierarchy& hierarchy) {
  return Parser(text, hierarchy).run();
}

}  // namespace peonto
