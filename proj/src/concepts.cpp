#include "peonto/concepts.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace peonto {
namespace {

ConceptPtr make(Concept&& c) { return std::make_shared<const Concept>(std::move(c)); }

bool atomic(const Concept& c) {
  return c.kind == Concept::Kind::Top || c.kind == Concept::Kind::Bottom ||
         c.kind == Concept::Kind::Named;
}

std::string wrap(const ConceptPtr& c) {
  std::string r = render_concept(*c);
  return atomic(*c) ? r : "(" + r + ")";
}

std::string format_number(double v, bool integer_bound) {
  if (integer_bound) return std::to_string(static_cast<long long>(v));
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

const char* data_op_text(DataOp op) {
  switch (op) {
    case DataOp::Less: return "<";
    case DataOp::LessEq: return "<=";
    case DataOp::Greater: return ">";
    case DataOp::GreaterEq: return ">=";
    case DataOp::Equal: return "=";
  }
  return "?";
}

}  // namespace

ConceptPtr Concept::top() {
  static const ConceptPtr t = [] {
    Concept c;
    c.kind = Kind::Top;
    return make(std::move(c));
  }();
  return t;
}

ConceptPtr Concept::bottom() {
  static const ConceptPtr b = [] {
    Concept c;
    c.kind = Kind::Bottom;
    return make(std::move(c));
  }();
  return b;
}

ConceptPtr Concept::named(std::string cls) {
  Concept c;
  c.kind = Kind::Named;
  c.name = std::move(cls);
  return make(std::move(c));
}

ConceptPtr Concept::negation(ConceptPtr inner) {
  Concept c;
  c.kind = Kind::Not;
  c.children = {std::move(inner)};
  return make(std::move(c));
}

namespace {

ConceptPtr nary(Concept::Kind kind, std::vector<ConceptPtr> members) {
  // Flatten nested nodes of the same kind, drop identity elements, dedupe by
  // rendered form, sort for canonical order.
  std::vector<ConceptPtr> flat;
  for (auto& m : members) {
    if (m->kind == kind) {
      for (const auto& sub : m->children) flat.push_back(sub);
    } else {
      flat.push_back(std::move(m));
    }
  }
  const Concept::Kind identity_kind =
      kind == Concept::Kind::And ? Concept::Kind::Top : Concept::Kind::Bottom;
  std::erase_if(flat, [&](const ConceptPtr& m) { return m->kind == identity_kind; });

  std::map<std::string, ConceptPtr> unique;
  for (auto& m : flat) unique.emplace(render_concept(*m), m);

  if (unique.empty())
    return kind == Concept::Kind::And ? Concept::top() : Concept::bottom();
  if (unique.size() == 1) return unique.begin()->second;

  Concept c;
  c.kind = kind;
  for (auto& [_, m] : unique) c.children.push_back(m);
  return make(std::move(c));
}

}  // namespace

ConceptPtr Concept::intersection(std::vector<ConceptPtr> members) {
  return nary(Kind::And, std::move(members));
}

ConceptPtr Concept::union_of(std::vector<ConceptPtr> members) {
  return nary(Kind::Or, std::move(members));
}

ConceptPtr Concept::exists(std::string property, ConceptPtr filler) {
  Concept c;
  c.kind = Kind::Exists;
  c.name = std::move(property);
  c.children = {std::move(filler)};
  return make(std::move(c));
}

ConceptPtr Concept::for_all(std::string property, ConceptPtr filler) {
  Concept c;
  c.kind = Kind::ForAll;
  c.name = std::move(property);
  c.children = {std::move(filler)};
  return make(std::move(c));
}

ConceptPtr Concept::has_value(std::string property, std::vector<std::string> individuals) {
  Concept c;
  c.kind = Kind::HasValue;
  c.name = std::move(property);
  std::sort(individuals.begin(), individuals.end());
  individuals.erase(std::unique(individuals.begin(), individuals.end()),
                    individuals.end());
  c.values = std::move(individuals);
  return make(std::move(c));
}

ConceptPtr Concept::cardinality(CardinalityOp op, unsigned n, std::string property,
                                ConceptPtr filler) {
  Concept c;
  c.kind = Kind::Cardinality;
  c.name = std::move(property);
  c.card_op = op;
  c.card_n = n;
  c.children = {std::move(filler)};
  return make(std::move(c));
}

ConceptPtr Concept::data_compare(std::string property, DataOp op, double value,
                                 bool integer_bound) {
  Concept c;
  c.kind = Kind::DataCompare;
  c.name = std::move(property);
  c.data_op = op;
  c.data_value = value;
  c.data_integer = integer_bound;
  return make(std::move(c));
}

ConceptPtr Concept::data_not_in(std::string property, std::vector<std::string> strings) {
  Concept c;
  c.kind = Kind::DataNotIn;
  c.name = std::move(property);
  std::sort(strings.begin(), strings.end());
  strings.erase(std::unique(strings.begin(), strings.end()), strings.end());
  c.values = std::move(strings);
  return make(std::move(c));
}

int concept_length(const Concept& c) {
  switch (c.kind) {
    case Concept::Kind::Top:
    case Concept::Kind::Bottom:
    case Concept::Kind::Named:
      return 1;
    case Concept::Kind::Not:
      return 1 + concept_length(*c.children[0]);
    case Concept::Kind::And:
    case Concept::Kind::Or: {
      int total = static_cast<int>(c.children.size()) - 1;
      for (const auto& m : c.children) total += concept_length(*m);
      return total;
    }
    case Concept::Kind::Exists:
    case Concept::Kind::ForAll:
    case Concept::Kind::Cardinality:
      return 2 + concept_length(*c.children[0]);
    case Concept::Kind::HasValue:
      return 2 + static_cast<int>(c.values.size());
    case Concept::Kind::DataCompare:
      return 3;
    case Concept::Kind::DataNotIn:
      return 2 + static_cast<int>(c.values.size());
  }
  return 1;
}

std::string render_concept(const Concept& c) {
  switch (c.kind) {
    case Concept::Kind::Top: return "Thing";
    case Concept::Kind::Bottom: return "Nothing";
    case Concept::Kind::Named: return c.name;
    case Concept::Kind::Not: return "not " + wrap(c.children[0]);
    case Concept::Kind::And:
    case Concept::Kind::Or: {
      const char* joiner = c.kind == Concept::Kind::And ? " and " : " or ";
      std::string out;
      for (std::size_t i = 0; i < c.children.size(); ++i) {
        if (i) out += joiner;
        out += wrap(c.children[i]);
      }
      return out;
    }
    case Concept::Kind::Exists: return c.name + " some " + wrap(c.children[0]);
    case Concept::Kind::ForAll: return c.name + " only " + wrap(c.children[0]);
    case Concept::Kind::HasValue: {
      if (c.values.size() == 1) return c.name + " value " + c.values[0];
      std::string out = c.name + " some {";
      for (std::size_t i = 0; i < c.values.size(); ++i) {
        if (i) out += ", ";
        out += c.values[i];
      }
      return out + "}";
    }
    case Concept::Kind::Cardinality: {
      const char* word = c.card_op == CardinalityOp::AtLeast ? "min"
                         : c.card_op == CardinalityOp::AtMost ? "max"
                                                              : "exactly";
      return c.name + " " + word + " " + std::to_string(c.card_n) + " " +
             wrap(c.children[0]);
    }
    case Concept::Kind::DataCompare:
      return c.name + " some " + (c.data_integer ? "xsd:integer" : "xsd:double") + "[" +
             data_op_text(c.data_op) + " " + format_number(c.data_value, c.data_integer) +
             "]";
    case Concept::Kind::DataNotIn: {
      std::string out = c.name + " some not {";
      for (std::size_t i = 0; i < c.values.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + c.values[i] + "\"";
      }
      return out + "}";
    }
  }
  return "";
}

namespace {

class ConceptParser {
 public:
  explicit ConceptParser(std::string_view text) : text_(text) {}

  ConceptPtr run() {
    ConceptPtr c = parse_union();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ConceptParseError(pos_, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           c == ':';
  }

  std::string peek_word() {
    skip_ws();
    std::size_t p = pos_;
    std::string out;
    while (p < text_.size() && name_char(text_[p])) out.push_back(text_[p++]);
    return out;
  }

  std::string take_word() {
    std::string w = peek_word();
    if (w.empty()) fail("expected name");
    pos_ += w.size();
    return w;
  }

  bool eat_word(const char* w) {
    if (peek_word() == w) {
      pos_ += std::string(w).size();
      return true;
    }
    return false;
  }

  unsigned take_unsigned() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected number");
    return static_cast<unsigned>(
        std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  std::string take_quoted() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected string");
    ++pos_;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') out.push_back(text_[pos_++]);
    if (pos_ >= text_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  ConceptPtr parse_union() {
    std::vector<ConceptPtr> members = {parse_intersection()};
    while (eat_word("or")) members.push_back(parse_intersection());
    return members.size() == 1 ? members[0] : Concept::union_of(std::move(members));
  }

  ConceptPtr parse_intersection() {
    std::vector<ConceptPtr> members = {parse_unary()};
    while (eat_word("and")) members.push_back(parse_unary());
    return members.size() == 1 ? members[0]
                               : Concept::intersection(std::move(members));
  }

  ConceptPtr parse_unary() {
    if (eat_word("not")) return Concept::negation(parse_unary());
    return parse_primary();
  }

  ConceptPtr parse_primary() {
    skip_ws();
    if (eat('(')) {
      ConceptPtr c = parse_union();
      expect(')');
      return c;
    }
    std::string word = take_word();
    if (word == "Thing") return Concept::top();
    if (word == "Nothing") return Concept::bottom();

    std::string follow = peek_word();
    if (follow == "some") return parse_some(word);
    if (follow == "only") {
      take_word();
      return Concept::for_all(word, parse_unary());
    }
    if (follow == "value") {
      take_word();
      return Concept::has_value(word, {take_word()});
    }
    if (follow == "min" || follow == "max" || follow == "exactly") {
      take_word();
      CardinalityOp op = follow == "min"   ? CardinalityOp::AtLeast
                         : follow == "max" ? CardinalityOp::AtMost
                                           : CardinalityOp::Exactly;
      unsigned n = take_unsigned();
      return Concept::cardinality(op, n, word, parse_unary());
    }
    return Concept::named(word);
  }

  ConceptPtr parse_some(const std::string& property) {
    take_word();  // some
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '{') return parse_individual_set(property);

    std::string word = peek_word();
    if (word == "xsd:integer" || word == "xsd:double") {
      take_word();
      expect('[');
      DataOp op = parse_data_op();
      double value = take_number();
      expect(']');
      return Concept::data_compare(property, op, value, word == "xsd:integer");
    }
    if (word == "not") {
      std::size_t save = pos_;
      take_word();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '{') {
        expect('{');
        std::vector<std::string> strings = {take_quoted()};
        while (eat(',')) strings.push_back(take_quoted());
        expect('}');
        return Concept::data_not_in(property, std::move(strings));
      }
      pos_ = save;  // plain negated filler
    }
    return Concept::exists(property, parse_unary());
  }

  ConceptPtr parse_individual_set(const std::string& property) {
    expect('{');
    std::vector<std::string> names = {take_word()};
    while (eat(',')) names.push_back(take_word());
    expect('}');
    return Concept::has_value(property, std::move(names));
  }

  DataOp parse_data_op() {
    skip_ws();
    if (eat('<')) return eat('=') ? DataOp::LessEq : DataOp::Less;
    if (eat('>')) return eat('=') ? DataOp::GreaterEq : DataOp::Greater;
    if (eat('=')) return DataOp::Equal;
    fail("expected comparison operator");
  }

  double take_number() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
            text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    if (pos_ == start) fail("expected number");
    return std::stod(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ConceptPtr parse_concept(std::string_view text) { return ConceptParser(text).run(); }

}  // namespace peonto
