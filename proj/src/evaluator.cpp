#include "peonto/evaluator.hpp"

#include <algorithm>

namespace peonto {

std::string EvalError::describe(Kind kind, const std::string& name) {
  switch (kind) {
    case Kind::UnknownClass: return "unknown class: " + name;
    case Kind::UnknownProperty: return "unknown property: " + name;
    case Kind::UnknownIndividual: return "unknown individual: " + name;
  }
  return name;
}

KbIndex::KbIndex(const KnowledgeBase& kb, const ClassHierarchy& hierarchy)
    : hierarchy_(hierarchy), names_(kb.individuals.begin(), kb.individuals.end()) {
  for (std::uint32_t i = 0; i < names_.size(); ++i) ids_[names_[i]] = i;

  for (const auto& [ind, cls] : kb.class_assertions) {
    auto id_it = ids_.find(ind);
    if (id_it == ids_.end()) continue;
    std::string cur = cls;
    while (true) {
      auto [it, fresh] = class_ext_.try_emplace(cur, Bitset(names_.size()));
      (void)fresh;
      it->second.set(id_it->second);
      if (!hierarchy_.contains(cur)) break;
      const std::string& parent = hierarchy_.parent_of(cur);
      if (parent.empty()) break;
      cur = parent;
    }
  }

  for (const auto& prop : hierarchy_.object_properties())
    object_succ_.try_emplace(prop.name,
                             std::vector<std::vector<std::uint32_t>>(names_.size()));
  for (const auto& [s, p, o] : kb.object_assertions) {
    auto si = ids_.find(s);
    auto oi = ids_.find(o);
    if (si == ids_.end() || oi == ids_.end()) continue;
    auto [it, fresh] = object_succ_.try_emplace(
        p, std::vector<std::vector<std::uint32_t>>(names_.size()));
    (void)fresh;
    it->second[si->second].push_back(oi->second);
  }
  for (auto& [_, lists] : object_succ_)
    for (auto& succ : lists) {
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }

  for (const auto& prop : hierarchy_.data_properties())
    data_vals_.try_emplace(prop.name, std::vector<std::vector<Literal>>(names_.size()));
  for (const auto& [s, p, lit] : kb.data_assertions) {
    auto si = ids_.find(s);
    if (si == ids_.end()) continue;
    auto [it, fresh] =
        data_vals_.try_emplace(p, std::vector<std::vector<Literal>>(names_.size()));
    (void)fresh;
    it->second[si->second].push_back(lit);
  }
}

bool KbIndex::has_individual(const std::string& name) const {
  return ids_.count(name) != 0;
}

std::size_t KbIndex::index_of(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) throw EvalError(EvalError::Kind::UnknownIndividual, name);
  return it->second;
}

bool KbIndex::has_object_property(const std::string& property) const {
  return object_succ_.count(property) != 0;
}

bool KbIndex::has_data_property(const std::string& property) const {
  return data_vals_.count(property) != 0;
}

const std::vector<std::uint32_t>& KbIndex::successors(const std::string& property,
                                                      std::size_t individual) const {
  auto it = object_succ_.find(property);
  if (it == object_succ_.end())
    throw EvalError(EvalError::Kind::UnknownProperty, property);
  return it->second[individual];
}

std::vector<std::string> KbIndex::nominal_candidates(const std::string& property) const {
  auto it = object_succ_.find(property);
  if (it == object_succ_.end())
    throw EvalError(EvalError::Kind::UnknownProperty, property);
  Bitset seen(names_.size());
  for (const auto& succ : it->second)
    for (std::uint32_t o : succ) seen.set(o);
  std::vector<std::string> out;
  seen.for_each([&](std::size_t i) {
    if (hierarchy_.is_prototype_id(names_[i])) out.push_back(names_[i]);
  });
  return out;
}

Bitset KbIndex::evaluate(const Concept& c) const {
  const std::size_t n = names_.size();
  switch (c.kind) {
    case Concept::Kind::Top:
      return Bitset(n, true);
    case Concept::Kind::Bottom:
      return Bitset(n);
    case Concept::Kind::Named: {
      auto it = class_ext_.find(c.name);
      if (it != class_ext_.end()) return it->second;
      if (hierarchy_.contains(c.name)) return Bitset(n);
      throw EvalError(EvalError::Kind::UnknownClass, c.name);
    }
    case Concept::Kind::Not: {
      Bitset inner = evaluate(*c.children[0]);
      inner.flip();
      return inner;
    }
    case Concept::Kind::And: {
      Bitset acc = evaluate(*c.children[0]);
      for (std::size_t i = 1; i < c.children.size(); ++i)
        acc &= evaluate(*c.children[i]);
      return acc;
    }
    case Concept::Kind::Or: {
      Bitset acc = evaluate(*c.children[0]);
      for (std::size_t i = 1; i < c.children.size(); ++i)
        acc |= evaluate(*c.children[i]);
      return acc;
    }
    case Concept::Kind::Exists: {
      Bitset filler = evaluate(*c.children[0]);
      Bitset out(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::uint32_t o : successors(c.name, i))
          if (filler.test(o)) {
            out.set(i);
            break;
          }
      return out;
    }
    case Concept::Kind::ForAll: {
      Bitset filler = evaluate(*c.children[0]);
      Bitset out(n, true);
      for (std::size_t i = 0; i < n; ++i)
        for (std::uint32_t o : successors(c.name, i))
          if (!filler.test(o)) {
            out.reset(i);
            break;
          }
      return out;
    }
    case Concept::Kind::HasValue: {
      Bitset targets = mask_of(c.values);
      Bitset out(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::uint32_t o : successors(c.name, i))
          if (targets.test(o)) {
            out.set(i);
            break;
          }
      return out;
    }
    case Concept::Kind::Cardinality: {
      Bitset filler = evaluate(*c.children[0]);
      Bitset out(n);
      for (std::size_t i = 0; i < n; ++i) {
        unsigned hits = 0;
        for (std::uint32_t o : successors(c.name, i))
          if (filler.test(o)) ++hits;
        bool ok = c.card_op == CardinalityOp::AtLeast   ? hits >= c.card_n
                  : c.card_op == CardinalityOp::AtMost  ? hits <= c.card_n
                                                        : hits == c.card_n;
        if (ok) out.set(i);
      }
      return out;
    }
    case Concept::Kind::DataCompare: {
      auto it = data_vals_.find(c.name);
      if (it == data_vals_.end())
        throw EvalError(EvalError::Kind::UnknownProperty, c.name);
      Bitset out(n);
      for (std::size_t i = 0; i < n; ++i)
        for (const Literal& lit : it->second[i]) {
          if (lit.is_text()) continue;
          double v = lit.numeric();
          bool ok = c.data_op == DataOp::Less        ? v < c.data_value
                    : c.data_op == DataOp::LessEq    ? v <= c.data_value
                    : c.data_op == DataOp::Greater   ? v > c.data_value
                    : c.data_op == DataOp::GreaterEq ? v >= c.data_value
                                                     : v == c.data_value;
          if (ok) {
            out.set(i);
            break;
          }
        }
      return out;
    }
    case Concept::Kind::DataNotIn: {
      auto it = data_vals_.find(c.name);
      if (it == data_vals_.end())
        throw EvalError(EvalError::Kind::UnknownProperty, c.name);
      Bitset out(n);
      for (std::size_t i = 0; i < n; ++i)
        for (const Literal& lit : it->second[i]) {
          if (!lit.is_text()) continue;
          if (std::find(c.values.begin(), c.values.end(), lit.as_text()) ==
              c.values.end()) {
            out.set(i);
            break;
          }
        }
      return out;
    }
  }
  return Bitset(n);
}

bool KbIndex::instance_check(const Concept& c, const std::string& individual) const {
  return evaluate(c).test(index_of(individual));
}

Bitset KbIndex::mask_of(const std::vector<std::string>& names) const {
  Bitset out(names_.size());
  for (const auto& name : names) out.set(index_of(name));
  return out;
}

}  // namespace peonto
