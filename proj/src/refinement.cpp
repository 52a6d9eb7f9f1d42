#include "peonto/refinement.hpp"

#include <algorithm>
#include <set>

namespace peonto {
namespace {

// Range context entered when refining a restriction filler.
std::string range_of(const ClassHierarchy& h, const std::string& property) {
  const auto* prop = h.find_object_property(property);
  return prop ? prop->range : std::string();
}

}  // namespace

RefinementOperator::RefinementOperator(const KbIndex& index, RefinementConfig config,
                                       std::string domain)
    : index_(index), config_(config), domain_(std::move(domain)) {}

std::vector<std::string> RefinementOperator::applicable_properties(
    const std::string& ctx) const {
  std::vector<std::string> out;
  for (const auto& prop : index_.hierarchy().object_properties()) {
    if (ctx.empty() || index_.hierarchy().subsumes(prop.domain, ctx) ||
        index_.hierarchy().subsumes(ctx, prop.domain))
      out.push_back(prop.name);
  }
  return out;
}

std::vector<std::string> RefinementOperator::leaves_below(const std::string& cls) const {
  const ClassHierarchy& h = index_.hierarchy();
  std::vector<std::string> leaves;
  std::vector<std::string> stack;
  if (cls.empty())
    stack = h.roots();
  else if (h.contains(cls))
    stack.push_back(cls);
  while (!stack.empty()) {
    std::string cur = stack.back();
    stack.pop_back();
    const auto& kids = h.children_of(cur);
    if (kids.empty()) {
      if (cur != cls) leaves.push_back(cur);
      continue;
    }
    for (const auto& k : kids) stack.push_back(k);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

const std::vector<std::string>& RefinementOperator::nominals(
    const std::string& property) const {
  auto it = nominal_cache_.find(property);
  if (it == nominal_cache_.end())
    it = nominal_cache_.emplace(property, index_.nominal_candidates(property)).first;
  return it->second;
}

const std::vector<ConceptPtr>& RefinementOperator::atoms(const std::string& ctx) const {
  auto it = atom_cache_.find(ctx);
  if (it != atom_cache_.end()) return it->second;

  const ClassHierarchy& h = index_.hierarchy();
  std::vector<ConceptPtr> out;

  std::vector<std::string> tops;
  if (ctx.empty())
    tops = h.roots();
  else if (h.contains(ctx))
    tops = h.children_of(ctx);

  for (const auto& cls : tops) out.push_back(Concept::named(cls));
  if (config_.use_union) {
    for (std::size_t i = 0; i < tops.size(); ++i)
      for (std::size_t j = i + 1; j < tops.size(); ++j)
        out.push_back(Concept::union_of(
            {Concept::named(tops[i]), Concept::named(tops[j])}));
  }

  for (const auto& prop : applicable_properties(ctx)) {
    out.push_back(Concept::exists(prop, Concept::top()));
    if (config_.cardinality_limit >= 2)
      out.push_back(
          Concept::cardinality(CardinalityOp::AtLeast, 2, prop, Concept::top()));
  }

  if (config_.use_negation)
    for (const auto& leaf : leaves_below(ctx))
      out.push_back(Concept::negation(Concept::named(leaf)));

  return atom_cache_.emplace(ctx, std::move(out)).first->second;
}

void RefinementOperator::add_conjuncts(const ConceptPtr& c, const std::string& ctx,
                                       std::vector<ConceptPtr>& out) const {
  std::string base = render_concept(*c);
  for (const auto& atom : atoms(ctx)) {
    ConceptPtr combined = Concept::intersection({c, atom});
    if (render_concept(*combined) != base) out.push_back(combined);
  }
}

std::vector<ConceptPtr> RefinementOperator::refine_in(const ConceptPtr& c,
                                                      const std::string& ctx) const {
  const ClassHierarchy& h = index_.hierarchy();
  std::vector<ConceptPtr> out;

  switch (c->kind) {
    case Concept::Kind::Top:
      out = atoms(ctx);
      break;

    case Concept::Kind::Bottom:
      break;

    case Concept::Kind::Named: {
      if (h.contains(c->name))
        for (const auto& child : h.children_of(c->name))
          out.push_back(Concept::named(child));
      add_conjuncts(c, ctx, out);
      break;
    }

    case Concept::Kind::And: {
      for (std::size_t i = 0; i < c->children.size(); ++i) {
        for (const auto& replacement : refine_in(c->children[i], ctx)) {
          std::vector<ConceptPtr> members = c->children;
          members[i] = replacement;
          out.push_back(Concept::intersection(std::move(members)));
        }
      }
      // A conjunct "p only C" specializes only alongside an existing
      // "p some" conjunct; on its own it generalizes via vacuity.
      std::set<std::string> exists_props, forall_props;
      for (const auto& m : c->children) {
        if (m->kind == Concept::Kind::Exists) exists_props.insert(m->name);
        if (m->kind == Concept::Kind::ForAll) forall_props.insert(m->name);
      }
      for (const auto& prop : exists_props) {
        if (forall_props.count(prop)) continue;
        std::vector<ConceptPtr> members = c->children;
        members.push_back(Concept::for_all(prop, Concept::top()));
        out.push_back(Concept::intersection(std::move(members)));
      }
      add_conjuncts(c, ctx, out);
      break;
    }

    case Concept::Kind::Or: {
      for (std::size_t i = 0; i < c->children.size(); ++i) {
        for (const auto& replacement : refine_in(c->children[i], ctx)) {
          std::vector<ConceptPtr> members = c->children;
          members[i] = replacement;
          out.push_back(Concept::union_of(std::move(members)));
        }
        std::vector<ConceptPtr> members = c->children;
        members.erase(members.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(Concept::union_of(std::move(members)));
      }
      add_conjuncts(c, ctx, out);
      break;
    }

    case Concept::Kind::Exists: {
      std::string inner_ctx = range_of(h, c->name);
      for (const auto& filler : refine_in(c->children[0], inner_ctx))
        out.push_back(Concept::exists(c->name, filler));
      if (config_.use_has_value && c->children[0]->kind == Concept::Kind::Top)
        for (const auto& ind : nominals(c->name))
          out.push_back(Concept::has_value(c->name, {ind}));
      add_conjuncts(c, ctx, out);
      break;
    }

    case Concept::Kind::ForAll: {
      std::string inner_ctx = range_of(h, c->name);
      for (const auto& filler : refine_in(c->children[0], inner_ctx))
        out.push_back(Concept::for_all(c->name, filler));
      add_conjuncts(c, ctx, out);
      break;
    }

    case Concept::Kind::HasValue: {
      if (c->values.size() >= 2) {
        for (std::size_t i = 0; i < c->values.size(); ++i) {
          std::vector<std::string> kept = c->values;
          kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
          out.push_back(Concept::has_value(c->name, std::move(kept)));
        }
      }
      add_conjuncts(c, ctx, out);
      break;
    }

    case Concept::Kind::Cardinality: {
      std::string inner_ctx = range_of(h, c->name);
      if (c->card_op == CardinalityOp::AtLeast) {
        if (c->card_n + 1 <= config_.cardinality_limit)
          out.push_back(Concept::cardinality(CardinalityOp::AtLeast, c->card_n + 1,
                                             c->name, c->children[0]));
        for (const auto& filler : refine_in(c->children[0], inner_ctx))
          out.push_back(Concept::cardinality(CardinalityOp::AtLeast, c->card_n, c->name,
                                             filler));
      } else if (c->card_op == CardinalityOp::AtMost && c->card_n > 0) {
        out.push_back(Concept::cardinality(CardinalityOp::AtMost, c->card_n - 1,
                                           c->name, c->children[0]));
      }
      add_conjuncts(c, ctx, out);
      break;
    }

    case Concept::Kind::Not:
    case Concept::Kind::DataCompare:
    case Concept::Kind::DataNotIn:
      add_conjuncts(c, ctx, out);
      break;
  }

  return out;
}

std::vector<ConceptPtr> RefinementOperator::refine(const ConceptPtr& c,
                                                   int max_length) const {
  std::vector<ConceptPtr> all = refine_in(c, domain_);

  std::vector<ConceptPtr> out;
  std::set<std::string> seen;
  for (auto& cand : all) {
    if (max_length > 0 && concept_length(*cand) > max_length) continue;
    if (seen.insert(render_concept(*cand)).second) out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace peonto
