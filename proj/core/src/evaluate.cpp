#include "hyperset/evaluate.hpp"

#include <algorithm>

#include "hyperset/error.hpp"
#include "hyperset/set_ops.hpp"

namespace hyperset {

Model::Model(std::span<const CanonSet> universe) {
  for (const auto& u : universe) intern(u);
  universe_size_ = sets_.size();
}

Model::Id Model::intern(const CanonSet& s) {
  auto [it, inserted] = ids_.try_emplace(s, static_cast<Id>(sets_.size()));
  if (inserted) {
    sets_.push_back(s);
    members_.emplace_back();
    members_ready_.push_back(0);
  }
  return it->second;
}

const std::vector<Model::Id>& Model::members(Id set) {
  if (!members_ready_[set]) {
    std::vector<Id> ids;
    for (const auto& e : elements(sets_[set])) ids.push_back(intern(e));
    std::sort(ids.begin(), ids.end());
    members_[set] = std::move(ids);
    members_ready_[set] = 1;
  }
  return members_[set];
}

Model::Id Model::lookup(const std::string& name,
                        const std::vector<std::pair<const std::string*, Id>>& scope) const {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    if (*it->first == name) return it->second;
  }
  throw ValidationError("unbound name '" + name + "'");
}

bool Model::holds(const Formula& f, std::vector<std::pair<const std::string*, Id>>& scope) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kMember: {
      const Id a = lookup(f.lhs(), scope);
      const auto& m = members(lookup(f.rhs(), scope));
      return std::binary_search(m.begin(), m.end(), a);
    }
    case K::kEqual: return lookup(f.lhs(), scope) == lookup(f.rhs(), scope);
    case K::kNot: return !holds(f.body(), scope);
    case K::kAnd: return holds(f.left(), scope) && holds(f.right(), scope);
    case K::kOr: return holds(f.left(), scope) || holds(f.right(), scope);
    case K::kImplies: return !holds(f.left(), scope) || holds(f.right(), scope);
    case K::kIff: return holds(f.left(), scope) == holds(f.right(), scope);
    case K::kForall:
    case K::kExists: break;
  }

  const bool universal = f.kind() == K::kForall;
  const std::string& v = f.lhs();
  const Formula& body = f.body();

  // `forall v. (v in t -> ...)` and `exists v. (v in t & ...)` only need the
  // members of t that lie in the universe.
  const K guard_kind = universal ? K::kImplies : K::kAnd;
  if (body.kind() == guard_kind && body.left().kind() == K::kMember &&
      body.left().lhs() == v && body.left().rhs() != v) {
    const std::vector<Id> candidates = members(lookup(body.left().rhs(), scope));
    for (Id c : candidates) {
      if (c >= universe_size_) continue;
      scope.emplace_back(&v, c);
      const bool value = holds(body.right(), scope);
      scope.pop_back();
      if (value != universal) return !universal;
    }
    return universal;
  }

  for (Id c = 0; c < universe_size_; ++c) {
    scope.emplace_back(&v, c);
    const bool value = holds(body, scope);
    scope.pop_back();
    if (value != universal) return !universal;
  }
  return universal;
}

bool Model::evaluate(const Formula& f, const Environment& env) {
  for (const auto& name : free_vars(f)) {
    if (!env.count(name)) throw ValidationError("free variable '" + name + "' has no value");
  }
  std::vector<std::pair<const std::string*, Id>> scope;
  for (const auto& [name, value] : env) scope.emplace_back(&name, intern(value));
  return holds(f, scope);
}

bool evaluate(const Formula& f, const Environment& env, std::span<const CanonSet> universe) {
  Model model(universe);
  return model.evaluate(f, env);
}

}  // namespace hyperset
