#include "hyperset/totality.hpp"

#include <sstream>

#include <json.hpp>

#include "hyperset/error.hpp"
#include "hyperset/set_ops.hpp"
#include "hyperset/set_text.hpp"

namespace hyperset {
namespace {

class TermBinder {
 public:
  explicit TermBinder(EquationSystem& pending) : pending_(pending) {}

  SetTerm bind(const PTerm& t) {
    switch (t.kind()) {
      case PTerm::Kind::kPlaceholder: return SetTerm::variable(kTotalityVariable);
      case PTerm::Kind::kSet: return SetTerm::set(t.value());
      case PTerm::Kind::kAggregate: break;
    }
    std::vector<SetTerm> items;
    for (const auto& item : t.items()) items.push_back(bind(item));
    std::string name = "_t" + std::to_string(++counter_);
    pending_.bind(name, std::move(items));
    return SetTerm::variable(std::move(name));
  }

 private:
  EquationSystem& pending_;
  std::size_t counter_ = 0;
};

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

}  // namespace

std::string totality_variable(const Formula& p, const Environment& constants) {
  std::vector<std::string> vars;
  for (const auto& v : free_vars(p)) {
    if (!constants.count(v)) vars.push_back(v);
  }
  if (vars.size() != 1) {
    throw ValidationError(
        "a totality predicate must have exactly one free variable besides constants; found " +
        std::to_string(vars.size()) + (vars.empty() ? "" : " (" + join(vars, ", ") + ")"));
  }
  return vars.front();
}

std::vector<CanonSet> ideal_totality(const Formula& p, const Universe& universe,
                                     const Environment& constants) {
  const std::string x = totality_variable(p, constants);
  Model model(universe.members);
  Environment env = constants;
  std::vector<CanonSet> out;
  for (const auto& u : universe.members) {
    env.insert_or_assign(x, u);
    if (model.evaluate(p, env)) out.push_back(u);
  }
  return out;
}

TotalityReport complete_totality(const Formula& p, const Universe& universe,
                                 const TotalityOptions& options) {
  TotalityReport r;
  r.predicate = to_string(p);
  r.variable = totality_variable(p, options.constants);
  r.k = universe.bound;

  Model model(universe.members);
  Environment env = options.constants;
  std::size_t outside = 0;
  auto satisfies = [&](const CanonSet& s) {
    if (!universe.contains(s)) ++outside;
    env.insert_or_assign(r.variable, s);
    return model.evaluate(p, env);
  };

  for (const auto& u : universe.members) {
    env.insert_or_assign(r.variable, u);
    if (model.evaluate(p, env)) r.ideal.push_back(u);
  }
  r.ideal_aggregate = from_elements(r.ideal);
  r.ideal_aggregate_satisfies = satisfies(r.ideal_aggregate);

  if (options.strategies.empty()) {
    r.warnings.push_back("no placeholder strategies given; hypothetical objects were not examined");
  }
  const auto terms =
      placeholder_terms(options.strategies, r.ideal, universe, options.budget, &r.warnings);

  EquationSystem aux;
  TermBinder binder(aux);
  std::vector<SetTerm> members;
  for (const auto& e : r.ideal) members.push_back(SetTerm::set(e));
  std::vector<std::optional<SetTerm>> bound_terms;
  for (const auto& h : terms) {
    TermVerdict v{h, h.instantiate(r.ideal_aggregate), false, std::nullopt};
    v.accepted = satisfies(v.instance);
    if (v.accepted) {
      members.push_back(binder.bind(h));
      bound_terms.push_back(members.back());
    } else {
      bound_terms.push_back(std::nullopt);
    }
    r.accepted_terms.push_back(std::move(v));
  }

  r.equation.bind(kTotalityVariable, std::move(members));
  for (const auto& b : aux.bindings()) r.equation.bind(b.variable, b.terms);
  const auto solution = solve(r.equation);
  r.complete = solution.at(kTotalityVariable);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!bound_terms[i]) continue;
    const SetTerm& t = *bound_terms[i];
    r.accepted_terms[i].element = t.is_variable() ? solution.at(t.name()) : t.embedded();
  }

  for (const auto& e : elements(r.complete)) {
    if (!satisfies(e)) r.intruders.push_back(e);
  }

  for (const auto& e : r.ideal) {
    if (e.size() >= universe.bound) {
      r.warnings.push_back("ideal totality reaches the universe bound k = " +
                           std::to_string(universe.bound) +
                           "; satisfying sets with larger pictures are not represented");
      break;
    }
  }
  if (outside) {
    r.warnings.push_back("predicate evaluated on " + std::to_string(outside) +
                         " set(s) outside the universe; their quantifiers range over the universe only");
  }
  return r;
}

std::string to_text(const TotalityReport& r) {
  std::ostringstream out;
  auto sets = [](const std::vector<CanonSet>& xs) {
    std::vector<std::string> parts;
    for (const auto& s : xs) parts.push_back(format_set(s));
    return parts;
  };
  out << "predicate = " << r.predicate << "\n";
  out << "variable = " << r.variable << "\n";
  out << "k = " << r.k << "\n";
  out << "ideal (" << r.ideal.size() << ") = [" << join(sets(r.ideal), ", ") << "]\n";
  out << "ideal_aggregate = " << format_set(r.ideal_aggregate) << "\n";
  out << "ideal_aggregate_satisfies = " << (r.ideal_aggregate_satisfies ? "true" : "false") << "\n";
  out << "terms (" << r.accepted_terms.size() << "):\n";
  for (const auto& v : r.accepted_terms) {
    out << "  " << to_string(v.term) << " : " << (v.accepted ? "accepted" : "rejected");
    if (v.element) out << " -> " << format_set(*v.element);
    out << "\n";
  }
  out << "equation = " << to_program(r.equation, std::string(kTotalityVariable)) << "\n";
  out << "complete = " << format_set(r.complete) << "\n";
  out << "intruders (" << r.intruders.size() << ") = [" << join(sets(r.intruders), ", ") << "]\n";
  out << "warnings (" << r.warnings.size() << "):\n";
  for (const auto& w : r.warnings) out << "  " << w << "\n";
  return out.str();
}

std::string to_json(const TotalityReport& r, int indent) {
  using nlohmann::ordered_json;
  auto sets = [](const std::vector<CanonSet>& xs) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : xs) arr.push_back(to_program(s));
    return arr;
  };
  ordered_json j;
  j["predicate"] = r.predicate;
  j["variable"] = r.variable;
  j["k"] = r.k;
  j["ideal"] = sets(r.ideal);
  j["ideal_aggregate"] = to_program(r.ideal_aggregate);
  j["ideal_aggregate_satisfies"] = r.ideal_aggregate_satisfies;
  ordered_json terms = ordered_json::array();
  for (const auto& v : r.accepted_terms) {
    ordered_json t;
    t["term"] = to_string(v.term);
    t["instance"] = to_program(v.instance);
    t["accepted"] = v.accepted;
    t["element"] = v.element ? ordered_json(to_program(*v.element)) : ordered_json(nullptr);
    terms.push_back(std::move(t));
  }
  j["accepted_terms"] = std::move(terms);
  j["equation"] = to_program(r.equation, std::string(kTotalityVariable));
  j["complete"] = to_program(r.complete);
  j["intruders"] = sets(r.intruders);
  j["warnings"] = r.warnings;
  return j.dump(indent);
}

}  // namespace hyperset
