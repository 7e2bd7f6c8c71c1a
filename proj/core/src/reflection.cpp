#include "epiclo/reflection.hpp"

#include "epiclo/error.hpp"
#include "epiclo/io.hpp"
#include "epiclo/quotient_form.hpp"

namespace epiclo {

namespace {

void require_quotient_closed(Universe const& u, char const* what) {
  if (!u.quotient_closed()) {
    throw Error(ErrorCode::UniverseNotQuotientClosed,
                std::string(what) + " needs a quotient-closed universe (" +
                    u.name() + ")");
  }
}

void require_idempotent_cohereditary(ClosureOperator const& c, ErrorCode not_idem,
                                     ErrorCode not_cohered) {
  if (auto v = is_idempotent(c); !v) {
    throw Error(not_idem, "'" + c.name() + "' is not idempotent", v.witness);
  }
  if (auto v = is_cohereditary(c); !v) {
    throw Error(not_cohered, "'" + c.name() + "' is not cohereditary", v.witness);
  }
}

}  // namespace

Reflector Reflector::make(UniversePtr universe, std::vector<Congruence> rho,
                          std::string name) {
  auto const& u = *universe;
  require_quotient_closed(u, "a reflector");
  if (rho.size() != u.size()) {
    throw Error(ErrorCode::TableShape, "reflector needs one congruence per member");
  }
  std::vector<std::size_t> idx(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) idx[i] = u.lattice(i).index_of(rho[i]);

  for (std::size_t i = 0; i < u.size(); ++i) {
    auto const& link = u.quotient_link(i, idx[i]);
    if (!rho[link.target].is_identity()) {
      throw Error(ErrorCode::NotReflective,
                  "L(" + u.id(i) + ") is not in the subcategory",
                  {{"algebra", u.id(i)},
                   {"rho", to_json(rho[i])},
                   {"image", u.id(link.target)}});
    }
  }
  for (auto const& h : u.homs()) {
    if (!rho[h.cod].is_identity()) continue;
    auto const& kernel = u.lattice(h.dom)[h.pullback[u.lattice(h.cod).bottom_index()]];
    if (!rho[h.dom].leq(kernel)) {
      throw Error(ErrorCode::NotReflective,
                  "hom from " + u.id(h.dom) + " to " + u.id(h.cod) +
                      " does not factor through the unit",
                  {{"dom", u.id(h.dom)}, {"cod", u.id(h.cod)}, {"map", h.hom.map()},
                   {"rho", to_json(rho[h.dom])}});
    }
  }
  return Reflector(std::move(universe), std::move(rho), std::move(name));
}

Reflector Reflector::from_rule(UniversePtr universe,
                               std::function<Congruence(FiniteAlgebra const&)> const& rule,
                               std::string name) {
  std::vector<Congruence> rho;
  for (std::size_t i = 0; i < universe->size(); ++i) {
    rho.push_back(rule(universe->algebra(i)));
  }
  return make(std::move(universe), std::move(rho), std::move(name));
}

Congruence Reflector::rho(FiniteAlgebra const& x) const {
  auto loc = universe_->require_member(x);
  return preimage_congruence(loc.iso, rho_[loc.index]);
}

Quotient Reflector::reflect(FiniteAlgebra const& x) const {
  return quotient(x, rho(x));
}

Reflector identity_reflector(UniversePtr universe) {
  return Reflector::from_rule(
      std::move(universe), [](FiniteAlgebra const& x) { return Congruence::identity(x); },
      "identity");
}

Reflector terminal_reflector(UniversePtr universe) {
  return Reflector::from_rule(
      std::move(universe), [](FiniteAlgebra const& x) { return Congruence::total(x); },
      "terminal");
}

ClosureOperator closure_from_reflector(Reflector const& reflector) {
  auto const& u = *reflector.universe();
  require_quotient_closed(u, "closure_from_reflector");
  std::vector<ClosureOperator::Table> tables;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto const& lattice = u.lattice(i);
    ClosureOperator::Table t(lattice.size());
    for (std::size_t r = 0; r < lattice.size(); ++r) {
      auto const& link = u.quotient_link(i, r);
      t[r] = lattice.index_of(
          preimage_congruence(link.surjection, reflector.rho(link.target)));
    }
    tables.push_back(std::move(t));
  }
  return ClosureOperator::make(reflector.universe(), std::move(tables),
                               "closure(" + reflector.name() + ")");
}

Reflector reflector_from_closure(ClosureOperator const& c) {
  require_idempotent_cohereditary(c, ErrorCode::NotIdempotent,
                                  ErrorCode::NotCohereditary);
  auto const& u = *c.universe();
  std::vector<Congruence> rho;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto const& lattice = u.lattice(i);
    rho.push_back(lattice[c.apply_index(i, lattice.bottom_index())]);
  }
  return Reflector::make(c.universe(), std::move(rho), "reflector(" + c.name() + ")");
}

bool membership(ClosureOperator const& c, FiniteAlgebra const& x) {
  auto loc = c.universe()->require_member(x);
  auto const& lattice = c.universe()->lattice(loc.index);
  return c.apply_index(loc.index, lattice.bottom_index()) == lattice.bottom_index();
}

bool membership(Reflector const& r, FiniteAlgebra const& x) {
  auto loc = r.universe()->require_member(x);
  return r.rho(loc.index).is_identity();
}

SubcategoryPredicate SubcategoryPredicate::from_equations(std::string name,
                                                          std::vector<Equation> eqs) {
  return {std::move(name), [eqs = std::move(eqs)](FiniteAlgebra const& x) {
            return satisfies_equations(x, eqs).holds;
          }};
}

SubcategoryPredicate SubcategoryPredicate::from_quasi_equations(
    std::string name, std::vector<QuasiEquation> qeqs) {
  return {std::move(name), [qeqs = std::move(qeqs)](FiniteAlgebra const& x) {
            return satisfies_quasiequations(x, qeqs).holds;
          }};
}

SubcategoryPredicate SubcategoryPredicate::from_operator(ClosureOperator c) {
  std::string name = "fixed(" + c.name() + ")";
  return {std::move(name),
          [c = std::move(c)](FiniteAlgebra const& x) { return membership(c, x); }};
}

SubcategoryPredicate SubcategoryPredicate::from_reflector(Reflector r) {
  std::string name = "fixed(" + r.name() + ")";
  return {std::move(name),
          [r = std::move(r)](FiniteAlgebra const& x) { return membership(r, x); }};
}

Verdict closed_under_quotients(SubcategoryPredicate const& pred,
                               Universe const& universe) {
  for (std::size_t i = 0; i < universe.size(); ++i) {
    auto const& x = universe.algebra(i);
    if (!pred.contains(x)) continue;
    for (auto const& r : universe.lattice(i)) {
      if (!pred.contains(quotient(x, r).algebra)) {
        return Verdict::fail({{"algebra", universe.id(i)}, {"R", to_json(r)}});
      }
    }
  }
  return Verdict::pass();
}

Verdict roundtrip_closure(ClosureOperator const& c) {
  try {
    auto back = closure_from_reflector(reflector_from_closure(c));
    auto const& u = *c.universe();
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t r = 0; r < u.lattice(i).size(); ++r) {
        if (back.apply_index(i, r) != c.apply_index(i, r)) {
          auto const& lattice = u.lattice(i);
          return Verdict::fail({{"algebra", u.id(i)},
                                {"R", to_json(lattice[r])},
                                {"C(R)", to_json(lattice[c.apply_index(i, r)])},
                                {"roundtrip", to_json(lattice[back.apply_index(i, r)])}});
        }
      }
    }
    return Verdict::pass();
  } catch (Error const& e) {
    return Verdict::fail({{"error", e.what()}, {"witness", e.witness()}});
  }
}

Verdict roundtrip_reflector(Reflector const& r) {
  try {
    auto back = reflector_from_closure(closure_from_reflector(r));
    auto const& u = *r.universe();
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!(back.rho(i) == r.rho(i))) {
        return Verdict::fail({{"algebra", u.id(i)},
                              {"rho", to_json(r.rho(i))},
                              {"roundtrip", to_json(back.rho(i))}});
      }
    }
    return Verdict::pass();
  } catch (Error const& e) {
    return Verdict::fail({{"error", e.what()}, {"witness", e.witness()}});
  }
}

BirkhoffResult birkhoff_check(ClosureOperator const& c) {
  require_idempotent_cohereditary(c, ErrorCode::PreconditionFailed,
                                  ErrorCode::PreconditionFailed);
  require_quotient_closed(*c.universe(), "birkhoff_check");
  BirkhoffResult out;
  auto minimal = is_minimal(c);
  auto closed = closed_under_quotients(SubcategoryPredicate::from_operator(c),
                                       *c.universe());
  out.minimal = minimal.holds;
  out.closed_under_quotients = closed.holds;
  if (!minimal) out.witness["minimal"] = minimal.witness;
  if (!closed) out.witness["closed_under_quotients"] = closed.witness;
  return out;
}

AntitoneResult antitone_check(ClosureOperator const& c1, ClosureOperator const& c2) {
  auto leq = operator_leq(c1, c2);
  require_idempotent_cohereditary(c1, ErrorCode::PreconditionFailed,
                                  ErrorCode::PreconditionFailed);
  require_idempotent_cohereditary(c2, ErrorCode::PreconditionFailed,
                                  ErrorCode::PreconditionFailed);
  auto const& u = *c1.universe();
  AntitoneResult out;
  out.leq = leq.holds;
  if (!leq) out.witness["leq"] = leq.witness;
  out.inclusion = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto const bottom = u.lattice(i).bottom_index();
    bool const in2 = c2.apply_index(i, bottom) == bottom;
    bool const in1 = c1.apply_index(i, bottom) == bottom;
    if (in2 && !in1) {
      out.inclusion = false;
      out.witness["inclusion"] = {{"algebra", u.id(i)}};
      break;
    }
  }
  return out;
}

Congruence oracle_reflection(FiniteAlgebra const& x, SubcategoryPredicate const& pred) {
  auto lattice = con_lattice(x);
  std::optional<Congruence> least;
  for (auto const& r : lattice) {
    if (!pred.contains(quotient(x, r).algebra)) continue;
    least = least ? meet(*least, r) : r;
  }
  if (!least) {
    throw Error(ErrorCode::NotReflective,
                "no quotient satisfies '" + pred.name + "'", {{"predicate", pred.name}});
  }
  if (!pred.contains(quotient(x, *least).algebra)) {
    throw Error(ErrorCode::NotReflective,
                "'" + pred.name + "' is not closed under the meet of its quotients",
                {{"predicate", pred.name}, {"meet", to_json(*least)}});
  }
  return *least;
}

Reflector oracle_reflector(UniversePtr universe, SubcategoryPredicate const& pred) {
  return Reflector::from_rule(
      std::move(universe),
      [&pred](FiniteAlgebra const& x) { return oracle_reflection(x, pred); },
      "oracle(" + pred.name + ")");
}

}  // namespace epiclo
