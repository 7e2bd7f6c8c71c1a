#include "epiclo/closure.hpp"

#include "epiclo/error.hpp"
#include "epiclo/io.hpp"
#include "epiclo/quotient_form.hpp"

namespace epiclo {

namespace {

json hom_json(Universe const& u, MemberHom const& h) {
  return {{"dom", u.id(h.dom)}, {"cod", u.id(h.cod)}, {"map", h.hom.map()}};
}

Congruence const& at(Universe const& u, std::size_t member, std::size_t idx) {
  return u.lattice(member)[idx];
}

void require_shared_universe(ClosureOperator const& a, ClosureOperator const& b) {
  if (a.universe() != b.universe()) {
    throw Error(ErrorCode::UniverseMismatch,
                "operators '" + a.name() + "' and '" + b.name() +
                    "' live on different universes");
  }
}

}  // namespace

ClosureOperator ClosureOperator::make(UniversePtr universe, std::vector<Table> tables,
                                      std::string name) {
  auto const& u = *universe;
  if (tables.size() != u.size()) {
    throw Error(ErrorCode::TableShape, "operator needs one table per member");
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (tables[i].size() != u.lattice(i).size()) {
      throw Error(ErrorCode::TableShape,
                  "operator table for " + u.id(i) + " is not total on its fibre");
    }
    for (auto v : tables[i]) {
      if (v >= u.lattice(i).size()) {
        throw Error(ErrorCode::OutOfRange, "operator value outside fibre");
      }
    }
  }
  ClosureOperator c(std::move(universe), std::move(tables), std::move(name));
  if (auto v = is_extensive(c); !v) {
    throw Error(ErrorCode::NotExtensive, "'" + c.name() + "' is not extensive",
                v.witness);
  }
  if (auto v = is_natural(c); !v) {
    throw Error(ErrorCode::NotNatural, "'" + c.name() + "' is not natural",
                v.witness);
  }
  return c;
}

ClosureOperator ClosureOperator::from_rule(UniversePtr universe, Rule const& rule,
                                           std::string name) {
  std::vector<Table> tables;
  for (std::size_t i = 0; i < universe->size(); ++i) {
    auto const& lattice = universe->lattice(i);
    Table t;
    t.reserve(lattice.size());
    for (auto const& r : lattice) {
      t.push_back(lattice.index_of(rule(universe->algebra(i), r)));
    }
    tables.push_back(std::move(t));
  }
  return make(std::move(universe), std::move(tables), std::move(name));
}

Congruence const& ClosureOperator::apply(std::size_t member,
                                         Congruence const& r) const {
  auto const& lattice = universe_->lattice(member);
  return lattice[tables_[member][lattice.index_of(r)]];
}

Congruence ClosureOperator::apply(FiniteAlgebra const& x, Congruence const& r) const {
  if (!(r.algebra() == x)) {
    throw Error(ErrorCode::FibreMismatch, "congruence is not on this algebra");
  }
  auto loc = universe_->require_member(x);
  auto const& closed = apply(loc.index, transport(loc.iso, r));
  return preimage_congruence(loc.iso, closed);
}

ClosureOperator identity_operator(UniversePtr universe) {
  std::vector<ClosureOperator::Table> tables;
  for (std::size_t i = 0; i < universe->size(); ++i) {
    ClosureOperator::Table t(universe->lattice(i).size());
    for (std::size_t r = 0; r < t.size(); ++r) t[r] = r;
    tables.push_back(std::move(t));
  }
  return ClosureOperator::make(std::move(universe), std::move(tables), "identity");
}

ClosureOperator top_operator(UniversePtr universe) {
  std::vector<ClosureOperator::Table> tables;
  for (std::size_t i = 0; i < universe->size(); ++i) {
    auto const& lattice = universe->lattice(i);
    tables.emplace_back(lattice.size(), lattice.top_index());
  }
  return ClosureOperator::make(std::move(universe), std::move(tables), "top");
}

Verdict is_extensive(ClosureOperator const& c) {
  auto const& u = *c.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t r = 0; r < u.lattice(i).size(); ++r) {
      auto const& closed = at(u, i, c.apply_index(i, r));
      if (!at(u, i, r).leq(closed)) {
        return Verdict::fail({{"algebra", u.id(i)},
                              {"R", to_json(at(u, i, r))},
                              {"C(R)", to_json(closed)}});
      }
    }
  }
  return Verdict::pass();
}

Verdict is_monotone(ClosureOperator const& c) {
  auto const& u = *c.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto const& lattice = u.lattice(i);
    for (std::size_t r = 0; r < lattice.size(); ++r) {
      for (std::size_t s = 0; s < lattice.size(); ++s) {
        if (r == s || !lattice[r].leq(lattice[s])) continue;
        if (!lattice[c.apply_index(i, r)].leq(lattice[c.apply_index(i, s)])) {
          return Verdict::fail({{"algebra", u.id(i)},
                                {"R", to_json(lattice[r])},
                                {"S", to_json(lattice[s])}});
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict is_natural(ClosureOperator const& c) {
  // Naturality along identities is monotonicity; given that, the lifting law
  // for f reduces to C_X(f*S) ⩽ f*(C_Y S) for every S.
  if (auto v = is_monotone(c); !v) {
    v.witness["hom"] = "identity";
    return v;
  }
  auto const& u = *c.universe();
  for (auto const& h : u.homs()) {
    for (std::size_t s = 0; s < h.pullback.size(); ++s) {
      std::size_t const r = h.pullback[s];
      auto const& lhs = at(u, h.dom, c.apply_index(h.dom, r));
      auto const& rhs = at(u, h.dom, h.pullback[c.apply_index(h.cod, s)]);
      if (!lhs.leq(rhs)) {
        return Verdict::fail({{"hom", hom_json(u, h)},
                              {"R", to_json(at(u, h.dom, r))},
                              {"S", to_json(at(u, h.cod, s))}});
      }
    }
  }
  return Verdict::pass();
}

Verdict is_idempotent(ClosureOperator const& c) {
  auto const& u = *c.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t r = 0; r < u.lattice(i).size(); ++r) {
      std::size_t const once = c.apply_index(i, r);
      std::size_t const twice = c.apply_index(i, once);
      if (once != twice) {
        return Verdict::fail({{"algebra", u.id(i)},
                              {"R", to_json(at(u, i, r))},
                              {"C(R)", to_json(at(u, i, once))},
                              {"C(C(R))", to_json(at(u, i, twice))}});
      }
    }
  }
  return Verdict::pass();
}

Verdict is_cohereditary(ClosureOperator const& c) {
  auto const& u = *c.universe();
  for (auto const* h : u.surjections()) {
    for (std::size_t s = 0; s < h->pullback.size(); ++s) {
      std::size_t const lhs = c.apply_index(h->dom, h->pullback[s]);
      std::size_t const rhs = h->pullback[c.apply_index(h->cod, s)];
      if (lhs != rhs) {
        return Verdict::fail({{"hom", hom_json(u, *h)},
                              {"S", to_json(at(u, h->cod, s))},
                              {"C(f*S)", to_json(at(u, h->dom, lhs))},
                              {"f*(C(S))", to_json(at(u, h->dom, rhs))}});
      }
    }
  }
  return Verdict::pass();
}

Verdict is_minimal(ClosureOperator const& c) {
  auto const& u = *c.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto const& lattice = u.lattice(i);
    for (std::size_t r = 0; r < lattice.size(); ++r) {
      for (std::size_t s = 0; s < lattice.size(); ++s) {
        auto const joined = lattice.index_of(join(lattice[r], lattice[s]));
        auto const& lhs = lattice[c.apply_index(i, joined)];
        auto const rhs = join(lattice[c.apply_index(i, r)], lattice[s]);
        if (!(lhs == rhs)) {
          return Verdict::fail({{"algebra", u.id(i)},
                                {"R", to_json(lattice[r])},
                                {"S", to_json(lattice[s])},
                                {"C(R+S)", to_json(lhs)},
                                {"C(R)+S", to_json(rhs)}});
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict preserves_cocartesian(ClosureOperator const& c) {
  auto const& u = *c.universe();
  for (auto const* h : u.surjections()) {
    auto const& lattice = u.lattice(h->dom);
    for (std::size_t r = 0; r < lattice.size(); ++r) {
      auto const lhs = image_congruence(h->hom, lattice[c.apply_index(h->dom, r)]);
      auto const& pushed = image_congruence(h->hom, lattice[r]);
      auto const& rhs = c.apply(h->cod, pushed);
      if (!(lhs == rhs)) {
        return Verdict::fail({{"hom", hom_json(u, *h)},
                              {"R", to_json(lattice[r])},
                              {"f(C(R))", to_json(lhs)},
                              {"C(f(R))", to_json(rhs)}});
      }
    }
  }
  return Verdict::pass();
}

Verdict operator_leq(ClosureOperator const& c1, ClosureOperator const& c2) {
  require_shared_universe(c1, c2);
  auto const& u = *c1.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t r = 0; r < u.lattice(i).size(); ++r) {
      auto const& a = at(u, i, c1.apply_index(i, r));
      auto const& b = at(u, i, c2.apply_index(i, r));
      if (!a.leq(b)) {
        return Verdict::fail({{"algebra", u.id(i)},
                              {"R", to_json(at(u, i, r))},
                              {"C1(R)", to_json(a)},
                              {"C2(R)", to_json(b)}});
      }
    }
  }
  return Verdict::pass();
}

ClosureOperator strictify(ClosureOperator const& d) {
  auto const& u = *d.universe();
  if (!u.quotient_closed()) {
    throw Error(ErrorCode::UniverseNotQuotientClosed,
                "strictify needs a quotient-closed universe");
  }
  if (auto v = is_idempotent(d); !v) {
    throw Error(ErrorCode::PreconditionFailed,
                "'" + d.name() + "' is not idempotent", v.witness);
  }
  if (auto v = is_cohereditary(d); !v) {
    throw Error(ErrorCode::PreconditionFailed,
                "'" + d.name() + "' is not cohereditary", v.witness);
  }
  std::vector<ClosureOperator::Table> tables;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto const& lattice = u.lattice(i);
    ClosureOperator::Table t(lattice.size());
    for (std::size_t r = 0; r < lattice.size(); ++r) {
      auto const& link = u.quotient_link(i, r);
      auto const& target = u.lattice(link.target);
      std::size_t const closed_bottom = d.apply_index(link.target, target.bottom_index());
      if (closed_bottom == target.bottom_index()) {
        t[r] = r;
      } else {
        t[r] = lattice.index_of(preimage_congruence(link.surjection, target[closed_bottom]));
      }
    }
    tables.push_back(std::move(t));
  }
  return ClosureOperator::make(d.universe(), std::move(tables),
                               "strict(" + d.name() + ")");
}

std::vector<ClosureOperator> enumerate_closure_operators(UniversePtr universe,
                                                         std::size_t limit) {
  auto const& u = *universe;
  // Slots: one per (member, congruence); each slot ranges over the
  // congruences above it, so every candidate is extensive.
  struct Slot {
    std::size_t member;
    std::size_t r;
    std::vector<std::size_t> options;
  };
  std::vector<Slot> slots;
  std::size_t total = 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto const& lattice = u.lattice(i);
    for (std::size_t r = 0; r < lattice.size(); ++r) {
      Slot slot{i, r, {}};
      for (std::size_t s = 0; s < lattice.size(); ++s) {
        if (lattice[r].leq(lattice[s])) slot.options.push_back(s);
      }
      if (total > limit / slot.options.size()) {
        throw Error(ErrorCode::SizeTooLarge,
                    "more than " + std::to_string(limit) + " candidate operators");
      }
      total *= slot.options.size();
      slots.push_back(std::move(slot));
    }
  }

  std::vector<ClosureOperator> out;
  std::vector<std::size_t> choice(slots.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<ClosureOperator::Table> tables(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) tables[i].resize(u.lattice(i).size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      tables[slots[s].member][slots[s].r] = slots[s].options[choice[s]];
    }
    try {
      out.push_back(ClosureOperator::make(universe, std::move(tables),
                                          "enumerated-" + std::to_string(k)));
    } catch (Error const& e) {
      if (e.code() != ErrorCode::NotNatural) throw;
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (++choice[s] < slots[s].options.size()) break;
      choice[s] = 0;
    }
  }
  return out;
}

json operator_report(ClosureOperator const& c) {
  json report = {{"name", c.name()}, {"universe", c.universe()->name()}};
  json witnesses = json::object();
  auto record = [&](char const* key, Verdict const& v) {
    report[key] = v.holds;
    if (!v.holds) witnesses[key] = v.witness;
  };
  record("extensive", is_extensive(c));
  record("natural", is_natural(c));
  record("idempotent", is_idempotent(c));
  record("cohereditary", is_cohereditary(c));
  record("minimal", is_minimal(c));
  record("preserves_pushouts", preserves_cocartesian(c));
  report["witnesses"] = witnesses;
  return report;
}

}  // namespace epiclo
