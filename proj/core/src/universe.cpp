#include "epiclo/universe.hpp"

#include "epiclo/error.hpp"
#include "epiclo/io.hpp"
#include "epiclo/quotient_form.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace epiclo {

std::vector<std::size_t> iso_invariant(FiniteAlgebra const& x) {
  std::size_t const n = x.size();
  std::vector<std::size_t> inv{n, static_cast<std::size_t>(x.tag())};
  for (std::size_t op = 0; op < x.signature().size(); ++op) {
    std::vector<std::size_t> hist(n, 0);
    for (Elem v : x.table(op)) ++hist[v];
    std::sort(hist.begin(), hist.end());
    inv.insert(inv.end(), hist.begin(), hist.end());
    if (x.arity(op) == 2) {
      std::size_t idempotents = 0;
      for (Elem a = 0; a < n; ++a) idempotents += x.apply(op, a, a) == a;
      inv.push_back(idempotents);
    }
  }
  return inv;
}

Congruence transport(Homomorphism const& iso, Congruence const& r) {
  return preimage_congruence(iso.inverse(), r);
}

namespace {

struct Candidate {
  FiniteAlgebra algebra;
  std::vector<std::size_t> invariant;
};

bool isomorphic_to_any(std::vector<Candidate> const& reps, FiniteAlgebra const& x,
                       std::vector<std::size_t> const& inv) {
  for (auto const& c : reps) {
    if (c.invariant != inv || c.algebra.tag() != x.tag()) continue;
    if (c.algebra == x || find_isomorphism(x, c.algebra)) return true;
  }
  return false;
}

}  // namespace

UniversePtr Universe::make(std::vector<FiniteAlgebra> algebras, Closure closure,
                           std::string name) {
  std::vector<Candidate> reps;
  for (auto& a : algebras) {
    auto inv = iso_invariant(a);
    if (!isomorphic_to_any(reps, a, inv)) reps.push_back({std::move(a), std::move(inv)});
  }
  std::stable_sort(reps.begin(), reps.end(), [](Candidate const& l, Candidate const& r) {
    return l.algebra < r.algebra;
  });

  std::shared_ptr<Universe> u(new Universe);
  u->name_ = std::move(name);
  u->quotient_closed_ = closure == Closure::quotient_closed;
  std::map<std::size_t, std::size_t> per_size;
  for (auto& c : reps) {
    std::size_t const k = per_size[c.algebra.size()]++;
    std::string id = u->name_ + "-" + std::to_string(c.algebra.size()) + "-" +
                     std::to_string(k);
    auto lattice = con_lattice(c.algebra);
    u->members_.push_back(Member{c.algebra, std::move(lattice), std::move(id),
                                 std::move(c.invariant), {}});
  }

  for (std::size_t i = 0; i < u->members_.size(); ++i) {
    for (std::size_t j = 0; j < u->members_.size(); ++j) {
      auto const& x = u->members_[i];
      auto const& y = u->members_[j];
      if (!same_signature(x.algebra, y.algebra)) continue;
      for (auto& h : enumerate_homs(x.algebra, y.algebra)) {
        std::vector<std::size_t> pullback;
        pullback.reserve(y.lattice.size());
        for (auto const& s : y.lattice) {
          pullback.push_back(x.lattice.index_of(preimage_congruence(h, s)));
        }
        u->homs_.push_back(MemberHom{i, j, std::move(h), std::move(pullback)});
      }
    }
  }

  if (u->quotient_closed_) {
    for (std::size_t i = 0; i < u->members_.size(); ++i) {
      auto& m = u->members_[i];
      for (auto const& r : m.lattice) {
        auto q = quotient(m.algebra, r);
        auto loc = u->locate(q.algebra);
        if (!loc) {
          throw Error(ErrorCode::UniverseNotQuotientClosed,
                      "quotient of " + m.id + " is not isomorphic to a member",
                      {{"algebra", m.id}, {"congruence", to_json(r)}});
        }
        m.quotients.push_back(
            QuotientLink{loc->index, compose(loc->iso, q.projection)});
      }
    }
  }
  return u;
}

UniversePtr Universe::quotient_closure(std::vector<FiniteAlgebra> algebras,
                                       std::string name) {
  std::vector<Candidate> reps;
  std::deque<FiniteAlgebra> work(algebras.begin(), algebras.end());
  while (!work.empty()) {
    auto a = std::move(work.front());
    work.pop_front();
    auto inv = iso_invariant(a);
    if (isomorphic_to_any(reps, a, inv)) continue;
    for (auto const& r : con_lattice(a)) {
      if (!r.is_identity()) work.push_back(quotient(a, r).algebra);
    }
    reps.push_back({std::move(a), std::move(inv)});
  }
  std::vector<FiniteAlgebra> out;
  out.reserve(reps.size());
  for (auto& c : reps) out.push_back(std::move(c.algebra));
  return make(std::move(out), Closure::quotient_closed, std::move(name));
}

std::vector<MemberHom const*> Universe::surjections() const {
  std::vector<MemberHom const*> out;
  for (auto const& h : homs_) {
    if (h.hom.surjective()) out.push_back(&h);
  }
  return out;
}

std::optional<Universe::Location> Universe::locate(FiniteAlgebra const& x) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].algebra == x) return Location{i, Homomorphism::identity(x)};
  }
  auto inv = iso_invariant(x);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    auto const& m = members_[i];
    if (m.invariant != inv || m.algebra.tag() != x.tag()) continue;
    if (auto iso = find_isomorphism(x, m.algebra)) return Location{i, std::move(*iso)};
  }
  return std::nullopt;
}

Universe::Location Universe::require_member(FiniteAlgebra const& x) const {
  auto loc = locate(x);
  if (!loc) {
    throw Error(ErrorCode::NotMember,
                "algebra is not isomorphic to any member of " + name_);
  }
  return std::move(*loc);
}

std::optional<std::size_t> Universe::index_of(FiniteAlgebra const& x) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].algebra == x) return i;
  }
  return std::nullopt;
}

QuotientLink const& Universe::quotient_link(std::size_t member,
                                            std::size_t congruence) const {
  if (!quotient_closed_) {
    throw Error(ErrorCode::UniverseNotQuotientClosed,
                "universe " + name_ + " is not flagged quotient-closed");
  }
  return members_[member].quotients[congruence];
}

}  // namespace epiclo
