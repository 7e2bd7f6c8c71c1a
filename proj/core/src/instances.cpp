#include "epiclo/instances.hpp"

#include "epiclo/error.hpp"
#include "epiclo/io.hpp"

#include <algorithm>
#include <numeric>

namespace epiclo {

namespace {

void require_tag(FiniteAlgebra const& a, Variety v, ErrorCode code) {
  if (a.tag() != v) {
    throw Error(code, "expected a " + std::string(to_string(v)) + ", got tag " +
                          std::string(to_string(a.tag())));
  }
}

struct RngOps {
  std::size_t add, neg, zero, mul;

  explicit RngOps(FiniteAlgebra const& a)
      : add(a.op_index("add")), neg(a.op_index("neg")), zero(a.op_index("zero")),
        mul(a.op_index("mul")) {}
};

}  // namespace

Ideal Ideal::make(FiniteAlgebra rng, std::vector<Elem> elements) {
  require_tag(rng, Variety::commutative_rng, ErrorCode::NotRng);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Elem x : elements) {
    if (x >= rng.size()) throw Error(ErrorCode::OutOfRange, "ideal element outside carrier");
  }
  RngOps const ops(rng);
  auto in = [&](Elem x) { return std::binary_search(elements.begin(), elements.end(), x); };
  if (!in(rng.apply(ops.zero))) {
    throw Error(ErrorCode::InvalidInput, "ideal must contain zero");
  }
  for (Elem a : elements) {
    if (!in(rng.apply(ops.neg, a))) {
      throw Error(ErrorCode::InvalidInput, "ideal not closed under negation", {{"a", a}});
    }
    for (Elem b : elements) {
      if (!in(rng.apply(ops.add, a, b))) {
        throw Error(ErrorCode::InvalidInput, "ideal not closed under addition",
                    {{"a", a}, {"b", b}});
      }
    }
    for (Elem r = 0; r < rng.size(); ++r) {
      if (!in(rng.apply(ops.mul, r, a))) {
        throw Error(ErrorCode::InvalidInput, "ideal does not absorb multiplication",
                    {{"a", a}, {"r", r}});
      }
    }
  }
  return Ideal(std::move(rng), std::move(elements));
}

bool Ideal::contains(Elem x) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

Ideal ideal_of_congruence(Congruence const& r) {
  auto const& a = r.algebra();
  require_tag(a, Variety::commutative_rng, ErrorCode::NotRng);
  Elem const zero = a.apply(a.op_index("zero"));
  std::vector<Elem> elems;
  for (Elem x = 0; x < a.size(); ++x) {
    if (r.related(x, zero)) elems.push_back(x);
  }
  return Ideal(a, std::move(elems));
}

Congruence congruence_of_ideal(Ideal const& i) {
  auto const& a = i.rng();
  RngOps const ops(a);
  std::vector<Elem> labels(a.size());
  // x ≡ y iff x - y ∈ I; label each element by the least member of its coset.
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y <= x; ++y) {
      if (i.contains(a.apply(ops.add, x, a.apply(ops.neg, y)))) {
        labels[x] = y;
        break;
      }
    }
  }
  return Congruence::trusted(a, labels);
}

Ideal nilradical(Ideal const& i) {
  auto const& a = i.rng();
  std::size_t const mul = a.op_index("mul");
  std::vector<Elem> out;
  for (Elem x = 0; x < a.size(); ++x) {
    Elem p = x;
    for (std::size_t k = 1; k <= a.size(); ++k) {
      if (i.contains(p)) {
        out.push_back(x);
        break;
      }
      p = a.apply(mul, p, x);
    }
  }
  return Ideal(a, std::move(out));
}

ClosureOperator nilradical_operator(UniversePtr universe) {
  return ClosureOperator::from_rule(
      std::move(universe),
      [](FiniteAlgebra const&, Congruence const& r) {
        return congruence_of_ideal(nilradical(ideal_of_congruence(r)));
      },
      "nilradical");
}

Congruence quandle_reachability(FiniteAlgebra const& q) {
  require_tag(q, Variety::quandle, ErrorCode::NotQuandle);
  std::size_t const rhd = q.op_index("rhd");
  std::size_t const rhd_inv = q.op_index("rhd_inv");
  std::size_t const n = q.size();
  std::vector<ElemPair> pairs;
  for (Elem x = 0; x < n; ++x) {
    for (Elem b = 0; b < n; ++b) {
      pairs.emplace_back(x, q.apply(rhd, x, b));
      pairs.emplace_back(x, q.apply(rhd_inv, x, b));
    }
  }
  // Orbit partition: plain equivalence closure, no propagation.
  std::vector<Elem> labels(n);
  std::iota(labels.begin(), labels.end(), Elem{0});
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : pairs) {
      Elem const m = std::min(labels[a], labels[b]);
      if (labels[a] != m || labels[b] != m) {
        labels[a] = labels[b] = m;
        changed = true;
      }
    }
  }
  if (auto w = find_incompatibility(q, labels)) {
    throw Error(ErrorCode::CompositeNotCongruence,
                "reachability relation is not a congruence",
                {{"args_a", w->args_a}, {"args_b", w->args_b}});
  }
  return Congruence::trusted(q, labels);
}

Congruence quandle_closure(Congruence const& r) {
  auto const& q = r.algebra();
  auto const reach = quandle_reachability(q);
  std::size_t const n = q.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (Elem a = 0; a < n; ++a) {
    for (Elem c = 0; c < n; ++c) {
      if (!reach.related(a, c)) continue;
      for (Elem b = 0; b < n; ++b) {
        if (r.related(c, b)) rel[a][b] = true;
      }
    }
  }
  // The composite must be an equivalence relation and compatible.
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (rel[a][b] != rel[b][a]) {
        throw Error(ErrorCode::CompositeNotCongruence, "R ∘ ∼ is not symmetric",
                    {{"pair", {a, b}}, {"R", to_json(r)}});
      }
      if (!rel[a][b]) continue;
      for (Elem c = 0; c < n; ++c) {
        if (rel[b][c] && !rel[a][c]) {
          throw Error(ErrorCode::CompositeNotCongruence, "R ∘ ∼ is not transitive",
                      {{"triple", {a, b, c}}, {"R", to_json(r)}});
        }
      }
    }
  }
  std::vector<Elem> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = static_cast<Elem>(std::find(rel[a].begin(), rel[a].end(), true) -
                                  rel[a].begin());
  }
  if (auto w = find_incompatibility(q, labels)) {
    throw Error(ErrorCode::CompositeNotCongruence, "R ∘ ∼ is not compatible",
                {{"args_a", w->args_a}, {"args_b", w->args_b}, {"R", to_json(r)}});
  }
  return Congruence::trusted(q, labels);
}

ClosureOperator quandle_closure_operator(UniversePtr universe) {
  return ClosureOperator::from_rule(
      std::move(universe),
      [](FiniteAlgebra const&, Congruence const& r) { return quandle_closure(r); },
      "quandle-trivial");
}

namespace {

Congruence group_congruence(FiniteAlgebra const& g, bool squares) {
  require_tag(g, Variety::group, ErrorCode::NotGroup);
  std::size_t const mul = g.op_index("mul");
  Elem const e = g.apply(g.op_index("e"));
  std::vector<ElemPair> pairs;
  for (Elem x = 0; x < g.size(); ++x) {
    for (Elem y = 0; y < g.size(); ++y) {
      pairs.emplace_back(g.apply(mul, x, y), g.apply(mul, y, x));
    }
    if (squares) pairs.emplace_back(g.apply(mul, x, x), e);
  }
  return generated_congruence(g, pairs);
}

}  // namespace

Congruence commutator_congruence(FiniteAlgebra const& g) {
  return group_congruence(g, false);
}

Congruence elementary_abelian2_congruence(FiniteAlgebra const& g) {
  return group_congruence(g, true);
}

ClosureOperator abelianization_operator(UniversePtr universe) {
  return ClosureOperator::from_rule(
      std::move(universe),
      [](FiniteAlgebra const& g, Congruence const& r) {
        return join(r, commutator_congruence(g));
      },
      "abelianization");
}

ClosureOperator elementary_abelian2_operator(UniversePtr universe) {
  return ClosureOperator::from_rule(
      std::move(universe),
      [](FiniteAlgebra const& g, Congruence const& r) {
        return join(r, elementary_abelian2_congruence(g));
      },
      "elementary-abelian-2");
}

Reflector abelianization_reflector(UniversePtr universe) {
  return Reflector::from_rule(std::move(universe), commutator_congruence,
                              "abelianization");
}

SubcategoryPredicate abelian_groups() {
  using terms::op;
  using terms::x;
  return SubcategoryPredicate::from_equations(
      "abelian", {{op("mul", {x(0), x(1)}), op("mul", {x(1), x(0)}), "x y = y x"}});
}

SubcategoryPredicate elementary_abelian2_groups() {
  using terms::op;
  using terms::x;
  return SubcategoryPredicate::from_equations(
      "elementary-abelian-2",
      {{op("mul", {x(0), x(1)}), op("mul", {x(1), x(0)}), "x y = y x"},
       {op("mul", {x(0), x(0)}), op("e"), "x x = e"}});
}

SubcategoryPredicate reduced_rngs() {
  using terms::op;
  using terms::x;
  return SubcategoryPredicate::from_quasi_equations(
      "reduced", {{{{op("mul", {x(0), x(0)}), op("zero"), "x x = 0"}},
                   {x(0), op("zero"), "x = 0"}}});
}

SubcategoryPredicate trivial_quandles() {
  using terms::op;
  using terms::x;
  return SubcategoryPredicate::from_equations(
      "trivial-quandle",
      {{op("rhd", {x(0), x(1)}), x(0), "x ◁ y = x"},
       {op("rhd_inv", {x(0), x(1)}), x(0), "x ◁⁻¹ y = x"}});
}

}  // namespace epiclo
