// One line per acceptance criterion; exit status is the number of failures.

#include "oracles.hpp"

#include "epiclo/closure.hpp"
#include "epiclo/corpus.hpp"
#include "epiclo/error.hpp"
#include "epiclo/instances.hpp"
#include "epiclo/quotient_form.hpp"
#include "epiclo/reflection.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace epiclo;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::size_t checked = 0;

  void expect(bool ok, std::string const& what) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      detail << "first failure: " << what;
    }
  }
};

struct Criterion {
  int id;
  char const* title;
  double limit_s;  // 0: no limit
  std::function<void(Outcome&)> body;
};

struct Corpora {
  UniversePtr rngs = corpus(CorpusKind::rngs, 12);
  UniversePtr quandles = corpus(CorpusKind::quandles, 3);
  UniversePtr groups = corpus(CorpusKind::groups, 8);
};

Corpora const& corpora() {
  static Corpora const c;
  return c;
}

// Built-in operators paired with the universe they live on.
std::vector<ClosureOperator> builtin_operators() {
  auto const& c = corpora();
  std::vector<ClosureOperator> out;
  for (auto const& u : {c.rngs, c.quandles, c.groups}) {
    out.push_back(identity_operator(u));
    out.push_back(top_operator(u));
  }
  out.push_back(nilradical_operator(c.rngs));
  out.push_back(quandle_closure_operator(c.quandles));
  out.push_back(abelianization_operator(c.groups));
  out.push_back(elementary_abelian2_operator(c.groups));
  return out;
}

std::vector<Reflector> reflectors() {
  auto const& c = corpora();
  std::vector<Reflector> out;
  for (auto const& u : {c.rngs, c.quandles, c.groups}) {
    out.push_back(identity_reflector(u));
    out.push_back(terminal_reflector(u));
  }
  out.push_back(abelianization_reflector(c.groups));
  out.push_back(oracle_reflector(c.groups, abelian_groups()));
  out.push_back(oracle_reflector(c.groups, elementary_abelian2_groups()));
  out.push_back(oracle_reflector(c.rngs, reduced_rngs()));
  out.push_back(oracle_reflector(c.quandles, trivial_quandles()));
  for (auto const& op : builtin_operators()) out.push_back(reflector_from_closure(op));
  return out;
}

// Idempotent cohereditary operators on the quotient closure of each group of
// order <= 4, plus each Z_n rng (n <= 4) where non-minimal ones exist.
std::vector<ClosureOperator> micro_operators() {
  std::vector<FiniteAlgebra> seeds;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& g : enumerate_groups(n)) seeds.push_back(std::move(g));
  }
  for (std::size_t n = 1; n <= 4; ++n) seeds.push_back(zn_rng(n));
  std::vector<ClosureOperator> out;
  for (auto const& x : seeds) {
    auto u = Universe::quotient_closure({x}, std::string(to_string(x.tag())) + "-" +
                                                 std::to_string(x.size()));
    for (auto& c : enumerate_closure_operators(u)) {
      if (is_idempotent(c) && is_cohereditary(c)) out.push_back(std::move(c));
    }
  }
  return out;
}

void roundtrips(Outcome& o) {
  for (auto const& c : builtin_operators()) {
    o.expect(bool(roundtrip_closure(c)), "closure round trip " + c.name());
    o.expect(bool(roundtrip_reflector(reflector_from_closure(c))),
             "reflector round trip " + c.name());
  }
  for (auto const& r : reflectors()) {
    o.expect(bool(roundtrip_reflector(r)), "reflector round trip " + r.name());
  }
  o.detail << o.checked << " round trips";
}

void axioms(Outcome& o) {
  std::size_t n = 0;
  for (auto const& r : reflectors()) {
    auto c = closure_from_reflector(r);
    o.expect(bool(is_extensive(c)), "extensive " + r.name());
    o.expect(bool(is_monotone(c)), "monotone " + r.name());
    o.expect(bool(is_natural(c)), "natural " + r.name());
    o.expect(bool(is_idempotent(c)), "idempotent " + r.name());
    o.expect(bool(is_cohereditary(c)), "cohereditary " + r.name());
    ++n;
  }
  if (o.pass) o.detail << n << " operators";
}

void lem_a(Outcome& o) {
  std::size_t minimal = 0, n = 0;
  for (auto const& c : micro_operators()) {
    bool const m = is_minimal(c).holds;
    o.expect(m == preserves_cocartesian(c).holds, c.universe()->name() + " " + c.name());
    minimal += m;
    ++n;
  }
  o.expect(n > 0, "empty family");
  if (o.pass) o.detail << n << " operators, " << minimal << " minimal";
}

void birkhoff(Outcome& o) {
  auto ops = builtin_operators();
  for (auto const& r : reflectors()) ops.push_back(closure_from_reflector(r));
  for (auto& c : micro_operators()) ops.push_back(std::move(c));
  std::size_t minimal = 0;
  for (auto const& c : ops) {
    auto b = birkhoff_check(c);
    o.expect(b.consistent(), "birkhoff " + c.universe()->name() + " " + c.name());
    o.expect(b.minimal == is_minimal(c).holds, "minimal flag " + c.name());
    minimal += b.minimal;
  }
  if (o.pass) o.detail << ops.size() << " operators, " << minimal << " minimal";
}

void oracle_agreement(Outcome& o) {
  auto const& c = corpora();
  struct Pair {
    ClosureOperator op;
    SubcategoryPredicate pred;
  };
  std::vector<Pair> pairs{
      {nilradical_operator(c.rngs), reduced_rngs()},
      {quandle_closure_operator(c.quandles), trivial_quandles()},
      {abelianization_operator(c.groups), abelian_groups()},
      {elementary_abelian2_operator(c.groups), elementary_abelian2_groups()},
  };
  std::size_t cells = 0;
  for (auto const& [op, pred] : pairs) {
    auto oracle = closure_from_reflector(oracle_reflector(op.universe(), pred));
    auto const& u = *op.universe();
    for (std::size_t m = 0; m < u.size(); ++m) {
      for (std::size_t r = 0; r < u.lattice(m).size(); ++r) {
        o.expect(op.apply_index(m, r) == oracle.apply_index(m, r),
                 op.name() + " on " + u.id(m));
        ++cells;
      }
    }
  }
  if (o.pass) o.detail << cells << " congruences";
}

void antitone(Outcome& o) {
  for (std::size_t max : {std::size_t{8}, kMaxGroupOrder}) {
    auto u = corpus(CorpusKind::groups, max);
    auto ab = abelianization_operator(u);
    auto e2 = elementary_abelian2_operator(u);
    auto fwd = antitone_check(ab, e2);
    auto back = antitone_check(e2, ab);
    auto const tag = " (order <= " + std::to_string(max) + ")";
    o.expect(fwd.consistent() && fwd.leq && fwd.inclusion, "ab <= e2" + tag);
    o.expect(back.consistent() && !back.leq && !back.inclusion, "e2 not <= ab" + tag);
    o.expect(bool(operator_leq(ab, e2)) && !operator_leq(e2, ab), "operator_leq" + tag);
  }
  if (o.pass) o.detail << "ab <= e2 strictly, groups up to order " << kMaxGroupOrder;
}

void core_oracles(Outcome& o) {
  std::vector<UniversePtr> universes{corpus(CorpusKind::groups, kMaxGroupOrder),
                                     corpus(CorpusKind::rngs, 12),
                                     corpus(CorpusKind::quandles, kMaxQuandleOrder)};
  std::size_t algebras = 0, generated = 0, adjunction = 0;
  for (auto const& u : universes) {
    for (std::size_t m = 0; m < u->size(); ++m) {
      auto const& x = u->algebra(m);
      if (x.size() > 6) continue;
      ++algebras;
      auto scan = oracle::partition_scan(x);
      o.expect(con_lattice(x).elements() == scan, "con_lattice " + u->id(m));

      // Meet of containing congruences, from the scanned list.
      auto meet_of = [&](std::vector<ElemPair> const& ps) {
        std::optional<Congruence> best;
        for (auto const& c : scan) {
          bool all = true;
          for (auto [a, b] : ps) all = all && c.related(a, b);
          if (all) best = best ? meet(*best, c) : c;
        }
        return *best;
      };
      std::vector<ElemPair> singles;
      for (Elem a = 0; a < x.size(); ++a)
        for (Elem b = a + 1; b < x.size(); ++b) singles.emplace_back(a, b);
      for (std::size_t i = 0; i < singles.size(); ++i) {
        for (std::size_t j = i; j < singles.size(); ++j) {
          std::vector<ElemPair> ps{singles[i], singles[j]};
          o.expect(generated_congruence(x, ps) == meet_of(ps), "generated " + u->id(m));
          ++generated;
        }
      }
    }
    for (auto const* h : u->surjections()) {
      for (auto const& r : u->lattice(h->dom)) {
        auto img = image_congruence(h->hom, r);
        for (auto const& s : u->lattice(h->cod)) {
          bool const l = lifts(h->hom, r, s);
          o.expect(l == img.leq(s) && l == r.leq(preimage_congruence(h->hom, s)),
                   "adjunction " + u->id(h->dom) + " -> " + u->id(h->cod));
          ++adjunction;
        }
      }
    }
  }
  if (o.pass)
    o.detail << algebras << " algebras, " << generated << " generated, " << adjunction
             << " adjunction triples";
}

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "closure/reflector round trips", 120, roundtrips},
      {2, "axioms of reflection-derived operators", 0, axioms},
      {3, "minimal iff pushout-preserving on micro-universes", 60, lem_a},
      {4, "minimal iff closed under quotients", 0, birkhoff},
      {5, "built-in closures match oracle reflections", 0, oracle_agreement},
      {6, "operator order reverses subcategory inclusion", 0, antitone},
      {7, "congruence engine against brute force", 180, core_oracles},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    Outcome o;
    auto const start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (Error const& e) {
      o.pass = false;
      o.detail << "error: " << e.what();
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const in_time = c.limit_s == 0 || secs < c.limit_s;
    if (!in_time) o.detail << " (over " << c.limit_s << " s)";
    bool const pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s %d %s [%.2f s] %s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures;
}
