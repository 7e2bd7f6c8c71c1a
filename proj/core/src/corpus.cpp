#include "epiclo/corpus.hpp"

#include "epiclo/error.hpp"
#include "epiclo/homomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace epiclo {

std::string_view to_string(CorpusKind k) noexcept {
  switch (k) {
    case CorpusKind::groups: return "groups";
    case CorpusKind::rngs: return "rngs";
    case CorpusKind::quandles: return "quandles";
  }
  return "groups";
}

std::optional<CorpusKind> corpus_kind_from_string(std::string_view s) noexcept {
  if (s == "groups") return CorpusKind::groups;
  if (s == "rngs") return CorpusKind::rngs;
  if (s == "quandles") return CorpusKind::quandles;
  return std::nullopt;
}

namespace {

using Table = std::vector<Elem>;
using Perm = std::vector<Elem>;

FiniteAlgebra build(std::size_t n, Signature sig, std::vector<Table> const& tables,
                    Variety tag) {
  AlgebraSpec spec{n, std::move(sig), {}, tag};
  for (auto const& t : tables) spec.tables.emplace_back(t.begin(), t.end());
  return validate_algebra(spec);
}

FiniteAlgebra group_from_mul(std::size_t n, Table const& mul) {
  Table inv(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (mul[a * n + b] == 0) inv[a] = b;
    }
  }
  return build(n, group_signature(), {mul, inv, Table{0}}, Variety::group);
}

FiniteAlgebra quandle_from_columns(std::vector<Perm> const& cols) {
  std::size_t const n = cols.size();
  Table rhd(n * n), rhd_inv(n * n);
  for (Elem b = 0; b < n; ++b) {
    for (Elem x = 0; x < n; ++x) {
      rhd[x * n + b] = cols[b][x];
      rhd_inv[cols[b][x] * n + b] = x;
    }
  }
  return build(n, quandle_signature(), {rhd, rhd_inv}, Variety::quandle);
}

Perm compose(Perm const& p, Perm const& q) {  // p after q
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm cycle_perm(std::size_t m, std::vector<std::vector<Elem>> const& cycles) {
  Perm p(m);
  std::iota(p.begin(), p.end(), Elem{0});
  for (auto const& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  }
  return p;
}

void require_positive(std::size_t n, char const* what) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, std::string(what) + " needs n >= 1");
}

}  // namespace

FiniteAlgebra cyclic_group(std::size_t n) {
  require_positive(n, "cyclic_group");
  Table mul(n * n), inv(n);
  for (Elem a = 0; a < n; ++a) {
    inv[a] = static_cast<Elem>((n - a) % n);
    for (Elem b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return build(n, group_signature(), {mul, inv, Table{0}}, Variety::group);
}

FiniteAlgebra zn_rng(std::size_t n) {
  require_positive(n, "zn_rng");
  Table add(n * n), mul(n * n), neg(n);
  for (Elem a = 0; a < n; ++a) {
    neg[a] = static_cast<Elem>((n - a) % n);
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  return build(n, rng_signature(), {add, neg, Table{0}, mul}, Variety::commutative_rng);
}

FiniteAlgebra group_from_permutations(std::vector<std::vector<Elem>> const& generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidInput, "no generators");
  std::size_t const m = generators.front().size();
  for (auto const& g : generators) {
    Perm s = g;
    std::sort(s.begin(), s.end());
    bool ok = g.size() == m;
    for (std::size_t i = 0; ok && i < m; ++i) ok = s[i] == i;
    if (!ok) throw Error(ErrorCode::InvalidInput, "generator is not a permutation");
  }
  Perm id(m);
  std::iota(id.begin(), id.end(), Elem{0});
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const& p : frontier) {
      for (auto const& g : generators) {
        auto q = compose(p, g);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Perm> elems(seen.begin(), seen.end());
  std::size_t const n = elems.size();
  std::map<Perm, Elem> index;
  for (Elem i = 0; i < n; ++i) index.emplace(elems[i], i);
  Table mul(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) mul[a * n + b] = index.at(compose(elems[a], elems[b]));
  }
  return group_from_mul(n, mul);
}

FiniteAlgebra dihedral_group(std::size_t k) {
  if (k < 3) throw Error(ErrorCode::InvalidInput, "dihedral_group needs k >= 3");
  Perm rot(k), ref(k);
  for (Elem i = 0; i < k; ++i) {
    rot[i] = static_cast<Elem>((i + 1) % k);
    ref[i] = static_cast<Elem>((k - i) % k);
  }
  return group_from_permutations({rot, ref});
}

FiniteAlgebra quaternion_group() {
  return group_from_permutations({cycle_perm(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                                  cycle_perm(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})});
}

FiniteAlgebra dicyclic12_group() {
  return group_from_permutations(
      {cycle_perm(7, {{0, 1, 2}}), cycle_perm(7, {{1, 2}, {3, 4, 5, 6}})});
}

FiniteAlgebra alternating4_group() {
  return group_from_permutations(
      {cycle_perm(4, {{0, 1, 2}}), cycle_perm(4, {{0, 1}, {2, 3}})});
}

FiniteAlgebra direct_product(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  if (!same_signature(a, b)) {
    throw Error(ErrorCode::SignatureMismatch, "direct product of different signatures");
  }
  std::size_t const na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Table> tables;
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    std::size_t const k = a.arity(op);
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= n;
    Table t(count);
    std::vector<Elem> args(k), xs(k), ys(k);
    for (std::size_t idx = 0; idx < count; ++idx) {
      decode_tuple(idx, n, args);
      for (std::size_t i = 0; i < k; ++i) {
        xs[i] = static_cast<Elem>(args[i] / nb);
        ys[i] = static_cast<Elem>(args[i] % nb);
      }
      t[idx] = static_cast<Elem>(a.apply(op, xs) * nb + b.apply(op, ys));
    }
    tables.push_back(std::move(t));
  }
  Variety const tag = a.tag() == b.tag() ? a.tag() : Variety::none;
  return build(n, a.signature(), tables, tag);
}

FiniteAlgebra trivial_quandle(std::size_t n) {
  require_positive(n, "trivial_quandle");
  std::vector<Perm> cols(n, Perm(n));
  for (auto& c : cols) std::iota(c.begin(), c.end(), Elem{0});
  return quandle_from_columns(cols);
}

FiniteAlgebra dihedral_quandle(std::size_t n) {
  require_positive(n, "dihedral_quandle");
  std::vector<Perm> cols(n, Perm(n));
  for (Elem b = 0; b < n; ++b) {
    for (Elem x = 0; x < n; ++x) cols[b][x] = static_cast<Elem>((2 * b + n - x) % n);
  }
  return quandle_from_columns(cols);
}

std::vector<FiniteAlgebra> isomorphism_classes(std::vector<FiniteAlgebra> algebras) {
  std::map<std::vector<std::size_t>, std::vector<FiniteAlgebra>> buckets;
  std::vector<FiniteAlgebra> out;
  for (auto& a : algebras) {
    auto& bucket = buckets[iso_invariant(a)];
    bool const dup = std::any_of(bucket.begin(), bucket.end(), [&](auto const& r) {
      return r == a || find_isomorphism(a, r).has_value();
    });
    if (dup) continue;
    bucket.push_back(a);
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

// Cayley tables with identity 0, filled row by row as a Latin square, then
// filtered for associativity.
class GroupSearch {
 public:
  explicit GroupSearch(std::size_t n)
      : n_(n), mul_(n * n, kFree), row_used_(n * n, false), col_used_(n * n, false) {
    for (Elem a = 0; a < n; ++a) {
      place(0, a, a);
      if (a != 0) place(a, 0, a);
    }
  }

  std::vector<FiniteAlgebra> run() {
    step(0);
    return isomorphism_classes(std::move(found_));
  }

 private:
  static constexpr Elem kFree = ~Elem{0};

  void place(Elem a, Elem b, Elem v) {
    mul_[a * n_ + b] = v;
    row_used_[a * n_ + v] = true;
    col_used_[b * n_ + v] = true;
  }
  void unplace(Elem a, Elem b, Elem v) {
    mul_[a * n_ + b] = kFree;
    row_used_[a * n_ + v] = false;
    col_used_[b * n_ + v] = false;
  }

  bool associative() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c)
          if (mul_[mul_[a * n_ + b] * n_ + c] != mul_[a * n_ + mul_[b * n_ + c]])
            return false;
    return true;
  }

  void step(std::size_t cell) {
    while (cell < n_ * n_ && mul_[cell] != kFree) ++cell;
    if (cell >= n_ * n_) {
      if (associative()) found_.push_back(group_from_mul(n_, mul_));
      return;
    }
    Elem const a = static_cast<Elem>(cell / n_), b = static_cast<Elem>(cell % n_);
    for (Elem v = 0; v < n_; ++v) {
      if (row_used_[a * n_ + v] || col_used_[b * n_ + v]) continue;
      place(a, b, v);
      step(cell + 1);
      unplace(a, b, v);
    }
  }

  std::size_t n_;
  Table mul_;
  std::vector<bool> row_used_, col_used_;
  std::vector<FiniteAlgebra> found_;
};

// Quandles as columns R_b = (x -> x ◁ b): each R_b is a permutation fixing b,
// and self-distributivity reads R_c ∘ R_b = R_{R_c(b)} ∘ R_c.
class QuandleSearch {
 public:
  explicit QuandleSearch(std::size_t n) : n_(n), cols_(n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), Elem{0});
    do perms_.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<FiniteAlgebra> run() {
    step(0);
    return isomorphism_classes(std::move(found_));
  }

 private:
  // Checks every distributivity instance whose three columns are known.
  bool consistent(std::size_t k) const {
    for (std::size_t c = 0; c <= k; ++c) {
      for (std::size_t b = 0; b <= k; ++b) {
        std::size_t const d = cols_[c][b];
        if (d > k) continue;
        for (std::size_t x = 0; x < n_; ++x) {
          if (cols_[c][cols_[b][x]] != cols_[d][cols_[c][x]]) return false;
        }
      }
    }
    return true;
  }

  void step(std::size_t k) {
    if (k == n_) {
      found_.push_back(quandle_from_columns(cols_));
      return;
    }
    for (auto const& p : perms_) {
      if (p[k] != k) continue;
      cols_[k] = p;
      if (consistent(k)) step(k + 1);
    }
  }

  std::size_t n_;
  std::vector<Perm> perms_;
  std::vector<Perm> cols_;
  std::vector<FiniteAlgebra> found_;
};

}  // namespace

std::vector<FiniteAlgebra> enumerate_groups(std::size_t n) {
  require_positive(n, "enumerate_groups");
  if (n > kMaxExhaustiveGroupOrder) {
    throw Error(ErrorCode::SizeTooLarge, "group enumeration is limited to order " +
                                             std::to_string(kMaxExhaustiveGroupOrder),
                {{"n", n}});
  }
  return GroupSearch(n).run();
}

std::vector<FiniteAlgebra> enumerate_quandles(std::size_t n) {
  require_positive(n, "enumerate_quandles");
  if (n > kMaxQuandleOrder) {
    throw Error(ErrorCode::SizeTooLarge, "quandle enumeration is limited to order " +
                                             std::to_string(kMaxQuandleOrder),
                {{"n", n}});
  }
  return QuandleSearch(n).run();
}

std::vector<FiniteAlgebra> classified_groups(std::size_t max_order) {
  if (max_order > kMaxGroupOrder) {
    throw Error(ErrorCode::SizeTooLarge,
                "no group list beyond order " + std::to_string(kMaxGroupOrder),
                {{"max_size", max_order}});
  }
  std::vector<FiniteAlgebra> out;
  auto add = [&](std::size_t order, auto make) {
    if (order <= max_order) out.push_back(make());
  };
  for (std::size_t n = 1; n <= max_order; ++n) out.push_back(cyclic_group(n));
  auto z = [](std::size_t n) { return cyclic_group(n); };
  add(4, [&] { return direct_product(z(2), z(2)); });
  add(6, [] { return dihedral_group(3); });
  add(8, [&] { return direct_product(z(4), z(2)); });
  add(8, [&] { return direct_product(direct_product(z(2), z(2)), z(2)); });
  add(8, [] { return dihedral_group(4); });
  add(8, [] { return quaternion_group(); });
  add(9, [&] { return direct_product(z(3), z(3)); });
  add(10, [] { return dihedral_group(5); });
  add(12, [&] { return direct_product(z(6), z(2)); });
  add(12, [] { return dihedral_group(6); });
  add(12, [] { return dicyclic12_group(); });
  add(12, [] { return alternating4_group(); });
  return out;
}

UniversePtr corpus(CorpusKind kind, std::size_t max_size) {
  require_positive(max_size, "corpus");
  std::vector<FiniteAlgebra> algebras;
  switch (kind) {
    case CorpusKind::groups:
      if (max_size <= kMaxExhaustiveGroupOrder) {
        for (std::size_t n = 1; n <= max_size; ++n) {
          auto g = enumerate_groups(n);
          algebras.insert(algebras.end(), g.begin(), g.end());
        }
      } else {
        algebras = classified_groups(max_size);
      }
      break;
    case CorpusKind::rngs:
      if (max_size > kMaxRngOrder) {
        throw Error(ErrorCode::SizeTooLarge,
                    "rng corpus is limited to Z_" + std::to_string(kMaxRngOrder),
                    {{"max_size", max_size}});
      }
      for (std::size_t n = 1; n <= max_size; ++n) algebras.push_back(zn_rng(n));
      break;
    case CorpusKind::quandles:
      for (std::size_t n = 1; n <= max_size; ++n) {
        auto q = enumerate_quandles(n);
        algebras.insert(algebras.end(), q.begin(), q.end());
      }
      break;
  }
  return Universe::quotient_closure(std::move(algebras), std::string(to_string(kind)));
}

}  // namespace epiclo
