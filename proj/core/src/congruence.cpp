#include "epiclo/congruence.hpp"

#include "epiclo/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace epiclo {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Elem{0});
  }

  Elem find(Elem x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true if two classes were merged.
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::vector<Elem> labels() {
    std::vector<Elem> out(parent_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = find(static_cast<Elem>(i));
    return out;
  }

 private:
  std::vector<Elem> parent_;
  std::vector<std::size_t> size_;
};

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::vector<Elem> canonical_labels(std::span<Elem const> labels) {
  std::vector<Elem> out(labels.size());
  std::vector<std::pair<Elem, Elem>> seen;  // (old label, new id)
  Elem next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](auto const& p) { return p.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], next);
      out[i] = next++;
    } else {
      out[i] = it->second;
    }
  }
  return out;
}

std::optional<CompatibilityWitness> find_incompatibility(
    FiniteAlgebra const& algebra, std::span<Elem const> labels) {
  std::size_t const n = algebra.size();
  // Changing one coordinate at a time suffices by transitivity.
  for (std::size_t op = 0; op < algebra.signature().size(); ++op) {
    std::size_t const k = algebra.arity(op);
    auto table = algebra.table(op);
    std::vector<Elem> args(k);
    for (std::size_t t = 0; t < table.size(); ++t) {
      decode_tuple(t, n, args);
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t const stride = power(n, k - 1 - i);
        for (Elem b = 0; b < n; ++b) {
          if (b == args[i] || labels[b] != labels[args[i]]) continue;
          std::size_t const other = t + (b * stride) - (args[i] * stride);
          if (labels[table[t]] != labels[table[other]]) {
            auto args_b = args;
            args_b[i] = b;
            return CompatibilityWitness{op, args, args_b};
          }
        }
      }
    }
  }
  return std::nullopt;
}

Congruence::Congruence(FiniteAlgebra algebra, std::vector<Elem> canonical)
    : algebra_(std::move(algebra)), labels_(std::move(canonical)) {
  block_count_ = labels_.empty()
                     ? 0
                     : *std::max_element(labels_.begin(), labels_.end()) + 1;
}

Congruence Congruence::from_labels(FiniteAlgebra const& algebra,
                                   std::span<Elem const> labels) {
  if (labels.size() != algebra.size()) {
    throw Error(ErrorCode::TableShape, "partition size differs from carrier size");
  }
  auto canonical = canonical_labels(labels);
  if (auto w = find_incompatibility(algebra, canonical)) {
    throw Error(ErrorCode::NotCongruence,
                "partition is not compatible with '" +
                    algebra.signature()[w->op].name + "'",
                {{"op", algebra.signature()[w->op].name},
                 {"args_a", w->args_a},
                 {"args_b", w->args_b}});
  }
  return Congruence(algebra, std::move(canonical));
}

Congruence Congruence::from_blocks(FiniteAlgebra const& algebra,
                                   std::vector<std::vector<Elem>> const& blocks) {
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> labels(algebra.size(), unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw Error(ErrorCode::InvalidInput, "empty block in partition");
    }
    for (Elem x : blocks[b]) {
      if (x >= algebra.size()) {
        throw Error(ErrorCode::OutOfRange,
                    "block element " + std::to_string(x) + " outside carrier");
      }
      if (labels[x] != unset) {
        throw Error(ErrorCode::InvalidInput,
                    "element " + std::to_string(x) + " appears in two blocks");
      }
      labels[x] = static_cast<Elem>(b);
    }
  }
  for (std::size_t x = 0; x < labels.size(); ++x) {
    if (labels[x] == unset) {
      throw Error(ErrorCode::InvalidInput,
                  "element " + std::to_string(x) + " missing from partition");
    }
  }
  return from_labels(algebra, labels);
}

Congruence Congruence::trusted(FiniteAlgebra const& algebra,
                               std::span<Elem const> labels) {
  return Congruence(algebra, canonical_labels(labels));
}

Congruence Congruence::identity(FiniteAlgebra const& algebra) {
  std::vector<Elem> labels(algebra.size());
  std::iota(labels.begin(), labels.end(), Elem{0});
  return Congruence(algebra, std::move(labels));
}

Congruence Congruence::total(FiniteAlgebra const& algebra) {
  return Congruence(algebra, std::vector<Elem>(algebra.size(), 0));
}

std::vector<std::vector<Elem>> Congruence::blocks() const {
  std::vector<std::vector<Elem>> out(block_count_);
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    out[labels_[x]].push_back(static_cast<Elem>(x));
  }
  return out;
}

std::vector<Elem> Congruence::representatives() const {
  std::vector<Elem> reps(block_count_);
  // Labels are canonical, so the first occurrence of each id is its least
  // element.
  Elem next = 0;
  for (std::size_t x = 0; x < labels_.size() && next < block_count_; ++x) {
    if (labels_[x] == next) reps[next++] = static_cast<Elem>(x);
  }
  return reps;
}

void require_same_fibre(Congruence const& a, Congruence const& b) {
  if (!(a.algebra() == b.algebra())) {
    throw Error(ErrorCode::FibreMismatch,
                "congruences live on different algebras");
  }
}

bool Congruence::leq(Congruence const& other) const {
  require_same_fibre(*this, other);
  // Each block of *this must map to a single block of other.
  std::vector<Elem> target(block_count_, static_cast<Elem>(-1));
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    Elem& t = target[labels_[x]];
    if (t == static_cast<Elem>(-1)) {
      t = other.labels_[x];
    } else if (t != other.labels_[x]) {
      return false;
    }
  }
  return true;
}

Congruence kernel_congruence(Homomorphism const& f) {
  return Congruence::trusted(f.dom(), f.map());
}

Quotient quotient(FiniteAlgebra const& x, Congruence const& r) {
  if (!(r.algebra() == x)) {
    throw Error(ErrorCode::FibreMismatch, "congruence is not on this algebra");
  }
  std::size_t const m = r.block_count();
  auto reps = r.representatives();
  std::vector<std::vector<Elem>> tables;
  tables.reserve(x.signature().size());
  for (std::size_t op = 0; op < x.signature().size(); ++op) {
    std::size_t const k = x.arity(op);
    std::vector<Elem> table(power(m, k));
    std::vector<Elem> blocks(k);
    std::vector<Elem> args(k);
    for (std::size_t t = 0; t < table.size(); ++t) {
      decode_tuple(t, m, blocks);
      for (std::size_t i = 0; i < k; ++i) args[i] = reps[blocks[i]];
      table[t] = r.block_of(x.apply(op, args));
    }
    tables.push_back(std::move(table));
  }
  auto q = FiniteAlgebra::assemble(m, x.signature(), std::move(tables), x.tag());
  std::vector<Elem> map(r.labels().begin(), r.labels().end());
  return Quotient{q, Homomorphism(x, q, std::move(map))};
}

Congruence generated_congruence(FiniteAlgebra const& x,
                                std::span<ElemPair const> pairs) {
  std::size_t const n = x.size();
  for (auto const& [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::OutOfRange, "pair element outside carrier",
                  {{"pair", {a, b}}});
    }
  }
  UnionFind uf(n);
  std::deque<ElemPair> work(pairs.begin(), pairs.end());
  std::vector<Elem> args;
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    // Translate the new pair through every operation with one coordinate
    // varied.
    for (std::size_t op = 0; op < x.signature().size(); ++op) {
      std::size_t const k = x.arity(op);
      auto table = x.table(op);
      args.resize(k);
      for (std::size_t t = 0; t < table.size(); ++t) {
        decode_tuple(t, n, args);
        for (std::size_t i = 0; i < k; ++i) {
          if (args[i] != a) continue;
          std::size_t const stride = power(n, k - 1 - i);
          std::size_t const other = t + b * stride - a * stride;
          if (table[t] != table[other]) work.emplace_back(table[t], table[other]);
        }
      }
    }
  }
  return Congruence::trusted(x, uf.labels());
}

Congruence principal_congruence(FiniteAlgebra const& x, Elem a, Elem b) {
  ElemPair const p{a, b};
  return generated_congruence(x, std::span<ElemPair const>(&p, 1));
}

Congruence join(Congruence const& r, Congruence const& s) {
  require_same_fibre(r, s);
  // The join of two congruences is the transitive closure of their union.
  std::size_t const n = r.algebra().size();
  UnionFind uf(n);
  std::vector<Elem> first_r(r.block_count(), static_cast<Elem>(-1));
  std::vector<Elem> first_s(s.block_count(), static_cast<Elem>(-1));
  for (Elem x = 0; x < n; ++x) {
    Elem& fr = first_r[r.block_of(x)];
    if (fr == static_cast<Elem>(-1)) fr = x; else uf.unite(fr, x);
    Elem& fs = first_s[s.block_of(x)];
    if (fs == static_cast<Elem>(-1)) fs = x; else uf.unite(fs, x);
  }
  return Congruence::trusted(r.algebra(), uf.labels());
}

Congruence meet(Congruence const& r, Congruence const& s) {
  require_same_fibre(r, s);
  std::size_t const n = r.algebra().size();
  std::vector<Elem> labels(n);
  std::size_t const width = s.block_count();
  for (Elem x = 0; x < n; ++x) {
    labels[x] = static_cast<Elem>(r.block_of(x) * width + s.block_of(x));
  }
  return Congruence::trusted(r.algebra(), labels);
}

CongruenceLattice::CongruenceLattice(FiniteAlgebra algebra,
                                     std::vector<Congruence> sorted_elements)
    : algebra_(std::move(algebra)), elements_(std::move(sorted_elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].is_identity()) bottom_ = i;
    if (elements_[i].is_total()) top_ = i;
  }
}

std::size_t CongruenceLattice::index_of(Congruence const& r) const {
  if (!(r.algebra() == algebra_)) {
    throw Error(ErrorCode::FibreMismatch, "congruence is not on this algebra");
  }
  auto it = std::lower_bound(elements_.begin(), elements_.end(), r);
  if (it == elements_.end() || !(*it == r)) {
    throw Error(ErrorCode::NotCongruence, "congruence missing from lattice");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

CongruenceLattice con_lattice(FiniteAlgebra const& x) {
  std::size_t const n = x.size();
  std::vector<Congruence> principals;
  std::set<std::vector<Elem>> seen_principal;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      auto p = principal_congruence(x, a, b);
      std::vector<Elem> key(p.labels().begin(), p.labels().end());
      if (seen_principal.insert(std::move(key)).second) principals.push_back(p);
    }
  }

  std::set<std::vector<Elem>> seen;
  std::vector<Congruence> found;
  std::deque<std::size_t> work;
  auto add = [&](Congruence c) {
    std::vector<Elem> key(c.labels().begin(), c.labels().end());
    if (!seen.insert(std::move(key)).second) return;
    found.push_back(std::move(c));
    work.push_back(found.size() - 1);
  };
  add(Congruence::identity(x));
  while (!work.empty()) {
    std::size_t i = work.front();
    work.pop_front();
    for (auto const& p : principals) {
      add(join(found[i], p));
    }
  }
  std::sort(found.begin(), found.end());
  return CongruenceLattice(x, std::move(found));
}

}  // namespace epiclo
