#include "epiclo/homomorphism.hpp"

#include "epiclo/error.hpp"

#include <algorithm>

namespace epiclo {

bool same_signature(FiniteAlgebra const& x, FiniteAlgebra const& y) noexcept {
  return x.signature() == y.signature();
}

namespace {

void require_same_signature(FiniteAlgebra const& x, FiniteAlgebra const& y) {
  if (!same_signature(x, y)) {
    throw Error(ErrorCode::SignatureMismatch,
                "algebras have different signatures");
  }
}

bool image_is_full(std::vector<Elem> const& map, std::size_t n) {
  std::vector<bool> hit(n, false);
  std::size_t count = 0;
  for (Elem v : map) {
    if (!hit[v]) {
      hit[v] = true;
      ++count;
    }
  }
  return count == n;
}

}  // namespace

Homomorphism::Homomorphism(Trusted, FiniteAlgebra dom, FiniteAlgebra cod,
                           std::vector<Elem> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  surjective_ = image_is_full(map_, cod_.size());
}

Homomorphism::Homomorphism(FiniteAlgebra dom, FiniteAlgebra cod,
                           std::vector<Elem> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  require_same_signature(dom_, cod_);
  if (map_.size() != dom_.size()) {
    throw Error(ErrorCode::TableShape, "map length differs from domain size");
  }
  for (Elem v : map_) {
    if (v >= cod_.size()) {
      throw Error(ErrorCode::OutOfRange, "map value outside codomain",
                  {{"value", v}});
    }
  }
  std::size_t const n = dom_.size();
  for (std::size_t op = 0; op < dom_.signature().size(); ++op) {
    std::vector<Elem> args(dom_.arity(op));
    std::vector<Elem> image(args.size());
    auto table = dom_.table(op);
    for (std::size_t t = 0; t < table.size(); ++t) {
      decode_tuple(t, n, args);
      for (std::size_t i = 0; i < args.size(); ++i) image[i] = map_[args[i]];
      if (map_[table[t]] != cod_.apply(op, image)) {
        throw Error(ErrorCode::NotHomomorphism,
                    "map does not preserve '" + dom_.signature()[op].name + "'",
                    {{"op", dom_.signature()[op].name}, {"args", args}});
      }
    }
  }
  surjective_ = image_is_full(map_, cod_.size());
}

Homomorphism Homomorphism::identity(FiniteAlgebra const& a) {
  std::vector<Elem> map(a.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Elem>(i);
  return Homomorphism(Trusted{}, a, a, std::move(map));
}

bool Homomorphism::injective() const noexcept {
  auto sorted = map_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
  if (!(f.cod() == g.dom())) {
    throw Error(ErrorCode::FibreMismatch, "composing non-composable homs");
  }
  std::vector<Elem> map(f.map().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g(f(i));
  return Homomorphism(Homomorphism::Trusted{}, f.dom(), g.cod(), std::move(map));
}

Homomorphism Homomorphism::inverse() const {
  if (map_.size() != cod_.size() || !surjective_) {
    throw Error(ErrorCode::PreconditionFailed, "hom is not bijective");
  }
  std::vector<Elem> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<Elem>(i);
  return Homomorphism(Trusted{}, cod_, dom_, std::move(inv));
}

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

// Backtracking search for structure-preserving maps. Each branch assigns the
// smallest unassigned element; assignments are then propagated through every
// table entry whose arguments are all assigned, which forces the image of the
// result.
class HomSearch {
 public:
  HomSearch(FiniteAlgebra const& x, FiniteAlgebra const& y, bool injective)
      : x_(x), y_(y), injective_(injective) {}

  // `emit` returns false to stop the search.
  template <typename Emit>
  void run(Emit&& emit) {
    std::vector<Elem> map(x_.size(), kUnset);
    std::vector<bool> used(y_.size(), false);
    if (!propagate(map, used)) return;
    search(map, used, emit);
  }

 private:
  bool assign(std::vector<Elem>& map, std::vector<bool>& used, Elem a, Elem v) {
    if (map[a] != kUnset) return map[a] == v;
    if (injective_) {
      if (used[v]) return false;
      used[v] = true;
    }
    map[a] = v;
    return true;
  }

  bool propagate(std::vector<Elem>& map, std::vector<bool>& used) {
    std::size_t const n = x_.size();
    bool changed = true;
    std::vector<Elem> args;
    std::vector<Elem> image;
    while (changed) {
      changed = false;
      for (std::size_t op = 0; op < x_.signature().size(); ++op) {
        std::size_t const k = x_.arity(op);
        args.resize(k);
        image.resize(k);
        auto table = x_.table(op);
        for (std::size_t t = 0; t < table.size(); ++t) {
          decode_tuple(t, n, args);
          bool ready = true;
          for (std::size_t i = 0; i < k; ++i) {
            image[i] = map[args[i]];
            if (image[i] == kUnset) {
              ready = false;
              break;
            }
          }
          if (!ready) continue;
          Elem const target = y_.apply(op, image);
          Elem const result = table[t];
          if (map[result] == kUnset) {
            if (!assign(map, used, result, target)) return false;
            changed = true;
          } else if (map[result] != target) {
            return false;
          }
        }
      }
    }
    return true;
  }

  template <typename Emit>
  bool search(std::vector<Elem>& map, std::vector<bool>& used, Emit& emit) {
    auto it = std::find(map.begin(), map.end(), kUnset);
    if (it == map.end()) return emit(map);
    Elem const a = static_cast<Elem>(it - map.begin());
    for (Elem v = 0; v < y_.size(); ++v) {
      if (injective_ && used[v]) continue;
      auto next_map = map;
      auto next_used = used;
      if (!assign(next_map, next_used, a, v)) continue;
      if (!propagate(next_map, next_used)) continue;
      if (!search(next_map, next_used, emit)) return false;
    }
    return true;
  }

  FiniteAlgebra const& x_;
  FiniteAlgebra const& y_;
  bool injective_;
};

}  // namespace

std::vector<Homomorphism> enumerate_homs(FiniteAlgebra const& x,
                                         FiniteAlgebra const& y) {
  require_same_signature(x, y);
  std::vector<std::vector<Elem>> maps;
  HomSearch(x, y, false).run([&](std::vector<Elem> const& m) {
    maps.push_back(m);
    return true;
  });
  std::sort(maps.begin(), maps.end());
  std::vector<Homomorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) {
    out.push_back(Homomorphism(Homomorphism::Trusted{}, x, y, std::move(m)));
  }
  return out;
}

std::vector<Homomorphism> enumerate_surjections(FiniteAlgebra const& x,
                                                FiniteAlgebra const& y) {
  if (y.size() > x.size()) {
    require_same_signature(x, y);
    return {};
  }
  auto homs = enumerate_homs(x, y);
  std::erase_if(homs, [](Homomorphism const& h) { return !h.surjective(); });
  return homs;
}

std::optional<Homomorphism> find_isomorphism(FiniteAlgebra const& x,
                                             FiniteAlgebra const& y) {
  if (!same_signature(x, y) || x.size() != y.size()) return std::nullopt;
  std::optional<std::vector<Elem>> found;
  HomSearch(x, y, true).run([&](std::vector<Elem> const& m) {
    found = m;
    return false;
  });
  if (!found) return std::nullopt;
  return Homomorphism(Homomorphism::Trusted{}, x, y, std::move(*found));
}

}  // namespace epiclo
