#include "epiclo/quotient_form.hpp"

#include "epiclo/error.hpp"

namespace epiclo {

namespace {

void require_on(Congruence const& c, FiniteAlgebra const& a, char const* what) {
  if (!(c.algebra() == a)) {
    throw Error(ErrorCode::FibreMismatch,
                std::string("congruence is not on the ") + what + " of the hom");
  }
}

}  // namespace

bool lifts(Homomorphism const& f, Congruence const& r, Congruence const& s) {
  require_on(r, f.dom(), "domain");
  require_on(s, f.cod(), "codomain");
  // R-blocks must land in single S-blocks.
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> target(r.block_count(), unset);
  for (Elem x = 0; x < f.dom().size(); ++x) {
    Elem& t = target[r.block_of(x)];
    Elem const b = s.block_of(f(x));
    if (t == unset) {
      t = b;
    } else if (t != b) {
      return false;
    }
  }
  return true;
}

Congruence preimage_congruence(Homomorphism const& f, Congruence const& s) {
  require_on(s, f.cod(), "codomain");
  std::vector<Elem> labels(f.dom().size());
  for (Elem x = 0; x < labels.size(); ++x) labels[x] = s.block_of(f(x));
  return Congruence::trusted(f.dom(), labels);
}

Congruence image_congruence(Homomorphism const& f, Congruence const& r) {
  require_on(r, f.dom(), "domain");
  if (!f.surjective()) {
    throw Error(ErrorCode::NotInE, "image congruence needs a surjective hom",
                {{"map", f.map()}});
  }
  std::vector<ElemPair> pairs;
  auto reps = r.representatives();
  for (Elem x = 0; x < f.dom().size(); ++x) {
    Elem const rep = reps[r.block_of(x)];
    if (rep != x && f(rep) != f(x)) pairs.emplace_back(f(rep), f(x));
  }
  return generated_congruence(f.cod(), pairs);
}

bool right_universalizer_check(Homomorphism const& f) noexcept {
  return f.surjective();
}

}  // namespace epiclo
