#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epiclo {

// Carrier elements are 0..n-1.
using Elem = std::uint32_t;

struct Operation {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(Operation const&, Operation const&) = default;
};

class Signature {
 public:
  Signature() = default;
  // Throws InvalidInput when two operations share a name.
  explicit Signature(std::vector<Operation> ops);

  std::span<Operation const> ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  Operation const& operator[](std::size_t i) const { return ops_[i]; }
  std::optional<std::size_t> find(std::string_view name) const noexcept;

  friend bool operator==(Signature const&, Signature const&) = default;

 private:
  std::vector<Operation> ops_;
};

// Variety label; a tagged algebra is checked against the variety's axioms.
enum class Variety { none, group, commutative_rng, quandle };

std::string_view to_string(Variety v) noexcept;
std::optional<Variety> variety_from_string(std::string_view s) noexcept;

// Standard signatures used by the tagged varieties.
Signature group_signature();    // mul/2, inv/1, e/0
Signature rng_signature();      // add/2, neg/1, zero/0, mul/2
Signature quandle_signature();  // rhd/2, rhd_inv/2

// Unchecked input for validate_algebra. Tables are flattened row-major:
// entry for (a_0, ..., a_{k-1}) sits at ((a_0 * n + a_1) * n + ...) .
struct AlgebraSpec {
  std::size_t size = 0;
  Signature signature;
  std::vector<std::vector<std::int64_t>> tables;
  Variety tag = Variety::none;
};

// An immutable finite algebra. Copies share the underlying tables, so values
// are cheap to pass around and safe to share between threads.
class FiniteAlgebra {
 public:
  std::size_t size() const noexcept;
  Signature const& signature() const noexcept;
  Variety tag() const noexcept;

  std::span<Elem const> table(std::size_t op) const noexcept;
  std::size_t arity(std::size_t op) const noexcept;
  // Number of argument tuples of `op`, i.e. size()^arity.
  std::size_t tuple_count(std::size_t op) const noexcept;

  Elem apply(std::size_t op, std::span<Elem const> args) const noexcept;
  Elem apply(std::size_t op) const noexcept { return table(op)[0]; }
  Elem apply(std::size_t op, Elem a) const noexcept { return table(op)[a]; }
  Elem apply(std::size_t op, Elem a, Elem b) const noexcept {
    return table(op)[a * size() + b];
  }

  // Index of a named operation; throws UnknownOp.
  std::size_t op_index(std::string_view name) const;

  // Structural equality (size, signature, tables, tag).
  friend bool operator==(FiniteAlgebra const& a, FiniteAlgebra const& b);
  // Deterministic total order: size, then signature names, then tables.
  friend bool operator<(FiniteAlgebra const& a, FiniteAlgebra const& b);

  // Used by validate_algebra and by constructions whose output is valid by
  // construction (quotients, products). Entries must already be in range.
  static FiniteAlgebra assemble(std::size_t size, Signature signature,
                                std::vector<std::vector<Elem>> tables,
                                Variety tag);

 private:
  struct Data;
  explicit FiniteAlgebra(std::shared_ptr<Data const> data);
  std::shared_ptr<Data const> data_;
};

// Checks shape, range and (when tagged) the variety axioms.
// Errors: TableShape, OutOfRange, AxiomViolation.
FiniteAlgebra validate_algebra(AlgebraSpec const& raw);

// Decode a flat row-major tuple index into its arguments.
void decode_tuple(std::size_t index, std::size_t n, std::span<Elem> out) noexcept;

}  // namespace epiclo
