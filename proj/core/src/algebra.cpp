#include "epiclo/algebra.hpp"

#include "epiclo/error.hpp"
#include "epiclo/term.hpp"

#include <algorithm>
#include <set>

namespace epiclo {

Signature::Signature(std::vector<Operation> ops) : ops_(std::move(ops)) {
  std::set<std::string> names;
  for (auto const& op : ops_) {
    if (!names.insert(op.name).second) {
      throw Error(ErrorCode::InvalidInput,
                  "duplicate operation name '" + op.name + "'");
    }
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name == name) return i;
  }
  return std::nullopt;
}

std::string_view to_string(Variety v) noexcept {
  switch (v) {
    case Variety::group: return "group";
    case Variety::commutative_rng: return "commutative-rng";
    case Variety::quandle: return "quandle";
    case Variety::none: break;
  }
  return "none";
}

std::optional<Variety> variety_from_string(std::string_view s) noexcept {
  if (s == "group") return Variety::group;
  if (s == "commutative-rng") return Variety::commutative_rng;
  if (s == "quandle") return Variety::quandle;
  if (s == "none") return Variety::none;
  return std::nullopt;
}

Signature group_signature() {
  return Signature({{"mul", 2}, {"inv", 1}, {"e", 0}});
}

Signature rng_signature() {
  return Signature({{"add", 2}, {"neg", 1}, {"zero", 0}, {"mul", 2}});
}

Signature quandle_signature() {
  return Signature({{"rhd", 2}, {"rhd_inv", 2}});
}

struct FiniteAlgebra::Data {
  std::size_t size;
  Signature signature;
  std::vector<std::vector<Elem>> tables;
  Variety tag;
};

FiniteAlgebra::FiniteAlgebra(std::shared_ptr<Data const> data)
    : data_(std::move(data)) {}

std::size_t FiniteAlgebra::size() const noexcept { return data_->size; }

Signature const& FiniteAlgebra::signature() const noexcept {
  return data_->signature;
}

Variety FiniteAlgebra::tag() const noexcept { return data_->tag; }

std::span<Elem const> FiniteAlgebra::table(std::size_t op) const noexcept {
  return data_->tables[op];
}

std::size_t FiniteAlgebra::arity(std::size_t op) const noexcept {
  return data_->signature[op].arity;
}

std::size_t FiniteAlgebra::tuple_count(std::size_t op) const noexcept {
  return data_->tables[op].size();
}

Elem FiniteAlgebra::apply(std::size_t op, std::span<Elem const> args) const noexcept {
  std::size_t idx = 0;
  for (Elem a : args) idx = idx * data_->size + a;
  return data_->tables[op][idx];
}

std::size_t FiniteAlgebra::op_index(std::string_view name) const {
  auto i = data_->signature.find(name);
  if (!i) {
    throw Error(ErrorCode::UnknownOp,
                "operation '" + std::string(name) + "' not in signature");
  }
  return *i;
}

bool operator==(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->size == b.data_->size && a.data_->tag == b.data_->tag &&
         a.data_->signature == b.data_->signature &&
         a.data_->tables == b.data_->tables;
}

bool operator<(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  auto const& x = *a.data_;
  auto const& y = *b.data_;
  if (x.size != y.size) return x.size < y.size;
  auto names = [](Signature const& s) {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (auto const& op : s.ops()) out.emplace_back(op.name, op.arity);
    return out;
  };
  auto nx = names(x.signature);
  auto ny = names(y.signature);
  if (nx != ny) return nx < ny;
  if (x.tables != y.tables) return x.tables < y.tables;
  return x.tag < y.tag;
}

FiniteAlgebra FiniteAlgebra::assemble(std::size_t size, Signature signature,
                                      std::vector<std::vector<Elem>> tables,
                                      Variety tag) {
  return FiniteAlgebra(std::make_shared<Data const>(
      Data{size, std::move(signature), std::move(tables), tag}));
}

void decode_tuple(std::size_t index, std::size_t n, std::span<Elem> out) noexcept {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Elem>(index % n);
    index /= n;
  }
}

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

Signature expected_signature(Variety v) {
  switch (v) {
    case Variety::group: return group_signature();
    case Variety::commutative_rng: return rng_signature();
    case Variety::quandle: return quandle_signature();
    case Variety::none: break;
  }
  return {};
}

nlohmann::json assignment_json(std::vector<Elem> const& a) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < a.size(); ++i) {
    j["x" + std::to_string(i)] = a[i];
  }
  return j;
}

}  // namespace

FiniteAlgebra validate_algebra(AlgebraSpec const& raw) {
  std::size_t const n = raw.size;
  if (n == 0) {
    throw Error(ErrorCode::TableShape, "carrier must be non-empty");
  }
  if (raw.tables.size() != raw.signature.size()) {
    throw Error(ErrorCode::TableShape,
                "expected " + std::to_string(raw.signature.size()) +
                    " tables, got " + std::to_string(raw.tables.size()));
  }
  std::vector<std::vector<Elem>> tables;
  tables.reserve(raw.tables.size());
  for (std::size_t op = 0; op < raw.tables.size(); ++op) {
    auto const& name = raw.signature[op].name;
    std::size_t const expected = power(n, raw.signature[op].arity);
    auto const& t = raw.tables[op];
    if (t.size() != expected) {
      throw Error(ErrorCode::TableShape,
                  "table '" + name + "' has " + std::to_string(t.size()) +
                      " entries, expected " + std::to_string(expected));
    }
    std::vector<Elem> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] < 0 || static_cast<std::size_t>(t[i]) >= n) {
        std::vector<Elem> args(raw.signature[op].arity);
        decode_tuple(i, n, args);
        throw Error(ErrorCode::OutOfRange,
                    "table '" + name + "' entry " + std::to_string(t[i]) +
                        " outside [0, " + std::to_string(n) + ")",
                    {{"op", name}, {"args", args}, {"value", t[i]}});
      }
      out[i] = static_cast<Elem>(t[i]);
    }
    tables.push_back(std::move(out));
  }

  if (raw.tag != Variety::none) {
    auto expected = expected_signature(raw.tag);
    for (auto const& op : expected.ops()) {
      auto i = raw.signature.find(op.name);
      if (!i || raw.signature[*i].arity != op.arity) {
        throw Error(ErrorCode::TableShape,
                    std::string(to_string(raw.tag)) + " needs operation '" +
                        op.name + "' of arity " + std::to_string(op.arity));
      }
    }
  }

  auto algebra =
      FiniteAlgebra::assemble(n, raw.signature, std::move(tables), raw.tag);

  if (raw.tag != Variety::none) {
    auto axioms = variety_axioms(raw.tag);
    auto res = satisfies_equations(algebra, axioms);
    if (!res) {
      auto const& eq = axioms[res.equation];
      throw Error(ErrorCode::AxiomViolation,
                  std::string(to_string(raw.tag)) + " axiom fails: " + eq.label,
                  {{"axiom", eq.label}, {"assignment", assignment_json(res.assignment)}});
    }
  }
  return algebra;
}

}  // namespace epiclo
