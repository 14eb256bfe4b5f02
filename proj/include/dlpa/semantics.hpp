// Brute-force semantics: the reference every tableau verdict is checked
// against. Nothing here is clever on purpose.
#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "dlpa/measures.hpp"
#include "dlpa/syntax.hpp"

namespace dlpa {

/// A DL-PA model: the set of atoms that are true.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(AtomSet trues) : trues_(std::move(trues)) {}
  Valuation(std::initializer_list<std::string_view> names);

  bool contains(const Atom& p) const { return trues_.count(p) != 0; }
  void insert(const Atom& p) { trues_.insert(p); }
  void erase(const Atom& p) { trues_.erase(p); }
  const AtomSet& atoms() const noexcept { return trues_; }
  bool empty() const noexcept { return trues_.empty(); }

  /// The valuation restricted to `universe`.
  Valuation restrict_to(const AtomSet& universe) const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend auto operator<=>(const Valuation&, const Valuation&) = default;

 private:
  AtomSet trues_;
};

/// Comma-separated atom names; `{}`, `{p,q}` and the empty string are also
/// accepted. Throws ParseError.
Valuation parse_valuation(std::string_view text);
/// `{}` for the empty valuation, `p,q` otherwise.
std::string format_valuation(const Valuation& v);

/// A relation between valuations over a finite universe of atoms.
struct Relation {
  AtomSet universe;
  std::set<std::pair<Valuation, Valuation>> pairs;
};

Valuation update(const Valuation& v, const Assignment& a);
Valuation apply_trace(const Valuation& v, const Trace& t);

/// Truth of f at v.
bool eval(const Valuation& v, const Formula& f);

/// The interpretation of p restricted to valuations over `universe`, which
/// must contain every atom of p. Stars are computed by iterating
/// R <- R u (R o [[p]]) from the identity until nothing changes.
Relation program_relation(const Program& p, const AtomSet& universe);

/// The valuations over `universe` that satisfy f, computed bottom-up from
/// program_relation. Independent of eval(); the two are cross-checked.
std::set<Valuation> models(const Formula& f, const AtomSet& universe);

/// Every valuation over `universe` (2^|universe| of them).
std::vector<Valuation> all_valuations(const AtomSet& universe, std::size_t cap = 20);

inline constexpr std::size_t kDefaultOracleCap = 20;

/// Validity and satisfiability by enumerating the valuations of the
/// vocabulary. Throw InfeasibleSizeError when the vocabulary is larger than
/// `cap` atoms.
bool oracle_valid(const Formula& f, std::size_t cap = kDefaultOracleCap);
bool oracle_sat(const Formula& f, std::size_t cap = kDefaultOracleCap);

}  // namespace dlpa
