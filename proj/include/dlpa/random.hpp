// Grammar-directed random formulas for property tests and the fuzzer.
//
// Distribution. A formula is grown top-down against a length budget drawn
// uniformly from [1, max_len]; every constructor consumes its share exactly,
// so len(result) equals the budget. A formula node with budget 1 is a
// proposition, otherwise one of ~, &, [.] chosen uniformly among those that
// fit. A program node becomes a star with probability `star_probability`
// when nesting allows, otherwise one of assignment, ;, u, ? uniformly among
// those that fit. Assignments set one atom; with `multi_atom_assignments`
// an assignment of two or three atoms also fits budgets 2 and 3. Atoms come
// from the first `max_atoms` names of p, q, r, s, t, v, w, x.
//
// Draws use mt19937_64 with plain modulo reduction so that sequences are
// the same on every platform.
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dlpa/semantics.hpp"
#include "dlpa/syntax.hpp"

namespace dlpa {

struct GeneratorConfig {
  std::size_t max_atoms = 3;
  std::size_t max_len = 20;
  double star_probability = 0.0;
  std::size_t max_star_nesting = 2;
  bool multi_atom_assignments = false;
};

class FormulaGenerator {
 public:
  FormulaGenerator(std::uint64_t seed, GeneratorConfig config);

  Formula formula();
  Formula formula(std::size_t length);
  Program program(std::size_t length);
  Assignment assignment();
  /// A random subset of the atom pool.
  Valuation valuation();
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [0, 1).
  double unit();

 private:
  Formula grow_formula(std::size_t budget, std::size_t stars);
  Program grow_program(std::size_t budget, std::size_t stars);
  Assignment grow_assignment(std::size_t budget);

  std::mt19937_64 rng_;
  GeneratorConfig config_;
  std::vector<Atom> atoms_;
};

}  // namespace dlpa
