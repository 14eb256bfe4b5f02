#include "dlpa/random.hpp"

#include <algorithm>
#include <array>
#include <string_view>
#include <utility>

#include "dlpa/error.hpp"

namespace dlpa {

namespace {

constexpr std::array<std::string_view, 8> kAtomPool = {"p", "q", "r", "s", "t", "v", "w", "x"};

}  // namespace

FormulaGenerator::FormulaGenerator(std::uint64_t seed, GeneratorConfig config)
    : rng_(seed), config_(config) {
  if (config_.max_atoms == 0 || config_.max_atoms > kAtomPool.size()) {
    throw PreconditionError("generator supports 1 to " + std::to_string(kAtomPool.size()) + " atoms");
  }
  if (config_.max_len == 0) throw PreconditionError("generator needs max_len >= 1");
  for (std::size_t i = 0; i < config_.max_atoms; ++i) atoms_.emplace_back(std::string(kAtomPool[i]));
}

std::uint64_t FormulaGenerator::below(std::uint64_t n) { return rng_() % n; }

double FormulaGenerator::unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

Formula FormulaGenerator::formula() { return formula(1 + below(config_.max_len)); }

Formula FormulaGenerator::formula(std::size_t length) { return grow_formula(length, 0); }

Program FormulaGenerator::program(std::size_t length) { return grow_program(length, 0); }

Assignment FormulaGenerator::assignment() { return grow_assignment(1); }

Valuation FormulaGenerator::valuation() {
  Valuation v;
  for (const Atom& p : atoms_) {
    if (below(2)) v.insert(p);
  }
  return v;
}

Formula FormulaGenerator::grow_formula(std::size_t budget, std::size_t stars) {
  if (budget <= 1) return Formula::prop(atoms_[below(atoms_.size())]);
  enum Shape { Not, And, Box };
  std::vector<Shape> fits{Not};
  if (budget >= 3) {
    fits.push_back(And);
    fits.push_back(Box);
  }
  switch (fits[below(fits.size())]) {
    case Not:
      return Formula::negate(grow_formula(budget - 1, stars));
    case And: {
      const std::size_t left = 1 + below(budget - 2);
      Formula lhs = grow_formula(left, stars);
      return Formula::conj(lhs, grow_formula(budget - 1 - left, stars));
    }
    case Box: {
      const std::size_t prog = 1 + below(budget - 2);
      Program p = grow_program(prog, stars);
      return Formula::box(p, grow_formula(budget - 1 - prog, stars));
    }
  }
  return Formula::prop(atoms_.front());
}

Program FormulaGenerator::grow_program(std::size_t budget, std::size_t stars) {
  if (budget >= 2 && stars < config_.max_star_nesting && unit() < config_.star_probability) {
    return Program::star(grow_program(budget - 1, stars + 1));
  }
  if (budget <= 1) return Program::atomic(grow_assignment(1));
  enum Shape { Multi, Seq, Choice, Test };
  std::vector<Shape> fits{Test};
  if (config_.multi_atom_assignments && budget <= std::min<std::size_t>(3, atoms_.size())) {
    fits.push_back(Multi);
  }
  if (budget >= 3) {
    fits.push_back(Seq);
    fits.push_back(Choice);
  }
  const Shape shape = fits[below(fits.size())];
  if (shape == Multi) return Program::atomic(grow_assignment(budget));
  if (shape == Test) return Program::test(grow_formula(budget - 1, stars));
  const std::size_t left = 1 + below(budget - 2);
  Program first = grow_program(left, stars);
  Program second = grow_program(budget - 1 - left, stars);
  return shape == Seq ? Program::seq(first, second) : Program::choice(first, second);
}

Assignment FormulaGenerator::grow_assignment(std::size_t size) {
  std::vector<Atom> pool = atoms_;
  std::vector<std::pair<Atom, bool>> bindings;
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t k = below(pool.size());
    bindings.emplace_back(pool[k], below(2) == 1);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Assignment(bindings);
}

}  // namespace dlpa
