#pragma once

#include <string_view>

#include "dlpa/parser.hpp"
#include "dlpa/random.hpp"
#include "dlpa/semantics.hpp"
#include "dlpa/syntax.hpp"

namespace dlpa::test {

inline Formula F(std::string_view text) { return parse_formula(text); }
inline Program P(std::string_view text) { return parse_program(text); }

inline GeneratorConfig star_free_config(std::size_t atoms, std::size_t len) {
  GeneratorConfig c;
  c.max_atoms = atoms;
  c.max_len = len;
  return c;
}

inline GeneratorConfig starred_config(std::size_t atoms, std::size_t len) {
  GeneratorConfig c = star_free_config(atoms, len);
  c.star_probability = 0.15;
  c.max_star_nesting = 2;
  return c;
}

}  // namespace dlpa::test
