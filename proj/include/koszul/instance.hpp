#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/local_algebra.hpp"
#include "koszul/parser.hpp"

namespace koszul {

// One instance as described by a file or a generator seed. Expressions are
// kept as text (canonical text, for generated instances) so reports reproduce
// the input exactly.
struct InstanceSpec {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> gen_exprs;
  std::optional<unsigned> bound;
  std::vector<std::string> koszul_exprs;  // empty means n = 0
  std::vector<std::string> gens2_exprs;   // nonempty means Tor mode
  std::optional<std::uint64_t> seed;      // generated instances
  std::string path;                       // file instances

  bool tor_mode() const { return !gens2_exprs.empty(); }
};

// Line-oriented format, '#' comments:
//   field: 101
//   vars: y1, y2
//   gens: y1^2, y1*y2, y2^3
//   bound: 4            (optional)
//   koszul: y1 + y2, y2^2
//   gens2: ...          (Tor mode, exclusive with koszul)
// Every expression is validated against the declared variables here.
InstanceSpec parse_instance(std::string_view text, std::string path);
InstanceSpec parse_instance_file(const std::string& path);

// The compiled koszul-mode instance: certified presentation, algebra, Koszul
// element coordinates.
struct CompiledInstance {
  LocalAlgebra algebra;
  std::vector<std::vector<std::uint32_t>> xs;
  unsigned bound;
};

CompiledInstance compile_instance(const InstanceSpec& spec, unsigned bound_max);

}  // namespace koszul
