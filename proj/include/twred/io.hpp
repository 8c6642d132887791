#pragma once

#include "twred/cnf.hpp"
#include "twred/decomposition.hpp"
#include "twred/hamiltonian.hpp"
#include "twred/trace.hpp"

#include <map>
#include <string>
#include <vector>

namespace twred {

enum class WcnfFlavor {
  kOld,   // "p wcnf n m top", weight == top means hard
  k2022,  // "h lits 0" for hard, "w lits 0" for soft
};

struct ParsedWcnf {
  WeightedCnf formula;
  WcnfFlavor flavor = WcnfFlavor::k2022;
  std::vector<std::string> warnings;
};

/// Parses either WCNF flavor (detected by the presence of a "p wcnf" header)
/// or a plain "p cnf" file (all clauses hard).
ParsedWcnf parse_wcnf(const std::string& text);
std::string write_wcnf(const WeightedCnf& phi, WcnfFlavor flavor = WcnfFlavor::kOld);

struct ParsedQubo {
  Hamiltonian h;
  std::vector<std::string> warnings;
};

/// "p qubo n m" then m lines "i j w" with 1 <= i <= j <= n; i == j is linear.
/// Repeated terms are summed with a warning.
ParsedQubo parse_qubo(const std::string& text);
std::string write_qubo(const Hamiltonian& h);

struct ParsedTd {
  TreeDecomposition td;
  int num_vertices = 0;
};

/// PACE .td: "s td B W+1 n", "b id v...", tree edges "a b", and an optional
/// "r id" naming the root (bag 1 otherwise).
ParsedTd parse_td(const std::string& text);
std::string write_td(const TreeDecomposition& td, int num_vertices);

/// Line-oriented trace sidecar.
ReductionTrace parse_trace(const std::string& text);
std::string write_trace(const ReductionTrace& trace);

/// "var rank" per line; '#'/'c' comments.
std::map<Var, int> parse_classes(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace twred
