#include "twred/hamiltonian.hpp"

#include "twred/error.hpp"

namespace twred {

void Hamiltonian::set_num_vars(int n) {
  if (!linear_.empty() && linear_.rbegin()->first > n) throw PreconditionError("shrinking below a term");
  for (const auto& [ij, w] : quadratic_)
    if (ij.second > n) throw PreconditionError("shrinking below a term");
  n_ = n;
}

void Hamiltonian::add(Var i, Var j, const BigInt& w) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_)
    throw PreconditionError("term (" + std::to_string(i) + "," + std::to_string(j) + ") out of range 1.." +
                            std::to_string(n_));
  if (w == 0) return;
  if (i == j) {
    auto& slot = linear_[i];
    slot += w;
    if (slot == 0) linear_.erase(i);
  } else {
    auto& slot = quadratic_[{i, j}];
    slot += w;
    if (slot == 0) quadratic_.erase({i, j});
  }
}

BigInt Hamiltonian::linear(Var i) const {
  auto it = linear_.find(i);
  return it == linear_.end() ? BigInt(0) : it->second;
}

BigInt Hamiltonian::quadratic(Var i, Var j) const {
  if (i > j) std::swap(i, j);
  auto it = quadratic_.find({i, j});
  return it == quadratic_.end() ? BigInt(0) : it->second;
}

BigInt evaluate(const Hamiltonian& h, const Assignment& x) {
  if (x.size() != h.num_vars())
    throw DomainError("point of dimension " + std::to_string(x.size()) + ", Hamiltonian has " +
                      std::to_string(h.num_vars()));
  BigInt e = 0;
  for (const auto& [i, w] : h.linear_terms())
    if (x[i]) e += w;
  for (const auto& [ij, w] : h.quadratic_terms())
    if (x[ij.first] && x[ij.second]) e += w;
  return e;
}

}  // namespace twred
