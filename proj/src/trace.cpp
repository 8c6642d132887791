#include "twred/trace.hpp"

#include "twred/error.hpp"

namespace twred {

ReductionTrace ReductionTrace::identity(int num_vars) {
  ReductionTrace t;
  t.input_vars = t.output_vars = num_vars;
  t.back_map.resize(num_vars);
  for (int i = 0; i < num_vars; ++i) t.back_map[i] = i + 1;
  return t;
}

Assignment ReductionTrace::map_back(const Assignment& out) const {
  if (out.size() != output_vars)
    throw DomainError("assignment has " + std::to_string(out.size()) + " variables, trace output has " +
                      std::to_string(output_vars));
  Assignment in(input_vars);
  for (Var v = 1; v <= input_vars; ++v) {
    Var o = back_map[v - 1];
    if (o != 0) in.set(v, out[o]);
  }
  return in;
}

bool ReductionTrace::signals_unsat(const Weight& output_cost) const {
  if (output_cost.is_infinite()) return true;
  if (!sat_threshold) return false;
  return output_cost - offset >= *sat_threshold;
}

ReductionTrace compose(const ReductionTrace& first, const ReductionTrace& second) {
  if (first.output_vars != second.input_vars)
    throw InvariantError("compose: variable counts do not line up");
  ReductionTrace t;
  t.input_vars = first.input_vars;
  t.output_vars = second.output_vars;
  t.offset = first.offset + second.offset;
  t.h = second.h ? second.h : first.h;
  t.sat_threshold = second.sat_threshold ? second.sat_threshold : first.sat_threshold;
  if (first.theta && second.theta)
    t.theta = *first.theta + *second.theta;
  else
    t.theta = second.theta ? second.theta : first.theta;
  t.back_map.resize(first.input_vars, 0);
  for (int i = 0; i < first.input_vars; ++i) {
    Var mid = first.back_map[i];
    if (mid != 0) t.back_map[i] = second.back_map[mid - 1];
  }
  for (const auto& f : first.fresh) {
    Var out = second.back_map[f.var - 1];
    if (out != 0) t.fresh.push_back({out, f.rule, f.origin});
  }
  t.fresh.insert(t.fresh.end(), second.fresh.begin(), second.fresh.end());
  t.notes = first.notes;
  t.notes.insert(t.notes.end(), second.notes.begin(), second.notes.end());
  return t;
}

}  // namespace twred
