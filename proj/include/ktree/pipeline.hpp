#pragma once

#include <string>
#include <vector>

#include "ktree/oracle.hpp"
#include "ktree/reflect.hpp"
#include "ktree/serialize.hpp"

namespace ktree {

struct Check {
  std::string name;
  bool pass = false;
  Json witness;  // null when there is nothing to report
};

// Known names: dims, tree, stable, indecomposable, exceptional.
// Throws InvalidInput on an unknown name.
std::vector<Check> run_checks(const Representation& x, const std::vector<std::string>& names);
Json checks_to_json(const std::vector<Check>& checks);

Json morphism_to_json(const Morphism& phi);
Json plan_to_json(const ReflectionPlan& plan);
Json stages_to_json(const std::vector<Stage>& stages);

struct SweepItem {
  long d, e;
};
// Coprime (d,e) with 1 <= d <= max_d and d <= e <= (m-1)d+1, ordered by (d,e).
std::vector<SweepItem> fundamental_coprime(long m, long max_d);

struct UniquenessRow {
  long d, e, n;
  std::vector<Tuple> brute;
  Tuple closed_form;
  bool ok;
};
std::vector<UniquenessRow> sweep_uniqueness(long m, long max_d, unsigned jobs);

struct PipelineRow {
  long d, e;
  std::string construction;
  std::size_t gamma_vertices = 0, gamma_arrows = 0;
  bool tree = false, indecomposable = false;
  std::string error;
  bool ok() const { return error.empty() && tree && indecomposable; }
};
std::vector<PipelineRow> sweep_pipeline(long m, long max_d, unsigned jobs);

}  // namespace ktree
