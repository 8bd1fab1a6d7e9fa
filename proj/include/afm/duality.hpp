#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "afm/afm_core.hpp"

namespace afm {

enum class RelationId {
  GEN_1B_NP,
  GEN_1B_SIGMA,
  GEN_1B_SIGMA4N,
  GEN_2B_NP,
  GEN_2B_SIGMA,
  GEN_2B_SAMEMASS,
  GEN_2B_SAMEQ,
  GEN_12_LINK,
  UR_1B_NP,
  UR_1B_SIGMA,
  UR_1B_ONE2ONE,
  UR_2B_NP,
  UR_2B_SIGMA,
  UR_2B_ONE2ONE,
  UR_12_LINK,
  NR_SCALE,
  NR_1B_NP,
  NR_1B_SAMEQ,
  NR_1B_BETA,
  NR_2B_NP,
  NR_2B_ALT,
  NR_2B_SAMEMASS,
  NR_2B_SAMEQ,
  NR_12_LINK,
  NR_12_LINK_SAMEQ,
  NR_12_LINK_SAMEMASS,
  BRIDGE_1B,
  BRIDGE_2B,
};

constexpr int kRelationCount = 28;
const std::vector<RelationId>& all_relations();
std::string_view relation_name(RelationId id);
RelationId parse_relation(std::string_view name);

/// Which free parameters a relation consumes (subset of p, sigma, beta, c).
std::vector<std::string> relation_free_params(RelationId id);

struct DualityRelation {
  RelationId id;
  std::map<std::string, double> free_params;  // p, sigma, beta, c as required

  double need(const std::string& key) const;
};

struct MappedParams {
  SystemSpec target;
  double q_target = 0;
  double multiplier = 1;  // lhs_value = multiplier * rhs_value
};

/// Builds the right-hand-side system of a duality identity from the
/// left-hand-side system. Potential roles (one-body vs two-body vs sigma
/// system) are part of the mapping.
MappedParams transform_params(const DualityRelation& rel, const SystemSpec& lhs, double Q);

struct DualityCheckReport {
  RelationId id;
  double lhs_value = 0;
  double rhs_value = 0;  // multiplier already applied
  double multiplier = 1;
  double m_target = 0;
  double q_target = 0;
  double sigma_target = 0;  // 0 when the target is not a sigma system
  double abs_residual = 0;
  double rel_residual = 0;
  bool passed = false;
  std::string error;  // nonempty when a side failed to evaluate
};

DualityCheckReport verify_relation(const DualityRelation& rel, const SystemSpec& lhs, double Q,
                                   double tol = 1e-9);

enum class BridgeBody { one, two };

/// W = sqrt_transform(p, alpha) with alpha^2 = Q/(2 m N) (one-body) or
/// Q/(2 m sqrt(C_N)) (two-body).
PotentialSpec bridge_build(const PotentialSpec& p, BridgeBody body, int N, double m, double Q);

DualityCheckReport bridge_verify(const PotentialSpec& p, BridgeBody body, int N, double m, double Q,
                                 double tol = 1e-9);

struct SweepConfig {
  std::uint64_t seed = 0;
  int count = 200;
  double tol = 1e-9;
  int jobs = 0;  // 0: hardware concurrency
};

struct SweepFailure {
  RelationId id;
  std::string potential;
  int instance = 0;
  DualityCheckReport report;
};

struct SweepResult {
  int checks = 0;
  int failures = 0;
  double worst_rel_residual = 0;
  RelationId worst_id = RelationId::GEN_1B_NP;
  std::vector<SweepFailure> failed;
};

/// Randomized catalog sweep: `count` instances per (relation, potential in
/// {linear, quadratic, funnel}). Deterministic for a fixed seed regardless
/// of the job count.
SweepResult duality_sweep(const SweepConfig& cfg);

}  // namespace afm
