#include "afm/duality.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace afm {

namespace {

struct RelationMeta {
  RelationId id;
  const char* name;
  Kinematics kinematics;        // required lhs flavor
  bool lhs_one_body;            // lhs potential role
  std::vector<const char*> params;
};

const std::vector<RelationMeta>& meta() {
  static const std::vector<RelationMeta> table = {
      {RelationId::GEN_1B_NP, "GEN_1B_NP", Kinematics::general_sr, true, {"p"}},
      {RelationId::GEN_1B_SIGMA, "GEN_1B_SIGMA", Kinematics::general_sr, true, {"sigma"}},
      {RelationId::GEN_1B_SIGMA4N, "GEN_1B_SIGMA4N", Kinematics::general_sr, true, {}},
      {RelationId::GEN_2B_NP, "GEN_2B_NP", Kinematics::general_sr, false, {"p"}},
      {RelationId::GEN_2B_SIGMA, "GEN_2B_SIGMA", Kinematics::general_sr, false, {"sigma"}},
      {RelationId::GEN_2B_SAMEMASS, "GEN_2B_SAMEMASS", Kinematics::general_sr, false, {}},
      {RelationId::GEN_2B_SAMEQ, "GEN_2B_SAMEQ", Kinematics::general_sr, false, {}},
      {RelationId::GEN_12_LINK, "GEN_12_LINK", Kinematics::general_sr, false, {"c"}},
      {RelationId::UR_1B_NP, "UR_1B_NP", Kinematics::ultrarelativistic, true, {"p"}},
      {RelationId::UR_1B_SIGMA, "UR_1B_SIGMA", Kinematics::ultrarelativistic, true, {"sigma"}},
      {RelationId::UR_1B_ONE2ONE, "UR_1B_ONE2ONE", Kinematics::ultrarelativistic, true, {}},
      {RelationId::UR_2B_NP, "UR_2B_NP", Kinematics::ultrarelativistic, false, {"p"}},
      {RelationId::UR_2B_SIGMA, "UR_2B_SIGMA", Kinematics::ultrarelativistic, false, {"sigma"}},
      {RelationId::UR_2B_ONE2ONE, "UR_2B_ONE2ONE", Kinematics::ultrarelativistic, false, {}},
      {RelationId::UR_12_LINK, "UR_12_LINK", Kinematics::ultrarelativistic, false, {"c"}},
      {RelationId::NR_SCALE, "NR_SCALE", Kinematics::nonrelativistic, false, {"beta"}},
      {RelationId::NR_1B_NP, "NR_1B_NP", Kinematics::nonrelativistic, true, {"p"}},
      {RelationId::NR_1B_SAMEQ, "NR_1B_SAMEQ", Kinematics::nonrelativistic, true, {"p"}},
      {RelationId::NR_1B_BETA, "NR_1B_BETA", Kinematics::nonrelativistic, true, {"p"}},
      {RelationId::NR_2B_NP, "NR_2B_NP", Kinematics::nonrelativistic, false, {"p"}},
      {RelationId::NR_2B_ALT, "NR_2B_ALT", Kinematics::nonrelativistic, false, {"p"}},
      {RelationId::NR_2B_SAMEMASS, "NR_2B_SAMEMASS", Kinematics::nonrelativistic, false, {"p"}},
      {RelationId::NR_2B_SAMEQ, "NR_2B_SAMEQ", Kinematics::nonrelativistic, false, {"p"}},
      {RelationId::NR_12_LINK, "NR_12_LINK", Kinematics::nonrelativistic, false, {"c", "beta"}},
      {RelationId::NR_12_LINK_SAMEQ, "NR_12_LINK_SAMEQ", Kinematics::nonrelativistic, false, {"c"}},
      {RelationId::NR_12_LINK_SAMEMASS, "NR_12_LINK_SAMEMASS", Kinematics::nonrelativistic, false, {"c"}},
      {RelationId::BRIDGE_1B, "BRIDGE_1B", Kinematics::nonrelativistic, true, {}},
      {RelationId::BRIDGE_2B, "BRIDGE_2B", Kinematics::nonrelativistic, false, {}},
  };
  return table;
}

const RelationMeta& meta_of(RelationId id) {
  for (const auto& m : meta())
    if (m.id == id) return m;
  throw_error(ErrorCode::invalid_argument, "unknown relation id");
}

double cn_of(int n) { return 0.5 * n * (n - 1); }

}  // namespace

const std::vector<RelationId>& all_relations() {
  static const std::vector<RelationId> ids = [] {
    std::vector<RelationId> v;
    for (const auto& m : meta()) v.push_back(m.id);
    return v;
  }();
  return ids;
}

std::string_view relation_name(RelationId id) { return meta_of(id).name; }

RelationId parse_relation(std::string_view name) {
  for (const auto& m : meta())
    if (name == m.name) return m.id;
  throw_error(ErrorCode::parse_error, "unknown duality relation '" + std::string(name) + "'");
}

std::vector<std::string> relation_free_params(RelationId id) {
  std::vector<std::string> out;
  for (const char* p : meta_of(id).params) out.emplace_back(p);
  return out;
}

double DualityRelation::need(const std::string& key) const {
  auto it = free_params.find(key);
  if (it == free_params.end())
    throw_error(ErrorCode::invalid_argument,
                "relation " + std::string(relation_name(id)) + ": missing free parameter '" + key + "'");
  return it->second;
}

namespace {

const PotentialSpec& lhs_potential(const RelationMeta& m, const SystemSpec& lhs) {
  if (m.lhs_one_body) {
    if (!lhs.one_body || lhs.two_body)
      throw_error(ErrorCode::invalid_argument,
                  std::string(m.name) + ": lhs system must carry a one-body potential only");
    return *lhs.one_body;
  }
  if (!lhs.two_body || lhs.one_body)
    throw_error(ErrorCode::invalid_argument,
                std::string(m.name) + ": lhs system must carry a two-body potential only");
  return *lhs.two_body;
}

SystemSpec nbody(Kinematics flavor, int N, double m, const PotentialSpec& pot, bool one_body) {
  SystemSpec s;
  s.flavor = flavor;
  s.N = N;
  s.m = m;
  if (one_body)
    s.one_body = pot;
  else
    s.two_body = pot;
  return s;
}

SystemSpec sigma_system(double sigma, double m, const PotentialSpec& v) {
  SystemSpec s;
  s.flavor = Kinematics::sigma_sr;
  s.sigma = sigma;
  s.m = m;
  s.two_body = v;
  return s;
}

int int_param(double v, const char* what) {
  double r = std::round(v);
  if (std::abs(v - r) > 1e-9 || r < 2)
    throw_error(ErrorCode::invalid_argument, std::string(what) + " must be an integer >= 2");
  return static_cast<int>(r);
}

}  // namespace

MappedParams transform_params(const DualityRelation& rel, const SystemSpec& lhs, double Q) {
  const auto& m = meta_of(rel.id);
  if (lhs.flavor != m.kinematics)
    throw_error(ErrorCode::invalid_argument,
                std::string(m.name) + ": lhs flavor incompatible with this relation");
  lhs.validate();
  if (rel.id == RelationId::NR_SCALE) {
    // valid for any combination of one- and two-body potentials
    double beta = rel.need("beta");
    if (beta == 0) throw_error(ErrorCode::invalid_argument, "NR_SCALE: beta must be nonzero");
    MappedParams scale_out;
    scale_out.target = lhs;
    scale_out.target.m = beta * beta * lhs.m;
    scale_out.q_target = std::abs(beta) * Q;
    scale_out.multiplier = 1.0;
    return scale_out;
  }
  const PotentialSpec& pot = lhs_potential(m, lhs);
  const int N = lhs.N;
  const double mm = lhs.m;
  const double CN = cn_of(N);
  MappedParams out;

  switch (rel.id) {
    case RelationId::GEN_1B_NP: {
      int p = int_param(rel.need("p"), "p");
      out.target = nbody(Kinematics::general_sr, p, mm, pot, true);
      out.q_target = double(p) / N * Q;
      out.multiplier = double(N) / p;
      return out;
    }
    case RelationId::GEN_1B_SIGMA: {
      double sg = rel.need("sigma");
      out.target = sigma_system(sg, 2.0 * mm / sg, two_body_equivalent(pot));
      out.q_target = 4.0 * Q / (sg * N);
      out.multiplier = N / 2.0;
      return out;
    }
    case RelationId::GEN_1B_SIGMA4N: {
      out.target = sigma_system(4.0 / N, N * mm / 2.0, two_body_equivalent(pot));
      out.q_target = Q;
      out.multiplier = N / 2.0;
      return out;
    }
    case RelationId::GEN_2B_NP: {
      int p = int_param(rel.need("p"), "p");
      double f = double(p - 1) / (N - 1);
      out.target = nbody(Kinematics::general_sr, p, f * mm, pot, false);
      out.q_target = f * std::sqrt(cn_of(p) / CN) * Q;
      out.multiplier = CN / cn_of(p);
      return out;
    }
    case RelationId::GEN_2B_SIGMA: {
      double sg = rel.need("sigma");
      out.target = sigma_system(sg, 2.0 * mm / (sg * (N - 1)), pot);
      out.q_target = 2.0 * Q / (sg * (N - 1) * std::sqrt(CN));
      out.multiplier = CN;
      return out;
    }
    case RelationId::GEN_2B_SAMEMASS: {
      out.target = sigma_system(2.0 / (N - 1), mm, pot);
      out.q_target = Q / std::sqrt(CN);
      out.multiplier = CN;
      return out;
    }
    case RelationId::GEN_2B_SAMEQ: {
      out.target = sigma_system(2.0 / ((N - 1) * std::sqrt(CN)), std::sqrt(CN) * mm, pot);
      out.q_target = Q;
      out.multiplier = CN;
      return out;
    }
    case RelationId::GEN_12_LINK: {
      double c = rel.need("c");
      out.target = nbody(Kinematics::general_sr, N, 2.0 * c / (N - 1) * mm, scale_coefficients(pot, c), true);
      out.q_target = 4.0 * c * std::sqrt(CN) / ((N - 1.0) * (N - 1.0)) * Q;
      out.multiplier = (N - 1.0) / (2.0 * c);
      return out;
    }
    case RelationId::UR_1B_NP: {
      int p = int_param(rel.need("p"), "p");
      out.target = nbody(Kinematics::ultrarelativistic, p, 0.0, pot, true);
      out.q_target = double(p) / N * Q;
      out.multiplier = double(N) / p;
      return out;
    }
    case RelationId::UR_1B_SIGMA: {
      double sg = rel.need("sigma");
      out.target = sigma_system(sg, 0.0, two_body_equivalent(pot));
      out.q_target = 4.0 * Q / (sg * N);
      out.multiplier = N / 2.0;
      return out;
    }
    case RelationId::UR_1B_ONE2ONE: {
      out.target = sigma_system(4.0 / N, 0.0, two_body_equivalent(pot));
      out.q_target = Q;
      out.multiplier = N / 2.0;
      return out;
    }
    case RelationId::UR_2B_NP: {
      int p = int_param(rel.need("p"), "p");
      double f = double(p - 1) / (N - 1);
      out.target = nbody(Kinematics::ultrarelativistic, p, 0.0, pot, false);
      out.q_target = f * std::sqrt(cn_of(p) / CN) * Q;
      out.multiplier = CN / cn_of(p);
      return out;
    }
    case RelationId::UR_2B_SIGMA: {
      double sg = rel.need("sigma");
      out.target = sigma_system(sg, 0.0, pot);
      out.q_target = 2.0 * Q / (sg * (N - 1) * std::sqrt(CN));
      out.multiplier = CN;
      return out;
    }
    case RelationId::UR_2B_ONE2ONE: {
      out.target = sigma_system(2.0 / ((N - 1) * std::sqrt(CN)), 0.0, pot);
      out.q_target = Q;
      out.multiplier = CN;
      return out;
    }
    case RelationId::UR_12_LINK: {
      double c = rel.need("c");
      out.target = nbody(Kinematics::ultrarelativistic, N, 0.0, scale_coefficients(pot, c), true);
      out.q_target = 4.0 * c * std::sqrt(CN) / ((N - 1.0) * (N - 1.0)) * Q;
      out.multiplier = (N - 1.0) / (2.0 * c);
      return out;
    }
    case RelationId::NR_SCALE:
      throw_error(ErrorCode::invalid_argument, "unreachable");
    case RelationId::NR_1B_NP: {
      int p = int_param(rel.need("p"), "p");
      out.target = nbody(Kinematics::nonrelativistic, p, mm, pot, true);
      out.q_target = double(p) / N * Q;
      out.multiplier = double(N) / p;
      return out;
    }
    case RelationId::NR_1B_SAMEQ: {
      int p = int_param(rel.need("p"), "p");
      out.target = nbody(Kinematics::nonrelativistic, p, double(N) * N / (double(p) * p) * mm, pot, true);
      out.q_target = Q;
      out.multiplier = double(N) / p;
      return out;
    }
    case RelationId::NR_1B_BETA: {
      // E^(beta p)(m, Q) = beta E^(p)(beta^2 m, Q) with N = beta p
      int p = int_param(rel.need("p"), "p");
      double beta = double(N) / p;
      out.target = nbody(Kinematics::nonrelativistic, p, beta * beta * mm, pot, true);
      out.q_target = Q;
      out.multiplier = beta;
      return out;
    }
    case RelationId::NR_2B_NP: {
      int p = int_param(rel.need("p"), "p");
      double f = double(p - 1) / (N - 1);
      out.target = nbody(Kinematics::nonrelativistic, p, f * mm, pot, false);
      out.q_target = f * std::sqrt(cn_of(p) / CN) * Q;
      out.multiplier = CN / cn_of(p);
      return out;
    }
    case RelationId::NR_2B_ALT: {
      int p = int_param(rel.need("p"), "p");
      out.target = nbody(Kinematics::nonrelativistic, p, double(p) / N * mm, pot, false);
      out.q_target = cn_of(p) / CN * Q;
      out.multiplier = CN / cn_of(p);
      return out;
    }
    case RelationId::NR_2B_SAMEMASS: {
      int p = int_param(rel.need("p"), "p");
      out.target = nbody(Kinematics::nonrelativistic, p, mm, pot, false);
      out.q_target = double(p - 1) / (N - 1) * std::sqrt(double(p) / N) * Q;
      out.multiplier = CN / cn_of(p);
      return out;
    }
    case RelationId::NR_2B_SAMEQ: {
      int p = int_param(rel.need("p"), "p");
      out.target =
          nbody(Kinematics::nonrelativistic, p, (N - 1.0) * CN / ((p - 1.0) * cn_of(p)) * mm, pot, false);
      out.q_target = Q;
      out.multiplier = CN / cn_of(p);
      return out;
    }
    case RelationId::NR_12_LINK: {
      double c = rel.need("c");
      double beta = rel.need("beta");
      out.target = nbody(Kinematics::nonrelativistic, N,
                         beta * beta * (N - 1.0) * (N - 1.0) / (4.0 * c * N) * mm,
                         scale_coefficients(pot, c), true);
      out.q_target = beta * Q;
      out.multiplier = (N - 1.0) / (2.0 * c);
      return out;
    }
    case RelationId::NR_12_LINK_SAMEQ: {
      double c = rel.need("c");
      out.target = nbody(Kinematics::nonrelativistic, N, (N - 1.0) * (N - 1.0) / (4.0 * c * N) * mm,
                         scale_coefficients(pot, c), true);
      out.q_target = Q;
      out.multiplier = (N - 1.0) / (2.0 * c);
      return out;
    }
    case RelationId::NR_12_LINK_SAMEMASS: {
      double c = rel.need("c");
      out.target = nbody(Kinematics::nonrelativistic, N, mm, scale_coefficients(pot, c), true);
      out.q_target = 2.0 * std::sqrt(c * N) / (N - 1.0) * Q;
      out.multiplier = (N - 1.0) / (2.0 * c);
      return out;
    }
    case RelationId::BRIDGE_1B:
    case RelationId::BRIDGE_2B: {
      BridgeBody body = rel.id == RelationId::BRIDGE_1B ? BridgeBody::one : BridgeBody::two;
      PotentialSpec w = bridge_build(pot, body, N, mm, Q);
      out.target = nbody(Kinematics::ultrarelativistic, N, 0.0, w, body == BridgeBody::one);
      out.q_target = Q;
      out.multiplier = 1.0;
      return out;
    }
  }
  throw_error(ErrorCode::invalid_argument, "unknown relation id");
}

DualityCheckReport verify_relation(const DualityRelation& rel, const SystemSpec& lhs, double Q, double tol) {
  DualityCheckReport rep;
  rep.id = rel.id;
  MappedParams mp;
  try {
    mp = transform_params(rel, lhs, Q);
  } catch (const Error& e) {
    rep.error = std::string("transform: ") + e.what();
    return rep;
  }
  rep.multiplier = mp.multiplier;
  rep.m_target = mp.target.m;
  rep.q_target = mp.q_target;
  rep.sigma_target = mp.target.flavor == Kinematics::sigma_sr ? mp.target.sigma : 0.0;
  try {
    rep.lhs_value = solve_afm(lhs, Q).value;
  } catch (const Error& e) {
    rep.error = std::string("lhs: ") + e.what();
    return rep;
  }
  try {
    rep.rhs_value = mp.multiplier * solve_afm(mp.target, mp.q_target).value;
  } catch (const Error& e) {
    rep.error = std::string("rhs: ") + e.what();
    return rep;
  }
  rep.abs_residual = std::abs(rep.lhs_value - rep.rhs_value);
  rep.rel_residual = rep.abs_residual / std::max(std::abs(rep.lhs_value), std::abs(rep.rhs_value));
  rep.passed = rep.rel_residual <= tol;
  return rep;
}

PotentialSpec bridge_build(const PotentialSpec& p, BridgeBody body, int N, double m, double Q) {
  if (!(m > 0) || !(Q > 0)) throw_error(ErrorCode::invalid_argument, "bridge_build: m and Q must be > 0");
  double alpha2 = body == BridgeBody::one ? Q / (2.0 * m * N) : Q / (2.0 * m * std::sqrt(cn_of(N)));
  return sqrt_transform(p, std::sqrt(alpha2));
}

DualityCheckReport bridge_verify(const PotentialSpec& p, BridgeBody body, int N, double m, double Q,
                                 double tol) {
  DualityRelation rel{body == BridgeBody::one ? RelationId::BRIDGE_1B : RelationId::BRIDGE_2B, {}};
  SystemSpec lhs;
  lhs.flavor = Kinematics::nonrelativistic;
  lhs.N = N;
  lhs.m = m;
  if (body == BridgeBody::one)
    lhs.one_body = p;
  else
    lhs.two_body = p;
  return verify_relation(rel, lhs, Q, tol);
}

namespace {

PotentialSpec sweep_potential(int which) {
  switch (which) {
    case 0:
      return PotentialSpec::make_linear(1.0);
    case 1:
      return PotentialSpec::make_quadratic(1.0);
    default:
      return PotentialSpec::make_funnel(1.0, 1.0);
  }
}

const char* sweep_potential_name(int which) {
  switch (which) {
    case 0:
      return "linear";
    case 1:
      return "quadratic";
    default:
      return "funnel";
  }
}

DualityCheckReport sweep_one(RelationId id, int pot_index, int instance, std::uint64_t seed, double tol) {
  // one independent, order-free stream per check
  std::seed_seq sseq{seed, static_cast<std::uint64_t>(id), static_cast<std::uint64_t>(pot_index),
                     static_cast<std::uint64_t>(instance)};
  std::mt19937_64 rng(sseq);
  auto uni = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  auto uint_in = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  const auto& m = meta_of(id);
  int N = uint_in(2, 8);
  DualityRelation rel{id, {}};
  for (const char* par : m.params) {
    std::string key = par;
    if (key == "p")
      rel.free_params["p"] = uint_in(2, 8);
    else if (key == "sigma")
      rel.free_params["sigma"] = uni(0.2, 5.0);
    else if (key == "beta")
      rel.free_params["beta"] = uni(0.2, 5.0);
    else if (key == "c")
      rel.free_params["c"] = uni(0.1, 5.0);
  }
  SystemSpec lhs;
  lhs.flavor = m.kinematics;
  lhs.N = N;
  lhs.m = m.kinematics == Kinematics::ultrarelativistic ? 0.0 : uni(0.1, 10.0);
  PotentialSpec pot = sweep_potential(pot_index);
  if (m.lhs_one_body)
    lhs.one_body = pot;
  else
    lhs.two_body = pot;
  double Q = uni(1.0, 20.0);
  return verify_relation(rel, lhs, Q, tol);
}

}  // namespace

SweepResult duality_sweep(const SweepConfig& cfg) {
  SweepResult result;
  struct Task {
    RelationId id;
    int pot;
    int instance;
  };
  std::vector<Task> tasks;
  for (RelationId id : all_relations())
    for (int pot = 0; pot < 3; ++pot)
      for (int i = 0; i < cfg.count; ++i) tasks.push_back({id, pot, i});

  std::vector<DualityCheckReport> reports(tasks.size());
  int jobs = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      reports[i] = sweep_one(tasks[i].id, tasks[i].pot, tasks[i].instance, cfg.seed, cfg.tol);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  result.checks = static_cast<int>(tasks.size());
  for (size_t i = 0; i < tasks.size(); ++i) {
    const auto& rep = reports[i];
    if (rep.rel_residual > result.worst_rel_residual) {
      result.worst_rel_residual = rep.rel_residual;
      result.worst_id = tasks[i].id;
    }
    if (!rep.passed) {
      result.failures++;
      if (result.failed.size() < 32)
        result.failed.push_back({tasks[i].id, sweep_potential_name(tasks[i].pot), tasks[i].instance, rep});
    }
  }
  return result;
}

}  // namespace afm
