// Command-line front end; talks to the library through the C API only.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "afm/afm_c.h"

using nlohmann::json;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitCheckFailed = 4;

struct PotentialHandle {
  afm_potential* p = nullptr;
  ~PotentialHandle() { afm_potential_free(p); }
};

struct SystemHandle {
  afm_system* s = nullptr;
  ~SystemHandle() { afm_system_free(s); }
};

[[noreturn]] void die(afm_status st) {
  std::cerr << "error: " << afm_last_error() << "\n";
  std::exit(st == AFM_ERR_NO_CONVERGENCE || st == AFM_ERR_NO_BRACKET ? kExitNoConvergence
                                                                     : kExitInvalid);
}

void check(afm_status st) {
  if (st != AFM_OK) die(st);
}

std::string take_string(char* s) {
  std::string out(s ? s : "");
  afm_string_free(s);
  return out;
}

void parse_pot(const std::string& text, PotentialHandle& h) {
  check(afm_potential_parse(text.c_str(), &h.p));
}

// "n1,l1[;n2,l2...]" -> flat pairs
std::vector<int> parse_labels(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) {
    int n, l;
    if (std::sscanf(group.c_str(), "%d,%d", &n, &l) != 2) {
      std::cerr << "error: bad labels '" << text << "' (expected n,l;n,l;...)\n";
      std::exit(kExitInvalid);
    }
    out.push_back(n);
    out.push_back(l);
  }
  if (out.empty()) {
    std::cerr << "error: empty labels\n";
    std::exit(kExitInvalid);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    std::exit(kExitInvalid);
  }
  f << text;
  if (text.empty() || text.back() != '\n') f << "\n";
}

std::string csv_escape(const json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find(',') != std::string::npos) return "\"" + s + "\"";
    return s;
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  std::ostringstream os;
  os.precision(10);
  if (v.is_number_integer())
    os << v.get<long long>();
  else if (v.is_number())
    os << v.get<double>();
  else
    os << v.dump();
  return os.str();
}

// one JSON object, or an array of uniform objects, to CSV
std::string json_to_csv(const json& j) {
  const json& arr = j.is_array() ? j : json::array({j});
  if (arr.empty()) return "";
  std::string head, body;
  for (auto it = arr[0].begin(); it != arr[0].end(); ++it) {
    if (!head.empty()) head += ",";
    head += it.key();
  }
  for (const auto& row : arr) {
    std::string line;
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (!line.empty()) line += ",";
      line += csv_escape(it.value());
    }
    body += line + "\n";
  }
  return head + "\n" + body;
}

void emit_record(const json& j, const std::string& format, const std::string& out_path) {
  if (format == "csv")
    emit(json_to_csv(j), out_path);
  else
    emit(j.dump(2), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "afm: auxiliary-field-method N-body eigenenergies, duality relations and exact solvers"};
  app.require_subcommand(1);

  std::string format = "json", out_path;
  app.add_option("--output", format, "Output format: json|csv")->capture_default_str();
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "Solve the AFM transcendental equation");
  std::string kin = "nr", one_body_s, two_body_s;
  int N = 2;
  double sigma = 2.0, m = 1.0, Q = 1.5;
  solve->add_option("--kinematics", kin, "nr|ur|sr|sigma")->capture_default_str();
  solve->add_option("--N", N, "particle count")->capture_default_str();
  solve->add_option("--sigma", sigma, "sigma coefficient (sigma kinematics)")->capture_default_str();
  solve->add_option("--m", m, "particle mass")->capture_default_str();
  solve->add_option("--Q", Q, "principal quantum number")->capture_default_str();
  solve->add_option("--one-body", one_body_s, "one-body potential, kind:key=value[,...]");
  solve->add_option("--two-body", two_body_s, "two-body potential, kind:key=value[,...]");

  // ---- duality verify ----
  auto* dver = app.add_subcommand("duality-verify", "Check one duality relation");
  std::string relation;
  double tol = 1e-9;
  double p_free = 0, sigma_free = 0, beta_free = 0, c_free = 0;
  dver->add_option("--relation", relation, "catalog id, e.g. GEN_1B_NP")->required();
  dver->add_option("--kinematics", kin, "nr|ur|sr (lhs flavor)")->capture_default_str();
  dver->add_option("--N", N)->capture_default_str();
  dver->add_option("--m", m)->capture_default_str();
  dver->add_option("--Q", Q)->capture_default_str();
  dver->add_option("--tol", tol)->capture_default_str();
  dver->add_option("--one-body", one_body_s);
  dver->add_option("--two-body", two_body_s);
  dver->add_option("--p", p_free, "target particle count (NP relations)");
  dver->add_option("--sigma-free", sigma_free, "free sigma (SIGMA relations)");
  dver->add_option("--beta", beta_free, "free beta (scaling relations)");
  dver->add_option("--c", c_free, "one-body/two-body proportionality constant");

  // ---- duality sweep ----
  auto* dsweep = app.add_subcommand("duality-sweep", "Randomized catalog sweep");
  std::uint64_t seed = 0;
  int count = 200, jobs = 0;
  dsweep->add_option("--seed", seed)->capture_default_str();
  dsweep->add_option("--count", count, "instances per relation and potential")->capture_default_str();
  dsweep->add_option("--tol", tol)->capture_default_str();
  dsweep->add_option("--jobs", jobs, "worker threads (0 = hardware)")->capture_default_str();

  // ---- exact 2b ----
  auto* e2b = app.add_subcommand("exact-2b", "Lagrange-mesh radial solver");
  int n_r = 0, l_r = 0, points = 100;
  e2b->add_option("--m", m)->capture_default_str();
  e2b->add_option("--two-body", two_body_s)->required();
  e2b->add_option("--n", n_r)->capture_default_str();
  e2b->add_option("--l", l_r)->capture_default_str();
  e2b->add_option("--points", points)->capture_default_str();

  // ---- exact 3b ----
  auto* e3b = app.add_subcommand("exact-3b", "Three-body HO-basis variational solver");
  int L = 0, parity = 1, bmax = 20, max_states = 12;
  double blen = 0;
  e3b->add_option("--m", m)->capture_default_str();
  e3b->add_option("--two-body", two_body_s)->required();
  e3b->add_option("--L", L)->capture_default_str();
  e3b->add_option("--parity", parity, "+1 or -1")->capture_default_str();
  e3b->add_option("--Bmax", bmax)->capture_default_str();
  e3b->add_option("--b", blen, "oscillator length (0 = auto)")->capture_default_str();
  e3b->add_option("--max-states", max_states)->capture_default_str();

  // ---- salpeter ----
  auto* sal = app.add_subcommand("salpeter-2b", "Spinless-Salpeter oscillator-basis solver");
  int basis = 50;
  sal->add_option("--sigma", sigma)->capture_default_str();
  sal->add_option("--m", m)->capture_default_str();
  sal->add_option("--two-body", two_body_s)->required();
  sal->add_option("--n", n_r)->capture_default_str();
  sal->add_option("--l", l_r)->capture_default_str();
  sal->add_option("--basis", basis)->capture_default_str();

  // ---- predict ----
  auto* pred = app.add_subcommand("predict", "Duality-based spectrum predictions");
  std::string mode = "two_body_f", labels_s = "0,0", presc = "ho";
  pred->add_option("--mode", mode, "two_body_f|n_body_gs|n_body_via_f|gs_link")->capture_default_str();
  pred->add_option("--m", m)->capture_default_str();
  pred->add_option("--N", N)->capture_default_str();
  pred->add_option("--labels", labels_s, "n1,l1;n2,l2;...")->capture_default_str();
  pred->add_option("--q-prescription", presc)->capture_default_str();
  pred->add_option("--two-body", two_body_s)->required();

  // ---- universal functions ----
  auto* uf = app.add_subcommand("universal-f", "Two-body ground state f(m)");
  uf->add_option("--two-body", two_body_s)->required();
  uf->add_option("--m", m)->capture_default_str();
  auto* uF = app.add_subcommand("universal-F", "Ultrarelativistic universal function F(x)");
  double xarg = 1.0;
  uF->add_option("--potential", one_body_s)->required();
  uF->add_option("--x", xarg)->capture_default_str();
  auto* uG = app.add_subcommand("universal-G", "Nonrelativistic universal function G(x)");
  uG->add_option("--potential", one_body_s)->required();
  uG->add_option("--x", xarg)->capture_default_str();

  // ---- tables ----
  auto* tab = app.add_subcommand("table", "Reproduce the published tables");
  std::string table_name, table_presc;
  tab->add_option("name", table_name, "table1|table2")->required();
  tab->add_option("--prescription", table_presc, "table1 column choice: ho|improved2b");

  CLI11_PARSE(app, argc, argv);

  if (format != "json" && format != "csv") {
    std::cerr << "error: --output must be json or csv\n";
    return kExitInvalid;
  }

  PotentialHandle U, V;
  if (!one_body_s.empty()) parse_pot(one_body_s, U);
  if (!two_body_s.empty()) parse_pot(two_body_s, V);

  if (*solve) {
    SystemHandle sys;
    check(afm_system_create(kin.c_str(), N, sigma, m, U.p, V.p, &sys.s));
    afm_solution sol{};
    check(afm_solve(sys.s, Q, &sol));
    json j{{"kinematics", kin}, {"N", N},       {"m", m},
           {"Q", Q},            {"x0", sol.x0}, {"iterations", sol.iterations},
           {"residual", sol.residual}};
    if (kin == "sigma") j["sigma"] = sigma;
    j[kin == "nr" ? "energy" : "mass"] = sol.value;
    if (sol.r0_onebody > 0) j["r0_onebody"] = sol.r0_onebody;
    if (sol.r0_twobody > 0) j["r0_twobody"] = sol.r0_twobody;
    emit_record(j, format, out_path);
    return 0;
  }

  if (*dver) {
    SystemHandle sys;
    check(afm_system_create(kin.c_str(), N, sigma, m, U.p, V.p, &sys.s));
    json fp = json::object();
    if (p_free > 0) fp["p"] = p_free;
    if (sigma_free > 0) fp["sigma"] = sigma_free;
    if (beta_free != 0) fp["beta"] = beta_free;
    if (c_free > 0) fp["c"] = c_free;
    char* rep = nullptr;
    check(afm_duality_verify(relation.c_str(), sys.s, Q, tol, fp.dump().c_str(), &rep));
    json j = json::parse(take_string(rep));
    emit_record(j, format, out_path);
    return j["passed"].get<bool>() ? 0 : kExitCheckFailed;
  }

  if (*dsweep) {
    char* rep = nullptr;
    check(afm_duality_sweep(seed, count, tol, jobs, &rep));
    json j = json::parse(take_string(rep));
    emit_record(j, format, out_path);
    return j["failures"].get<int>() == 0 ? 0 : kExitCheckFailed;
  }

  if (*e2b) {
    double e = 0;
    check(afm_exact2b(m, V.p, n_r, l_r, points, &e));
    emit_record(json{{"m", m}, {"n", n_r}, {"l", l_r}, {"points", points}, {"energy", e}}, format,
                out_path);
    return 0;
  }

  if (*e3b) {
    char* rep = nullptr;
    check(afm_exact3b(m, V.p, L, parity, bmax, blen, max_states, &rep));
    json j = json::parse(take_string(rep));
    if (format == "csv") {
      json arr = json::array();
      for (const auto& s : j["states"]) {
        auto lab = s["labels"];
        std::ostringstream os;
        os << lab[0].get<int>() << "," << lab[1].get<int>() << "," << lab[2].get<int>() << ","
           << lab[3].get<int>();
        arr.push_back(json{{"L", j["L"]},
                           {"parity", j["parity"]},
                           {"B", s["band"]},
                           {"labels", s["bracketed"].get<bool>() ? "[" + os.str() + "]" : os.str()},
                           {"energy", s["energy"]},
                           {"amplitude", s["amplitude"]},
                           {"multiplicity", s["multiplicity"]}});
      }
      emit_record(arr, format, out_path);
    } else {
      emit_record(j, format, out_path);
    }
    return 0;
  }

  if (*sal) {
    double e = 0;
    check(afm_salpeter2b(sigma, m, V.p, n_r, l_r, basis, &e));
    emit_record(json{{"sigma", sigma}, {"m", m}, {"n", n_r}, {"l", l_r}, {"basis", basis}, {"mass", e}},
                format, out_path);
    return 0;
  }

  if (*pred) {
    auto labels = parse_labels(labels_s);
    double e = 0;
    check(afm_predict(mode.c_str(), m, labels.data(), static_cast<int>(labels.size() / 2),
                      presc.c_str(), N, V.p, &e));
    emit_record(json{{"mode", mode},
                     {"m", m},
                     {"N", N},
                     {"labels", labels_s},
                     {"prescription", presc},
                     {"value", e}},
                format, out_path);
    return 0;
  }

  if (*uf) {
    double e = 0;
    check(afm_universal_f(V.p, m, &e));
    emit_record(json{{"m", m}, {"f", e}}, format, out_path);
    return 0;
  }

  if (*uF || *uG) {
    double e = 0;
    check(*uF ? afm_universal_F(U.p, xarg, &e) : afm_universal_G(U.p, xarg, &e));
    emit_record(json{{"x", xarg}, {*uF ? "F" : "G", e}}, format, out_path);
    return 0;
  }

  if (*tab) {
    char* text = nullptr;
    int failed = 0;
    check(afm_table(table_name.c_str(), table_presc.c_str(), format.c_str(), &text, &failed));
    emit(take_string(text), out_path);
    if (failed) {
      std::cerr << "error: " << table_name << " deviates from the reference values\n";
      return kExitCheckFailed;
    }
    return 0;
  }

  return kExitInvalid;
}
