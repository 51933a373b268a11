#include "schurlab/collision.hpp"
#include "schurlab/sampling.hpp"
#include "schurlab/serialize.hpp"
#include "schurlab/spectra.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

namespace sl = schurlab;

namespace {

void emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty()) {
    std::cout << contents;
  } else {
    sl::write_file_atomic(out_path, contents);
  }
}

std::string manifest_comment(const sl::RunManifest& m) {
  return "# manifest " + m.to_json().dump() + "\n";
}

// --- dist ---------------------------------------------------------------

struct DistArgs {
  int k = 0, d = 0;
  std::string compare = "both";
  std::string format = "csv";
  bool bounds = false;
  std::string out;
};

int run_dist(const DistArgs& a) {
  if (a.k < 1 || a.k > sl::kMaxK)
    throw std::invalid_argument("dist: k exceeds cap " + std::to_string(sl::kMaxK));
  const bool want_schur = a.compare != "planch";
  const bool want_planch = a.compare != "schur";
  if (want_schur && a.d < 1) throw std::invalid_argument("dist: --d required for schur");

  sl::PartitionDistribution p, s;
  if (want_planch) p = sl::planch(a.k);
  if (want_schur) s = sl::schur(a.k, a.d);
  const auto& lead = want_planch ? p : s;

  sl::RunManifest man;
  man.command = "dist";
  man.params = {{"k", a.k}, {"d", a.d}, {"compare", a.compare}};

  std::vector<sl::BoundReport> reports;
  if (a.bounds && want_schur && want_planch && a.k >= 2 && a.k <= a.d) {
    reports.push_back(sl::check_delta_bounds(a.k, a.d));
    reports.push_back(sl::check_fidelity_lower_bound(a.k, a.d));
  }
  if (a.bounds && want_schur && want_planch && a.k >= a.d && a.d >= 2)
    reports.push_back(sl::check_amplified_lower_bound(a.k, a.d));

  if (a.format == "json") {
    sl::Json j;
    j["manifest"] = man.to_json();
    j["schema"] = "schurlab/dist/1";
    sl::Json rows = sl::Json::array();
    for (std::size_t i = 0; i < lead.probs.size(); ++i) {
      sl::Json row;
      row["lambda"] = lead.probs[i].first.to_string();
      if (want_planch) {
        row["planch"] = sl::rat_string(p.probs[i].second);
        row["planch_decimal"] = sl::rat_decimal(p.probs[i].second);
      }
      if (want_schur) {
        row["schur"] = sl::rat_string(s.probs[i].second);
        row["schur_decimal"] = sl::rat_decimal(s.probs[i].second);
      }
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    if (want_planch && want_schur) {
      const sl::Rat delta = sl::l1_distance(s, p);
      j["delta"] = sl::rat_string(delta);
      j["delta_decimal"] = sl::rat_decimal(delta);
      j["bhattacharyya"] = static_cast<double>(sl::bhattacharyya(s, p));
    }
    if (!reports.empty()) {
      sl::Json jb = sl::Json::array();
      for (const auto& r : reports) jb.push_back(sl::bound_report_json(r));
      j["bounds"] = std::move(jb);
    }
    emit(a.out, j.dump(2) + "\n");
    return 0;
  }

  std::string csv = manifest_comment(man);
  std::vector<std::string> header{"lambda"};
  if (want_planch) {
    header.push_back("planch");
    header.push_back("planch_decimal");
  }
  if (want_schur) {
    header.push_back("schur");
    header.push_back("schur_decimal");
  }
  csv += sl::csv_row(header);
  for (std::size_t i = 0; i < lead.probs.size(); ++i) {
    std::vector<std::string> row{lead.probs[i].first.to_string()};
    if (want_planch) {
      row.push_back(sl::rat_string(p.probs[i].second));
      row.push_back(sl::rat_decimal(p.probs[i].second));
    }
    if (want_schur) {
      row.push_back(sl::rat_string(s.probs[i].second));
      row.push_back(sl::rat_decimal(s.probs[i].second));
    }
    csv += sl::csv_row(row);
  }
  if (want_planch && want_schur) {
    const sl::Rat delta = sl::l1_distance(s, p);
    csv += "# delta," + sl::rat_string(delta) + "," + sl::rat_decimal(delta) + "\n";
    std::ostringstream bc;
    bc << std::setprecision(12) << sl::bhattacharyya(s, p);
    csv += "# bhattacharyya," + bc.str() + "\n";
  }
  for (const auto& r : reports)
    csv += "# bound," + r.name + "," + (r.satisfied ? "satisfied" : "VIOLATED") + "\n";
  emit(a.out, csv);
  return 0;
}

// --- hsp ----------------------------------------------------------------

struct HspArgs {
  std::string group, subgroup = "trivial";
  int k = 1;
  std::string mode = "fourier";
  std::string format = "csv";
  std::string out;
};

sl::Matrix kron_power(const sl::Matrix& A, int k) {
  sl::Matrix M = sl::Matrix::Identity(1, 1);
  for (int i = 0; i < k; ++i) {
    sl::Matrix next(M.rows() * A.rows(), M.cols() * A.cols());
    for (long long r = 0; r < M.rows(); ++r)
      for (long long c = 0; c < M.cols(); ++c)
        next.block(r * A.rows(), c * A.cols(), A.rows(), A.cols()) = M(r, c) * A;
    M = std::move(next);
  }
  return M;
}

int run_hsp(const HspArgs& a) {
  if (a.k < 1 || a.k > sl::kMaxK)
    throw std::invalid_argument("hsp: k exceeds cap " + std::to_string(sl::kMaxK));
  const sl::FiniteGroup G = sl::make_group(a.group);
  const sl::Subgroup H = sl::parse_subgroup(G, a.subgroup);
  const sl::CharacterTable table = sl::cached_character_table(a.group, G);

  sl::RunManifest man;
  man.command = "hsp";
  man.params = {{"group", a.group}, {"subgroup", a.subgroup}, {"k", a.k}, {"mode", a.mode}};

  sl::Json j;
  j["manifest"] = man.to_json();
  j["schema"] = "schurlab/hsp/1";
  std::string csv = manifest_comment(man);

  if (a.mode == "fourier") {
    csv += sl::csv_row({"irrep", "dim", "prob"});
    sl::Json rows = sl::Json::array();
    for (std::size_t s = 0; s < table.dims.size(); ++s) {
      const double pr = sl::fourier_probability(G, table, H, static_cast<int>(s));
      std::ostringstream os;
      os << std::setprecision(12) << pr;
      csv += sl::csv_row({table.labels[s], std::to_string(table.dims[s]), os.str()});
      rows.push_back({{"irrep", table.labels[s]}, {"dim", table.dims[s]}, {"prob", pr}});
    }
    j["rows"] = std::move(rows);
  } else if (a.mode == "schur") {
    double dense = 1;
    for (int i = 0; i < a.k; ++i) dense *= G.order();
    if (dense > sl::kMaxDenseDim)
      throw std::invalid_argument("hsp: |G|^k exceeds dense cap 4096");
    const sl::Matrix rho = sl::hidden_subgroup_state(G, H);
    const sl::Matrix gamma = kron_power(rho, a.k);
    const auto dist = sl::weak_schur_dist(gamma, a.k, G.order());
    csv += sl::csv_row({"lambda", "prob"});
    sl::Json rows = sl::Json::array();
    for (const auto& [lambda, pr] : dist) {
      std::ostringstream os;
      os << std::setprecision(12) << pr;
      csv += sl::csv_row({lambda.to_string(), os.str()});
      rows.push_back({{"lambda", lambda.to_string()}, {"prob", pr}});
    }
    j["rows"] = std::move(rows);
  } else if (a.mode == "joint") {
    const sl::JointDistribution joint = sl::joint_fourier_schur(G, H, a.k);
    csv += sl::csv_row({"type", "lambda", "prob"});
    sl::Json rows = sl::Json::array();
    for (const auto& [key, pr] : joint.entries) {
      std::string type;
      for (std::size_t i = 0; i < key.first.size(); ++i) {
        if (i) type += '+';
        type += table.labels[key.first[i]];
      }
      std::ostringstream os;
      os << std::setprecision(12) << pr;
      csv += sl::csv_row({type, key.second.to_string(), os.str()});
      rows.push_back({{"type", type}, {"lambda", key.second.to_string()}, {"prob", pr}});
    }
    j["rows"] = std::move(rows);
    const sl::RepeatedIrrep rep = sl::prob_repeated_irrep(G, H, a.k);
    j["repeated_irrep"] = {{"exact", rep.exact}, {"bound", sl::rat_string(rep.bound)}};
    csv += "# repeated_irrep_exact," + std::to_string(rep.exact) + "\n";
    csv += "# repeated_irrep_bound," + sl::rat_string(rep.bound) + "\n";
  } else {
    throw std::invalid_argument("hsp: unknown mode " + a.mode);
  }
  const sl::Rat t1 = sl::hsp_failure_bound(G.order(), H.order(), table.d_max, a.k);
  j["theorem_bound"] = sl::rat_string(t1);
  csv += "# theorem_bound," + sl::rat_string(t1) + "\n";

  emit(a.out, a.format == "json" ? j.dump(2) + "\n" : csv);
  return 0;
}

// --- collision ----------------------------------------------------------

int run_collision_advantage(int k, int d, int r, const std::string& out) {
  const sl::Advantage adv = sl::distinguish_advantage(k, d, r);
  sl::RunManifest man;
  man.command = "collision advantage";
  man.params = {{"k", k}, {"d", d}, {"r", r}};
  sl::Json j;
  j["manifest"] = man.to_json();
  j["schema"] = "schurlab/collision/1";
  j["l1"] = sl::rat_string(adv.l1);
  j["l1_decimal"] = sl::rat_decimal(adv.l1);
  j["success"] = sl::rat_string(adv.success);
  j["success_decimal"] = sl::rat_decimal(adv.success);
  emit(out, j.dump(2) + "\n");
  return 0;
}

int run_collision_plan(int d, int r, const std::string& out) {
  const sl::CollisionPlan p = sl::plan_collision_algorithm(d, r);
  sl::RunManifest man;
  man.command = "collision plan";
  man.params = {{"d", d}, {"r", r}};
  sl::Json j;
  j["manifest"] = man.to_json();
  j["schema"] = "schurlab/collision/1";
  j["table_size"] = p.table_size;
  j["m"] = p.m;
  j["grover_iters"] = p.grover_iters;
  j["total_queries"] = p.total_queries;
  j["grover_iters_unknown_input"] = sl::grover_iterations_unknown_input(d, r);
  emit(out, j.dump(2) + "\n");
  return 0;
}

int run_collision_montecarlo(int d, int r, int trials, unsigned long long seed,
                             const std::string& cas, const std::string& out) {
  sl::CollisionCase c;
  if (cas == "one_to_one")
    c = sl::CollisionCase::OneToOne;
  else if (cas == "r_to_one")
    c = sl::CollisionCase::RToOne;
  else
    throw std::invalid_argument("collision montecarlo: case must be one_to_one or r_to_one");
  const sl::MonteCarloReport rep = sl::montecarlo_collision(d, r, trials, seed, c);
  sl::RunManifest man;
  man.command = "collision montecarlo";
  man.params = {{"d", d}, {"r", r}, {"trials", trials}, {"case", cas}};
  man.seed = seed;
  sl::Json j;
  j["manifest"] = man.to_json();
  j["schema"] = "schurlab/collision/1";
  j["success_rate"] = rep.success_rate;
  j["mean_queries"] = rep.mean_queries;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  emit(out, j.dump(2) + "\n");
  return 0;
}

// --- swaptest -----------------------------------------------------------

sl::SwapTestInstance random_instance(std::mt19937_64& rng, int m, int dim) {
  std::uniform_int_distribution<int> nb_dist(1, 3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 1);
  const int nb = nb_dist(rng);

  sl::SwapTestInstance inst;
  inst.m = m;
  inst.dim = dim;
  auto random_unit = [&] {
    sl::Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = sl::Complex(gauss(rng), gauss(rng));
    return sl::Vector(v / v.norm());
  };
  double norm = 0;
  for (int i = 0; i < nb; ++i) {
    sl::SwapBranch b;
    b.amplitude = sl::Complex(gauss(rng), gauss(rng));
    norm += std::norm(b.amplitude);
    b.alpha = random_unit();
    b.theta = coin(rng);
    if (b.theta == 1) {
      b.beta = b.alpha;
    } else {
      sl::Vector w = random_unit();
      w -= b.alpha.dot(w) * b.alpha;
      while (w.norm() < 1e-6) {
        w = random_unit();
        w -= b.alpha.dot(w) * b.alpha;
      }
      b.beta = w / w.norm();
    }
    inst.branches.push_back(std::move(b));
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& b : inst.branches) b.amplitude *= scale;
  return inst;
}

int run_swaptest(int m, int dim, int trials, unsigned long long seed,
                 const std::string& out) {
  if (m < 1 || dim < 2 || trials < 1)
    throw std::invalid_argument("swaptest: need m >= 1, dim >= 2, trials >= 1");
  double size = 1;
  for (int i = 0; i < 2 * m; ++i) size *= dim;
  if (size > 4096) throw std::invalid_argument("swaptest: dim^{2m} exceeds cap 4096");

  std::mt19937_64 rng(seed);
  sl::RunManifest man;
  man.command = "swaptest";
  man.params = {{"m", m}, {"dim", dim}, {"trials", trials}};
  man.seed = seed;

  sl::Json j;
  j["manifest"] = man.to_json();
  j["schema"] = "schurlab/swaptest/1";
  const double bound = 1.0 - std::pow(2.0, 2 - m);
  j["bound"] = bound;
  j["vacuous"] = bound < 0;
  bool all_pass = true;
  double min_fid = 1.0;
  sl::Json rows = sl::Json::array();
  for (int t = 0; t < trials; ++t) {
    const auto inst = random_instance(rng, m, dim);
    const sl::SwapFidelity f = sl::swap_fidelity(inst);
    all_pass = all_pass && f.fidelity >= bound - 1e-12 &&
               std::abs(f.fidelity - f.exact_formula) < 1e-9;
    min_fid = std::min(min_fid, f.fidelity);
    rows.push_back({{"fidelity", f.fidelity},
                    {"formula", f.exact_formula},
                    {"branches", inst.branches.size()}});
  }
  j["rows"] = std::move(rows);
  j["all_pass"] = all_pass;
  j["min_fidelity"] = min_fid;
  emit(out, j.dump(2) + "\n");
  return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sampling distributions and collision-finding accounting"};
  app.require_subcommand(1);

  DistArgs da;
  auto* dist = app.add_subcommand("dist", "Plancherel / Schur distributions and bounds");
  dist->add_option("--k", da.k, "number of copies")->required();
  dist->add_option("--d", da.d, "local dimension");
  dist->add_option("--compare", da.compare)->check(CLI::IsMember({"planch", "schur", "both"}));
  dist->add_option("--format", da.format)->check(CLI::IsMember({"csv", "json"}));
  dist->add_flag("--bounds", da.bounds, "emit bound reports");
  dist->add_option("--out", da.out, "output file (default stdout)");

  HspArgs ha;
  auto* hsp = app.add_subcommand("hsp", "hidden subgroup sampling distributions");
  hsp->add_option("--group", ha.group, "family:param, e.g. sym:3")->required();
  hsp->add_option("--subgroup", ha.subgroup, "trivial|full|gen:...|reflection:j");
  hsp->add_option("--k", ha.k, "number of registers");
  hsp->add_option("--mode", ha.mode)->check(CLI::IsMember({"fourier", "schur", "joint"}));
  hsp->add_option("--format", ha.format)->check(CLI::IsMember({"csv", "json"}));
  hsp->add_option("--out", ha.out);

  auto* col = app.add_subcommand("collision", "collision-finding distinguisher");
  col->require_subcommand(1);
  int ck = 2, cd = 0, cr = 0, ctrials = 10000;
  unsigned long long cseed = 0;
  std::string ccase = "r_to_one", cout_path;
  auto* adv = col->add_subcommand("advantage", "weak Schur distinguishing advantage");
  adv->add_option("--k", ck)->required();
  adv->add_option("--d", cd)->required();
  adv->add_option("--r", cr)->required();
  adv->add_option("--out", cout_path);
  auto* plan = col->add_subcommand("plan", "query-count plan");
  plan->add_option("--d", cd)->required();
  plan->add_option("--r", cr)->required();
  plan->add_option("--out", cout_path);
  auto* mc = col->add_subcommand("montecarlo", "Monte Carlo success estimate");
  mc->add_option("--d", cd)->required();
  mc->add_option("--r", cr)->required();
  mc->add_option("--trials", ctrials);
  mc->add_option("--seed", cseed);
  mc->add_option("--case", ccase)->check(CLI::IsMember({"one_to_one", "r_to_one"}));
  mc->add_option("--out", cout_path);

  auto* swap = app.add_subcommand("swaptest", "amplified swap test fidelity table");
  int sm = 2, sdim = 2, strials = 50;
  unsigned long long sseed = 0;
  std::string sout;
  swap->add_option("--m", sm)->required();
  swap->add_option("--dim", sdim);
  swap->add_option("--trials", strials);
  swap->add_option("--seed", sseed);
  swap->add_option("--out", sout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dist) return run_dist(da);
    if (*hsp) return run_hsp(ha);
    if (*adv) return run_collision_advantage(ck, cd, cr, cout_path);
    if (*plan) return run_collision_plan(cd, cr, cout_path);
    if (*mc) return run_collision_montecarlo(cd, cr, ctrials, cseed, ccase, cout_path);
    if (*swap) return run_swaptest(sm, sdim, strials, sseed, sout);
  } catch (const std::exception& e) {
    schurlab::Json err;
    err["error"] = e.what();
    err["exit_code"] = schurlab::exit_code_for(e);
    std::cerr << err.dump() << "\n";
    return schurlab::exit_code_for(e);
  }
  return 2;
}
