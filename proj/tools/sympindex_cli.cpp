#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sympindex/decompose.hpp"
#include "sympindex/errors.hpp"
#include "sympindex/index_iteration.hpp"
#include "sympindex/index_jump.hpp"
#include "sympindex/json_io.hpp"
#include "sympindex/matrix.hpp"
#include "sympindex/reeb_count.hpp"
#include "sympindex/splitting.hpp"

using namespace sympindex;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rat parse_rat_or_decimal(const std::string& s) {
  if (s.find('.') != std::string::npos) return parse_decimal(s);
  return parse_rat(s);
}

struct SearchOpts {
  std::int64_t nmax = 1000000;
  std::string epsilon = "1/20";
  std::string delta = "1/40";
  std::int64_t m0 = 0;  // 0: unset
  int want = 1;

  SearchConfig to_config() const {
    SearchConfig sc;
    sc.n_max = Int(nmax);
    sc.epsilon = parse_rat_or_decimal(epsilon);
    sc.delta = parse_rat_or_decimal(delta);
    if (m0 > 0) sc.m0 = Int(m0);
    sc.want = want;
    sc.threads = 4;
    sc.validate();
    return sc;
  }
};

void add_search_flags(CLI::App* cmd, SearchOpts& so) {
  cmd->add_option("--nmax", so.nmax, "scan ceiling for N");
  cmd->add_option("--epsilon", so.epsilon, "vertex closeness, rational or decimal");
  cmd->add_option("--delta", so.delta, "angle window half-width");
  cmd->add_option("--m0", so.m0, "restrict the scan to multiples of m0");
  cmd->add_option("--want", so.want, "number of tuples to collect");
}

std::vector<IndexProfile> profiles_of(const Configuration& cfg) {
  std::vector<IndexProfile> ps;
  ps.reserve(cfg.orbits.size());
  for (const auto& x : cfg.orbits) ps.push_back(x.profile);
  return ps;
}

/* Delta targets that place orbit `top` at degree 2N + n - 1 and every other
 * orbit at degree 2N exactly; empty when some slot has no integer solution. */
std::vector<Int> ladder_pattern(const std::vector<IndexProfile>& ps, int n,
                                std::size_t top) {
  std::vector<Int> want;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    Int base = S_plus_at_one(ps[j].dec) + C_of(ps[j].dec);
    if (j == top) base += n - 1;
    if ((base % 2) != 0) return {};
    want.push_back(base / 2);
  }
  return want;
}

/* Same, but the non-top orbits sit fully outside their windows (Delta 0),
 * which is the shape the companion-pair replay consumes. */
std::vector<Int> pair_pattern(const std::vector<IndexProfile>& ps, int n,
                              std::size_t top) {
  std::vector<Int> want;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    if (j != top) {
      want.push_back(0);
      continue;
    }
    Int base = S_plus_at_one(ps[j].dec) + C_of(ps[j].dec) + (n - 1);
    if ((base % 2) != 0) return {};
    want.push_back(base / 2);
  }
  return want;
}

std::string tuple_line(const JumpTuple& t) {
  std::string s = "N=" + t.N.get_str() + " m=[";
  for (std::size_t i = 0; i < t.m.size(); ++i)
    s += (i ? "," : "") + t.m[i].get_str();
  s += "] delta=[";
  for (std::size_t i = 0; i < t.delta_list.size(); ++i)
    s += (i ? "," : "") + t.delta_list[i].get_str();
  return s + "]";
}

int run(int argc, char** argv) {
  if (const char* env = std::getenv("SYMPINDEX_PRECISION"))
    set_default_precision(std::atoi(env));

  CLI::App app{"index iteration, jump-tuple search and counting replays"};
  app.require_subcommand(1);
  bool as_json = false, as_table = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--table", as_table, "line-oriented output (default)");
  int precision = 0;
  app.add_option("--precision", precision, "decimal digits for emitted values");

  std::string profile_path, matrix_path, config_path, tuples_path;
  std::int64_t arg_m = 1, arg_n = 3, arg_k = 2, arg_mtop = 60;
  bool alternating = false;
  SearchOpts so;

  auto* c_index = app.add_subcommand("index", "iterated indices of a profile");
  c_index->add_option("--profile", profile_path)->required();
  c_index->add_option("--m", arg_m)->required();

  auto* c_mean = app.add_subcommand("mean", "mean index per iteration");
  c_mean->add_option("--profile", profile_path)->required();

  auto* c_dec = app.add_subcommand("decompose", "normal form of a symplectic matrix");
  c_dec->add_option("--matrix", matrix_path)->required();

  auto* c_find = app.add_subcommand("cij-find", "scan for jump tuples");
  c_find->add_option("--profiles", profile_path)->required();
  add_search_flags(c_find, so);

  auto* c_verify = app.add_subcommand("cij-verify", "re-derive a tuple's identities");
  c_verify->add_option("--profiles", profile_path)->required();
  c_verify->add_option("--tuples", tuples_path)->required();
  c_verify->add_option("--delta", so.delta);

  auto* c_comp = app.add_subcommand("cij-companion", "window-complementary tuple");
  c_comp->add_option("--profiles", profile_path)->required();
  c_comp->add_option("--tuples", tuples_path)->required();
  add_search_flags(c_comp, so);

  auto* c_betti = app.add_subcommand("betti", "degree ladder rank");
  c_betti->add_option("--n", arg_n)->required();
  c_betti->add_option("--k", arg_k)->required();
  c_betti->add_flag("--alternating-sum", alternating, "signed partial sum through k");

  auto* c_morse = app.add_subcommand("morse", "generator counts against the ladder");
  c_morse->add_option("--config", config_path)->required();
  c_morse->add_option("--mtop", arg_mtop);

  auto* c_ident = app.add_subcommand("identity", "mean index against the Euler density");
  c_ident->add_option("--config", config_path)->required();

  auto* c_11 = app.add_subcommand("certify-1-1", "replay the counting argument");
  c_11->add_option("--config", config_path)->required();
  c_11->add_option("--tuples", tuples_path);
  add_search_flags(c_11, so);

  auto* c_13 = app.add_subcommand("certify-1-3", "replay the two-orbit ellipticity argument");
  c_13->add_option("--config", config_path)->required();
  c_13->add_option("--tuples", tuples_path);
  add_search_flags(c_13, so);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (precision > 0) set_default_precision(precision);
  const bool json = as_json && !as_table;

  if (c_index->parsed()) {
    IndexProfile p = profile_from_json(slurp(profile_path));
    if (json) {
      std::cout << iterate_record_to_json(p, Int(arg_m)) << "\n";
    } else {
      std::cout << "mu_minus " << mu_minus_iter(p, arg_m).get_str() << "\n"
                << "nu " << nu_iter(p, arg_m).get_str() << "\n"
                << "mu_plus " << mu_plus_iter(p, arg_m).get_str() << "\n";
    }
    return 0;
  }

  if (c_mean->parsed()) {
    IndexProfile p = profile_from_json(slurp(profile_path));
    if (json) {
      std::cout << mean_record_to_json(p) << "\n";
    } else {
      ApproxRat mean = mean_index(p);
      std::cout << "mean " << format_rat(mean.val)
                << (mean.exact() ? " exact" : " +/- " + format_rat(mean.err)) << "\n";
    }
    return 0;
  }

  if (c_dec->parsed()) {
    SymplecticMatrix M = matrix_from_json(slurp(matrix_path));
    NormalFormDecomposition dec = decompose_numeric(M);
    if (json) {
      std::cout << decomposition_to_json(dec) << "\n";
    } else {
      for (const auto& b : dec.blocks) {
        std::cout << block_kind_name(b.kind);
        if (b.has_angle()) std::cout << " " << b.ang().describe();
        if (b.kind == BlockKind::Hyp2k) std::cout << " k=" << b.k;
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (c_find->parsed()) {
    auto ps = profiles_from_json(slurp(profile_path));
    auto ts = find_tuples(ps, so.to_config());
    if (json) {
      std::cout << tuples_to_json(ts) << "\n";
    } else {
      for (const auto& t : ts) std::cout << tuple_line(t) << "\n";
    }
    return 0;
  }

  if (c_verify->parsed()) {
    auto ps = profiles_from_json(slurp(profile_path));
    auto ts = tuples_from_json(slurp(tuples_path));
    bool all_ok = true;
    for (auto& t : ts) {
      bind_tuple_to_profiles(t, ps);
      IdentityReport rep = verify_tuple(ps, t, parse_rat_or_decimal(so.delta));
      all_ok = all_ok && rep.ok();
      if (json) {
        std::cout << identity_report_to_json(rep) << "\n";
      } else {
        std::cout << tuple_line(t) << (rep.ok() ? " ok" : " FAIL") << "\n";
        for (const auto& f : rep.failures()) std::cout << "  " << f << "\n";
      }
    }
    return all_ok ? 0 : 1;
  }

  if (c_comp->parsed()) {
    auto ps = profiles_from_json(slurp(profile_path));
    auto ts = tuples_from_json(slurp(tuples_path));
    if (ts.empty()) throw InputError("no tuple in " + tuples_path);
    bind_tuple_to_profiles(ts[0], ps);
    JumpTuple t2 = symmetric_tuple(ps, ts[0], so.to_config());
    if (json)
      std::cout << tuple_to_json(t2) << "\n";
    else
      std::cout << tuple_line(t2) << "\n";
    return 0;
  }

  if (c_betti->parsed()) {
    int n = static_cast<int>(arg_n);
    if (json) {
      std::cout << betti_table_to_json(n, Int(arg_k)) << "\n";
    } else {
      Int v = alternating ? betti_alternating_sum(n, arg_k) : betti(n, arg_k);
      std::cout << v.get_str() << "\n";
    }
    return 0;
  }

  if (c_morse->parsed()) {
    Configuration cfg = config_from_json(slurp(config_path));
    MorseReport rep = morse_check(cfg, Int(arg_mtop));
    if (json) {
      std::cout << morse_report_to_json(rep) << "\n";
    } else {
      std::cout << (rep.ok ? "ok" : "violated") << " m_top " << rep.m_top.get_str() << "\n";
      for (const auto& d : rep.violated_degrees)
        std::cout << "  degree " << d.get_str() << "\n";
    }
    return rep.ok ? 0 : 1;
  }

  if (c_ident->parsed()) {
    Configuration cfg = config_from_json(slurp(config_path));
    MeanIdentityReport rep = mean_index_identity_check(cfg);
    if (json) {
      std::cout << mean_identity_to_json(rep) << "\n";
    } else {
      std::cout << (rep.holds ? "holds" : "violated") << " residual "
                << format_rat(rep.residual.val) << " tolerance "
                << format_rat(rep.tolerance) << "\n";
    }
    return rep.holds ? 0 : 1;
  }

  if (c_11->parsed()) {
    Configuration cfg = config_from_json(slurp(config_path));
    auto ps = profiles_of(cfg);
    SearchConfig sc = so.to_config();
    std::vector<JumpTuple> ts;
    if (!tuples_path.empty()) {
      ts = tuples_from_json(slurp(tuples_path));
      for (auto& t : ts) bind_tuple_to_profiles(t, ps);
    } else {
      for (std::size_t i = 0; i < ps.size(); ++i) {
        auto want = ladder_pattern(ps, cfg.ambient_n, i);
        if (want.empty()) continue;
        try {
          auto found = find_tuples_with_delta(ps, sc, want);
          ts.insert(ts.end(), found.begin(), found.end());
        } catch (const NoTupleFound&) {
        }
      }
      if (ts.empty()) ts = find_tuples(ps, sc);
    }
    Verdict v = replay_theorem_1_1(cfg, ts, sc.delta);
    if (json) {
      std::cout << verdict_to_json(v) << "\n";
    } else {
      std::cout << to_string(v.status) << " lower_bound "
                << v.orbit_lower_bound.get_str() << "\n";
      for (const auto& e : v.evidence) std::cout << "  " << e << "\n";
    }
    if (v.status == VerdictStatus::CONSISTENT_AT_DEPTH) return 0;
    return v.status == VerdictStatus::INPUT_ERROR ? 2 : 1;
  }

  if (c_13->parsed()) {
    Configuration cfg = config_from_json(slurp(config_path));
    auto ps = profiles_of(cfg);
    SearchConfig sc = so.to_config();
    EllipticityReport rep;
    if (!tuples_path.empty()) {
      auto ts = tuples_from_json(slurp(tuples_path));
      if (ts.size() != 2) throw InputError("certify-1-3 expects exactly two tuples");
      for (auto& t : ts) bind_tuple_to_profiles(t, ps);
      rep = replay_theorem_1_3(cfg, ts[0], ts[1], sc.delta);
    } else {
      bool ran = false;
      for (std::size_t i = 0; i < ps.size() && !(ran && rep.ok); ++i) {
        auto want = pair_pattern(ps, cfg.ambient_n, i);
        if (want.empty()) continue;
        try {
          auto t = find_tuples_with_delta(ps, sc, want);
          JumpTuple t2 = symmetric_tuple(ps, t[0], sc);
          rep = replay_theorem_1_3(cfg, t[0], t2, sc.delta);
          ran = true;
        } catch (const NoTupleFound&) {
        }
      }
      if (!ran) throw NoTupleFound("no window-pattern pair reachable below nmax");
    }
    if (json) {
      std::cout << ellipticity_report_to_json(rep) << "\n";
    } else {
      std::cout << (rep.ok ? "ok" : "failed") << " first " << rep.first_label
                << " second " << rep.second_label << "\n";
      if (!rep.failure.empty()) std::cout << "  " << rep.failure << "\n";
      for (const auto& n : rep.notes) std::cout << "  " << n << "\n";
    }
    return rep.ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
