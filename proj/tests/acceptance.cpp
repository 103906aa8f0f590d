// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Optional argv[1]: path to the cvue executable for the cross-process determinism check.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cvue/adversary.hpp"
#include "cvue/bounds.hpp"
#include "cvue/channel.hpp"
#include "cvue/cli.hpp"
#include "cvue/eb.hpp"
#include "cvue/protocol.hpp"
#include "cvue/stats.hpp"

using namespace cvue;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::ostringstream&)> check;
};

// Independent tail probability P(X < 0), X ~ Normal(mean, var), by Simpson
// integration of the density over [mean - 40 sd, 0].
double normal_left_tail_oracle(double mean, double var) {
  const double sd = std::sqrt(var);
  const double a = mean - 40.0 * sd;
  const double b = 0.0;
  const int steps = 200000;
  const double h = (b - a) / steps;
  auto f = [&](double x) { return std::exp(-(x - mean) * (x - mean) / (2 * var)) / std::sqrt(2 * M_PI * var); };
  double s = f(a) + f(b);
  for (int i = 1; i < steps; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  std::vector<Criterion> criteria;

  criteria.push_back({1, "honest bit-error rate at alpha=0.4, r=3.4", [](std::ostringstream& log) {
    const double beta = ber_analytic(0.4, 3.4);
    const double oracle = normal_left_tail_oracle(0.4, 1.0 / (2.0 * std::cosh(3.4)));
    log << "beta=" << beta << " oracle=" << oracle;
    return close(beta, 0.014, 0.0005) && close(beta, oracle, 1e-9);
  }});

  criteria.push_back({2, "decryption-failure bound at N=1000, t=35", [](std::ostringstream& log) {
    const double e = eps_df(1000, 35, 0.4, 3.4);
    log << "eps_df=" << e;
    return e >= 5.7e-6 && e <= 8.3e-6;
  }});

  criteria.push_back({3, "Monte-Carlo flips and end-to-end failures vs analytic", [](std::ostringstream& log) {
    const ProtocolParams p = make_params(892, 1000, 35, 0.4, 3.4);
    const RoundTripReport r = run_round_trip(p, 100000, 3);
    const double beta = ber_analytic(0.4, 3.4);
    const double z = binomial_z(r.flips, r.modes, beta);
    const double e = eps_df(1000, 35, 0.4, 3.4);
    log << "modes=" << r.modes << " flip_rate=" << r.flip_rate() << " z=" << z << " failures=" << r.failures << "/"
        << r.trials << " wilson=[" << r.failure_interval.lower << "," << r.failure_interval.upper << "] eps_df=" << e;
    return r.modes >= 1000000 && z <= 5.0 && r.failure_interval.lower <= e;
  }});

  criteria.push_back({4, "noisy channel bit-error rate", [](std::ostringstream& log) {
    const ChannelParams ch{0.8, 0.001, ChannelConvention::paper};
    const double v = noisy_ber(0.4, 3.5, ch);
    const double var = (0.8 / std::cosh(3.5) + 1.0 - 0.8 + 0.8 * 0.001) / 2.0;
    const double oracle = 0.5 * std::erfc(0.8 * 0.4 / std::sqrt(2.0 * var));
    const RoundTripReport r = run_round_trip(make_params(892, 1000, 35, 0.4, 3.5), 1000, 4, &ch);
    const double z = binomial_z(r.flips, r.modes, v);
    log << "noisy_ber=" << v << " oracle=" << oracle << " simulated=" << r.flip_rate() << " modes=" << r.modes
        << " z=" << z;
    return close(v, 0.182, 0.002) && close(v, oracle, 1e-12) && r.modes >= 1000000 && z <= 5.0;
  }});

  criteria.push_back({5, "monogamy bound identities", [](std::ostringstream& log) {
    double worst_unit = 0.0;
    for (int n = 2; n <= 64; n += 2) {
      for (auto [d, e] : {std::pair{0.5, 0.5}, std::pair{0.25, 1.0}, std::pair{0.125, 2.0}}) {
        worst_unit = std::max(worst_unit, std::fabs(monogamy_bound_exact(n, d, e) - 1.0));
      }
    }
    int chain_violations = 0;
    int points = 0;
    for (int i = 0; i < 100; ++i) {
      const int n = 2 + 2 * (i % 32);
      const double x = (i + 0.5) / 100.0;  // 2 sqrt(delta eps)
      const double d = x / 2.0;
      ++points;
      if (monogamy_bound_exact(n, d, d) > monogamy_bound_relaxed(n, d, d) * (1 + 1e-12)) ++chain_violations;
    }
    const double hand = (1.0 + 4.0 / 8.0 + 1.0 / 64.0) / 6.0;
    const double n4 = monogamy_bound_exact(4, 1.0 / 16, 1.0 / 16);
    log << "max|exact-1|=" << worst_unit << " chain_violations=" << chain_violations << "/" << points
        << " N4=" << n4 << " hand=" << hand;
    return worst_unit <= 1e-12 && chain_violations == 0 && close(n4, hand, 1e-12);
  }});

  criteria.push_back({6, "tau at N=1000, t=35, alpha=0.4", [](std::ostringstream& log) {
    const double t = tau(1000, 35, 0.4);
    const double oracle = 500.0 + 465.0 * std::log(1.8) / std::log(2.0) + 35.0 + 0.5 / std::log(2.0);
    log << "tau=" << t << " oracle=" << oracle;
    return close(t, 930.0, 0.1) && close(t, oracle, 1e-9);
  }});

  criteria.push_back({7, "asymptotic security region", [](std::ostringstream& log) {
    double min3 = 1e300;
    double min4 = 1e300;
    for (int i = 0; i < 200; ++i) {
      const double a = 0.01 + i * (3.0 - 0.01) / 199.0;
      min3 = std::min(min3, asymptotic_margin(a, 3.0));
      min4 = std::min(min4, asymptotic_margin(a, 4.0));
    }
    log << "min margin r=3: " << min3 << " min margin r=4: " << min4;
    return min3 >= 0.0 && min4 < 0.0;
  }});

  criteria.push_back({8, "entanglement-based preparation equivalence", [](std::ostringstream& log) {
    const ProtocolParams p = make_params(892, 1000, 35, 0.4, 3.4);
    const EquivalenceReport e = game_equivalence_test(p, 100000, 8);
    const RejectionReport r = rejection_oracle_test(0.4, 3.4, 100000, 9);
    log << "k KS p=" << e.offsets_ks.p_value << " (n=" << e.samples << ") cov_err=" << r.max_covariance_error
        << " acceptance=" << r.acceptance_observed << " expected=" << r.acceptance_expected
        << " z=" << r.acceptance_z;
    return e.samples >= 100000 && e.offsets_ks.p_value > 0.01 && e.passed && r.max_covariance_error <= 1e-10 &&
           std::fabs(r.acceptance_z) <= 5.0 && close(r.acceptance_expected, 0.117, 0.002);
  }});

  criteria.push_back({9, "attack harness against the security bound", [](std::ostringstream& log) {
    const ProtocolParams p = make_params(892, 1000, 35, 0.4, 3.4);
    const GameOutcome g = run_cloning_game(p, AttackStrategy{StrategyId::heterodyne_split, 0.5}, 1000, 10);
    const double expected = 0.5 * std::erfc(0.4 / std::sqrt(1.0 + 1.0 / std::cosh(3.4)));
    const double zb = binomial_z(g.bob_bit_errors, g.bob_bits, expected);
    const double zc = binomial_z(g.charlie_bit_errors, g.charlie_bits, expected);
    log << "bob=" << g.bob_bit_error_rate() << " charlie=" << g.charlie_bit_error_rate() << " expected=" << expected
        << " z=(" << zb << "," << zc << ")";
    bool ok = g.bob_bits >= 1000000 && zb <= 5.0 && zc <= 5.0;

    std::vector<ProtocolParams> grid = {make_params(4, 8, 1, 0.4, 1.0), make_params(8, 16, 1, 0.4, 3.4),
                                        make_params(892, 1000, 35, 0.4, 3.4), make_params(40, 64, 0, 0.05, 5.0)};
    int checked = 0;
    int nonvacuous = 0;
    std::uint64_t seed = 100;
    for (const auto& q : grid) {
      for (auto id : {StrategyId::heterodyne_split, StrategyId::forward_to_bob, StrategyId::measure_guess_basis}) {
        const std::uint64_t trials = q.codeword_len >= 1000 ? 200 : 20000;
        const GameOutcome o = run_cloning_game(q, AttackStrategy{id, 0.5}, trials, seed++);
        const BoundCheck b = check_against_bound(o, q);
        ++checked;
        if (!b.vacuous) ++nonvacuous;
        if (!b.holds) {
          ok = false;
          log << " VIOLATION " << to_string(id) << " n=" << q.message_len << " upper=" << b.win_upper
              << " bound=" << b.bound;
        }
      }
    }
    log << " strategies_checked=" << checked << " nonvacuous=" << nonvacuous;
    return ok && nonvacuous > 0;
  }});

  criteria.push_back({10, "byte-identical output for repeated runs", [&exe](std::ostringstream& log) {
    RunConfig c;
    c.protocol = make_params(8, 16, 1, 0.4, 3.4);
    c.trials = 200;
    c.modes = 2000;
    bool ok = true;
    for (auto fmt : {OutputFormat::csv, OutputFormat::json}) {
      c.format = fmt;
      ok = ok && cmd_roundtrip(c) == cmd_roundtrip(c);
      ok = ok && cmd_bounds(c) == cmd_bounds(c);
      ok = ok && cmd_attack(c) == cmd_attack(c);
      ok = ok && cmd_ebcheck(c) == cmd_ebcheck(c);
    }
    c.format = OutputFormat::json;
    ok = ok && cmd_keygen(c) == cmd_keygen(c);
    log << "in-process " << (ok ? "identical" : "differs");
    if (!exe.empty()) {
      const auto dir = std::filesystem::temp_directory_path() / "cvue_determinism";
      std::filesystem::create_directories(dir);
      const std::vector<std::string> runs = {
          "keygen --n 8 --N 16 --t 1 --seed 7",
          "roundtrip --n 8 --N 16 --t 1 --trials 500 --seed 7",
          "bounds --figure fig4 --seed 7",
          "attack --n 4 --N 8 --t 1 --trials 500 --seed 7 --format csv",
          "ebcheck --modes 5000 --seed 7 --format csv",
      };
      int idx = 0;
      for (const auto& args : runs) {
        const auto a = dir / ("a" + std::to_string(idx) + ".out");
        const auto b = dir / ("b" + std::to_string(idx) + ".out");
        ++idx;
        const int ra = std::system(("\"" + exe + "\" " + args + " --out " + a.string()).c_str());
        const int rb = std::system(("\"" + exe + "\" " + args + " --out " + b.string()).c_str());
        const std::string sa = slurp(a);
        if (ra != 0 || rb != 0 || sa.empty() || sa != slurp(b)) {
          ok = false;
          log << " [" << args << " differs or failed]";
        }
      }
      log << "; cross-process runs=" << runs.size();
    }
    return ok;
  }});

  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    bool pass = false;
    try {
      pass = c.check(log);
    } catch (const std::exception& e) {
      log << " exception: " << e.what();
    }
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " | " << log.str() << "\n";
    std::cout.flush();
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << "\n";
  return failed ? 1 : 0;
}
