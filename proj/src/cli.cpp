#include "cvue/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cvue/eb.hpp"

namespace cvue {

using nlohmann::json;

namespace {

const std::set<std::string> kFigures = {"fig1", "fig2a", "fig2b", "fig4", "report"};

json range_to_json(const Range& r) { return json::array({r.start, r.stop, r.points}); }

Range range_from_json(const json& j, const char* name) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument(std::string("config: grid.") + name + " must be [start, stop, points]");
  }
  Range r{j[0].get<double>(), j[1].get<double>(), j[2].get<int>()};
  if (r.points < 1) throw std::invalid_argument(std::string("config: grid.") + name + " needs points >= 1");
  return r;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) throw std::invalid_argument("config: unknown key '" + where + item.key() + "'");
  }
}

json grid_to_json(const FigureGrid& g) {
  return {{"r", range_to_json(g.squeezing)},
          {"alpha", range_to_json(g.displacement)},
          {"T", range_to_json(g.transmittance)},
          {"xi", range_to_json(g.excess_noise)},
          {"n", range_to_json(g.message_len)},
          {"T_curves", g.transmittance_curves},
          {"alpha_fixed", g.fixed_displacement},
          {"r_fixed", g.fixed_squeezing},
          {"xi_fixed", g.fixed_excess_noise},
          {"t_fraction", g.flip_fraction}};
}

void grid_from_json(const json& j, FigureGrid& g) {
  reject_unknown(j, {"r", "alpha", "T", "xi", "n", "T_curves", "alpha_fixed", "r_fixed", "xi_fixed", "t_fraction"},
                 "grid.");
  if (j.contains("r")) g.squeezing = range_from_json(j["r"], "r");
  if (j.contains("alpha")) g.displacement = range_from_json(j["alpha"], "alpha");
  if (j.contains("T")) g.transmittance = range_from_json(j["T"], "T");
  if (j.contains("xi")) g.excess_noise = range_from_json(j["xi"], "xi");
  if (j.contains("n")) g.message_len = range_from_json(j["n"], "n");
  if (j.contains("T_curves")) g.transmittance_curves = j["T_curves"].get<std::vector<double>>();
  if (j.contains("alpha_fixed")) g.fixed_displacement = j["alpha_fixed"].get<double>();
  if (j.contains("r_fixed")) g.fixed_squeezing = j["r_fixed"].get<double>();
  if (j.contains("xi_fixed")) g.fixed_excess_noise = j["xi_fixed"].get<double>();
  if (j.contains("t_fraction")) g.flip_fraction = j["t_fraction"].get<double>();
}

void validate_grid(const FigureGrid& g) {
  for (const Range* r : {&g.squeezing, &g.displacement, &g.transmittance, &g.excess_noise, &g.message_len}) {
    if (r->points < 1) throw std::invalid_argument("config: grid ranges need points >= 1");
  }
  for (double r : g.squeezing.values()) {
    if (!(r >= 0.0)) throw std::invalid_argument("config: grid r values must be >= 0");
  }
  for (double a : g.displacement.values()) {
    if (!(a > 0.0)) throw std::invalid_argument("config: grid alpha values must be > 0");
  }
  for (double t : g.transmittance.values()) ChannelParams{t, 0.0, ChannelConvention::paper}.validate();
  for (double t : g.transmittance_curves) ChannelParams{t, 0.0, ChannelConvention::paper}.validate();
  for (double xi : g.excess_noise.values()) ChannelParams{1.0, xi, ChannelConvention::paper}.validate();
  for (double n : g.message_len.values()) {
    if (!(n >= 1.0)) throw std::invalid_argument("config: grid n values must be >= 1");
  }
  if (!(g.fixed_displacement > 0.0)) throw std::invalid_argument("config: grid alpha_fixed must be > 0");
  if (!(g.fixed_squeezing >= 0.0)) throw std::invalid_argument("config: grid r_fixed must be >= 0");
  if (!(g.fixed_excess_noise >= 0.0)) throw std::invalid_argument("config: grid xi_fixed must be >= 0");
  if (!(g.flip_fraction >= 0.0 && g.flip_fraction <= 0.5)) {
    throw std::invalid_argument("config: grid t_fraction must lie in [0, 1/2]");
  }
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string csv(const std::string& hash, const std::vector<std::string>& columns,
                const std::vector<std::vector<double>>& rows) {
  std::string out = "# config fnv1a64=" + hash + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_number(row[i]);
    out += "\n";
  }
  return out;
}

/// Ordered name/value record emitted as a one-row CSV or a JSON object.
struct Record {
  std::vector<std::pair<std::string, json>> fields;

  void add(const std::string& name, json value) { fields.emplace_back(name, std::move(value)); }

  std::string render(const RunConfig& config, const std::string& kind) const {
    const std::string hash = config_hash(config);
    if (config.format == OutputFormat::json) {
      json j = {{"command", kind}, {"config_hash", hash}, {"config", config_to_json(config)}};
      json body = json::object();
      for (const auto& [k, v] : fields) body[k] = v;
      j["result"] = body;
      return j.dump(2) + "\n";
    }
    std::string out = "# config fnv1a64=" + hash + "\n";
    std::string values;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      out += (i ? "," : "") + fields[i].first;
      const json& v = fields[i].second;
      std::string cell;
      if (v.is_number()) {
        cell = format_number(v.get<double>());
      } else if (v.is_boolean()) {
        cell = v.get<bool>() ? "1" : "0";
      } else if (v.is_null()) {
        cell = "nan";
      } else if (v.is_string()) {
        cell = v.get<std::string>();
      } else {
        cell = v.dump();
      }
      values += (i ? "," : "") + cell;
    }
    return out + "\n" + values + "\n";
  }
};

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json protocol_to_json(const ProtocolParams& p) {
  return {{"lambda", p.security_param}, {"n", p.message_len}, {"N", p.codeword_len}, {"t", p.correctable},
          {"z", p.pad_len},           {"alpha", p.displacement}, {"r", p.squeezing}};
}

ProtocolParams protocol_from_json(const json& j, ProtocolParams p) {
  reject_unknown(j, {"lambda", "n", "N", "t", "z", "alpha", "r"}, "protocol.");
  if (j.contains("lambda")) p.security_param = j["lambda"].get<int>();
  if (j.contains("n")) p.message_len = j["n"].get<int>();
  if (j.contains("N")) p.codeword_len = j["N"].get<int>();
  if (j.contains("t")) p.correctable = j["t"].get<int>();
  p.pad_len = j.contains("z") ? j["z"].get<int>() : p.message_len;
  if (j.contains("alpha")) p.displacement = j["alpha"].get<double>();
  if (j.contains("r")) p.squeezing = j["r"].get<double>();
  return p;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  if (value == std::trunc(value) && std::fabs(value) < 1e15) {
    const auto res = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(value));
    return std::string(buf, res.ptr);
  }
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void RunConfig::validate() const {
  protocol.validate();
  channel.validate();
  if (codec == CodecScheme::concrete) protocol.codec_spec(codec).validate();
  strategy.validate();
  if (!kFigures.count(figure)) {
    throw std::invalid_argument("config: unknown figure '" + figure + "' (expected fig1, fig2a, fig2b, fig4 or report)");
  }
  validate_grid(grid);
  if (out.empty()) throw std::invalid_argument("config: output path must not be empty");
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: top level must be a JSON object");
  reject_unknown(j, {"protocol", "channel", "codec", "seed", "trials", "modes", "figure", "grid", "strategy", "out",
                     "format"},
                 "");
  RunConfig c;
  if (j.contains("protocol")) c.protocol = protocol_from_json(j["protocol"], c.protocol);
  if (j.contains("channel")) {
    const auto& ch = j["channel"];
    reject_unknown(ch, {"T", "xi", "convention", "fiber_km"}, "channel.");
    if (ch.contains("fiber_km")) c.channel.transmittance = transmittance_from_fiber(ch["fiber_km"].get<double>());
    if (ch.contains("T")) c.channel.transmittance = ch["T"].get<double>();
    if (ch.contains("xi")) c.channel.excess_noise = ch["xi"].get<double>();
    if (ch.contains("convention")) {
      c.channel.convention = channel_convention_from_string(ch["convention"].get<std::string>());
    }
  }
  if (j.contains("codec")) c.codec = codec_scheme_from_string(j["codec"].get<std::string>());
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("trials")) c.trials = j["trials"].get<std::uint64_t>();
  if (j.contains("modes")) c.modes = j["modes"].get<std::uint64_t>();
  if (j.contains("figure")) c.figure = j["figure"].get<std::string>();
  if (c.figure != "report" && kFigures.count(c.figure)) c.grid = default_grid(figure_from_string(c.figure));
  if (j.contains("grid")) {
    grid_from_json(j["grid"], c.grid);
    c.grid_overridden = true;
  }
  if (j.contains("strategy")) {
    const auto& s = j["strategy"];
    reject_unknown(s, {"id", "split_transmittance"}, "strategy.");
    if (s.contains("id")) c.strategy.id = strategy_from_string(s["id"].get<std::string>());
    if (s.contains("split_transmittance")) c.strategy.split_transmittance = s["split_transmittance"].get<double>();
  }
  if (j.contains("out")) c.out = j["out"].get<std::string>();
  if (j.contains("format")) {
    const auto f = j["format"].get<std::string>();
    if (f == "csv") {
      c.format = OutputFormat::csv;
    } else if (f == "json") {
      c.format = OutputFormat::json;
    } else {
      throw std::invalid_argument("config: format must be csv or json");
    }
  }
  c.validate();
  return c;
}

json config_to_json(const RunConfig& c) {
  return {{"protocol", protocol_to_json(c.protocol)},
          {"channel",
           {{"T", c.channel.transmittance}, {"xi", c.channel.excess_noise}, {"convention", to_string(c.channel.convention)}}},
          {"codec", to_string(c.codec)},
          {"seed", c.seed},
          {"trials", c.trials},
          {"modes", c.modes},
          {"figure", c.figure},
          {"grid", grid_to_json(c.grid)},
          {"strategy", {{"id", to_string(c.strategy.id)}, {"split_transmittance", c.strategy.split_transmittance}}},
          {"format", c.format == OutputFormat::csv ? "csv" : "json"}};
}

std::string config_hash(const RunConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(config_to_json(config).dump())));
  return buf;
}

// ---------------------------------------------------------------------------

json key_to_json(const QecmKey& key, const ProtocolParams& params) {
  validate_key(key, params);
  json j = {{"s", to_hex(key.pad)},
            {"phi", to_hex(key.directions)},
            {"k", key.offsets},
            {"params", protocol_to_json(params)}};
  j["label"] = key.label ? json(key.label->str()) : json(nullptr);
  return j;
}

QecmKey key_from_json(const json& j, ProtocolParams& params) {
  for (const char* field : {"s", "phi", "k", "params", "label"}) {
    if (!j.contains(field)) throw std::invalid_argument(std::string("key file: missing field '") + field + "'");
  }
  params = protocol_from_json(j["params"], ProtocolParams{});
  params.validate();
  QecmKey key;
  key.pad = from_hex(j["s"].get<std::string>(), static_cast<std::size_t>(params.pad_len));
  key.directions = from_hex(j["phi"].get<std::string>(), static_cast<std::size_t>(params.codeword_len));
  key.offsets = j["k"].get<std::vector<double>>();
  if (!j["label"].is_null()) key.label = Label(j["label"].get<std::string>());
  validate_key(key, params);
  return key;
}

// ---------------------------------------------------------------------------

std::string cmd_keygen(const RunConfig& config) {
  config.validate();
  if (config.format != OutputFormat::json) throw std::invalid_argument("keygen: key files are JSON; use --format json");
  Rng rng = make_rng(config.seed, 0);
  const QecmKey key = key_gen(config.protocol, rng);
  json j = key_to_json(key, config.protocol);
  j["config_hash"] = config_hash(config);
  return j.dump(2) + "\n";
}

std::string cmd_roundtrip(const RunConfig& config) {
  config.validate();
  const auto& p = config.protocol;
  Record rec;
  rec.add("n", p.message_len);
  rec.add("N", p.codeword_len);
  rec.add("t", p.correctable);
  rec.add("alpha", p.displacement);
  rec.add("r", p.squeezing);
  rec.add("T", config.channel.transmittance);
  rec.add("xi", config.channel.excess_noise);
  rec.add("beta", ber_analytic(p.displacement, p.squeezing));
  rec.add("beta_noisy", noisy_ber(p.displacement, p.squeezing, config.channel));
  rec.add("eps_df", eps_df(p.codeword_len, p.correctable, p.displacement, p.squeezing));
  if (config.trials > 0) {
    const ChannelParams* ch = config.channel.is_identity() ? nullptr : &config.channel;
    const RoundTripReport r = run_round_trip(p, config.trials, config.seed, ch, config.codec);
    rec.add("trials", r.trials);
    rec.add("failures", r.failures);
    rec.add("failure_rate", r.failure_rate());
    rec.add("failure_lower", r.failure_interval.lower);
    rec.add("failure_upper", r.failure_interval.upper);
    rec.add("modes", r.modes);
    rec.add("flips", r.flips);
    rec.add("flip_rate", r.flip_rate());
    rec.add("flip_lower", r.flip_interval.lower);
    rec.add("flip_upper", r.flip_interval.upper);
  }
  return rec.render(config, "roundtrip");
}

std::string cmd_bounds(const RunConfig& config) {
  config.validate();
  if (config.figure == "report") {
    const SecurityReport s = security_report(config.protocol);
    Record rec;
    rec.add("n", s.params.message_len);
    rec.add("N", s.params.codeword_len);
    rec.add("t", s.params.correctable);
    rec.add("alpha", s.params.displacement);
    rec.add("r", s.params.squeezing);
    rec.add("beta", s.beta);
    rec.add("eps_df", s.eps_df);
    rec.add("tau", number_or_null(s.tau));
    rec.add("log2_win_bound", number_or_null(s.log2_win_bound));
    rec.add("win_bound", number_or_null(s.win_bound));
    rec.add("asymptotic_margin", s.asymptotic_margin);
    return rec.render(config, "bounds");
  }
  const Table table = emit_figure_data(figure_from_string(config.figure), config.grid);
  const std::string hash = config_hash(config);
  if (config.format == OutputFormat::csv) return csv(hash, table.columns, table.rows);
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::array();
    for (double v : row) r.push_back(number_or_null(v));
    rows.push_back(std::move(r));
  }
  json j = {{"command", "bounds"},
            {"config_hash", hash},
            {"config", config_to_json(config)},
            {"figure", config.figure},
            {"columns", table.columns},
            {"rows", rows}};
  return j.dump(2) + "\n";
}

std::string cmd_attack(const RunConfig& config) {
  config.validate();
  const auto& p = config.protocol;
  const GameOutcome g = run_cloning_game(p, config.strategy, config.trials, config.seed);
  const BoundCheck b = check_against_bound(g, p);
  Record rec;
  rec.add("strategy", to_string(g.strategy));
  rec.add("n", p.message_len);
  rec.add("N", p.codeword_len);
  rec.add("t", p.correctable);
  rec.add("alpha", p.displacement);
  rec.add("r", p.squeezing);
  rec.add("trials", g.trials);
  rec.add("wins", g.wins);
  rec.add("win_rate", g.win_rate());
  rec.add("win_lower", g.win_interval.lower);
  rec.add("win_upper", g.win_interval.upper);
  rec.add("bob_successes", g.bob_successes);
  rec.add("charlie_successes", g.charlie_successes);
  rec.add("bob_bit_error_rate", number_or_null(g.bob_bit_error_rate()));
  rec.add("charlie_bit_error_rate", number_or_null(g.charlie_bit_error_rate()));
  if (config.strategy.id != StrategyId::forward_to_bob) {
    rec.add("expected_bob_bit_error", split_bit_error(p.displacement, p.squeezing, config.strategy.split_transmittance));
    rec.add("expected_charlie_bit_error",
            split_bit_error(p.displacement, p.squeezing, 1.0 - config.strategy.split_transmittance));
  }
  rec.add("bound", b.bound);
  rec.add("log2_bound", number_or_null(b.log2_bound));
  rec.add("vacuous", b.vacuous);
  rec.add("holds", b.holds);
  rec.add("slack", b.slack);
  return rec.render(config, "attack");
}

std::string cmd_ebcheck(const RunConfig& config) {
  config.validate();
  const auto& p = config.protocol;
  const EquivalenceReport e = game_equivalence_test(p, config.modes, config.seed);
  const std::uint64_t rejection_samples = std::min<std::uint64_t>(config.modes, 100000);
  const RejectionReport r = rejection_oracle_test(p.displacement, p.squeezing, rejection_samples, derive_seed(config.seed, 1));
  Record rec;
  rec.add("alpha", p.displacement);
  rec.add("r", p.squeezing);
  rec.add("modes", e.samples);
  rec.add("candidate_violations", e.candidate_violations);
  rec.add("range_violations", e.range_violations);
  rec.add("max_candidate_error", e.max_candidate_error);
  rec.add("beta_prepare_send", e.beta_prepare_send);
  rec.add("beta_entanglement", e.beta_entanglement);
  rec.add("beta_analytic", ber_analytic(p.displacement, p.squeezing));
  rec.add("flip_z", e.z);
  rec.add("k_ks_statistic", e.offsets_ks.statistic);
  rec.add("k_ks_p", e.offsets_ks.p_value);
  rec.add("rejection_samples", r.samples);
  rec.add("acceptance_observed", r.acceptance_observed);
  rec.add("acceptance_expected", r.acceptance_expected);
  rec.add("acceptance_z", r.acceptance_z);
  rec.add("u_ks_statistic", r.u_ks.statistic);
  rec.add("u_ks_p", r.u_ks.p_value);
  rec.add("max_covariance_error", r.max_covariance_error);
  rec.add("max_displacement_error", r.max_displacement_error);
  rec.add("passed", e.passed && r.passed);
  return rec.render(config, "ebcheck");
}

// ---------------------------------------------------------------------------

int run_cli(int argc, char** argv) {
  CLI::App app{"Continuous-variable unclonable encryption: simulator and bound calculator"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Figure CSV columns (bounds --figure):\n"
      "  fig1   r,alpha,margin,secure          asymptotic margin; secure=1 where margin<0\n"
      "  fig2a  r,T,xi,beta_noisy              noisy BER vs r, one curve per T\n"
      "  fig2b  T,xi,beta_noisy                noisy BER over (T, xi) at fixed r, alpha\n"
      "  fig4   n,N,t,ideal,conjugate,cv,log2_ideal,log2_conjugate,log2_cv\n"
      "  report single-row security report for the protocol parameters\n"
      "Every table starts with '# config fnv1a64=<hash>' and a header row.");

  std::string config_path;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t modes = 0;
  std::string out;
  std::string format;
  int n = 0, big_n = 0, t = 0;
  double alpha = 0, r = 0, transmittance = 0, xi = 0, split = 0, fiber_km = 0;
  std::string convention, codec, figure, strategy;

  app.add_option("-c,--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  auto* o_seed = app.add_option("--seed", seed, "master seed");
  auto* o_trials = app.add_option("--trials", trials, "Monte-Carlo trials");
  auto* o_modes = app.add_option("--modes", modes, "sampled modes for ebcheck");
  auto* o_out = app.add_option("-o,--out", out, "output path, '-' for stdout");
  auto* o_format = app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  auto* o_n = app.add_option("--n", n, "message length");
  auto* o_bn = app.add_option("--N", big_n, "codeword length (even)");
  auto* o_t = app.add_option("--t", t, "correctable bit errors");
  auto* o_alpha = app.add_option("--alpha", alpha, "displacement");
  auto* o_r = app.add_option("--r", r, "squeezing parameter");
  auto* o_T = app.add_option("--T", transmittance, "channel transmittance");
  auto* o_km = app.add_option("--fiber-km", fiber_km, "fibre length at 0.22 dB/km (sets T)");
  auto* o_xi = app.add_option("--xi", xi, "excess noise (SNU)");
  auto* o_conv = app.add_option("--convention", convention, "paper or symplectic");
  auto* o_codec = app.add_option("--codec", codec, "oracle or concrete");
  auto* o_fig = app.add_option("--figure", figure, "fig1, fig2a, fig2b, fig4 or report");
  auto* o_strat = app.add_option("--strategy", strategy, "heterodyne_split, forward_to_bob or measure_guess_basis");
  auto* o_split = app.add_option("--split", split, "split transmittance towards Bob");

  auto* keygen = app.add_subcommand("keygen", "generate a key file (JSON)");
  auto* roundtrip = app.add_subcommand("roundtrip", "honest encrypt/decrypt Monte Carlo vs analytic rates");
  auto* bounds = app.add_subcommand("bounds", "figure tables and security report");
  auto* attack = app.add_subcommand("attack", "cloning-game Monte Carlo against the security bound");
  auto* ebcheck = app.add_subcommand("ebcheck", "entanglement-based preparation equivalence checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    json j = json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      j = json::parse(in);
      if (!j.is_object()) throw std::invalid_argument("config: top level must be a JSON object");
    }
    auto& proto = j["protocol"];
    if (proto.is_null()) proto = json::object();
    if (o_n->count()) {
      proto["n"] = n;
      proto.erase("z");
    }
    if (o_bn->count()) proto["N"] = big_n;
    if (o_t->count()) proto["t"] = t;
    if (o_alpha->count()) proto["alpha"] = alpha;
    if (o_r->count()) proto["r"] = r;
    auto& chan = j["channel"];
    if (chan.is_null()) chan = json::object();
    if (o_km->count()) {
      chan["fiber_km"] = fiber_km;
      chan.erase("T");
    }
    if (o_T->count()) chan["T"] = transmittance;
    if (o_xi->count()) chan["xi"] = xi;
    if (o_conv->count()) chan["convention"] = convention;
    if (o_codec->count()) j["codec"] = codec;
    if (o_seed->count()) j["seed"] = seed;
    if (o_trials->count()) j["trials"] = trials;
    if (o_modes->count()) j["modes"] = modes;
    if (o_out->count()) j["out"] = out;
    if (o_format->count()) j["format"] = format;
    if (o_fig->count()) j["figure"] = figure;
    auto& strat = j["strategy"];
    if (strat.is_null()) strat = json::object();
    if (o_strat->count()) strat["id"] = strategy;
    if (o_split->count()) strat["split_transmittance"] = split;
    if (keygen->parsed() && !j.contains("format")) j["format"] = "json";
    if ((attack->parsed() || ebcheck->parsed()) && !j.contains("format")) j["format"] = "json";

    const RunConfig config = config_from_json(j);
    if (config.protocol.degenerate()) {
      std::cerr << "warning: r = 0, offsets are pinned to 0 and the squeezing directions hide nothing\n";
    }
    std::string text;
    if (keygen->parsed()) text = cmd_keygen(config);
    if (roundtrip->parsed()) text = cmd_roundtrip(config);
    if (bounds->parsed()) text = cmd_bounds(config);
    if (attack->parsed()) text = cmd_attack(config);
    if (ebcheck->parsed()) text = cmd_ebcheck(config);

    if (config.out == "-") {
      std::cout << text;
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file '" + config.out + "'");
      file << text;
      if (!file) throw std::runtime_error("failed writing output file '" + config.out + "'");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace cvue
