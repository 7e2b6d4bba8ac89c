#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "catcrypt/cat_map.hpp"
#include "catcrypt/cipher.hpp"
#include "catcrypt/diffusion.hpp"
#include "catcrypt/errors.hpp"
#include "catcrypt/image_io.hpp"
#include "catcrypt/key_schedule.hpp"
#include "catcrypt/metrics.hpp"

namespace catcrypt::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 1;
constexpr const char* kSeedEnv = "CIPHER_AUDIT_SEED";

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_unsigned(std::string_view text, const char* what) {
  text = trim(text);
  const std::string s(text);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument(std::string(what) + " out of range: '" + s + "'");
  }
}

// Calls emit(lo, hi) for ranges and emit(v, v) for single items.
template <typename Emit>
void for_each_item(std::string_view text, const char* what, Emit&& emit) {
  if (trim(text).empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
  for (auto item : split(text, ',')) {
    item = trim(item);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      const auto v = parse_unsigned(item, what);
      emit(v, v, false);
    } else {
      const auto lo = parse_unsigned(item.substr(0, dots), what);
      const auto hi = parse_unsigned(item.substr(dots + 2), what);
      if (lo > hi) throw std::invalid_argument(std::string("empty ") + what + " range '" + std::string(item) + "'");
      emit(lo, hi, true);
    }
  }
}

std::string cell(double v) { return format_cell(v); }

void append_summary(std::ostringstream& os, const Summary& s) {
  os << ',' << cell(s.min) << ',' << cell(s.mean) << ',' << cell(s.max) << ',' << cell(s.std);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

std::uint64_t resolve_seed(const std::string& flag) {
  if (!flag.empty()) return parse_seed(flag);
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') return parse_seed(env);
  return kDefaultSeed;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::size_t infer_dim(const std::string& path) {
  std::error_code ec;
  const auto bytes = std::filesystem::file_size(path, ec);
  if (ec) throw IoError("cannot stat " + path + ": " + ec.message());
  const auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(bytes))));
  if (m * m != bytes) {
    throw UnsupportedDimensionError(path + ": " + std::to_string(bytes) + " bytes is not a square image; pass --dim");
  }
  return m;
}

struct SweepFlags {
  std::string sizes;
  std::string rounds;
  std::size_t trials = 1000;
  std::string seed;
  unsigned jobs = default_jobs();
  std::string out;

  void attach(CLI::App* app, bool with_grid) {
    if (with_grid) {
      app->add_option("--sizes", sizes, "Image sizes, e.g. 16,32 or 16..512 (default grid)");
      app->add_option("--rounds", rounds, "Round counts, e.g. 1,6 or 1..7 (default 1..7)");
    }
    app->add_option("--trials", trials, "Trials per cell")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, std::string("Master seed; falls back to $") + kSeedEnv);
    app->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    app->add_option("--out", out, "CSV destination (default stdout)");
  }

  ExperimentConfig config() const {
    ExperimentConfig cfg;
    cfg.sizes = sizes.empty() ? default_sizes() : parse_size_list(sizes);
    cfg.rounds = rounds.empty() ? default_rounds() : parse_round_list(rounds);
    cfg.trials = trials;
    cfg.master_seed = resolve_seed(seed);
    cfg.jobs = jobs;
    return cfg;
  }
};

}  // namespace

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> sizes;
  const auto grid = default_sizes();
  for_each_item(text, "size", [&](std::uint64_t lo, std::uint64_t hi, bool range) {
    if (!range) {
      validate_dim(lo);
      sizes.push_back(lo);
      return;
    }
    bool any = false;
    for (auto m : grid) {
      if (m >= lo && m <= hi) {
        sizes.push_back(m);
        any = true;
      }
    }
    if (!any) throw std::invalid_argument("size range contains no grid sizes");
  });
  return sizes;
}

std::vector<unsigned> parse_round_list(std::string_view text) {
  std::vector<unsigned> rounds;
  for_each_item(text, "round", [&](std::uint64_t lo, std::uint64_t hi, bool) {
    if (lo == 0) throw std::invalid_argument("round counts must be at least 1");
    if (hi > 1000) throw std::invalid_argument("round count above 1000");
    for (auto r = lo; r <= hi; ++r) rounds.push_back(static_cast<unsigned>(r));
  });
  return rounds;
}

std::vector<double> parse_percent_list(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) throw std::invalid_argument("empty percent list");
  for (auto item : split(text, ',')) {
    const std::string s(trim(item));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad percent: '" + s + "'");
    }
    if (used != s.size() || !(v >= 0.0 && v <= 100.0)) throw std::invalid_argument("bad percent: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::uint64_t parse_seed(std::string_view text) {
  const std::string s(trim(text));
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used, 0);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad seed: '" + s + "'");
  }
  if (used != s.size() || s.front() == '-') throw std::invalid_argument("bad seed: '" + s + "'");
  return v;
}

std::string format_cell(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string avalanche_csv(const std::vector<AvalancheCell>& cells) {
  std::ostringstream os;
  os << "M,r,trials,ps_min,ps_mean,ps_max,ps_std,diff_min,diff_mean,diff_max,diff_std\n";
  for (const auto& c : cells) {
    os << c.dim << ',' << c.rounds << ',' << c.ps.count;
    append_summary(os, c.ps);
    append_summary(os, c.diff);
    os << '\n';
  }
  return os.str();
}

std::string uniformity_csv(const std::vector<UniformityCell>& cells) {
  std::ostringstream os;
  os << "M,r,trials,chi2_min,chi2_mean,chi2_max,chi2_std,threshold,below_threshold\n";
  for (const auto& c : cells) {
    os << c.dim << ',' << c.rounds << ',' << c.chi2.count;
    append_summary(os, c.chi2);
    os << ',' << cell(kChiSquareThreshold) << ',' << c.below_threshold << '\n';
  }
  return os.str();
}

std::string errorprop_csv(const std::vector<ErrorPropCell>& rows) {
  std::ostringstream os;
  os << "mode,percent,flipped_bits,trials,dif_min,dif_mean,dif_max,dif_std,"
        "psnr_min,psnr_mean,psnr_max,psnr_std,psnr_infinite,ssim_min,ssim_mean,ssim_max,ssim_std\n";
  for (const auto& r : rows) {
    os << (r.percent ? "percent" : "single-bit") << ',' << (r.percent ? cell(*r.percent) : std::string()) << ','
       << r.flipped_bits << ',' << r.dif.count;
    append_summary(os, r.dif);
    if (r.psnr.count == 0 && r.psnr_infinite > 0) {
      const auto inf = std::numeric_limits<double>::infinity();
      append_summary(os, Summary{inf, inf, inf, 0.0, 0});
    } else {
      append_summary(os, r.psnr);
    }
    os << ',' << r.psnr_infinite;
    append_summary(os, r.ssim);
    os << '\n';
  }
  return os.str();
}

std::string keyspace_csv(const std::vector<KeyspaceReport>& reports) {
  std::ostringstream os;
  os << "M,q,key_bits,keyspace,guesses_per_second,seconds_to_enumerate,note\n";
  for (const auto& r : reports) {
    os << r.dim << ',' << r.q << ',' << r.key_bits << ',' << cell(r.keyspace) << ',' << cell(r.guesses_per_second)
       << ',' << cell(r.seconds_to_enumerate) << ",\"" << r.note << "\"\n";
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cat-map image cipher and cryptanalysis harness", "cipher-audit"};
  app.require_subcommand(1);

  // encrypt / decrypt
  std::string in_path, out_path, key_hex;
  unsigned rounds = kSecureRounds;
  std::size_t dim = 0;
  auto* enc = app.add_subcommand("encrypt", "Encrypt a PGM into a raw ciphertext blob");
  auto* dec = app.add_subcommand("decrypt", "Decrypt a raw ciphertext blob into a PGM");
  for (auto* sub : {enc, dec}) {
    sub->add_option("--in", in_path, "Input file")->required();
    sub->add_option("--out", out_path, "Output file")->required();
    sub->add_option("--key-hex", key_hex, "Key as q hex digits: a|b|rx|ry, q bits each")->required();
    sub->add_option("--rounds", rounds, "Round count")->check(CLI::PositiveNumber);
    sub->add_option("--dim", dim, "Image side M (blob input: inferred from size if omitted)");
  }

  SweepFlags ava_flags;
  bool identical = false;
  auto* ava = app.add_subcommand("avalanche", "Plaintext sensitivity per (M, r)");
  ava_flags.attach(ava, true);
  ava->add_flag("--identical", identical, "Use I' = I (sanity check; PS is 0)");

  SweepFlags uni_flags;
  std::string plaintext = "single-lsb";
  auto* uni = app.add_subcommand("uniformity", "Chi-square histogram uniformity per (M, r)");
  uni_flags.attach(uni, true);
  uni->add_option("--plaintext", plaintext, "single-lsb | all-zero | random-bytes")
      ->check(CLI::IsMember({"single-lsb", "all-zero", "random-bytes"}));

  SweepFlags ep_flags;
  std::string image_path, percents = "0.01,0.1,1,5";
  bool no_single = false;
  auto* ep = app.add_subcommand("errorprop", "Ciphertext bit-error propagation through decryption");
  ep_flags.attach(ep, false);
  ep->add_option("--image", image_path, "Plaintext PGM")->required();
  ep->add_option("--percents", percents, "Percentages of ciphertext bits to flip");
  ep->add_flag("--no-single-bit", no_single, "Skip the single-bit row");

  std::string ks_sizes;
  double rate = kDefaultGuessRate;
  std::string ks_out;
  auto* ks = app.add_subcommand("keyspace", "Key length and brute-force cost per M");
  ks->add_option("--sizes", ks_sizes, "Image sizes (default grid)");
  ks->add_option("--rate", rate, "Guesses per second")->check(CLI::PositiveNumber);
  ks->add_option("--out", ks_out, "CSV destination (default stdout)");

  bool show_inverse = false;
  auto* mat = app.add_subcommand("matrix", "Print the static diffusion matrix");
  mat->add_flag("--inverse", show_inverse, "Print the inverse instead");

  std::size_t kg_dim = 0;
  std::string kg_seed;
  std::uint64_t kg_index = 0;
  auto* kg = app.add_subcommand("keygen", "Derive a trial key and print it as hex");
  kg->add_option("--dim", kg_dim, "Image side M")->required();
  kg->add_option("--seed", kg_seed, std::string("Master seed; falls back to $") + kSeedEnv);
  kg->add_option("--index", kg_index, "Trial index");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("cipher-audit");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*enc) {
      const Image plain = read_pgm(in_path);
      if (dim != 0 && dim != plain.dim()) {
        throw UnsupportedDimensionError("--dim " + std::to_string(dim) + " does not match image M=" +
                                        std::to_string(plain.dim()));
      }
      const auto key = key_from_hex(key_hex, plain.dim(), rounds);
      write_raw(encrypt(plain, key), out_path);
      out << "key space: " << keyspace_report(plain.dim()).note << '\n';
    } else if (*dec) {
      const std::size_t m = dim != 0 ? dim : infer_dim(in_path);
      const auto key = key_from_hex(key_hex, m, rounds);
      write_pgm(decrypt(read_raw(in_path, m), key), out_path);
      out << "key space: " << keyspace_report(m).note << '\n';
    } else if (*ava) {
      emit(avalanche_csv(avalanche_sweep(ava_flags.config(), {identical})), ava_flags.out, out);
    } else if (*uni) {
      const auto mode = plaintext == "all-zero"       ? UniformityPlaintext::kAllZero
                        : plaintext == "random-bytes" ? UniformityPlaintext::kRandomBytes
                                                      : UniformityPlaintext::kSingleLsb;
      emit(uniformity_csv(uniformity_sweep(uni_flags.config(), mode)), uni_flags.out, out);
    } else if (*ep) {
      ExperimentConfig cfg = ep_flags.config();
      cfg.sizes.clear();
      cfg.rounds.clear();
      cfg.error_percents = parse_percent_list(percents);
      const Image image = read_pgm(image_path);
      emit(errorprop_csv(error_propagation(cfg, image, {!no_single, kSecureRounds})), ep_flags.out, out);
    } else if (*ks) {
      std::vector<KeyspaceReport> reports;
      for (auto m : ks_sizes.empty() ? default_sizes() : parse_size_list(ks_sizes)) {
        reports.push_back(keyspace_report(m, rate));
      }
      emit(keyspace_csv(reports), ks_out, out);
    } else if (*mat) {
      const auto a = build_diffusion_matrix();
      out << format_matrix(show_inverse ? *gf2_inverse(a) : a);
      out << "rank " << gf2_rank(a) << '\n';
    } else if (*kg) {
      validate_dim(kg_dim);
      const auto key = derive_trial_key(resolve_seed(kg_seed), kg_index, kg_dim, 1);
      out << key_to_hex(key, kg_dim) << '\n';
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace catcrypt::cli
