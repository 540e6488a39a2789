#pragma once

// Command-line front end. run() never calls exit(); it returns
//   0  every check passed
//   1  a verification check failed (or a bounded search gave up)
//   2  invalid input or configuration

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hodge_asym/serialize.hpp"

namespace hodge_asym {

inline constexpr const char* kSeedEnv = "HODGE_ASYM_SEED";

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFoundWithinBound:
    case ErrorKind::SearchExhausted:
    case ErrorKind::EqualRanks:
    case ErrorKind::VerificationFailed:
      return 1;
    default:
      return 2;
  }
}

namespace cli_detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write " + path.string());
  out << text;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline SlopeMultiset parse_slopes(const std::string& text) {
  SlopeMultiset out;
  for (const auto& item : split(text, ',')) {
    auto colon = item.rfind(':');
    Rational slope = parse_rational(item.substr(0, colon));
    Count mult = colon == std::string::npos ? 1 : detail::parse_int(item.substr(colon + 1), "multiplicity");
    if (mult <= 0) fail(ErrorKind::InvalidInput, "slope multiplicities must be positive");
    out[slope] += mult;
  }
  return out;
}

inline std::string slopes_text(const SlopeMultiset& s) {
  std::string out;
  for (const auto& [slope, m] : s) out += (out.empty() ? "" : ",") + to_display_string(slope) + ":" + std::to_string(m);
  return out.empty() ? "{}" : out;
}

inline std::string join(const std::vector<Count>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

inline void print_checks(std::ostream& out, const std::vector<Check>& checks) {
  for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << "\n";
}

inline void print_hodge(std::ostream& out, const HodgePolynomial& h, const std::string& format, std::optional<int> bound) {
  if (format == "json") {
    Json j{{"coeffs", hodge_to_json(h)}};
    if (bound) j["bound"] = *bound;
    out << j.dump() << "\n";
  } else {
    if (bound) out << "truncated at total degree " << *bound << "\n";
    out << format_hodge_table(h);
  }
}

struct CmFlags {
  int p = 0;
  std::optional<int> l;
  int l_bound = kDefaultLBound;
  std::string selector = "default";
  int max_layers = kDefaultMaxLayers;

  void attach(CLI::App* app) {
    app->add_option("--p", p, "characteristic p (prime)")->required();
    app->add_option("--l", l, "use this l instead of searching");
    app->add_option("--l-bound", l_bound, "search bound for l")->check(CLI::PositiveNumber);
    app->add_option("--selector", selector, "V coset choice: default, alt, or a 0/1 string");
    app->add_option("--max-layers", max_layers, "layer bound for the U search")->check(CLI::PositiveNumber);
  }

  ConstructOptions options() const {
    ConstructOptions o;
    o.l = l;
    o.l_bound = l_bound;
    o.selector = selector;
    o.max_layers = max_layers;
    return o;
  }
};

inline std::string certificate_summary(const ConstructionCertificate& c) {
  std::ostringstream out;
  out << "target (i,j) = (" << c.target.first << "," << c.target.second << ")";
  if (c.transposed) out << "  [computed as (" << c.normalized.first << "," << c.normalized.second << "), negated]";
  out << "\np = " << c.p << ", l = " << c.cm.ctx.l << ", ord = " << c.cm.ctx.ord << "\n";
  out << "V = " << format_char_rep(c.cm.V) << "\nU = " << format_char_rep(c.cm.U) << "\n";
  out << "degree-3 slice (h30,h21,h12,h03): before orientation (" << join(c.degree3_slice_unoriented) << "), final ("
      << join(c.degree3_slice) << ")" << (c.cm.oriented ? " [oriented]" : "") << "\n";
  out << "delta^{3,0}(X) = " << c.ledger.at(3, 0).to_string(c.ledger.scale()) << "\n";
  out << "auxiliary factor: " << to_string(c.aux.kind);
  if (c.aux.kind == AuxKind::Tower) out << " (n=" << c.aux.n << ", s=" << c.aux.s << ")";
  out << "\ndelta^{" << c.target.first << "," << c.target.second << "} = " << c.delta_result.to_string() << "\n";
  out << "d-policy: " << c.d_policy.statement << "\n";
  return out.str();
}

}  // namespace cli_detail

/// Regenerates every certificate in `dir` and byte-compares it.
inline int golden_check(const std::filesystem::path& dir, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    err << "error: corpus directory " << dir.string() << " not found\n";
    return 2;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "warning: no certificates in " << dir.string() << "\n";
    return 0;
  }
  int status = 0;
  for (const auto& f : files) {
    const auto stored_text = cli_detail::read_file(f);
    std::string fresh;
    try {
      fresh = serialize_certificate(regenerate(parse_certificate(stored_text)));
    } catch (const Error& e) {
      out << "ERROR " << f.filename().string() << ": " << e.what() << "\n";
      status = std::max(status, 1);
      continue;
    }
    if (fresh == stored_text) {
      out << "ok " << f.filename().string() << "\n";
      continue;
    }
    auto a = cli_detail::split(stored_text, '\n');
    auto b = cli_detail::split(fresh, '\n');
    std::size_t line = 0;
    while (line < a.size() && line < b.size() && a[line] == b[line]) ++line;
    out << "MISMATCH " << f.filename().string() << " near line " << line + 1 << "\n";
    out << "  stored:      " << (line < a.size() ? a[line] : "<eof>") << "\n";
    out << "  regenerated: " << (line < b.size() ? b[line] : "<eof>") << "\n";
    status = 1;
  }
  out << files.size() << " certificate(s) checked\n";
  return status;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (std::getenv(kSeedEnv) != nullptr) {
    err << "error: " << kSeedEnv << " is set, but this tool uses no randomness; unset it\n";
    return 2;
  }

  CLI::App app{"Exact bookkeeping for Hodge-asymmetric formal schemes", "hodge-asym"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  std::string format = "text";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  int code = 0;

  // find-l
  auto* find_cmd = app.add_subcommand("find-l", "smallest l with 4 | ord(p mod l)");
  int find_p = 0;
  int find_bound = kDefaultLBound;
  find_cmd->add_option("--p", find_p, "prime p")->required();
  find_cmd->add_option("--bound", find_bound, "largest l to try");

  // build-cm
  auto* build_cmd = app.add_subcommand("build-cm", "character data of Z = A x B as JSON");
  cli_detail::CmFlags build_flags;
  build_flags.attach(build_cmd);

  // search-typical
  auto* search_cmd = app.add_subcommand("search-typical", "typical U candidates and invariant ranks");
  cli_detail::CmFlags search_flags;
  search_flags.attach(search_cmd);
  int table_layers = 1;
  search_cmd->add_option("--layers", table_layers, "layer count of the printed table")->check(CLI::PositiveNumber);
  add_format(search_cmd);

  // verify-polygon
  auto* poly_cmd = app.add_subcommand("verify-polygon", "polygon checks for one degree");
  int poly_n = 0;
  std::string poly_hodge;
  std::string poly_newton;
  poly_cmd->add_option("--n", poly_n, "degree n")->required()->check(CLI::NonNegativeNumber);
  poly_cmd->add_option("--hodge", poly_hodge, "h^{n,0},...,h^{0,n}")->required();
  poly_cmd->add_option("--newton", poly_newton, "slopes as a/b:mult,...")->required();

  // hodge
  auto* hodge_cmd = app.add_subcommand("hodge", "Hodge polynomials");
  hodge_cmd->require_subcommand(1);
  Count hs_d = 0;
  int hs_n = 0;
  auto* hyp_cmd = hodge_cmd->add_subcommand("hypersurface", "smooth degree-d hypersurface in P^{n+1}");
  hyp_cmd->add_option("--d", hs_d, "degree")->required();
  hyp_cmd->add_option("--n", hs_n, "dimension")->required();
  add_format(hyp_cmd);
  int tower_s = 0;
  std::string tower_ambient;
  auto* tower_cmd = hodge_cmd->add_subcommand("blowup-tower", "iterated blow-ups of projective spaces along T_{d,n}");
  tower_cmd->add_option("--d", hs_d, "degree")->required();
  tower_cmd->add_option("--n", hs_n, "dimension")->required();
  tower_cmd->add_option("--s", tower_s, "number of blow-ups")->required();
  tower_cmd->add_option("--ambient", tower_ambient, "N_0,...,N_{s-1} (default dim + 2 each step)");
  add_format(tower_cmd);
  std::string stack_kind;
  int stack_bound = 12;
  auto* stack_cmd = hodge_cmd->add_subcommand("stack", "truncated series of B mu_p or B Z/p");
  stack_cmd->add_option("--kind", stack_kind, "mu_p or Z_mod_p")->required()->check(CLI::IsMember({"mu_p", "Z_mod_p"}));
  stack_cmd->add_option("--bound", stack_bound, "total-degree truncation")->check(CLI::NonNegativeNumber);
  add_format(stack_cmd);
  std::string prod_a;
  std::string prod_b;
  std::optional<int> prod_bound;
  auto* prod_cmd = hodge_cmd->add_subcommand("product", "product of two Hodge polynomials");
  prod_cmd->add_option("--a", prod_a, "terms 'i,j:c;...'")->required();
  prod_cmd->add_option("--b", prod_b, "terms 'i,j:c;...'")->required();
  prod_cmd->add_option("--bound", prod_bound, "optional total-degree truncation");
  add_format(prod_cmd);

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "build and check a construction certificate");
  cli_detail::CmFlags cons_flags;
  cons_flags.attach(construct_cmd);
  int cons_i = 0;
  int cons_j = 0;
  std::string embellish;
  std::optional<Count> pol_hd;
  std::optional<Count> pol_k;
  std::optional<int> pol_dim;
  std::string out_path;
  construct_cmd->add_option("--i", cons_i, "form degree i")->required();
  construct_cmd->add_option("--j", cons_j, "cohomological degree j")->required();
  construct_cmd->add_option("--embellish", embellish, "comma list: special-fiber, polarization");
  construct_cmd->add_option("--polarization-hd", pol_hd, "H^d for the polarization search (default p)");
  construct_cmd->add_option("--polarization-k", pol_k, "deg H|_E (default 1)");
  construct_cmd->add_option("--polarization-dim", pol_dim, "dimension (default dim Z + 4)");
  construct_cmd->add_option("--out", out_path, "write the certificate JSON here");
  add_format(construct_cmd);

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "re-run a stored certificate and compare");
  std::string cert_path;
  certify_cmd->add_option("file", cert_path, "certificate JSON")->required();

  // golden
  auto* golden_cmd = app.add_subcommand("golden", "regenerate a corpus of certificates and byte-compare");
  std::string corpus = "tests/golden";
  golden_cmd->add_option("dir", corpus, "corpus directory");

  std::vector<const char*> argv{"hodge-asym"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*find_cmd) {
      auto ctx = find_l(find_p, find_bound);
      out << "l=" << ctx.l << " ord=" << ctx.ord << "\n";
    } else if (*build_cmd) {
      auto z = build_cm(build_flags.p, build_flags.options());
      out << cm_to_json(z).dump(2) << "\n";
    } else if (*search_cmd) {
      auto opt = search_flags.options();
      auto ctx = context_for(search_flags.p, opt);
      auto v = build_V(ctx, parse_selector(opt.selector, ctx));
      auto table = typical_candidate_table(v, ctx, table_layers);
      auto hit = search_typical_U(v, ctx, opt.max_layers);
      if (format == "json") {
        Json rows = Json::array();
        for (const auto& c : table) {
          rows.push_back(Json{{"U", format_char_rep(c.U)}, {"r0", c.r0}, {"r1", c.r1}, {"separates", c.r0 != c.r1}});
        }
        out << Json{{"p", ctx.p},
                    {"l", ctx.l},
                    {"V", format_char_rep(v)},
                    {"tau_V", format_char_rep(tau(v, ctx))},
                    {"layers", table_layers},
                    {"table", rows},
                    {"first_hit", Json{{"U", format_char_rep(hit.hit.U)},
                                       {"r0", hit.hit.r0},
                                       {"r1", hit.hit.r1},
                                       {"layers", hit.layers}}}}
                   .dump(2)
            << "\n";
      } else {
        out << "V = " << format_char_rep(v) << ", tau V = " << format_char_rep(tau(v, ctx)) << "\n";
        out << "typical U with " << table_layers << " layer(s); r0 = rk Lambda^3(V+U)^G, r1 = rk Lambda^3(tau V+U^dual)^G\n";
        for (const auto& c : table) {
          out << "  " << format_char_rep(c.U) << "  r0=" << c.r0 << " r1=" << c.r1 << (c.r0 != c.r1 ? "  separates" : "")
              << "\n";
        }
        out << "first hit: " << format_char_rep(hit.hit.U) << " (r0,r1) = (" << hit.hit.r0 << "," << hit.hit.r1 << ")\n";
      }
    } else if (*poly_cmd) {
      std::vector<Count> desc;
      for (const auto& x : cli_detail::split(poly_hodge, ',')) desc.push_back(detail::parse_int(x, "Hodge number"));
      auto pd = PolygonData::from_descending(poly_n, desc, cli_detail::parse_slopes(poly_newton));
      std::vector<Check> checks{
          {"weak-admissibility-endpoints", check_weak_admissibility_endpoints(pd), ""},
          {"lemma-slopesym", check_slope_symmetry(pd), "multiset stable under lambda -> n - lambda"},
          {"lemma-slopesym-scalar", check_slope_symmetry_scalar(pd), "2 t_N = n rank"},
          {"prop-deg2-n" + std::to_string(poly_n), check_degree_relation(pd), "2 t_H = n rank"},
          {"remark-admissfutile", newton_above_hodge(pd), "Newton on or above Hodge, same endpoints"},
      };
      if (poly_n % 2 == 1) checks.push_back({"cor-cordeg2-parity", check_parity(pd), "rank " + std::to_string(pd.rank())});
      out << "t_H = " << t_H(pd) << ", t_N = " << to_display_string(t_N(pd)) << ", rank = " << pd.rank() << "\n";
      cli_detail::print_checks(out, checks);
      code = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }) ? 0 : 1;
    } else if (*hyp_cmd) {
      cli_detail::print_hodge(out, hypersurface(hs_d, hs_n), format, std::nullopt);
    } else if (*tower_cmd) {
      std::vector<Count> dims;
      for (const auto& x : cli_detail::split(tower_ambient, ',')) dims.push_back(detail::parse_int(x, "ambient dimension"));
      cli_detail::print_hodge(out, blow_up_tower(hs_d, hs_n, tower_s, dims).hodge, format, std::nullopt);
    } else if (*stack_cmd) {
      auto s = stack_series(stack_kind == "mu_p" ? StackKind::MuP : StackKind::ZModP, stack_bound);
      cli_detail::print_hodge(out, s.polynomial(), format, s.bound());
    } else if (*prod_cmd) {
      auto a = parse_hodge_terms(prod_a);
      auto b = parse_hodge_terms(prod_b);
      cli_detail::print_hodge(out, HodgePolynomial::multiply(a, b, prod_bound), format, prod_bound);
    } else if (*construct_cmd) {
      auto opt = cons_flags.options();
      for (const auto& e : cli_detail::split(embellish, ',')) {
        if (e == "special-fiber") {
          opt.special_fiber = true;
        } else if (e == "polarization") {
          opt.polarization = true;
        } else {
          fail(ErrorKind::InvalidInput, "unknown embellishment '" + e + "'");
        }
      }
      opt.polarization_hd = pol_hd;
      opt.polarization_k = pol_k;
      opt.polarization_dim = pol_dim;
      const auto start = std::chrono::steady_clock::now();
      auto cert = theorem_main(cons_flags.p, cons_i, cons_j, opt);
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      if (!cert.all_passed()) {
        out << "certificate NOT emitted: verification failed\n";
        cli_detail::print_checks(out, cert.checks);
        return 1;
      }
      const auto text = serialize_certificate(cert);
      if (!out_path.empty()) cli_detail::write_file(out_path, text);
      if (format == "json") {
        if (out_path.empty()) out << text;
      } else {
        out << cli_detail::certificate_summary(cert);
        out << cert.checks.size() << " checks passed in " << ms.count() << " ms\n";
      }
    } else if (*certify_cmd) {
      const auto stored_text = cli_detail::read_file(cert_path);
      auto stored = parse_certificate(stored_text);
      auto fresh = regenerate(stored);
      cli_detail::print_checks(out, fresh.checks);
      const bool same = serialize_certificate(fresh) == stored_text;
      out << (same ? "PASS" : "FAIL") << " certificate reproduces byte-for-byte\n";
      code = same && fresh.all_passed() ? 0 : 1;
    } else if (*golden_cmd) {
      code = golden_check(corpus, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return code;
}

inline int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hodge_asym
