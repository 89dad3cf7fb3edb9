#include "comass/collapse.hpp"
#include "comass/comass.hpp"
#include "comass/hardness.hpp"
#include "comass/io.hpp"
#include "comass/lip_bounds.hpp"
#include "comass/normalize.hpp"
#include "comass/surface.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace comass;

std::string decimal12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string show_value(const ComassValue& v) {
  return to_string(v.coeff) + " * vol_" + std::to_string(v.n) +
         "^-1 = " + decimal12(v.numeric());
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

int run_comass(const std::string& complex_path, const std::string& chain_path,
               bool dual) {
  SimplicialComplex x = read_complex_file(complex_path);
  Cochain b = read_chain_file(chain_path);
  int n = b.degree;
  if (dual) {
    LinfResult r = linf_min_representative(x, b, n);
    std::cout << "linf " << to_string(r.value) << "\n";
    std::cout << "# zhat = b - d beta\n";
    write_chain(std::cout, b - coboundary(x, r.beta));
    return 0;
  }
  ComassResult r = simplicial_comass(x, b, n);
  std::cout << "value " << show_value(r.value) << "\n";
  std::cout << "# witness, scaled to l1 norm 1 (divide by vol_n edge^n for "
               "mass 1)\n";
  write_chain(std::cout, r.witness);
  return 0;
}

int run_normalize(const std::string& complex_path,
                  const std::string& chain_path) {
  SimplicialComplex x = read_complex_file(complex_path);
  Cochain z = read_chain_file(chain_path);
  int n = z.degree;
  LinfResult lr = linf_min_representative(x, z, n);
  Cochain zhat = z - coboundary(x, lr.beta);
  RoundResult rr = round_cocycle(x, z, zhat, n);
  Rational bound = linf_norm(zhat) + Rational(n + 1, 2);
  std::cout << "# zhat\n";
  write_chain(std::cout, zhat);
  std::cout << "# bhat\n";
  write_chain(std::cout, rr.integer_shift);
  std::cout << "# zprime\n";
  write_chain(std::cout, rr.rounded);
  std::cout << "bound " << to_string(bound) << "\n";
  std::cout << "bound_coarse " << (n + 2) << "\n";
  return 0;
}

int run_gadget(const std::string& lattice_path, int n,
               const std::string& out_path, const std::string& report_path) {
  LatticeBasis basis = read_lattice_file(lattice_path);
  GadgetComplex g = build_gadget(basis, n);
  write_complex_file(out_path, g.x);
  std::filesystem::path dir =
      std::filesystem::path(out_path).parent_path();
  auto side_file = [&](const std::string& name) {
    return (dir / name).string();
  };
  for (std::size_t j = 0; j < g.generator_cocycles.size(); ++j) {
    write_chain_file(side_file("gen_" + std::to_string(j) + ".ch"),
                     g.generator_cocycles[j]);
    write_chain_file(side_file("sigma_" + std::to_string(j) + ".ch"),
                     g.sigma_cycles[j]);
  }
  for (std::size_t i = 0; i < g.s_cycles.size(); ++i)
    write_chain_file(side_file("s_" + std::to_string(i) + ".ch"),
                     g.s_cycles[i]);
  if (!report_path.empty()) {
    std::ofstream rep(report_path);
    rep << g.build_report;
  }
  std::cout << "gadget written: " << out_path << " ("
            << g.x.size() << " simplices, dim " << g.x.dim() << ")\n";
  return 0;
}

int run_svp(const std::string& lattice_path, int bound) {
  LatticeBasis basis = read_lattice_file(lattice_path);
  SvpResult r = svp_linf_bruteforce(basis, bound);
  std::cout << "value " << r.norm.str() << " coeffs";
  for (const Integer& a : r.coeffs) std::cout << " " << a.str();
  std::cout << "\n";
  return 0;
}

MinComassOptions parse_mode(const std::string& mode, int bound, Chain& h_store,
                            std::vector<Chain>& prune) {
  MinComassOptions opts;
  opts.coeff_bound = bound;
  if (mode == "nonzero" || mode.empty()) {
    opts.mode = SearchMode::Nonzero;
  } else if (mode.rfind("neq0:", 0) == 0) {
    h_store = read_chain_file(mode.substr(5));
    opts.mode = SearchMode::PairingNonzero;
    opts.h = &h_store;
  } else if (mode.rfind("one:", 0) == 0) {
    h_store = read_chain_file(mode.substr(4));
    opts.mode = SearchMode::PairingOne;
    opts.h = &h_store;
  } else {
    throw MalformedInput("unknown mode '" + mode +
                         "' (nonzero|neq0:h.ch|one:h.ch)");
  }
  opts.prune_cycles = prune;
  return opts;
}

int run_min_comass(const std::string& complex_path, const std::string& gens,
                   int bound, const std::string& mode, int root) {
  SimplicialComplex x = read_complex_file(complex_path);
  std::vector<Cochain> generators;
  for (const std::string& p : split_commas(gens))
    generators.push_back(read_chain_file(p));
  if (generators.empty()) throw MalformedInput("no generator cochains given");
  int n = generators.front().degree;
  Chain h_store;
  std::vector<Chain> prune;
  MinComassOptions opts = parse_mode(mode, bound, h_store, prune);
  MinComassResult r = min_comass_search(x, n, generators, opts);
  std::cout << "value " << to_string(r.value.coeff) << " vol-normalized "
            << decimal12(r.value.numeric()) << " coeffs";
  for (const Integer& a : r.coeffs) std::cout << " " << a.str();
  std::cout << "\n";
  if (root > 0) {
    std::cout << "root " << to_string(r.value.coeff) << "^(1/" << root
              << ") * vol_" << n << "^{-1/" << root
              << "} = " << decimal12(std::pow(r.value.numeric(), 1.0 / root))
              << "\n";
  }
  return 0;
}

int run_check_cert(const std::string& domain_path, const std::string& map_path,
                   const std::string& codomain_path,
                   const std::string& target_path, int s, int t) {
  CertBundle cert;
  cert.domain = read_complex_file(domain_path);
  cert.codomain = read_complex_file(codomain_path);
  cert.vertex_map = read_vertex_map_file(map_path);
  cert.s = s;
  cert.t = t;
  Cochain target = read_chain_file(target_path);
  VerifyResult r = verify_certificate(cert, target, target.degree);
  if (r.accepted) {
    std::cout << "ACCEPT bound " << to_string(r.bound) << "\n";
    return 0;
  }
  std::cout << "REJECT " << r.reason << "\n";
  return 1;
}

int run_surface(const std::string& complex_path, const std::string& class_path,
                const std::string& scale, const std::string& out_path,
                const std::string& map_path) {
  SimplicialComplex x = read_complex_file(complex_path);
  Chain h(2);
  if (!class_path.empty()) h = read_chain_file(class_path);
  Rational s = parse_rational(scale);
  NetSurface ns = build_net_surface(x, h, s);
  write_complex_file(out_path, ns.sigma);
  write_vertex_map_file(map_path, ns.vertex_map);
  std::cout << "net " << ns.report.net.size() << " tubes " << ns.report.tubes
            << " chi " << ns.report.euler.str() << " genus "
            << ns.report.genus.str() << " simplices "
            << ns.report.simplex_count << " budget "
            << ns.report.simplex_budget << "\n";
  return 0;
}

int run_girth(const std::string& domain_path, const std::string& map_path,
              const std::string& codomain_path, const std::string& eps_str) {
  SimplicialComplex sigma = read_complex_file(domain_path);
  SimplicialComplex x = read_complex_file(codomain_path);
  std::map<int, int> vmap = read_vertex_map_file(map_path);
  if (!is_simplicial(sigma, x, vmap))
    throw DomainError("girth: map is not simplicial");
  SimplicialMap p(&sigma, &x, vmap);
  GirthReport r = epsilon_girth(p, parse_rational(eps_str));
  std::cout << "dense=" << (r.dense ? "true" : "false") << " delta="
            << to_string(r.delta) << " witness=" << r.witness.center << ";"
            << r.witness.v1 << "," << r.witness.v2 << "\n";
  return 0;
}

int run_pipeline(const std::string& lattice_path, int n, int bound) {
  LatticeBasis basis = read_lattice_file(lattice_path);
  GadgetComplex g = build_gadget(basis, n);
  MinComassOptions opts;
  opts.coeff_bound = bound;
  opts.mode = SearchMode::Nonzero;
  opts.prune_cycles = g.sigma_cycles;
  for (const Chain& z : g.s_cycles) opts.prune_cycles.push_back(z);
  MinComassResult mc = min_comass_search(g.x, n, g.generator_cocycles, opts);
  SvpResult sv = svp_linf_bruteforce(basis, bound);
  Rational ratio_coeff =
      sv.norm == 0 ? Rational(0) : mc.value.coeff / Rational(sv.norm);
  std::cout << "comass_min " << show_value(mc.value) << "\n";
  std::cout << "svp_norm   " << sv.norm.str() << "\n";
  std::cout << "ratio      " << to_string(ratio_coeff) << " * vol_" << n
            << "^-1 = "
            << decimal12(static_cast<double>(ratio_coeff) / simplex_volume(n))
            << "\n";
  std::cout << "comass_coeffs";
  for (const Integer& a : mc.coeffs) std::cout << " " << a.str();
  std::cout << "\n";
  std::cout << "svp_coeffs   ";
  for (const Integer& a : sv.coeffs) std::cout << " " << a.str();
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simplicial comass, hardness gadgets, and certificates"};
  app.require_subcommand(1);

  std::string complex_path, chain_path, lattice_path, out_path, report_path;
  std::string map_path, target_path, gens, mode, scale_str, eps_str;
  std::string domain_path, codomain_path, class_path;
  int dim = 2, bound = 1, cert_s = 1, cert_t = 1, root = 0;
  bool dual = false;

  auto* c_comass = app.add_subcommand("comass", "comass of a cochain");
  c_comass->add_option("--complex", complex_path)->required();
  c_comass->add_option("--cocycle", chain_path)->required();
  c_comass->add_flag("--dual", dual, "print the dual linf value instead");

  auto* c_norm = app.add_subcommand("normalize", "rounding pipeline");
  c_norm->add_option("--complex", complex_path)->required();
  c_norm->add_option("--cocycle", chain_path)->required();

  auto* c_gadget = app.add_subcommand("gadget", "build a hardness gadget");
  c_gadget->add_option("--lattice", lattice_path)->required();
  c_gadget->add_option("--dim", dim)->required();
  c_gadget->add_option("--out", out_path)->required();
  c_gadget->add_option("--report", report_path);

  auto* c_svp = app.add_subcommand("svp", "brute-force linf SVP");
  c_svp->add_option("--lattice", lattice_path)->required();
  c_svp->add_option("--bound", bound)->required();

  auto* c_min = app.add_subcommand("min-comass", "minimum comass over a box");
  c_min->add_option("--complex", complex_path)->required();
  c_min->add_option("--gens", gens)->required();
  c_min->add_option("--bound", bound)->required();
  c_min->add_option("--mode", mode);
  c_min->add_option("--root", root);

  auto* c_cert = app.add_subcommand("check-cert", "verify a map certificate");
  c_cert->add_option("--domain", domain_path)->required();
  c_cert->add_option("--map", map_path)->required();
  c_cert->add_option("--codomain", codomain_path)->required();
  c_cert->add_option("--target", target_path)->required();
  c_cert->add_option("--s", cert_s)->required();
  c_cert->add_option("--t", cert_t)->required();

  auto* c_surface = app.add_subcommand("surface", "net-sphere-tube surface");
  c_surface->add_option("--complex", complex_path)->required();
  c_surface->add_option("--class", class_path);
  c_surface->add_option("--scale", scale_str)->required();
  c_surface->add_option("--out", out_path)->required();
  c_surface->add_option("--map", map_path)->required();

  auto* c_girth = app.add_subcommand("girth", "epsilon-girth report");
  c_girth->add_option("--domain", domain_path)->required();
  c_girth->add_option("--map", map_path)->required();
  c_girth->add_option("--codomain", codomain_path)->required();
  c_girth->add_option("--eps", eps_str)->required();

  auto* c_pipe = app.add_subcommand("pipeline", "gadget + min-comass + svp");
  c_pipe->add_option("--lattice", lattice_path)->required();
  c_pipe->add_option("--dim", dim)->required();
  c_pipe->add_option("--bound", bound)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_comass))
      return run_comass(complex_path, chain_path, dual);
    if (app.got_subcommand(c_norm))
      return run_normalize(complex_path, chain_path);
    if (app.got_subcommand(c_gadget))
      return run_gadget(lattice_path, dim, out_path, report_path);
    if (app.got_subcommand(c_svp)) return run_svp(lattice_path, bound);
    if (app.got_subcommand(c_min))
      return run_min_comass(complex_path, gens, bound, mode, root);
    if (app.got_subcommand(c_cert))
      return run_check_cert(domain_path, map_path, codomain_path, target_path,
                            cert_s, cert_t);
    if (app.got_subcommand(c_surface))
      return run_surface(complex_path, class_path, scale_str, out_path,
                         map_path);
    if (app.got_subcommand(c_girth))
      return run_girth(domain_path, map_path, codomain_path, eps_str);
    if (app.got_subcommand(c_pipe)) return run_pipeline(lattice_path, dim, bound);
  } catch (const comass::MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const comass::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
