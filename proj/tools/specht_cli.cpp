// Command-line front end: Hom-group computation, box-shift morphisms,
// transposition, straightening, and verification of the golden example
// corpus.  Exit codes: 0 success, 2 parse error, 3 guard/shape violation,
// 4 golden mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "specht/corpus.hpp"

using namespace specht;
using nlohmann::json;

namespace {

// Moduli accept either a plain integer or a factorial literal such as "8!".
Int parse_modulus(const std::string& s) {
  if (!s.empty() && s.back() == '!')
    return factorial(parse_long(s.substr(0, s.size() - 1)));
  return parse_int(s);
}

std::string group_name(const std::vector<Int>& primary) {
  std::string out;
  for (const Int& p : primary) {
    if (p == 1) continue;
    if (!out.empty()) out += " x ";
    out += "Z/" + p.get_str();
  }
  return out.empty() ? "0" : out;
}

void write_morphism_file(const Morphism& f, const std::string& path) {
  std::string text = morphism_to_text(f);
  // Round-trip invariant: every file written re-reads to an equal morphism.
  Morphism back = morphism_from_text(text);
  if (!(back == f)) throw SpechtError("morphism file round-trip failed");
  std::ofstream os(path);
  if (!os) throw SpechtError("cannot write " + path);
  os << text;
}

int cmd_hom(const std::string& lambda_s, const std::string& mu_s,
            const std::string& mod_s, const std::string& target_s,
            const std::string& prefix, bool as_json) {
  Partition lambda = Partition::parse(lambda_s);
  Partition mu = Partition::parse(mu_s);
  Int m = parse_modulus(mod_s);
  TargetKind kind =
      target_s == "tabloid" ? TargetKind::Tabloid : TargetKind::Specht;
  HomGroup h = hom_group(lambda, TargetDesc{kind, mu}, m);

  std::vector<std::string> files;
  long idx = 0;
  for (size_t g = 0; g < h.generators.size(); ++g) {
    if (h.orders[g] == 1) continue;
    Morphism f = morphism_from_hom_generator(h, g);
    std::string path = prefix + "_gen" + std::to_string(++idx) + ".mor";
    write_morphism_file(f, path);
    files.push_back(path);
  }

  if (as_json) {
    json j;
    j["lambda"] = lambda.str();
    j["mu"] = mu.str();
    j["modulus"] = m.get_str();
    j["group"] = group_name(h.primary());
    j["invariants"] = json::array();
    for (const Int& v : h.invariants())
      if (v != 1) j["invariants"].push_back(v.get_str());
    j["files"] = files;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << group_name(h.primary()) << "\n";
    for (const auto& f : files) std::cout << "wrote " << f << "\n";
  }
  return 0;
}

int cmd_boxshift(const std::string& lambda_s, long g, long k, long d,
                 bool emit_theta, const std::string& out, bool as_json) {
  Partition lambda = Partition::parse(lambda_s);
  Partition conj = transpose_partition(lambda);
  BoxShiftResult r =
      d > 0 ? dfold_morphism(lambda, g, d) : two_box_morphism(lambda, g, k);
  Int m0 = d > 0 ? Int(conj.part(g) - conj.part(g + 1) + d + 1)
                 : Int(x_value(lambda, k, g) + 2);
  std::vector<long> xs;
  long last = d > 0 ? g + 1 : k + 1;
  for (long i = g; i <= last; ++i)
    xs.push_back(d > 0 ? conj.part(i) - i : x_value(lambda, k, i));

  std::string path = out.empty() ? "boxshift.mor" : out;
  write_morphism_file(r.morphism, path);

  if (as_json) {
    json j;
    j["lambda"] = lambda.str();
    j["mu"] = r.target.str();
    j["X"] = xs;
    j["m0"] = m0.get_str();
    j["R"] = r.redundancy.get_str();
    j["m"] = r.modulus.get_str();
    j["file"] = path;
    if (emit_theta && d == 0) j["theta"] = theta_table_to_text(lambda, g, k);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "mu=" << r.target.str() << "\n";
    std::cout << "X=";
    for (size_t i = 0; i < xs.size(); ++i)
      std::cout << (i ? "," : "") << xs[i];
    std::cout << "\n";
    std::cout << "m0=" << m0.get_str() << "\n";
    std::cout << "R=" << r.redundancy.get_str() << "\n";
    std::cout << "m=" << r.modulus.get_str() << "\n";
    std::cout << "wrote " << path << "\n";
    if (emit_theta && d == 0) std::cout << theta_table_to_text(lambda, g, k);
  }
  return 0;
}

int cmd_transpose(const std::string& in, const std::string& out,
                  bool as_json) {
  std::ifstream is(in);
  if (!is) throw ParseError("cannot read " + in);
  std::stringstream buf;
  buf << is.rdbuf();
  Morphism f = morphism_from_text(buf.str());
  Morphism t = transpose_morphism(f);
  write_morphism_file(t, out);
  if (as_json) {
    json j;
    j["source"] = t.source.str();
    j["target"] = t.target.str();
    j["modulus"] = t.modulus.get_str();
    j["file"] = out;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << t.source.str() << " -> " << t.target.str() << " mod "
              << t.modulus.get_str() << "\n";
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int cmd_straighten(const std::string& lambda_s, const std::string& tab_s,
                   bool as_json) {
  Partition lambda = Partition::parse(lambda_s);
  Tableau t = Tableau::parse(tab_s);
  if (!(t.shape() == lambda))
    throw ParseError("tableau shape does not match --lambda");
  std::vector<Int> coords = straighten(polytabloid(t));
  if (as_json) {
    json j;
    j["lambda"] = lambda.str();
    j["coordinates"] = json::array();
    for (const Int& c : coords) j["coordinates"].push_back(c.get_str());
    std::cout << j.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < coords.size(); ++i)
      std::cout << (i ? "," : "") << coords[i].get_str();
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, bool as_json) {
  if (suite != "paper-examples")
    throw ParseError("unknown suite: " + suite);
  std::vector<corpus::Check> checks = corpus::verify_worked_examples();
  long failed = 0;
  if (as_json) {
    json j = json::array();
    for (const auto& c : checks) {
      if (!c.pass) ++failed;
      j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      if (!c.pass) ++failed;
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
    }
    std::cout << (failed ? "FAIL" : "PASS") << " (" << checks.size() - failed
              << "/" << checks.size() << ")\n";
  }
  return failed ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic Specht lattice computations"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.fallthrough();

  // Thread count is configurable for forward compatibility; all current
  // subcommands are deterministic and their output is independent of it.
  long threads = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("SPECHT_THREADS")) {
    long v = std::atol(env);
    if (v > 0) threads = v;
  }
  (void)threads;

  std::string lambda_s, mu_s, mod_s, target_s = "specht", prefix = "hom";
  std::string in_path, out_path, tab_s, suite = "paper-examples";
  long g = 1, k = 1, d = 0;
  bool emit_theta = false;

  CLI::App* hom = app.add_subcommand("hom", "Hom group of a Specht lattice");
  hom->add_option("--lambda", lambda_s, "source partition")->required();
  hom->add_option("--mu", mu_s, "target partition")->required();
  hom->add_option("--mod", mod_s, "modulus (integer or \"n!\")")->required();
  hom->add_option("--target", target_s, "specht or tabloid")
      ->check(CLI::IsMember({"specht", "tabloid"}));
  hom->add_option("--out-prefix", prefix, "prefix for generator files");

  CLI::App* bs = app.add_subcommand("boxshift", "box-shift morphism");
  bs->add_option("--lambda", lambda_s, "source partition")->required();
  bs->add_option("--g", g, "first column")->required();
  bs->add_option("--k", k, "second column");
  bs->add_option("--d", d, "boxes moved between adjacent columns");
  bs->add_flag("--emit-theta", emit_theta, "print the coefficient table");
  bs->add_option("--out", out_path, "morphism output file");

  CLI::App* tr = app.add_subcommand("transpose", "transpose a morphism file");
  tr->add_option("--in", in_path, "input morphism file")->required();
  tr->add_option("--out", out_path, "output morphism file")->required();

  CLI::App* st = app.add_subcommand("straighten", "standard coordinates");
  st->add_option("--lambda", lambda_s, "shape")->required();
  st->add_option("--tableau", tab_s, "tableau, e.g. 1,4;2,5;3,6")->required();

  CLI::App* vf = app.add_subcommand("verify", "run the golden corpus");
  vf->add_option("--suite", suite, "suite name (paper-examples)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (hom->parsed())
      return cmd_hom(lambda_s, mu_s, mod_s, target_s, prefix, as_json);
    if (bs->parsed())
      return cmd_boxshift(lambda_s, g, k, d, emit_theta, out_path, as_json);
    if (tr->parsed()) return cmd_transpose(in_path, out_path, as_json);
    if (st->parsed()) return cmd_straighten(lambda_s, tab_s, as_json);
    if (vf->parsed()) return cmd_verify(suite, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return 3;
  } catch (const SpechtError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
