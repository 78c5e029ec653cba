// Batch CLI over the library: JSON in, JSON or text out, deterministic for a
// given (command, flags, input, seed).
//
// Exit codes: 0 success; 1 domain error (structured diagnostic on stderr);
// 2 malformed JSON (position-bearing message on stderr).

#include "mukai/json_io.hpp"
#include "mukai/moduli.hpp"
#include "mukai/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mukai;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) { return Json::parse(text); }

void render_text(const Json& j, std::ostream& out, int depth = 0) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() && value.front().is_structured())) {
        out << pad << key << ":\n";
        render_text(value, out, depth + 1);
      } else {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_structured()) {
        out << pad << "-\n";
        render_text(value, out, depth + 1);
      } else {
        out << pad << "- " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Output {
  std::string format = "json";
  std::string path = "-";

  void emit(const Json& j) const {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (path != "-") {
      file.open(path);
      if (!file) throw Error(Errc::Parse, "cannot open output file " + path);
      out = &file;
    }
    if (format == "json")
      *out << j.dump(2) << "\n";
    else
      render_text(j, *out);
  }
};

GcyClass input_gcy(const Json& j) { return GcyClass::validate(decode_graded(j)); }

Json cmd_classify(const Json& in) { return encode(classify(input_gcy(in))); }

Json cmd_pic(const Json& in) { return encode(pic(input_gcy(in))); }

Json cmd_transc(const Json& in) { return encode(transcendental(input_gcy(in))); }

Json cmd_twisted(const Json& in) {
  Vec22q b = decode_vec22q(in.at("B"));
  Sublattice tx = in.contains("tx") ? decode_sublattice(in.at("tx"))
                                    : classical_tx(decode_vec22c(in.at("sigma")));
  Sublattice twisted = twisted_transcendental(tx, b);
  Json out{{"tx", encode(tx)}, {"twisted", encode(twisted)}};
  out["index"] = encode(sublattice_index(tx, twisted));
  if (in.contains("sigma")) out["r"] = encode(brauer_order(b, decode_vec22c(in.at("sigma"))));
  return out;
}

Json cmd_eta_verify(const Json& in) {
  return encode(verify_eta_hodge_isometry(decode_vec22c(in.at("sigma")), decode_vec22q(in.at("B"))));
}

Json cmd_gk3_check(const Json& in) {
  GcyClass phi = input_gcy(in.at("phi"));
  GcyClass phi_prime = input_gcy(in.at("phi_prime"));
  bool orth = planes_orthogonal(plane_of(phi), plane_of(phi_prime));
  bool norms = phi.norm() == phi_prime.norm();
  Json out{{"planes_orthogonal", orth},
           {"norms_equal", norms},
           {"hk_pair", orth && norms},
           {"norm_phi", encode(phi.norm())},
           {"norm_phi_prime", encode(phi_prime.norm())}};
  if (orth && norms) {
    FourSpace pi = four_space(GK3Pair::make(phi, phi_prime));
    out["four_space"] = encode(pi);
  }
  return out;
}

Json cmd_reduce(const Json& in) {
  FourSpace pi = in.contains("basis")
                     ? decode_four_space(in)
                     : four_space(GK3Pair::make(input_gcy(in.at("phi")), input_gcy(in.at("phi_prime"))));
  return encode(classical_reduction(pi));
}

Json cmd_omega(const Json& in) {
  GradedC x = decode_graded(in.at("x"));
  GradedC y = decode_graded(in.at("y"));
  return Json{{"H", encode(hermitian_h(x, y))}, {"omega", encode(omega(x, y))}};
}

Json cmd_lagrangian(const Json& in) {
  Vec22q w = decode_vec22q(in.at("omega"));
  std::vector<Vec22q> alphas;
  if (in.contains("alphas")) {
    for (const auto& a : in.at("alphas")) alphas.push_back(decode_vec22q(a));
  } else {
    for (int i = 0; i < kH2Dim; ++i) alphas.push_back(h2_unit<Rat>(i));
  }
  return Json{{"lagrangian", lagrangian_check(w, alphas)},
              {"directions", alphas.size()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the Mukai lattice of a K3 surface"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  std::string input_path = "-";
  std::uint64_t seed = 0;
  int box = 2;
  app.add_option("--format", output.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", output.path, "output path, - for stdout");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--box", box, "box bound for enumeration oracles")->check(CLI::Range(0, 3));

  std::string kind = "symplectic";
  int size_bound = 10;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path, "input JSON file, - for stdin");
  };
  add_input(app.add_subcommand("classify", "normal form of a GCY class"));
  add_input(app.add_subcommand("pic", "Picard lattice of a GCY class"));
  add_input(app.add_subcommand("transc", "transcendental lattice of a GCY class"));
  add_input(app.add_subcommand("twisted", "twisted transcendental lattice"));
  add_input(app.add_subcommand("eta-verify", "check the eta Hodge isometry"));
  add_input(app.add_subcommand("gk3-check", "check a generalized K3 pair"));
  add_input(app.add_subcommand("reduce", "classical reduction of a four-space"));
  add_input(app.add_subcommand("omega", "hermitian and symplectic pairings"));
  add_input(app.add_subcommand("lagrangian", "Lagrangian check for a symplectic period"));
  auto* gen = app.add_subcommand("gen", "deterministic random GCY class");
  gen->add_option("--kind", kind, "symplectic or complex")
      ->check(CLI::IsMember({"symplectic", "complex"}));
  gen->add_option("--size", size_bound, "coefficient size bound")->check(CLI::PositiveNumber);
  app.add_subcommand("selftest", "run the oracle gates; exit 0 iff all pass");

  CLI11_PARSE(app, argc, argv);
  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();

  try {
    if (name == "gen") {
      GcyKind k = kind == "symplectic" ? GcyKind::Symplectic : GcyKind::Complex;
      output.emit(encode(random_gcy(seed, k, size_bound).cls()));
      return 0;
    }
    if (name == "selftest") {
      SelftestOptions opt;
      opt.box = box;
      opt.seed = seed;
      return selftest(opt) ? 0 : 1;
    }

    Json in;
    try {
      in = parse_json(read_input(input_path));
    } catch (const nlohmann::json::parse_error& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return 2;
    }

    Json out;
    if (name == "classify") out = cmd_classify(in);
    else if (name == "pic") out = cmd_pic(in);
    else if (name == "transc") out = cmd_transc(in);
    else if (name == "twisted") out = cmd_twisted(in);
    else if (name == "eta-verify") out = cmd_eta_verify(in);
    else if (name == "gk3-check") out = cmd_gk3_check(in);
    else if (name == "reduce") out = cmd_reduce(in);
    else if (name == "omega") out = cmd_omega(in);
    else if (name == "lagrangian") out = cmd_lagrangian(in);
    output.emit(out);
    return 0;
  } catch (const Error& e) {
    Json diag{{"error", e.kind()}, {"message", e.what()}};
    std::cerr << diag.dump(2) << "\n";
    return e.code() == Errc::Parse ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
}
