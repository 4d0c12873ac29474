// Command-line surface for the Goeritz-group homology engine.
//
// Exit codes: 0 = pass/found, 1 = obstructed/absent/fail, 2 = error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "goeritz/enumeration.hpp"
#include "goeritz/free_word.hpp"
#include "goeritz/json_io.hpp"
#include "goeritz/normal_form.hpp"
#include "goeritz/obstruction.hpp"
#include "goeritz/star_map.hpp"
#include "goeritz/sweeps.hpp"
#include "goeritz/synthesis.hpp"

using nlohmann::json;
using namespace goeritz;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Options {
  long p = 2;
  bool as_json = false;
};

void print_sp_element(const SpElement& e, bool as_json) {
  if (as_json) {
    std::cout << to_json(e).dump(2) << "\n";
    return;
  }
  std::cout << e.to_text() << "\n";
  std::cout << "A =\n" << a_block(e).to_text() << "\n";
  std::cout << "D_A =\n" << d_block(e).to_text() << "\n";
  std::cout << "assembled =\n" << assemble(e).to_text() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact homology engine for the genus-2 Goeritz groups of L(p,1)"};
  app.require_subcommand(1);

  // eval <word> --p N
  std::string word_text;
  Options eval_opt;
  auto* eval = app.add_subcommand("eval", "evaluate the homology matrix of a word");
  eval->add_option("word", word_text, "word, e.g. \"b g r^2\"")->required();
  eval->add_option("--p", eval_opt.p, "lens space parameter p >= 2")->required();
  eval->add_flag("--json", eval_opt.as_json, "JSON output");

  // normal-form <word> --p N
  std::string nf_text;
  Options nf_opt;
  auto* nf_cmd = app.add_subcommand("normal-form", "canonical form in the quotient");
  nf_cmd->add_option("word", nf_text)->required();
  nf_cmd->add_option("--p", nf_opt.p)->required();
  nf_cmd->add_flag("--json", nf_opt.as_json);

  // decompose <matrix-file> --p N
  std::string dec_path;
  Options dec_opt;
  auto* dec = app.add_subcommand("decompose", "parameterize a 4x4 matrix in S_p");
  dec->add_option("matrix-file", dec_path)->required();
  dec->add_option("--p", dec_opt.p)->required();
  dec->add_flag("--json", dec_opt.as_json);

  // member <matrix-file> --p N
  std::string mem_path;
  Options mem_opt;
  auto* mem = app.add_subcommand("member", "A_p / S_p / B_p membership verdicts");
  mem->add_option("matrix-file", mem_path)->required();
  mem->add_option("--p", mem_opt.p)->required();
  mem->add_flag("--json", mem_opt.as_json);

  // synthesize <sp-element.json>
  std::string syn_path;
  bool syn_json = false;
  auto* syn = app.add_subcommand("synthesize", "generator word for an S_p element");
  syn->add_option("sp-element", syn_path, "JSON file with the parameter tuple")->required();
  syn->add_flag("--json", syn_json);

  // obstruct <v> <v'> --p N [--bound B]
  std::string v_text, vp_text;
  Options obs_opt;
  long long obs_bound = 8;
  bool stabilized_only = false;
  auto* obs = app.add_subcommand("obstruct", "homology obstruction report for a pair");
  obs->add_option("v", v_text, "vector a,x,b,y")->required();
  obs->add_option("v-prime", vp_text)->required();
  obs->add_option("--p", obs_opt.p)->required();
  obs->add_option("--bound", obs_bound, "search bound for degenerate systems");
  obs->add_flag("--stabilized", stabilized_only,
                "require vectors of the form (a,0,b,+-1)");
  obs->add_flag("--json", obs_opt.as_json);

  // enumerate --p N --kappa K [--axis-bound B]
  Options enu_opt;
  long long enu_kappa = 6;
  long long enu_axis = -1;
  auto* enu = app.add_subcommand("enumerate", "image elements up to a kappa bound");
  enu->add_option("--p", enu_opt.p)->required();
  enu->add_option("--kappa", enu_kappa)->required();
  enu->add_option("--axis-bound", enu_axis,
                  "cap |l|, |m| on the two kappa = 2 parabolic families "
                  "(default: kappa)");
  enu->add_flag("--json", enu_opt.as_json);

  // verify {relations|kernel|image|claims} --p N [bounds...]
  std::string what;
  Options ver_opt;
  long long ver_len = 8, ver_kappa = 10, ver_samples = 10000, ver_seed = 1;
  bool ver_serial = false;
  auto* ver = app.add_subcommand("verify", "batch verification sweeps");
  ver->add_option("what", what, "relations|kernel|image|claims")->required();
  ver->add_option("--p", ver_opt.p)->required();
  ver->add_option("--max-length", ver_len);
  ver->add_option("--kappa", ver_kappa);
  ver->add_option("--samples", ver_samples);
  ver->add_option("--seed", ver_seed);
  ver->add_flag("--serial", ver_serial, "use the serial reference kernels");
  ver->add_flag("--json", ver_opt.as_json);

  // homotopy <freeword> <freeword>
  std::string fw1, fw2;
  bool hom_json = false;
  auto* hom = app.add_subcommand("homotopy", "free-group conjugacy of two words");
  hom->add_option("u", fw1, "word over x X y Y")->required();
  hom->add_option("v", fw2)->required();
  hom->add_flag("--json", hom_json);

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) {
    Mat4 m = star(parse_word(word_text, eval_opt.p));
    if (eval_opt.as_json)
      std::cout << to_json(m).dump() << "\n";
    else
      std::cout << m.to_text() << "\n";
    return 0;
  }

  if (nf_cmd->parsed()) {
    NormalForm nf = normal_form(parse_word(nf_text, nf_opt.p));
    if (nf_opt.as_json) {
      json j{{"p", nf.p},
             {"central_parity", nf.central_parity},
             {"core", nf.core.to_text()},
             {"word", nf.realize().to_text()},
             {"trivial", nf.is_trivial()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << nf.to_text() << "\n";
      if (nf.is_trivial()) std::cout << "(trivial in the quotient)\n";
    }
    return 0;
  }

  if (dec->parsed()) {
    auto entries = parse_matrix_entries(read_file(dec_path));
    if (entries.size() != 16) fail("decompose expects a 4x4 matrix");
    auto e = try_decompose_sp(mat4_from_entries(entries), dec_opt.p);
    if (!e) {
      std::cout << "not in S_p\n";
      return 1;
    }
    print_sp_element(*e, dec_opt.as_json);
    return 0;
  }

  if (mem->parsed()) {
    auto entries = parse_matrix_entries(read_file(mem_path));
    bool in_a = false, in_s = false, in_b = false;
    std::optional<SpElement> e;
    if (entries.size() == 4) {
      Mat2 a = mat2_from_entries(entries);
      in_a = in_A_p(a, mem_opt.p);
      if (in_a) {
        // Lift through the sign-absorbing pattern match to test B_p.
        Mat4 m4;
        SpElement probe;
        for (int omega : {1, -1}) {
          Mat2 cand = omega == 1 ? a : -a;
          Int d = cand.det();
          if (d != 1 && d != -1) continue;
          if (!divides(Int(mem_opt.p), cand.at(0, 0) - 1)) continue;
          if (!divides(Int(mem_opt.p), cand.at(1, 0))) continue;
          int delta = d == 1 ? 1 : -1;
          probe = SpElement{omega, (cand.at(0, 0) - 1) / mem_opt.p, cand.at(0, 1),
                            cand.at(1, 0) / mem_opt.p, (cand.at(1, 1) - delta) / mem_opt.p,
                            delta, mem_opt.p};
          e = probe;
          break;
        }
        if (e) in_b = in_B_p(*e);
        in_s = in_a;  // a 2x2 in A_p lifts to S_p by the block construction
      }
    } else {
      e = try_decompose_sp(mat4_from_entries(entries), mem_opt.p);
      in_s = e.has_value();
      in_a = in_s;
      if (e) in_b = in_B_p(*e);
    }
    if (mem_opt.as_json) {
      json j{{"A_p", in_a}, {"S_p", in_s}, {"B_p", in_b}};
      if (e) j["element"] = to_json(e->canonicalize());
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "A_p: " << (in_a ? "yes" : "no") << "\n"
                << "S_p: " << (in_s ? "yes" : "no") << "\n"
                << "B_p (image): " << (in_b ? "yes" : "no") << "\n";
      if (e) std::cout << "parameters: " << e->canonicalize().to_text() << "\n";
    }
    return in_b ? 0 : 1;
  }

  if (syn->parsed()) {
    json j = json::parse(read_file(syn_path));
    SpElement e = sp_element_from_json(j);
    if (!e.determinant_condition_holds()) fail("determinant condition violated");
    if (!in_B_p(e)) {
      std::cout << "not in B_p: no generator word exists\n";
      return 1;
    }
    GroupWord w = synthesize_word(e);
    if (syn_json) {
      json out{{"word", w.to_text()}, {"element", to_json(e.canonicalize())}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << w.to_text() << "\n";
    }
    return 0;
  }

  if (obs->parsed()) {
    HomologyVector v = parse_homology_vector(v_text);
    HomologyVector vp = parse_homology_vector(vp_text);
    if (stabilized_only) {
      auto stabilized = [](const HomologyVector& h) {
        return h.x == 0 && (h.y == 1 || h.y == -1);
      };
      if (!stabilized(v) || !stabilized(vp))
        fail("--stabilized requires vectors of the form (a,0,b,+-1)");
    }
    ObstructionReport rep =
        check_homology_obstruction(v, vp, obs_opt.p, Int(obs_bound));
    if (obs_opt.as_json) {
      std::cout << to_json(rep).dump(2) << "\n";
    } else {
      std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
      for (const ConditionRow& row : rep.conditions) {
        std::cout << "  (omega=" << row.omega << ", Delta=" << row.Delta
                  << "): mod-p " << (row.cond1_mod_p ? "pass" : "fail") << ", gcd "
                  << (row.cond2_gcd ? "pass" : "fail") << ", divisibility "
                  << (row.cond3_divisibility
                          ? (*row.cond3_divisibility ? "pass" : "fail")
                          : "n/a")
                  << ", inequality "
                  << (row.cond4_inequality ? (*row.cond4_inequality ? "pass" : "fail")
                                           : "n/a")
                  << "\n";
      }
      if (rep.families) {
        std::cout << "families:";
        for (int f : *rep.families) std::cout << ' ' << f;
        if (rep.families->empty()) std::cout << " none";
        std::cout << "\n";
      } else {
        std::cout << "families: inconclusive (delta * delta' = 0)\n";
      }
      if (rep.certificate) {
        std::cout << "certificate element: " << rep.certificate->first.to_text() << "\n";
        std::cout << "certificate word: " << rep.certificate->second.to_text() << "\n";
      }
    }
    return rep.verdict == Verdict::CertifiedEquivalentOnHomology ? 0 : 1;
  }

  if (enu->parsed()) {
    Int axis = enu_axis < 0 ? Int(enu_kappa) : Int(enu_axis);
    auto elems = enumerate_image(enu_opt.p, Int(enu_kappa), axis);
    if (enu_opt.as_json) {
      json arr = json::array();
      for (const SpElement& e : elems) arr.push_back(to_json(e));
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const SpElement& e : elems)
        std::cout << e.to_text() << "  kappa=" << kappa(e) << "\n";
      std::cout << "total: " << elems.size() << "\n";
    }
    return 0;
  }

  if (ver->parsed()) {
    SweepConfig cfg;
    cfg.p = ver_opt.p;
    cfg.max_word_length = static_cast<int>(ver_len);
    cfg.kappa_max = ver_kappa;
    cfg.axis_bound = ver_kappa;
    cfg.sample_count = static_cast<int>(ver_samples);
    cfg.seed = static_cast<unsigned long long>(ver_seed);
    cfg.parallel = !ver_serial;
    std::vector<VerificationReport> reports;
    if (what == "relations") {
      reports.push_back(verify_relations(cfg.p));
    } else if (what == "kernel") {
      reports.push_back(verify_kernel(cfg));
    } else if (what == "image") {
      reports.push_back(verify_image(cfg));
    } else if (what == "claims") {
      reports = verify_claims(cfg);
    } else {
      fail("unknown verify target: " + what);
    }
    bool all = true;
    if (ver_opt.as_json) {
      json arr = json::array();
      for (const VerificationReport& r : reports) arr.push_back(to_json(r));
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const VerificationReport& r : reports) std::cout << r.to_text() << "\n";
    }
    for (const VerificationReport& r : reports) all = all && r.pass;
    return all ? 0 : 1;
  }

  if (hom->parsed()) {
    bool eq = freely_homotopic(parse_free_word(fw1), parse_free_word(fw2));
    if (hom_json)
      std::cout << json{{"freely_homotopic", eq}}.dump() << "\n";
    else
      std::cout << (eq ? "freely homotopic" : "not freely homotopic") << "\n";
    return eq ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
