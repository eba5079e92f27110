#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "segrestrat.h"

using json = nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

[[noreturn]] void die(sgs_status status) {
  std::cerr << "error: " << sgs_last_error() << "\n";
  const bool usage = status == SGS_ERR_PARSE || status == SGS_ERR_INVALID_ARGUMENT;
  std::exit(usage ? kExitUsage : kExitDomain);
}

void check(sgs_status status) {
  if (status != SGS_OK) die(status);
}

struct GroupHandle {
  sgs_group* ptr = nullptr;
  ~GroupHandle() { sgs_group_free(ptr); }
};

struct ParabolicHandle {
  sgs_parabolic* ptr = nullptr;
  ~ParabolicHandle() { sgs_parabolic_free(ptr); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  sgs_string_free(s);
  return out;
}

/// Wrap a C-API payload {"result":..., "warnings":[...]} in the output
/// envelope and print it.
void print_envelope(const std::string& command, const json& inputs,
                    const std::string& payload_text) {
  const json payload = json::parse(payload_text);
  json envelope;
  envelope["command"] = command;
  envelope["inputs"] = inputs;
  envelope["result"] = payload.at("result");
  envelope["warnings"] = payload.at("warnings");
  envelope["version"] = sgs_version();
  std::cout << envelope.dump(2) << "\n";
}

/// Shared parabolic selection flags for the parabolic/isotropy/segre commands.
struct ParabolicFlags {
  std::vector<int> flag;
  std::vector<int> isotropic;
  std::vector<int> omitted;
  int lagrangian_class = 1;
  bool borel = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--flag", flag, "type A flag signature, e.g. 1,1,1")->delimiter(',');
    cmd->add_option("--isotropic", isotropic, "isotropic flag dimensions (types B/C/D)")
        ->delimiter(',');
    cmd->add_option("--omitted", omitted, "omitted simple-root indices (1-based)")
        ->delimiter(',');
    cmd->add_option("--class", lagrangian_class,
                    "lagrangian class for a maximal type D step (1 or 2)");
    cmd->add_flag("--borel", borel, "the Borel subgroup");
  }

  json echo() const {
    json out;
    if (!flag.empty()) out["flag"] = flag;
    if (!isotropic.empty()) out["isotropic"] = isotropic;
    if (!omitted.empty()) out["omitted"] = omitted;
    if (!isotropic.empty()) out["class"] = lagrangian_class;
    if (borel) out["borel"] = true;
    return out;
  }

  sgs_parabolic* build(const sgs_group* g) const {
    const int selections = !flag.empty() + !isotropic.empty() + !omitted.empty() + borel;
    if (selections != 1) {
      std::cerr << "error: choose exactly one of --flag, --isotropic, --omitted, --borel\n";
      std::exit(kExitUsage);
    }
    sgs_parabolic* p = nullptr;
    if (!flag.empty())
      check(sgs_parabolic_from_flag(g, flag.data(), flag.size(), &p));
    else if (!isotropic.empty())
      check(sgs_parabolic_from_isotropic(g, isotropic.data(), isotropic.size(),
                                         lagrangian_class, &p));
    else if (!omitted.empty())
      check(sgs_parabolic_from_omitted(g, omitted.data(), omitted.size(), &p));
    else
      check(sgs_parabolic_borel(g, &p));
    return p;
  }
};

bool parse_window(const std::string& text, long long out[4]) {
  return std::sscanf(text.c_str(), "%lld:%lld,%lld:%lld", &out[0], &out[1], &out[2],
                     &out[3]) == 4;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segre stratification data for principal bundle moduli over a curve"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sgs_version()));
  app.failure_message(CLI::FailureMessage::help);

  std::string group_name;
  ParabolicFlags pflags;
  std::vector<long long> degrees;

  auto* cmd_group = app.add_subcommand("group", "describe a group");
  cmd_group->add_option("name", group_name, "group name, e.g. GL(3) or SL(6)/mu(2)")
      ->required();

  auto* cmd_roots = app.add_subcommand("roots", "list the root system");
  cmd_roots->add_option("name", group_name)->required();

  auto* cmd_parabolic = app.add_subcommand("parabolic", "describe a parabolic subgroup");
  cmd_parabolic->add_option("name", group_name)->required();
  pflags.attach(cmd_parabolic);

  auto* cmd_isotropy =
      app.add_subcommand("isotropy", "determinant of the isotropy representation");
  cmd_isotropy->add_option("name", group_name)->required();
  pflags.attach(cmd_isotropy);

  auto* cmd_segre = app.add_subcommand("segre", "Segre value of a numerical type");
  cmd_segre->add_option("name", group_name)->required();
  pflags.attach(cmd_segre);
  cmd_segre->add_option("--degrees", degrees, "block degrees, e.g. -1,0,1")
      ->delimiter(',')
      ->required();

  int genus = 2;
  int n_param = 1;
  long long delta = 0;
  long long s_value = 0;

  auto* cmd_stratum = app.add_subcommand("stratum", "stratum catalog entry");
  cmd_stratum->add_option("name", group_name, "GL(r), PGL(r), SO(2n) or Spin(2n)")
      ->required();
  cmd_stratum->add_option("--n", n_param, "subbundle rank (type A families)");
  cmd_stratum->add_option("--delta", delta, "topological type")->required();
  cmd_stratum->add_option("--s", s_value, "Segre value")->required();
  cmd_stratum->add_option("--genus", genus, "curve genus (>= 2)")->required();

  auto* cmd_sigma = app.add_subcommand("sigma", "attained Segre values");
  cmd_sigma->add_option("name", group_name)->required();
  cmd_sigma->add_option("--n", n_param, "subbundle rank (type A families)");
  cmd_sigma->add_option("--delta", delta)->required();
  cmd_sigma->add_option("--genus", genus)->required();

  std::string iso_kind;
  std::string source_status;
  int iso_r = 0;
  int iso_m = 0;
  std::vector<int> transfer_omitted;

  auto* cmd_transfer = app.add_subcommand("transfer", "push a stratum along an isogeny");
  cmd_transfer
      ->add_option("--iso", iso_kind,
                   "adjoint | central-quotient | quotient-to-adjoint | "
                   "adjoint-symplectic | cover")
      ->required();
  cmd_transfer->add_option("--r", iso_r, "rank parameter of the isogeny")->required();
  cmd_transfer->add_option("--m", iso_m, "central subgroup order (SL/mu kinds)");
  cmd_transfer->add_option("--n", n_param, "catalogued parabolic parameter");
  cmd_transfer->add_option("--omitted", transfer_omitted, "explicit omitted simple roots")
      ->delimiter(',');
  cmd_transfer->add_option("--delta", delta)->required();
  cmd_transfer->add_option("--s", s_value)->required();
  cmd_transfer->add_option("--genus", genus)->required();
  cmd_transfer->add_option("--status", source_status,
                           "source stratum status: yes | no | unknown");

  auto* cmd_gl3 = app.add_subcommand("gl3", "rank 3 full-flag classification");
  cmd_gl3->require_subcommand(1);

  std::vector<long long> d_triple;
  auto* cmd_classify = cmd_gl3->add_subcommand("classify", "classify one degree triple");
  cmd_classify->add_option("--genus", genus)->required();
  cmd_classify->add_option("--delta", delta)->required();
  cmd_classify->add_option("--d", d_triple, "degree triple d1,d2,d3")
      ->delimiter(',')
      ->required()
      ->expected(3);

  std::string window_text;
  std::string format = "json";
  std::string out_path;
  auto* cmd_figure = cmd_gl3->add_subcommand("figure", "classify a window of triples");
  cmd_figure->add_option("--genus", genus)->required();
  cmd_figure->add_option("--delta", delta)->required();
  cmd_figure->add_option("--window", window_text, "d1min:d1max,d3min:d3max")->required();
  cmd_figure->add_option("--format", format)->check(CLI::IsMember({"csv", "svg", "json"}));
  cmd_figure->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
    app.exit(e);
    return kExitUsage;
  }

  if (*cmd_group || *cmd_roots) {
    GroupHandle g;
    check(sgs_group_parse(group_name.c_str(), &g.ptr));
    char* payload = nullptr;
    if (*cmd_group)
      check(sgs_group_json(g.ptr, &payload));
    else
      check(sgs_roots_json(g.ptr, &payload));
    print_envelope(*cmd_group ? "group" : "roots", json{{"name", group_name}},
                   take(payload));
    return 0;
  }

  if (*cmd_parabolic || *cmd_isotropy) {
    GroupHandle g;
    check(sgs_group_parse(group_name.c_str(), &g.ptr));
    ParabolicHandle p;
    p.ptr = pflags.build(g.ptr);
    char* payload = nullptr;
    if (*cmd_parabolic)
      check(sgs_parabolic_json(p.ptr, &payload));
    else
      check(sgs_isotropy_json(p.ptr, &payload));
    json inputs = pflags.echo();
    inputs["name"] = group_name;
    print_envelope(*cmd_parabolic ? "parabolic" : "isotropy", inputs, take(payload));
    return 0;
  }

  if (*cmd_segre) {
    GroupHandle g;
    check(sgs_group_parse(group_name.c_str(), &g.ptr));
    ParabolicHandle p;
    p.ptr = pflags.build(g.ptr);
    char* payload = nullptr;
    check(sgs_segre_json(p.ptr, degrees.data(), degrees.size(), &payload));
    json inputs = pflags.echo();
    inputs["name"] = group_name;
    inputs["degrees"] = degrees;
    print_envelope("segre", inputs, take(payload));
    return 0;
  }

  if (*cmd_stratum) {
    char* payload = nullptr;
    check(sgs_stratum_json(group_name.c_str(), n_param, delta, s_value, genus, &payload));
    print_envelope("stratum",
                   json{{"name", group_name},
                        {"n", n_param},
                        {"delta", delta},
                        {"s", s_value},
                        {"genus", genus}},
                   take(payload));
    return 0;
  }

  if (*cmd_sigma) {
    char* payload = nullptr;
    check(sgs_sigma_json(group_name.c_str(), n_param, delta, genus, &payload));
    print_envelope(
        "sigma",
        json{{"name", group_name}, {"n", n_param}, {"delta", delta}, {"genus", genus}},
        take(payload));
    return 0;
  }

  if (*cmd_transfer) {
    char* payload = nullptr;
    check(sgs_transfer_json(iso_kind.c_str(), iso_r, iso_m, n_param,
                            transfer_omitted.empty() ? nullptr : transfer_omitted.data(),
                            transfer_omitted.size(), delta, s_value, genus,
                            source_status.empty() ? nullptr : source_status.c_str(),
                            &payload));
    json inputs{{"iso", iso_kind}, {"r", iso_r},     {"n", n_param},
                {"delta", delta},  {"s", s_value},   {"genus", genus}};
    if (iso_m) inputs["m"] = iso_m;
    if (!transfer_omitted.empty()) inputs["omitted"] = transfer_omitted;
    if (!source_status.empty()) inputs["status"] = source_status;
    print_envelope("transfer", inputs, take(payload));
    return 0;
  }

  if (*cmd_classify) {
    char* payload = nullptr;
    check(sgs_gl3_classify_json(d_triple[0], d_triple[1], d_triple[2], delta, genus,
                                &payload));
    print_envelope("gl3 classify",
                   json{{"genus", genus}, {"delta", delta}, {"d", d_triple}},
                   take(payload));
    return 0;
  }

  if (*cmd_figure) {
    long long w[4];
    if (!parse_window(window_text, w)) {
      std::cerr << "error: --window expects d1min:d1max,d3min:d3max\n";
      return kExitUsage;
    }
    char* text = nullptr;
    check(sgs_gl3_figure(delta, genus, w[0], w[1], w[2], w[3], format.c_str(), &text));
    std::string body;
    if (format == "json") {
      const json payload = json::parse(take(text));
      json envelope;
      envelope["command"] = "gl3 figure";
      envelope["inputs"] = json{{"genus", genus},
                                {"delta", delta},
                                {"window", window_text},
                                {"format", format}};
      envelope["result"] = payload.at("result");
      envelope["warnings"] = payload.at("warnings");
      envelope["version"] = sgs_version();
      body = envelope.dump(2) + "\n";
    } else {
      body = take(text);
    }
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return kExitDomain;
      }
      out << body;
    }
    return 0;
  }

  return kExitUsage;
}
