// envlat: cross-section lattices of enveloping monoids on the command line.
// Exit codes: 0 success, 1 argument error, 2 verification failure,
// 3 resource-cap refusal.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "envlat/errors.hpp"
#include "envlat/export.hpp"
#include "envlat/verify.hpp"

namespace {

using namespace envlat;

std::uint64_t resolve_u64(const std::optional<std::uint64_t>& flag, const char* env,
                          std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* v = std::getenv(env)) {
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
      throw invalid_input(std::string(env) + " is not an unsigned integer: " + v);
    }
  }
  return fallback;
}

int resolve_int(const std::optional<int>& flag, const char* env, int fallback) {
  if (flag) return *flag;
  if (const char* v = std::getenv(env)) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
      throw invalid_input(std::string(env) + " is not an integer: " + v);
    }
  }
  return fallback;
}

// "I=1,2;J=1", case-insensitive keys, empty sets allowed ("I=;J=").
Idempotent parse_element(const std::string& spec, int rank) {
  NodeSet I(rank), J(rank);
  bool sawI = false, sawJ = false;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t semi = spec.find(';', pos);
    std::string part = spec.substr(pos, semi == std::string::npos ? semi : semi - pos);
    pos = (semi == std::string::npos) ? spec.size() : semi + 1;
    std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw invalid_input("element spec part '" + part + "' is missing '='");
    std::string key = part.substr(0, eq);
    key.erase(remove_if(key.begin(), key.end(), ::isspace), key.end());
    NodeSet* target = nullptr;
    if (key == "I" || key == "i") {
      target = &I;
      sawI = true;
    } else if (key == "J" || key == "j") {
      target = &J;
      sawJ = true;
    } else {
      throw invalid_input("element spec key '" + key + "' is not I or J");
    }
    std::string body = part.substr(eq + 1);
    std::size_t p = 0;
    while (p < body.size()) {
      while (p < body.size() && (body[p] == ',' || std::isspace((unsigned char)body[p]))) ++p;
      if (p >= body.size()) break;
      std::size_t q = p;
      while (q < body.size() && std::isdigit((unsigned char)body[q])) ++q;
      if (q == p) throw invalid_input("bad node list '" + body + "' in element spec");
      int node = std::stoi(body.substr(p, q - p));
      if (node < 1 || node > rank)
        throw invalid_input("node " + std::to_string(node) + " outside 1.." +
                            std::to_string(rank));
      target->add(node);
      p = q;
    }
  }
  if (!sawI || !sawJ) throw invalid_input("element spec must give both I= and J=");
  return Idempotent{I, J};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of cross-section lattices of enveloping monoids"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> cap_weyl_flag;
  std::optional<int> cap_rank_flag;
  app.add_option("--cap-weyl", cap_weyl_flag,
                 "Weyl enumeration cap (default 1000000, env ENVLAT_CAP_WEYL)");
  app.add_option("--cap-rank", cap_rank_flag,
                 "lattice enumeration rank cap (default 12, env ENVLAT_CAP_RANK)");

  std::string diagram_spec, element_spec, method = "all", verify_target;
  bool want_dot = false, want_json = false, do_check = false;
  int max_n = 5, max_rank = 4, node_s = 0;

  CLI::App* lat = app.add_subcommand("lattice", "enumerate a cross-section lattice");
  lat->fallthrough();
  lat->add_option("diagram", diagram_spec, "diagram spec, e.g. A2")->required();
  lat->add_flag("--dot", want_dot, "emit the Hasse diagram as DOT");
  lat->add_flag("--json", want_json, "emit JSON (default)");

  CLI::App* cls = app.add_subcommand("classify", "classify connected stabilizers");
  cls->fallthrough();
  cls->add_option("diagram", diagram_spec)->required();
  cls->add_option("--element", element_spec, "single element, e.g. \"I=1,2;J=1\"");

  CLI::App* cnt = app.add_subcommand("count", "type-A orbit counts");
  cnt->fallthrough();
  cnt->add_option("--max-n", max_n, "largest index n")->required();
  cnt->add_option("--method", method)->check(CLI::IsMember({"rec", "gf", "enum", "all"}));
  cnt->add_flag("--check", do_check, "run the agreement and series identities");

  CLI::App* ren = app.add_subcommand("renner", "rank-1 Renner combinatorics");
  ren->fallthrough();
  ren->require_subcommand(1);
  CLI::App* r1 = ren->add_subcommand("rank1", "one orbit poset as DOT");
  r1->fallthrough();
  r1->add_option("diagram", diagram_spec)->required();
  r1->add_option("--s", node_s, "the node s of the atom e_{S, S\\{s}}")->required();
  CLI::App* r1c = ren->add_subcommand("r1count", "|R_1| with the per-atom breakdown");
  r1c->fallthrough();
  r1c->add_option("diagram", diagram_spec)->required();

  CLI::App* ver = app.add_subcommand("verify", "run the invariant batteries");
  ver->fallthrough();
  ver->add_option("target", verify_target, "diagram spec or 'all'")->required();
  ver->add_option("--max-rank", max_rank, "rank bound for 'all' (default 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::uint64_t cap_weyl = resolve_u64(cap_weyl_flag, "ENVLAT_CAP_WEYL", kDefaultWeylCap);
    int cap_rank = resolve_int(cap_rank_flag, "ENVLAT_CAP_RANK", kDefaultRankCap);

    if (lat->parsed()) {
      DynkinDiagram d = parse_diagram(diagram_spec);
      CrossSectionLattice L = CrossSectionLattice::enumerate(d, cap_rank);
      if (want_dot)
        std::cout << lattice_dot(L);
      else
        std::cout << lattice_json(L).dump(2) << "\n";
      return 0;
    }

    if (cls->parsed()) {
      DynkinDiagram d = parse_diagram(diagram_spec);
      CrossSectionLattice L = CrossSectionLattice::enumerate(d, cap_rank);
      if (!element_spec.empty()) {
        Idempotent e = parse_element(element_spec, d.rank());
        std::size_t i = L.require_index(e);
        Json j = envelope("classify");
        j["diagram"] = d.name();
        j["element"] = classify_element_json(L, i);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << classify_json(L).dump(2) << "\n";
      }
      return 0;
    }

    if (cnt->parsed()) {
      if (max_n < 0) throw invalid_input("--max-n must be non-negative");
      if ((method == "enum" || method == "all") && max_n > cap_rank)
        throw resource_limit("direct enumeration up to n=" + std::to_string(max_n) +
                             " exceeds the rank cap " + std::to_string(cap_rank));
      Json out = count_json(max_n, method, do_check, cap_rank);
      std::cout << out.dump(2) << "\n";
      if (do_check) {
        for (auto& [k, v] : out["check"].items())
          if (!v.get<bool>()) {
            std::cerr << Json{{"schema", "envlat/1"},
                              {"command", "count"},
                              {"failures", Json::array({k})}}
                             .dump()
                      << "\n";
            return 2;
          }
      }
      return 0;
    }

    if (ren->parsed()) {
      DynkinDiagram d = parse_diagram(diagram_spec);
      if (r1c->parsed()) {
        std::cout << r1count_json(d).dump(2) << "\n";
        return 0;
      }
      if (node_s < 1 || node_s > d.rank())
        throw invalid_input("--s must name a node of " + d.name());
      WeylGroup W = WeylGroup::enumerate(d, cap_weyl);
      Idempotent e{d.nodes(), d.nodes().without(node_s)};
      std::cout << rank1_poset_dot(W, rank1_orbit_poset(W, e));
      return 0;
    }

    if (ver->parsed()) {
      VerifyOptions opts;
      opts.weyl_cap = cap_weyl;
      opts.rank_cap = cap_rank;
      std::vector<CheckResult> results;
      if (verify_target == "all" || verify_target == "ALL") {
        results = verify_battery(max_rank, opts);
      } else {
        results = verify_diagram(parse_diagram(verify_target), opts);
        auto cnt_checks = verify_counting(opts);
        results.insert(results.end(), cnt_checks.begin(), cnt_checks.end());
      }
      Json failures = Json::array();
      for (const CheckResult& r : results) {
        std::cout << (r.pass ? "ok   " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << " — " << r.detail;
        std::cout << "\n";
        if (!r.pass) failures.push_back({{"name", r.name}, {"detail", r.detail}});
      }
      std::cout << (failures.empty() ? "all checks passed" : "CHECKS FAILED") << " ("
                << results.size() << " checks)\n";
      if (!failures.empty()) {
        Json rep = envelope("verify");
        rep["failures"] = failures;
        std::cerr << rep.dump() << "\n";
        return 2;
      }
      return 0;
    }
  } catch (const resource_limit& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
