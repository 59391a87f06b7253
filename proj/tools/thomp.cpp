// thomp - command-line workbench for exact computations around Thompson's
// group F: normal forms, word-problem algorithms, Belk-Brown automata,
// Cayley subgraph statistics, evacuation schemes, and group-ring equations.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "thompson/bb.hpp"
#include "thompson/cayley.hpp"
#include "thompson/cyclic.hpp"
#include "thompson/evac.hpp"
#include "thompson/gamma.hpp"
#include "thompson/polynomial.hpp"
#include "thompson/ring.hpp"
#include "thompson/ring_solve.hpp"

using namespace thompson;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitInternal = 3;

struct GlobalOpts {
  std::string format = "json";  // json | csv
  std::uint64_t seed = 0;
  std::string cap = "10000000";
  std::string field = "rational";  // rational | fp
  std::string out;
};

// Results written to --out carry no timing, so identical configurations
// produce identical bytes; the stdout envelope carries the wall time.
void emit(const GlobalOpts& g, const json& config, const json& results,
          double wallMs, const std::string& resultsText = "") {
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot open output file: " + g.out);
    if (!resultsText.empty())
      f << resultsText;
    else
      f << results.dump(2) << "\n";
  }
  json envelope{{"tool", "thomp"},
                {"version", kVersion},
                {"schema", "report/1"},
                {"config", config},
                {"exact", true},
                {"wallTimeMs", wallMs},
                {"results", results}};
  if (!resultsText.empty()) envelope["resultsText"] = resultsText;
  std::cout << envelope.dump(2) << "\n";
}

json config_echo(const GlobalOpts& g, json extra) {
  extra["format"] = g.format;
  extra["seed"] = g.seed;
  extra["cap"] = g.cap;
  extra["field"] = g.field;
  extra["out"] = g.out;
  return extra;
}

GeneratingSet parse_genset(const std::string& gens, const std::string& side) {
  std::vector<GroupWord> words;
  std::istringstream in(gens);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "xb1") tok = "x1 x0^-1";
    words.push_back(parse_word(tok));
  }
  if (words.empty()) throw std::invalid_argument("--genset lists no generators");
  if (side == "right") return GeneratingSet::right(std::move(words));
  if (side == "left") return GeneratingSet::left(std::move(words));
  throw std::invalid_argument("--side expects right or left");
}

std::string bb_csv_header() {
  return "n,k,genset,size,delta,iota,specialCount,prunedDelta\n";
}

std::string bb_csv_row(int n, int k, GenSet g, const BigInt& size, const Rational& delta,
                       const Rational& iota, const BigInt& specialCount,
                       const std::string& prunedDelta) {
  std::ostringstream row;
  row << n << "," << k << ",\"" << genset_name(g) << "\"," << size.str() << ","
      << to_string(delta) << "," << to_string(iota) << "," << specialCount.str() << ","
      << prunedDelta << "\n";
  return row.str();
}

json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for Thompson's group F"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "seed echoed into the report");
  app.add_option("--cap", g.cap, "vertex cap for enumerations");
  app.add_option("--field", g.field, "scalar field for ring commands")
      ->check(CLI::IsMember({"rational", "fp"}));
  app.add_option("--out", g.out, "write the results payload to this file");

  // ---- catalan ----
  auto* cmdCatalan = app.add_subcommand("catalan", "Catalan numbers");
  int catN = 10;
  bool catUpto = false;
  cmdCatalan->add_option("--n", catN, "index")->required();
  cmdCatalan->add_flag("--upto", catUpto, "list c_0..c_n");

  // ---- phi ----
  auto* cmdPhi = app.add_subcommand("phi", "generating polynomials Phi_k and their roots");
  int phiK = 0;
  bool phiXi = false;
  std::string phiTol = "1/1000000";
  cmdPhi->add_option("--k", phiK, "height cap")->required();
  cmdPhi->add_flag("--xi", phiXi, "bracket the positive root of Phi_k = 1");
  cmdPhi->add_option("--tol", phiTol, "bracket width (rational)");

  // ---- nf ----
  auto* cmdNf = app.add_subcommand("nf", "normal form of a word");
  std::string nfWord;
  cmdNf->add_option("--word", nfWord, "word over x<i> tokens")->required();

  // ---- wp ----
  auto* cmdWp = app.add_subcommand("wp", "word problem");
  std::string wpWord, wpAlgo = "both";
  bool wpFreeReduce = false;
  cmdWp->add_option("--word", wpWord)->required();
  cmdWp->add_option("--algorithm", wpAlgo)->check(CLI::IsMember({"nf", "cyclic", "both"}));
  cmdWp->add_flag("--free-reduce", wpFreeReduce, "freely reduce between iterations");

  // ---- bb ----
  auto* cmdBb = app.add_subcommand("bb", "Belk-Brown automata BB(n,k)");
  int bbN = 2, bbK = 1, bbNTo = -1;
  std::string bbGenset = "x0,x1", bbMode = "dp", bbPruneMode = "special-abc", bbCheckpoint;
  cmdBb->add_option("--n", bbN)->required();
  cmdBb->add_option("--k", bbK)->required();
  cmdBb->add_option("--n-to", bbNTo, "sweep n up to this value (one row per n)");
  cmdBb->add_option("--genset", bbGenset)
      ->check(CLI::IsMember({"x0,x1", "x1,xb1", "x0,x1,xb1", "x0,x1,x2"}));
  cmdBb->add_option("--mode", bbMode)->check(CLI::IsMember({"enumerate", "dp", "prune"}));
  cmdBb->add_option("--prune-mode", bbPruneMode)
      ->check(CLI::IsMember({"isolated", "special-abc"}));
  cmdBb->add_option("--checkpoint", bbCheckpoint,
                    "dp-table cache file (single-n dp mode only)");

  // ---- cayley ----
  auto* cmdCayley = app.add_subcommand("cayley", "Cayley subgraph snapshots");
  int cayRadius = 1;
  std::string cayGens = "x0,x1", caySide = "right", cayCenter = "";
  cmdCayley->add_option("--ball", cayRadius, "ball radius around the center");
  cmdCayley->add_option("--genset", cayGens, "comma-separated generator words");
  cmdCayley->add_option("--side", caySide)->check(CLI::IsMember({"right", "left"}));
  cmdCayley->add_option("--center", cayCenter, "center word (default identity)");

  // ---- evac ----
  auto* cmdEvac = app.add_subcommand("evac", "evacuation-scheme feasibility");
  std::string evacSnapshot;
  int evacC = 1;
  std::string evacWitness;
  cmdEvac->add_option("--snapshot", evacSnapshot, "snapshot JSON file")->required();
  cmdEvac->add_option("--C", evacC, "capacity constant");
  cmdEvac->add_option("--witness", evacWitness, "write the witness scheme here");

  // ---- gamma ----
  auto* cmdGamma = app.add_subcommand("gamma", "triple-of-trees graphs");
  int gammaN = 4;
  bool gammaScattered = false, gammaCheck = false;
  cmdGamma->add_option("--n", gammaN, "total number of leaves")->required();
  cmdGamma->add_flag("--scattered", gammaScattered, "also build the scattered model");
  cmdGamma->add_flag("--check-iso", gammaCheck, "verify the isomorphism with the scattered model");

  // ---- ring ----
  auto* cmdRing = app.add_subcommand("ring", "group-ring computations");
  cmdRing->require_subcommand(1);
  auto* ringVerify = cmdRing->add_subcommand("verify", "check a u = b v");
  std::string rvA, rvU, rvB, rvV;
  ringVerify->add_option("--a", rvA)->required();
  ringVerify->add_option("--u", rvU)->required();
  ringVerify->add_option("--b", rvB)->required();
  ringVerify->add_option("--v", rvV)->required();

  auto* ringSolve = cmdRing->add_subcommand("solve", "kernel of a_1 u_1 = ... = a_t u_t");
  std::vector<std::string> rsElems;
  int rsDeg = 1, rsMaxIndex = -1;
  ringSolve->add_option("--elem", rsElems, "coefficient element (repeat >= 2 times)")
      ->required()
      ->expected(-2);
  ringSolve->add_option("--deg", rsDeg, "max degree of the unknowns");
  ringSolve->add_option("--maxindex", rsMaxIndex,
                        "max generator index (default: max index of inputs + deg)");

  auto* ringFamily = cmdRing->add_subcommand("family", "closed-form solution families");
  std::string rfName = "descr01", rfBeta = "1";
  int rfK = 0;
  ringFamily->add_option("--name", rfName)->check(CLI::IsMember({"descr01", "descr"}));
  ringFamily->add_option("--k", rfK)->required();
  ringFamily->add_option("--beta", rfBeta, "parameter for the descr family");

  auto* ringRel = cmdRing->add_subcommand("relation2uv", "telescope a relation into (u,v)");
  std::string rrWord;
  ringRel->add_option("--word", rrWord)->required();

  for (auto* sc : {cmdCatalan, cmdPhi, cmdNf, cmdWp, cmdBb, cmdCayley, cmdEvac, cmdGamma,
                   cmdRing, ringVerify, ringSolve, ringFamily, ringRel})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto started = std::chrono::steady_clock::now();
  auto elapsed_ms = [&]() {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
        .count();
  };

  try {
    BigInt cap(g.cap);

    if (cmdCatalan->parsed()) {
      json rows = json::array();
      for (int i = catUpto ? 0 : catN; i <= catN; ++i)
        rows.push_back({{"n", i}, {"value", catalan(i).str()}});
      emit(g, config_echo(g, {{"command", "catalan"}, {"n", catN}, {"upto", catUpto}}), rows,
           elapsed_ms());
      return kExitOk;
    }

    if (cmdPhi->parsed()) {
      BigPoly p = phi_poly(phiK);
      json coeffs = json::array();
      for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
      json results{{"k", phiK}, {"polynomial", p.str()}, {"coefficients", coeffs}};
      if (phiXi) {
        auto r = xi_root(phiK, parse_rational(phiTol));
        results["xi"] = {{"lo", to_string(r.lo)},
                         {"hi", to_string(r.hi)},
                         {"exact", r.exact},
                         {"kind", r.exact ? "exact" : "interval"}};
      }
      emit(g, config_echo(g, {{"command", "phi"}, {"k", phiK}, {"xi", phiXi}, {"tol", phiTol}}),
           results, elapsed_ms());
      return kExitOk;
    }

    if (cmdNf->parsed()) {
      NormalForm f = nf_from_word(parse_word(nfWord));
      TreePair pair = to_pair(f);
      json results{{"word", nfWord},
                   {"normalForm", f.str()},
                   {"trivial", f.is_identity()},
                   {"positive", f.is_positive()},
                   {"treePair", {{"pos", pair.pos().str()}, {"neg", pair.neg().str()}}}};
      emit(g, config_echo(g, {{"command", "nf"}, {"word", nfWord}}), results, elapsed_ms());
      return kExitOk;
    }

    if (cmdWp->parsed()) {
      GroupWord w = parse_word(wpWord);
      json results{{"word", wpWord}};
      std::optional<bool> nfVerdict, cycVerdict;
      if (wpAlgo == "nf" || wpAlgo == "both") {
        nfVerdict = is_trivial_word(w);
        results["nf"] = {{"trivial", *nfVerdict}};
      }
      if (wpAlgo == "cyclic" || wpAlgo == "both") {
        auto res = decide_trivial(CyclicWord(expand_to_two_letters(w)), wpFreeReduce);
        cycVerdict = res.trivial;
        results["cyclic"] = trace_to_json(res);
      }
      if (nfVerdict && cycVerdict) {
        results["agreement"] = *nfVerdict == *cycVerdict;
        if (*nfVerdict != *cycVerdict) {
          std::cerr << "internal consistency failure: oracles disagree on " << wpWord << "\n";
          emit(g,
               config_echo(g, {{"command", "wp"}, {"word", wpWord}, {"algorithm", wpAlgo}}),
               results, elapsed_ms());
          return kExitInternal;
        }
      }
      emit(g, config_echo(g, {{"command", "wp"}, {"word", wpWord}, {"algorithm", wpAlgo}}),
           results, elapsed_ms());
      return kExitOk;
    }

    if (cmdBb->parsed()) {
      GenSet gs = *genset_from_name(bbGenset);
      int nLast = bbNTo >= bbN ? bbNTo : bbN;
      bool sweep = nLast > bbN;
      std::string csv = bb_csv_header();
      json rows = json::array();
      for (int n = bbN; n <= nLast; ++n) {
        BBParams p{n, bbK, gs};
        // checkpoints cache the dp tables of a single (n, k)
        bbdp::Tables tables;
        bool haveTables = false;
        if (!sweep && !bbCheckpoint.empty() && bbMode == "dp") {
          std::ifstream in(bbCheckpoint);
          if (in) {
            try {
              auto t = bbdp::tables_from_json(json::parse(in));
              if (t.n == n && t.k == bbK) {
                tables = std::move(t);
                haveTables = true;
              }
            } catch (...) {
              // unreadable or mismatched checkpoint: recompute below
            }
          }
        }
        if (!haveTables) {
          tables = bbdp::make_tables(n, bbK);
          if (!sweep && !bbCheckpoint.empty() && bbMode == "dp") {
            std::ofstream out(bbCheckpoint);
            out << bbdp::tables_to_json(tables).dump() << "\n";
          }
        }

        BigInt size = bbdp::window_count(tables.e, {tables.phi}, n);
        Rational delta;
        std::string prunedDelta;
        bool dpMatches = true;
        if (bbMode == "dp") {
          delta = bb_density_dp_on(tables, gs);
        } else if (bbMode == "enumerate") {
          auto s = bb_graph(p, cap);
          delta = s.density();
          dpMatches = delta == bb_density_dp_on(tables, gs);
          if (!dpMatches) {
            std::cerr << "internal consistency failure: dp and enumeration densities differ\n";
            return kExitInternal;
          }
        } else {
          auto mode = bbPruneMode == "isolated" ? PruneMode::Isolated : PruneMode::SpecialABC;
          auto res = prune(p, mode, cap);
          delta = res.before;
          prunedDelta = to_string(res.after);
        }
        BigInt specialCount = 0;
        if (bbK >= 1)
          specialCount = bbdp::window_count(
              tables.e, {tables.triv, tables.high, tables.triv, tables.high, tables.nontriv}, n);
        Rational iota = Rational(2 * genset_generators(gs).size()) - delta;
        csv += bb_csv_row(n, bbK, gs, size, delta, iota, specialCount, prunedDelta);
        json row{{"n", n},
                 {"k", bbK},
                 {"genset", genset_name(gs)},
                 {"size", size.str()},
                 {"delta", rational_json(delta)},
                 {"iota", rational_json(iota)},
                 {"specialCount", specialCount.str()},
                 {"prunedDelta", prunedDelta}};
        if (bbMode == "enumerate") row["dpMatches"] = dpMatches;
        rows.push_back(std::move(row));
      }
      json results = sweep ? rows : rows.front();
      emit(g,
           config_echo(g, {{"command", "bb"},
                           {"n", bbN},
                           {"nTo", nLast},
                           {"k", bbK},
                           {"genset", bbGenset},
                           {"mode", bbMode},
                           {"checkpoint", bbCheckpoint}}),
           results, elapsed_ms(), g.format == "csv" ? csv : "");
      return kExitOk;
    }

    if (cmdCayley->parsed()) {
      GeneratingSet A = parse_genset(cayGens, caySide);
      NormalForm center =
          cayCenter.empty() ? NormalForm::identity() : nf_from_word(parse_word(cayCenter));
      auto Y = ball(center, cayRadius, A, cap.convert_to<std::size_t>());
      auto s = build_subgraph(Y, A);
      json results = s.to_json();
      emit(g,
           config_echo(g, {{"command", "cayley"},
                           {"ball", cayRadius},
                           {"genset", cayGens},
                           {"side", caySide},
                           {"center", cayCenter}}),
           results, elapsed_ms());
      return kExitOk;
    }

    if (cmdEvac->parsed()) {
      std::ifstream in(evacSnapshot);
      if (!in) throw std::runtime_error("cannot read snapshot file: " + evacSnapshot);
      json j = json::parse(in);
      SubgraphSnapshot s = SubgraphSnapshot::from_json(j);
      auto [feasible, scheme] = evac_exists(s, evacC);
      json results{{"feasible", feasible}, {"C", evacC}, {"vertices", s.size()}};
      if (feasible && !evacWitness.empty()) {
        std::ofstream wf(evacWitness);
        wf << scheme_to_json(s, *scheme).dump(2) << "\n";
        results["witnessFile"] = evacWitness;
      }
      emit(g, config_echo(g, {{"command", "evac"}, {"snapshot", evacSnapshot}, {"C", evacC}}),
           results, elapsed_ms());
      return kExitOk;
    }

    if (cmdGamma->parsed()) {
      LabelledGraph gamma = gamma_graph(gammaN);
      json results{{"n", gammaN},
                   {"tripleCount", triple_count(gammaN).str()},
                   {"vertices", gamma.vertex_count()},
                   {"edges", gamma.edge_count()},
                   {"graph", gamma.to_json()}};
      if (gammaScattered || gammaCheck) {
        auto sg = scattered_graph(gammaN - 3);
        results["scattered"] = {{"carets", gammaN - 3},
                                {"preQuotientVertices", sg.preQuotientVertices.str()},
                                {"classes", sg.graph.vertex_count()}};
        if (gammaCheck) {
          std::map<std::string, std::string> vmap;
          for (const auto& key : sg.graph.vertex_keys())
            vmap[key] = marked_to_triple(MarkedForest::parse(key)).str();
          bool iso = isomorphic_under_map(sg.graph,
                                          gamma.filter_labels({"x1", "xb1"}), vmap);
          results["scattered"]["isomorphic"] = iso;
          if (!iso) {
            std::cerr << "internal consistency failure: scattered model mismatch\n";
            return kExitInternal;
          }
        }
      }
      emit(g, config_echo(g, {{"command", "gamma"}, {"n", gammaN}}), results, elapsed_ms());
      return kExitOk;
    }

    if (cmdRing->parsed()) {
      json config = config_echo(g, {{"command", "ring"}});
      if (ringVerify->parsed()) {
        auto A = ringio::parse<Rational>(rvA);
        auto U = ringio::parse<Rational>(rvU);
        auto B = ringio::parse<Rational>(rvB);
        auto V = ringio::parse<Rational>(rvV);
        bool ok = verify_identity(A, U, B, V);
        config["subcommand"] = "verify";
        emit(g, config, json{{"holds", ok}}, elapsed_ms());
        return kExitOk;
      }
      if (ringSolve->parsed()) {
        std::vector<RingQ> elems;
        for (const auto& s : rsElems) elems.push_back(ringio::parse<Rational>(s));
        int maxIndex = rsMaxIndex;
        if (maxIndex < 0) {
          std::uint32_t mi = 0;
          for (const auto& e : elems) mi = std::max(mi, e.max_index());
          maxIndex = static_cast<int>(mi) + rsDeg;
        }
        BasisSpec spec{rsDeg, maxIndex};
        config["subcommand"] = "solve";
        config["deg"] = rsDeg;
        config["maxindex"] = maxIndex;
        std::size_t kernelDim = 0;
        json witness = json::array();
        if (g.field == "fp") {
          // fast probe, then a rational confirmation below
          std::vector<RingFp> elemsFp;
          for (const auto& e : elems) {
            RingFp f;
            for (const auto& [m, c] : e.terms()) f.add_term(m, Fp(c));
            elemsFp.push_back(std::move(f));
          }
          kernelDim = solve_right<Fp>(elemsFp, spec).size();
        }
        SolveStats stats;
        auto sols = solve_right<Rational>(elems, spec, &stats);
        if (g.field == "fp" && kernelDim != sols.size()) {
          std::cerr << "internal consistency failure: F_p and rational kernels differ\n";
          return kExitInternal;
        }
        kernelDim = sols.size();
        if (!sols.empty())
          for (const auto& u : sols.front()) witness.push_back(u.str());
        json results{{"basis", {{"deg", rsDeg}, {"maxindex", maxIndex},
                                {"monomials", monomial_basis(spec).size()}}},
                     {"system", {{"rows", stats.rows}, {"columns", stats.columns}}},
                     {"unknowns", elems.size()},
                     {"kernelDimension", kernelDim},
                     {"witness", witness},
                     {"note", "kernel emptiness is relative to the basis bounds"}};
        emit(g, config, results, elapsed_ms());
        return kExitOk;
      }
      if (ringFamily->parsed()) {
        config["subcommand"] = "family";
        config["name"] = rfName;
        config["k"] = rfK;
        RingQ u, a, b;
        if (rfName == "descr01") {
          u = descr01_u<Rational>(rfK);
          a = RingQ::one() - RingQ::generator(0);
          b = RingQ::one() - RingQ::generator(1);
        } else {
          Rational beta = parse_rational(rfBeta);
          config["beta"] = rfBeta;
          u = descr_u(beta, rfK);
          a = RingQ::generator(0) + RingQ::generator(2, beta);
          b = RingQ::generator(1) + RingQ::generator(2, beta);
        }
        RingQ rhs = a * u;
        BasisSpec spec{u.degree(), static_cast<int>(rhs.max_index())};
        auto v = solve_inhom(b, rhs, spec);
        if (!v) {
          std::cerr << "internal consistency failure: no partner for the family element\n";
          return kExitInternal;
        }
        json results{{"u", u.str()},
                     {"v", v->str()},
                     {"verified", verify_identity(a, u, b, *v)},
                     {"uJson", ringio::to_json(u)},
                     {"vJson", ringio::to_json(*v)}};
        emit(g, config, results, elapsed_ms());
        return kExitOk;
      }
      if (ringRel->parsed()) {
        config["subcommand"] = "relation2uv";
        config["word"] = rrWord;
        GroupWord w = expand_to_two_letters(parse_word(rrWord));
        auto [u, v] = relation_to_solution<Rational>(w);
        json results{{"u", u.str()},
                     {"v", v.str()},
                     {"uJson", ringio::to_json(u)},
                     {"vJson", ringio::to_json(v)},
                     {"verified", true}};
        emit(g, config, results, elapsed_ms());
        return kExitOk;
      }
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::length_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
