#include "ultralip/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ultralip/extremal.hpp"
#include "ultralip/freenorm.hpp"
#include "ultralip/mideal.hpp"
#include "ultralip/randgen.hpp"
#include "ultralip/report.hpp"
#include "ultralip/suites.hpp"
#include "ultralip/witnesses.hpp"

namespace ultralip {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

FreeElement parse_element(SpacePtr space, const std::string& text) {
  std::map<int, Rational> coeffs;
  for (const auto& item : split(text, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) fail(Err::ParseError, "expected label:coeff in '" + item + "'");
    int idx = space->index_of(item.substr(0, colon));
    coeffs[idx] += parse_rational(item.substr(colon + 1));
  }
  return FreeElement::from_coeffs(std::move(space), std::move(coeffs));
}

LipFn parse_fn(SpacePtr space, const std::string& text) {
  std::vector<Rational> vals(static_cast<std::size_t>(space->size()), Rational(0));
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(Err::ParseError, "expected label=value in '" + item + "'");
    int idx = space->index_of(item.substr(0, eq));
    vals[static_cast<std::size_t>(idx)] = parse_rational(item.substr(eq + 1));
  }
  return LipFn::make(std::move(space), std::move(vals));
}

std::string digest_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) return "";
  std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  return hex64(fnv1a(text));
}

struct Output {
  std::string format = "text";
  std::ostream* out = nullptr;
  int emit(const Report& rep) const {
    if (format == "tsv")
      rep.print_tsv(*out);
    else
      rep.print_text(*out);
    return rep.all_pass() ? 0 : 1;
  }
};

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computational Lipschitz analysis over ultrametric spaces"};
  app.require_subcommand(1);
  Output output;
  output.out = &out;
  app.add_option("--format", output.format, "output format")->check(CLI::IsMember({"text", "tsv"}));
  std::uint64_t seed = 0;
  long depth = 30;
  app.add_option("--seed", seed, "random seed");
  app.add_option("--depth", depth, "truncation depth");

  // ------------------------------------------------------------- validate
  auto* validate = app.add_subcommand("validate", "check a space file");
  std::string validate_file;
  validate->add_option("file", validate_file)->required();

  // ------------------------------------------------------------ partition
  auto* partition = app.add_subcommand("partition", "partition chain and trails");
  std::string partition_file, partition_q = "1/2", partition_trail;
  long partition_level = 0;
  partition->add_option("file", partition_file)->required();
  partition->add_option("--q", partition_q, "scale ratio in (0,1)");
  auto* partition_level_opt = partition->add_option("--level", partition_level);
  partition->add_option("--trail", partition_trail, "print the trail of this label");

  // ------------------------------------------------------------- ywitness
  auto* ywitness = app.add_subcommand("ywitness", "witness scale for the predual test");
  std::string yw_file, yw_order, yw_fn, yw_eps = "1/10";
  ywitness->add_option("file", yw_file)->required();
  ywitness->add_option("--order", yw_order, "comma-separated labels, base first");
  ywitness->add_option("--fn", yw_fn)->required();
  ywitness->add_option("--eps", yw_eps);

  // ------------------------------------------------------------- freenorm
  auto* freenorm = app.add_subcommand("freenorm", "free-space norm of an element");
  std::string fn_file, fn_element, fn_engine = "both";
  freenorm->add_option("file", fn_file)->required();
  freenorm->add_option("--element", fn_element)->required();
  freenorm->add_option("--engine", fn_engine)->check(CLI::IsMember({"lp", "tree", "both"}));

  // -------------------------------------------------------------- extreme
  auto* extreme = app.add_subcommand("extreme", "strongly extreme point and its ledger");
  std::string ex_file, ex_q = "1/2", ex_eps = "1/100";
  extreme->add_option("file", ex_file)->required();
  extreme->add_option("--q", ex_q);
  extreme->add_option("--eps", ex_eps);

  // --------------------------------------------------------------- mideal
  auto* mideal = app.add_subcommand("mideal", "3-ball machinery");
  mideal->require_subcommand(1);
  auto* werner = mideal->add_subcommand("werner", "projection criterion counterexample");
  int werner_grid = 4;
  werner->add_option("--grid", werner_grid);
  auto* demo = mideal->add_subcommand("demo", "ultrametric 3-ball estimate");
  std::string demo_file, demo_q = "1/2", demo_R, demo_eps = "1/4";
  long demo_N = 2;
  demo->add_option("file", demo_file)->required();
  demo->add_option("--q", demo_q);
  demo->add_option("--N", demo_N);
  demo->add_option("--R", demo_R);
  demo->add_option("--eps", demo_eps);

  // ------------------------------------------------------------ spherical
  auto* spherical = app.add_subcommand("spherical", "pseudo-Cauchy and ball-chain searches");
  std::string sph_builtin = "e1_not_sc", sph_alpha = "1";
  spherical->add_option("--builtin", sph_builtin);
  spherical->add_option("--min-alpha", sph_alpha);

  // ---------------------------------------------------------------- audit
  auto* audit = app.add_subcommand("audit", "non-duality bookkeeping ledger");
  std::string audit_builtin = "e1_not_sc", audit_phi, audit_molecules, audit_chain,
      audit_alpha = "1";
  audit->add_option("--builtin", audit_builtin);
  audit->add_option("--phi", audit_phi, "element as label:coeff,...");
  audit->add_option("--molecules", audit_molecules, "terms as p,q,lambda;...");
  audit->add_option("--chain", audit_chain, "balls as label:radius;...");
  audit->add_option("--min-alpha", audit_alpha);

  // --------------------------------------------------------------- membed
  auto* membed = app.add_subcommand("membed", "M-embedding failure witness");
  std::string mb_builtin = "discrete_n";
  int mb_yscale = 4;
  membed->add_option("--builtin", mb_builtin);
  membed->add_option("--yscale", mb_yscale);

  // ------------------------------------------------------------------ gen
  auto* gen = app.add_subcommand("gen", "seeded random dendrogram space");
  int gen_points = 8, gen_branching = 3;
  std::string gen_out;
  gen->add_option("--points", gen_points);
  gen->add_option("--branching", gen_branching);
  gen->add_option("--out", gen_out, "write to this file instead of stdout");

  // ---------------------------------------------------------------- suite
  auto* suite = app.add_subcommand("suite", "acceptance batteries");
  std::string suite_name = "all";
  suite->add_option("name", suite_name);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    Report rep;
    if (*validate) {
      SpacePtr space = load_space(validate_file);
      rep.command = "validate";
      rep.digest = digest_file(validate_file);
      rep.header = {"points", "ultrametric", "witness"};
      std::string witness = "-";
      if (auto w = space->ultrametric_witness())
        witness = space->label((*w)[0]) + "," + space->label((*w)[1]) + "," + space->label((*w)[2]);
      rep.rows.push_back({std::to_string(space->size()),
                          space->is_ultrametric() ? "yes" : "no", witness});
      rep.verdicts.emplace_back("valid-metric", true);
      return output.emit(rep);
    }
    if (*partition) {
      SpacePtr space = load_space(partition_file);
      PartitionChain chain = build_chain(space, parse_rational(partition_q));
      rep.command = "partition";
      rep.digest = digest_file(partition_file);
      rep.params.emplace_back("q", partition_q);
      rep.header = {"level", "radius", "centers"};
      for (long n = chain.n_lo; n <= chain.n_hi; ++n) {
        if (partition_level_opt->count() > 0 && n != partition_level) continue;
        std::string centers;
        for (int c : chain.level(n)) centers += (centers.empty() ? "" : ",") + space->label(c);
        rep.rows.push_back({std::to_string(n), rat_str(chain.q_pow(n)), centers});
      }
      if (!partition_trail.empty()) {
        PhiTrail tr = trail(chain, space->index_of(partition_trail));
        std::string pts, lvls;
        for (std::size_t k = 0; k < tr.points.size(); ++k)
          pts += (k ? "," : "") + space->label(tr.points[k]);
        for (std::size_t k = 0; k < tr.change_levels.size(); ++k)
          lvls += (k ? "," : "") + std::to_string(tr.change_levels[k]);
        rep.rows.push_back({"trail(" + partition_trail + ")", lvls.empty() ? "-" : lvls, pts});
      }
      rep.verdicts.emplace_back("chain-built", true);
      return output.emit(rep);
    }
    if (*ywitness) {
      SpacePtr space = load_space(yw_file);
      Enumeration enumeration = yw_order.empty()
                                    ? Enumeration::natural(space)
                                    : Enumeration::of_labels(space, split(yw_order, ','));
      RetractionFamily family(std::move(enumeration));
      LipFn f = parse_fn(space, yw_fn);
      YWitness w = y_witness(family, f, parse_rational(yw_eps));
      rep.command = "ywitness";
      rep.digest = digest_file(yw_file);
      rep.params.emplace_back("eps", yw_eps);
      rep.header = {"witness-N", "max-N", "binding-pair"};
      std::string bind = "-";
      if (w.binding_pair)
        bind = space->label(w.binding_pair->first) + "," + space->label(w.binding_pair->second);
      rep.rows.push_back({std::to_string(w.n), std::to_string(family.max_level()), bind});
      rep.verdicts.emplace_back("witness-found", true);
      return output.emit(rep);
    }
    if (*freenorm) {
      SpacePtr space = load_space(fn_file);
      FreeElement mu = parse_element(space, fn_element);
      rep.command = "freenorm";
      rep.digest = digest_file(fn_file);
      rep.params.emplace_back("element", fn_element);
      rep.header = {"engine", "value"};
      std::optional<Rational> lp_value, tree_value;
      if (fn_engine != "tree") {
        FreeNormResult res = free_norm_lp(mu);
        lp_value = res.value;
        rep.rows.push_back({"lp", rat_str(res.value)});
        std::string cert;
        for (int i = 0; i < space->size(); ++i)
          cert += (i ? "," : "") + space->label(i) + "=" + rat_str(res.certificate.optimal.value(i));
        rep.rows.push_back({"certificate", cert});
      }
      if (fn_engine != "lp") {
        tree_value = free_norm_tree(mu);
        rep.rows.push_back({"tree", rat_str(*tree_value)});
      }
      if (fn_engine == "both")
        rep.verdicts.emplace_back("engines-agree", *lp_value == *tree_value);
      return output.emit(rep);
    }
    if (*extreme) {
      SpacePtr space = load_space(ex_file);
      PartitionChain chain = build_chain(space, parse_rational(ex_q));
      ExtremeCandidate cand = build_extreme(chain);
      Rational eps = parse_rational(ex_eps);
      PerturbationBound pb = perturbation_bound(cand, eps);
      rep.command = "extreme";
      rep.digest = digest_file(ex_file);
      rep.params.emplace_back("q", ex_q);
      rep.params.emplace_back("eps", ex_eps);
      rep.header = {"point", "value"};
      for (int i = 0; i < space->size(); ++i)
        rep.rows.push_back({space->label(i), rat_str(cand.f.value(i))});
      rep.rows.push_back({"norm", rat_str(lip_norm_value(cand.f))});
      rep.rows.push_back({"max-g-norm", rat_str(pb.max_g_norm)});
      rep.rows.push_back({"paper-bound", rat_str(pb.paper_bound)});
      rep.verdicts.emplace_back("unit-norm", lip_norm_value(cand.f) == 1);
      if (pb.in_window) rep.verdicts.emplace_back("perturbation-bound", pb.holds);
      return output.emit(rep);
    }
    if (*werner) {
      WernerAudit wa = werner_audit(werner_grid);
      rep.command = "mideal werner";
      rep.params.emplace_back("grid", std::to_string(werner_grid));
      rep.header = {"quantity", "value"};
      rep.rows.push_back({"norm-F", rat_str(wa.norm_f)});
      rep.rows.push_back({"norm-QF", rat_str(wa.norm_qf)});
      rep.rows.push_back({"norm-F-minus-QF", rat_str(wa.norm_residual)});
      rep.verdicts.emplace_back("reproduces-1-vs-2", wa.reproduces);
      // the sweep should rediscover a violator
      SpacePtr space = werner_space(werner_grid);
      SubspaceSpec spec = SubspaceSpec::from_projection(space, werner_projection(*space));
      ProjectionMReport search = projection_mcheck(spec, seed, 200);
      rep.rows.push_back({"sweep", search.note});
      rep.verdicts.emplace_back("violator-found", search.violation_found);
      return output.emit(rep);
    }
    if (*demo) {
      SpacePtr space = load_space(demo_file);
      Rational q = parse_rational(demo_q);
      PartitionChain chain = build_chain(space, q);
      Rational eps = parse_rational(demo_eps);
      Rational R = demo_R.empty() ? space->max_dist_to_base() : parse_rational(demo_R);
      if (R < chain.q_pow(demo_N)) R = chain.q_pow(demo_N);
      std::mt19937_64 rng(seed);
      LipFn F = gen_lipfn(space, rng, true);
      std::array<LipFn, 3> flats = {LipFn::zero(space), LipFn::zero(space), LipFn::zero(space)};
      const Rational delta = chain.q_pow(demo_N);
      for (auto& f : flats) {
        LipFn g = gen_lipfn(space, rng, true);
        Rational profile = flatness_profile(g, delta, R);
        if (profile > eps) g = g.scaled(eps / profile);
        f = g;
      }
      ThreeBallDemoReport dr = three_ball_ultrametric_demo(chain, F, flats, demo_N, R, eps);
      rep.command = "mideal demo";
      rep.digest = digest_file(demo_file);
      rep.params.emplace_back("q", demo_q);
      rep.params.emplace_back("N", std::to_string(demo_N));
      rep.params.emplace_back("R", rat_str(R));
      rep.params.emplace_back("eps", rat_str(eps));
      rep.params.emplace_back("seed", std::to_string(seed));
      rep.header = {"case", "pairs", "worst-ratio"};
      const char* names[4] = {"same-cell-or-both-out", "in-vs-out", "fine-to-mid", "separated"};
      for (int c = 0; c < 4; ++c)
        rep.rows.push_back({names[c], std::to_string(dr.case_pairs[static_cast<std::size_t>(c)]),
                            rat_str(dr.case_worst[static_cast<std::size_t>(c)])});
      rep.rows.push_back({"worst", "-", rat_str(dr.worst_ratio)});
      rep.verdicts.emplace_back("three-ball-bound", dr.pass);
      return output.emit(rep);
    }
    if (*spherical) {
      PresentedSpace space = builtin_space(sph_builtin);
      PseudoCauchyReport pc = pseudo_cauchy_search(space, depth);
      rep.command = "spherical";
      rep.params.emplace_back("builtin", sph_builtin);
      rep.params.emplace_back("depth", std::to_string(depth));
      rep.header = {"quantity", "value"};
      std::string seq;
      for (std::size_t k = 0; k < pc.subsequence.size() && k < 12; ++k)
        seq += (k ? "," : "") + space.label(pc.subsequence[k]);
      if (pc.subsequence.size() > 12) seq += ",...";
      rep.rows.push_back({"subsequence", seq});
      rep.rows.push_back({"length", std::to_string(pc.subsequence.size())});
      std::string gaps;
      for (std::size_t k = 0; k < pc.gaps.size() && k < 8; ++k)
        gaps += (k ? "," : "") + rat_str(pc.gaps[k]);
      if (pc.gaps.size() > 8) gaps += ",...";
      rep.rows.push_back({"gaps", gaps});
      std::string limits = "-";
      for (std::size_t k = 0; k < pc.pseudo_limits.size(); ++k)
        limits = (k ? limits + "," : "") + space.label(pc.pseudo_limits[k]);
      rep.rows.push_back({"pseudo-limits", limits});
      rep.rows.push_back({"extension-blocked", pc.extension_blocked ? "yes" : "no"});
      auto chain = ball_chain_search(space, depth, parse_rational(sph_alpha));
      if (chain) {
        rep.rows.push_back({"chain-length", std::to_string(chain->depth())});
        rep.rows.push_back({"chain-alpha", rat_str(chain->alpha)});
        rep.rows.push_back({"final-ball-size", std::to_string(chain->final_ball.size())});
        rep.rows.push_back(
            {"empty-beyond-center", chain->empty_beyond_center ? "yes" : "no"});
      } else {
        rep.rows.push_back({"chain-length", "none"});
      }
      if (auto sc = space.spherically_complete())
        rep.rows.push_back({"ground-truth-spherically-complete", *sc ? "yes" : "no"});
      rep.verdicts.emplace_back("searches-completed", true);
      return output.emit(rep);
    }
    if (*audit) {
      PresentedSpace space = builtin_space(audit_builtin);
      SpacePtr trunc = truncate_shared(space, depth);
      std::optional<BallChain> chain;
      if (!audit_chain.empty()) {
        BallChain parsed;
        for (const auto& item : split(audit_chain, ';')) {
          auto colon = item.find(':');
          if (colon == std::string::npos)
            fail(Err::ParseError, "expected label:radius in '" + item + "'");
          parsed.centers.push_back(trunc->index_of(item.substr(0, colon)) + 1);
          parsed.radii.push_back(parse_rational(item.substr(colon + 1)));
        }
        parsed.alpha = parsed.radii.back();
        chain = std::move(parsed);
      } else {
        chain = ball_chain_search(space, depth, parse_rational(audit_alpha));
        if (!chain) fail(Err::BadArgument, "no ball chain found; pass --chain");
      }
      MolecularDecomposition phi;
      if (!audit_molecules.empty()) {
        for (const auto& item : split(audit_molecules, ';')) {
          auto parts = split(item, ',');
          if (parts.size() != 3) fail(Err::ParseError, "expected p,q,lambda in '" + item + "'");
          phi.terms.push_back({parse_rational(parts[2]), trunc->index_of(parts[0]),
                               trunc->index_of(parts[1])});
        }
      } else if (!audit_phi.empty()) {
        phi = canonical_decomposition(parse_element(trunc, audit_phi));
      }
      NondualityAudit na = nonduality_audit(phi, *chain, trunc);
      rep.command = "audit";
      rep.params.emplace_back("builtin", audit_builtin);
      rep.params.emplace_back("depth", std::to_string(depth));
      rep.header = {"level", "r_n", "norm-delta-phi", "f-pairing", "g-pairing", "hypothesis"};
      for (std::size_t k = 0; k < na.levels.size(); ++k) {
        const auto& led = na.levels[k];
        rep.rows.push_back({std::to_string(k + 1), rat_str(led.r_n),
                            rat_str(led.norm_delta_minus_phi), rat_str(led.f_pairing),
                            rat_str(led.g_pairing), led.hypothesis_holds ? "holds" : "fails"});
      }
      std::string betas;
      for (std::size_t k = 0; k < na.beta.size(); ++k)
        betas += (k ? "," : "") + rat_str(na.beta[k]);
      rep.rows.push_back({"beta", betas, "", "", "", ""});
      rep.rows.push_back({"verdict", na.verdict, "", "", "", ""});
      rep.verdicts.emplace_back("claim-1", na.claim1_holds);
      rep.verdicts.emplace_back("claim-2-bound", na.claim2_holds);
      rep.verdicts.emplace_back("unit-norms", na.fg_norms_ok);
      return output.emit(rep);
    }
    if (*membed) {
      PresentedSpace space = builtin_space(mb_builtin);
      auto found = not_proper_sequence(space, depth);
      rep.command = "membed";
      rep.params.emplace_back("builtin", mb_builtin);
      rep.params.emplace_back("depth", std::to_string(depth));
      rep.params.emplace_back("yscale", std::to_string(mb_yscale));
      if (!found) {
        rep.rows.push_back({"witness", "none"});
        rep.verdicts.emplace_back("witness-found", false);
        return output.emit(rep);
      }
      SpacePtr trunc = truncate_shared(space, depth);
      MEmbedWitnessReport mw = m_embed_witness(trunc, found->delta, found->R, found->N,
                                               found->subsequence, mb_yscale);
      rep.header = {"quantity", "value"};
      rep.rows.push_back({"N", std::to_string(found->N)});
      rep.rows.push_back({"delta", rat_str(found->delta)});
      rep.rows.push_back({"R", rat_str(found->R)});
      rep.rows.push_back({"subsequence-length", std::to_string(found->subsequence.size())});
      rep.rows.push_back({"optimum", rat_str(mw.optimum)});
      rep.rows.push_back({"excess", rat_str(mw.excess)});
      rep.rows.push_back({"bound", rat_str(mw.bound)});
      rep.verdicts.emplace_back("witness-norms", mw.norms_ok);
      rep.verdicts.emplace_back("excess-at-least-bound", mw.bound_holds);
      return output.emit(rep);
    }
    if (*gen) {
      RandomSpaceSpec spec;
      spec.seed = seed;
      spec.points = gen_points;
      spec.branching = gen_branching;
      Dendrogram d = gen_space(spec);
      std::ostringstream text;
      write_dendrogram(text, d);
      if (!gen_out.empty()) {
        std::ofstream file(gen_out);
        file << text.str();
        rep.command = "gen";
        rep.params.emplace_back("seed", std::to_string(seed));
        rep.params.emplace_back("points", std::to_string(gen_points));
        rep.rows.push_back({"written", gen_out});
        rep.verdicts.emplace_back("generated", true);
        return output.emit(rep);
      }
      out << text.str();
      return 0;
    }
    if (*suite) {
      rep.command = "suite " + suite_name;
      rep.header = {"criterion", "name", "result", "seconds", "detail"};
      bool all = true;
      for (const CriterionResult& r : run_suite(suite_name)) {
        all = all && r.pass;
        std::ostringstream secs;
        secs.precision(2);
        secs << std::fixed << r.seconds;
        rep.rows.push_back({std::to_string(r.id), r.name, r.pass ? "pass" : "FAIL",
                            secs.str(), r.detail});
        rep.verdicts.emplace_back("criterion-" + std::to_string(r.id), r.pass);
      }
      return output.emit(rep);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no command\n";
  return 2;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_run(args, std::cout, std::cerr);
}

}  // namespace ultralip
