// Command-line front end: languages, desubstitution audits, elementarity,
// descent chains, sequence audits, and the built-in example fixtures.

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "sadic/fixtures.hpp"
#include "sadic/io.hpp"

using namespace sadic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitNoDecomposition = 4;
constexpr int kExitInconsistency = 5;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int64_t param_of(const std::vector<std::string>& params, const std::string& key) {
  for (const std::string& p : params) {
    if (p.rfind(key + "=", 0) == 0) return std::stoll(p.substr(key.size() + 1));
  }
  throw InputError("example needs parameter " + key + "=<int>");
}

// Inputs are either built-in example names (with K=/N= parameters) or paths.
struct Input {
  std::string name;
  std::optional<Morphism> morphism;
  std::optional<MorphismSequence> sequence;
  std::vector<std::string> params;
};

Input resolve_input(const std::string& spec, const std::vector<std::string>& params) {
  Input in;
  in.name = spec;
  in.params = params;
  if (spec == "fibonacci") in.morphism = fixtures::fibonacci();
  else if (spec == "thue-morse") in.morphism = fixtures::thue_morse();
  else if (spec == "ex3.4") in.morphism = fixtures::ex34();
  else if (spec == "ex5.1") in.sequence = fixtures::ex51();
  else if (spec == "ex7.5") in.sequence = fixtures::ex75(static_cast<int>(param_of(params, "K")));
  else if (spec == "ex7.6") in.sequence = fixtures::ex76(static_cast<int>(param_of(params, "N")));
  else {
    const std::string text = io::read_file(spec);
    const std::string dir = std::filesystem::path(spec).parent_path().string();
    if (io::looks_like_sequence(text)) {
      auto ns = io::parse_sequence_text(text, dir.empty() ? "." : dir);
      in.name = ns.name.empty() ? spec : ns.name;
      in.sequence = std::move(ns.sequence);
    } else {
      auto nm = io::parse_morphism_text(text);
      in.name = nm.name.empty() ? spec : nm.name;
      in.morphism = std::move(nm.morphism);
    }
  }
  return in;
}

const Morphism& need_morphism(const Input& in) {
  if (!in.morphism) throw InputError("this command needs a morphism input");
  return *in.morphism;
}

const MorphismSequence& need_sequence(const Input& in) {
  if (!in.sequence) throw InputError("this command needs a sequence input");
  return *in.sequence;
}

void print_factor_set(const FactorSet& fs) {
  for (const Word& w : fs.bag.words()) std::cout << w.display() << "\n";
  std::cout << "saturated=" << (fs.saturated ? "true" : "false") << "\n";
  std::cout << "truncated=" << (fs.truncated ? "true" : "false") << "\n";
}

int cmd_lang(const Input& in, int level, int64_t len, int horizon) {
  if (len < 1) throw InputError("--len must be >= 1");
  if (in.morphism) {
    print_factor_set(language_of_morphism(*in.morphism, len, horizon));
  } else {
    print_factor_set(level_language(need_sequence(in), level, len, level + horizon));
  }
  return kExitOk;
}

const char* verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::NoViolation: return "NO_VIOLATION";
    case Verdict::Kind::Evidence: return "EVIDENCE";
    case Verdict::Kind::CertifiedNonrecognizable: return "CERTIFIED";
  }
  return "?";
}

void print_verdict(const Verdict& v) {
  std::cout << "VERDICT: " << verdict_name(v.kind) << " radius=" << v.radius << "\n";
  std::cout << "windows_scanned=" << v.windows_scanned
            << " ambiguous=" << v.ambiguous_windows
            << " candidates=" << v.candidates_tried
            << " rejected_membership=" << v.rejected_membership
            << " rejected_periodic=" << v.rejected_periodic << "\n";
  if (v.certificate) {
    std::cout << io::emit_certificate_text(io::detach(*v.certificate, 0));
  }
  for (const AmbiguousWindow& aw : v.evidence) {
    std::cout << "ambiguous window=" << aw.window.display() << " fragments="
              << aw.fragments.size() << "\n";
  }
}

int cmd_desub(const Input& in, const std::string& word, const std::string& point_file,
              const std::string& oracle_kind, int64_t radius, bool aperiodic,
              int64_t len, int horizon) {
  const Morphism& sigma = need_morphism(in);
  std::optional<FactorSet> oracle;
  if (oracle_kind == "lang") {
    oracle = language_of_morphism(sigma, std::max<int64_t>(len, 2 * radius), horizon);
  } else if (oracle_kind != "full") {
    throw InputError("--oracle must be 'full' or 'lang'");
  }
  const FactorSet* lang = oracle ? &*oracle : nullptr;

  if (!word.empty() || !point_file.empty()) {
    Word target(sigma.codomain(), {});
    if (!word.empty()) {
      if (word.find(' ') != std::string::npos) {
        target = Word::parse(sigma.codomain(), word);
      } else {
        for (char c : word) {
          std::string tok(1, c);
          if (!sigma.codomain()->contains(tok))
            throw InputError("window letter not in the codomain: " + tok);
          target.push_back(sigma.codomain()->index_of(tok));
        }
      }
    } else {
      ShiftModel m = io::parse_model_text(io::read_file(point_file));
      target = m.generators.front().window(-radius, 2 * radius);
    }
    for (const RepFragment& f : enumerate_fragments(target, sigma, lang)) {
      std::cout << "fragment k=" << f.k << " span=[" << f.span.first << ","
                << f.span.second << ") window=" << f.window.display() << "\n";
    }
    return kExitOk;
  }

  // No window given: run the recognizability audit.
  std::optional<FactorSet> lang_y;
  const FactorSet* ly = nullptr;
  if (oracle) {
    lang_y = language_of_morphism(sigma, std::max<int64_t>(len, 2 * radius), horizon);
    ly = &*lang_y;
  }
  print_verdict(audit_recognizability(sigma, lang, ly, radius, aperiodic));
  return kExitOk;
}

int cmd_elementary(const Input& in) {
  const Morphism& sigma = need_morphism(in);
  auto dec = find_decomposition(sigma);
  if (!dec) {
    std::cout << "ELEMENTARY\n";
    return kExitOk;
  }
  std::cout << "NOT_ELEMENTARY via " << dec->mid->size() << " letters\n\n";
  std::cout << io::emit_morphism_text("alpha", dec->alpha) << "\n";
  std::cout << io::emit_morphism_text("beta", dec->beta);
  return kExitOk;
}

int cmd_chain(const Input& in, const std::string& flags_csv, int m) {
  const MorphismSequence seq =
      in.sequence ? *in.sequence : constant_sequence(need_morphism(in));
  std::vector<int> flags;
  std::istringstream is(flags_csv);
  std::string tok;
  while (std::getline(is, tok, ',')) flags.push_back(std::stoi(tok));
  DescentChain chain = build_descent_chain(seq, flags, m);

  std::cout << "m=" << m << " alphabet=" << seq.alphabet_at(m)->size() << "\n";
  std::string sizes = std::to_string(seq.alphabet_at(m)->size());
  for (size_t k = 0; k < chain.steps.size(); ++k) {
    const DescentStep& step = chain.steps[k];
    std::cout << "step " << (k + 1) << ": level=" << step.level
              << " B" << (k + 1) << "=" << step.dec.mid->size() << "\n";
    std::cout << io::emit_morphism_text("alpha_" + std::to_string(k + 1), step.dec.alpha);
    std::cout << io::emit_morphism_text("beta_" + std::to_string(k + 1), step.dec.beta);
    sizes += " > " + std::to_string(step.dec.mid->size());
  }
  std::cout << "sizes: " << sizes << "\n";
  return kExitOk;
}

const char* rep_name(RepresentabilityVerdict::Kind k) {
  switch (k) {
    case RepresentabilityVerdict::Kind::RepresentableNonErasing: return "REPRESENTABLE(non-erasing)";
    case RepresentabilityVerdict::Kind::RepresentableModel: return "REPRESENTABLE(model)";
    case RepresentabilityVerdict::Kind::NotRepresentable: return "NOT_REPRESENTABLE";
    case RepresentabilityVerdict::Kind::Unknown: return "UNKNOWN";
  }
  return "?";
}

int cmd_audit(const Input& in, const std::vector<std::string>& model_paths,
              int64_t radius, int64_t len, int horizon, bool plain) {
  const MorphismSequence& seq =
      in.sequence ? *in.sequence : constant_sequence(need_morphism(in));

  std::map<int, ShiftModel> models;
  auto add_model_file = [&](const std::string& path) {
    ShiftModel m = io::parse_model_text(io::read_file(path));
    models[m.level] = std::move(m);
  };
  for (const std::string& p : model_paths) {
    if (std::filesystem::is_directory(p)) {
      std::vector<std::string> files;
      for (const auto& entry : std::filesystem::directory_iterator(p))
        if (entry.path().extension() == ".model") files.push_back(entry.path().string());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) add_model_file(f);
    } else {
      add_model_file(p);
    }
  }
  if (in.name == "ex5.1" && model_paths.empty() && models.empty()) models = fixtures::ex51_models();
  if (in.name == "ex7.5" && model_paths.empty() && models.empty())
    models = fixtures::ex75_models(static_cast<int>(param_of(in.params, "K")));

  SequenceAuditOptions opts;
  opts.radius = radius;
  if (len > 0) opts.len = len;
  opts.depth = horizon;
  opts.aperiodic = !plain;
  AuditReport report = audit_sequence(seq, models, opts);

  for (const LevelReport& lr : report.levels) {
    std::cout << "level " << lr.level << ": recognizability="
              << verdict_name(lr.recognizability.kind)
              << " representability=" << rep_name(lr.representability.kind);
    if (lr.representability.kind == RepresentabilityVerdict::Kind::NotRepresentable)
      std::cout << " (exact within the supplied models)";
    if (lr.representability.witness)
      std::cout << " witness[" << io::emit_epp_fields(*lr.representability.witness) << "]";
    std::cout << "\n";
  }
  if (report.rank_finite)
    std::cout << "rank=" << report.rank << "\n";
  else
    std::cout << "rank=infinite (no cycle bound applies)\n";
  std::cout << "nonrec_certified=" << report.nonrec_certified << "\n";
  std::cout << "nonrep_certified=" << report.nonrep_certified << "\n";
  std::cout << "bound_nonrec_ok=" << (report.bound_nonrec_ok ? "true" : "false") << "\n";
  std::cout << "bound_nonrep_ok=" << (report.bound_nonrep_ok ? "true" : "false") << "\n";
  for (const LevelReport& lr : report.levels) {
    std::cout << "level." << lr.level
              << ".recognizability=" << verdict_name(lr.recognizability.kind) << "\n";
    std::cout << "level." << lr.level
              << ".representability=" << rep_name(lr.representability.kind) << "\n";
    if (lr.model_check) {
      std::cout << "level." << lr.level << ".model="
                << (lr.model_check->pass ? "validated" : "failed") << " len="
                << lr.model_check->len << "\n";
    }
  }
  return report.internal_inconsistency ? kExitInconsistency : kExitOk;
}

int cmd_examples(const std::string& action, const std::string& name,
                 const std::vector<std::string>& params) {
  if (action == "list") {
    for (const std::string& n : fixtures::example_names()) std::cout << n << "\n";
    return kExitOk;
  }
  if (action != "show") throw InputError("examples action must be list or show");

  if (name == "fibonacci" || name == "thue-morse" || name == "ex3.4") {
    Input in = resolve_input(name, params);
    std::cout << io::emit_morphism_text(name, *in.morphism);
    return kExitOk;
  }
  if (name == "ex5.1") {
    std::cout << io::emit_sequence_text("ex5.1", fixtures::ex51());
    for (const auto& [level, model] : fixtures::ex51_models()) {
      std::cout << "\n# model for level " << level << "\n";
      std::cout << io::emit_model_text(model);
    }
    return kExitOk;
  }
  if (name == "ex7.5") {
    const int k = static_cast<int>(param_of(params, "K"));
    std::cout << io::emit_sequence_text("ex7.5", fixtures::ex75(k));
    for (const auto& [level, model] : fixtures::ex75_models(k)) {
      std::cout << "\n# model for level " << level << "\n";
      std::cout << io::emit_model_text(model);
    }
    for (int level = 1; level <= k; ++level) {
      std::cout << "\n# certificate for level " << level << "\n";
      std::cout << io::emit_certificate_text(
          io::detach(fixtures::ex75_certificate(k, level), level));
    }
    return kExitOk;
  }
  if (name == "ex7.6") {
    const int n = static_cast<int>(param_of(params, "N"));
    std::cout << io::emit_sequence_text("ex7.6", fixtures::ex76(n));
    return kExitOk;
  }
  throw InputError("unknown example: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact desubstitution, recognizability and representability audits "
               "for morphisms and S-adic sequences"};
  app.require_subcommand(1);

  std::string input, word, point_file, oracle = "full", flags_csv, action, example;
  std::vector<std::string> params, model_paths;
  int level = 0, horizon = 8, m_top = 0;
  int64_t len = 2, radius = 4;
  bool aperiodic = false, plain = false;

  auto* lang = app.add_subcommand("lang", "bounded language of a morphism or level");
  lang->add_option("input", input)->required();
  lang->add_option("params", params);
  lang->add_option("--level", level)->description("sequence level (sequences only)");
  lang->add_option("--len", len)->description("max factor length");
  lang->add_option("--horizon", horizon)->description("telescoping depth");

  auto* desub = app.add_subcommand("desub", "fragments of a window, or an audit");
  desub->add_option("input", input)->required();
  desub->add_option("params", params);
  desub->add_option("--word", word)
      ->description("target window; single-char letters run together, or quote "
                    "space-separated tokens");
  desub->add_option("--point", point_file);
  desub->add_option("--oracle", oracle)->description("full | lang");
  desub->add_option("--radius", radius)->description("audit window half-length");
  desub->add_option("--len", len)->description("oracle factor length");
  desub->add_option("--horizon", horizon)->description("oracle iteration depth");
  desub->add_flag("--aperiodic", aperiodic)
      ->description("only violations witnessed by aperiodic points");

  auto* elem = app.add_subcommand("elementary", "decide elementarity");
  elem->add_option("input", input)->required();
  elem->add_option("params", params);

  auto* chain = app.add_subcommand("chain", "alphabet descent chain");
  chain->add_option("input", input)->required();
  chain->add_option("params", params);
  chain->add_option("--flags", flags_csv)
      ->required()
      ->description("comma-separated flagged levels, each certified bad");
  chain->add_option("--m", m_top)->required()->description("top level of the chain");

  auto* audit = app.add_subcommand("audit", "per-level recognizability/representability");
  audit->add_option("input", input)->required();
  audit->add_option("params", params);
  audit->add_option("--models", model_paths)
      ->description("model files or a directory of *.model files");
  audit->add_option("--radius", radius)->description("audit window half-length");
  audit->add_option("--len", len)->default_val(0)->description("factor length (0: 2*radius)");
  audit->add_option("--horizon", horizon)->description("telescoping depth per level");
  audit->add_flag("--plain", plain)->description("count all ambiguity, not just aperiodic");

  auto* examples = app.add_subcommand("examples", "list or show the built-in fixtures");
  examples->add_option("action", action)->required();
  examples->add_option("name", example);
  examples->add_option("params", params);

  CLI11_PARSE(app, argc, argv);

  try {
    if (lang->parsed()) return cmd_lang(resolve_input(input, params), level, len, horizon);
    if (desub->parsed())
      return cmd_desub(resolve_input(input, params), word, point_file, oracle, radius,
                       aperiodic, len, horizon);
    if (elem->parsed()) return cmd_elementary(resolve_input(input, params));
    if (chain->parsed()) return cmd_chain(resolve_input(input, params), flags_csv, m_top);
    if (audit->parsed())
      return cmd_audit(resolve_input(input, params), model_paths, radius, len, horizon,
                       plain);
    if (examples->parsed()) return cmd_examples(action, example, params);
  } catch (const DecompositionNotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoDecomposition;
  } catch (const ResourceExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
