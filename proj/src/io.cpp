#include "sadic/io.hpp"

#include <fstream>
#include <sstream>

#include "sadic/fixtures.hpp"

namespace sadic::io {

namespace {

struct Line {
  int number;
  std::string text;
};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Non-empty lines with comments stripped, keeping original numbering.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({no, t});
  }
  return out;
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// "key: value" -> value, or nullopt.
std::optional<std::string> key_value(const Line& line, const std::string& key) {
  const std::string prefix = key + ":";
  if (line.text.rfind(prefix, 0) != 0) return std::nullopt;
  return trim(line.text.substr(prefix.size()));
}

// Parses the body of a morphism block (alphabet/codomain/rules) from
// lines[i..): advances i past the consumed lines. `stop` ends the block.
NamedMorphism parse_morphism_block(const std::vector<Line>& lines, size_t& i,
                                   const std::string& stop) {
  const int block_line = i < lines.size() ? lines[i].number : 0;
  std::string name;
  std::optional<std::vector<std::string>> alphabet_tokens, codomain_tokens;
  std::vector<std::pair<Line, std::string>> rules;  // lhs line, for errors

  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (!stop.empty() && line.text == stop) {
      ++i;
      break;
    }
    if (auto v = key_value(line, "name")) {
      name = *v;
      continue;
    }
    if (auto v = key_value(line, "alphabet")) {
      alphabet_tokens = split_tokens(*v);
      continue;
    }
    if (auto v = key_value(line, "codomain")) {
      codomain_tokens = split_tokens(*v);
      continue;
    }
    size_t arrow = line.text.find("->");
    if (arrow == std::string::npos)
      throw ParseError(line.number, "expected 'letter -> image' rule, got: " + line.text);
    rules.emplace_back(line, "");
  }

  if (!alphabet_tokens) throw ParseError(block_line, "missing 'alphabet:' line");
  AlphabetPtr domain;
  AlphabetPtr codomain;
  try {
    domain = make_alphabet(*alphabet_tokens);
    codomain = codomain_tokens ? make_alphabet(*codomain_tokens) : domain;
  } catch (const std::invalid_argument& e) {
    throw ParseError(block_line, e.what());
  }

  std::vector<std::optional<Word>> images(domain->size());
  for (auto& [line, unused] : rules) {
    (void)unused;
    size_t arrow = line.text.find("->");
    std::string lhs = trim(line.text.substr(0, arrow));
    std::string rhs = trim(line.text.substr(arrow + 2));
    if (!domain->contains(lhs))
      throw ParseError(line.number, "rule for letter outside the alphabet: " + lhs);
    int32_t idx = domain->index_of(lhs);
    if (images[idx]) throw ParseError(line.number, "duplicate rule for letter " + lhs);
    try {
      images[idx] = Word::parse(codomain, rhs);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
  }
  std::vector<Word> final_images;
  for (int32_t a = 0; a < domain->size(); ++a) {
    if (!images[a])
      throw ParseError(block_line, "missing rule for letter " + domain->letter(a));
    final_images.push_back(std::move(*images[a]));
  }
  return NamedMorphism{name, Morphism(domain, codomain, std::move(final_images))};
}

std::string words_line(const AlphabetPtr& a) {
  std::string out;
  for (int i = 0; i < a->size(); ++i) {
    if (i) out += ' ';
    out += a->letter(i);
  }
  return out;
}

Word parse_comma_word(const AlphabetPtr& alphabet, const std::string& value, int line_no) {
  std::vector<int32_t> syms;
  std::string tok;
  std::istringstream in(value);
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    if (!alphabet->contains(tok))
      throw ParseError(line_no, "letter not in alphabet: " + tok);
    syms.push_back(alphabet->index_of(tok));
  }
  return Word(alphabet, std::move(syms));
}

std::string emit_comma_word(const Word& w) {
  std::string out;
  for (int64_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += w.token_at(i);
  }
  return out;
}

// key=value tokens on one line.
std::map<std::string, std::string> parse_assignments(const std::string& text, int line_no) {
  std::map<std::string, std::string> out;
  for (const std::string& tok : split_tokens(text)) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected key=value, got: " + tok);
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

int64_t parse_int(const std::string& s, int line_no) {
  try {
    size_t used = 0;
    int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, "not an integer: " + s);
  }
}

MorphismSequence expand_family(const std::string& spec, int line_no) {
  const std::vector<std::string> tokens = split_tokens(spec);
  if (tokens.empty()) throw ParseError(line_no, "empty family spec");
  std::map<std::string, int64_t> params;
  for (size_t i = 1; i < tokens.size(); ++i) {
    auto kv = parse_assignments(tokens[i], line_no);
    for (auto& [k, v] : kv) params[k] = parse_int(v, line_no);
  }
  if (tokens[0] == "ex7.5") {
    if (!params.count("K")) throw ParseError(line_no, "family ex7.5 needs K=<int>");
    return fixtures::ex75(static_cast<int>(params["K"]));
  }
  if (tokens[0] == "ex7.6") {
    if (!params.count("N")) throw ParseError(line_no, "family ex7.6 needs N=<int>");
    return fixtures::ex76(static_cast<int>(params["N"]));
  }
  throw ParseError(line_no, "unknown family: " + tokens[0]);
}

}  // namespace

NamedMorphism parse_morphism_text(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError(0, "empty morphism file");
  size_t i = 0;
  NamedMorphism nm = parse_morphism_block(lines, i, "");
  return nm;
}

std::string emit_morphism_text(const std::string& name, const Morphism& m) {
  std::ostringstream os;
  if (!name.empty()) os << "name: " << name << "\n";
  os << "alphabet: " << words_line(m.domain()) << "\n";
  os << "codomain: " << words_line(m.codomain()) << "\n";
  for (int32_t a = 0; a < m.domain()->size(); ++a)
    os << m.domain()->letter(a) << " -> " << m.image(a).str() << "\n";
  return os.str();
}

NamedSequence parse_sequence_text(const std::string& text, const std::string& base_dir) {
  std::vector<Line> lines = significant_lines(text);
  std::string name;
  std::vector<std::string> preperiod_names, cycle_names;
  bool truncated = false;
  std::map<std::string, Morphism> blocks;
  std::optional<MorphismSequence> family;

  size_t i = 0;
  while (i < lines.size()) {
    const Line& line = lines[i];
    if (auto v = key_value(line, "name")) {
      name = *v;
      ++i;
    } else if (auto v = key_value(line, "preperiod")) {
      preperiod_names = split_tokens(*v);
      ++i;
    } else if (auto v = key_value(line, "cycle")) {
      cycle_names = split_tokens(*v);
      ++i;
    } else if (auto v = key_value(line, "truncated")) {
      truncated = (*v == "true");
      ++i;
    } else if (auto v = key_value(line, "family")) {
      family = expand_family(*v, line.number);
      ++i;
    } else if (auto v = key_value(line, "morphism")) {
      std::string block_name = *v;
      ++i;
      NamedMorphism nm = parse_morphism_block(lines, i, "end");
      blocks.emplace(block_name, std::move(nm.morphism));
    } else if (auto v = key_value(line, "morphism-file")) {
      std::vector<std::string> tokens = split_tokens(*v);
      if (tokens.size() != 2)
        throw ParseError(line.number, "expected 'morphism-file: NAME PATH'");
      NamedMorphism nm = parse_morphism_text(read_file(base_dir + "/" + tokens[1]));
      blocks.emplace(tokens[0], std::move(nm.morphism));
      ++i;
    } else {
      throw ParseError(line.number, "unexpected line in sequence file: " + line.text);
    }
  }

  if (family) {
    if (!cycle_names.empty() || !preperiod_names.empty())
      throw ParseError(0, "family line cannot be combined with explicit blocks");
    return NamedSequence{name, std::move(*family)};
  }
  if (cycle_names.empty()) throw ParseError(0, "sequence file needs a 'cycle:' line");
  auto lookup = [&](const std::string& n) -> const Morphism& {
    auto it = blocks.find(n);
    if (it == blocks.end()) throw ParseError(0, "morphism block not found: " + n);
    return it->second;
  };
  std::vector<Morphism> preperiod, cycle;
  for (const auto& n : preperiod_names) preperiod.push_back(lookup(n));
  for (const auto& n : cycle_names) cycle.push_back(lookup(n));
  return NamedSequence{name, MorphismSequence(std::move(preperiod), std::move(cycle),
                                              truncated)};
}

std::string emit_sequence_text(const std::string& name, const MorphismSequence& seq) {
  std::ostringstream os;
  if (!name.empty()) os << "name: " << name << "\n";
  if (seq.preperiod_size() > 0) {
    os << "preperiod:";
    for (int i = 0; i < seq.preperiod_size(); ++i) os << " m" << i;
    os << "\n";
  }
  os << "cycle:";
  for (int i = 0; i < seq.cycle_size(); ++i) os << " m" << (seq.preperiod_size() + i);
  os << "\n";
  if (seq.truncated_family()) os << "truncated: true\n";
  for (int i = 0; i < seq.distinct_levels(); ++i) {
    os << "\nmorphism: m" << i << "\n";
    const Morphism& m = seq.morphism_at(i);
    os << "alphabet: " << words_line(m.domain()) << "\n";
    os << "codomain: " << words_line(m.codomain()) << "\n";
    for (int32_t a = 0; a < m.domain()->size(); ++a)
      os << m.domain()->letter(a) << " -> " << m.image(a).str() << "\n";
    os << "end\n";
  }
  return os.str();
}

Epp parse_epp_fields(const AlphabetPtr& alphabet, const std::string& fields, int line_no) {
  auto kv = parse_assignments(fields, line_no);
  for (const char* key : {"left", "right", "origin"})
    if (!kv.count(key)) throw ParseError(line_no, std::string("missing field: ") + key);
  Word left = parse_comma_word(alphabet, kv["left"], line_no);
  Word center = parse_comma_word(alphabet, kv.count("center") ? kv["center"] : "", line_no);
  Word right = parse_comma_word(alphabet, kv["right"], line_no);
  try {
    return Epp(std::move(left), std::move(center), std::move(right),
               parse_int(kv["origin"], line_no));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string emit_epp_fields(const Epp& p) {
  std::ostringstream os;
  os << "left=" << emit_comma_word(p.left) << " center=" << emit_comma_word(p.center)
     << " right=" << emit_comma_word(p.right) << " origin=" << p.origin;
  return os.str();
}

CertificateData parse_certificate_text(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty() || lines[0].text != "certificate")
    throw ParseError(lines.empty() ? 0 : lines[0].number,
                     "certificate file must start with 'certificate'");
  CertificateData data;
  std::optional<Epp> image;
  std::vector<std::pair<Epp, int64_t>> reps;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (auto v = key_value(line, "level")) {
      data.level = static_cast<int>(parse_int(*v, line.number));
    } else if (auto v = key_value(line, "alphabet")) {
      data.domain = make_alphabet(split_tokens(*v));
    } else if (auto v = key_value(line, "image-alphabet")) {
      data.codomain = make_alphabet(split_tokens(*v));
    } else if (auto v = key_value(line, "image")) {
      if (!data.codomain) throw ParseError(line.number, "image before image-alphabet");
      image = parse_epp_fields(data.codomain, *v, line.number);
    } else if (auto v = key_value(line, "rep")) {
      if (!data.domain) throw ParseError(line.number, "rep before alphabet");
      auto kv = parse_assignments(*v, line.number);
      if (!kv.count("k")) throw ParseError(line.number, "rep needs k=<int>");
      int64_t k = parse_int(kv["k"], line.number);
      std::string fields;
      for (auto& [key, val] : kv)
        if (key != "k") fields += key + "=" + val + " ";
      reps.emplace_back(parse_epp_fields(data.domain, fields, line.number), k);
    } else {
      throw ParseError(line.number, "unexpected line in certificate file: " + line.text);
    }
  }
  if (!image || reps.size() != 2)
    throw ParseError(0, "certificate file needs one image and exactly two reps");
  data.image = std::move(*image);
  data.r1 = CenteredRep{std::move(reps[0].first), reps[0].second};
  data.r2 = CenteredRep{std::move(reps[1].first), reps[1].second};
  return data;
}

std::string emit_certificate_text(const CertificateData& c) {
  std::ostringstream os;
  os << "certificate\n";
  os << "level: " << c.level << "\n";
  os << "alphabet: " << words_line(c.domain) << "\n";
  os << "image-alphabet: " << words_line(c.codomain) << "\n";
  os << "image: " << emit_epp_fields(c.image) << "\n";
  os << "rep: " << emit_epp_fields(c.r1.x) << " k=" << c.r1.k << "\n";
  os << "rep: " << emit_epp_fields(c.r2.x) << " k=" << c.r2.k << "\n";
  return os.str();
}

NonRecognizabilityCertificate attach(const CertificateData& data, const Morphism& sigma) {
  if (!same_alphabet(data.domain, sigma.domain()) ||
      !same_alphabet(data.codomain, sigma.codomain()))
    throw std::invalid_argument("certificate alphabets do not match the morphism");
  return NonRecognizabilityCertificate{sigma, data.r1, data.r2, data.image};
}

CertificateData detach(const NonRecognizabilityCertificate& cert, int level) {
  return CertificateData{level,      cert.sigma.domain(), cert.sigma.codomain(),
                         cert.r1,    cert.r2,             cert.image};
}

ShiftModel parse_model_text(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty() || lines[0].text != "model")
    throw ParseError(lines.empty() ? 0 : lines[0].number,
                     "model file must start with 'model'");
  ShiftModel model;
  AlphabetPtr alphabet;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (auto v = key_value(line, "level")) {
      model.level = static_cast<int>(parse_int(*v, line.number));
    } else if (auto v = key_value(line, "alphabet")) {
      alphabet = make_alphabet(split_tokens(*v));
    } else if (auto v = key_value(line, "generator")) {
      if (!alphabet) throw ParseError(line.number, "generator before alphabet");
      model.generators.push_back(parse_epp_fields(alphabet, *v, line.number));
    } else {
      throw ParseError(line.number, "unexpected line in model file: " + line.text);
    }
  }
  if (model.generators.empty()) throw ParseError(0, "model file has no generators");
  return model;
}

std::string emit_model_text(const ShiftModel& model) {
  std::ostringstream os;
  os << "model\n";
  os << "level: " << model.level << "\n";
  if (!model.generators.empty())
    os << "alphabet: " << words_line(model.generators.front().alphabet()) << "\n";
  for (const Epp& g : model.generators)
    os << "generator: " << emit_epp_fields(g) << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_like_sequence(const std::string& text) {
  for (const Line& line : significant_lines(text)) {
    if (line.text.rfind("cycle:", 0) == 0 || line.text.rfind("preperiod:", 0) == 0 ||
        line.text.rfind("family:", 0) == 0)
      return true;
  }
  return false;
}

}  // namespace sadic::io
