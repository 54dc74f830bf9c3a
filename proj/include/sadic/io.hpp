#pragma once

#include <string>

#include "sadic/elementary.hpp"
#include "sadic/model.hpp"

namespace sadic::io {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// ---- morphism files -------------------------------------------------------
// name: fibonacci            (optional)
// alphabet: a b              (domain)
// codomain: a b              (optional; defaults to the domain)
// a -> a b                   (one rule per domain letter; empty rhs = epsilon)

struct NamedMorphism {
  std::string name;
  Morphism morphism;
};

NamedMorphism parse_morphism_text(const std::string& text);
std::string emit_morphism_text(const std::string& name, const Morphism& m);

// ---- sequence files -------------------------------------------------------
// name: ex5.1
// preperiod: s0 s1           (optional; space-separated morphism names)
// cycle: s2
// truncated: true            (optional; marks a truncated family)
// followed by one "morphism: NAME" block per referenced name, each in the
// morphism file syntax, terminated by "end". A block may instead be loaded
// with "morphism-file: NAME PATH" (PATH relative to base_dir).
// Alternatively a single "family: ex7.5 K=2" line expands a built-in family.

struct NamedSequence {
  std::string name;
  MorphismSequence sequence;
};

NamedSequence parse_sequence_text(const std::string& text, const std::string& base_dir = ".");
std::string emit_sequence_text(const std::string& name, const MorphismSequence& seq);

// ---- points, certificates, models -----------------------------------------
// Points are written as  left=u center=w right=v origin=t  with words as
// comma-joined letter tokens (empty value = epsilon).

Epp parse_epp_fields(const AlphabetPtr& alphabet, const std::string& fields, int line_no);
std::string emit_epp_fields(const Epp& p);

// certificate
// level: 1
// alphabet: a_0 a_1 a_2      (alphabet of the represented points)
// image-alphabet: a_0 a_1    (alphabet of the image point)
// image: left=... center=... right=... origin=...
// rep: left=... center=... right=... origin=... k=...
// rep: ...
struct CertificateData {
  int level = 0;
  AlphabetPtr domain;
  AlphabetPtr codomain;
  CenteredRep r1;
  CenteredRep r2;
  Epp image;
};

CertificateData parse_certificate_text(const std::string& text);
std::string emit_certificate_text(const CertificateData& c);

NonRecognizabilityCertificate attach(const CertificateData& data, const Morphism& sigma);
CertificateData detach(const NonRecognizabilityCertificate& cert, int level);

// model
// level: 1
// alphabet: a b
// generator: left=... center=... right=... origin=...
ShiftModel parse_model_text(const std::string& text);
std::string emit_model_text(const ShiftModel& model);

std::string read_file(const std::string& path);

bool looks_like_sequence(const std::string& text);

}  // namespace sadic::io
