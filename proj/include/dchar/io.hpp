#pragma once

// Plain-text formats for complexes, cochains, chains, group actions, covers,
// gauge fields and DC triples, plus the line-oriented report printer.

#include "dchar/classify.hpp"
#include "dchar/descent.hpp"
#include "dchar/nerve.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dchar {

/// Malformed input; the message starts with "<source>:<line>: ".
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& source, std::size_t line, const std::string& msg);
  InputError(const std::string& source, const std::string& msg);
};

/// 64-bit FNV-1a digest as 16 lowercase hex digits.
std::string fnv1a64(std::string_view data);
/// Whole file contents; throws InputError if unreadable.
std::string read_file(const std::string& path);

/// `p/q` or an integer.
std::optional<Rat> parse_rational(const std::string& token);

/// `simplex <id>` / `simplex <id> : <face> ...` lines; '#' starts a comment.
DeltaComplex parse_complex(const std::string& text, const std::string& source);
std::string format_complex(const DeltaComplex& x);

/// `degree <n> ring <Z|Q|QZ>` then `<id> = <rational>` lines.
Cochain parse_cochain(const std::string& text, const std::string& source, ComplexPtr x);
std::string format_cochain(const Cochain& c);

/// `chain <n>` then `<id> = <integer>` lines.
Chain parse_chain(const std::string& text, const std::string& source, const DeltaComplex& x);

/// `group <n>`, `mul <i> <j> = <k>`, `act <g> <id> = <id>`. Products with the
/// identity may be omitted; every other product must be listed.
FinGroupAction parse_action(const std::string& text, const std::string& source, ComplexPtr x);

struct CoverFile {
  Cover cover;
  std::optional<PartitionOfUnity> partition;  // present if any weight line
};
/// `element <name> : <id> ...`, `tau <id> = <name>`, `weight <vertex> <name> = <r>`.
CoverFile parse_cover(const std::string& text, const std::string& source, ComplexPtr x);

/// The complex path named on a `gauge <path>` header or a leading
/// `complex <path>` line, if any.
std::optional<std::string> referenced_complex(const std::string& text);

struct GaugeFile {
  GaugeField field;
  std::vector<std::pair<std::string, Rat>> descent;  // Γ₁ vertex id, value
};
/// `gauge [path]` header, `<edge> = <rational in [0,1)>` lines, then an
/// optional `descent` block of `<Γ₁ vertex id> = <rational>` lines.
GaugeFile parse_gauge(const std::string& text, const std::string& source, ComplexPtr x);
/// Pairs the descent block with a nerve; throws InputError on unknown ids.
EquivariantGaugeField resolve_descent(const GaugeFile& g, const Nerve& nerve,
                                      const std::string& source);

/// Optional `complex <path>` line, then blocks `c:`, `h:`, `omega:` each
/// followed by a cochain in the cochain format. Missing blocks are zero.
DCTriple parse_dc_triple(const std::string& text, const std::string& source, ComplexPtr x, int s);

/// Canonical rendering of a vector of rationals: "(a, b, c)".
std::string format_vector(const RatVec& v);

/// Ordered `key = value` lines.
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
  void add_input(const std::string& role, const std::string& path, const std::string& contents);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace dchar
