#pragma once

// JSON-lines and TSV output of characters, plus the small text formats the
// command line accepts ("2,1" for partitions, "lo:hi" for ranges).

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "detcoh/character.hpp"
#include "detcoh/ideal_lattice.hpp"
#include "detcoh/weights.hpp"

namespace detcoh {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class OutputFormat { Json, Tsv };

/// A plain integer when it fits in 64 bits, otherwise its decimal string.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json to_json(const Partition& x);
Json to_json(const DominantWeight& lambda);
Json to_json(const PartitionIdeal& ideal);
Json to_json(const TruncationBox& box);

Partition partition_from_json(const Json& j, int length);
DominantWeight weight_from_json(const Json& j);
PartitionIdeal ideal_from_json(const Json& j);

/// "3,-1,0" -> {3,-1,0}. Throws std::invalid_argument naming the 1-based
/// position of the first malformed entry. The empty string gives {}.
std::vector<int> parse_int_list(std::string_view text);
/// Partition of length n from "2,1"; errors carry the offending position.
Partition parse_partition(std::string_view text, int n);
/// "lo:hi" with lo <= hi.
ZWindow parse_range(std::string_view text);

/// First record of every output stream.
struct OutputHeader {
  std::string command;
  Json params = Json::object();
  std::optional<TruncationBox> box;
  bool transposed = false;
};

/// One output term, with optional provenance fields appended after `mult`/`dim`.
struct TermRecord {
  TermKey key;
  BigInt mult;
  Json extra = Json::object();
};

void write_header(std::ostream& os, const OutputHeader& header, OutputFormat format);

/// Writes the column line (TSV only) and one record per entry, in the given
/// order. `with_dims` appends dim = mult * dim S_alpha F * dim S_beta G.
void write_terms(std::ostream& os, const std::vector<TermRecord>& records, OutputFormat format, bool with_dims);

/// The character's terms in (wdeg, zdeg, alpha, beta) order.
void write_character(std::ostream& os, const EquivariantCharacter& c, OutputFormat format, bool with_dims);

/// Writes a free-form record (used for `reg`, `gauss`, `bott-step`, `verify`).
void write_record(std::ostream& os, const Json& record, OutputFormat format);

/// Parses a JSON-lines term record back into a key and multiplicity.
TermRecord term_from_json(const Json& j);

}  // namespace detcoh
