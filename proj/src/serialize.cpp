#include "detcoh/serialize.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace detcoh {

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json to_json(const Partition& x) { return Json(std::vector<int>(x.parts().begin(), x.parts().end())); }

Json to_json(const DominantWeight& lambda) { return Json(lambda.vec()); }

Json to_json(const PartitionIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return Json{{"generators", gens}, {"m", ideal.dims().m}, {"n", ideal.dims().n}};
}

Json to_json(const TruncationBox& box) {
  Json out{{"lo", box.lambda_low}, {"hi", box.lambda_high}};
  if (box.z_window) out["zwin"] = Json::array({box.z_window->lo, box.z_window->hi});
  return out;
}

Partition partition_from_json(const Json& j, int length) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  return normalize(j.get<std::vector<int>>(), length);
}

DominantWeight weight_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight must be a JSON array");
  return DominantWeight(j.get<std::vector<int>>());
}

PartitionIdeal ideal_from_json(const Json& j) {
  const auto dims = Dimensions::make(j.at("m").get<int>(), j.at("n").get<int>());
  std::vector<Partition> gens;
  for (const auto& g : j.at("generators")) gens.push_back(partition_from_json(g, dims.n));
  return ideal_from_generators(gens, dims);
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (int position = 1;; ++position) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed entry '" + std::string(token) + "' at position " +
                                  std::to_string(position));
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Partition parse_partition(std::string_view text, int n) { return normalize(parse_int_list(text), n); }

ZWindow parse_range(std::string_view text) {
  const auto colon = text.find(':', text.empty() ? 0 : 1);
  if (colon == std::string_view::npos) throw std::invalid_argument("range must look like lo:hi");
  auto parse_one = [](std::string_view token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed range bound '" + std::string(token) + "'");
    return value;
  };
  const ZWindow w{parse_one(text.substr(0, colon)), parse_one(text.substr(colon + 1))};
  if (w.lo > w.hi) throw std::invalid_argument("range lo:hi needs lo <= hi");
  return w;
}

namespace {

std::string tsv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ',';
      out += tsv_cell(e);
    }
    return out;
  }
  return v.dump();
}

void write_tsv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
  os << '\n';
}

Json term_json(const TermRecord& r, bool with_dims) {
  Json out{{"alpha", to_json(r.key.alpha)},
           {"beta", to_json(r.key.beta)},
           {"zdeg", r.key.zdeg},
           {"wdeg", r.key.wdeg},
           {"mult", bigint_to_json(r.mult)}};
  if (with_dims)
    out["dim"] = bigint_to_json(r.mult * weyl_dimension(r.key.alpha) * weyl_dimension(r.key.beta));
  for (const auto& [k, v] : r.extra.items()) out[k] = v;
  return out;
}

}  // namespace

void write_header(std::ostream& os, const OutputHeader& header, OutputFormat format) {
  Json out{{"record", "header"}, {"command", header.command}, {"params", header.params}};
  if (header.box) out["box"] = to_json(*header.box);
  out["transposed"] = header.transposed;
  out["version"] = std::string(kToolVersion);
  if (format == OutputFormat::Json)
    os << out.dump() << '\n';
  else
    os << "# " << out.dump() << '\n';
}

void write_terms(std::ostream& os, const std::vector<TermRecord>& records, OutputFormat format, bool with_dims) {
  if (format == OutputFormat::Json) {
    for (const auto& r : records) os << term_json(r, with_dims).dump() << '\n';
    return;
  }
  std::vector<std::string> columns{"alpha", "beta", "zdeg", "wdeg", "mult"};
  if (with_dims) columns.push_back("dim");
  if (!records.empty())
    for (const auto& [k, v] : records.front().extra.items()) columns.push_back(k);
  write_tsv_row(os, columns);
  for (const auto& r : records) {
    const Json j = term_json(r, with_dims);
    std::vector<std::string> cells;
    for (const auto& c : columns) cells.push_back(j.contains(c) ? tsv_cell(j[c]) : "");
    write_tsv_row(os, cells);
  }
}

void write_character(std::ostream& os, const EquivariantCharacter& c, OutputFormat format, bool with_dims) {
  std::vector<TermRecord> records;
  records.reserve(c.size());
  for (const auto& [key, mult] : c.terms()) records.push_back({key, mult, Json::object()});
  write_terms(os, records, format, with_dims);
}

void write_record(std::ostream& os, const Json& record, OutputFormat format) {
  if (format == OutputFormat::Json) {
    os << record.dump() << '\n';
    return;
  }
  std::vector<std::string> keys, values;
  for (const auto& [k, v] : record.items()) {
    keys.push_back(k);
    values.push_back(tsv_cell(v));
  }
  write_tsv_row(os, keys);
  write_tsv_row(os, values);
}

TermRecord term_from_json(const Json& j) {
  TermRecord r;
  r.key.alpha = weight_from_json(j.at("alpha"));
  r.key.beta = weight_from_json(j.at("beta"));
  r.key.zdeg = j.at("zdeg").get<long long>();
  r.key.wdeg = j.at("wdeg").get<int>();
  r.mult = bigint_from_json(j.at("mult"));
  return r;
}

}  // namespace detcoh
