#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "exactrank/errors.hpp"
#include "exactrank/instance.hpp"

namespace exactrank {

namespace {

// %.17g round-trips every double; the writer is hand-rolled because the
// serialized bytes are part of the determinism contract.
std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_json_string(std::ostream& out, const std::string& s) {
  out << '"';
  for (char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\t': out << "\\t"; break;
      case '\r': out << "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out << buf;
        } else {
          out << c;
        }
    }
  }
  out << '"';
}

}  // namespace

void write_instance_json(std::ostream& out, const instance& inst) {
  const std::uint32_t n = inst.n();
  out << "{\n";
  out << "  \"n\": " << n << ",\n";
  out << "  \"kind\": " << (inst.kind() == instance_kind::matrix ? "\"matrix\"" : "\"mnl\"")
      << ",\n";
  out << "  \"true_ranking\": ";
  if (inst.has_true_ranking()) {
    out << '[';
    for (std::uint32_t k = 0; k < n; ++k) {
      if (k) out << ", ";
      out << inst.true_ranking()[k];
    }
    out << ']';
  } else {
    out << "null";
  }
  out << ",\n";
  out << "  \"pairwise_probs\": ";
  if (inst.kind() == instance_kind::matrix) {
    out << "[\n";
    for (std::uint32_t i = 0; i < n; ++i) {
      out << "    [";
      for (std::uint32_t j = 0; j < n; ++j) {
        if (j) out << ", ";
        out << fmt17(inst.matrix()[static_cast<std::size_t>(i) * n + j]);
      }
      out << (i + 1 < n ? "],\n" : "]\n");
    }
    out << "  ]";
  } else {
    out << "null";
  }
  out << ",\n";
  out << "  \"scores\": ";
  if (inst.kind() == instance_kind::mnl) {
    out << '[';
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i) out << ", ";
      out << fmt17(inst.scores()[i]);
    }
    out << ']';
  } else {
    out << "null";
  }
  out << ",\n";
  out << "  \"seed_provenance\": ";
  write_json_string(out, inst.seed_provenance());
  out << "\n}\n";
}

std::string instance_to_json(const instance& inst) {
  std::ostringstream oss;
  write_instance_json(oss, inst);
  return oss.str();
}

instance instance_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_instance_error(std::string("instance JSON parse error: ") + e.what());
  }

  try {
    const std::uint32_t n = doc.at("n").get<std::uint32_t>();
    const std::string kind = doc.at("kind").get<std::string>();

    std::optional<std::vector<item_id>> ranking;
    if (doc.contains("true_ranking") && !doc["true_ranking"].is_null())
      ranking = doc["true_ranking"].get<std::vector<item_id>>();

    std::string provenance;
    if (doc.contains("seed_provenance") && doc["seed_provenance"].is_string())
      provenance = doc["seed_provenance"].get<std::string>();

    if (kind == "matrix") {
      auto rows = doc.at("pairwise_probs").get<std::vector<std::vector<double>>>();
      if (rows.size() != n) throw invalid_instance_error("pairwise_probs must have n rows");
      std::vector<double> flat;
      flat.reserve(static_cast<std::size_t>(n) * n);
      for (const auto& row : rows) {
        if (row.size() != n) throw invalid_instance_error("pairwise_probs rows must have n entries");
        flat.insert(flat.end(), row.begin(), row.end());
      }
      return instance::from_matrix(n, std::move(flat), std::move(ranking),
                                   std::move(provenance));
    }
    if (kind == "mnl") {
      auto scores = doc.at("scores").get<std::vector<double>>();
      if (scores.size() != n) throw invalid_instance_error("scores must have n entries");
      return instance::from_scores(std::move(scores), std::move(ranking),
                                   std::move(provenance));
    }
    throw invalid_instance_error("kind must be \"matrix\" or \"mnl\"");
  } catch (const nlohmann::json::exception& e) {
    throw invalid_instance_error(std::string("instance JSON schema error: ") + e.what());
  }
}

instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw error("cannot read instance file: " + path);
  return instance_from_json(buf.str());
}

}  // namespace exactrank
