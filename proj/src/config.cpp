#include "qdga/config.hpp"

#include "qdga/parser.hpp"

#include <algorithm>
#include <fstream>

namespace qdga {

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"commutative", "scalar-twist", "constant"};
  return names;
}

namespace {

template <class T>
T get_or(const nlohmann::json& obj, const char* key, T fallback) {
  if (!obj.contains(key) || obj.at(key).is_null()) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

LetterOrder parse_letter_order(const std::string& s) {
  if (s == "ascending") return LetterOrder::Ascending;
  if (s == "descending") return LetterOrder::Descending;
  throw ConfigError("letter_order must be 'ascending' or 'descending', got '" + s + "'");
}

}  // namespace

SessionConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  SessionConfig cfg;
  const long n = get_or<long>(doc, "n", 2);
  if (n < 1) throw ConfigError("n must be positive");
  cfg.n = static_cast<std::size_t>(n);
  cfg.preset = get_or<std::string>(doc, "preset", "");
  cfg.twist = get_or<std::string>(doc, "twist", "q");
  if (doc.contains("xi_entries")) {
    try {
      cfg.xi_entries = doc.at("xi_entries").get<decltype(cfg.xi_entries)>();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("xi_entries must be an n x n x n array of strings: ") + e.what());
    }
  }
  if (doc.contains("bounds")) {
    const auto& b = doc.at("bounds");
    cfg.bounds.grade_bound = get_or<int>(b, "grade_bound", -1);
    cfg.bounds.word_bound = get_or<int>(b, "word_bound", -1);
    cfg.bounds.size_cap = get_or<std::size_t>(b, "size_cap", cfg.bounds.size_cap);
    cfg.max_steps = get_or<std::size_t>(b, "max_steps", cfg.max_steps);
  }
  try {
    cfg.format = parse_format(get_or<std::string>(doc, "format", "text"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  cfg.seed = get_or<std::uint64_t>(doc, "seed", cfg.seed);
  cfg.letter_order = parse_letter_order(get_or<std::string>(doc, "letter_order", "ascending"));

  if (cfg.preset.empty() && cfg.xi_entries.empty())
    throw ConfigError("config needs either 'preset' or 'xi_entries'");
  if (!cfg.preset.empty() &&
      std::find(preset_names().begin(), preset_names().end(), cfg.preset) == preset_names().end())
    throw ConfigError("unknown preset '" + cfg.preset + "'");
  return cfg;
}

SessionConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  return config_from_json(doc);
}

SessionConfig preset_config(const std::string& preset, std::size_t n) {
  return config_from_json({{"n", n}, {"preset", preset}});
}

nlohmann::json to_json(const SessionConfig& cfg) {
  nlohmann::json j{{"n", cfg.n},
                   {"bounds",
                    {{"grade_bound", cfg.bounds.grade_bound},
                     {"word_bound", cfg.bounds.word_bound},
                     {"max_steps", cfg.max_steps},
                     {"size_cap", cfg.bounds.size_cap}}},
                   {"seed", cfg.seed},
                   {"letter_order",
                    cfg.letter_order == LetterOrder::Ascending ? "ascending" : "descending"}};
  if (!cfg.preset.empty()) {
    j["preset"] = cfg.preset;
    if (cfg.preset == "scalar-twist") j["twist"] = cfg.twist;
  } else {
    j["xi_entries"] = cfg.xi_entries;
  }
  return j;
}

std::shared_ptr<const XiHomomorphism> build_xi(const SessionConfig& cfg) {
  if (cfg.preset == "commutative") return std::make_shared<XiHomomorphism>(XiHomomorphism::commutative(cfg.n));
  if (cfg.preset == "scalar-twist") {
    Cyc c;
    try {
      c = Cyc::parse(cfg.twist);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("twist: ") + e.what());
    }
    return std::make_shared<XiHomomorphism>(XiHomomorphism::scalar_twist(cfg.n, c));
  }
  if (cfg.preset == "constant") return std::make_shared<XiHomomorphism>(XiHomomorphism::constant(cfg.n));
  if (!cfg.preset.empty()) throw ConfigError("unknown preset '" + cfg.preset + "'");

  const auto n = cfg.n;
  if (cfg.xi_entries.size() != n) throw ConfigError("xi_entries needs n = " + std::to_string(n) + " matrices");
  std::vector<XiMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (cfg.xi_entries[i].size() != n) throw ConfigError("xi_entries[" + std::to_string(i) + "] needs n rows");
    XiMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (cfg.xi_entries[i][k].size() != n)
        throw ConfigError("xi_entries[" + std::to_string(i) + "][" + std::to_string(k) + "] needs n entries");
      for (std::size_t j = 0; j < n; ++j) {
        try {
          m.at(k, j) = parse_polynomial(cfg.xi_entries[i][k][j], n);
        } catch (const ParseError& e) {
          throw ConfigError("xi_entries[" + std::to_string(i) + "][" + std::to_string(k) + "][" +
                            std::to_string(j) + "]: " + e.what());
        }
      }
    }
    gens.push_back(std::move(m));
  }
  return std::make_shared<XiHomomorphism>(n, std::move(gens));
}

Session make_session(const SessionConfig& cfg) {
  Session s;
  s.config = cfg;
  s.xi = build_xi(cfg);
  s.calculus = std::make_shared<Calculus>(s.xi);
  s.ideal = std::make_shared<Ideal>(s.calculus);
  return s;
}

}  // namespace qdga
