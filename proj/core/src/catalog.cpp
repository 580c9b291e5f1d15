#include "donaldson/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "donaldson/error.hpp"
#include "donaldson/json_io.hpp"

#ifndef DONALDSON_DEFAULT_CATALOG_DIR
#define DONALDSON_DEFAULT_CATALOG_DIR "catalog"
#endif

namespace donaldson {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

int parse_int(const std::string& text, const std::string& recipe) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UnknownEntry("bad integer '" + text + "' in recipe " + recipe);
  }
  return value;
}

}  // namespace

std::string resolve_recipe(const std::string& name) {
  static const std::regex recipe(R"((elliptic|bg|cg):\d+|dia2:\d+:\d+)");
  static const std::regex alias(R"((S|B|C)(\d+))");
  static const std::regex dia2(R"(dia2_(\d+)_(\d+))");
  std::smatch m;
  if (std::regex_match(name, recipe)) return name;
  if (name == "K3") return "elliptic:2";
  if (std::regex_match(name, m, alias)) {
    const std::string kind = m[1] == "S" ? "elliptic" : m[1] == "B" ? "bg" : "cg";
    return kind + ":" + m[2].str();
  }
  if (std::regex_match(name, m, dia2)) return "dia2:" + m[1].str() + ":" + m[2].str();
  throw UnknownEntry("unknown catalog name or recipe '" + name + "'");
}

CatalogEntry build_recipe(const std::string& name) {
  const std::string recipe = resolve_recipe(name);
  const auto parts = split(recipe, ':');
  const std::string& kind = parts.at(0);
  if (kind == "elliptic") return elliptic_surface(parse_int(parts.at(1), recipe));
  if (kind == "bg") return build_bg(parse_int(parts.at(1), recipe));
  if (kind == "cg") return closed_form_cg(parse_int(parts.at(1), recipe));
  return build_dia2_example(parse_int(parts.at(1), recipe), parse_int(parts.at(2), recipe));
}

std::string recipe_filename(const std::string& recipe) {
  std::string f = recipe;
  std::replace(f.begin(), f.end(), ':', '_');
  return f + ".json";
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("DONALDSON_CATALOG_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return DONALDSON_DEFAULT_CATALOG_DIR;
}

std::vector<std::string> standard_recipes() {
  std::vector<std::string> out;
  for (int n = 2; n <= 4; ++n) out.push_back("elliptic:" + std::to_string(n));
  for (int g = 2; g <= 6; ++g) out.push_back("bg:" + std::to_string(g));
  for (int g = 2; g <= 6; ++g) out.push_back("cg:" + std::to_string(g));
  for (int g = 2; g <= 5; ++g)
    for (int gp = 1; gp < g; ++gp) out.push_back("dia2:" + std::to_string(gp) + ":" + std::to_string(g));
  return out;
}

std::vector<std::string> CatalogStore::list() const {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& f : std::filesystem::directory_iterator(dir_, ec)) {
    if (f.path().extension() != ".json") continue;
    std::ifstream in(f.path());
    try {
      Json j = Json::parse(in);
      out.push_back(j.at("recipe").get<std::string>());
    } catch (const std::exception&) {
      continue;  // not a catalog entry
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> CatalogStore::stored_text(const std::string& recipe) const {
  std::ifstream in(dir_ / recipe_filename(recipe), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CatalogEntry CatalogStore::get(const std::string& name) const {
  const std::string recipe = resolve_recipe(name);
  CatalogEntry entry = build_recipe(recipe);
  if (auto stored = stored_text(recipe); stored && *stored != entry_text(entry)) {
    throw Error("stored catalog entry " + (dir_ / recipe_filename(recipe)).string() +
                " differs from the re-derived recipe " + recipe);
  }
  return entry;
}

std::filesystem::path CatalogStore::export_entry(const CatalogEntry& entry) const {
  std::filesystem::create_directories(dir_);
  const auto path = dir_ / recipe_filename(resolve_recipe(entry.recipe));
  std::ofstream out(path, std::ios::binary);
  out << entry_text(entry);
  if (!out) throw Error("cannot write " + path.string());
  return path;
}

}  // namespace donaldson
