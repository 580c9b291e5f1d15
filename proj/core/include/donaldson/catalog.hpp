#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "donaldson/constructions.hpp"

namespace donaldson {

/// Maps aliases (K3, S<n>, B<g>, C<g>, dia2_<g'>_<g>) to recipes
/// (elliptic:n, bg:g, cg:g, dia2:g':g); recipes pass through unchanged.
/// Throws UnknownEntry.
std::string resolve_recipe(const std::string& name);

/// Derives the entry from a name or recipe.
CatalogEntry build_recipe(const std::string& name);

/// "bg:3" -> "bg_3.json".
std::string recipe_filename(const std::string& recipe);

/// $DONALDSON_CATALOG_DIR if set, else the directory configured at build time.
std::filesystem::path default_catalog_dir();

/// Recipes shipped in the catalog directory.
std::vector<std::string> standard_recipes();

/// Directory of canonical JSON entries, one file per recipe. Lookups always
/// re-derive the entry; a stored file must match the derivation byte for byte.
class CatalogStore {
 public:
  explicit CatalogStore(std::filesystem::path dir = default_catalog_dir()) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  /// Recipes with a stored file, sorted.
  std::vector<std::string> list() const;

  std::optional<std::string> stored_text(const std::string& recipe) const;

  /// Throws UnknownEntry for unknown names and Error when the stored file
  /// disagrees with the re-derived entry.
  CatalogEntry get(const std::string& name) const;

  /// Writes the canonical text; returns the file path.
  std::filesystem::path export_entry(const CatalogEntry& entry) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace donaldson
