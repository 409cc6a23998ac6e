#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mdiag/cohom_model.hpp"

namespace mdiag::models {

/// Bundled models: p1, elliptic, genus2, surface-b2-2 (P1 x P1),
/// surface-b2-3 (P2 blown up twice), surface-b2-4 (three times), k3,
/// abelian-surface, and the K = 0 lattices surface-b2-2-k0, surface-b2-3-k0.
std::vector<std::string> builtin_names();

/// One of builtin_names(), or "involution:<n>:<plus>:<minus>".
CohomModel::Data builtin_data(const std::string& name);
CohomPtr builtin(const std::string& name);

/// Involution acting by +1 on a `plus`-dimensional and by -1 on a
/// `minus`-dimensional block of H^n (n in {1, 2}); +1 elsewhere. For n = 1
/// both dimensions must be even (symplectic blocks).
CohomModel::Data involution_data(int n, int plus, int minus);
CohomPtr involution_model(int n, int plus, int minus);

/// JSON model files (schema in docs/models.md).
CohomModel::Data data_from_json_text(std::string_view text);
std::string to_json_text(const CohomModel::Data& data);
CohomPtr load(const std::filesystem::path& path);

/// Directory holding the bundled JSON files.
std::filesystem::path data_dir();

/// Path to an existing file, otherwise a builtin name.
CohomPtr resolve(const std::string& file_or_name);

}  // namespace mdiag::models
