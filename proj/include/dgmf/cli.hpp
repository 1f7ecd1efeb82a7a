#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dgmf/linkage.hpp"

namespace dgmf {

// A bundle file: ring, K, f, the resolution M and, unless the file carries
// differentials only, its multiplication.
struct BundleFile {
  LinkageInput input;
  bool has_multiplication = true;
};

BundleFile load_bundle(const std::filesystem::path& path);
BundleFile parse_bundle(const std::string& text);
std::string emit_bundle(const BundleFile& b);

std::string emit_matrix(const PolyMatrix& m);
PolyMatrix parse_matrix(const std::string& text, const RingPtr& ring);

// Writes to a sibling temporary file, then renames over the target.
void write_atomic(const std::filesystem::path& path, const std::string& content);

struct BuildFlags {
  bool mf1 = false;
  bool mf2 = false;
  std::optional<std::string> resolution;  // "N" or "acute"
  std::size_t check_len = 10;
  bool solve_mult = false;
  bool kernel_checks = false;
  std::filesystem::path out = "out";
};

// Exit codes: 0 ok, 1 validation or identity failure, 2 input error,
// 3 unmet precondition such as r not a unit.
int cmd_validate(const std::filesystem::path& bundle, const std::filesystem::path& out,
                 bool check_regular);
int cmd_build(const std::filesystem::path& bundle, const BuildFlags& flags);
int cmd_build_input(const BundleFile& bundle, const BuildFlags& flags);
int cmd_demo(const std::string& name, const BuildFlags& flags);
// Writes an example bundle, optionally stripped to its differentials.
int cmd_export(const std::string& name, const std::filesystem::path& path, bool differentials_only);

}  // namespace dgmf
