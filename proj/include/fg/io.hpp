#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fg/group.hpp"

namespace fg {

// Group file grammar: line 1 "degree <N>"; each later nonempty line one
// permutation in cycle notation; lines starting '%' ignored.
Group read_group_file(const std::filesystem::path& path);
void write_group_file(const std::filesystem::path& path, const Group& G);

// Builtin registry: C<n>, S<n>, A<n>, D8, Q8, 2_4_A7, L3_4_2_2, PSL3_4, and
// products joined with 'x' (e.g. A5xA5xA5). The a7_cache path, when given,
// backs the GL(4,2) generator search for 2_4_A7.
bool is_builtin_name(const std::string& name);
std::optional<Group> builtin_group(const std::string& name,
                                   const std::optional<std::filesystem::path>& a7_cache = {});

// Content-addressed key: hash of degree plus the canonical generator list.
std::string canonical_group_key(const Group& G);

// String-payload result cache with atomic writes (temp file then rename).
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& payload) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

// The command-line surface. Returns the process exit code: 0 success, 2 for
// a "not equal / obstructed" verdict from a comparator command, 1 on error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fg
