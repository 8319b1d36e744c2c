#include "fg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fg/constructions.hpp"
#include "fg/errors.hpp"

namespace fg {

Group read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::string line;
  int lineno = 0;
  int degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    ++lineno;
    // strip trailing carriage return and surrounding whitespace
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
    line = line.substr(start);
    if (line.empty() || line[0] == '%') continue;
    if (degree < 0) {
      std::istringstream hdr(line);
      std::string kw;
      hdr >> kw >> degree;
      if (kw != "degree" || hdr.fail() || degree < 1)
        throw ParseError("expected 'degree <N>'", lineno);
      continue;
    }
    try {
      gens.push_back(parse_cycles(line, degree));
    } catch (const PointOutOfRange&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (degree < 0) throw ParseError("missing 'degree <N>' header", lineno);
  if (gens.empty()) throw EmptyGeneratorList();
  return Group(degree, std::move(gens));
}

void write_group_file(const std::filesystem::path& path, const Group& G) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << "degree " << G.degree() << "\n";
  if (G.generators().empty()) {
    out << "()\n";
  } else {
    for (const Perm& g : G.generators()) out << format_cycles(g) << "\n";
  }
}

namespace {

std::optional<Group> builtin_factor(const std::string& name,
                                    const std::optional<std::filesystem::path>& a7_cache) {
  if (name == "D8") return dihedral(4);
  if (name == "Q8") return quaternion8();
  if (name == "PSL3_4") return psl3_4();
  if (name == "L3_4_2_2") return identify_2_2().second;
  if (name == "2_4_A7") return affine_2_4_a7(a7_cache);
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S' || name[0] == 'A')) {
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    const int n = std::stoi(name.substr(1));
    if (name[0] == 'C') return cyclic(n);
    if (name[0] == 'S') return symmetric(n);
    return alternating(n);
  }
  return std::nullopt;
}

std::vector<std::string> split_product(const std::string& name) {
  // 'x' joins factors; none of the registry names contain an 'x'.
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::optional<Group> builtin_group(const std::string& name,
                                   const std::optional<std::filesystem::path>& a7_cache) {
  std::optional<Group> acc;
  for (const std::string& part : split_product(name)) {
    std::optional<Group> factor = builtin_factor(part, a7_cache);
    if (!factor) return std::nullopt;
    acc = acc ? std::optional<Group>(direct_product(*acc, *factor)) : factor;
  }
  return acc;
}

bool is_builtin_name(const std::string& name) {
  for (const std::string& part : split_product(name)) {
    if (part == "D8" || part == "Q8" || part == "PSL3_4" || part == "L3_4_2_2" || part == "2_4_A7")
      continue;
    if (part.size() >= 2 && (part[0] == 'C' || part[0] == 'S' || part[0] == 'A')) {
      bool digits = true;
      for (std::size_t i = 1; i < part.size(); ++i)
        digits = digits && std::isdigit(static_cast<unsigned char>(part[i]));
      if (digits) continue;
    }
    return false;
  }
  return true;
}

std::string canonical_group_key(const Group& G) {
  std::string data = std::to_string(G.degree()) + ";";
  for (const Perm& g : G.generators()) data += format_cycles(g) + ";";
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : data) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  const std::filesystem::path p = dir_ / (key + ".json");
  std::ifstream in(p);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ResultCache::put(const std::string& key, const std::string& payload) const {
  std::filesystem::create_directories(dir_);
  const std::filesystem::path p = dir_ / (key + ".json");
  const std::filesystem::path tmp = dir_ / (key + ".json.tmp");
  {
    std::ofstream out(tmp);
    out << payload;
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace fg
