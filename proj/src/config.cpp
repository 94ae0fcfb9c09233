#include "gcrit/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <filesystem>

#include "gcrit/error.hpp"

namespace gcrit {

namespace pt = boost::property_tree;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto end = comma == std::string_view::npos ? list.size() : comma;
    auto item = trim(list.substr(start, end - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int parse_int(const std::string& s, const char* field) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError(std::string(field) + ": '" + s + "' is not an integer", field);
  }
  return v;
}

double parse_double(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(field + ": '" + s + "' is not a number", field);
}

// Looks the key up in `section` first, then at top level.
std::optional<std::string> lookup(const pt::ptree& tree, const std::string& section, const std::string& key) {
  if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(section + "." + key, '.'))) return trim(*v);
  if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(key, '.'))) {
    if (tree.get_child(key).empty()) return trim(*v);
  }
  return std::nullopt;
}

}  // namespace

Potential PotentialSpec::build() const {
  switch (kind) {
    case PotentialKind::SquareWell: return Potential::square_well(R);
    case PotentialKind::Exponential: return Potential::exponential(R);
    case PotentialKind::Yukawa: return Potential::yukawa(R);
    case PotentialKind::Stis: return Potential::stis(R, alpha);
    case PotentialKind::Shell: return Potential::shell(R, width);
    case PotentialKind::Tabulated:
      if (!grid.empty()) return Potential::tabulated(grid);
      if (grid_path.empty()) throw ConfigError("tabulated potential needs a grid file", "grid");
      return Potential::tabulated(load_grid_csv(grid_path));
  }
  throw ConfigError("unknown potential kind", "kind");
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "md" || name == "markdown") return OutputFormat::Markdown;
  throw ConfigError("format must be csv or md, got '" + std::string(name) + "'", "format");
}

void RunConfig::validate() const {
  if (ells.empty()) throw ConfigError("at least one ell is required", "ell");
  for (int l : ells) {
    if (l < 0) throw ConfigError("ell must be nonnegative", "ell");
  }
  if (methods.empty()) throw ConfigError("at least one method is required", "methods");
  if (digits < 1 || digits > 17) throw ConfigError("digits must be in 1..17", "digits");
  quadrature.validate();
  for (Method m : methods) {
    if (m == Method::VariationalClosedForm && potential.kind != PotentialKind::SquareWell) {
      throw ConfigError("variational_closed_form applies to the square well only", "methods");
    }
  }
}

std::vector<Method> all_methods(PotentialKind kind) {
  std::vector<Method> out{Method::BargmannSchwinger, Method::SecondOrder, Method::ThirdOrder, Method::GGMT,
                          Method::CalogeroI,         Method::CalogeroII,  Method::Variational};
  if (kind == PotentialKind::SquareWell) out.push_back(Method::VariationalClosedForm);
  return out;
}

std::vector<Method> parse_methods(std::string_view list, PotentialKind kind) {
  std::vector<Method> out;
  for (const auto& name : split_list(list)) {
    if (name == "all") {
      for (Method m : all_methods(kind)) out.push_back(m);
    } else {
      out.push_back(parse_method(name));
    }
  }
  return out;
}

std::vector<int> parse_ells(std::string_view list) {
  std::vector<int> out;
  for (const auto& item : split_list(list)) {
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(parse_int(item, "ell"));
      continue;
    }
    const int lo = parse_int(trim(item.substr(0, dash)), "ell");
    const int hi = parse_int(trim(item.substr(dash + 1)), "ell");
    if (hi < lo) throw ConfigError("ell range '" + item + "' is empty", "ell");
    for (int l = lo; l <= hi; ++l) out.push_back(l);
  }
  return out;
}

RunConfig load_run_config(const std::string& path) {
  pt::ptree tree;
  try {
    pt::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("cannot read config: " + std::string(e.what()), "config");
  }

  RunConfig cfg;
  auto& pot = cfg.potential;
  const auto kind = lookup(tree, "potential", "kind");
  if (!kind) throw ConfigError("[potential] kind is required", "kind");
  pot.kind = parse_potential_kind(*kind);
  if (auto v = lookup(tree, "potential", "R")) pot.R = parse_double(*v, "R");
  if (auto v = lookup(tree, "potential", "alpha")) pot.alpha = parse_double(*v, "alpha");
  if (auto v = lookup(tree, "potential", "shell_width")) pot.width = parse_double(*v, "shell_width");
  if (auto v = lookup(tree, "potential", "grid")) {
    std::filesystem::path grid(*v);
    if (grid.is_relative()) grid = std::filesystem::path(path).parent_path() / grid;
    pot.grid_path = grid.string();
  }

  if (auto v = lookup(tree, "run", "ell")) cfg.ells = parse_ells(*v);
  cfg.methods = parse_methods(lookup(tree, "run", "methods").value_or("all"), pot.kind);
  if (auto v = lookup(tree, "run", "format")) cfg.format = parse_output_format(*v);
  if (auto v = lookup(tree, "run", "digits")) cfg.digits = parse_int(*v, "digits");

  auto& q = cfg.quadrature;
  if (auto v = lookup(tree, "quadrature", "rel_tol")) q.rel_tol = parse_double(*v, "rel_tol");
  if (auto v = lookup(tree, "quadrature", "abs_tol")) q.abs_tol = parse_double(*v, "abs_tol");
  if (auto v = lookup(tree, "quadrature", "max_subdivisions")) q.max_subdivisions = parse_int(*v, "max_subdivisions");
  if (auto v = lookup(tree, "quadrature", "max_radius")) q.max_radius = parse_double(*v, "max_radius");

  pot.build();
  cfg.validate();
  return cfg;
}

}  // namespace gcrit
