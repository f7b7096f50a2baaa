#include "sben/field_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace sben {

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(std::string_view token, const std::filesystem::path& file) {
  // libstdc++ 11 lacks floating from_chars for some targets; strtod is exact for %.17g output.
  std::string tmp(token);
  char* end = nullptr;
  const double value = std::strtod(tmp.c_str(), &end);
  if (end == tmp.c_str()) throw Error(file.string() + ": malformed number '" + tmp + "'");
  return value;
}

}  // namespace

template <std::size_t N>
void write_field_csv(const std::filesystem::path& file, const Field<N>& field) {
  std::ofstream out(file);
  if (!out) throw Error("cannot open " + file.string() + " for writing");
  out << "i,j";
  for (std::size_t c = 0; c < N; ++c) out << ",c" << c;
  out << '\n';
  const Grid2P& g = field.grid();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      out << i << ',' << j;
      for (std::size_t c = 0; c < N; ++c) out << ',' << format_double(field.at(c, i, j));
      out << '\n';
    }
  }
  if (!out) throw Error("write failed: " + file.string());
}

template <std::size_t N>
Field<N> read_field_csv(const std::filesystem::path& file, const Grid2P& grid) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file.string());
  std::string line;
  if (!std::getline(in, line)) throw Error(file.string() + ": empty file");
  std::string expected = "i,j";
  for (std::size_t c = 0; c < N; ++c) expected += ",c" + std::to_string(c);
  if (line != expected) throw Error(file.string() + ": unexpected header '" + line + "'");

  Field<N> field(grid);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> tokens;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      tokens.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (tokens.size() != N + 2) throw Error(file.string() + ": wrong column count");
    int i = 0;
    int j = 0;
    std::from_chars(tokens[0].data(), tokens[0].data() + tokens[0].size(), i);
    std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), j);
    if (i < 0 || i >= grid.nx || j < 0 || j >= grid.ny) {
      throw Error(file.string() + ": cell index outside the grid");
    }
    for (std::size_t c = 0; c < N; ++c) field.at(c, i, j) = parse_double(tokens[c + 2], file);
    ++rows;
  }
  if (rows != grid.cells()) {
    throw Error(file.string() + ": expected " + std::to_string(grid.cells()) + " rows, found " +
                std::to_string(rows));
  }
  return field;
}

template void write_field_csv(const std::filesystem::path&, const Field<1>&);
template void write_field_csv(const std::filesystem::path&, const Field<3>&);
template void write_field_csv(const std::filesystem::path&, const Field<6>&);
template Field<1> read_field_csv(const std::filesystem::path&, const Grid2P&);
template Field<3> read_field_csv(const std::filesystem::path&, const Grid2P&);
template Field<6> read_field_csv(const std::filesystem::path&, const Grid2P&);

void write_grid_sidecar(const std::filesystem::path& file, const Grid2P& grid) {
  nlohmann::ordered_json j;
  j["nx"] = grid.nx;
  j["ny"] = grid.ny;
  j["lx"] = grid.lx;
  j["ly"] = grid.ly;
  std::ofstream out(file);
  if (!out) throw Error("cannot open " + file.string() + " for writing");
  out << j.dump(2) << '\n';
}

Grid2P read_grid_sidecar(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file.string());
  try {
    const auto j = nlohmann::json::parse(in);
    return Grid2P(j.at("nx").get<int>(), j.at("ny").get<int>(), j.at("lx").get<double>(),
                  j.at("ly").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(file.string() + ": " + e.what());
  }
}

}  // namespace sben
