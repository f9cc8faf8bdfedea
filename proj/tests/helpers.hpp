#pragma once
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cuspcert/triangulation.hpp"

inline std::string read_data_file(const std::string& name) {
  std::ifstream in(std::string(DATA_DIR) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing data file: " + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline cuspcert::IdealTriangulation load_tri(const std::string& name) {
  return cuspcert::IdealTriangulation::parse(read_data_file(name));
}
